#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// An element of g*, in the standard dual coordinates.
struct CovectorQ {
  std::vector<Rational> coords;

  CovectorQ() = default;
  explicit CovectorQ(std::vector<Rational> c) : coords(std::move(c)) {}
  CovectorQ(std::initializer_list<Rational> c) : coords(c) {}
  static CovectorQ zero(std::size_t n) { return CovectorQ(std::vector<Rational>(n)); }
  static CovectorQ basis(std::size_t n, std::size_t i);

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;

  CovectorQ operator-() const;
  CovectorQ& operator+=(const CovectorQ& o);
  CovectorQ& operator-=(const CovectorQ& o);
  CovectorQ& operator*=(const Rational& s);
  friend CovectorQ operator+(CovectorQ a, const CovectorQ& b) { return a += b; }
  friend CovectorQ operator-(CovectorQ a, const CovectorQ& b) { return a -= b; }
  friend CovectorQ operator*(const Rational& s, CovectorQ a) { return a *= s; }
  bool operator==(const CovectorQ&) const = default;
};

// An element of g.
struct VectorQ {
  std::vector<Rational> coords;

  VectorQ() = default;
  explicit VectorQ(std::vector<Rational> c) : coords(std::move(c)) {}
  VectorQ(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;
  bool operator==(const VectorQ&) const = default;
};

Rational pair(const CovectorQ& a, const VectorQ& v);

// Two covectors are linearly dependent (either may be zero).
bool parallel(const CovectorQ& a, const CovectorQ& b);

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order, larger first: higher total degree wins, ties go
// to the larger exponent of the earliest differing variable.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// dim S^k(g*) for dim g = n: binomial(k + n - 1, n - 1), and 0 for k < 0.
std::size_t graded_dim(std::size_t n, int k);

// All exponent vectors of total degree k in n variables, grlex-descending.
std::vector<Exponents> monomials_of_degree(std::size_t n, int k);

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(Exponents e, const Rational& c);
  static Polynomial linear(const CovectorQ& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  // -1 for the zero polynomial.
  int total_degree() const;
  // Common total degree of all terms; -1 for zero; nullopt if inhomogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous_of(int k) const;
  int degree_in(std::size_t var) const;

  // Coefficient of x_var^j as a polynomial in the remaining variables
  // (x_var absent), for j = 0..degree_in(var).
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

  Polynomial pow(unsigned k) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Ring morphism x_i -> images[i]. All images must share a variable count,
  // which becomes the variable count of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Human-readable form, variables x1..xn, e.g. "x1^2 - 3/2*x1*x2 + 1".
std::string to_string(const Polynomial& p);

// Product of linear forms, as a polynomial in n variables (1 for an empty list).
Polynomial product_of(std::size_t n, std::span<const CovectorQ> forms);

// k-th elementary symmetric polynomial of the given linear forms.
Polynomial elementary_symmetric(std::size_t n, std::span<const CovectorQ> forms, int k);

}  // namespace gkm
