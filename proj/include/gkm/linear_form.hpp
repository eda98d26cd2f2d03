#pragma once

#include <optional>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

// A nonzero linear form together with its canonical representative: the
// primitive integer vector whose first nonzero coordinate is positive.
// covector() == scale() * canonical(). Two forms are parallel iff their
// canonical vectors are equal.
class LinearForm {
 public:
  explicit LinearForm(CovectorQ covector);

  const CovectorQ& covector() const { return covector_; }
  const std::vector<Integer>& canonical() const { return canonical_; }
  const Rational& scale() const { return scale_; }
  std::size_t dim() const { return covector_.dim(); }

  // Highest-index variable with a nonzero coefficient.
  std::size_t pivot() const { return pivot_; }

  CovectorQ canonical_covector() const;
  LinearForm canonical_form() const { return LinearForm(canonical_covector()); }
  Polynomial as_polynomial() const { return Polynomial::linear(covector_); }
  Rational operator()(const VectorQ& v) const { return pair(covector_, v); }

  bool parallel_to(const LinearForm& o) const { return canonical_ == o.canonical_; }

 private:
  CovectorQ covector_;
  std::vector<Integer> canonical_;
  Rational scale_;
  std::size_t pivot_ = 0;
};

// Lexicographic order on canonical vectors; used to sort parallel classes.
struct CanonicalLess {
  bool operator()(const LinearForm& a, const LinearForm& b) const { return a.canonical() < b.canonical(); }
};

// Normal form of f modulo the ideal (l): the pivot variable of l is replaced
// by its solution of l = 0. The pivot variable does not occur in the result.
Polynomial reduce_mod_line(const Polynomial& f, const LinearForm& l);

// Same normal form for a single covector (degree one), as a covector whose
// pivot coordinate is zero.
CovectorQ reduce_mod_line(const CovectorQ& c, const LinearForm& l);

// q with f == l * q, or nullopt when l does not divide f.
std::optional<Polynomial> divides_exactly(const LinearForm& l, const Polynomial& f);

}  // namespace gkm
