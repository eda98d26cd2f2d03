#pragma once

#include <span>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/linear_form.hpp"

namespace gkm {

// numerator / (product of the denominator forms)
struct Fraction {
  Polynomial numerator;
  std::vector<LinearForm> denominator;

  bool is_polynomial() const { return denominator.empty(); }
};

// Formal sum of fractions with linear-form denominators.
class LocalizedSum {
 public:
  explicit LocalizedSum(std::size_t nvars) : nvars_(nvars) {}

  void add(Polynomial numerator, std::vector<LinearForm> denominator);
  void add(Fraction f) { add(std::move(f.numerator), std::move(f.denominator)); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Fraction>& terms() const { return terms_; }

 private:
  std::size_t nvars_;
  std::vector<Fraction> terms_;
};

// Brings the sum over the least common denominator of its parallel classes
// and cancels every class that divides the numerator. The denominator of the
// result holds canonical forms (scale 1), one entry per multiplicity, sorted
// by canonical vector; it is empty exactly when the sum is a polynomial.
Fraction simplify(const LocalizedSum& sum);

// Value at a point off every denominator zero set.
Rational evaluate(const Fraction& f, std::span<const Rational> point);
Rational evaluate(const LocalizedSum& s, std::span<const Rational> point);

// Distinct parallel classes among all denominator forms, as canonical forms,
// sorted.
std::vector<LinearForm> denominator_classes(const LocalizedSum& s);

// Thrown when a sum that must be a polynomial is not.
class NonPolynomialResult : public IntegrityError {
 public:
  NonPolynomialResult(const std::string& what, Fraction residual)
      : IntegrityError(what), residual_(std::move(residual)) {}
  const Fraction& residual() const { return residual_; }

 private:
  Fraction residual_;
};

}  // namespace gkm
