#include "gkm/linear_form.hpp"

#include <stdexcept>

#include "gkm/errors.hpp"

namespace gkm {

LinearForm::LinearForm(CovectorQ covector) : covector_(std::move(covector)) {
  if (covector_.is_zero()) throw PreconditionError("linear form must be nonzero");
  const Integer d = common_denominator(covector_.coords);
  canonical_.resize(covector_.dim());
  Integer g = 0;
  for (std::size_t i = 0; i < covector_.dim(); ++i) {
    const Rational scaled = covector_.coords[i] * d;
    canonical_[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), canonical_[i].get_mpz_t());
  }
  std::size_t first = 0;
  while (canonical_[first] == 0) ++first;
  if (canonical_[first] < 0) g = -g;
  for (auto& c : canonical_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  // covector = (g / d) * canonical
  scale_ = Rational(g, d);
  scale_.canonicalize();
  pivot_ = covector_.dim() - 1;
  while (canonical_[pivot_] == 0) --pivot_;
}

CovectorQ LinearForm::canonical_covector() const {
  CovectorQ c = CovectorQ::zero(canonical_.size());
  for (std::size_t i = 0; i < canonical_.size(); ++i) c.coords[i] = Rational(canonical_[i]);
  return c;
}

Polynomial reduce_mod_line(const Polynomial& f, const LinearForm& l) {
  const std::size_t n = l.dim();
  if (f.nvars() != n) throw std::invalid_argument("reduce_mod_line: dimension mismatch");
  const std::size_t v = l.pivot();
  const Rational& lead = l.covector().coords[v];
  // x_v := -(sum_{j != v} c_j x_j) / c_v
  CovectorQ sol = CovectorQ::zero(n);
  for (std::size_t j = 0; j < n; ++j)
    if (j != v) sol.coords[j] = -l.covector().coords[j] / lead;
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(j == v ? Polynomial::linear(sol) : Polynomial::variable(n, j));
  return f.substitute(images);
}

CovectorQ reduce_mod_line(const CovectorQ& c, const LinearForm& l) {
  const std::size_t v = l.pivot();
  const Rational t = c.coords.at(v) / l.covector().coords[v];
  return c - t * l.covector();
}

std::optional<Polynomial> divides_exactly(const LinearForm& l, const Polynomial& f) {
  const std::size_t n = l.dim();
  if (f.nvars() != n) throw std::invalid_argument("divides_exactly: dimension mismatch");
  if (f.is_zero()) return Polynomial(n);
  // f = sum_j f_j x_v^j, l = c x_v + r; synthetic division in x_v.
  const std::size_t v = l.pivot();
  const Rational c = l.covector().coords[v];
  CovectorQ rest_cov = l.covector();
  rest_cov.coords[v] = 0;
  const Polynomial r = Polynomial::linear(rest_cov);
  const Rational inv_c = 1 / c;

  std::vector<Polynomial> fj = f.coefficients_in(v);
  const int deg = static_cast<int>(fj.size()) - 1;
  if (deg == 0) return std::nullopt;  // nonzero and free of x_v: remainder is f itself
  std::vector<Polynomial> qj(deg, Polynomial(n));
  qj[deg - 1] = fj[deg] * inv_c;
  for (int j = deg - 1; j >= 1; --j) qj[j - 1] = (fj[j] - r * qj[j]) * inv_c;
  const Polynomial remainder = fj[0] - r * qj[0];
  if (!remainder.is_zero()) return std::nullopt;

  Polynomial q(n);
  for (int j = 0; j < deg; ++j) {
    for (const auto& [e, coef] : qj[j].terms()) {
      Exponents ee = e;
      ee[v] = j;
      q.add_term(ee, coef);
    }
  }
  return q;
}

}  // namespace gkm
