#include "gkm/localized_sum.hpp"

#include <map>
#include <stdexcept>

namespace gkm {

namespace {

using ClassKey = std::vector<Integer>;

}  // namespace

void LocalizedSum::add(Polynomial numerator, std::vector<LinearForm> denominator) {
  if (numerator.nvars() != nvars_) throw std::invalid_argument("LocalizedSum::add: dimension mismatch");
  for (const auto& l : denominator)
    if (l.dim() != nvars_) throw std::invalid_argument("LocalizedSum::add: dimension mismatch");
  terms_.push_back({std::move(numerator), std::move(denominator)});
}

Fraction simplify(const LocalizedSum& sum) {
  const std::size_t n = sum.nvars();
  // lcd multiplicity per parallel class
  std::map<ClassKey, int> lcd;
  std::map<ClassKey, Polynomial> class_poly;
  std::vector<std::map<ClassKey, int>> term_mult(sum.terms().size());
  std::vector<Rational> term_scale(sum.terms().size(), Rational(1));
  for (std::size_t t = 0; t < sum.terms().size(); ++t) {
    for (const auto& l : sum.terms()[t].denominator) {
      ++term_mult[t][l.canonical()];
      term_scale[t] *= l.scale();
      class_poly.try_emplace(l.canonical(), Polynomial::linear(l.canonical_covector()));
    }
    for (const auto& [key, m] : term_mult[t]) lcd[key] = std::max(lcd[key], m);
  }

  Polynomial numerator(n);
  for (std::size_t t = 0; t < sum.terms().size(); ++t) {
    const auto& term = sum.terms()[t];
    if (term.numerator.is_zero()) continue;
    Polynomial contrib = term.numerator * (1 / term_scale[t]);
    for (const auto& [key, m] : lcd) {
      const auto it = term_mult[t].find(key);
      const int missing = m - (it == term_mult[t].end() ? 0 : it->second);
      if (missing > 0) contrib *= class_poly.at(key).pow(static_cast<unsigned>(missing));
    }
    numerator += contrib;
  }

  Fraction out{Polynomial(n), {}};
  if (numerator.is_zero()) return out;
  for (auto& [key, m] : lcd) {
    std::vector<Rational> coords(key.begin(), key.end());
    const LinearForm form{CovectorQ(std::move(coords))};
    while (m > 0) {
      auto q = divides_exactly(form, numerator);
      if (!q) break;
      numerator = std::move(*q);
      --m;
    }
    for (int i = 0; i < m; ++i) out.denominator.push_back(form);
  }
  out.numerator = std::move(numerator);
  return out;
}

Rational evaluate(const Fraction& f, std::span<const Rational> point) {
  Rational den = 1;
  for (const auto& l : f.denominator) {
    Rational v = 0;
    for (std::size_t i = 0; i < point.size(); ++i) v += l.covector().coords[i] * point[i];
    if (v == 0) throw PreconditionError("evaluate: point lies on a denominator hyperplane");
    den *= v;
  }
  return f.numerator.evaluate(point) / den;
}

Rational evaluate(const LocalizedSum& s, std::span<const Rational> point) {
  Rational total = 0;
  for (const auto& t : s.terms()) total += evaluate(t, point);
  return total;
}

std::vector<LinearForm> denominator_classes(const LocalizedSum& s) {
  std::map<ClassKey, LinearForm> classes;
  for (const auto& t : s.terms())
    for (const auto& l : t.denominator) classes.try_emplace(l.canonical(), l.canonical_form());
  std::vector<LinearForm> out;
  for (auto& [k, l] : classes) out.push_back(l);
  return out;
}

}  // namespace gkm
