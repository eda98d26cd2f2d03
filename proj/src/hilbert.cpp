#include "gkm/hilbert.hpp"

#include <functional>
#include <map>

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

namespace {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      visit(s);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      s[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

bool l_independent(const std::vector<CovectorQ>& forms, int l) {
  if (l <= 0) return true;
  if (static_cast<std::size_t>(l) > forms.size()) return true;
  bool ok = true;
  for_each_subset(forms.size(), static_cast<std::size_t>(l), [&](const std::vector<std::size_t>& s) {
    if (!ok) return;
    Matrix m;
    for (std::size_t i : s) m.append_row(forms[i].coords);
    if (rank(m) != s.size()) ok = false;
  });
  return ok;
}

HilbertValue ideal_hilbert(const std::vector<CovectorQ>& forms, int l, int m) {
  if (forms.empty()) throw PreconditionError("ideal_hilbert: need at least one form");
  const std::size_t n = forms[0].dim();
  const std::size_t N = forms.size();
  if (l < 1 || static_cast<std::size_t>(l) > N) throw PreconditionError("ideal_hilbert: l must lie in 1..N");
  HilbertValue out;
  out.ambient_dim = graded_dim(n, m);
  const int gen_deg = static_cast<int>(N) - (l - 1);
  if (m < gen_deg) return out;

  std::vector<Polynomial> gens;
  for_each_subset(N, static_cast<std::size_t>(l - 1), [&](const std::vector<std::size_t>& omit) {
    std::vector<CovectorQ> keep;
    std::size_t o = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (o < omit.size() && omit[o] == i) {
        ++o;
        continue;
      }
      keep.push_back(forms[i]);
    }
    gens.push_back(product_of(n, keep));
  });

  const auto target = monomials_of_degree(n, m);
  std::map<Exponents, std::size_t, GrlexGreater> col;
  for (std::size_t i = 0; i < target.size(); ++i) col[target[i]] = i;
  Matrix mat;
  std::vector<Rational> row(target.size());
  for (const auto& g : gens)
    for (const auto& mon : monomials_of_degree(n, m - gen_deg)) {
      std::fill(row.begin(), row.end(), Rational(0));
      const Polynomial shifted = g * Polynomial::monomial(mon, 1);
      for (const auto& [e, c] : shifted.terms()) row[col.at(e)] = c;
      mat.append_row(row);
    }
  out.ideal_dim = rank(mat);
  return out;
}

}  // namespace gkm
