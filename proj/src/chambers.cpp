#include "gkm/chambers.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gkm/errors.hpp"

namespace gkm {

std::vector<LinearForm> arrangement_classes(const GkmPair& pair) {
  std::map<std::vector<Integer>, LinearForm> classes;
  for (const auto& e : pair.edges())
    for (const CovectorQ* c : {&e.forward, &e.backward}) {
      const LinearForm l(*c);
      classes.try_emplace(l.canonical(), l.canonical_form());
    }
  std::vector<LinearForm> out;
  for (auto& [k, l] : classes) out.push_back(l);
  return out;
}

namespace {

// Smallest integer strictly above x.
Rational floor_plus_one(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f + 1);
}

// Drops duplicate constraints up to positive scaling.
std::vector<CovectorQ> normalize(const std::vector<CovectorQ>& cs) {
  std::map<std::pair<std::vector<Integer>, int>, CovectorQ> seen;
  std::vector<CovectorQ> zeros;
  for (const auto& c : cs) {
    if (c.is_zero()) {
      zeros.push_back(c);
      continue;
    }
    const LinearForm l(c);
    seen.try_emplace({l.canonical(), sign(l.scale())}, c);
  }
  std::vector<CovectorQ> out = zeros;
  for (auto& [k, c] : seen) out.push_back(c);
  return out;
}

std::optional<std::vector<Rational>> solve(const std::vector<CovectorQ>& raw, std::size_t nv) {
  const std::vector<CovectorQ> cs = normalize(raw);
  if (nv == 0) {
    // every constraint reads 0 > 0
    if (cs.empty()) return std::vector<Rational>{};
    return std::nullopt;
  }
  const std::size_t v = nv - 1;
  std::vector<CovectorQ> pos, neg, proj;
  for (const auto& c : cs) {
    const int s = sign(c.coords[v]);
    CovectorQ rest(std::vector<Rational>(c.coords.begin(), c.coords.begin() + static_cast<std::ptrdiff_t>(v)));
    if (s == 0) {
      proj.push_back(std::move(rest));
      continue;
    }
    // x_v > -rest / a (a > 0) or x_v < -rest / a (a < 0): keep -rest / a
    CovectorQ bound = (-1 / c.coords[v]) * std::move(rest);
    (s > 0 ? pos : neg).push_back(std::move(bound));
  }
  for (const auto& lo : pos)
    for (const auto& hi : neg) proj.push_back(hi - lo);
  auto sub = solve(proj, v);
  if (!sub) return std::nullopt;
  auto eval = [&](const CovectorQ& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < v; ++i) s += b.coords[i] * (*sub)[i];
    return s;
  };
  std::optional<Rational> lo, hi;
  for (const auto& b : pos) {
    const Rational x = eval(b);
    if (!lo || x > *lo) lo = x;
  }
  for (const auto& b : neg) {
    const Rational x = eval(b);
    if (!hi || x < *hi) hi = x;
  }
  Rational x = 0;
  if (lo && hi) x = (*lo + *hi) / 2;
  else if (lo) x = floor_plus_one(*lo);
  else if (hi) x = -floor_plus_one(-*hi);
  sub->push_back(x);
  return sub;
}

}  // namespace

std::optional<VectorQ> strict_cone_point(const std::vector<CovectorQ>& constraints, std::size_t n) {
  for (const auto& c : constraints)
    if (c.dim() != n) throw std::invalid_argument("strict_cone_point: dimension mismatch");
  auto sol = solve(constraints, n);
  if (!sol) return std::nullopt;
  // scale to a primitive integer vector
  const Integer d = common_denominator(*sol);
  Integer g = 0;
  std::vector<Integer> ints;
  for (const auto& q : *sol) {
    const Rational s = q * d;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  VectorQ out;
  for (const auto& z : ints) out.coords.emplace_back(g == 0 ? z : Integer(z / g));
  return out;
}

std::vector<Chamber> enumerate_chambers(const std::vector<LinearForm>& classes, std::size_t n) {
  std::vector<Chamber> out;
  std::vector<CovectorQ> cons;
  std::vector<int> signs;
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == classes.size()) {
      auto w = strict_cone_point(cons, n);
      if (w) out.push_back({signs, *w});
      return;
    }
    for (int s : {1, -1}) {
      cons.push_back(Rational(s) * classes[t].covector());
      signs.push_back(s);
      if (strict_cone_point(cons, n)) self(self, t + 1);
      cons.pop_back();
      signs.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
  return out;
}

std::vector<Chamber> sample_chambers(const std::vector<LinearForm>& classes, std::size_t n, int samples,
                                     std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::map<std::vector<int>, VectorQ> found;
  for (int s = 0; s < samples; ++s) {
    VectorQ v;
    for (std::size_t i = 0; i < n; ++i) v.coords.emplace_back(dist(rng));
    std::vector<int> signs;
    bool wall = false;
    for (const auto& c : classes) {
      const int sg = sign(c(v));
      if (sg == 0) wall = true;
      signs.push_back(sg);
    }
    if (!wall) found.try_emplace(std::move(signs), std::move(v));
  }
  std::vector<Chamber> out;
  for (auto& [s, v] : found) out.push_back({s, v});
  return out;
}

std::vector<Chamber> find_chambers(const GkmPair& pair, int samples, std::uint64_t seed) {
  const auto classes = arrangement_classes(pair);
  if (classes.size() <= 12) return enumerate_chambers(classes, pair.dim());
  return sample_chambers(classes, pair.dim(), samples, seed);
}

VectorQ generic_vector(const GkmPair& pair) {
  const auto classes = arrangement_classes(pair);
  for (long t = 2;; ++t) {
    VectorQ v;
    Rational x = 1;
    for (std::size_t i = 0; i < pair.dim(); ++i) {
      v.coords.push_back(x);
      x *= t;
    }
    if (std::all_of(classes.begin(), classes.end(), [&](const LinearForm& c) { return c(v) != 0; })) return v;
  }
}

}  // namespace gkm
