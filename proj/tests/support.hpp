// Shared fixtures and random generators for the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"
#include "gkm/io.hpp"
#include "gkm/linear_form.hpp"
#include "gkm/polynomial.hpp"

namespace gkm::testing {

inline Polynomial P(const std::string& text, std::size_t n) { return io::parse_polynomial(text, n); }

inline CovectorQ C(std::initializer_list<Rational> c) { return CovectorQ(c); }

inline std::vector<LinearForm> forms(std::initializer_list<CovectorQ> cs) {
  std::vector<LinearForm> out;
  for (const auto& c : cs) out.emplace_back(c);
  return out;
}

// K_2 with axial value alpha on the edge 1 -> 2.
inline GkmPair k2(const CovectorQ& alpha) { return complete_graph({CovectorQ::zero(alpha.dim()), -alpha}); }

inline GkmPair cp2() { return complete_graph({C({0, 0}), C({1, 0}), C({0, 1})}); }

inline GkmPair cycle4() { return cycle_2valent(4, C({1, 0}), C({0, 1})); }

inline GkmPair gamma4_n2() {
  return complete_graph({C({0, 0}), C({1, 0}), C({0, 1}), C({Rational(3, 2), Rational(5, 3)})});
}

inline GkmPair gamma4_n3() {
  return complete_graph({C({0, 0, 0}), C({1, 0, 0}), C({0, 1, 0}), C({Rational(1, 2), Rational(1, 3), 1})});
}

inline GkmPair gamma5_n3() {
  return complete_graph({C({0, 0, 0}), C({1, 0, 0}), C({0, 1, 0}), C({Rational(1, 2), Rational(1, 3), 1}),
                         C({Rational(2, 3), -1, Rational(1, 2)})});
}

// Plain Gauss-Jordan over Q, kept deliberately naive as an oracle.
inline std::vector<std::vector<Rational>> naive_kernel(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(v);
  }
  return basis;
}

// Brute-force search for a vertex bijection carrying edges to edges with equal
// oriented axial values. Only meant for graphs with a handful of vertices.
inline bool isomorphic(const GkmPair& a, const GkmPair& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> perm(a.num_vertices());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      const auto f = b.edge_between(perm[e.tail], perm[e.head]);
      if (!f || b.axial(perm[e.tail], *f) != e.forward || b.axial(perm[e.head], *f) != e.backward) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 5, long max_den = 4) {
    Rational q(integer(-bound, bound), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  CovectorQ covector(std::size_t n, long bound = 5) {
    CovectorQ c = CovectorQ::zero(n);
    while (c.is_zero())
      for (auto& x : c.coords) x = integer(-bound, bound);
    return c;
  }

  VectorQ vector(std::size_t n, long bound = 9) {
    VectorQ v;
    for (std::size_t i = 0; i < n; ++i) v.coords.push_back(rational(bound, 3));
    return v;
  }

  // Homogeneous of degree k with small rational coefficients; roughly half the terms kept.
  Polynomial homogeneous(std::size_t n, int k) {
    Polynomial p(n);
    for (const auto& e : monomials_of_degree(n, k))
      if (integer(0, 1) == 1) p.add_term(e, rational());
    return p;
  }

  // Sum of homogeneous pieces of degrees 0..max_degree.
  Polynomial polynomial(std::size_t n, int max_degree) {
    Polynomial p(n);
    for (int k = 0; k <= max_degree; ++k) p += homogeneous(n, k);
    return p;
  }

  // Random integer combination of a basis of H^{2k}.
  CohClass cohomology_class(const CohBasis& b, std::size_t nvars, std::size_t nverts) {
    CohClass f{b.degree, std::vector<Polynomial>(nverts, Polynomial(nvars))};
    for (const auto& g : b.basis) f = add(f, scale(Polynomial::constant(nvars, integer(-5, 5)), g));
    f.degree = b.degree;
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gkm::testing
