#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkm/chambers.hpp"
#include "gkm/gkm_pair.hpp"

namespace gkm {

// Edges directed from the smaller to the larger end, where p < q iff
// alpha_{p,e}(xi) > 0; sigma_p counts the edges at p with alpha_{p,e}(xi) < 0.
struct Orientation {
  VectorQ xi;
  std::vector<std::pair<std::size_t, std::size_t>> directed;  // per edge: (lower, upper)
  std::vector<std::size_t> sigma;
};

// Throws PreconditionError if some alpha_{p,e}(xi) vanishes.
Orientation orient(const GkmPair& pair, const VectorQ& xi);

struct CycleCheck {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // a directed cycle p_1 -> ... -> p_k -> p_1 when not acyclic
};

CycleCheck is_acyclic(const GkmPair& pair, const Orientation& o);

// Injective phi with (phi(p) - phi(q)) / alpha_{q,e}(xi) > 0 on every edge:
// minus the longest upward path length, with ties split by i/(r+1) of half
// the smallest gap between levels. Throws on a cyclic orientation.
std::vector<Rational> positively_oriented_function(const GkmPair& pair, const VectorQ& xi);

// The same base levels before the tie-breaking.
std::vector<Rational> longest_path_levels(const GkmPair& pair, const Orientation& o);

bool is_positively_oriented(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi);

// beta_k = number of vertices with sigma_p = k, k = 0..d.
std::vector<std::size_t> betti(const GkmPair& pair, const VectorQ& xi);

struct WallCheck {
  bool performed = false;
  bool ok = false;
  std::size_t wall_class = 0;  // index into arrangement_classes
  VectorQ xi_minus, xi_plus;
};

struct BettiInvariance {
  std::vector<Chamber> chambers;
  std::vector<std::vector<std::size_t>> betti_per_chamber;
  bool invariant = true;
  std::vector<std::size_t> betti;  // from the first chamber
  bool symmetric = true;           // beta_k == beta_{d-k}
  WallCheck wall;
};

BettiInvariance betti_invariance_check(const GkmPair& pair, int samples, std::uint64_t seed);

// Crossing the wall of one class near a generic wall point: each edge of the
// class swaps (sigma_p, sigma_q) = (r, r+1) into (r+1, r), nothing else moves.
WallCheck wall_crossing_check(const GkmPair& pair, const std::vector<Chamber>& chambers);

struct MorseRow {
  int k = 0;
  std::size_t lhs = 0;  // dim H^{2k}
  std::size_t rhs = 0;  // sum_r beta_r dim S^{k-r}
  bool ok = false;      // lhs <= rhs
};

struct MorseStep {
  std::size_t vertex = 0;  // the vertex crossed
  Rational level;          // phi(vertex)
  std::size_t sigma = 0;
  int k = 0;
  std::size_t difference = 0;  // dim H_c - dim H_c'
  std::size_t upper = 0;       // dim S^{k - sigma}
  std::size_t lower = 0;       // dim I^{k - sigma}
  bool ok = false;
};

struct MorseReport {
  std::vector<std::size_t> betti;
  std::vector<Rational> phi;
  std::vector<MorseRow> rows;
  std::vector<MorseStep> steps;
  bool ok = true;
};

MorseReport morse_inequalities(const GkmPair& pair, const VectorQ& xi, int max_k);

struct GammaHCheck {
  std::vector<VectorQ> h_basis;
  std::vector<std::size_t> component_beta0;
  bool ok = true;
};

struct LIndependenceRow {
  int k = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool asserted = false;  // k > d - n, l = n, hypotheses hold
  bool ok = true;         // equality when asserted; always true otherwise
};

struct LIndependenceReport {
  int l = 0;
  bool stars_l_independent = true;
  std::vector<GammaHCheck> subspaces;
  bool components_beta0_one = true;
  std::vector<LIndependenceRow> rows;
  bool ok = true;
};

// Hypotheses and dimension claims for l-independent stars: every star is
// l-independent, every component of Gamma_h has beta_0 = 1 for h the
// annihilator of fewer than l star forms, and with l = n,
// dim H^{2k} = sum beta_r dim S^{k-r} for d - n < k <= max_k.
LIndependenceReport l_independence_dimension_check(const GkmPair& pair, const VectorQ& xi, int l, int max_k);

}  // namespace gkm
