#pragma once

#include <vector>

#include "gkm/gkm_pair.hpp"
#include "gkm/subobjects.hpp"
#include "gkm/validation.hpp"

namespace gkm {

// Vertices "1".."N", edges (i, j) for i < j with alpha(i -> j) = alpha_i - alpha_j
// and the connection (i,k) -> (j,k) along (i,j).
GkmPair complete_graph(const std::vector<CovectorQ>& alphas);

struct ProductResult {
  GkmPair pair;
  ValidationReport report;  // axial axioms of the product; 1.17 can fail
};

// Vertices "p,q" in first-factor-major order. Edges: every edge of a at each
// vertex of b, then every edge of b at each vertex of a. The product
// connection is attached when both factors have (or admit) one.
ProductResult product(const GkmPair& a, const GkmPair& b);

struct BlowUp {
  GkmPair pair;
  std::vector<std::size_t> blow_down;  // vertex of the blow-up -> vertex of the base
  Subgraph singular_locus;
};

// Blow-up at p0. The base vertices other than p0 keep their order; the new
// vertices "<p0>#1".."<p0>#d" follow, one per edge at p0 in index order. Base
// edges keep their indices (the i-th edge at p0 now ends at <p0>#i) and the
// singular-locus edges (p_i, p_j), i < j, are appended.
BlowUp blow_up(const GkmPair& pair, std::size_t p0);

// N-cycle p1..pN with alpha(p_i -> p_{i+1}) running a1, a2, -a1, -a2, ...
// N must be a positive multiple of 4.
GkmPair cycle_2valent(std::size_t N, const CovectorQ& a1, const CovectorQ& a2);

// alpha_{i+1} ^ alpha_i == alpha_i ^ alpha_{i-1} around a 2-valent cycle,
// compared as 2x2 minors. Takes the axial values along the cycle.
bool wedge_condition(const std::vector<CovectorQ>& cycle_alphas);

}  // namespace gkm
