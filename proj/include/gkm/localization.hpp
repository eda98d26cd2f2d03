#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/gkm_pair.hpp"
#include "gkm/localized_sum.hpp"
#include "gkm/residue.hpp"

namespace gkm {

// sum_p f(p) / prod_e alpha_{p,e}, unsimplified.
LocalizedSum pushforward_sum(const GkmPair& pair, const CohClass& f);

// The pushforward as a polynomial, homogeneous of degree k - d. Throws
// NonPolynomialResult with the residual fraction if the sum does not reduce.
Polynomial integrate(const GkmPair& pair, const CohClass& f);

struct ResidueAgreement {
  bool agree = false;
  VectorQ xi;
  CovectorQ theta;
};

// Polynomiality of the pushforward decided by residues alone: every
// Res_xi(theta^k * sum) vanishes, with xi generic and theta(xi) = 1.
// Not applicable when n = 1 (theta must avoid the denominator classes).
std::optional<ResidueAgreement> polynomiality_by_residues(const GkmPair& pair, const CohClass& f);

// For each edge of each denominator class: f(p) = f(q) and the matched star
// forms agree, both modulo the class.
bool divisibility_mechanism_check(const GkmPair& pair, const CohClass& f);

struct LevelCut {
  VectorQ xi;
  std::vector<Rational> phi;
  Rational c;
};

// xi off every wall, phi injective and positively oriented, c not a value of phi.
void check_level_cut(const GkmPair& pair, const LevelCut& cut);

// Edges with one end above c and the other below, in index order.
std::vector<std::size_t> cross_section(const GkmPair& pair, const LevelCut& cut);

// Image of f in S(g*_xi) on every cross-section edge; the images from the
// two ends must agree.
std::map<std::size_t, Polynomial> kirwan_map(const GkmPair& pair, const LevelCut& cut, const CohClass& f);

struct JkResult {
  Polynomial value;                               // sum over the cross-section
  Polynomial residue_side;                        // sum of residues below c
  bool agree = false;
  std::map<std::size_t, Polynomial> per_vertex;   // residue at each vertex below c
};

JkResult jk_pushforward(const GkmPair& pair, const LevelCut& cut, const CohClass& f);

struct WallStep {
  std::size_t vertex = 0;
  Polynomial difference;  // jk(upper) - jk(lower)
  Polynomial residue;     // Res_xi f(p) / prod alpha_{p,e}
  bool agree = false;
};

// Exactly one vertex must lie between the two levels.
WallStep wall_crossing_step(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi,
                            const Rational& c_upper, const Rational& c_lower, const CohClass& f);

struct LevelSweep {
  std::vector<Rational> levels;  // c_0 > c_1 > ... > c_N, one vertex between consecutive levels
  std::vector<JkResult> cuts;
  std::vector<WallStep> steps;
  Polynomial total;              // sum of all residues = jk at the top level
  bool ok = false;               // every cut and step agrees and total == 0
};

LevelSweep level_sweep(const GkmPair& pair, const VectorQ& xi, const std::vector<Rational>& phi, const CohClass& f);

}  // namespace gkm
