#pragma once

#include <span>
#include <vector>

#include "gkm/localized_sum.hpp"

namespace gkm {

enum class ResidueMethod { series, formula };

// A basis x, y_1..y_{n-1} of g* adapted to xi: x(xi) = 1 and every y_k
// annihilates xi.
struct ResidueBasis {
  CovectorQ x;
  std::vector<CovectorQ> ys;
};

// x = e_j / xi_j for the first j with xi_j != 0, y_i = e_i - xi_i x (i != j).
ResidueBasis default_residue_basis(const VectorQ& xi);

// Res_xi f / (alpha_1 ... alpha_d). The value lies in S(g*_xi), the
// polynomials in forms vanishing on xi, and is returned in the ambient
// variables of g*; this embedding does not depend on any basis choice.
// Homogeneous f of degree k gives a result homogeneous of degree k - d + 1.
//
// series:  expand every 1/alpha_i as a geometric series in 1/x and read off
//          the x^-1 coefficient.
// formula: sum over the poles of (1/m_i) K_i f / prod_{j != i} alpha#_{j,i};
//          needs pairwise independent alphas.
Polynomial residue(const Polynomial& f, std::span<const LinearForm> alphas, const VectorQ& xi,
                   ResidueMethod method = ResidueMethod::series);

// Series method carried out in an explicit adapted basis.
Polynomial residue(const Polynomial& f, std::span<const LinearForm> alphas, const VectorQ& xi,
                   const ResidueBasis& basis);

// Res_x f(x) / ((x - z_1) ... (x - z_d)) = sum_i f(z_i) / prod_{j != i} (z_i - z_j),
// where x is variable x_var and the z_i are pairwise distinct polynomials
// free of x_var: either all constants or all homogeneous linear.
Polynomial residue_partial_fractions(const Polynomial& f, std::size_t x_var,
                                     std::span<const Polynomial> z);

// A localized sum is polynomial iff Res_xi(theta^k * sum) vanishes for
// k = 0..max_power, given theta(xi) = 1, theta off every denominator class
// and max_power at least the number of those classes.
bool is_polynomial_via_residues(const LocalizedSum& sum, const VectorQ& xi, const CovectorQ& theta,
                                int max_power);

// K: beta -> beta - (beta(xi)/alpha(xi)) alpha, extended to polynomials.
// Its image lies in S(g*_xi) and it realizes the quotient by (alpha).
Polynomial project_along(const Polynomial& f, const CovectorQ& alpha, const VectorQ& xi);
CovectorQ project_along(const CovectorQ& beta, const CovectorQ& alpha, const VectorQ& xi);

}  // namespace gkm
