#pragma once

#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

// Every l-element subset is linearly independent (true for l <= 0).
bool l_independent(const std::vector<CovectorQ>& forms, int l);

struct HilbertValue {
  std::size_t ideal_dim = 0;    // dim of the degree-m piece of the ideal
  std::size_t ambient_dim = 0;  // dim S^m
};

// Degree-m piece of the ideal generated by the products of all forms except
// l - 1 of them, computed as the rank of {generator * monomial}.
HilbertValue ideal_hilbert(const std::vector<CovectorQ>& forms, int l, int m);

}  // namespace gkm
