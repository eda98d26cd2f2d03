#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkm/gkm_pair.hpp"
#include "gkm/linear_form.hpp"

namespace gkm {

// Distinct parallel classes of all axial values, as canonical forms, sorted.
std::vector<LinearForm> arrangement_classes(const GkmPair& pair);

// A point v with c(v) > 0 for every constraint c, by Fourier-Motzkin
// elimination and exact back-substitution; nullopt if the open cone is empty.
std::optional<VectorQ> strict_cone_point(const std::vector<CovectorQ>& constraints, std::size_t n);

struct Chamber {
  std::vector<int> signs;  // sign of each class on the chamber
  VectorQ witness;         // an integer point inside it
};

// Every chamber of the central arrangement, by splitting one hyperplane at a
// time and discarding empty cones. Sorted by sign vector.
std::vector<Chamber> enumerate_chambers(const std::vector<LinearForm>& classes, std::size_t n);

// Chambers hit by random integer points in [-bound, bound]^n, deduplicated
// by sign vector and sorted.
std::vector<Chamber> sample_chambers(const std::vector<LinearForm>& classes, std::size_t n, int samples,
                                     std::uint64_t seed, int bound = 50);

// Exhaustive for at most 12 classes, sampled otherwise.
std::vector<Chamber> find_chambers(const GkmPair& pair, int samples, std::uint64_t seed);

// A vector off every hyperplane of the pair: the first of (1, t, t^2, ...),
// t = 2, 3, ..., that works.
VectorQ generic_vector(const GkmPair& pair);

}  // namespace gkm
