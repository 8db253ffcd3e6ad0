#pragma once

#include "energeia/geometry.hpp"
#include "energeia/rational.hpp"

#include <utility>
#include <vector>

namespace energeia {

using RatMatrix = std::vector<std::vector<Rat>>; // row-major, possibly rectangular

struct HodgeReport {
    // boundaries[k] maps k-chains to (k-1)-chains under the alternating-sign
    // convention d[v0..vk] = sum_i (-1)^i [v0..vi-hat..vk] on sorted vertices;
    // boundaries[0] is the empty map from 0-chains.
    std::vector<RatMatrix> boundaries;
    std::vector<RatMatrix> laplacians; // H_k = d_k^T d_k + d_{k+1} d_{k+1}^T
    std::vector<long> betti;           // b_k = dim ker H_k over the rationals
    std::vector<long> poincare;        // Poincare polynomial coefficients (= betti)
    long chi_top = 0;                  // alternating simplex count
};

HodgeReport hodge_betti(const Geometry& g);

// (str(e^{-H t}) summed over blocks with parity signs, chi_top).
std::pair<double, long> mckean_singer_check(const Geometry& g, double t);

} // namespace energeia
