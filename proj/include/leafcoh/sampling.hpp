#pragma once

#include <random>
#include <vector>

#include "leafcoh/coeff_seq.hpp"

namespace leafcoh {

/// Parameter grid covering every family:
/// U^{±n} for n in {1, 3/2, 2, 3}; V^{j,s} for j in {0, 1/2}, nu in {0.5, 1, 2};
/// V^sigma for sigma in {0.6, 0.75, 0.9}; both mock discrete classes; I.
std::vector<ReprClass> class_grid();

/// Random complex coefficients on up to `count` weights of 𝕄 lying within
/// `radius` steps of the weight nearest zero.
CoeffSeq random_coeffs(const ReprClass& cls, std::mt19937_64& rng, int count, int radius);

/// Weights of 𝕄 with |m| <= bound.
std::vector<Weight> weights_within(const ReprClass& cls, int bound);

}  // namespace leafcoh
