#pragma once

#include <vector>

#include "flexcat/probvec.hpp"
#include "flexcat/thermo.hpp"

// Reference implementations that reach the same answers by a different route
// than the library. Slow and simple on purpose.

namespace flexcat::testing {

/// x ≺ y iff sum_i (x_i - t)_+ <= sum_i (y_i - t)_+ for every threshold t.
/// The difference is piecewise linear in t with kinks at the entries, so
/// checking those thresholds suffices.
bool oracle_majorized(const std::vector<double> &x, const std::vector<double> &y);

/// p ≻_γ q iff sum_i (p_i - t γ_i)_+ >= sum_i (q_i - t γ_i)_+ for every t >= 0.
bool oracle_thermo_majorizes(const ProbVec &p, const ProbVec &q, const GibbsVec &gamma);

/// All pairwise products sorted non-increasingly, computed by brute force.
std::vector<double> oracle_sorted_products(const std::vector<double> &a, const std::vector<double> &b);

}  // namespace flexcat::testing
