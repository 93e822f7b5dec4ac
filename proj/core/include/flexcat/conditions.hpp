#pragma once

#include <cstddef>
#include <optional>

#include "flexcat/cycle.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/probvec.hpp"

namespace flexcat {

/// Slack toward acceptance for the strict inequalities below.
inline constexpr double kStrictSlack = 1e-10;

// Necessary conditions on deterministic flexible catalysis x -> y. Each one
// holds for every cycle that flexible_cycle_ok accepts, so they double as
// pre-filters and as test oracles.

/// Largest/smallest component recursion along the cycle:
///   x_1 C_{i,1} <= y_1 C_{i+1,1}   and   x_d C_{i,k} >= y_d C_{i+1,k}.
/// Throws ZeroTail if x_d or y_d vanishes.
bool boundary_ratios_ok(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle);

/// All states have the same number of non-zero entries.
bool support_size_uniform(const Cycle &cycle);

/// x_1 <= y_1 and x_d >= y_d. Throws ZeroTail if x_d or y_d vanishes.
bool endpoint_conditions_ok(const SchmidtVec &x, const SchmidtVec &y);

/// Under x_1 = y_1 and x_d = y_d > 0, checks that the first and the last
/// non-zero component are constant along the cycle (within kStrictSlack).
/// Throws PreconditionUnmet otherwise.
bool boundary_rigidity_holds(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle);

/// For a feasible two-dimensional cycle, the 1-based position of its
/// ≺-minimal state (largest second component, first on ties). Returns
/// nullopt if that state fails as a standard catalyst, which would
/// contradict the k = 2 degeneracy result.
/// Throws WrongDimension if k != 2 and NotFeasible if the cycle is rejected.
std::optional<std::size_t> k2_standard_witness(const Cycle &cycle, const SchmidtVec &x,
                                               const SchmidtVec &y);

/// True iff x, y are incomparable, in which case no flexible cycle of any
/// dimension converts one into the other. Throws WrongDimension unless d = 3.
bool d3_no_go(const SchmidtVec &x, const SchmidtVec &y);

/// C_{i,1} / C_{i,k} > max_{l in L} y_l / y_{l+1} for every state, with C_{i,k}
/// the smallest non-zero component. Throws EmptyViolationSet if L is empty.
bool ratio_bound_holds(const Cycle &cycle, const SchmidtVec &y, const ViolationReport &report);

/// max_v c_v / c_{v+1} < min(y_1 / y_m, y_{n+1} / y_d).
/// This bound binds standard catalysts but NOT flexible ones; it exists to
/// exhibit a flexible cycle that breaks it. Throws EmptyViolationSet.
bool adjacent_ratio_bound_ok(const SchmidtVec &c, const SchmidtVec &y,
                             const ViolationReport &report);

/// Right-hand side of adjacent_ratio_bound_ok.
double adjacent_ratio_threshold(const SchmidtVec &y, const ViolationReport &report);

/// max_v c_v / c_{v+1}; +infinity if a positive entry is followed by zero.
double max_adjacent_ratio(const SchmidtVec &c);

/// max_{l in L} y_l / y_{l+1}.
double largest_to_smallest_threshold(const SchmidtVec &y, const ViolationReport &report);

}  // namespace flexcat
