#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flexcat/cycle.hpp"
#include "flexcat/probvec.hpp"

namespace flexcat {

/// Additive slack on every prefix-sum comparison.
inline constexpr double kMajorizationSlack = 1e-12;

/// Prefix positions k in 1..d-1 where x's partial sum exceeds y's.
struct ViolationReport {
    std::vector<std::size_t> indices;

    bool empty() const noexcept { return indices.empty(); }
    /// min of the set, absent when empty.
    std::optional<std::size_t> m() const;
    /// max of the set, absent when empty.
    std::optional<std::size_t> n_max() const;
};

/// x ≺ y. Vectors of unequal dimension are compared after zero-padding.
bool is_majorized_by(const SchmidtVec &x, const SchmidtVec &y);

/// min over k < d of (Σ_{i≤k} y_i − Σ_{i≤k} x_i); x ≺ y iff this is ≥ −slack.
/// +infinity when d = 1 (no constraints).
double majorization_margin(const SchmidtVec &x, const SchmidtVec &y);

/// Optimal SLOCC conversion probability, min_l E_l(x) / E_l(y).
/// Tails that vanish on both sides, or only on y's side, impose nothing.
double vidal_probability(const SchmidtVec &x, const SchmidtVec &y);

bool standard_catalysis_ok(const SchmidtVec &x, const SchmidtVec &y, const SchmidtVec &c);

/// x ⊗ c_i ≺ y ⊗ c_{i+1} for every i, cyclically.
bool flexible_cycle_ok(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle);

ViolationReport violation_indices(const SchmidtVec &x, const SchmidtVec &y);

bool incomparable(const SchmidtVec &x, const SchmidtVec &y);

}  // namespace flexcat
