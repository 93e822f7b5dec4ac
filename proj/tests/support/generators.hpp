#pragma once

#include <cstddef>
#include <vector>

#include "flexcat/probvec.hpp"
#include "flexcat/rng.hpp"

namespace flexcat::testing {

SchmidtVec random_schmidt(Rng &rng, std::size_t d);

/// Random unsorted distribution.
ProbVec random_prob(Rng &rng, std::size_t d);

/// A vector majorized by `y`: a few random T-transforms (convex mixing of two
/// entries), re-sorted.
SchmidtVec mix_down(Rng &rng, const SchmidtVec &y, std::size_t transforms = 3);

/// Unsorted vector majorized by `p`, entries also randomly permuted.
ProbVec mix_down_unsorted(Rng &rng, const ProbVec &p, std::size_t transforms = 3);

/// Energies uniform on [0, 3).
std::vector<double> random_levels(Rng &rng, std::size_t d);

}  // namespace flexcat::testing
