#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flexcat/probvec.hpp"

namespace flexcat {

// Random-instance search for deterministic transformations that a cycle of
// k-dimensional catalysts enables but no single k-dimensional catalyst does.
// The scope is what the options say: lattice catalysts at `resolution`,
// closed walks of length n, continuous refinement of the standard search only.

struct ConjectureOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t d = 4;
    double resolution = 0.005;
    std::size_t k = 2;
    std::size_t n = 2;
};

/// A pair where a flexible cycle was found but no standard catalyst.
struct ConjectureCandidate {
    std::size_t trial = 0;
    SchmidtVec x;
    SchmidtVec y;
    std::vector<SchmidtVec> cycle;
    /// Best constant catalyst after refinement and its (negative) margin.
    SchmidtVec best_standard;
    double best_standard_margin = 0.0;
};

struct ConjectureReport {
    ConjectureOptions options;
    std::size_t lattice_size = 0;
    std::size_t sampling_attempts = 0;
    std::size_t flexible_feasible = 0;
    std::size_t standard_on_lattice = 0;
    std::size_t standard_after_refinement = 0;
    std::vector<ConjectureCandidate> candidates;
};

/// Trial t draws its pair from Rng::substream(seed, t), so the report does not
/// depend on the number of worker threads.
ConjectureReport conjecture_search(const ConjectureOptions &options);

}  // namespace flexcat
