#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "flexcat/probvec.hpp"

namespace flexcat {

/// Seedable mt19937_64 stream. Every conversion to floating point is done here
/// rather than through <random> distributions, so sequences are identical
/// across standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream for work item `index` of a run seeded with `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Unit-rate exponential.
    double exponential();
    /// Uniform integer in [0, n).
    std::size_t below(std::size_t n);

   private:
    explicit Rng(std::seed_seq &seq) : engine_(seq) {}

    std::mt19937_64 engine_;
};

/// Flat Dirichlet sample: normalized unit-rate exponentials.
ProbVec sample_dirichlet(Rng &rng, std::size_t d);

}  // namespace flexcat
