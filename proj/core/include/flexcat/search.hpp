#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "flexcat/cycle.hpp"
#include "flexcat/probvec.hpp"
#include "flexcat/rng.hpp"

namespace flexcat {

/// Two-axis grid of `steps` evenly spaced points per axis, endpoints included.
struct GridSpec {
    double lo1 = 0.0;
    double hi1 = 0.5;
    double lo2 = 0.0;
    double hi2 = 0.5;
    std::size_t steps1 = 201;
    std::size_t steps2 = 201;

    static GridSpec square(double lo, double hi, std::size_t steps) {
        return {lo, hi, lo, hi, steps, steps};
    }

    /// Throws BadRange unless lo < hi and steps >= 2 on both axes.
    void validate() const;
    double axis1(std::size_t a) const;
    double axis2(std::size_t b) const;
    bool is_square() const noexcept {
        return lo1 == lo2 && hi1 == hi2 && steps1 == steps2;
    }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

enum class LandscapeKind { Probability, Feasibility };

/// Row-major scan result: value(a, b) sits at a * steps2 + b, with a
/// indexing axis 1 (c1) and b axis 2 (c2).
struct LandscapeGrid {
    GridSpec spec;
    LandscapeKind kind = LandscapeKind::Probability;
    std::vector<double> values;

    double at(std::size_t a, std::size_t b) const { return values[a * spec.steps2 + b]; }
    /// First maximum in row-major order.
    std::pair<std::size_t, std::size_t> argmax() const;
    /// First maximum on the diagonal a == b (square grids only).
    std::size_t diagonal_argmax() const;
    std::size_t count_nonzero() const;
};

struct OptResult {
    std::vector<double> params;
    double value = 0.0;
    std::size_t iterations = 0;
};

/// Catalyst cycle of states (1-c_i, c_i); each c_i must lie in [0, 0.5].
Cycle qubit_cycle(std::span<const double> smaller_components);
/// Thermal catalyst cycle of states (c_i, 1-c_i), c_i = ground-level population.
ThermoCycle thermo_qubit_cycle(std::span<const double> ground_populations);

/// Geometric mean over the cycle of vidal_probability(x ⊗ c_i -> y ⊗ c_{i+1}).
double per_step_probability(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle);

/// Per-step probability of the 2-cycle [(1-c1, c1), (1-c2, c2)] over the grid.
/// Throws BadRange unless the grid lies inside [0, 0.5]^2.
LandscapeGrid scan_pflex_landscape(const SchmidtVec &x, const SchmidtVec &y, const GridSpec &spec);

// Derivative-free maximization by coordinate pattern search: poll
// +-step along each axis (and along the diagonals when dim <= 3), move on the
// first strict improvement, halve the step when no poll improves.
struct PatternSearchOptions {
    double initial_step = 0.0025;
    double min_step = 1e-6;
    std::size_t max_polls = 200000;
};

OptResult pattern_search_maximize(const std::function<double(std::span<const double>)> &objective,
                                  std::vector<double> start,
                                  const std::function<bool(std::span<const double>)> &admissible,
                                  const PatternSearchOptions &options = {});

/// Best constant two-dimensional catalyst: diagonal scan of c in [0, 0.5] at
/// `resolution`, then pattern-search refinement. params = {c}.
OptResult best_standard(const SchmidtVec &x, const SchmidtVec &y, double resolution = 0.0025);

/// Best 2-cycle of two-dimensional catalysts over `spec`, refined locally.
/// params = {c1, c2}, rotated so that c1 >= c2. Never below best_standard at
/// the grid pitch.
OptResult best_flexible(const SchmidtVec &x, const SchmidtVec &y, const GridSpec &spec = {});

/// 1.0 where [(c1, 1-c1), (c2, 1-c2)] is a valid flexible thermal catalyst.
/// Throws DimensionMismatch unless levels_c has two entries and levels_s
/// matches p and q.
LandscapeGrid scan_thermo_feasibility(const ProbVec &p, const ProbVec &q,
                                      std::span<const double> levels_s,
                                      std::span<const double> levels_c, double beta,
                                      const GridSpec &spec = GridSpec::square(0.0, 1.0, 401));

/// Feasibility of every constant catalyst (c, 1-c) for c on `steps` points of [0, 1].
std::vector<bool> scan_thermo_standard(const ProbVec &p, const ProbVec &q,
                                       std::span<const double> levels_s,
                                       std::span<const double> levels_c, double beta,
                                       std::size_t steps = 1001);

struct SampledPair {
    SchmidtVec x;
    SchmidtVec y;
    /// Raw Dirichlet pairs drawn, including the accepted one.
    std::size_t attempts;
};

inline constexpr std::size_t kMaxSamplingAttempts = 100000;

/// Flat-Dirichlet pair, sorted, redrawn until incomparable. Throws
/// WrongDimension for d < 3 and SamplingFailed after kMaxSamplingAttempts.
SampledPair sample_incomparable_pair(std::uint64_t seed, std::size_t d);
SampledPair sample_incomparable_pair(Rng &rng, std::size_t d);

/// Sorted catalyst states with entries that are multiples of 1/N, N = round(1/resolution).
struct CatalystLattice {
    std::size_t k = 0;
    std::size_t denominator = 0;
    std::vector<SchmidtVec> points;
};

CatalystLattice make_catalyst_lattice(std::size_t k, double resolution);

/// Directed graph on lattice points: edge a -> b iff x ⊗ c_a ≺ y ⊗ c_b.
class TransitionGraph {
   public:
    TransitionGraph(const SchmidtVec &x, const SchmidtVec &y, const CatalystLattice &lattice);

    std::size_t size() const noexcept { return n_; }
    bool edge(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }
    /// Some lattice point is a standard catalyst.
    bool has_self_loop() const;
    /// Closed walks of length n (one rotation each, starting at their minimal
    /// index), at most `limit` of them, in lexicographic order.
    std::vector<std::vector<std::size_t>> closed_walks(std::size_t n, std::size_t limit) const;

   private:
    std::size_t n_;
    std::vector<unsigned char> adj_;
};

/// Maximizes majorization_margin(x ⊗ c, y ⊗ c) over continuous sorted k-dim
/// catalysts, starting from `start`. The result is a standard catalyst iff
/// value >= -kMajorizationSlack. params are the full catalyst vector.
OptResult refine_standard_margin(const SchmidtVec &x, const SchmidtVec &y, const SchmidtVec &start,
                                 double initial_step);

}  // namespace flexcat
