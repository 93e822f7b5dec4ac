#include "flexcat/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flexcat/error.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/parallel.hpp"
#include "flexcat/thermo.hpp"

namespace flexcat {

namespace {

double grid_point(double lo, double hi, std::size_t steps, std::size_t i) {
    if (i + 1 == steps) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void check_range(double v, double lo, double hi, const char *what) {
    if (!(v >= lo && v <= hi)) {
        throw Error(ErrorKind::BadRange, std::string(what) + " = " + std::to_string(v) +
                                             " outside [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "]");
    }
}

// Directions polled by the pattern search.
std::vector<std::vector<double>> poll_directions(std::size_t dim) {
    std::vector<std::vector<double>> dirs;
    for (std::size_t i = 0; i < dim; ++i) {
        for (double s : {1.0, -1.0}) {
            std::vector<double> d(dim, 0.0);
            d[i] = s;
            dirs.push_back(std::move(d));
        }
    }
    if (dim >= 2 && dim <= 3) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                for (double si : {1.0, -1.0}) {
                    for (double sj : {1.0, -1.0}) {
                        std::vector<double> d(dim, 0.0);
                        d[i] = si;
                        d[j] = sj;
                        dirs.push_back(std::move(d));
                    }
                }
            }
        }
    }
    return dirs;
}

// Valid iff the entries form a sorted probability vector (up to rounding).
bool sorted_simplex_point(std::span<const double> c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0.0) return false;
        if (i > 0 && c[i] > c[i - 1]) return false;
        sum += c[i];
    }
    return std::abs(sum - 1.0) <= kInputSumTolerance;
}

SchmidtVec trusted_schmidt(std::vector<double> v) {
    return SchmidtVec(detail::TrustedTag{}, ProbVec(detail::TrustedTag{}, std::move(v)));
}

}  // namespace

void GridSpec::validate() const {
    if (!(lo1 < hi1) || !(lo2 < hi2)) throw Error(ErrorKind::BadRange, "grid needs lo < hi");
    if (steps1 < 2 || steps2 < 2) throw Error(ErrorKind::BadRange, "grid needs >= 2 steps");
}

double GridSpec::axis1(std::size_t a) const { return grid_point(lo1, hi1, steps1, a); }
double GridSpec::axis2(std::size_t b) const { return grid_point(lo2, hi2, steps2, b); }

std::pair<std::size_t, std::size_t> LandscapeGrid::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return {best / spec.steps2, best % spec.steps2};
}

std::size_t LandscapeGrid::diagonal_argmax() const {
    if (!spec.is_square()) throw Error(ErrorKind::BadRange, "diagonal of a non-square grid");
    std::size_t best = 0;
    for (std::size_t a = 1; a < spec.steps1; ++a) {
        if (at(a, a) > at(best, best)) best = a;
    }
    return best;
}

std::size_t LandscapeGrid::count_nonzero() const {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [](double v) { return v != 0.0; }));
}

Cycle qubit_cycle(std::span<const double> smaller_components) {
    std::vector<SchmidtVec> states;
    states.reserve(smaller_components.size());
    for (double c : smaller_components) {
        check_range(c, 0.0, 0.5, "catalyst parameter");
        states.push_back(trusted_schmidt({1.0 - c, c}));
    }
    return Cycle(std::move(states));
}

ThermoCycle thermo_qubit_cycle(std::span<const double> ground_populations) {
    std::vector<ProbVec> states;
    states.reserve(ground_populations.size());
    for (double c : ground_populations) {
        check_range(c, 0.0, 1.0, "ground-level population");
        states.emplace_back(detail::TrustedTag{}, std::vector<double>{c, 1.0 - c});
    }
    return ThermoCycle(std::move(states));
}

double per_step_probability(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle) {
    double product = 1.0;
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        const double p = vidal_probability(tensor_sorted(x, cycle[i]), tensor_sorted(y, cycle[i + 1]));
        if (p == 0.0) return 0.0;
        product *= p;
    }
    if (cycle.length() == 1) return product;
    if (cycle.length() == 2) return std::sqrt(product);
    return std::pow(product, 1.0 / static_cast<double>(cycle.length()));
}

LandscapeGrid scan_pflex_landscape(const SchmidtVec &x, const SchmidtVec &y, const GridSpec &spec) {
    spec.validate();
    check_range(spec.lo1, 0.0, 0.5, "lo1");
    check_range(spec.hi1, 0.0, 0.5, "hi1");
    check_range(spec.lo2, 0.0, 0.5, "lo2");
    check_range(spec.hi2, 0.0, 0.5, "hi2");

    LandscapeGrid grid{spec, LandscapeKind::Probability,
                       std::vector<double>(spec.steps1 * spec.steps2, 0.0)};
    // Per-axis tensor products are reused across the whole row/column.
    auto sorted_products = [](const SchmidtVec &v, double lo, double hi, std::size_t steps) {
        std::vector<SchmidtVec> out;
        out.reserve(steps);
        for (std::size_t i = 0; i < steps; ++i) {
            const double c = grid_point(lo, hi, steps, i);
            out.push_back(tensor_sorted(v, trusted_schmidt({1.0 - c, c})));
        }
        return out;
    };
    const auto x1 = sorted_products(x, spec.lo1, spec.hi1, spec.steps1);
    const auto y1 = sorted_products(y, spec.lo1, spec.hi1, spec.steps1);
    const auto x2 = sorted_products(x, spec.lo2, spec.hi2, spec.steps2);
    const auto y2 = sorted_products(y, spec.lo2, spec.hi2, spec.steps2);

    parallel_for(spec.steps1, [&](std::size_t a) {
        for (std::size_t b = 0; b < spec.steps2; ++b) {
            const double forward = vidal_probability(x1[a], y2[b]);
            const double back = vidal_probability(x2[b], y1[a]);
            grid.values[a * spec.steps2 + b] =
                (forward == 0.0 || back == 0.0) ? 0.0 : std::sqrt(forward * back);
        }
    });
    return grid;
}

OptResult pattern_search_maximize(const std::function<double(std::span<const double>)> &objective,
                                  std::vector<double> start,
                                  const std::function<bool(std::span<const double>)> &admissible,
                                  const PatternSearchOptions &options) {
    if (!admissible(start)) throw Error(ErrorKind::BadRange, "pattern search start not admissible");
    const auto dirs = poll_directions(start.size());
    OptResult result{start, objective(start), 0};
    double step = options.initial_step;
    std::vector<double> candidate(start.size());
    while (step >= options.min_step && result.iterations < options.max_polls) {
        ++result.iterations;
        bool moved = false;
        for (const auto &dir : dirs) {
            for (std::size_t i = 0; i < candidate.size(); ++i) {
                candidate[i] = result.params[i] + step * dir[i];
            }
            if (!admissible(candidate)) continue;
            const double v = objective(candidate);
            if (v > result.value) {
                result.params = candidate;
                result.value = v;
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }
    return result;
}

OptResult best_standard(const SchmidtVec &x, const SchmidtVec &y, double resolution) {
    if (!(resolution > 0.0 && resolution <= 0.5)) {
        throw Error(ErrorKind::BadRange, "resolution must lie in (0, 0.5]");
    }
    const auto steps = static_cast<std::size_t>(std::llround(0.5 / resolution)) + 1;
    auto value_at = [&](double c) {
        const SchmidtVec cat = trusted_schmidt({1.0 - c, c});
        return vidal_probability(tensor_sorted(x, cat), tensor_sorted(y, cat));
    };

    std::vector<double> diag(steps);
    parallel_for(steps, [&](std::size_t i) { diag[i] = value_at(grid_point(0.0, 0.5, steps, i)); });
    const auto best = static_cast<std::size_t>(
        std::distance(diag.begin(), std::max_element(diag.begin(), diag.end())));

    PatternSearchOptions opts;
    opts.initial_step = 0.5 / static_cast<double>(steps - 1);
    OptResult r = pattern_search_maximize(
        [&](std::span<const double> p) { return value_at(p[0]); },
        {grid_point(0.0, 0.5, steps, best)},
        [](std::span<const double> p) { return p[0] >= 0.0 && p[0] <= 0.5; }, opts);
    r.iterations += steps;
    return r;
}

OptResult best_flexible(const SchmidtVec &x, const SchmidtVec &y, const GridSpec &spec) {
    const LandscapeGrid grid = scan_pflex_landscape(x, y, spec);
    const auto [a, b] = grid.argmax();

    auto objective = [&](std::span<const double> p) {
        const double cs[2] = {p[0], p[1]};
        return per_step_probability(x, y, qubit_cycle(cs));
    };
    auto inside = [&](std::span<const double> p) {
        return p[0] >= spec.lo1 && p[0] <= spec.hi1 && p[1] >= spec.lo2 && p[1] <= spec.hi2;
    };

    std::vector<double> start{spec.axis1(a), spec.axis2(b)};
    double start_value = grid.at(a, b);
    // The refined constant catalyst is also a 2-cycle; start there if it is better.
    const double pitch =
        std::min((spec.hi1 - spec.lo1) / static_cast<double>(spec.steps1 - 1),
                 (spec.hi2 - spec.lo2) / static_cast<double>(spec.steps2 - 1));
    const OptResult standard = best_standard(x, y, std::min(pitch, 0.5));
    std::vector<double> diag_start{standard.params[0], standard.params[0]};
    if (standard.value > start_value && inside(diag_start)) {
        start = diag_start;
        start_value = standard.value;
    }

    PatternSearchOptions opts;
    opts.initial_step = pitch;
    OptResult r = pattern_search_maximize(objective, start, inside, opts);
    r.iterations += grid.values.size();
    // A 2-cycle and its rotation describe the same process.
    if (r.params[0] < r.params[1]) std::swap(r.params[0], r.params[1]);
    return r;
}

namespace {

struct ThermoSetup {
    GibbsVec gamma_s;
    GibbsVec gamma_c;
};

ThermoSetup thermo_setup(const ProbVec &p, const ProbVec &q, std::span<const double> levels_s,
                         std::span<const double> levels_c, double beta) {
    if (levels_s.size() != p.dim() || levels_s.size() != q.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "system levels must match the state dimension");
    }
    if (levels_c.size() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "qubit catalyst scan needs two catalyst levels");
    }
    return {gibbs_vector(levels_s, beta), gibbs_vector(levels_c, beta)};
}

}  // namespace

LandscapeGrid scan_thermo_feasibility(const ProbVec &p, const ProbVec &q,
                                      std::span<const double> levels_s,
                                      std::span<const double> levels_c, double beta,
                                      const GridSpec &spec) {
    spec.validate();
    check_range(spec.lo1, 0.0, 1.0, "lo1");
    check_range(spec.hi1, 0.0, 1.0, "hi1");
    check_range(spec.lo2, 0.0, 1.0, "lo2");
    check_range(spec.hi2, 0.0, 1.0, "hi2");
    const ThermoSetup setup = thermo_setup(p, q, levels_s, levels_c, beta);

    LandscapeGrid grid{spec, LandscapeKind::Feasibility,
                       std::vector<double>(spec.steps1 * spec.steps2, 0.0)};
    parallel_for(spec.steps1, [&](std::size_t a) {
        for (std::size_t b = 0; b < spec.steps2; ++b) {
            const double cs[2] = {spec.axis1(a), spec.axis2(b)};
            const bool ok = thermo_flexible_ok(p, q, setup.gamma_s, thermo_qubit_cycle(cs), setup.gamma_c);
            grid.values[a * spec.steps2 + b] = ok ? 1.0 : 0.0;
        }
    });
    return grid;
}

std::vector<bool> scan_thermo_standard(const ProbVec &p, const ProbVec &q,
                                       std::span<const double> levels_s,
                                       std::span<const double> levels_c, double beta,
                                       std::size_t steps) {
    if (steps < 2) throw Error(ErrorKind::BadRange, "need at least two points");
    const ThermoSetup setup = thermo_setup(p, q, levels_s, levels_c, beta);
    std::vector<char> ok(steps, 0);
    parallel_for(steps, [&](std::size_t i) {
        const double c[1] = {grid_point(0.0, 1.0, steps, i)};
        ok[i] = thermo_flexible_ok(p, q, setup.gamma_s, thermo_qubit_cycle(c), setup.gamma_c) ? 1 : 0;
    });
    return {ok.begin(), ok.end()};
}

SampledPair sample_incomparable_pair(Rng &rng, std::size_t d) {
    if (d < 3) throw Error(ErrorKind::WrongDimension, "incomparable pairs need d >= 3");
    for (std::size_t attempt = 1; attempt <= kMaxSamplingAttempts; ++attempt) {
        SchmidtVec x = sort_desc(sample_dirichlet(rng, d));
        SchmidtVec y = sort_desc(sample_dirichlet(rng, d));
        if (incomparable(x, y)) return {std::move(x), std::move(y), attempt};
    }
    throw Error(ErrorKind::SamplingFailed, "no incomparable pair within the attempt cap");
}

SampledPair sample_incomparable_pair(std::uint64_t seed, std::size_t d) {
    Rng rng(seed);
    return sample_incomparable_pair(rng, d);
}

CatalystLattice make_catalyst_lattice(std::size_t k, double resolution) {
    if (k == 0) throw Error(ErrorKind::WrongDimension, "catalyst dimension must be positive");
    if (!(resolution > 0.0 && resolution <= 1.0)) {
        throw Error(ErrorKind::BadRange, "resolution must lie in (0, 1]");
    }
    CatalystLattice lattice;
    lattice.k = k;
    lattice.denominator = static_cast<std::size_t>(std::llround(1.0 / resolution));
    const std::size_t n = lattice.denominator;
    std::vector<std::size_t> parts(k, 0);
    // Non-increasing compositions of n into k parts; first part descending.
    auto recurse = [&](auto &self, std::size_t pos, std::size_t remaining, std::size_t cap) -> void {
        if (pos + 1 == k) {
            if (remaining > cap) return;
            parts[pos] = remaining;
            std::vector<double> c(k);
            for (std::size_t i = 0; i < k; ++i) {
                c[i] = static_cast<double>(parts[i]) / static_cast<double>(n);
            }
            lattice.points.push_back(trusted_schmidt(std::move(c)));
            return;
        }
        const std::size_t slots = k - pos;
        for (std::size_t v = std::min(cap, remaining) + 1; v-- > 0;) {
            if (v * slots < remaining) break;
            parts[pos] = v;
            self(self, pos + 1, remaining - v, v);
        }
    };
    recurse(recurse, 0, n, n);
    return lattice;
}

TransitionGraph::TransitionGraph(const SchmidtVec &x, const SchmidtVec &y,
                                 const CatalystLattice &lattice)
    : n_(lattice.points.size()), adj_(n_ * n_, 0) {
    std::vector<SchmidtVec> xs;
    std::vector<SchmidtVec> ys;
    xs.reserve(n_);
    ys.reserve(n_);
    for (const auto &c : lattice.points) {
        xs.push_back(tensor_sorted(x, c));
        ys.push_back(tensor_sorted(y, c));
    }
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) adj_[a * n_ + b] = is_majorized_by(xs[a], ys[b]) ? 1 : 0;
    }
}

bool TransitionGraph::has_self_loop() const {
    for (std::size_t a = 0; a < n_; ++a) {
        if (edge(a, a)) return true;
    }
    return false;
}

std::vector<std::vector<std::size_t>> TransitionGraph::closed_walks(std::size_t n,
                                                                    std::size_t limit) const {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0 || limit == 0) return out;
    std::vector<std::size_t> walk;
    walk.reserve(n);
    auto extend = [&](auto &self) -> void {
        if (out.size() >= limit) return;
        const std::size_t last = walk.back();
        if (walk.size() == n) {
            if (edge(last, walk.front())) out.push_back(walk);
            return;
        }
        for (std::size_t v = walk.front(); v < n_; ++v) {
            if (!edge(last, v)) continue;
            walk.push_back(v);
            self(self);
            walk.pop_back();
            if (out.size() >= limit) return;
        }
    };
    for (std::size_t s = 0; s < n_ && out.size() < limit; ++s) {
        walk.assign(1, s);
        extend(extend);
    }
    return out;
}

OptResult refine_standard_margin(const SchmidtVec &x, const SchmidtVec &y, const SchmidtVec &start,
                                 double initial_step) {
    const std::size_t k = start.dim();
    auto margin = [&](std::span<const double> c) {
        const SchmidtVec cat = trusted_schmidt({c.begin(), c.end()});
        return majorization_margin(tensor_sorted(x, cat), tensor_sorted(y, cat));
    };
    if (k == 1) return {{1.0}, margin(start.values()), 0};

    // Free coordinates c_2..c_k; c_1 absorbs the remainder.
    auto expand = [k](std::span<const double> free) {
        std::vector<double> c(k);
        double rest = 1.0;
        for (std::size_t i = 1; i < k; ++i) {
            c[i] = free[i - 1];
            rest -= free[i - 1];
        }
        c[0] = rest;
        return c;
    };
    std::vector<double> free(start.begin() + 1, start.end());
    PatternSearchOptions opts;
    opts.initial_step = initial_step;
    OptResult r = pattern_search_maximize(
        [&](std::span<const double> f) { return margin(expand(f)); }, free,
        [&](std::span<const double> f) { return sorted_simplex_point(expand(f)); }, opts);
    r.params = expand(r.params);
    return r;
}

}  // namespace flexcat
