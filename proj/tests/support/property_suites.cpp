#include "property_suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flexcat/conditions.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/rng.hpp"
#include "flexcat/search.hpp"
#include "flexcat/thermo.hpp"
#include "generators.hpp"

namespace flexcat::testing {

namespace {

std::string show(const SchmidtVec &v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string show(const ProbVec &v) { return show(sort_desc(v)); }

std::size_t small_dim(Rng &rng) { return 2 + rng.below(5); }

}  // namespace

std::vector<FoundCycle> collect_feasible_cycles(std::uint64_t seed, std::size_t d, std::size_t k,
                                                double resolution, std::size_t target,
                                                std::size_t per_pair) {
    const CatalystLattice lattice = make_catalyst_lattice(k, resolution);
    std::vector<FoundCycle> out;
    for (std::uint64_t trial = 0; out.size() < target && trial < 1000000; ++trial) {
        Rng rng = Rng::substream(seed, trial);
        const SampledPair pair = sample_incomparable_pair(rng, d);
        const TransitionGraph graph(pair.x, pair.y, lattice);
        const auto walks = graph.closed_walks(2, lattice.points.size() * lattice.points.size());
        if (walks.empty()) continue;
        const std::size_t take = std::min(per_pair, walks.size());
        for (std::size_t i = 0; i < take && out.size() < target; ++i) {
            const auto &w = walks[i * walks.size() / take];
            out.push_back({pair.x, pair.y,
                           Cycle({lattice.points[w[0]], lattice.points[w[1]]})});
        }
    }
    return out;
}

PropertyOutcome transitivity(std::uint64_t seed, std::size_t trials) {
    PropertyOutcome r;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        const std::size_t d = small_dim(rng);
        const SchmidtVec c = random_schmidt(rng, d);
        const SchmidtVec b = mix_down(rng, c);
        const SchmidtVec a = mix_down(rng, b);
        ++r.trials;
        if (!is_majorized_by(a, b) || !is_majorized_by(b, c)) {
            r.fail("generator produced a non-chain at trial " + std::to_string(t));
        } else if (!is_majorized_by(a, c)) {
            r.fail("a ≺ b ≺ c but not a ≺ c: a=" + show(a) + " c=" + show(c));
        }
    }
    return r;
}

PropertyOutcome tensor_preservation(std::uint64_t seed, std::size_t trials) {
    PropertyOutcome r;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        const SchmidtVec b = random_schmidt(rng, small_dim(rng));
        const SchmidtVec a = mix_down(rng, b);
        const SchmidtVec z = random_schmidt(rng, small_dim(rng));
        ++r.trials;
        if (!is_majorized_by(tensor_sorted(a, z), tensor_sorted(b, z))) {
            r.fail("a ≺ b but a⊗z ⊀ b⊗z: a=" + show(a) + " b=" + show(b) + " z=" + show(z));
        }
    }
    return r;
}

PropertyOutcome vidal_equivalence(std::uint64_t seed, std::size_t trials) {
    PropertyOutcome r;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        const std::size_t d = small_dim(rng);
        const SchmidtVec y = random_schmidt(rng, d);
        // Half the pairs are majorized by construction.
        const SchmidtVec x = (t % 2 == 0) ? mix_down(rng, y) : random_schmidt(rng, d);
        const bool unit = std::abs(vidal_probability(x, y) - 1.0) <= 1e-12;
        ++r.trials;
        if (unit != is_majorized_by(x, y)) {
            r.fail("vidal=1 disagrees with majorization: x=" + show(x) + " y=" + show(y));
        }
    }
    return r;
}

PropertyOutcome uniform_thermo_equivalence(std::uint64_t seed, std::size_t trials) {
    PropertyOutcome r;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        const std::size_t d = small_dim(rng);
        const ProbVec p = random_prob(rng, d);
        const ProbVec q = (t % 2 == 0) ? mix_down_unsorted(rng, p) : random_prob(rng, d);
        // Degenerate levels or infinite temperature both give the uniform reference.
        const GibbsVec gamma = (t % 4 < 2) ? gibbs_vector(std::vector<double>(d, 1.5), 2.0)
                                           : gibbs_vector(random_levels(rng, d), 0.0);
        ++r.trials;
        if (thermo_majorizes(p, q, gamma) != is_majorized_by(sort_desc(q), sort_desc(p))) {
            r.fail("uniform-reference thermo-majorization disagrees: p=" + show(p) +
                   " q=" + show(q));
        }
    }
    return r;
}

PropertyOutcome k2_witness(const std::vector<FoundCycle> &cycles) {
    PropertyOutcome r;
    for (const auto &fc : cycles) {
        ++r.trials;
        const auto j = k2_standard_witness(fc.cycle, fc.x, fc.y);
        if (!j || !standard_catalysis_ok(fc.x, fc.y, fc.cycle[*j - 1])) {
            r.fail("no standard witness for x=" + show(fc.x) + " y=" + show(fc.y));
        }
    }
    return r;
}

PropertyOutcome ratio_bound(const std::vector<FoundCycle> &cycles) {
    PropertyOutcome r;
    for (const auto &fc : cycles) {
        if (!incomparable(fc.x, fc.y)) continue;
        ++r.trials;
        const ViolationReport report = violation_indices(fc.x, fc.y);
        const double threshold = largest_to_smallest_threshold(fc.y, report);
        for (const SchmidtVec &c : fc.cycle) {
            const double gap = c.largest() / c[c.support_size() - 1] - threshold;
            if (gap > -kStrictSlack && gap <= kStrictSlack) {
                ++r.near_boundary;
                break;
            }
        }
        if (!ratio_bound_holds(fc.cycle, fc.y, report)) {
            r.fail("ratio bound violated: x=" + show(fc.x) + " y=" + show(fc.y) +
                   " c1=" + show(fc.cycle[0]) + " c2=" + show(fc.cycle[1]));
        }
    }
    return r;
}

PropertyOutcome necessary_conditions(const std::vector<FoundCycle> &cycles) {
    PropertyOutcome r;
    for (const auto &fc : cycles) {
        ++r.trials;
        if (!flexible_cycle_ok(fc.x, fc.y, fc.cycle)) {
            r.fail("collected cycle is not feasible");
            continue;
        }
        const std::string where = " x=" + show(fc.x) + " y=" + show(fc.y);
        if (!boundary_ratios_ok(fc.x, fc.y, fc.cycle)) r.fail("boundary ratios" + where);
        if (!support_size_uniform(fc.cycle)) r.fail("support size" + where);
        if (!endpoint_conditions_ok(fc.x, fc.y)) r.fail("endpoint conditions" + where);
        if (incomparable(fc.x, fc.y) &&
            !ratio_bound_holds(fc.cycle, fc.y, violation_indices(fc.x, fc.y))) {
            r.fail("ratio bound" + where);
        }
    }
    return r;
}

PropertyOutcome d3_no_go_search(std::uint64_t seed, std::size_t pairs, double resolution) {
    PropertyOutcome r;
    const CatalystLattice lattice = make_catalyst_lattice(2, resolution);
    for (std::size_t t = 0; t < pairs; ++t) {
        Rng rng = Rng::substream(seed, t);
        const SampledPair pair = sample_incomparable_pair(rng, 3);
        ++r.trials;
        const std::string where = " x=" + show(pair.x) + " y=" + show(pair.y);
        if (!d3_no_go(pair.x, pair.y)) {
            r.fail("sampled pair not flagged" + where);
            continue;
        }
        if (endpoint_conditions_ok(pair.x, pair.y) || endpoint_conditions_ok(pair.y, pair.x)) {
            r.fail("endpoint conditions pass for an incomparable d=3 pair" + where);
        }
        const TransitionGraph forward(pair.x, pair.y, lattice);
        const TransitionGraph backward(pair.y, pair.x, lattice);
        if (!forward.closed_walks(2, 1).empty() || !backward.closed_walks(2, 1).empty()) {
            r.fail("feasible 2-cycle found" + where);
        }
    }
    return r;
}

PropertyOutcome k3_rigidity(std::uint64_t seed, std::size_t pairs, double resolution,
                            std::size_t *found) {
    PropertyOutcome r;
    const CatalystLattice lattice = make_catalyst_lattice(3, resolution);
    std::size_t seen = 0;
    for (std::size_t t = 0; t < pairs; ++t) {
        Rng rng = Rng::substream(seed, t);
        // y with a fixed first and last entry; x mixes only the middle block,
        // so x_1 = y_1, x_5 = y_5 exactly and x ≺ y.
        std::vector<double> y;
        std::vector<double> x;
        SchmidtVec ys = random_schmidt(rng, 5);
        y.assign(ys.begin(), ys.end());
        x = y;
        const double lambda = rng.uniform();
        const double mid = (y[1] + y[2] + y[3]) / 3.0;
        for (std::size_t i = 1; i < 4; ++i) x[i] = lambda * y[i] + (1.0 - lambda) * mid;
        const SchmidtVec xs(detail::TrustedTag{}, ProbVec(detail::TrustedTag{}, x));
        ++r.trials;
        const TransitionGraph graph(xs, ys, lattice);
        for (const auto &w : graph.closed_walks(2, lattice.points.size() * lattice.points.size())) {
            ++seen;
            const Cycle cycle({lattice.points[w[0]], lattice.points[w[1]]});
            if (!boundary_rigidity_holds(xs, ys, cycle)) {
                r.fail("boundary components vary along a feasible cycle");
            }
            for (std::size_t i = 0; i < 3; ++i) {
                if (std::abs(cycle[0][i] - cycle[1][i]) > 1e-10) {
                    r.fail("k=3 feasible cycle is not constant: " + show(cycle[0]) + " vs " +
                           show(cycle[1]));
                    break;
                }
            }
        }
    }
    if (found) *found = seen;
    return r;
}

}  // namespace flexcat::testing
