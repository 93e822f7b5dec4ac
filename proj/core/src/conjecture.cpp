#include "flexcat/conjecture.hpp"

#include <optional>

#include "flexcat/error.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/parallel.hpp"
#include "flexcat/rng.hpp"
#include "flexcat/search.hpp"

namespace flexcat {

namespace {

struct TrialOutcome {
    std::size_t attempts = 0;
    bool flexible = false;
    bool standard_lattice = false;
    bool standard_refined = false;
    std::optional<ConjectureCandidate> candidate;
};

TrialOutcome run_trial(const ConjectureOptions &opt, const CatalystLattice &lattice, std::size_t t) {
    Rng rng = Rng::substream(opt.seed, t);
    SampledPair pair = sample_incomparable_pair(rng, opt.d);
    TrialOutcome out;
    out.attempts = pair.attempts;

    const TransitionGraph graph(pair.x, pair.y, lattice);
    const auto walks = graph.closed_walks(opt.n, 1);
    if (walks.empty()) return out;
    out.flexible = true;

    if (graph.has_self_loop()) {
        out.standard_lattice = true;
        return out;
    }

    std::size_t best = 0;
    double best_margin = -1.0;
    for (std::size_t i = 0; i < lattice.points.size(); ++i) {
        const auto &c = lattice.points[i];
        const double m = majorization_margin(tensor_sorted(pair.x, c), tensor_sorted(pair.y, c));
        if (i == 0 || m > best_margin) {
            best = i;
            best_margin = m;
        }
    }
    const OptResult refined = refine_standard_margin(
        pair.x, pair.y, lattice.points[best], 1.0 / static_cast<double>(lattice.denominator));
    if (refined.value >= -kMajorizationSlack) {
        out.standard_refined = true;
        return out;
    }

    ConjectureCandidate cand{t, pair.x, pair.y, {}, SchmidtVec::from(refined.params), refined.value};
    for (std::size_t idx : walks.front()) cand.cycle.push_back(lattice.points[idx]);
    out.candidate = std::move(cand);
    return out;
}

}  // namespace

ConjectureReport conjecture_search(const ConjectureOptions &options) {
    if (options.d < 3) throw Error(ErrorKind::WrongDimension, "conjecture search needs d >= 3");
    if (options.k < 2) throw Error(ErrorKind::WrongDimension, "catalyst dimension must be >= 2");
    if (options.n < 1) throw Error(ErrorKind::InvalidArgument, "cycle length must be >= 1");
    const CatalystLattice lattice = make_catalyst_lattice(options.k, options.resolution);

    std::vector<TrialOutcome> outcomes(options.trials);
    parallel_for(options.trials,
                 [&](std::size_t t) { outcomes[t] = run_trial(options, lattice, t); });

    ConjectureReport report;
    report.options = options;
    report.lattice_size = lattice.points.size();
    for (auto &o : outcomes) {
        report.sampling_attempts += o.attempts;
        report.flexible_feasible += o.flexible ? 1 : 0;
        report.standard_on_lattice += o.standard_lattice ? 1 : 0;
        report.standard_after_refinement += o.standard_refined ? 1 : 0;
        if (o.candidate) report.candidates.push_back(std::move(*o.candidate));
    }
    return report;
}

}  // namespace flexcat
