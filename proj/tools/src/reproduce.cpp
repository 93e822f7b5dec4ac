#include "flexcat/cli/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flexcat/conditions.hpp"
#include "flexcat/conjecture.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/reference_instances.hpp"
#include "flexcat/search.hpp"
#include "flexcat/thermo.hpp"

namespace flexcat::cli {

namespace {

namespace ref = flexcat::reference;

std::string num(double v, const char *format = "%.6f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

ReproRow near(std::string name, double expected, double tol, double got) {
    return {std::move(name), num(expected, "%.4f") + " +- " + num(tol, "%g"), num(got),
            std::abs(got - expected) <= tol};
}

ReproRow is(std::string name, bool expected, bool got) {
    return {std::move(name), expected ? "true" : "false", got ? "true" : "false", expected == got};
}

ReproRow count(std::string name, std::size_t expected, std::size_t got) {
    return {std::move(name), std::to_string(expected), std::to_string(got), expected == got};
}

}  // namespace

std::vector<ReproRow> reproduce_rows(bool with_conjecture) {
    std::vector<ReproRow> rows;

    const SchmidtVec x = SchmidtVec::from(ref::kSloccX);
    const SchmidtVec y = SchmidtVec::from(ref::kSloccY);
    rows.push_back(near("slocc P_base", ref::kSloccBaseProbability, 1e-4, vidal_probability(x, y)));
    const OptResult std_best = best_standard(x, y);
    rows.push_back(near("slocc standard c*", ref::kSloccStandardParam, 0.005, std_best.params[0]));
    rows.push_back(near("slocc standard value", ref::kSloccStandardValue, 0.002, std_best.value));
    const OptResult flex = best_flexible(x, y);
    rows.push_back(near("slocc flexible c1", ref::kSloccFlexibleParams[0], 0.005, flex.params[0]));
    rows.push_back(near("slocc flexible c2", ref::kSloccFlexibleParams[1], 0.005, flex.params[1]));
    rows.push_back(near("slocc flexible value", ref::kSloccFlexibleValue, 0.002, flex.value));
    const double gain = flex.value - std_best.value;
    rows.push_back({"slocc flexible gain", ">= 0.03", num(gain), gain >= 0.03});

    const ProbVec p = make_prob_vec(ref::kThermoP);
    const ProbVec q = make_prob_vec(ref::kThermoQ);
    const GibbsVec gs = gibbs_vector(ref::kThermoLevelsS, ref::kThermoBeta);
    const GibbsVec gc = gibbs_vector(ref::kThermoLevelsC, ref::kThermoBeta);
    const ProbVec c1 = make_prob_vec(ref::kThermoC1);
    const ProbVec c2 = make_prob_vec(ref::kThermoC2);
    rows.push_back(is("thermo p >_beta q", false, thermo_majorizes(p, q, gs)));
    rows.push_back(is("thermo cycle [c1,c2]", true, thermo_flexible_ok(p, q, gs, ThermoCycle({c1, c2}), gc)));
    rows.push_back(is("thermo cycle [c2,c1]", true, thermo_flexible_ok(p, q, gs, ThermoCycle({c2, c1}), gc)));
    const auto diag = scan_thermo_standard(p, q, ref::kThermoLevelsS, ref::kThermoLevelsC, ref::kThermoBeta, 1001);
    rows.push_back(count("thermo standard feasible (1001 pts)", 0,
                         static_cast<std::size_t>(std::count(diag.begin(), diag.end(), true))));
    const LandscapeGrid degenerate = scan_thermo_feasibility(p, q, ref::kThermoLevelsS,
                                                             ref::kThermoLevelsCDegenerate, ref::kThermoBeta);
    rows.push_back(count("thermo E_C={0,0} feasible cells", 0, degenerate.count_nonzero()));

    const SchmidtVec ax = SchmidtVec::from(ref::kAdjacentX);
    const SchmidtVec ay = SchmidtVec::from(ref::kAdjacentY);
    const SchmidtVec ac1 = SchmidtVec::from(ref::kAdjacentC1);
    const SchmidtVec ac2 = SchmidtVec::from(ref::kAdjacentC2);
    const ViolationReport report = violation_indices(ax, ay);
    std::string l_text;
    for (std::size_t l : report.indices) l_text += (l_text.empty() ? "" : ",") + std::to_string(l);
    rows.push_back({"adjacent L", "2", l_text.empty() ? "none" : l_text, report.indices == std::vector<std::size_t>{2}});
    if (!report.empty()) {
        const double threshold = adjacent_ratio_threshold(ay, report);
        const double ratio = max_adjacent_ratio(ac2);
        rows.push_back(near("adjacent threshold", ref::kAdjacentThreshold, 1e-3, threshold));
        rows.push_back(near("adjacent C2 ratio", ref::kAdjacentC2Ratio, 1e-3, ratio));
        rows.push_back(is("adjacent C2 ratio > threshold", true, ratio > threshold));
    }
    rows.push_back(is("adjacent cycle feasible", true, flexible_cycle_ok(ax, ay, Cycle({ac1, ac2}))));

    if (with_conjecture) {
        const ConjectureReport r = conjecture_search(ConjectureOptions{});
        rows.push_back(count("conjecture candidates (1000 trials)", 0, r.candidates.size()));
    }
    return rows;
}

}  // namespace flexcat::cli
