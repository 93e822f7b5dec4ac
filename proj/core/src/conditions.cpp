#include "flexcat/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "flexcat/error.hpp"

namespace flexcat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Endpoints {
    double x1, xd, y1, yd;
};

Endpoints endpoints_with_positive_tails(const SchmidtVec &x, const SchmidtVec &y) {
    const std::size_t d = std::max(x.dim(), y.dim());
    const SchmidtVec xp = x.padded(d);
    const SchmidtVec yp = y.padded(d);
    if (!(xp.smallest() > 0.0) || !(yp.smallest() > 0.0)) {
        throw Error(ErrorKind::ZeroTail, "x_d and y_d must be strictly positive");
    }
    return {xp.largest(), xp.smallest(), yp.largest(), yp.smallest()};
}

// Smallest non-zero entry of a sorted vector.
double last_nonzero(const SchmidtVec &c) {
    const std::size_t s = c.support_size();
    return s == 0 ? 0.0 : c[s - 1];
}

double safe_ratio(double num, double den) {
    if (den > 0.0) return num / den;
    return num > 0.0 ? kInf : 1.0;
}

void require_violations(const ViolationReport &report) {
    if (report.empty()) throw Error(ErrorKind::EmptyViolationSet, "violation set is empty");
}

}  // namespace

bool boundary_ratios_ok(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle) {
    const Endpoints e = endpoints_with_positive_tails(x, y);
    // Cross-multiplied so the slack matches the one used by is_majorized_by.
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        const SchmidtVec &c = cycle[i];
        const SchmidtVec &next = cycle[i + 1];
        if (e.x1 * c.largest() > e.y1 * next.largest() + kMajorizationSlack) return false;
        if (e.xd * c.smallest() < e.yd * next.smallest() - kMajorizationSlack) return false;
    }
    return true;
}

bool support_size_uniform(const Cycle &cycle) {
    const std::size_t s = cycle[0].support_size();
    return std::all_of(cycle.begin(), cycle.end(),
                       [s](const SchmidtVec &c) { return c.support_size() == s; });
}

bool endpoint_conditions_ok(const SchmidtVec &x, const SchmidtVec &y) {
    const Endpoints e = endpoints_with_positive_tails(x, y);
    return e.x1 <= e.y1 + kMajorizationSlack && e.xd >= e.yd - kMajorizationSlack;
}

bool boundary_rigidity_holds(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle) {
    const std::size_t d = std::max(x.dim(), y.dim());
    const SchmidtVec xp = x.padded(d);
    const SchmidtVec yp = y.padded(d);
    const bool first_equal = std::abs(xp.largest() - yp.largest()) <= kMajorizationSlack;
    const bool last_equal = std::abs(xp.smallest() - yp.smallest()) <= kMajorizationSlack;
    if (!first_equal || !last_equal || !(xp.smallest() > 0.0)) {
        throw Error(ErrorKind::PreconditionUnmet, "requires x_1 = y_1 and x_d = y_d > 0");
    }
    const double first = cycle[0].largest();
    const double last = last_nonzero(cycle[0]);
    for (const SchmidtVec &c : cycle) {
        if (std::abs(c.largest() - first) > kStrictSlack) return false;
        if (std::abs(last_nonzero(c) - last) > kStrictSlack) return false;
    }
    return true;
}

std::optional<std::size_t> k2_standard_witness(const Cycle &cycle, const SchmidtVec &x,
                                               const SchmidtVec &y) {
    if (cycle.state_dim() != 2) {
        throw Error(ErrorKind::WrongDimension,
                    "witness needs k = 2, got k = " + std::to_string(cycle.state_dim()));
    }
    if (!flexible_cycle_ok(x, y, cycle)) {
        throw Error(ErrorKind::NotFeasible, "cycle does not enable the transformation");
    }
    // For k = 2, a ≺ b iff a_2 >= b_2, so the minimum has the largest a_2.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cycle.length(); ++i) {
        if (cycle[i][1] > cycle[best][1]) best = i;
    }
    if (!standard_catalysis_ok(x, y, cycle[best])) return std::nullopt;
    return best + 1;
}

bool d3_no_go(const SchmidtVec &x, const SchmidtVec &y) {
    if (x.dim() != 3 || y.dim() != 3) {
        throw Error(ErrorKind::WrongDimension, "d3_no_go needs three-dimensional vectors");
    }
    return incomparable(x, y);
}

double largest_to_smallest_threshold(const SchmidtVec &y, const ViolationReport &report) {
    require_violations(report);
    double threshold = 0.0;
    for (std::size_t l : report.indices) {
        if (l < 1 || l >= y.dim()) {
            throw Error(ErrorKind::IndexOutOfRange, "violation index outside 1..d-1");
        }
        threshold = std::max(threshold, safe_ratio(y[l - 1], y[l]));
    }
    return threshold;
}

bool ratio_bound_holds(const Cycle &cycle, const SchmidtVec &y, const ViolationReport &report) {
    const double threshold = largest_to_smallest_threshold(y, report);
    for (const SchmidtVec &c : cycle) {
        const double smallest = last_nonzero(c);
        if (!(smallest > 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "catalyst state has no positive entry");
        }
        if (!(c.largest() / smallest > threshold - kStrictSlack)) return false;
    }
    return true;
}

double max_adjacent_ratio(const SchmidtVec &c) {
    double best = 1.0;
    for (std::size_t v = 0; v + 1 < c.dim(); ++v) {
        if (c[v] == 0.0) break;
        best = std::max(best, safe_ratio(c[v], c[v + 1]));
    }
    return best;
}

double adjacent_ratio_threshold(const SchmidtVec &y, const ViolationReport &report) {
    require_violations(report);
    const std::size_t m = *report.m();
    const std::size_t n = *report.n_max();
    if (n >= y.dim()) throw Error(ErrorKind::IndexOutOfRange, "violation index outside 1..d-1");
    return std::min(safe_ratio(y.largest(), y[m - 1]), safe_ratio(y[n], y.smallest()));
}

bool adjacent_ratio_bound_ok(const SchmidtVec &c, const SchmidtVec &y,
                             const ViolationReport &report) {
    return max_adjacent_ratio(c) < adjacent_ratio_threshold(y, report);
}

}  // namespace flexcat
