#include "flexcat/majorize.hpp"

#include <algorithm>
#include <limits>

namespace flexcat {

namespace {

double entry(const SchmidtVec &v, std::size_t i) { return i < v.dim() ? v[i] : 0.0; }

// Suffix sums from the smallest entry up; out[l] = E_{l+1}.
std::vector<double> tails(const SchmidtVec &v, std::size_t d) {
    std::vector<double> out(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;) out[i] = out[i + 1] + entry(v, i);
    out[0] = 1.0;
    return out;
}

}  // namespace

std::optional<std::size_t> ViolationReport::m() const {
    if (indices.empty()) return std::nullopt;
    return indices.front();
}

std::optional<std::size_t> ViolationReport::n_max() const {
    if (indices.empty()) return std::nullopt;
    return indices.back();
}

double majorization_margin(const SchmidtVec &x, const SchmidtVec &y) {
    const std::size_t d = std::max(x.dim(), y.dim());
    double margin = std::numeric_limits<double>::infinity();
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        sx += entry(x, k);
        sy += entry(y, k);
        margin = std::min(margin, sy - sx);
    }
    return margin;
}

bool is_majorized_by(const SchmidtVec &x, const SchmidtVec &y) {
    const std::size_t d = std::max(x.dim(), y.dim());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        sx += entry(x, k);
        sy += entry(y, k);
        if (sx > sy + kMajorizationSlack) return false;
    }
    return true;
}

double vidal_probability(const SchmidtVec &x, const SchmidtVec &y) {
    const std::size_t d = std::max(x.dim(), y.dim());
    const auto ex = tails(x, d);
    const auto ey = tails(y, d);
    double p = 1.0;
    for (std::size_t l = 1; l < d; ++l) {
        if (ey[l] == 0.0) continue;
        if (ex[l] == 0.0) return 0.0;
        p = std::min(p, ex[l] / ey[l]);
    }
    return std::clamp(p, 0.0, 1.0);
}

bool standard_catalysis_ok(const SchmidtVec &x, const SchmidtVec &y, const SchmidtVec &c) {
    return is_majorized_by(tensor_sorted(x, c), tensor_sorted(y, c));
}

bool flexible_cycle_ok(const SchmidtVec &x, const SchmidtVec &y, const Cycle &cycle) {
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        if (!is_majorized_by(tensor_sorted(x, cycle[i]), tensor_sorted(y, cycle[i + 1]))) {
            return false;
        }
    }
    return true;
}

ViolationReport violation_indices(const SchmidtVec &x, const SchmidtVec &y) {
    const std::size_t d = std::max(x.dim(), y.dim());
    ViolationReport report;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 1; k < d; ++k) {
        sx += entry(x, k - 1);
        sy += entry(y, k - 1);
        if (sx > sy + kMajorizationSlack) report.indices.push_back(k);
    }
    return report;
}

bool incomparable(const SchmidtVec &x, const SchmidtVec &y) {
    return !is_majorized_by(x, y) && !is_majorized_by(y, x);
}

}  // namespace flexcat
