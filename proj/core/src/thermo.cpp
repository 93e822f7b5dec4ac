#include "flexcat/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "flexcat/error.hpp"

namespace flexcat {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

GibbsVec::GibbsVec(ProbVec probs) : probs_(std::move(probs)) {
    for (double v : probs_) {
        if (!(v > 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "Gibbs vector entries must be strictly positive");
        }
    }
}

GibbsVec gibbs_vector(std::span<const double> levels, double beta) {
    if (levels.empty()) throw Error(ErrorKind::EmptyVector, "no energy levels");
    if (!std::isfinite(beta) || beta < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "beta must be finite and non-negative");
    }
    for (double e : levels) {
        if (!std::isfinite(e)) throw Error(ErrorKind::InvalidArgument, "energy level not finite");
    }
    const double e_min = *std::min_element(levels.begin(), levels.end());
    std::vector<double> w(levels.size());
    double z = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        w[i] = std::exp(-beta * (levels[i] - e_min));
        z += w[i];
    }
    for (double &v : w) v /= z;
    return GibbsVec(ProbVec(detail::TrustedTag{}, std::move(w)));
}

GibbsVec gibbs_vector(std::initializer_list<double> levels, double beta) {
    return gibbs_vector(std::span<const double>(levels.begin(), levels.size()), beta);
}

GibbsVec tensor(const GibbsVec &a, const GibbsVec &b) {
    return GibbsVec(tensor(a.probs(), b.probs()));
}

ThermoContext ThermoContext::make(std::vector<double> levels, double beta) {
    GibbsVec g = gibbs_vector(levels, beta);
    return ThermoContext{std::move(levels), beta, std::move(g)};
}

LorenzCurve::LorenzCurve(std::vector<LorenzPoint> breakpoints) : points_(std::move(breakpoints)) {
    if (points_.size() < 2) throw Error(ErrorKind::InvalidArgument, "curve needs two breakpoints");
    if (points_.front() != LorenzPoint{0.0, 0.0}) {
        throw Error(ErrorKind::InvalidArgument, "curve must start at the origin");
    }
    if (points_.back() != LorenzPoint{1.0, 1.0}) {
        throw Error(ErrorKind::InvalidArgument, "curve must end at (1, 1)");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i].x > points_[i - 1].x)) {
            throw Error(ErrorKind::InvalidArgument, "breakpoint x must be strictly increasing");
        }
    }
    for (const auto &pt : points_) {
        if (pt.y < 0.0 || pt.y > 1.0) throw Error(ErrorKind::InvalidArgument, "y outside [0, 1]");
    }
    if (!is_concave()) throw Error(ErrorKind::InvalidArgument, "curve is not concave");
}

double LorenzCurve::value_at(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    auto hi = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const LorenzPoint &p, double v) { return p.x < v; });
    if (hi->x == x) return hi->y;
    auto lo = hi - 1;
    const double t = (x - lo->x) / (hi->x - lo->x);
    return lo->y + t * (hi->y - lo->y);
}

bool LorenzCurve::is_concave(double tol) const {
    for (std::size_t i = 2; i < points_.size(); ++i) {
        const auto &a = points_[i - 2];
        const auto &b = points_[i - 1];
        const auto &c = points_[i];
        // slope(b,c) <= slope(a,b)
        if ((c.y - b.y) * (b.x - a.x) > (b.y - a.y) * (c.x - b.x) + tol) return false;
    }
    return true;
}

LorenzCurve lorenz_curve(const ProbVec &p, const GibbsVec &gamma) {
    require_same_dim(p.dim(), gamma.dim(), "lorenz_curve");
    std::vector<double> ratio(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) ratio[i] = p[i] / gamma[i];
    std::vector<std::size_t> order(p.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return ratio[i] > ratio[j]; });

    std::vector<LorenzPoint> pts;
    pts.reserve(p.dim() + 1);
    pts.push_back({0.0, 0.0});
    double gx = 0.0;
    double py = 0.0;
    for (std::size_t i : order) {
        gx += gamma[i];
        py += p[i];
        const LorenzPoint next{std::min(gx, 1.0), std::min(py, 1.0)};
        // Levels whose Gibbs weight vanishes against the running sum collapse
        // onto the previous x.
        if (next.x <= pts.back().x) {
            pts.back().y = std::max(pts.back().y, next.y);
        } else {
            pts.push_back(next);
        }
    }
    if (pts.size() == 1) pts.push_back({1.0, 1.0});
    pts.back() = {1.0, 1.0};
    return LorenzCurve(std::move(pts));
}

bool curve_geq(const LorenzCurve &a, const LorenzCurve &b) {
    const auto pa = a.breakpoints();
    const auto pb = b.breakpoints();
    for (const auto &pt : pb) {
        if (a.value_at(pt.x) < pt.y - kCurveSlack) return false;
    }
    for (const auto &pt : pa) {
        if (pt.y < b.value_at(pt.x) - kCurveSlack) return false;
    }
    return true;
}

bool thermo_majorizes(const ProbVec &p, const ProbVec &q, const GibbsVec &gamma) {
    require_same_dim(p.dim(), q.dim(), "thermo_majorizes");
    return curve_geq(lorenz_curve(p, gamma), lorenz_curve(q, gamma));
}

bool thermo_flexible_ok(const ProbVec &p, const ProbVec &q, const GibbsVec &gamma_s,
                        const ThermoCycle &cycle, const GibbsVec &gamma_c) {
    require_same_dim(p.dim(), gamma_s.dim(), "system state vs system Gibbs vector");
    require_same_dim(q.dim(), gamma_s.dim(), "target state vs system Gibbs vector");
    require_same_dim(cycle.state_dim(), gamma_c.dim(), "catalyst state vs catalyst Gibbs vector");
    const GibbsVec composite = tensor(gamma_s, gamma_c);
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        if (!thermo_majorizes(tensor(p, cycle[i]), tensor(q, cycle[i + 1]), composite)) {
            return false;
        }
    }
    return true;
}

}  // namespace flexcat
