#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flexcat/cycle.hpp"
#include "flexcat/probvec.hpp"

namespace flexcat {

/// Slack on curve dominance, looser than the sum tolerance because each
/// curve value accumulates d products.
inline constexpr double kCurveSlack = 1e-10;

/// Thermal distribution exp(-beta E_i) / Z; every entry is strictly positive.
class GibbsVec {
   public:
    /// Throws InvalidArgument if any entry is not strictly positive.
    explicit GibbsVec(ProbVec probs);

    const ProbVec &probs() const noexcept { return probs_; }
    std::size_t dim() const noexcept { return probs_.dim(); }
    std::span<const double> values() const noexcept { return probs_.values(); }
    double operator[](std::size_t i) const { return probs_[i]; }

    friend bool operator==(const GibbsVec &, const GibbsVec &) = default;

   private:
    ProbVec probs_;
};

GibbsVec gibbs_vector(std::span<const double> levels, double beta);
GibbsVec gibbs_vector(std::initializer_list<double> levels, double beta);

/// Reference state of a composite system; same as the Gibbs vector of summed levels.
GibbsVec tensor(const GibbsVec &a, const GibbsVec &b);

/// Energy levels of an energy-incoherent system at inverse temperature beta.
struct ThermoContext {
    std::vector<double> levels;
    double beta;
    GibbsVec gibbs;

    static ThermoContext make(std::vector<double> levels, double beta);
};

struct LorenzPoint {
    double x;
    double y;

    friend bool operator==(const LorenzPoint &, const LorenzPoint &) = default;
};

/// Concave piecewise-linear curve from (0,0) to (1,1), x strictly increasing.
class LorenzCurve {
   public:
    /// Validates endpoints, monotone x, y range and concavity.
    explicit LorenzCurve(std::vector<LorenzPoint> breakpoints);

    std::span<const LorenzPoint> breakpoints() const noexcept { return points_; }

    /// Linear interpolation; x is clamped to [0, 1].
    double value_at(double x) const;

    /// Segment slopes are non-increasing within `tol` (cross-multiplied form).
    bool is_concave(double tol = 1e-10) const;

   private:
    std::vector<LorenzPoint> points_;
};

/// Thermo-Lorenz curve: levels taken in order of non-increasing p_i / gamma_i
/// (stable on ties), cumulative (gamma, p) breakpoints.
LorenzCurve lorenz_curve(const ProbVec &p, const GibbsVec &gamma);

/// a(x) >= b(x) - kCurveSlack at every breakpoint of either curve. Exact for
/// piecewise-linear curves since their difference is linear between those points.
bool curve_geq(const LorenzCurve &a, const LorenzCurve &b);

/// p ≻_β q with respect to gamma.
bool thermo_majorizes(const ProbVec &p, const ProbVec &q, const GibbsVec &gamma);

/// p ⊗ c_i ≻_β q ⊗ c_{i+1} for all i relative to gamma_s ⊗ gamma_c.
bool thermo_flexible_ok(const ProbVec &p, const ProbVec &q, const GibbsVec &gamma_s,
                        const ThermoCycle &cycle, const GibbsVec &gamma_c);

}  // namespace flexcat
