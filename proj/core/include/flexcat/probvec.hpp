#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace flexcat {

/// Accepted deviation of a raw input from unit sum before it is renormalized.
inline constexpr double kInputSumTolerance = 1e-9;
/// Sum tolerance every constructed vector satisfies.
inline constexpr double kSumTolerance = 1e-12;
/// Entries with magnitude below this are stored as exact zeros.
inline constexpr double kZeroClamp = 1e-15;

namespace detail {
struct TrustedTag {};
}  // namespace detail

/// Finite probability distribution: non-negative entries summing to one.
class ProbVec {
   public:
    /// Bypasses validation. Only for values already known to be a distribution.
    ProbVec(detail::TrustedTag, std::vector<double> values) : values_(std::move(values)) {}

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// Number of strictly positive entries.
    std::size_t support_size() const noexcept;

    /// Copy with trailing zeros appended up to `d` (never truncates).
    ProbVec padded(std::size_t d) const;

    friend bool operator==(const ProbVec &, const ProbVec &) = default;

   private:
    std::vector<double> values_;
};

ProbVec make_prob_vec(std::span<const double> raw);
ProbVec make_prob_vec(std::initializer_list<double> raw);
ProbVec uniform(std::size_t d);

/// A ProbVec whose entries are non-increasing. Domain of majorization.
class SchmidtVec {
   public:
    SchmidtVec(detail::TrustedTag, ProbVec sorted) : probs_(std::move(sorted)) {}

    /// Validates like make_prob_vec and sorts.
    static SchmidtVec from(std::span<const double> raw);
    static SchmidtVec from(std::initializer_list<double> raw);

    const ProbVec &probs() const noexcept { return probs_; }
    std::size_t dim() const noexcept { return probs_.dim(); }
    std::span<const double> values() const noexcept { return probs_.values(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    double largest() const { return probs_[0]; }
    double smallest() const { return probs_[dim() - 1]; }
    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }
    std::size_t support_size() const noexcept { return probs_.support_size(); }

    SchmidtVec padded(std::size_t d) const;

    friend bool operator==(const SchmidtVec &, const SchmidtVec &) = default;

   private:
    ProbVec probs_;
};

/// Stable non-increasing sort.
SchmidtVec sort_desc(const ProbVec &p);

/// Kronecker product, a-major: entry (i, j) lands at i * dim(b) + j.
ProbVec tensor(const ProbVec &a, const ProbVec &b);

/// sort_desc(tensor(a, b)).
SchmidtVec tensor_sorted(const SchmidtVec &a, const SchmidtVec &b);

/// E_l(x) = x_l + ... + x_d with 1-based l. E_1 is exactly 1.
double tail_sum(const SchmidtVec &x, std::size_t l);

}  // namespace flexcat
