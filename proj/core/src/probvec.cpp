#include "flexcat/probvec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "flexcat/error.hpp"

namespace flexcat {

std::size_t ProbVec::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](double v) { return v > 0.0; }));
}

ProbVec ProbVec::padded(std::size_t d) const {
    if (d <= dim()) return *this;
    std::vector<double> out(values_);
    out.resize(d, 0.0);
    return ProbVec(detail::TrustedTag{}, std::move(out));
}

ProbVec make_prob_vec(std::span<const double> raw) {
    if (raw.empty()) throw Error(ErrorKind::EmptyVector, "probability vector is empty");
    std::vector<double> values(raw.begin(), raw.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double &v = values[i];
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::InvalidArgument, "entry " + std::to_string(i) + " is not finite");
        }
        if (v < -kZeroClamp) {
            throw Error(ErrorKind::NegativeEntry,
                        "entry " + std::to_string(i) + " = " + std::to_string(v) + " is negative");
        }
        if (std::abs(v) < kZeroClamp) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > kInputSumTolerance) {
        throw Error(ErrorKind::BadNormalization,
                    "entries sum to " + std::to_string(sum) + ", expected 1");
    }
    for (double &v : values) v /= sum;
    return ProbVec(detail::TrustedTag{}, std::move(values));
}

ProbVec make_prob_vec(std::initializer_list<double> raw) {
    return make_prob_vec(std::span<const double>(raw.begin(), raw.size()));
}

ProbVec uniform(std::size_t d) {
    if (d == 0) throw Error(ErrorKind::EmptyVector, "uniform vector of dimension 0");
    return ProbVec(detail::TrustedTag{}, std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

SchmidtVec SchmidtVec::from(std::span<const double> raw) { return sort_desc(make_prob_vec(raw)); }

SchmidtVec SchmidtVec::from(std::initializer_list<double> raw) {
    return sort_desc(make_prob_vec(raw));
}

SchmidtVec SchmidtVec::padded(std::size_t d) const {
    return SchmidtVec(detail::TrustedTag{}, probs_.padded(d));
}

SchmidtVec sort_desc(const ProbVec &p) {
    std::vector<double> values(p.begin(), p.end());
    std::stable_sort(values.begin(), values.end(), std::greater<>());
    return SchmidtVec(detail::TrustedTag{}, ProbVec(detail::TrustedTag{}, std::move(values)));
}

ProbVec tensor(const ProbVec &a, const ProbVec &b) {
    std::vector<double> out;
    out.reserve(a.dim() * b.dim());
    for (double ai : a) {
        for (double bj : b) out.push_back(ai * bj);
    }
    return ProbVec(detail::TrustedTag{}, std::move(out));
}

SchmidtVec tensor_sorted(const SchmidtVec &a, const SchmidtVec &b) {
    return sort_desc(tensor(a.probs(), b.probs()));
}

double tail_sum(const SchmidtVec &x, std::size_t l) {
    if (l < 1 || l > x.dim()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "tail index " + std::to_string(l) + " outside 1.." + std::to_string(x.dim()));
    }
    if (l == 1) return 1.0;
    double sum = 0.0;
    // Smallest entries first keeps small tails accurate.
    for (std::size_t i = x.dim(); i >= l; --i) sum += x[i - 1];
    return sum;
}

}  // namespace flexcat
