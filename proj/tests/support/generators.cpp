#include "generators.hpp"

#include <algorithm>
#include <utility>

namespace flexcat::testing {

namespace {

std::vector<double> t_transforms(Rng &rng, std::vector<double> v, std::size_t transforms) {
    if (v.size() < 2) return v;
    for (std::size_t n = 0; n < transforms; ++n) {
        const std::size_t i = rng.below(v.size());
        std::size_t j = rng.below(v.size() - 1);
        if (j >= i) ++j;
        const double t = rng.uniform();
        const double vi = v[i];
        const double vj = v[j];
        v[i] = t * vi + (1.0 - t) * vj;
        v[j] = (1.0 - t) * vi + t * vj;
    }
    return v;
}

}  // namespace

SchmidtVec random_schmidt(Rng &rng, std::size_t d) { return sort_desc(sample_dirichlet(rng, d)); }

ProbVec random_prob(Rng &rng, std::size_t d) { return sample_dirichlet(rng, d); }

SchmidtVec mix_down(Rng &rng, const SchmidtVec &y, std::size_t transforms) {
    auto v = t_transforms(rng, {y.begin(), y.end()}, transforms);
    return SchmidtVec::from(v);
}

ProbVec mix_down_unsorted(Rng &rng, const ProbVec &p, std::size_t transforms) {
    auto v = t_transforms(rng, {p.begin(), p.end()}, transforms);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return make_prob_vec(v);
}

std::vector<double> random_levels(Rng &rng, std::size_t d) {
    std::vector<double> e(d);
    for (double &v : e) v = 3.0 * rng.uniform();
    return e;
}

}  // namespace flexcat::testing
