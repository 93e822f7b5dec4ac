#include "flexcat/rng.hpp"

#include <cmath>
#include <vector>

#include "flexcat/error.hpp"

namespace flexcat {

namespace {

std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    // seed_seq's mixing is fully specified by the standard.
    std::seed_seq seq{lo32(seed), hi32(seed), lo32(index), hi32(index), 0x9e3779b9u};
    return Rng(seq);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::exponential() { return -std::log1p(-uniform()); }

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "below(0)");
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

ProbVec sample_dirichlet(Rng &rng, std::size_t d) {
    if (d == 0) throw Error(ErrorKind::EmptyVector, "Dirichlet sample of dimension 0");
    std::vector<double> w(d);
    double total = 0.0;
    do {
        total = 0.0;
        for (double &v : w) {
            v = rng.exponential();
            total += v;
        }
    } while (!(total > 0.0));
    for (double &v : w) v /= total;
    return make_prob_vec(w);
}

}  // namespace flexcat
