#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flexcat/error.hpp"
#include "flexcat/probvec.hpp"

namespace flexcat {

/// Ordered catalyst states c_1..c_n of a common dimension with c_{n+1} = c_1.
/// Indexing wraps, so `cycle[i + 1]` is always the successor of `cycle[i]`.
template <class State>
class BasicCycle {
   public:
    explicit BasicCycle(std::vector<State> states) : states_(std::move(states)) {
        if (states_.empty()) {
            throw Error(ErrorKind::EmptyVector, "cycle needs at least one state");
        }
        for (const auto &s : states_) {
            if (s.dim() != states_.front().dim()) {
                throw Error(ErrorKind::DimensionMismatch,
                            "cycle states have dimensions " +
                                std::to_string(states_.front().dim()) + " and " +
                                std::to_string(s.dim()));
            }
        }
    }

    std::size_t length() const noexcept { return states_.size(); }
    std::size_t state_dim() const noexcept { return states_.front().dim(); }

    const State &operator[](std::size_t i) const { return states_[i % states_.size()]; }

    std::span<const State> states() const noexcept { return states_; }
    auto begin() const noexcept { return states_.begin(); }
    auto end() const noexcept { return states_.end(); }

   private:
    std::vector<State> states_;
};

using Cycle = BasicCycle<SchmidtVec>;
/// Thermal catalysts are indexed by energy level, so they stay unsorted.
using ThermoCycle = BasicCycle<ProbVec>;

}  // namespace flexcat
