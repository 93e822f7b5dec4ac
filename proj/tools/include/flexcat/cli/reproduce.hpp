#pragma once

#include <string>
#include <vector>

namespace flexcat::cli {

struct ReproRow {
    std::string quantity;
    std::string expected;
    std::string got;
    bool pass = false;
};

/// Every expected value for the built-in reference instances, checked
/// against its tolerance. The 1000-trial conjecture run is included only
/// when `with_conjecture` is set.
std::vector<ReproRow> reproduce_rows(bool with_conjecture);

}  // namespace flexcat::cli
