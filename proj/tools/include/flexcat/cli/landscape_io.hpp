#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "flexcat/search.hpp"

namespace flexcat::cli {

/// Header `c1,c2,value`, then one row per cell in row-major order, 6 decimals.
void write_csv(std::ostream &out, const LandscapeGrid &grid);

/// Binary 8-bit P5 image, values min-max scaled. Column = c1 index,
/// row 0 = lowest c2. A constant grid maps to 255 if positive, else 0.
void write_pgm(std::ostream &out, const LandscapeGrid &grid);

struct CsvCell {
    double c1;
    double c2;
    double value;
};

/// Reads what write_csv produced. Throws InvalidArgument on a bad header or row.
std::vector<CsvCell> read_csv(std::istream &in);

}  // namespace flexcat::cli
