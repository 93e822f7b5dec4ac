#include "flexcat/cli/landscape_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "flexcat/cli/instance.hpp"
#include "flexcat/error.hpp"

namespace flexcat::cli {

void write_csv(std::ostream &out, const LandscapeGrid &grid) {
    out << "c1,c2,value\n";
    char line[96];
    for (std::size_t a = 0; a < grid.spec.steps1; ++a) {
        for (std::size_t b = 0; b < grid.spec.steps2; ++b) {
            std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", grid.spec.axis1(a), grid.spec.axis2(b),
                          grid.at(a, b));
            out << line;
        }
    }
}

void write_pgm(std::ostream &out, const LandscapeGrid &grid) {
    const std::size_t w = grid.spec.steps1;
    const std::size_t h = grid.spec.steps2;
    const auto [lo_it, hi_it] = std::minmax_element(grid.values.begin(), grid.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    out << "P5\n" << w << ' ' << h << "\n255\n";
    std::string row(w, '\0');
    for (std::size_t b = 0; b < h; ++b) {
        for (std::size_t a = 0; a < w; ++a) {
            const double v = grid.at(a, b);
            double level;
            if (hi > lo) {
                level = std::round(255.0 * (v - lo) / (hi - lo));
            } else {
                level = v > 0.0 ? 255.0 : 0.0;
            }
            row[a] = static_cast<char>(static_cast<unsigned char>(level));
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

std::vector<CsvCell> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "c1,c2,value") {
        throw Error(ErrorKind::InvalidArgument, "landscape CSV must start with 'c1,c2,value'");
    }
    std::vector<CsvCell> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const Vector v = parse_vector(line);
        if (v.size() != 3) throw Error(ErrorKind::InvalidArgument, "landscape row needs three fields: " + line);
        cells.push_back({v[0], v[1], v[2]});
    }
    return cells;
}

}  // namespace flexcat::cli
