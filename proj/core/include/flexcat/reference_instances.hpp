#pragma once

#include <array>
#include <vector>

// Reference instances with their expected values. Entries are given to
// four decimals; each vector sums to one within the input tolerance.

namespace flexcat::reference {

// d = 4 pair where a two-step k = 2 cycle beats every k = 2 standard
// catalyst in per-step SLOCC success probability.
inline const std::vector<double> kSloccX{0.5789, 0.2691, 0.0872, 0.0648};
inline const std::vector<double> kSloccY{0.4937, 0.2468, 0.2043, 0.0552};
inline constexpr double kSloccBaseProbability = 0.5857;
inline constexpr double kSloccStandardParam = 0.2651;
inline constexpr double kSloccStandardValue = 0.7299;
inline constexpr std::array<double, 2> kSloccFlexibleParams{0.3936, 0.2149};
inline constexpr double kSloccFlexibleValue = 0.7666;

// d = 4 pair whose flexible cycle breaks the adjacent-component ratio bound
// that standard catalysts obey.
inline const std::vector<double> kAdjacentX{0.5064, 0.2565, 0.1401, 0.0970};
inline const std::vector<double> kAdjacentY{0.5474, 0.2048, 0.1903, 0.0575};
inline const std::vector<double> kAdjacentC1{0.6333, 0.2667, 0.1000};
inline const std::vector<double> kAdjacentC2{0.6167, 0.2833, 0.1000};
inline constexpr double kAdjacentThreshold = 2.673;
inline constexpr double kAdjacentC2Ratio = 2.833;

// Qutrit thermal transition impossible with any constant qubit catalyst of
// levels {0, 1} but enabled by a two-step cycle.
inline const std::vector<double> kThermoP{0.09, 0.53, 0.38};
inline const std::vector<double> kThermoQ{0.11, 0.75, 0.14};
inline const std::vector<double> kThermoLevelsS{0.0, 1.0, 2.0};
inline const std::vector<double> kThermoLevelsC{0.0, 1.0};
inline const std::vector<double> kThermoLevelsCDegenerate{0.0, 0.0};
inline constexpr double kThermoBeta = 1.0;
inline const std::vector<double> kThermoC1{0.82, 0.18};
inline const std::vector<double> kThermoC2{0.59, 0.41};

}  // namespace flexcat::reference
