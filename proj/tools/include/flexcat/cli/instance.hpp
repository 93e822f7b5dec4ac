#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flexcat::cli {

using Vector = std::vector<double>;

/// JSON instance file. Every key is optional; unknown keys are rejected.
struct InstanceFile {
    std::optional<Vector> x;
    std::optional<Vector> y;
    std::optional<Vector> levels_s;
    std::optional<Vector> levels_c;
    std::optional<double> beta;
    std::optional<std::vector<Vector>> cycle;
};

/// Throws flexcat::Error(InvalidArgument) on malformed JSON, unknown keys or
/// wrong types, and the make_prob_vec errors on invalid vectors.
InstanceFile parse_instance(std::string_view json_text);
InstanceFile load_instance(const std::filesystem::path &path);

/// Probability vectors validate; levels_s matches x and y, levels_c matches
/// every cycle state.
void validate(const InstanceFile &inst);

/// "0.5,0.5"
Vector parse_vector(std::string_view text);
/// "0.7,0.3;0.6,0.4"
std::vector<Vector> parse_cycle(std::string_view text);
/// "lo:hi"
std::pair<double, double> parse_range(std::string_view text);

}  // namespace flexcat::cli
