#include "flexcat/cli/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flexcat/error.hpp"
#include "flexcat/probvec.hpp"

namespace flexcat::cli {

namespace {

using nlohmann::json;

Error bad(const std::string &msg) { return Error(ErrorKind::InvalidArgument, msg); }

Vector as_vector(const json &j, const std::string &key) {
    if (!j.is_array()) throw bad("'" + key + "' must be an array of numbers");
    Vector v;
    v.reserve(j.size());
    for (const json &e : j) {
        if (!e.is_number()) throw bad("'" + key + "' must be an array of numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw bad("not a number: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

InstanceFile parse_instance(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw bad(std::string("malformed instance file: ") + e.what());
    }
    if (!j.is_object()) throw bad("instance file must hold a JSON object");

    InstanceFile inst;
    for (const auto &[key, value] : j.items()) {
        if (key == "x") {
            inst.x = as_vector(value, key);
        } else if (key == "y") {
            inst.y = as_vector(value, key);
        } else if (key == "levels_s") {
            inst.levels_s = as_vector(value, key);
        } else if (key == "levels_c") {
            inst.levels_c = as_vector(value, key);
        } else if (key == "beta") {
            if (!value.is_number()) throw bad("'beta' must be a number");
            inst.beta = value.get<double>();
        } else if (key == "cycle") {
            if (!value.is_array()) throw bad("'cycle' must be an array of arrays");
            std::vector<Vector> states;
            for (const json &s : value) states.push_back(as_vector(s, "cycle"));
            inst.cycle = std::move(states);
        } else {
            throw bad("unknown key '" + key + "' in instance file");
        }
    }
    validate(inst);
    return inst;
}

InstanceFile load_instance(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw bad("cannot open instance file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void validate(const InstanceFile &inst) {
    if (inst.x) make_prob_vec(*inst.x);
    if (inst.y) make_prob_vec(*inst.y);
    if (inst.cycle) {
        if (inst.cycle->empty()) throw Error(ErrorKind::EmptyVector, "cycle has no states");
        for (const Vector &s : *inst.cycle) make_prob_vec(s);
    }
    if (inst.levels_s) {
        for (const auto *v : {&inst.x, &inst.y}) {
            if (*v && (*v)->size() != inst.levels_s->size()) {
                throw Error(ErrorKind::DimensionMismatch, "levels_s length differs from the system vectors");
            }
        }
    }
    if (inst.levels_c && inst.cycle) {
        for (const Vector &s : *inst.cycle) {
            if (s.size() != inst.levels_c->size()) {
                throw Error(ErrorKind::DimensionMismatch, "levels_c length differs from a cycle state");
            }
        }
    }
}

Vector parse_vector(std::string_view text) {
    Vector v;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        v.push_back(parse_double(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return v;
}

std::vector<Vector> parse_cycle(std::string_view text) {
    std::vector<Vector> states;
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = text.find(';', start);
        const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
        states.push_back(parse_vector(text.substr(start, end - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return states;
}

std::pair<double, double> parse_range(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw bad("range must look like lo:hi");
    return {parse_double(text.substr(0, colon)), parse_double(text.substr(colon + 1))};
}

}  // namespace flexcat::cli
