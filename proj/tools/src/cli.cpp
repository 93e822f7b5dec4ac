#include "flexcat/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "flexcat/cli/instance.hpp"
#include "flexcat/cli/landscape_io.hpp"
#include "flexcat/cli/reproduce.hpp"
#include "flexcat/conditions.hpp"
#include "flexcat/conjecture.hpp"
#include "flexcat/error.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/search.hpp"
#include "flexcat/thermo.hpp"

namespace flexcat::cli {

namespace {

using Json = nlohmann::ordered_json;

/// What a subcommand hands back: exit code, JSON form, and the text form.
struct Outcome {
    int code = kExitOk;
    Json json = Json::object();
    std::string text;
};

std::string f6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(std::span<const double> v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += f6(v[i]);
    }
    return s;
}

/// Scalar and flat values, formatted per the output rules.
std::string render_value(const Json &j) {
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
    if (j.is_number()) return f6(j.get<double>());
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "n/a";
    if (j.is_array()) {
        if (j.empty()) return "none";
        std::string s;
        const char sep = j.front().is_array() ? ';' : ',';
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? std::string(1, sep) : "") + render_value(j[i]);
        return s;
    }
    return j.dump();
}

/// `key: value` lines; nested objects get dotted keys, arrays of objects get indices.
void render_lines(const Json &j, const std::string &prefix, std::string &out) {
    for (const auto &[key, value] : j.items()) {
        const std::string name = prefix + key;
        if (value.is_object()) {
            render_lines(value, name + ".", out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                render_lines(value[i], name + "[" + std::to_string(i) + "].", out);
            }
        } else {
            out += name + ": " + render_value(value) + "\n";
        }
    }
}

Json to_json(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

struct Inputs {
    std::string x;
    std::string y;
    std::string file;
    std::string cycle;
    std::string levels_s;
    std::string levels_c;
    double beta = 0.0;
    CLI::Option *beta_opt = nullptr;
};

/// File first, then inline flags on top.
InstanceFile resolve(const Inputs &in) {
    InstanceFile inst;
    if (!in.file.empty()) inst = load_instance(in.file);
    if (!in.x.empty()) inst.x = parse_vector(in.x);
    if (!in.y.empty()) inst.y = parse_vector(in.y);
    if (!in.cycle.empty()) inst.cycle = parse_cycle(in.cycle);
    if (!in.levels_s.empty()) inst.levels_s = parse_vector(in.levels_s);
    if (!in.levels_c.empty()) inst.levels_c = parse_vector(in.levels_c);
    if (in.beta_opt && in.beta_opt->count() > 0) inst.beta = in.beta;
    validate(inst);
    return inst;
}

template <class T>
const T &need(const std::optional<T> &v, const char *what) {
    if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + what);
    return *v;
}

Cycle schmidt_cycle(const std::vector<Vector> &states) {
    std::vector<SchmidtVec> out;
    for (const Vector &s : states) out.push_back(SchmidtVec::from(s));
    return Cycle(std::move(out));
}

ThermoCycle thermo_cycle(const std::vector<Vector> &states) {
    std::vector<ProbVec> out;
    for (const Vector &s : states) out.push_back(make_prob_vec(s));
    return ThermoCycle(std::move(out));
}

Outcome boolean(const char *key, bool value) {
    Outcome o;
    o.json[key] = value;
    o.text = value ? "true\n" : "false\n";
    o.code = value ? kExitOk : kExitFalse;
    return o;
}

GridSpec grid_from(std::size_t steps, const std::string &range, double lo, double hi) {
    if (!range.empty()) std::tie(lo, hi) = parse_range(range);
    GridSpec spec = GridSpec::square(lo, hi, steps);
    spec.validate();
    return spec;
}

void write_file(const std::string &path, const std::function<void(std::ostream &)> &body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    body(f);
    if (!f) throw Error(ErrorKind::InvalidArgument, "write failed for " + path);
}

Json grid_json(const GridSpec &spec) {
    return {{"steps", spec.steps1}, {"range", {spec.lo1, spec.hi1}}};
}

// Subcommands.

Outcome cmd_check_major(const InstanceFile &in) {
    const SchmidtVec x = SchmidtVec::from(need(in.x, "--x"));
    const SchmidtVec y = SchmidtVec::from(need(in.y, "--y"));
    return boolean("majorized", is_majorized_by(x, y));
}

Outcome cmd_vidal(const InstanceFile &in) {
    const double p = vidal_probability(SchmidtVec::from(need(in.x, "--x")), SchmidtVec::from(need(in.y, "--y")));
    Outcome o;
    o.json["probability"] = p;
    o.text = f6(p) + "\n";
    return o;
}

Outcome cmd_check_flex(const InstanceFile &in) {
    const SchmidtVec x = SchmidtVec::from(need(in.x, "--x"));
    const SchmidtVec y = SchmidtVec::from(need(in.y, "--y"));
    return boolean("feasible", flexible_cycle_ok(x, y, schmidt_cycle(need(in.cycle, "--cycle"))));
}

Outcome cmd_check_thermo(const InstanceFile &in) {
    const ProbVec p = make_prob_vec(need(in.x, "--x"));
    const ProbVec q = make_prob_vec(need(in.y, "--y"));
    const double beta = need(in.beta, "--beta");
    const GibbsVec gs = gibbs_vector(need(in.levels_s, "--levels-s"), beta);
    if (!in.cycle) return boolean("thermo_majorizes", thermo_majorizes(p, q, gs));
    const GibbsVec gc = gibbs_vector(need(in.levels_c, "--levels-c"), beta);
    return boolean("feasible", thermo_flexible_ok(p, q, gs, thermo_cycle(*in.cycle), gc));
}

Outcome cmd_gibbs(const InstanceFile &in) {
    const Vector &levels = need(in.levels_s, "--levels");
    const double beta = need(in.beta, "--beta");
    const GibbsVec g = gibbs_vector(levels, beta);
    Outcome o;
    o.json["levels"] = levels;
    o.json["beta"] = beta;
    o.json["gibbs"] = to_json(g.values());
    o.text = join(g.values()) + "\n";
    return o;
}

struct ScanArgs {
    std::size_t grid = 0;
    CLI::Option *grid_opt = nullptr;
    std::string range;
    std::string out;
    std::string pgm;
};

void export_grid(const LandscapeGrid &grid, const ScanArgs &args, bool json, Outcome &o, std::string summary) {
    if (!args.out.empty()) write_file(args.out, [&](std::ostream &f) { write_csv(f, grid); });
    if (!args.pgm.empty()) write_file(args.pgm, [&](std::ostream &f) { write_pgm(f, grid); });
    if (args.out.empty() && !json) {
        std::ostringstream csv;
        write_csv(csv, grid);
        o.text = csv.str();
    } else {
        o.text = std::move(summary);
    }
}

Outcome cmd_scan_fig1(const InstanceFile &in, const ScanArgs &args, bool json) {
    const SchmidtVec x = SchmidtVec::from(need(in.x, "--x"));
    const SchmidtVec y = SchmidtVec::from(need(in.y, "--y"));
    const GridSpec spec = grid_from(args.grid_opt->count() ? args.grid : 201, args.range, 0.0, 0.5);
    const LandscapeGrid grid = scan_pflex_landscape(x, y, spec);
    const auto [a, b] = grid.argmax();
    const std::size_t d = grid.diagonal_argmax();
    Outcome o;
    o.json["grid"] = grid_json(spec);
    o.json["argmax"] = {{"c1", spec.axis1(a)}, {"c2", spec.axis2(b)}, {"value", grid.at(a, b)}};
    o.json["diagonal_argmax"] = {{"c", spec.axis1(d)}, {"value", grid.at(d, d)}};
    std::string summary = "argmax c1=" + f6(spec.axis1(a)) + " c2=" + f6(spec.axis2(b)) +
                          " value=" + f6(grid.at(a, b)) + "\n" + "diagonal c=" + f6(spec.axis1(d)) +
                          " value=" + f6(grid.at(d, d)) + "\n";
    export_grid(grid, args, json, o, std::move(summary));
    return o;
}

Outcome cmd_scan_fig2(const InstanceFile &in, const ScanArgs &args, bool json) {
    const ProbVec p = make_prob_vec(need(in.x, "--x"));
    const ProbVec q = make_prob_vec(need(in.y, "--y"));
    const GridSpec spec = grid_from(args.grid_opt->count() ? args.grid : 401, args.range, 0.0, 1.0);
    const LandscapeGrid grid = scan_thermo_feasibility(p, q, need(in.levels_s, "--levels-s"),
                                                       need(in.levels_c, "--levels-c"), need(in.beta, "--beta"), spec);
    const std::size_t feasible = grid.count_nonzero();
    Outcome o;
    o.json["grid"] = grid_json(spec);
    o.json["feasible_cells"] = feasible;
    o.json["total_cells"] = grid.values.size();
    export_grid(grid, args, json, o,
                "feasible_cells " + std::to_string(feasible) + " of " + std::to_string(grid.values.size()) + "\n");
    o.code = feasible > 0 ? kExitOk : kExitFalse;
    return o;
}

struct BestArgs {
    bool standard = false;
    bool flexible = false;
    double resolution = 0.0025;
};

Outcome cmd_best_catalyst(const InstanceFile &in, const BestArgs &best, const ScanArgs &scan) {
    if (best.standard == best.flexible) {
        throw Error(ErrorKind::InvalidArgument, "pass exactly one of --standard and --flexible");
    }
    const SchmidtVec x = SchmidtVec::from(need(in.x, "--x"));
    const SchmidtVec y = SchmidtVec::from(need(in.y, "--y"));
    Outcome o;
    if (best.standard) {
        const OptResult r = best_standard(x, y, best.resolution);
        o.json["mode"] = "standard";
        o.json["params"] = r.params;
        o.json["value"] = r.value;
        o.text = "c=" + f6(r.params[0]) + " value=" + f6(r.value) + "\n";
    } else {
        const GridSpec spec = grid_from(scan.grid_opt->count() ? scan.grid : 201, scan.range, 0.0, 0.5);
        const OptResult r = best_flexible(x, y, spec);
        o.json["mode"] = "flexible";
        o.json["params"] = r.params;
        o.json["value"] = r.value;
        o.text = "c1=" + f6(r.params[0]) + " c2=" + f6(r.params[1]) + " value=" + f6(r.value) + "\n";
    }
    return o;
}

template <class F>
Json guarded(F &&f) {
    try {
        return Json(f());
    } catch (const Error &e) {
        return Json("n/a (" + std::string(to_string(e.kind())) + ")");
    }
}

Outcome cmd_conditions(const InstanceFile &in) {
    const SchmidtVec x = SchmidtVec::from(need(in.x, "--x"));
    const SchmidtVec y = SchmidtVec::from(need(in.y, "--y"));
    const ViolationReport report = violation_indices(x, y);
    Json j;
    j["majorized"] = is_majorized_by(x, y);
    j["incomparable"] = incomparable(x, y);
    j["violation_indices"] = report.indices;
    j["m"] = report.m() ? Json(*report.m()) : Json();
    j["n"] = report.n_max() ? Json(*report.n_max()) : Json();
    j["endpoint_conditions"] = guarded([&] { return endpoint_conditions_ok(x, y); });
    if (x.dim() == 3 && y.dim() == 3) j["d3_no_go"] = d3_no_go(x, y);
    j["ratio_threshold"] = guarded([&] { return largest_to_smallest_threshold(y, report); });
    j["adjacent_threshold"] = guarded([&] { return adjacent_ratio_threshold(y, report); });

    if (in.cycle) {
        const Cycle cycle = schmidt_cycle(*in.cycle);
        const bool feasible = flexible_cycle_ok(x, y, cycle);
        j["flexible_cycle_ok"] = feasible;
        j["per_step_probability"] = per_step_probability(x, y, cycle);
        j["support_size_uniform"] = support_size_uniform(cycle);
        j["boundary_ratios_ok"] = guarded([&] { return boundary_ratios_ok(x, y, cycle); });
        j["ratio_bound_holds"] = guarded([&] { return ratio_bound_holds(cycle, y, report); });
        Json ratios = Json::array();
        Json adjacent_ok = Json::array();
        for (const SchmidtVec &c : cycle) {
            ratios.push_back(max_adjacent_ratio(c));
            adjacent_ok.push_back(guarded([&] { return adjacent_ratio_bound_ok(c, y, report); }));
        }
        j["max_adjacent_ratio"] = ratios;
        j["adjacent_ratio_bound_ok"] = adjacent_ok;
        j["k2_standard_witness"] = guarded([&]() -> Json {
            const auto w = k2_standard_witness(cycle, x, y);
            return w ? Json(*w) : Json("none");
        });
        j["boundary_rigidity"] = guarded([&] { return boundary_rigidity_holds(x, y, cycle); });
    }
    Outcome o;
    o.json = j;
    render_lines(j, "", o.text);
    return o;
}

Outcome cmd_conjecture(const ConjectureOptions &opt) {
    const ConjectureReport r = conjecture_search(opt);
    Json j;
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    j["d"] = opt.d;
    j["k"] = opt.k;
    j["n"] = opt.n;
    j["resolution"] = opt.resolution;
    j["lattice_size"] = r.lattice_size;
    j["sampling_attempts"] = r.sampling_attempts;
    j["flexible_feasible"] = r.flexible_feasible;
    j["standard_on_lattice"] = r.standard_on_lattice;
    j["standard_after_refinement"] = r.standard_after_refinement;
    j["candidate_count"] = r.candidates.size();
    Json cands = Json::array();
    for (const ConjectureCandidate &c : r.candidates) {
        Json cycle = Json::array();
        for (const SchmidtVec &s : c.cycle) cycle.push_back(to_json(s.values()));
        cands.push_back({{"trial", c.trial},
                         {"x", to_json(c.x.values())},
                         {"y", to_json(c.y.values())},
                         {"cycle", cycle},
                         {"best_standard", to_json(c.best_standard.values())},
                         {"best_standard_margin", c.best_standard_margin}});
    }
    j["candidates"] = cands;
    Outcome o;
    o.json = j;
    render_lines(j, "", o.text);
    o.code = r.candidates.empty() ? kExitOk : kExitFalse;
    return o;
}

Outcome cmd_reproduce(bool all) {
    const std::vector<ReproRow> rows = reproduce_rows(all);
    Outcome o;
    bool ok = true;
    Json jr = Json::array();
    std::size_t width = 8;
    for (const ReproRow &r : rows) width = std::max(width, r.quantity.size());
    char line[256];
    std::snprintf(line, sizeof line, "%-*s  %-18s  %-12s  %s\n", static_cast<int>(width), "quantity", "expected",
                  "got", "status");
    o.text = line;
    for (const ReproRow &r : rows) {
        ok = ok && r.pass;
        jr.push_back({{"quantity", r.quantity}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
        std::snprintf(line, sizeof line, "%-*s  %-18s  %-12s  %s\n", static_cast<int>(width), r.quantity.c_str(),
                      r.expected.c_str(), r.got.c_str(), r.pass ? "PASS" : "FAIL");
        o.text += line;
    }
    o.json["rows"] = jr;
    o.json["all_pass"] = ok;
    o.code = ok ? kExitOk : kExitFalse;
    return o;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Catalysis and thermo-majorization toolkit", "flexcat"};
    app.require_subcommand(1);

    Inputs in;
    bool json = false;
    ScanArgs scan;
    BestArgs best;
    ConjectureOptions conj;
    bool all = false;

    auto add_json = [&](CLI::App *s) { s->add_flag("--json", json, "Print one JSON object"); };
    auto add_xy = [&](CLI::App *s) {
        s->add_option("--x", in.x, "First vector, comma separated");
        s->add_option("--y", in.y, "Second vector, comma separated");
        s->add_option("--file", in.file, "JSON instance file");
        add_json(s);
    };
    auto add_cycle = [&](CLI::App *s) { s->add_option("--cycle", in.cycle, "Catalyst states, e.g. 0.7,0.3;0.6,0.4"); };
    auto add_thermo = [&](CLI::App *s) {
        s->add_option("--levels-s", in.levels_s, "System energy levels");
        s->add_option("--levels-c", in.levels_c, "Catalyst energy levels");
        in.beta_opt = s->add_option("--beta", in.beta, "Inverse temperature");
    };
    auto add_grid = [&](CLI::App *s) {
        scan.grid_opt = s->add_option("--grid", scan.grid, "Points per axis");
        s->add_option("--range", scan.range, "Axis range lo:hi");
    };

    auto *check_major = app.add_subcommand("check-major", "Is x majorized by y");
    add_xy(check_major);
    auto *vidal = app.add_subcommand("vidal", "Optimal conversion probability x -> y");
    add_xy(vidal);
    auto *check_flex = app.add_subcommand("check-flex", "Is the cycle a flexible catalyst for x -> y");
    add_xy(check_flex);
    add_cycle(check_flex);
    auto *check_thermo = app.add_subcommand("check-thermo", "Thermo-majorization, or a flexible thermal cycle with --cycle");
    add_xy(check_thermo);
    add_cycle(check_thermo);
    add_thermo(check_thermo);
    auto *gibbs = app.add_subcommand("gibbs", "Gibbs vector of energy levels");
    gibbs->add_option("--levels,--levels-s", in.levels_s, "Energy levels");
    in.beta_opt = gibbs->add_option("--beta", in.beta, "Inverse temperature");
    gibbs->add_option("--file", in.file, "JSON instance file");
    add_json(gibbs);

    // Every subcommand registers its own --beta; remember each to pick the parsed one.
    std::vector<CLI::Option *> beta_opts{check_thermo->get_option("--beta"), gibbs->get_option("--beta")};
    std::vector<CLI::Option *> grid_opts;

    auto *fig1 = app.add_subcommand("scan-fig1", "Per-step probability landscape of qubit 2-cycles");
    add_xy(fig1);
    add_grid(fig1);
    grid_opts.push_back(scan.grid_opt);
    fig1->add_option("--out", scan.out, "CSV output path");
    fig1->add_option("--pgm", scan.pgm, "PGM image path");
    auto *fig2 = app.add_subcommand("scan-fig2", "Feasibility landscape of thermal qubit 2-cycles");
    add_xy(fig2);
    add_thermo(fig2);
    beta_opts.push_back(in.beta_opt);
    add_grid(fig2);
    grid_opts.push_back(scan.grid_opt);
    fig2->add_option("--out", scan.out, "CSV output path");
    fig2->add_option("--pgm", scan.pgm, "PGM image path");

    auto *best_cat = app.add_subcommand("best-catalyst", "Best qubit catalyst or 2-cycle for SLOCC conversion");
    add_xy(best_cat);
    best_cat->add_flag("--standard", best.standard, "Constant catalyst");
    best_cat->add_flag("--flexible", best.flexible, "Two-step cycle");
    best_cat->add_option("--resolution", best.resolution, "Diagonal scan pitch for --standard");
    add_grid(best_cat);
    grid_opts.push_back(scan.grid_opt);

    auto *conditions = app.add_subcommand("conditions", "Necessary conditions and ratio bounds");
    add_xy(conditions);
    add_cycle(conditions);

    auto *conjecture = app.add_subcommand("conjecture", "Random search for flexible-only conversions");
    conjecture->add_option("--trials", conj.trials, "Number of random pairs");
    conjecture->add_option("--seed", conj.seed, "Base seed");
    conjecture->add_option("--d", conj.d, "System dimension");
    conjecture->add_option("--resolution", conj.resolution, "Catalyst lattice pitch");
    conjecture->add_option("--k", conj.k, "Catalyst dimension");
    conjecture->add_option("--n", conj.n, "Cycle length");
    add_json(conjecture);

    auto *reproduce = app.add_subcommand("reproduce", "Check every expected value of the reference instances");
    reproduce->add_flag("--all", all, "Include the 1000-trial conjecture run");
    add_json(reproduce);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    for (CLI::Option *b : beta_opts) {
        if (b->count() > 0) in.beta_opt = b;
    }
    for (CLI::Option *g : grid_opts) {
        if (g->count() > 0) scan.grid_opt = g;
    }

    try {
        Outcome o;
        if (app.got_subcommand(conjecture)) {
            o = cmd_conjecture(conj);
        } else if (app.got_subcommand(reproduce)) {
            o = cmd_reproduce(all);
        } else {
            const InstanceFile inst = resolve(in);
            if (app.got_subcommand(check_major)) o = cmd_check_major(inst);
            else if (app.got_subcommand(vidal)) o = cmd_vidal(inst);
            else if (app.got_subcommand(check_flex)) o = cmd_check_flex(inst);
            else if (app.got_subcommand(check_thermo)) o = cmd_check_thermo(inst);
            else if (app.got_subcommand(gibbs)) o = cmd_gibbs(inst);
            else if (app.got_subcommand(fig1)) o = cmd_scan_fig1(inst, scan, json);
            else if (app.got_subcommand(fig2)) o = cmd_scan_fig2(inst, scan, json);
            else if (app.got_subcommand(best_cat)) o = cmd_best_catalyst(inst, best, scan);
            else if (app.got_subcommand(conditions)) o = cmd_conditions(inst);
        }
        if (json) {
            out << o.json.dump() << '\n';
        } else {
            out << o.text;
        }
        return o.code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace flexcat::cli
