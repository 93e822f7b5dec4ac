#include "flexcat/cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flexcat/cli/instance.hpp"
#include "flexcat/cli/landscape_io.hpp"
#include "flexcat/conditions.hpp"
#include "flexcat/conjecture.hpp"
#include "flexcat/error.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/reference_instances.hpp"
#include "flexcat/search.hpp"
#include "flexcat/thermo.hpp"

using namespace flexcat;
namespace ref = flexcat::reference;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string instance(const char *name) { return std::string(FLEXCAT_INSTANCES_DIR) + "/" + name; }

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("flexcat_test_" + name);
}

std::string write_temp(const std::string &name, const std::string &content) {
    const auto p = temp_path(name);
    std::ofstream(p) << content;
    return p.string();
}

const std::string kSloccX = "0.5789,0.2691,0.0872,0.0648";
const std::string kSloccY = "0.4937,0.2468,0.2043,0.0552";

}  // namespace

TEST(cli_check_major, trivial_example) {
    const Result r = run({"check-major", "--x", "0.5,0.5", "--y", "1,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "true\n");
    const Result f = run({"check-major", "--x", "1,0", "--y", "0.5,0.5"});
    EXPECT_EQ(f.code, 2);
    EXPECT_EQ(f.out, "false\n");
}

TEST(cli_vidal, file_input_matches_library) {
    const Result r = run({"vidal", "--file", instance("slocc_d4.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.out), 0.5857, 1e-4);
    const double lib = vidal_probability(SchmidtVec::from(ref::kSloccX), SchmidtVec::from(ref::kSloccY));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f\n", lib);
    EXPECT_EQ(r.out, buf);

    const Result j = run({"vidal", "--file", instance("slocc_d4.json"), "--json"});
    EXPECT_EQ(json::parse(j.out)["probability"].get<double>(), lib);
}

TEST(cli_inputs, inline_overrides_file) {
    const Result r = run({"vidal", "--file", instance("slocc_d4.json"), "--y", kSloccX});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.000000\n");
}

TEST(cli_inputs, errors_exit_one) {
    EXPECT_EQ(run({"vidal", "--x", "0.5,0.6", "--y", "1,0"}).code, 1);
    EXPECT_EQ(run({"vidal", "--x", "0.5,abc", "--y", "1,0"}).code, 1);
    EXPECT_EQ(run({"vidal", "--x", "0.5,0.5"}).code, 1);
    EXPECT_EQ(run({"vidal", "--file", "/nonexistent/instance.json"}).code, 1);
    EXPECT_EQ(run({"no-such-command"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"vidal", "--bogus-flag", "1"}).code, 1);
    const Result r = run({"check-major", "--x", "1.1,-0.1", "--y", "1,0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("NegativeEntry"), std::string::npos);
}

TEST(cli_inputs, unknown_json_key_rejected) {
    const std::string path = write_temp("unknown.json", R"({"x":[0.5,0.5],"y":[1,0],"z":1})");
    const Result r = run({"check-major", "--file", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("unknown key"), std::string::npos);
}

TEST(cli_inputs, instance_validation) {
    EXPECT_THROW(cli::parse_instance(R"({"x":[0.5,0.5],"levels_s":[0,1,2]})"), Error);
    EXPECT_THROW(cli::parse_instance(R"({"cycle":[[0.5,0.5]],"levels_c":[0,1,2]})"), Error);
    EXPECT_THROW(cli::parse_instance(R"({"x":"0.5"})"), Error);
    EXPECT_THROW(cli::parse_instance(R"([1,2])"), Error);
    EXPECT_THROW(cli::parse_instance("{"), Error);
    const cli::InstanceFile ok = cli::parse_instance(R"({"x":[0.5,0.5],"beta":2})");
    EXPECT_EQ(ok.beta, 2.0);
    EXPECT_EQ(cli::parse_cycle("0.7,0.3;0.6,0.4").size(), 2u);
    EXPECT_EQ(cli::parse_range("0.1:0.4"), (std::pair<double, double>{0.1, 0.4}));
    EXPECT_THROW(cli::parse_range("0.1"), Error);
}

TEST(cli_check_flex, reference_cycle) {
    const Result r = run({"check-flex", "--file", instance("adjacent_ratio_d4.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "true\n");
    const Result f = run({"check-flex", "--x", kSloccX, "--y", kSloccY, "--cycle", "0.7,0.3;0.6,0.4"});
    EXPECT_EQ(f.code, 2);
    EXPECT_EQ(run({"check-flex", "--x", kSloccX, "--y", kSloccY}).code, 1);
}

TEST(cli_check_thermo, reference_instance) {
    const Result flex = run({"check-thermo", "--file", instance("thermo_qutrit.json")});
    EXPECT_EQ(flex.code, 0) << flex.err;
    EXPECT_EQ(flex.out, "true\n");
    const Result rev = run({"check-thermo", "--file", instance("thermo_qutrit.json"), "--cycle", "0.59,0.41;0.82,0.18"});
    EXPECT_EQ(rev.out, "true\n");
    const Result plain = run({"check-thermo", "--x", "0.09,0.53,0.38", "--y", "0.11,0.75,0.14", "--levels-s", "0,1,2",
                              "--beta", "1"});
    EXPECT_EQ(plain.code, 2);
    EXPECT_EQ(plain.out, "false\n");
}

TEST(cli_gibbs, formats_six_decimals) {
    const Result r = run({"gibbs", "--levels", "0,1,2", "--beta", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.665241,0.244728,0.090031\n");
    const Result j = run({"gibbs", "--levels", "0,0", "--beta", "3", "--json"});
    EXPECT_EQ(json::parse(j.out)["gibbs"], json::parse("[0.5,0.5]"));
    EXPECT_EQ(run({"gibbs", "--levels", "0,1", "--beta", "-1"}).code, 1);
}

TEST(cli_best_catalyst, matches_library) {
    const Result s = run({"best-catalyst", "--standard", "--file", instance("slocc_d4.json"), "--json"});
    ASSERT_EQ(s.code, 0) << s.err;
    const json js = json::parse(s.out);
    const OptResult lib = best_standard(SchmidtVec::from(ref::kSloccX), SchmidtVec::from(ref::kSloccY));
    EXPECT_EQ(js["params"][0].get<double>(), lib.params[0]);
    EXPECT_EQ(js["value"].get<double>(), lib.value);

    const Result f = run({"best-catalyst", "--flexible", "--file", instance("slocc_d4.json")});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(f.out.rfind("c1=", 0), 0u);
    EXPECT_EQ(run({"best-catalyst", "--file", instance("slocc_d4.json")}).code, 1);
    EXPECT_EQ(run({"best-catalyst", "--standard", "--flexible", "--file", instance("slocc_d4.json")}).code, 1);
}

TEST(cli_scan_fig1, csv_round_trip_and_pgm) {
    const std::string csv = temp_path("fig1.csv").string();
    const std::string pgm = temp_path("fig1.pgm").string();
    const Result r = run({"scan-fig1", "--file", instance("slocc_d4.json"), "--grid", "21", "--range", "0:0.5",
                          "--out", csv, "--pgm", pgm});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("argmax", 0), 0u);

    const LandscapeGrid grid = scan_pflex_landscape(SchmidtVec::from(ref::kSloccX), SchmidtVec::from(ref::kSloccY),
                                                    GridSpec::square(0.0, 0.5, 21));
    std::ifstream in(csv);
    const auto cells = cli::read_csv(in);
    ASSERT_EQ(cells.size(), grid.values.size());
    for (std::size_t a = 0; a < 21; ++a) {
        for (std::size_t b = 0; b < 21; ++b) {
            const auto &c = cells[a * 21 + b];
            EXPECT_NEAR(c.c1, grid.spec.axis1(a), 5e-7);
            EXPECT_NEAR(c.c2, grid.spec.axis2(b), 5e-7);
            EXPECT_NEAR(c.value, grid.at(a, b), 5e-7);
        }
    }

    std::ifstream img(pgm, std::ios::binary);
    std::string magic;
    std::size_t w = 0, h = 0, maxval = 0;
    img >> magic >> w >> h >> maxval;
    img.get();
    EXPECT_EQ(magic, "P5");
    EXPECT_EQ(w, 21u);
    EXPECT_EQ(h, 21u);
    EXPECT_EQ(maxval, 255u);
    std::vector<unsigned char> px(w * h);
    img.read(reinterpret_cast<char *>(px.data()), static_cast<std::streamsize>(px.size()));
    EXPECT_EQ(img.gcount(), static_cast<std::streamsize>(px.size()));
    const auto [a, b] = grid.argmax();
    EXPECT_EQ(px[b * w + a], 255);  // row index = c2 index, from the lowest c2
}

TEST(cli_scan_fig1, csv_to_stdout) {
    const Result r = run({"scan-fig1", "--x", kSloccX, "--y", kSloccY, "--grid", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    EXPECT_EQ(cli::read_csv(in).size(), 9u);
    EXPECT_EQ(run({"scan-fig1", "--x", kSloccX, "--y", kSloccY, "--range", "0:0.9"}).code, 1);
}

TEST(cli_scan_fig2, feasibility_counts) {
    const Result r = run({"scan-fig2", "--file", instance("thermo_qutrit.json"), "--grid", "101", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    const LandscapeGrid grid = scan_thermo_feasibility(make_prob_vec(ref::kThermoP), make_prob_vec(ref::kThermoQ),
                                                       ref::kThermoLevelsS, ref::kThermoLevelsC, 1.0,
                                                       GridSpec::square(0.0, 1.0, 101));
    EXPECT_EQ(j["feasible_cells"].get<std::size_t>(), grid.count_nonzero());

    const Result empty = run({"scan-fig2", "--file", instance("thermo_qutrit.json"), "--levels-c", "0,0", "--grid", "41",
                              "--json"});
    EXPECT_EQ(empty.code, 2);
    EXPECT_EQ(json::parse(empty.out)["feasible_cells"].get<std::size_t>(), 0u);
}

TEST(cli_conditions, reference_counterexample) {
    const Result r = run({"conditions", "--file", instance("adjacent_ratio_d4.json"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["violation_indices"], json::parse("[2]"));
    EXPECT_NEAR(j["adjacent_threshold"].get<double>(), 2.673, 1e-3);
    EXPECT_NEAR(j["max_adjacent_ratio"][1].get<double>(), 2.833, 1e-3);
    EXPECT_EQ(j["adjacent_ratio_bound_ok"][1].get<bool>(), false);
    EXPECT_TRUE(j["flexible_cycle_ok"].get<bool>());
    EXPECT_TRUE(j["ratio_bound_holds"].get<bool>());

    const Result text = run({"conditions", "--file", instance("adjacent_ratio_d4.json")});
    EXPECT_NE(text.out.find("violation_indices: 2\n"), std::string::npos);
    EXPECT_NE(text.out.find("adjacent_ratio_bound_ok: true,false\n"), std::string::npos);
}

TEST(cli_conditions, d3_pair) {
    const Result r = run({"conditions", "--x", "0.5,0.4,0.1", "--y", "0.6,0.2,0.2"});
    EXPECT_NE(r.out.find("d3_no_go: true\n"), std::string::npos);
}

TEST(cli_conjecture, deterministic_json) {
    const std::vector<std::string> args{"conjecture", "--trials", "30", "--seed", "4", "--resolution", "0.01", "--json"};
    const Result a = run(args);
    const Result b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const json j = json::parse(a.out);
    ConjectureOptions opt;
    opt.trials = 30;
    opt.seed = 4;
    opt.resolution = 0.01;
    const ConjectureReport rep = conjecture_search(opt);
    EXPECT_EQ(j["flexible_feasible"].get<std::size_t>(), rep.flexible_feasible);
    EXPECT_EQ(j["sampling_attempts"].get<std::size_t>(), rep.sampling_attempts);
    EXPECT_EQ(j["candidate_count"].get<std::size_t>(), 0u);
    EXPECT_EQ(run({"conjecture", "--d", "2"}).code, 1);
}

TEST(cli_reproduce, quick_table_passes) {
    const Result r = run({"reproduce"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("slocc P_base"), std::string::npos);
}

TEST(cli_help, exits_zero) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("check-major"), std::string::npos);
}
