/* Copyright 2026 The mespin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "mespin/csv.hpp"
#include "mespin/experiments.hpp"

using namespace mespin;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("csv formatting round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 1.2573e6, -4.2e-21, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
        CHECK(std::stod(format_double17(v)) == v);
    }
}

TEST_CASE("csv writer/reader round trip") {
    CsvWriter w({"a", "b", "c"});
    w.add(1.5);
    w.add(std::string("x"));
    w.add(7);
    w.end_row();
    w.add(-2.25);
    w.add(std::string("y"));
    w.add(8);
    w.end_row();

    const CsvTable t = parse_csv(w.str());
    REQUIRE(t.header.size() == 3);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.column("b") == 1);
    CHECK(t.value(0, t.column("a")) == 1.5);
    CHECK(t.rows[1][1] == "y");
}

TEST_CASE("sweep specs") {
    SweepSpec lin{0.0, 1.0, 5, false};
    const auto lv = lin.values();
    REQUIRE(lv.size() == 5);
    CHECK(lv.front() == 0.0);
    CHECK(lv.back() == 1.0);
    CHECK(lv[2] == doctest::Approx(0.5));

    SweepSpec lg{1.0, 100.0, 3, true};
    const auto gv = lg.values();
    CHECK(gv[1] == doctest::Approx(10.0));

    CHECK_THROWS_AS(SweepSpec::from_json(json{{"from", 0.0}}, "s"), ConfigError);
    CHECK_THROWS_AS(
        SweepSpec::from_json(json{{"from", 0.0}, {"to", 1.0}, {"steps", 3}, {"bogus", 1}}, "s"),
        ConfigError);
}

TEST_CASE("config parsing rejects unknown keys with field-level scope") {
    CHECK_THROWS_WITH_AS(parse_magnet(json{{"msss", 1.0}}, "magnet"),
                         "magnet: unknown key 'msss'", ConfigError);
    CHECK_THROWS_AS(parse_stimulus(json{{"alpha_me", 1e-9}, {"alpha_me_over_c", 1.0}}, "s"),
                    ConfigError);
    CHECK_THROWS_AS(parse_stack(json{{"config", "X"}}, "s"), ConfigError);

    // Physical validation surfaces through the same error channel.
    CHECK_THROWS_AS(parse_magnet(json{{"ms", -5.0}}, "magnet"), ConfigError);
}

TEST_CASE("trajectory experiment writes a parsable deterministic csv") {
    TempDir dir("mespin_test_traj");
    RunOptions opts;
    opts.out_dir = (dir.path / "a").string();
    opts.seed = 4242;

    json cfg = {{"pulse", {{"v", 0.47}, {"equilibrate_s", 0.2e-9}, {"duration_s", 1.5e-9}}},
                {"sample_stride", 20}};
    const ExperimentResult res = run_trajectory(cfg, opts);
    CHECK(res.ok);
    CHECK(res.summary.find("reversal_time_s=") != std::string::npos);

    const CsvTable t = read_csv_file((dir.path / "a" / "trajectory.csv").string());
    REQUIRE(t.header == std::vector<std::string>{"t_s", "mx", "my", "mz"});
    REQUIRE(t.rows.size() > 10);
    for (std::size_t i = 0; i < t.rows.size(); i += 7) {
        const double mx = t.value(i, 1), my = t.value(i, 2), mz = t.value(i, 3);
        CHECK(std::abs(mx * mx + my * my + mz * mz - 1.0) < 1e-8);
    }

    opts.out_dir = (dir.path / "b").string();
    run_trajectory(cfg, opts);
    CHECK(read_file((dir.path / "a" / "trajectory.csv").string()) ==
          read_file((dir.path / "b" / "trajectory.csv").string()));
}

TEST_CASE("trajectory without drive reports no reversal") {
    TempDir dir("mespin_test_traj0");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    opts.seed = 7;
    json cfg = {{"pulse", {{"v", 0.0}, {"equilibrate_s", 0.0}, {"duration_s", 0.5e-9}}},
                {"magnet", {{"temperature", 0.0}}}};
    const ExperimentResult res = run_trajectory(cfg, opts);
    CHECK(res.summary.find("no reversal") != std::string::npos);
}

TEST_CASE("switchprob experiment emits sorted rows with intervals") {
    TempDir dir("mespin_test_sp");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    opts.seed = 11;
    opts.trials = 24;

    json cfg = {{"alpha_me_over_c", {1.0, 0.5}},
                {"v_sweep", {{"from", 0.0}, {"to", 0.4}, {"steps", 3}}},
                {"pulse_s", 2e-9}};
    const ExperimentResult res = run_switchprob(cfg, opts);
    CHECK(res.ok);

    const CsvTable t = read_csv_file((dir.path / "switchprob.csv").string());
    REQUIRE(t.rows.size() == 6);
    // Sorted by (alpha, v).
    CHECK(t.value(0, 1) == 0.5);
    CHECK(t.value(3, 1) == 1.0);
    CHECK(t.value(0, 0) == 0.0);
    CHECK(t.value(1, 0) == doctest::Approx(0.2));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        CHECK(t.value(r, 3) <= t.value(r, 2) + 1e-12); // ci_low <= p
        CHECK(t.value(r, 4) >= t.value(r, 2) - 1e-12); // ci_high >= p
        CHECK(t.value(r, 5) == 24);
    }
}

TEST_CASE("tmr sweep emits the documented columns") {
    TempDir dir("mespin_test_tmr");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    json cfg = {{"t_mgo_sweep", {{"from", 1.6e-9}, {"to", 2.0e-9}, {"steps", 3}}},
                {"w_over_l", {1.0, 4.0}}};
    const ExperimentResult res = run_tmr_sweep(cfg, opts);
    CHECK(res.ok);

    const CsvTable t = read_csv_file((dir.path / "tmr_sweep.csv").string());
    REQUIRE(t.header == std::vector<std::string>{"t_mgo_nm", "w_over_l", "r_p_ohm", "r_ap_ohm",
                                                 "tmr_device", "tmr_bitcell"});
    REQUIRE(t.rows.size() == 6);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        CHECK(t.value(r, 3) > t.value(r, 2));          // R_AP > R_P
        CHECK(t.value(r, 5) <= t.value(r, 4) + 1e-12); // bitcell <= device
    }
}

TEST_CASE("dualport demo emits per-op rows and succeeds") {
    TempDir dir("mespin_test_dp");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    const ExperimentResult res = run_dualport_demo(json::object(), opts);
    CHECK(res.ok);
    const CsvTable t = read_csv_file((dir.path / "dualport.csv").string());
    CHECK(t.header.front() == "op");
    CHECK(t.rows.size() >= 6);
}

TEST_CASE("dualport demo with a same-row request reports the port conflict") {
    TempDir dir("mespin_test_dpc");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    json cfg = {{"simultaneous", {{"write_row", 1}, {"read_row", 1}}}};
    const ExperimentResult res = run_dualport_demo(cfg, opts);
    CHECK(!res.ok);
    CHECK(res.summary.find("port-conflict") != std::string::npos);
}

TEST_CASE("cam demo emits match lines for the stored words") {
    TempDir dir("mespin_test_cam");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    const ExperimentResult res = run_cam_demo(json::object(), opts);
    CHECK(res.ok);
    const CsvTable t = read_csv_file((dir.path / "cam.csv").string());
    // Defaults: words {1010, 1100}, keys {1010, 1111}.
    REQUIRE(t.rows.size() == 4);
    const int ml = t.column("matchline");
    CHECK(t.rows[0][static_cast<std::size_t>(ml)] == "low");
    CHECK(t.rows[1][static_cast<std::size_t>(ml)] == "high");
    CHECK(t.rows[2][static_cast<std::size_t>(ml)] == "high");
    CHECK(t.rows[3][static_cast<std::size_t>(ml)] == "high");
}

TEST_CASE("memory report passes its three energy checks at the defaults") {
    TempDir dir("mespin_test_rep");
    RunOptions opts;
    opts.out_dir = dir.path.string();
    const ExperimentResult res = run_memory_report(json::object(), opts);
    CHECK(res.ok);
    CHECK(res.summary.find("PASS write_energy_fJ_per_bit") != std::string::npos);
    CHECK(res.summary.find("PASS read_energy_fJ_per_bit") != std::string::npos);
    CHECK(res.summary.find("PASS cam_read_energy_fJ_per_bit") != std::string::npos);
    CHECK(res.summary.find("FAIL") == std::string::npos);
}

TEST_CASE("unknown experiment names are rejected") {
    RunOptions opts;
    CHECK_THROWS_AS(run_experiment("bogus", json::object(), opts), ConfigError);
}
