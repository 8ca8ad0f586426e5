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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mespin/experiments.hpp"

namespace {

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open config file: " << path << "\n";
        std::exit(2);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(2);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mespin: magneto-electric spintronic memory simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int trials = 0;
    int workers = 0;

    const std::vector<std::string> experiments = {"trajectory",    "switchprob", "tmr-sweep",
                                                  "dualport-demo", "cam-demo",   "memory-report"};
    for (const auto& name : experiments) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON experiment configuration");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
            seed_given = true;
        });
        sub->add_option("--trials", trials, "Monte Carlo trials per point");
        sub->add_option("--workers", workers, "worker threads (0 = all cores)");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string name = app.get_subcommands().front()->get_name();

    mespin::RunOptions opts;
    opts.out_dir = out_dir;
    opts.workers = workers;
    if (trials > 0) opts.trials = trials;
    if (seed_given) {
        opts.seed = seed;
    } else if (const char* env = std::getenv("MESPIN_SEED")) {
        try {
            opts.seed = std::stoull(env);
        } catch (...) {
            std::cerr << "error: MESPIN_SEED is not a valid unsigned integer\n";
            return 2;
        }
    }

    try {
        const nlohmann::json cfg = load_config(config_path);
        const mespin::ExperimentResult res = mespin::run_experiment(name, cfg, opts);
        std::cout << res.summary;
        return res.ok ? 0 : 1;
    } catch (const mespin::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
