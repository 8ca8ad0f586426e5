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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mespin/cam_array.hpp"
#include "mespin/device.hpp"
#include "mespin/magnetodynamics.hpp"
#include "mespin/memory_array.hpp"
#include "mespin/transport.hpp"

namespace mespin {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Linear or logarithmic sweep specification.
struct SweepSpec {
    double from = 0.0;
    double to = 1.0;
    int steps = 2;
    bool log_scale = false;

    std::vector<double> values() const;
    static SweepSpec from_json(const nlohmann::json& j, const std::string& scope);
};

// Command-line / caller knobs layered on top of the JSON config.
struct RunOptions {
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed; // overrides config seed
    std::optional<int> trials;         // overrides config n_trials
    int workers = 0;                   // 0 = hardware concurrency
};

struct ExperimentResult {
    bool ok = true;
    std::string summary;
    std::vector<std::string> files; // paths written
};

// Strict parsers: unknown keys are rejected with the offending scope.key.
MagnetParams parse_magnet(const nlohmann::json& j, const std::string& scope);
MEStimulus parse_stimulus(const nlohmann::json& j, const std::string& scope);
SimConfig parse_sim(const nlohmann::json& j, const std::string& scope);
LeadParams parse_leads(const nlohmann::json& j, const std::string& scope);
BarrierStack parse_stack(const nlohmann::json& j, const std::string& scope);
CapacitorGeometry parse_capacitor(const nlohmann::json& j, const std::string& scope);

ExperimentResult run_trajectory(const nlohmann::json& cfg, const RunOptions& opts);
ExperimentResult run_switchprob(const nlohmann::json& cfg, const RunOptions& opts);
ExperimentResult run_tmr_sweep(const nlohmann::json& cfg, const RunOptions& opts);
ExperimentResult run_dualport_demo(const nlohmann::json& cfg, const RunOptions& opts);
ExperimentResult run_cam_demo(const nlohmann::json& cfg, const RunOptions& opts);
ExperimentResult run_memory_report(const nlohmann::json& cfg, const RunOptions& opts);

// Dispatch by experiment name (the CLI subcommand).
ExperimentResult run_experiment(const std::string& name, const nlohmann::json& cfg,
                                const RunOptions& opts);

} // namespace mespin
