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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mespin/magnetodynamics.hpp"
#include "mespin/transport.hpp"

namespace mespin {

// Raised when a read is attempted while a magnet has not settled into a
// P/AP state.
class SequencingFault : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Metal / ME-oxide / free-layer parallel-plate capacitor.
struct CapacitorGeometry {
    double area = std::numbers::pi * 25e-9 * 25e-9; // m^2
    double t_me = 5.0e-9;                           // m
    double eps_r = 500.0;

    double capacitance() const; // F
    void validate() const;
};

// Per-operation energy accounting. The labeled breakdown sums to
// write_energy_per_bit + read_energy_per_bit.
struct EnergyReport {
    double write_energy_per_bit = 0.0; // J
    double read_energy_per_bit = 0.0;  // J
    double op_duration = 0.0;          // s
    std::vector<std::pair<std::string, double>> breakdown;

    double breakdown_total() const;
};

// Voltage-written, resistively-read storage device: an MTJ whose free layer
// sits on an ME oxide. Positive write voltage targets AP, negative targets P
// (the stimulus axis defaults to -z against a +z pinned layer to realize
// that polarity convention). The logical state is latched from the
// magnetization at the end of each write pulse; retention between
// operations is not modeled.
struct MEMTJDevice {
    MagnetParams magnet;
    MagnetizationState state{{0.0, 0.0, 1.0}, 0.0};
    Vec3 pinned{0.0, 0.0, 1.0};
    BarrierStack stack;
    LeadParams leads;
    CapacitorGeometry cap;
    MEStimulus stimulus; // v_me is populated per write
    MagneticConfig stored = MagneticConfig::Parallel;
    bool settled = true;
    double settle_threshold = 0.9;

    // Cached junction resistances at zero bias, 300 K.
    double r_p = 0.0;
    double r_ap = 0.0;

    static MEMTJDevice with_defaults();
    void refresh_transport();
    double resistance() const { return stored == MagneticConfig::Parallel ? r_p : r_ap; }
};

struct WriteResult {
    MagneticConfig stored;
    bool settled;
    double write_energy; // J
};

struct ReadResult {
    MagneticConfig bit;
    double read_energy; // J
    double current;     // A
};

// Runs the stochastic magnetization dynamics under the ME field of `v` for
// `duration`, then latches the new state. Write energy is C V^2 (one full
// charge-discharge cycle of the ME capacitor).
WriteResult write_pulse(MEMTJDevice& dev, double v, double duration, const SimConfig& cfg);

// Resistive read through a series resistance. The bit is decided by
// comparing the cell current against the geometric-mean reference current.
ReadResult read(const MEMTJDevice& dev, double v_read, double t_read, double r_series);

// Two ME-driven free layers sharing one tunnel barrier. The relative
// configuration realizes XNOR of the drive polarities.
struct MEXNORDevice {
    MagnetParams magnet; // both layers
    MagnetizationState top{{0.0, 0.0, 1.0}, 0.0};
    MagnetizationState bottom{{0.0, 0.0, 1.0}, 0.0};
    CapacitorGeometry top_cap;
    CapacitorGeometry bottom_cap;
    BarrierStack stack;
    LeadParams leads;
    MEStimulus stimulus;
    bool top_settled = true;
    bool bottom_settled = true;
    double settle_threshold = 0.9;

    double r_p = 0.0;
    double r_ap = 0.0;

    static MEXNORDevice with_defaults();
    void refresh_transport();
    MagneticConfig config() const;
};

struct XnorWriteResult {
    MagneticConfig config;
    double write_energy; // J, both capacitors
};

// Drives each free layer with its own voltage for `duration`. A zero voltage
// holds that layer. `stochastic` runs the full thermal dynamics for both
// layers; otherwise the polarity shortcut is applied.
XnorWriteResult xnor_write(MEXNORDevice& dev, double v1, double v2, double duration,
                           const SimConfig& cfg, bool stochastic = false);

struct XnorReadResult {
    bool match; // P configuration, low resistance
    double resistance;
};

XnorReadResult xnor_read(const MEXNORDevice& dev, double v_read);

} // namespace mespin
