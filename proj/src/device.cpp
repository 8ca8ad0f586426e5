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
#include "mespin/device.hpp"

#include <cmath>

namespace mespin {

namespace {
constexpr double eps0 = 8.8541878128e-12; // F/m

Vec3 evolve_layer(const Vec3& m0, const MagnetParams& p, const MEStimulus& stim_template,
                  double v, double duration, const SimConfig& cfg) {
    MEStimulus stim = stim_template;
    stim.v_me = v;
    const Trajectory traj = simulate_trajectory(
        m0, p, StimulusSchedule::constant(stim), [&] {
            SimConfig c = cfg;
            c.duration = duration;
            return c;
        }(),
        TrajectoryOptions{.sample_stride = 1 << 30, .reversal_threshold = -2.0});
    const auto& last = traj.samples.back();
    return {last.mx, last.my, last.mz};
}

MagneticConfig latch(const Vec3& m, const Vec3& pinned) {
    return m.dot(pinned) >= 0.0 ? MagneticConfig::Parallel : MagneticConfig::AntiParallel;
}

} // namespace

double CapacitorGeometry::capacitance() const { return eps_r * eps0 * area / t_me; }

void CapacitorGeometry::validate() const {
    if (area <= 0.0 || t_me <= 0.0 || eps_r <= 0.0)
        throw std::invalid_argument("capacitor geometry must be positive");
}

double EnergyReport::breakdown_total() const {
    double sum = 0.0;
    for (const auto& [label, joules] : breakdown) sum += joules;
    return sum;
}

MEMTJDevice MEMTJDevice::with_defaults() {
    MEMTJDevice dev;
    // +V on the ME terminal drives the free layer toward -z, i.e. AP against
    // the +z pinned layer.
    dev.stimulus.axis = {0.0, 0.0, -1.0};
    dev.refresh_transport();
    return dev;
}

void MEMTJDevice::refresh_transport() {
    BarrierStack s = stack;
    s.config = MagneticConfig::Parallel;
    r_p = mtj_resistance(s, leads, 0.0, magnet.temperature);
    s.config = MagneticConfig::AntiParallel;
    r_ap = mtj_resistance(s, leads, 0.0, magnet.temperature);
}

WriteResult write_pulse(MEMTJDevice& dev, double v, double duration, const SimConfig& cfg) {
    if (duration <= 0.0) throw std::invalid_argument("write duration must be > 0");
    dev.cap.validate();

    dev.state.m = evolve_layer(dev.state.m, dev.magnet, dev.stimulus, v, duration, cfg);
    dev.state.t += duration;
    dev.stored = latch(dev.state.m, dev.pinned);
    dev.settled = std::abs(dev.state.m.dot(dev.pinned)) >= dev.settle_threshold;

    const double c = dev.cap.capacitance();
    const double energy = c * v * v;
    return {dev.stored, dev.settled, energy};
}

ReadResult read(const MEMTJDevice& dev, double v_read, double t_read, double r_series) {
    if (!dev.settled)
        throw SequencingFault("read attempted while the free layer is mid-flight");
    if (t_read < 0.0 || r_series < 0.0)
        throw std::invalid_argument("read parameters must be non-negative");

    const double r_state = dev.resistance();
    const double current = v_read / (r_state + r_series);
    const double energy = v_read * current * t_read;

    const double i_p = v_read / (dev.r_p + r_series);
    const double i_ap = v_read / (dev.r_ap + r_series);
    const double i_ref = std::sqrt(i_p * i_ap);
    const MagneticConfig bit =
        current > i_ref ? MagneticConfig::Parallel : MagneticConfig::AntiParallel;
    return {bit, energy, current};
}

MEXNORDevice MEXNORDevice::with_defaults() {
    MEXNORDevice dev;
    dev.stimulus.axis = {0.0, 0.0, -1.0};
    dev.refresh_transport();
    return dev;
}

void MEXNORDevice::refresh_transport() {
    BarrierStack s = stack;
    s.config = MagneticConfig::Parallel;
    r_p = mtj_resistance(s, leads, 0.0, magnet.temperature);
    s.config = MagneticConfig::AntiParallel;
    r_ap = mtj_resistance(s, leads, 0.0, magnet.temperature);
}

MagneticConfig MEXNORDevice::config() const {
    const bool same = (top.m.z >= 0.0) == (bottom.m.z >= 0.0);
    return same ? MagneticConfig::Parallel : MagneticConfig::AntiParallel;
}

XnorWriteResult xnor_write(MEXNORDevice& dev, double v1, double v2, double duration,
                           const SimConfig& cfg, bool stochastic) {
    if (duration <= 0.0) throw std::invalid_argument("write duration must be > 0");
    dev.top_cap.validate();
    dev.bottom_cap.validate();

    if (stochastic) {
        SimConfig top_cfg = cfg;
        SimConfig bot_cfg = cfg;
        bot_cfg.seed = derive_stream_seed(cfg.seed, 0x584e4f52ULL);
        if (v1 != 0.0)
            dev.top.m = evolve_layer(dev.top.m, dev.magnet, dev.stimulus, v1, duration, top_cfg);
        if (v2 != 0.0)
            dev.bottom.m =
                evolve_layer(dev.bottom.m, dev.magnet, dev.stimulus, v2, duration, bot_cfg);
    } else {
        // Polarity shortcut: the driven layer aligns with its ME field.
        if (v1 != 0.0) dev.top.m = dev.stimulus.axis * (v1 > 0.0 ? 1.0 : -1.0);
        if (v2 != 0.0) dev.bottom.m = dev.stimulus.axis * (v2 > 0.0 ? 1.0 : -1.0);
    }
    dev.top.t += duration;
    dev.bottom.t += duration;
    dev.top_settled = std::abs(dev.top.m.z) >= dev.settle_threshold;
    dev.bottom_settled = std::abs(dev.bottom.m.z) >= dev.settle_threshold;

    const double energy = dev.top_cap.capacitance() * v1 * v1 +
                          dev.bottom_cap.capacitance() * v2 * v2;
    return {dev.config(), energy};
}

XnorReadResult xnor_read(const MEXNORDevice& dev, double v_read) {
    (void)v_read;
    if (!dev.top_settled || !dev.bottom_settled)
        throw SequencingFault("xnor read attempted while a free layer is mid-flight");
    const bool match = dev.config() == MagneticConfig::Parallel;
    return {match, match ? dev.r_p : dev.r_ap};
}

} // namespace mespin
