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
#include "mespin/magnetodynamics.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace mespin {

namespace {
constexpr double kPi = std::numbers::pi;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
} // namespace

double MagnetParams::volume() const {
    const double r = diameter / 2.0;
    return kPi * r * r * t_fl;
}

double MagnetParams::effective_anisotropy() const {
    const double shape = 0.5 * constants::mu0 * ms * ms * (demag.z - demag.x);
    return k_i / t_fl - shape;
}

void MagnetParams::validate() const {
    require(ms > 0.0, "magnet.ms must be > 0");
    require(alpha >= 0.0, "magnet.alpha must be >= 0");
    require(t_fl > 0.0, "magnet.t_fl must be > 0");
    require(diameter > 0.0, "magnet.diameter must be > 0");
    require(temperature >= 0.0, "magnet.temperature must be >= 0");
    require(gamma > 0.0, "magnet.gamma must be > 0");
    require(std::abs(demag.x + demag.y + demag.z - 1.0) <= 1e-12,
            "magnet.demag diagonal must sum to 1");
    require(volume() > 0.0, "magnet volume must be > 0");
}

void MEStimulus::validate() const {
    require(t_me > 0.0, "stimulus.t_me must be > 0");
    require(alpha_me >= 0.0, "stimulus.alpha_me must be >= 0");
}

void SimConfig::validate() const {
    require(dt > 0.0, "sim.dt must be > 0");
    require(duration >= dt, "sim.duration must be >= dt");
}

StimulusSchedule StimulusSchedule::constant(const MEStimulus& s) {
    StimulusSchedule sched;
    sched.stimulus = s;
    sched.segments = {{std::numeric_limits<double>::infinity(), s.v_me}};
    return sched;
}

StimulusSchedule StimulusSchedule::pulse(const MEStimulus& s, double t_on, double t_off,
                                         double v) {
    StimulusSchedule sched;
    sched.stimulus = s;
    if (t_on > 0.0) sched.segments.push_back({t_on, 0.0});
    sched.segments.push_back({t_off, v});
    sched.segments.push_back({std::numeric_limits<double>::infinity(), 0.0});
    return sched;
}

double StimulusSchedule::voltage_at(double t) const {
    for (const auto& seg : segments) {
        if (t < seg.t_end) return seg.v_me;
    }
    return segments.empty() ? 0.0 : segments.back().v_me;
}

Vec3 demag_field(const Vec3& m, const MagnetParams& p) {
    return {-p.demag.x * p.ms * m.x, -p.demag.y * p.ms * m.y, -p.demag.z * p.ms * m.z};
}

Vec3 anisotropy_field(const Vec3& m, const MagnetParams& p) {
    const double h_k = 2.0 * p.k_i / (constants::mu0 * p.ms * p.t_fl);
    return {0.0, 0.0, h_k * m.z};
}

Vec3 me_field(const MEStimulus& s) {
    const double magnitude = s.alpha_me * s.v_me / (constants::mu0 * s.t_me);
    return s.axis * magnitude;
}

double thermal_sigma(const MagnetParams& p, double dt) {
    if (p.temperature <= 0.0 || p.alpha <= 0.0) return 0.0;
    const double num = 2.0 * p.alpha * constants::k_boltzmann * p.temperature;
    const double den = p.gamma * constants::mu0 * p.ms * p.volume() * dt;
    return std::sqrt(num / den);
}

Vec3 thermal_field(const MagnetParams& p, double dt, NormalSampler& rng) {
    const double sigma = thermal_sigma(p, dt);
    if (sigma == 0.0) return {};
    return {sigma * rng(), sigma * rng(), sigma * rng()};
}

Vec3 llg_rhs(const Vec3& m, const Vec3& h_eff, const MagnetParams& p) {
    const double pre = p.gamma / (1.0 + p.alpha * p.alpha);
    const Vec3 mxh = m.cross(h_eff);
    return -pre * mxh - (pre * p.alpha) * m.cross(mxh);
}

namespace {

inline Vec3 deterministic_field(const Vec3& m, const MagnetParams& p, const Vec3& h_me) {
    return demag_field(m, p) + anisotropy_field(m, p) + h_me;
}

inline Vec3 heun_advance(const Vec3& m, const MagnetParams& p, const Vec3& h_me,
                         const Vec3& h_th, double dt, bool renormalize) {
    const Vec3 k1 = llg_rhs(m, deterministic_field(m, p, h_me) + h_th, p);
    const Vec3 m_pred = m + dt * k1;
    const Vec3 k2 = llg_rhs(m_pred, deterministic_field(m_pred, p, h_me) + h_th, p);
    Vec3 out = m + (0.5 * dt) * (k1 + k2);
    if (renormalize) out = out.normalized();
    return out;
}

} // namespace

MagnetizationState heun_step(const MagnetizationState& state, const MagnetParams& p,
                             const MEStimulus& s, const SimConfig& cfg, NormalSampler& rng) {
    const Vec3 h_me = me_field(s);
    const Vec3 h_th = thermal_field(p, cfg.dt, rng);
    MagnetizationState next;
    next.m = heun_advance(state.m, p, h_me, h_th, cfg.dt, cfg.renormalize);
    next.t = state.t + cfg.dt;
    return next;
}

double magnetic_energy(const Vec3& m, const MagnetParams& p, const Vec3& h_ext) {
    const double v = p.volume();
    const double zeeman = -constants::mu0 * p.ms * m.dot(h_ext);
    const double demag = 0.5 * constants::mu0 * p.ms * p.ms *
                         (p.demag.x * m.x * m.x + p.demag.y * m.y * m.y +
                          p.demag.z * m.z * m.z);
    const double aniso = -(p.k_i / p.t_fl) * m.z * m.z;
    return v * (zeeman + demag + aniso);
}

Trajectory simulate_trajectory(const Vec3& m0, const MagnetParams& p,
                               const StimulusSchedule& schedule, const SimConfig& cfg,
                               const TrajectoryOptions& opts) {
    p.validate();
    schedule.stimulus.validate();
    cfg.validate();
    if (opts.sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");

    NormalSampler rng(cfg.seed, 0);
    const auto n_steps = static_cast<long>(std::llround(cfg.duration / cfg.dt));

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(n_steps / opts.sample_stride) + 2);

    Vec3 m = m0.normalized();
    double t = 0.0;
    traj.samples.push_back({t, m.x, m.y, m.z});

    MEStimulus stim = schedule.stimulus;
    const double sigma = thermal_sigma(p, cfg.dt);
    for (long i = 0; i < n_steps; ++i) {
        stim.v_me = schedule.voltage_at(t);
        const Vec3 h_me = me_field(stim);
        Vec3 h_th{};
        if (sigma != 0.0) h_th = {sigma * rng(), sigma * rng(), sigma * rng()};
        m = heun_advance(m, p, h_me, h_th, cfg.dt, cfg.renormalize);
        t = static_cast<double>(i + 1) * cfg.dt;
        if (!traj.reversal_time && m.z <= opts.reversal_threshold) traj.reversal_time = t;
        if ((i + 1) % opts.sample_stride == 0 || i + 1 == n_steps)
            traj.samples.push_back({t, m.x, m.y, m.z});
    }
    return traj;
}

SwitchingEstimate wilson_interval(int successes, int n) {
    SwitchingEstimate est;
    est.n_trials = n;
    if (n <= 0) return est;
    const double z = 1.959963984540054; // 97.5th percentile of the unit normal
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    est.probability = phat;
    est.ci_low = std::max(0.0, center - half);
    est.ci_high = std::min(1.0, center + half);
    return est;
}

namespace {

// One trial: start at +z, thermalize (or tilt), apply the pulse, relax.
Vec3 mc_trial_impl(const MagnetParams& p, const MEStimulus& s, double pulse_duration,
                   const SimConfig& cfg, const MonteCarloOptions& opts, std::uint64_t trial) {
    NormalSampler rng(cfg.seed, trial);
    Vec3 m{0.0, 0.0, 1.0};
    const double sigma = thermal_sigma(p, cfg.dt);

    if (opts.gaussian_tilt_init) {
        const double keff = p.effective_anisotropy();
        if (keff > 0.0 && p.temperature > 0.0) {
            const double var = constants::k_boltzmann * p.temperature /
                               (2.0 * keff * p.volume());
            const double sd = std::sqrt(var);
            m = Vec3{sd * rng(), sd * rng(), 1.0}.normalized();
        }
    } else if (opts.equilibrate_s > 0.0) {
        const auto n_eq = static_cast<long>(std::llround(opts.equilibrate_s / cfg.dt));
        for (long i = 0; i < n_eq; ++i) {
            Vec3 h_th{};
            if (sigma != 0.0) h_th = {sigma * rng(), sigma * rng(), sigma * rng()};
            m = heun_advance(m, p, {}, h_th, cfg.dt, cfg.renormalize);
        }
    }

    MEStimulus stim = s;
    const Vec3 h_me = me_field(stim);
    const auto n_pulse = static_cast<long>(std::llround(pulse_duration / cfg.dt));
    for (long i = 0; i < n_pulse; ++i) {
        Vec3 h_th{};
        if (sigma != 0.0) h_th = {sigma * rng(), sigma * rng(), sigma * rng()};
        m = heun_advance(m, p, h_me, h_th, cfg.dt, cfg.renormalize);
    }

    const auto n_relax = static_cast<long>(std::llround(opts.relax_s / cfg.dt));
    for (long i = 0; i < n_relax; ++i) {
        Vec3 h_th{};
        if (sigma != 0.0) h_th = {sigma * rng(), sigma * rng(), sigma * rng()};
        m = heun_advance(m, p, {}, h_th, cfg.dt, cfg.renormalize);
    }
    return m;
}

} // namespace

Vec3 run_mc_trial(const MagnetParams& p, const MEStimulus& s, double pulse_duration,
                  const SimConfig& cfg, const MonteCarloOptions& opts, std::uint64_t trial) {
    return mc_trial_impl(p, s, pulse_duration, cfg, opts, trial);
}

SwitchingEstimate switching_probability(const MagnetParams& p, const MEStimulus& s,
                                        double pulse_duration, int n_trials,
                                        const SimConfig& cfg, const MonteCarloOptions& opts) {
    p.validate();
    s.validate();
    cfg.validate();
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");

    unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_trials));

    std::vector<int> switched(static_cast<std::size_t>(n_trials), 0);
    auto work = [&](unsigned w) {
        for (int k = static_cast<int>(w); k < n_trials; k += static_cast<int>(workers)) {
            const Vec3 m = mc_trial_impl(p, s, pulse_duration, cfg, opts,
                                         static_cast<std::uint64_t>(k));
            switched[static_cast<std::size_t>(k)] = m.z <= opts.threshold ? 1 : 0;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    int hits = 0;
    for (int v : switched) hits += v;
    return wilson_interval(hits, n_trials);
}

} // namespace mespin
