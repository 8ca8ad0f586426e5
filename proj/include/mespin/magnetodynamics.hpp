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
#include <vector>

#include "mespin/constants.hpp"
#include "mespin/rng.hpp"
#include "mespin/vec3.hpp"

namespace mespin {

// Free-layer material and geometry parameters for the macrospin model.
//
// All fields are SI. `gamma` follows the |gamma_e|*mu0 convention, i.e.
// gamma * H with H in A/m is an angular rate in rad/s; the thermal field
// below inherits this convention.
struct MagnetParams {
    double ms = 1.2573e6;      // saturation magnetization, A/m
    double alpha = 0.1;        // Gilbert damping
    double k_i = 1.0e-3;       // interface anisotropy energy, J/m^2
    double t_fl = 1.0e-9;      // free-layer thickness, m
    double diameter = 50.0e-9; // free-layer diameter (circular), m
    Vec3 demag{0.0, 0.0, 1.0}; // demag tensor diagonal, thin-film limit
    double temperature = 300.0; // K
    double gamma = constants::gamma_gilbert; // m/(A s)

    double volume() const;
    // Net easy-axis stiffness K_i/t_fl - mu0*Ms^2*(Nz - Nx)/2, J/m^3.
    // Positive means the film is perpendicularly magnetized.
    double effective_anisotropy() const;
    void validate() const;
};

// Magneto-electric drive: a voltage across the ME oxide produces the field
//   H_ME = axis * (1/mu0) * alpha_me * v_me / t_me      [A/m]
struct MEStimulus {
    double alpha_me = constants::alpha_me_unit; // ME coefficient, s/m
    double t_me = 5.0e-9;                       // ME oxide thickness, m
    double v_me = 0.0;                          // applied voltage, V (signed)
    Vec3 axis{0.0, 0.0, 1.0};                   // field direction

    void validate() const;
};

struct SimConfig {
    double dt = 1.0e-13;   // s
    double duration = 5.0e-9; // s
    std::uint64_t seed = 1;
    bool renormalize = true;

    void validate() const;
};

struct MagnetizationState {
    Vec3 m{0.0, 0.0, 1.0};
    double t = 0.0; // s
};

struct Trajectory {
    struct Sample {
        double t;
        double mx, my, mz;
    };
    std::vector<Sample> samples;
    std::optional<double> reversal_time; // first crossing of the threshold
};

// Piecewise-constant voltage program applied to a fixed MEStimulus template.
// The voltage of segment i applies for t < segments[i].t_end; the last
// segment extends to the end of the run.
struct StimulusSchedule {
    struct Segment {
        double t_end;
        double v_me;
    };
    MEStimulus stimulus;
    std::vector<Segment> segments;

    static StimulusSchedule constant(const MEStimulus& s);
    // 0 V for [0, t_on), v for [t_on, t_off), 0 V afterwards.
    static StimulusSchedule pulse(const MEStimulus& s, double t_on, double t_off, double v);
    double voltage_at(double t) const;
};

struct TrajectoryOptions {
    int sample_stride = 1;
    double reversal_threshold = -0.9;
};

struct SwitchingEstimate {
    double probability = 0.0;
    double ci_low = 0.0;  // 95% Wilson interval
    double ci_high = 0.0;
    int n_trials = 0;
};

struct MonteCarloOptions {
    // Each trial starts from +z and thermalizes at 0 V for this long before
    // the pulse is applied.
    double equilibrate_s = 2.0e-9;
    // Zero-field window appended after the pulse before the final state is
    // classified.
    double relax_s = 0.0;
    double threshold = -0.9;
    // Cheaper initial-state alternative: small-angle Gaussian tilt with
    // sigma^2 = kT / (2 K_eff V) per transverse component, no equilibration.
    bool gaussian_tilt_init = false;
    int workers = 0; // 0 = hardware concurrency
};

// --- effective-field contributions, all returning A/m ---

Vec3 demag_field(const Vec3& m, const MagnetParams& p);
Vec3 anisotropy_field(const Vec3& m, const MagnetParams& p);
Vec3 me_field(const MEStimulus& s);

// Standard deviation of each thermal-field component for one step of size dt:
//   sigma = sqrt(2 alpha k T / (gamma mu0 Ms V dt))        [A/m]
// The mu0 in the denominator is required for the fluctuation-dissipation
// balance under the gamma-in-m/(A s) convention used throughout.
double thermal_sigma(const MagnetParams& p, double dt);
Vec3 thermal_field(const MagnetParams& p, double dt, NormalSampler& rng);

// Explicit Landau-Lifshitz form of the Gilbert equation, 1/s:
//   dm/dt = -gamma/(1+alpha^2) m x H - gamma*alpha/(1+alpha^2) m x (m x H)
Vec3 llg_rhs(const Vec3& m, const Vec3& h_eff, const MagnetParams& p);

// One Heun (predictor-corrector) step. A single thermal-field draw is held
// fixed across both stages; the deterministic fields are re-evaluated at the
// predictor point. The result is renormalized if cfg.renormalize.
MagnetizationState heun_step(const MagnetizationState& state, const MagnetParams& p,
                             const MEStimulus& s, const SimConfig& cfg, NormalSampler& rng);

// Total magnetic energy of the macrospin in an external field h_ext, J:
// Zeeman + demag + interface anisotropy. Used for dissipation checks and
// the thermal-equilibrium histogram.
double magnetic_energy(const Vec3& m, const MagnetParams& p, const Vec3& h_ext);

Trajectory simulate_trajectory(const Vec3& m0, const MagnetParams& p,
                               const StimulusSchedule& schedule, const SimConfig& cfg,
                               const TrajectoryOptions& opts = {});

// Monte Carlo estimate of the switching probability for a rectangular pulse
// of the given duration. Trial k draws its generator from (cfg.seed, k), so
// the estimate does not depend on the worker count. A trial counts as
// switched when m_z <= threshold at the end of the pulse (plus relaxation).
SwitchingEstimate switching_probability(const MagnetParams& p, const MEStimulus& s,
                                        double pulse_duration, int n_trials,
                                        const SimConfig& cfg, const MonteCarloOptions& opts = {});

// Final magnetization of a single Monte Carlo trial (equilibrate, pulse,
// relax), using the trial's derived stream. Exposed for reversal-time
// statistics and the device layer.
Vec3 run_mc_trial(const MagnetParams& p, const MEStimulus& s, double pulse_duration,
                  const SimConfig& cfg, const MonteCarloOptions& opts, std::uint64_t trial);

SwitchingEstimate wilson_interval(int successes, int n);

} // namespace mespin
