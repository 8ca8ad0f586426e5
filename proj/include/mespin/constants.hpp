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

namespace mespin::constants {

// CODATA 2018 values, SI units.
inline constexpr double mu0 = 1.25663706212e-6;       // vacuum permeability, T m/A
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K
inline constexpr double q_electron = 1.602176634e-19; // C
inline constexpr double h_planck = 6.62607015e-34;    // J s
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c_light = 2.99792458e8;       // m/s
inline constexpr double m_electron = 9.1093837015e-31; // kg

// Gyromagnetic ratio in m/(A s), i.e. |gamma_e| * mu0, so that
// gamma * H with H in A/m gives an angular rate in rad/s.
inline constexpr double gamma_gilbert = 2.211e5;

// alpha_ME is commonly quoted as a fraction of 1/c; this is 1/c in s/m.
inline constexpr double alpha_me_unit = 1.0 / c_light;

} // namespace mespin::constants
