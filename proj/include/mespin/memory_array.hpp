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
#include <stdexcept>
#include <vector>

#include "mespin/device.hpp"

namespace mespin {

// Raised by simultaneous access requests that target the same row on both
// ports; the scheme shares a cell's ME-MTJ between the ports.
class PortConflict : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

enum class Fidelity {
    Behavioral, // deterministic polarity rule per cell
    Stochastic  // full thermal LLG per written cell
};

struct AccessResult {
    std::vector<int> data; // one bit per column
    EnergyReport energy;
    double latency = 0.0; // s
};

struct SimultaneousResult {
    AccessResult write;
    AccessResult read;
    double window = 0.0; // s, max(t_write, t_read)
    int ops_per_window = 2;
};

// Dual-port array of ME-MTJ bit-cells: one write transistor (WWL/WBL) and
// one read transistor (RWL/RBL) per cell, so a write on one row and a read
// on another can share a time window.
struct DualPortArray {
    int rows = 4;
    int cols = 4;
    Fidelity fidelity = Fidelity::Behavioral;

    MEMTJDevice cell_template;
    double v_write = 0.2;     // V
    double v_read = 0.2;      // V
    double t_write = 4.0e-9;  // s
    double t_read = 0.5e-9;   // s
    double r_write_tx = 5.0e3;  // ohm, W/L = 1
    double r_read_tx = 500.0;   // ohm, W/L = 10
    double i_ref = 0.0;       // A; 0 = derive from nominal currents
    SimConfig sim;

    struct Cell {
        MagneticConfig bit = MagneticConfig::Parallel;
        Vec3 m{0.0, 0.0, 1.0};
    };
    std::vector<Cell> cells;
    std::uint64_t op_counter = 0;

    static DualPortArray with_defaults(int rows, int cols,
                                       Fidelity fidelity = Fidelity::Behavioral);
    Cell& at(int row, int col);
    const Cell& at(int row, int col) const;
    double reference_current() const;
};

// P if the cell current exceeds the reference.
MagneticConfig sense(double i_cell, double i_ref);

AccessResult write_row(DualPortArray& arr, int row, const std::vector<int>& data);
AccessResult read_row(DualPortArray& arr, int row);

// Executes a write on row i and a read on row j over one shared window.
// i == j raises PortConflict.
SimultaneousResult simultaneous_access(DualPortArray& arr, int write_row_i,
                                       const std::vector<int>& data, int read_row_j);

} // namespace mespin
