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
#include "mespin/memory_array.hpp"

#include <cmath>

namespace mespin {

namespace {

void check_row(const DualPortArray& arr, int row) {
    if (row < 0 || row >= arr.rows) throw std::out_of_range("row index out of range");
}

void check_data(const DualPortArray& arr, const std::vector<int>& data) {
    if (static_cast<int>(data.size()) != arr.cols)
        throw std::invalid_argument("data length must equal the column count");
}

} // namespace

DualPortArray DualPortArray::with_defaults(int rows_, int cols_, Fidelity fidelity_) {
    if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("array must be at least 1x1");
    DualPortArray arr;
    arr.rows = rows_;
    arr.cols = cols_;
    arr.fidelity = fidelity_;
    arr.cell_template = MEMTJDevice::with_defaults();
    arr.cells.assign(static_cast<std::size_t>(rows_ * cols_), Cell{});
    return arr;
}

DualPortArray::Cell& DualPortArray::at(int row, int col) {
    return cells[static_cast<std::size_t>(row * cols + col)];
}

const DualPortArray::Cell& DualPortArray::at(int row, int col) const {
    return cells[static_cast<std::size_t>(row * cols + col)];
}

double DualPortArray::reference_current() const {
    if (i_ref > 0.0) return i_ref;
    const double i_p = v_read / (cell_template.r_p + r_read_tx);
    const double i_ap = v_read / (cell_template.r_ap + r_read_tx);
    return std::sqrt(i_p * i_ap);
}

MagneticConfig sense(double i_cell, double i_ref) {
    if (i_cell < 0.0) throw std::invalid_argument("cell current must be >= 0");
    return i_cell > i_ref ? MagneticConfig::Parallel : MagneticConfig::AntiParallel;
}

AccessResult write_row(DualPortArray& arr, int row, const std::vector<int>& data) {
    check_row(arr, row);
    check_data(arr, data);
    arr.op_counter++;

    const double c = arr.cell_template.cap.capacitance();
    const double per_bit = c * arr.v_write * arr.v_write;

    for (int col = 0; col < arr.cols; ++col) {
        auto& cell = arr.at(row, col);
        const int bit = data[static_cast<std::size_t>(col)] ? 1 : 0;
        // Bit 1 stores AP (positive write voltage), bit 0 stores P.
        const double v = bit ? arr.v_write : -arr.v_write;
        if (arr.fidelity == Fidelity::Behavioral) {
            cell.m = arr.cell_template.stimulus.axis * (v > 0.0 ? 1.0 : -1.0);
            cell.bit = bit ? MagneticConfig::AntiParallel : MagneticConfig::Parallel;
        } else {
            MEMTJDevice dev = arr.cell_template;
            dev.state.m = cell.m;
            SimConfig cfg = arr.sim;
            cfg.seed = derive_stream_seed(arr.sim.seed,
                                          arr.op_counter * 0x10001ULL +
                                              static_cast<std::uint64_t>(row * arr.cols + col));
            const WriteResult wr = write_pulse(dev, v, arr.t_write, cfg);
            cell.m = dev.state.m;
            cell.bit = wr.stored;
        }
    }

    AccessResult res;
    res.data = data;
    res.latency = arr.t_write;
    res.energy.write_energy_per_bit = per_bit;
    res.energy.op_duration = arr.t_write;
    res.energy.breakdown = {{"me_capacitor_cv2", per_bit}};
    return res;
}

AccessResult read_row(DualPortArray& arr, int row) {
    check_row(arr, row);
    const double i_ref = arr.reference_current();

    AccessResult res;
    res.data.resize(static_cast<std::size_t>(arr.cols));
    double total_energy = 0.0;
    for (int col = 0; col < arr.cols; ++col) {
        const auto& cell = arr.at(row, col);
        const double r_state = cell.bit == MagneticConfig::Parallel ? arr.cell_template.r_p
                                                                    : arr.cell_template.r_ap;
        const double i_cell = arr.v_read / (r_state + arr.r_read_tx);
        total_energy += arr.v_read * i_cell * arr.t_read;
        res.data[static_cast<std::size_t>(col)] =
            sense(i_cell, i_ref) == MagneticConfig::AntiParallel ? 1 : 0;
    }
    res.latency = arr.t_read;
    res.energy.read_energy_per_bit = total_energy / arr.cols;
    res.energy.op_duration = arr.t_read;
    res.energy.breakdown = {{"read_path_i2r", total_energy / arr.cols}};
    return res;
}

SimultaneousResult simultaneous_access(DualPortArray& arr, int write_row_i,
                                       const std::vector<int>& data, int read_row_j) {
    check_row(arr, write_row_i);
    check_row(arr, read_row_j);
    if (write_row_i == read_row_j)
        throw PortConflict("write and read ports target the same row");

    SimultaneousResult res;
    // Distinct rows, so the two operations commute; the read must return the
    // target row's prior contents either way.
    res.read = read_row(arr, read_row_j);
    res.write = write_row(arr, write_row_i, data);
    res.window = std::max(arr.t_write, arr.t_read);
    res.write.latency = res.window;
    res.read.latency = res.window;
    return res;
}

} // namespace mespin
