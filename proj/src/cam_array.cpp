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
#include "mespin/cam_array.hpp"

#include <cmath>

namespace mespin {

namespace {

void check_row(const CAMArray& arr, int row) {
    if (row < 0 || row >= arr.rows) throw std::out_of_range("row index out of range");
}

void check_word(const CAMArray& arr, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != arr.word_width)
        throw std::invalid_argument("word length must equal word_width");
}

// Drives one layer to the polarity of the bit: '1' writes +v (layer along
// the stimulus axis), '0' writes -v.
void write_layer(CAMArray& arr, CAMCell& cell, MagnetizationState& layer, bool& settled,
                 int bit, std::uint64_t stream) {
    const double v = bit ? arr.v_write : -arr.v_write;
    if (arr.fidelity == Fidelity::Behavioral) {
        layer.m = cell.device.stimulus.axis * (v > 0.0 ? 1.0 : -1.0);
        settled = true;
        return;
    }
    SimConfig cfg = arr.sim;
    cfg.seed = derive_stream_seed(arr.sim.seed, stream);
    MEStimulus stim = cell.device.stimulus;
    stim.v_me = v;
    SimConfig run = cfg;
    run.duration = arr.t_write;
    const Trajectory traj =
        simulate_trajectory(layer.m, cell.device.magnet, StimulusSchedule::constant(stim), run,
                            TrajectoryOptions{.sample_stride = 1 << 30, .reversal_threshold = -2.0});
    const auto& last = traj.samples.back();
    layer.m = {last.mx, last.my, last.mz};
    layer.t += arr.t_write;
    settled = std::abs(layer.m.z) >= cell.device.settle_threshold;
}

} // namespace

double CAMCell::cell_resistance() const {
    return device.config() == MagneticConfig::Parallel ? device.r_p : device.r_ap;
}

CAMArray CAMArray::with_defaults(int rows_, int word_width_, Fidelity fidelity_) {
    if (rows_ < 1 || word_width_ < 1)
        throw std::invalid_argument("CAM must be at least 1x1");
    CAMArray arr;
    arr.rows = rows_;
    arr.word_width = word_width_;
    arr.fidelity = fidelity_;

    CAMCell cell;
    cell.device = MEXNORDevice::with_defaults();
    // Geometric-mean reference splits the P/AP divider outputs evenly in
    // ratio terms.
    cell.ref_mtj = std::sqrt(cell.device.r_p * cell.device.r_ap);
    arr.cells.assign(static_cast<std::size_t>(rows_ * word_width_), cell);
    return arr;
}

CAMCell& CAMArray::at(int row, int col) {
    return cells[static_cast<std::size_t>(row * word_width + col)];
}

const CAMCell& CAMArray::at(int row, int col) const {
    return cells[static_cast<std::size_t>(row * word_width + col)];
}

double store_word(CAMArray& arr, int row, const std::vector<int>& bits) {
    check_row(arr, row);
    check_word(arr, bits);
    arr.op_counter++;

    double energy = 0.0;
    for (int col = 0; col < arr.word_width; ++col) {
        CAMCell& cell = arr.at(row, col);
        const std::uint64_t stream =
            arr.op_counter * 0x20001ULL + static_cast<std::uint64_t>(row * arr.word_width + col);
        write_layer(arr, cell, cell.device.top, cell.device.top_settled,
                    bits[static_cast<std::size_t>(col)], stream);
        energy += cell.device.top_cap.capacitance() * arr.v_write * arr.v_write;
    }
    return energy;
}

double input_key(CAMArray& arr, const std::vector<int>& bits) {
    check_word(arr, bits);
    arr.op_counter++;

    double energy = 0.0;
    for (int row = 0; row < arr.rows; ++row) {
        for (int col = 0; col < arr.word_width; ++col) {
            CAMCell& cell = arr.at(row, col);
            const std::uint64_t stream = arr.op_counter * 0x30001ULL +
                                         static_cast<std::uint64_t>(row * arr.word_width + col);
            write_layer(arr, cell, cell.device.bottom, cell.device.bottom_settled,
                        bits[static_cast<std::size_t>(col)], stream);
            energy += cell.device.bottom_cap.capacitance() * arr.v_write * arr.v_write;
        }
    }
    return energy;
}

CellEval evaluate_cell(const CAMCell& cell, double v_read) {
    if (!cell.device.top_settled || !cell.device.bottom_settled)
        throw SequencingFault("CAM read attempted before both layers settled");
    const double r_cell = cell.cell_resistance();
    const double node_v = v_read * r_cell / (cell.ref_mtj + r_cell);
    const bool high = node_v < cell.inverter_threshold * v_read;
    return {high, node_v};
}

MatchResult search(CAMArray& arr, const std::vector<int>& key) {
    check_word(arr, key);

    MatchResult res;
    const double key_energy = input_key(arr, key);
    res.inverter.assign(static_cast<std::size_t>(arr.rows),
                        std::vector<bool>(static_cast<std::size_t>(arr.word_width), false));
    res.matchline_low.assign(static_cast<std::size_t>(arr.rows), false);

    double read_energy = 0.0;
    for (int row = 0; row < arr.rows; ++row) {
        bool all_high = true;
        for (int col = 0; col < arr.word_width; ++col) {
            const CAMCell& cell = arr.at(row, col);
            const CellEval eval = evaluate_cell(cell, arr.v_read);
            res.inverter[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                eval.inverter_high;
            all_high = all_high && eval.inverter_high;
            read_energy += arr.v_read * arr.v_read / (cell.ref_mtj + cell.cell_resistance()) *
                               arr.t_read +
                           arr.read_overhead;
        }
        res.matchline_low[static_cast<std::size_t>(row)] = all_high;
    }

    const int bits = arr.rows * arr.word_width;
    res.energy.write_energy_per_bit = key_energy / bits;
    res.energy.read_energy_per_bit = read_energy / bits;
    res.energy.op_duration = arr.t_read;
    res.energy.breakdown = {{"key_input_cv2", key_energy / bits},
                            {"divider_i2r", read_energy / bits}};
    return res;
}

} // namespace mespin
