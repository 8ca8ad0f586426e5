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
#include <vector>

#include "mespin/device.hpp"
#include "mespin/memory_array.hpp"

namespace mespin {

// One CAM cell: an ME-XNOR device whose upper layer holds the stored bit and
// whose lower layer receives the search key, read through a voltage divider
// against a reference MTJ. The divider node (reference on the V_READ side,
// cell MTJ to ground) feeds an inverting stage, so the inverter output is
// high exactly when the cell is in the low-resistance P state.
struct CAMCell {
    MEXNORDevice device;
    double ref_mtj = 0.0;             // ohm
    double inverter_threshold = 0.5;  // fraction of V_READ

    double cell_resistance() const;
};

struct CellEval {
    bool inverter_high;
    double divider_node_v; // V
};

struct MatchResult {
    std::vector<bool> matchline_low;            // per row; low means match
    std::vector<std::vector<bool>> inverter;    // [row][col]
    EnergyReport energy;
};

struct CAMArray {
    int rows = 4;
    int word_width = 4;
    Fidelity fidelity = Fidelity::Behavioral;

    double v_read = 1.0;  // V
    double v_dd = 1.0;    // V
    // Back-solved so the matched-cell divider dissipates 15 fJ per bit at
    // V_READ = 1 V with the calibrated default resistances.
    double t_read = 5.086e-10; // s
    double v_write = 0.2;     // V
    double t_write = 4.0e-9;  // s
    // Fixed per-bit inverter/match-line overhead added to each search read.
    double read_overhead = 0.0; // J

    std::vector<CAMCell> cells;
    SimConfig sim;
    std::uint64_t op_counter = 0;

    static CAMArray with_defaults(int rows, int word_width,
                                  Fidelity fidelity = Fidelity::Behavioral);
    CAMCell& at(int row, int col);
    const CAMCell& at(int row, int col) const;
};

// Writes the word into the upper ferromagnets of one row. Returns the write
// energy (word_width * C V^2).
double store_word(CAMArray& arr, int row, const std::vector<int>& bits);

// Broadcasts the key into the lower ferromagnets of every row; column c of
// every row receives key bit c. Returns rows * word_width * C V^2.
double input_key(CAMArray& arr, const std::vector<int>& bits);

// Divider + inverter decision for one cell.
CellEval evaluate_cell(const CAMCell& cell, double v_read);

// input_key followed by a full evaluation. Per row the pre-charged match-bar
// line stays high if any inverter output is low (that cell's p-MOS holds the
// node) and goes low only when every bit matches.
MatchResult search(CAMArray& arr, const std::vector<int>& key);

} // namespace mespin
