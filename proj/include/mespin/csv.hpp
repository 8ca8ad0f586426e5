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

#include <string>
#include <vector>

namespace mespin {

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);
// Fixed 17-significant-digit form used by trajectory exports.
std::string format_double17(double v);

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add(double v);
    void add17(double v);
    void add(int v);
    void add(long long v);
    void add(const std::string& s);
    void end_row();

    const std::string& str() const { return buf_; }
    void write_file(const std::string& path) const;

  private:
    void sep();
    std::size_t n_cols_;
    std::size_t col_ = 0;
    std::string buf_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
    double value(std::size_t row, int col) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

} // namespace mespin
