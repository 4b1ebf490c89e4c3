// Copyright 2026 The zxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxcut/f2matrix.hpp"

#include <sstream>

#include "zxcut/error.hpp"

namespace zxcut {

F2Matrix::F2Matrix(std::vector<Bits> rows, std::size_t cols) : cols_(cols), data_(std::move(rows)) {
    for (const Bits& r : data_) {
        if (r.size() != cols_) throw Error("F2Matrix: row length mismatch");
    }
}

F2Matrix F2Matrix::from_string(const std::string& grid) {
    std::vector<Bits> rows;
    std::size_t cols = 0;
    std::istringstream in(grid);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<bool> bits;
        for (char c : line) {
            if (c == '0' || c == '1') {
                bits.push_back(c == '1');
            } else if (c != ' ' && c != '\t' && c != '\r') {
                throw ParseError(std::string("F2Matrix: unexpected character '") + c + "'");
            }
        }
        if (bits.empty()) continue;
        if (!rows.empty() && bits.size() != cols) throw ParseError("F2Matrix: ragged rows");
        cols = bits.size();
        Bits r(cols);
        for (std::size_t j = 0; j < cols; ++j) r.set(j, bits[j]);
        rows.push_back(std::move(r));
    }
    return F2Matrix(std::move(rows), cols);
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::ones(std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (auto& r : m.data_) r.set();
    return m;
}

bool F2Matrix::is_zero() const {
    for (const Bits& r : data_) {
        if (r.any()) return false;
    }
    return true;
}

int F2Matrix::rank() const { return f2_rank(data_); }

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        for (auto j = data_[i].find_first(); j != Bits::npos; j = data_[i].find_next(j)) t.set(j, i);
    }
    return t;
}

void F2Matrix::xor_block(std::span<const int> rows, std::span<const int> cols) {
    Bits mask(cols_);
    for (int j : cols) mask.set(static_cast<std::size_t>(j));
    for (int i : rows) data_[static_cast<std::size_t>(i)] ^= mask;
}

std::string F2Matrix::to_string() const {
    std::string out;
    out.reserve(rows() * (cols_ + 1));
    for (const Bits& r : data_) {
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(r.test(j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace zxcut
