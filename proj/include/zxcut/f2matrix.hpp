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

#ifndef ZXCUT_F2MATRIX_HPP
#define ZXCUT_F2MATRIX_HPP

#include <span>
#include <string>
#include <vector>

#include "zxcut/bits.hpp"

namespace zxcut {

/// Dense binary matrix, one packed bit row per matrix row.
class F2Matrix {
   public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, Bits(cols)) {}
    explicit F2Matrix(std::vector<Bits> rows, std::size_t cols);

    /// Parses a 0/1 grid, one row per line; blank lines and spaces are ignored.
    static F2Matrix from_string(const std::string& grid);
    static F2Matrix identity(std::size_t n);
    static F2Matrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return data_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return data_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool value = true) { data_[i].set(j, value); }
    void flip(std::size_t i, std::size_t j) { data_[i].flip(j); }
    const Bits& row(std::size_t i) const { return data_[i]; }
    Bits& row(std::size_t i) { return data_[i]; }

    bool is_zero() const;
    int rank() const;
    F2Matrix transpose() const;
    /// XORs the all-ones block on rows x cols into the matrix.
    void xor_block(std::span<const int> rows, std::span<const int> cols);

    std::string to_string() const;
    bool operator==(const F2Matrix& other) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<Bits> data_;
};

}  // namespace zxcut

#endif  // ZXCUT_F2MATRIX_HPP
