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

#ifndef ZXCUT_BITS_HPP
#define ZXCUT_BITS_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace zxcut {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<int> to_indices(const Bits& b) {
    std::vector<int> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

inline Bits from_indices(std::size_t size, const std::vector<int>& idx) {
    Bits b(size);
    for (int i : idx) b.set(static_cast<std::size_t>(i));
    return b;
}

/// Rank over GF(2) of a list of equal-length rows. Consumes its argument.
inline int f2_rank(std::vector<Bits> rows) {
    std::vector<std::size_t> pivots;
    std::vector<Bits> basis;
    for (Bits& r : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (r.test(pivots[k])) r ^= basis[k];
        }
        std::size_t p = r.find_first();
        if (p == Bits::npos) continue;
        pivots.push_back(p);
        basis.push_back(std::move(r));
    }
    return static_cast<int>(basis.size());
}

}  // namespace zxcut

#endif  // ZXCUT_BITS_HPP
