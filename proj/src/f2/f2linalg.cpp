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


#include "zxcut/f2linalg.hpp"

#include <algorithm>

#include "zxcut/error.hpp"

namespace zxcut {

namespace {

// Rows of `m` (as given) that lie in no left-kernel vector.
Bits essential_of(const std::vector<Bits>& rows) {
    const std::size_t n = rows.size();
    std::vector<Bits> basis;
    std::vector<Bits> basis_tags;
    std::vector<std::size_t> pivots;
    Bits in_kernel(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bits r = rows[i];
        Bits tag(n);
        tag.set(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (r.test(pivots[k])) {
                r ^= basis[k];
                tag ^= basis_tags[k];
            }
        }
        std::size_t p = r.find_first();
        if (p == Bits::npos) {
            in_kernel |= tag;
        } else {
            pivots.push_back(p);
            basis.push_back(std::move(r));
            basis_tags.push_back(std::move(tag));
        }
    }
    return ~in_kernel;
}

std::vector<int> nonzero_rows(const F2Matrix& m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row(i).any()) out.push_back(static_cast<int>(i));
    }
    return out;
}

template <class F>
std::vector<int> map_indices(const std::vector<int>& idx, F&& f) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(f(i));
    return out;
}

}  // namespace

int cut_rank(const Graph& g, const Bits& x) { return cut_rank(g, x, ~x); }

int cut_rank(const Graph& g, const Bits& x, const Bits& y) {
    // Rows can stay in graph coordinates; only the mask matters for rank.
    std::vector<Bits> rows;
    const Bits& small = x.count() <= y.count() ? x : y;
    const Bits& other = x.count() <= y.count() ? y : x;
    rows.reserve(small.count());
    for (auto v = small.find_first(); v != Bits::npos; v = small.find_next(v)) {
        rows.push_back(g.adj(static_cast<int>(v)) & other);
    }
    return f2_rank(std::move(rows));
}

BipartiteDecomposition bipartite_decomposition(const F2Matrix& m) {
    BipartiteDecomposition dec;
    F2Matrix work = m;
    for (std::size_t i = 0; i < work.rows(); ++i) {
        std::size_t j = work.row(i).find_first();
        if (j == Bits::npos) continue;
        std::vector<int> a;
        for (std::size_t k = 0; k < work.rows(); ++k) {
            if (work.get(k, j)) a.push_back(static_cast<int>(k));
        }
        std::vector<int> b = to_indices(work.row(i));
        work.xor_block(a, b);
        dec.pairs.emplace_back(std::move(a), std::move(b));
    }
    return dec;
}

F2Matrix reconstruct(const BipartiteDecomposition& dec, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (const auto& [a, b] : dec.pairs) m.xor_block(a, b);
    return m;
}

Bits essential_rows(const F2Matrix& m) {
    std::vector<Bits> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return essential_of(rows);
}

Bits essential_cols(const F2Matrix& m) { return essential_rows(m.transpose()); }

MixedDecomposition mixed_decomposition_greedy(const F2Matrix& m) {
    MixedDecomposition dec;
    F2Matrix work = m;
    Bits col_mask(m.cols());
    col_mask.set();
    while (!work.is_zero()) {
        Bits er = essential_rows(work);
        if (std::size_t i = er.find_first(); i != Bits::npos) {
            work.row(i).reset();
            dec.deleted_rows.push_back(static_cast<int>(i));
            continue;
        }
        Bits ec = essential_cols(work);
        if (std::size_t j = ec.find_first(); j != Bits::npos) {
            col_mask.reset(j);
            for (std::size_t k = 0; k < work.rows(); ++k) work.row(k) &= col_mask;
            dec.deleted_cols.push_back(static_cast<int>(j));
            continue;
        }
        break;
    }
    dec.bipartite = bipartite_decomposition(work);

    std::vector<int> rows = nonzero_rows(m);
    std::vector<int> cols = nonzero_rows(m.transpose());
    if (static_cast<int>(std::min(rows.size(), cols.size())) < dec.score()) {
        MixedDecomposition full;
        if (rows.size() <= cols.size()) {
            full.deleted_rows = std::move(rows);
        } else {
            full.deleted_cols = std::move(cols);
        }
        return full;
    }
    std::sort(dec.deleted_rows.begin(), dec.deleted_rows.end());
    std::sort(dec.deleted_cols.begin(), dec.deleted_cols.end());
    return dec;
}

bool verify_mixed(const F2Matrix& m, const MixedDecomposition& dec) {
    F2Matrix residual = m;
    Bits keep_cols(m.cols());
    keep_cols.set();
    for (int j : dec.deleted_cols) keep_cols.reset(static_cast<std::size_t>(j));
    for (std::size_t i = 0; i < m.rows(); ++i) residual.row(i) &= keep_cols;
    for (int i : dec.deleted_rows) residual.row(static_cast<std::size_t>(i)).reset();
    return reconstruct(dec.bipartite, m.rows(), m.cols()) == residual;
}

MixedCut mixed_cut(const Graph& g, const Bits& x) { return mixed_cut(g, x, ~x); }

MixedCut mixed_cut(const Graph& g, const Bits& x, const Bits& y) {
    if (x.intersects(y)) throw PreconditionViolation("mixed_cut: sides overlap");
    const std::size_t lowest = (x | y).find_first();
    const bool x_is_rows = lowest == Bits::npos || !x.test(lowest);
    const Bits& rs = x_is_rows ? x : y;
    const Bits& cs = x_is_rows ? y : x;
    const std::vector<int> row_ids = to_indices(rs);
    const std::vector<int> col_ids = to_indices(cs);
    MixedDecomposition dec = mixed_decomposition_greedy(g.biadjacency(rs, cs));

    auto to_row = [&](int i) { return row_ids[static_cast<std::size_t>(i)]; };
    auto to_col = [&](int j) { return col_ids[static_cast<std::size_t>(j)]; };
    MixedCut out;
    out.score = dec.score();
    for (const auto& [a, b] : dec.bipartite.pairs) {
        std::vector<int> ra = map_indices(a, to_row);
        std::vector<int> cb = map_indices(b, to_col);
        if (x_is_rows) {
            out.pairs.emplace_back(std::move(ra), std::move(cb));
        } else {
            out.pairs.emplace_back(std::move(cb), std::move(ra));
        }
    }
    out.deleted = map_indices(dec.deleted_rows, to_row);
    for (int j : dec.deleted_cols) out.deleted.push_back(to_col(j));
    std::sort(out.deleted.begin(), out.deleted.end());
    return out;
}

int mixed_score(const Graph& g, const Bits& x) { return mixed_cut(g, x).score; }

int mixed_score(const Graph& g, const Bits& x, const Bits& y) { return mixed_cut(g, x, y).score; }

}  // namespace zxcut
