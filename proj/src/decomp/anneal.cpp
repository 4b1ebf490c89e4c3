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


#include "zxcut/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "zxcut/error.hpp"
#include "zxcut/splitmix.hpp"

namespace zxcut {

namespace {

// Leaves are nodes 0..L-1, internal nodes L..2L-2.
struct TreeState {
    int root = -1;
    std::vector<int> parent;
    std::vector<int> left;
    std::vector<int> right;
    std::vector<Bits> leaf_bits;
    // Leaf owning each free (non-special) vertex, parallel to Chain::free_.
    std::vector<int> owner;
};

class Chain {
   public:
    Chain(const Graph& g, const Bits& universe, std::vector<Bits> leaves, std::vector<int> free_vertices,
          const AnnealOptions& opt, std::uint64_t seed)
        : scorer_(g, universe, opt.objective), free_(std::move(free_vertices)), opt_(opt), rng_(seed) {
        std::vector<std::vector<int>> sets;
        for (const Bits& b : leaves) sets.push_back(to_indices(b));
        RankDecomposition seed_rd = RankDecomposition::three_thirds(sets, universe.size());
        state_.root = seed_rd.root;
        state_.parent = seed_rd.parent;
        state_.left = seed_rd.left;
        state_.right = seed_rd.right;
        state_.leaf_bits = std::move(leaves);
        state_.owner.assign(free_.size(), 0);
        leaf_count_ = static_cast<int>(state_.leaf_bits.size());
    }

    double run() {
        double e = energy(state_);
        seed_width_ = static_cast<int>(e);
        best_ = state_;
        double best_e = e;
        if (!has_moves()) return best_e;
        double t = opt_.initial_temperature > 0 ? opt_.initial_temperature : calibrate(e);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (long step = 0; step < opt_.steps; ++step) {
            TreeState trial = state_;
            propose(trial);
            double e2 = energy(trial);
            if (e2 <= e || unit(rng_) < std::exp((e - e2) / t)) {
                state_ = std::move(trial);
                e = e2;
                if (e < best_e) {
                    best_e = e;
                    best_ = state_;
                }
            }
            t *= opt_.cooling;
        }
        return best_e;
    }

    RankDecomposition best_decomposition() const {
        RankDecomposition rd;
        rd.graph_size = scorer_.universe().size();
        rd.root = best_.root;
        rd.parent = best_.parent;
        rd.left = best_.left;
        rd.right = best_.right;
        rd.leaf_sets.resize(rd.parent.size());
        for (int l = 0; l < leaf_count_; ++l) {
            Bits b = best_.leaf_bits[l];
            for (std::size_t i = 0; i < free_.size(); ++i) {
                if (best_.owner[i] == l) b.set(free_[i]);
            }
            rd.leaf_sets[l] = to_indices(b);
        }
        return rd;
    }

    int seed_width() const { return seed_width_; }

   private:
    bool tree_moves() const { return leaf_count_ > 3; }
    bool has_moves() const { return tree_moves() || (leaf_count_ > 1 && !free_.empty()); }

    double energy(const TreeState& s) {
        const std::size_t n = s.parent.size();
        std::vector<Bits> sets(n);
        std::vector<int> order;
        order.reserve(n);
        std::vector<int> stack{s.root};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            if (s.left[x] >= 0) {
                stack.push_back(s.left[x]);
                stack.push_back(s.right[x]);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            if (s.left[x] < 0) {
                sets[x] = s.leaf_bits[x];
                for (std::size_t i = 0; i < free_.size(); ++i) {
                    if (s.owner[i] == x) sets[x].set(free_[i]);
                }
            } else {
                sets[x] = sets[s.left[x]] | sets[s.right[x]];
            }
        }
        int w = 0;
        double sq = 0;
        int edges = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int x = static_cast<int>(i);
            int p = s.parent[x];
            if (p < 0 || (p == s.root && s.right[p] == x)) continue;
            int sc = scorer_.score(sets[x]);
            w = std::max(w, sc);
            sq += static_cast<double>(sc) * sc;
            ++edges;
        }
        if (edges == 0) return 0.0;
        return w + sq / (static_cast<double>(edges) * (w + 1) * (w + 1));
    }

    double calibrate(double e0) {
        double sum = 0;
        int count = 0;
        for (int i = 0; i < 100; ++i) {
            TreeState trial = state_;
            propose(trial);
            double d = energy(trial) - e0;
            if (d > 0) {
                sum += d;
                ++count;
            }
        }
        return count ? (sum / count) / std::log(2.0) : 1.0;
    }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    void replace_child(TreeState& s, int p, int old_child, int new_child) {
        if (p < 0) {
            s.root = new_child;
        } else if (s.left[p] == old_child) {
            s.left[p] = new_child;
        } else {
            s.right[p] = new_child;
        }
        s.parent[new_child] = p;
    }

    void relocate_leaf(TreeState& s) {
        const int n = static_cast<int>(s.parent.size());
        int l = pick(0, leaf_count_ - 1);
        int p = s.parent[l];
        int sib = s.left[p] == l ? s.right[p] : s.left[p];
        replace_child(s, s.parent[p], p, sib);
        int y;
        do {
            y = pick(0, n - 1);
        } while (y == l || y == p);
        replace_child(s, s.parent[y], y, p);
        s.left[p] = y;
        s.right[p] = l;
        s.parent[y] = p;
        s.parent[l] = p;
    }

    bool is_ancestor(const TreeState& s, int a, int x) const {
        for (; x >= 0; x = s.parent[x]) {
            if (x == a) return true;
        }
        return false;
    }

    void swap_subtrees(TreeState& s) {
        const int n = static_cast<int>(s.parent.size());
        for (int attempt = 0; attempt < 16; ++attempt) {
            int a = pick(0, n - 1);
            int b = pick(0, n - 1);
            if (a == b || a == s.root || b == s.root) continue;
            if (is_ancestor(s, a, b) || is_ancestor(s, b, a)) continue;
            int pa = s.parent[a];
            int pb = s.parent[b];
            if (pa == pb) continue;
            replace_child(s, pa, a, b);
            replace_child(s, pb, b, a);
            return;
        }
        relocate_leaf(s);
    }

    void reassign(TreeState& s) {
        std::size_t i = static_cast<std::size_t>(pick(0, static_cast<int>(free_.size()) - 1));
        int to = pick(0, leaf_count_ - 2);
        if (to >= s.owner[i]) ++to;
        s.owner[i] = to;
    }

    void propose(TreeState& s) {
        const bool can_reassign = leaf_count_ > 1 && !free_.empty();
        if (!tree_moves()) {
            reassign(s);
            return;
        }
        int kind = pick(0, can_reassign ? 2 : 1);
        if (kind == 0) {
            relocate_leaf(s);
        } else if (kind == 1) {
            swap_subtrees(s);
        } else {
            reassign(s);
        }
    }

    CutScorer scorer_;
    std::vector<int> free_;
    AnnealOptions opt_;
    std::mt19937_64 rng_;
    TreeState state_;
    TreeState best_;
    int leaf_count_ = 0;
    int seed_width_ = 0;
};

AnnealResult run_chains(const Graph& g, const Bits& universe, const std::vector<Bits>& leaves,
                        const std::vector<int>& free_vertices, const AnnealOptions& options) {
    const int chains = std::max(1, options.chains);
    auto one = [&](int c) {
        Chain chain(g, universe, leaves, free_vertices, options, derive_seed(options.seed, static_cast<std::uint64_t>(c)));
        double e = chain.run();
        return std::make_tuple(e, chain.best_decomposition(), chain.seed_width());
    };
    std::vector<std::future<std::tuple<double, RankDecomposition, int>>> futures;
    for (int c = 1; c < chains; ++c) futures.push_back(std::async(std::launch::async, one, c));
    auto best = one(0);
    for (auto& f : futures) {
        auto r = f.get();
        if (std::get<0>(r) < std::get<0>(best)) best = std::move(r);
    }
    AnnealResult result;
    result.rd = std::move(std::get<1>(best));
    result.seed_width = std::get<2>(best);
    result.width = width(result.rd, g, options.objective);
    return result;
}

}  // namespace

AnnealResult anneal_rank_decomposition(const Graph& g, const Bits& vertices, const AnnealOptions& options) {
    std::vector<Bits> leaves;
    for (int v : to_indices(vertices)) {
        Bits b(g.size());
        b.set(v);
        leaves.push_back(std::move(b));
    }
    if (leaves.empty()) return AnnealResult{RankDecomposition{g.size(), -1, {}, {}, {}, {}}, 0, 0};
    return run_chains(g, vertices, leaves, {}, options);
}

AnnealResult anneal_rank_decomposition(const Graph& g, const AnnealOptions& options) {
    return anneal_rank_decomposition(g, g.full_set(), options);
}

AnnealResult anneal_focused(const Graph& g, const Bits& vertices, const Bits& special, const AnnealOptions& options) {
    Bits s = special & vertices;
    if (s.none()) throw PreconditionViolation("focused decomposition needs a special vertex");
    std::vector<Bits> leaves;
    for (int v : to_indices(s)) {
        Bits b(g.size());
        b.set(v);
        leaves.push_back(std::move(b));
    }
    return run_chains(g, vertices, leaves, to_indices(vertices - s), options);
}

}  // namespace zxcut
