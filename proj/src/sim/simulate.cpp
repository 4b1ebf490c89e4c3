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


#include "zxcut/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <mutex>
#include <optional>

#include "json.hpp"
#include "zxcut/anneal.hpp"
#include "zxcut/branching.hpp"
#include "zxcut/error.hpp"
#include "zxcut/graph.hpp"
#include "zxcut/rank_decomposition.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/separators.hpp"
#include "zxcut/splitmix.hpp"
#include "zxcut/tree_decomposition.hpp"

namespace zxcut {

const char* mode_name(WidthMode m) { return m == WidthMode::TreeWidth ? "treewidth" : "rankwidth"; }

WidthMode parse_mode(const std::string& name) {
    if (name == "treewidth") return WidthMode::TreeWidth;
    if (name == "rankwidth") return WidthMode::RankWidth;
    throw ParseError("unknown width mode '" + name + "'");
}

int algorithm_number(const SimConfig& cfg) {
    return (cfg.mode == WidthMode::TreeWidth ? 1 : 3) + (cfg.use_clifford_base ? 1 : 0);
}

double leaf_bound_log2(const SimConfig& cfg, std::size_t size, int width_used) {
    const double gamma = std::log(4.0) / std::log(1.5);
    const double e = cfg.mode == WidthMode::RankWidth ? gamma * width_used : width_used;
    return (e + 2.0) * std::log2(std::max<double>(2.0, static_cast<double>(size)));
}

namespace {

class Simulator {
   public:
    explicit Simulator(const SimConfig& cfg) : cfg_(cfg) {
        reduce_.allow_new_vertices = cfg.mode == WidthMode::TreeWidth;
    }

    void prepare_decomposition(const ZxDiagram& d) {
        if (cfg_.mode != WidthMode::RankWidth || d.num_spiders() < 2) return;
        rd_ = anneal(d, 0);
    }

    Scalar eval(ZxDiagram d, int depth, bool parallel) {
        note_depth(depth);
        if (depth > 0 && cfg_.use_clifford_base && cfg_.resimplify) d = full_reduce(std::move(d), reduce_);
        if (is_base(d)) return leaf(std::move(d));
        const auto comps = connected_components(d);
        if (comps.size() > 1) {
            Scalar value = d.scalar();
            for (const auto& c : comps) {
                value *= eval(d.induced(c), depth, parallel);
                if (value.is_zero()) break;
            }
            return value;
        }
        return cut(std::move(d), depth, parallel);
    }

    SimStats& stats() { return stats_; }

    void finish() {
        stats_.leaves = leaves_.load();
        stats_.decompositions = decompositions_.load();
        stats_.max_depth = max_depth_.load();
        stats_.width_used = 0;
        for (int w : stats_.level_widths) stats_.width_used = std::max(stats_.width_used, w);
    }

   private:
    bool is_base(const ZxDiagram& d) const {
        if (d.num_spiders() <= 1) return true;
        return cfg_.use_clifford_base && nc_count(d) <= static_cast<std::size_t>(std::max(0, cfg_.hybrid_threshold));
    }

    Scalar leaf(ZxDiagram d) {
        ++leaves_;
        return evaluate_leaf(std::move(d), reduce_);
    }

    Weights weights(const ZxDiagram& d) const {
        Weights w(d.id_bound(), 0.0);
        for (VertexId v : d.spiders()) {
            w[static_cast<std::size_t>(v)] = !cfg_.use_clifford_base || is_non_clifford(d, v) ? 1.0 : 0.0;
        }
        return w;
    }

    RankDecomposition anneal(const ZxDiagram& d, std::uint64_t stream) const {
        AnnealOptions opt;
        opt.objective = cfg_.use_mixed ? Objective::Mixed : Objective::CutRank;
        opt.steps = cfg_.anneal_steps;
        opt.seed = derive_seed(cfg_.seed, stream);
        return anneal_rank_decomposition(id_graph(d), spider_bits(d), opt).rd;
    }

    VertexId fallback_vertex(const ZxDiagram& d) const {
        const auto s = d.spiders();
        for (VertexId v : s) {
            if (is_non_clifford(d, v)) return v;
        }
        return s.front();
    }

    CutAction choose(const ZxDiagram& d, std::uint64_t node) {
        const Weights w = weights(d);
        const Bits spiders = spider_bits(d);
        if (cfg_.mode == WidthMode::TreeWidth) {
            const Graph g = id_graph(d);
            const TreeDecomposition td = min_fill_decomposition(g, spiders);
            return vertex_action(to_indices(balanced_separator(td, g, spiders, w)));
        }
        std::optional<RankDecomposition> level;
        if (!cfg_.recompute_per_level && rd_ && rd_->graph_size >= d.id_bound()) {
            Bits keep = spiders;
            keep.resize(rd_->graph_size);
            RankDecomposition r = rd_->restricted(keep);
            Bits u = r.universe();
            u.resize(d.id_bound());
            if (u == spiders) level = std::move(r);
        }
        if (!level) level = anneal(d, node + 1);
        if (level->num_leaves() >= 2) {
            const Partition part = balanced_partition(*level, w);
            std::vector<VertexId> a = to_indices(part.a);
            std::vector<VertexId> b = to_indices(part.b);
            if (!a.empty() && !b.empty()) return partition_action(d, a, b, cfg_.use_mixed);
        }
        return vertex_action({fallback_vertex(d)});
    }

    Scalar cut(ZxDiagram d, int depth, bool parallel) {
        const std::uint64_t node = decompositions_++;
        const CutAction action = choose(d, node);
        note_width(depth, action.score());
        const Scalar outer = d.scalar();
        d.scalar() = Scalar::one();
        const std::uint64_t n = action.branches();
        std::vector<Scalar> values(n, Scalar::zero());
        auto run = [&](std::uint64_t i, bool nested) {
            ZxDiagram c = d;
            const Scalar coef = apply_branch(c, action, i);
            if (!coef.is_zero()) values[i] = coef * eval(std::move(c), depth + 1, nested);
        };
        const std::uint64_t jobs = parallel ? std::min<std::uint64_t>(n, std::max(1, cfg_.parallelism)) : 1;
        if (jobs > 1) {
            std::vector<std::future<void>> futures;
            for (std::uint64_t t = 0; t < jobs; ++t) {
                futures.push_back(std::async(std::launch::async, [&, t] {
                    for (std::uint64_t i = t; i < n; i += jobs) run(i, false);
                }));
            }
            for (auto& f : futures) f.get();
        } else {
            for (std::uint64_t i = 0; i < n; ++i) run(i, parallel);
        }
        Scalar total = Scalar::zero();
        for (const Scalar& v : values) total = total + v;
        return outer * total;
    }

    void note_depth(int depth) {
        int cur = max_depth_.load();
        while (depth > cur && !max_depth_.compare_exchange_weak(cur, depth)) {
        }
    }

    void note_width(int depth, int score) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& lw = stats_.level_widths;
        if (lw.size() <= static_cast<std::size_t>(depth)) lw.resize(static_cast<std::size_t>(depth) + 1, 0);
        lw[static_cast<std::size_t>(depth)] = std::max(lw[static_cast<std::size_t>(depth)], score);
    }

    SimConfig cfg_;
    ReduceOptions reduce_;
    std::optional<RankDecomposition> rd_;
    SimStats stats_;
    std::atomic<std::uint64_t> leaves_{0};
    std::atomic<std::uint64_t> decompositions_{0};
    std::atomic<int> max_depth_{0};
    std::mutex mutex_;
};

}  // namespace

SimResult simulate(const ZxDiagram& input, const SimConfig& cfg) {
    if (!input.is_closed()) throw OpenDiagram("simulate needs a closed diagram");
    const auto start = std::chrono::steady_clock::now();
    Simulator sim(cfg);
    ZxDiagram d = to_graph_like(input);
    if (cfg.use_clifford_base) d = full_reduce(std::move(d));
    SimStats& st = sim.stats();
    st.algorithm = algorithm_number(cfg);
    st.seed = cfg.seed;
    st.n_spiders = d.num_spiders();
    st.nc = nc_count(d);
    sim.prepare_decomposition(d);
    const Scalar value = sim.eval(std::move(d), 0, cfg.parallelism > 1);
    sim.finish();

    SimResult r;
    r.value = value;
    r.amplitude = value.to_complex();
    r.stats = st;
    SimStats& s = r.stats;
    s.alpha = s.nc == 0 || s.leaves == 0 ? 0.0 : std::log2(static_cast<double>(s.leaves)) / static_cast<double>(s.nc);
    s.bound_log2 = leaf_bound_log2(cfg, cfg.use_clifford_base ? s.nc : s.n_spiders, s.width_used);
    s.within_bound = std::log2(static_cast<double>(std::max<std::uint64_t>(1, s.leaves))) <= s.bound_log2 + 1e-9;
    s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string stats_json(const SimResult& r) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.stats.algorithm;
    j["n_spiders"] = r.stats.n_spiders;
    j["nc"] = r.stats.nc;
    j["width_used"] = r.stats.width_used;
    j["leaves"] = r.stats.leaves;
    j["alpha"] = r.stats.alpha;
    j["wall_time_ms"] = r.stats.wall_ms;
    j["amplitude_re"] = r.amplitude.real();
    j["amplitude_im"] = r.amplitude.imag();
    j["seed"] = r.stats.seed;
    return j.dump();
}

}  // namespace zxcut
