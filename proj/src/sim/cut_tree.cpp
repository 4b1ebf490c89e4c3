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


#include "zxcut/cut_tree.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "zxcut/anneal.hpp"
#include "zxcut/effective_alpha.hpp"
#include "zxcut/error.hpp"
#include "zxcut/graph.hpp"
#include "zxcut/splitmix.hpp"

namespace zxcut {

namespace {

std::vector<Bits> components_of(const Graph& g, const Bits& set) {
    std::vector<Bits> out;
    Bits left = set;
    for (auto s = left.find_first(); s != Bits::npos; s = left.find_first()) {
        Bits comp(set.size());
        Bits frontier(set.size());
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bits next(set.size());
            for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
                next |= g.adj(static_cast<int>(v));
            }
            next &= set;
            next -= comp;
            frontier = next;
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

double log2_big(const BigInt& x) {
    if (x <= 0) return 0;
    const std::size_t bits = boost::multiprecision::msb(x);
    if (bits < 60) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

struct Candidate {
    CutAction action;
    std::vector<Bits> children;
    double alpha = 0;
};

class Planner {
   public:
    Planner(const ZxDiagram& d, const RankDecomposition& rd, const PlannerOptions& opt)
        : opt_(opt), g_(id_graph(d)), non_clifford_(d.id_bound()) {
        for (VertexId v : d.spiders()) {
            if (is_non_clifford(d, v)) non_clifford_.set(static_cast<std::size_t>(v));
        }
        Bits universe = rd.universe();
        universe.resize(d.id_bound());
        if (rd.graph_size > d.id_bound() || universe != spider_bits(d)) {
            throw PreconditionViolation("rank decomposition does not cover the diagram's spiders");
        }
        for (Bits c : rd.cuts()) {
            c.resize(d.id_bound());
            cuts_.push_back(std::move(c));
        }
        spiders_ = spider_bits(d);
    }

    std::size_t nc(const Bits& v) const { return (v & non_clifford_).count(); }
    const Graph& graph() const { return g_; }
    const Bits& spiders() const { return spiders_; }

    const std::vector<Candidate>& candidates(const Bits& v) {
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
        const std::size_t n = nc(v);
        const std::size_t lowest = v.find_first();
        std::vector<Candidate> out;
        std::unordered_set<Bits> seen;
        for (const Bits& cut : cuts_) {
            Bits x = cut & v;
            if (x.none() || x == v) continue;
            if (x.test(lowest)) x = v - x;
            if (!seen.insert(x).second) continue;
            add_candidate(out, v, n, x, partition_action(g_, x, v - x, opt_.objective == Objective::Mixed));
        }
        if (out.empty()) {
            const auto u = static_cast<VertexId>((v & non_clifford_).find_first());
            Bits x(v.size());
            x.set(static_cast<std::size_t>(u));
            add_candidate(out, v, n, x, vertex_action({u}));
        }
        return cache_.emplace(v, std::move(out)).first->second;
    }

    /// Draws one tree below `v`, recording the choice made at every cut node.
    BigInt sample(const Bits& v, std::mt19937_64& rng, std::unordered_map<Bits, int>& choices) {
        if (nc(v) <= 1) return 1;
        const auto& cands = candidates(v);
        double best = INFINITY;
        for (const auto& c : cands) best = std::min(best, c.alpha);
        std::vector<double> weights;
        weights.reserve(cands.size());
        for (const auto& c : cands) {
            weights.push_back(opt_.selection == Selection::Inverse ? 1.0 / (c.alpha * opt_.temperature)
                                                                   : std::exp(-(c.alpha - best) / opt_.temperature));
        }
        const int pick = std::discrete_distribution<int>(weights.begin(), weights.end())(rng);
        choices[v] = pick;
        BigInt sum = 0;
        for (const Bits& child : cands[static_cast<std::size_t>(pick)].children) sum += sample(child, rng, choices);
        return sum << cands[static_cast<std::size_t>(pick)].action.score();
    }

   private:
    void add_candidate(std::vector<Candidate>& out, const Bits& v, std::size_t n, const Bits& x, CutAction action) {
        Bits gone(v.size());
        for (VertexId u : action.deleted) gone.set(static_cast<std::size_t>(u));
        const Bits xs = x - gone;
        const Bits ys = (v - x) - gone;
        const std::size_t a = nc(xs);
        const std::size_t b = nc(ys);
        if (std::max(a, b) >= n) return;
        Candidate c;
        c.alpha = effective_alpha(action.score(), static_cast<int>(a), static_cast<int>(b), static_cast<int>(n));
        c.children = components_of(g_, xs);
        for (Bits& comp : components_of(g_, ys)) c.children.push_back(std::move(comp));
        c.action = std::move(action);
        out.push_back(std::move(c));
    }

    PlannerOptions opt_;
    Graph g_;
    Bits non_clifford_;
    Bits spiders_;
    std::vector<Bits> cuts_;
    std::unordered_map<Bits, std::vector<Candidate>> cache_;
};

int materialize(CutTree& ct, Planner& planner, const Bits& v, const std::unordered_map<Bits, int>& choices) {
    const int id = static_cast<int>(ct.nodes.size());
    ct.nodes.emplace_back();
    CutTreeNode node;
    node.vertices = to_indices(v);
    node.nc = planner.nc(v);
    std::vector<Bits> children;
    if (node.nc > 1) {
        const Candidate& c = planner.candidates(v)[static_cast<std::size_t>(choices.at(v))];
        node.kind = NodeKind::Cut;
        node.action = c.action;
        node.alpha_eff = c.alpha;
        children = c.children;
        ct.max_score = std::max(ct.max_score, c.action.score());
    }
    BigInt sum = 0;
    for (const Bits& child : children) {
        const int cid = materialize(ct, planner, child, choices);
        node.children.push_back(cid);
        sum += ct.nodes[static_cast<std::size_t>(cid)].terms;
    }
    node.terms = node.kind == NodeKind::Cut ? BigInt(sum << node.action.score()) : BigInt(1);
    ct.nodes[static_cast<std::size_t>(id)] = std::move(node);
    return id;
}

class Executor {
   public:
    Executor(const CutTree& ct, int parallelism) : ct_(ct), parallelism_(std::max(1, parallelism)) {}

    Scalar eval(int id, const ZxDiagram& d, bool parallel) {
        const CutTreeNode& node = ct_.nodes[static_cast<std::size_t>(id)];
        if (d.spiders() != node.vertices) throw PlanMismatch("sub-diagram does not match its plan node");
        if (node.kind == NodeKind::Leaf) {
            ++leaves_;
            return evaluate_leaf(d);
        }
        if (node.kind == NodeKind::Split) return children(node, d, parallel);
        const std::uint64_t n = node.action.branches();
        std::vector<Scalar> values(n, Scalar::zero());
        auto run = [&](std::uint64_t i, bool nested) {
            ZxDiagram c = d;
            const Scalar coef = apply_branch(c, node.action, i);
            values[i] = coef * children(node, c, nested);
        };
        const std::uint64_t jobs = parallel ? std::min<std::uint64_t>(n, static_cast<std::uint64_t>(parallelism_)) : 1;
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
        return total;
    }

    std::uint64_t leaves() const { return leaves_.load(); }

   private:
    Scalar children(const CutTreeNode& node, const ZxDiagram& d, bool parallel) {
        Scalar value = Scalar::one();
        for (int cid : node.children) {
            const auto& child = ct_.nodes[static_cast<std::size_t>(cid)];
            value *= eval(cid, d.induced(child.vertices), parallel);
        }
        return value;
    }

    const CutTree& ct_;
    int parallelism_;
    std::atomic<std::uint64_t> leaves_{0};
};

}  // namespace

CutTree build_cut_tree(const ZxDiagram& d, const RankDecomposition& rd, const PlannerOptions& opt) {
    if (!d.is_closed()) throw OpenDiagram("cut trees are planned on closed diagrams");
    Planner planner(d, rd, opt);
    const Bits all = planner.spiders();
    const std::vector<Bits> roots = components_of(planner.graph(), all);

    BigInt best = -1;
    std::unordered_map<Bits, int> best_choices;
    for (int t = 0; t < std::max(1, opt.trees); ++t) {
        std::mt19937_64 rng(derive_seed(opt.seed, static_cast<std::uint64_t>(t)));
        std::unordered_map<Bits, int> choices;
        BigInt terms = 0;
        for (const Bits& r : roots) terms += planner.sample(r, rng, choices);
        if (roots.empty()) terms = 1;
        if (best < 0 || terms < best) {
            best = terms;
            best_choices = std::move(choices);
        }
    }

    CutTree ct;
    ct.nc = nc_count(d);
    ct.fingerprint = structural_fingerprint(d);
    if (roots.size() == 1) {
        materialize(ct, planner, roots.front(), best_choices);
    } else {
        // Root split: the components evaluate independently and multiply.
        ct.nodes.emplace_back();
        CutTreeNode root;
        root.kind = roots.empty() ? NodeKind::Leaf : NodeKind::Split;
        root.vertices = to_indices(all);
        root.nc = ct.nc;
        BigInt sum = 0;
        for (const Bits& r : roots) {
            const int cid = materialize(ct, planner, r, best_choices);
            root.children.push_back(cid);
            sum += ct.nodes[static_cast<std::size_t>(cid)].terms;
        }
        root.terms = roots.empty() ? BigInt(1) : sum;
        ct.nodes.front() = std::move(root);
    }
    ct.term_count = ct.nodes.front().terms;
    ct.alpha = ct.nc == 0 ? 0.0 : log2_big(ct.term_count) / static_cast<double>(ct.nc);
    return ct;
}

CutTree build_cut_tree(const ZxDiagram& d, const PlannerOptions& opt, long anneal_steps) {
    AnnealOptions ao;
    ao.objective = opt.objective;
    ao.steps = anneal_steps;
    ao.seed = derive_seed(opt.seed, 0x616e6e65616cULL);
    const Graph g = id_graph(d);
    const Bits s = spider_bits(d);
    RankDecomposition rd;
    if (s.count() >= 2) {
        rd = anneal_rank_decomposition(g, s, ao).rd;
    } else {
        // Zero or one spider: no cut exists, only the universe matters.
        rd.graph_size = d.id_bound();
        if (s.any()) {
            rd.root = 0;
            rd.parent = {-1};
            rd.left = {-1};
            rd.right = {-1};
            rd.leaf_sets = {to_indices(s)};
        }
    }
    return build_cut_tree(d, rd, opt);
}

Execution execute_cut_tree(const ZxDiagram& d, const CutTree& ct, int parallelism) {
    if (ct.nodes.empty() || structural_fingerprint(d) != ct.fingerprint) {
        throw PlanMismatch("diagram changed since the cut tree was planned");
    }
    ZxDiagram body = d;
    body.scalar() = Scalar::one();
    Executor ex(ct, parallelism);
    Execution out;
    out.value = d.scalar() * ex.eval(0, body, parallelism > 1);
    out.amplitude = out.value.to_complex();
    out.leaf_evaluations = ex.leaves();
    return out;
}

std::string to_json(const CutTree& ct) {
    nlohmann::ordered_json j;
    j["term_count"] = ct.term_count.str();
    j["nc"] = ct.nc;
    j["alpha"] = ct.alpha;
    j["max_score"] = ct.max_score;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : ct.nodes) {
        nlohmann::ordered_json e;
        e["kind"] = n.kind == NodeKind::Leaf ? "leaf" : n.kind == NodeKind::Split ? "split" : "cut";
        e["vertices"] = n.vertices;
        e["nc"] = n.nc;
        e["terms"] = n.terms.str();
        if (n.kind == NodeKind::Cut) {
            e["score"] = n.action.score();
            e["alpha_eff"] = n.alpha_eff;
            e["deleted"] = n.action.deleted;
            e["pairs"] = n.action.pairs;
        }
        e["children"] = n.children;
        nodes.push_back(std::move(e));
    }
    j["nodes"] = std::move(nodes);
    return j.dump();
}

}  // namespace zxcut
