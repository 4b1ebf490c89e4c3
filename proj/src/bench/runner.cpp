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


#include "zxcut/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include "zxcut/anneal.hpp"
#include "zxcut/error.hpp"
#include "zxcut/generators.hpp"
#include "zxcut/graph.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/splitmix.hpp"

namespace zxcut {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

double to_number(const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("grid value '" + tok + "' is not a number");
}

std::vector<double> values(const std::string& list) {
    std::vector<double> out;
    for (const std::string& item : split(list, ',')) {
        if (auto colon = item.find(':'); colon != std::string::npos) {
            const double lo = to_number(item.substr(0, colon));
            const double hi = to_number(item.substr(colon + 1));
            if (lo != std::floor(lo) || hi != std::floor(hi) || hi < lo) {
                throw ParseError("grid range '" + item + "' needs integers lo <= hi");
            }
            for (double v = lo; v <= hi; v += 1) out.push_back(v);
        } else {
            out.push_back(to_number(item));
        }
    }
    if (out.empty()) throw ParseError("empty grid value list '" + list + "'");
    return out;
}

int as_int(double v, const std::string& key) {
    if (v != std::floor(v) || v < 0) throw ParseError("grid key '" + key + "' needs non-negative integers");
    return static_cast<int>(v);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

template <typename T>
std::string opt_field(const std::optional<T>& v) {
    return v ? fmt(static_cast<double>(*v)) : std::string();
}

}  // namespace

std::vector<BenchInstance> expand_grid(const std::string& family, const std::string& grid) {
    std::map<std::string, std::vector<double>> keys;
    for (const std::string& part : split(grid, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("grid entry '" + part + "' is not key=values");
        keys[part.substr(0, eq)] = values(part.substr(eq + 1));
    }
    auto take = [&](const std::string& key, std::vector<double> fallback) {
        auto it = keys.find(key);
        if (it == keys.end()) {
            if (fallback.empty()) throw ParseError("grid for '" + family + "' needs key '" + key + "'");
            return fallback;
        }
        std::vector<double> v = std::move(it->second);
        keys.erase(it);
        return v;
    };

    std::vector<BenchInstance> out;
    if (family == "er") {
        const auto ns = take("n", {});
        const auto ps = take("p", {});
        const auto seeds = take("seed", {0});
        for (double n : ns) {
            for (double p : ps) {
                for (double s : seeds) {
                    BenchInstance inst;
                    inst.family = family;
                    inst.n = as_int(n, "n");
                    inst.p = p;
                    inst.seed = static_cast<std::uint64_t>(as_int(s, "seed"));
                    out.push_back(inst);
                }
            }
        }
    } else if (family == "cliffordrz") {
        const auto qs = take("qubits", {});
        const auto gs = take("gates", {});
        const auto seeds = take("seed", {0});
        const auto pp = take("p_phase", {0.2});
        for (double q : qs) {
            for (double g : gs) {
                for (double s : seeds) {
                    BenchInstance inst;
                    inst.family = family;
                    inst.n_qubits = as_int(q, "qubits");
                    inst.n_gates = as_int(g, "gates");
                    inst.p_phase = pp.front();
                    inst.seed = static_cast<std::uint64_t>(as_int(s, "seed"));
                    out.push_back(inst);
                }
            }
        }
    } else if (family == "pauli") {
        const auto qs = take("qubits", {});
        const auto gs = take("gadgets", {-1});
        const auto seeds = take("seed", {0});
        for (double q : qs) {
            for (double g : gs) {
                for (double s : seeds) {
                    const int qubits = as_int(q, "qubits");
                    const int gadgets = g < 0 ? 2 * qubits : as_int(g, "gadgets");
                    BenchInstance inst;
                    inst.family = family;
                    inst.n_qubits = qubits;
                    inst.n_gates = gadgets;
                    inst.seed = static_cast<std::uint64_t>(as_int(s, "seed"));
                    out.push_back(inst);
                }
            }
        }
    } else {
        throw ParseError("unknown benchmark family '" + family + "' (er, cliffordrz, pauli)");
    }
    if (!keys.empty()) throw ParseError("grid key '" + keys.begin()->first + "' does not apply to " + family);
    return out;
}

ZxDiagram instance_diagram(const BenchInstance& inst) {
    if (inst.family == "er") return gen_erdos_renyi(inst.n.value(), inst.p.value(), inst.seed);
    if (inst.family == "cliffordrz") {
        return to_diagram(gen_clifford_rz(inst.n_qubits.value(), inst.n_gates.value(), inst.p_phase, inst.seed));
    }
    if (inst.family == "pauli") return to_diagram(gen_pauli_gadgets(inst.n_qubits.value(), inst.n_gates.value(), inst.seed));
    throw ParseError("unknown benchmark family '" + inst.family + "'");
}

Analysis analyze(const ZxDiagram& raw, const BenchOptions& opt, std::uint64_t seed) {
    Analysis a;
    a.reduced = full_reduce(to_graph_like(raw));
    PlannerOptions po;
    po.trees = opt.trees;
    po.temperature = opt.temperature;
    po.selection = opt.selection;
    po.seed = derive_seed(seed, 3);
    po.objective = Objective::Mixed;
    const Bits s = spider_bits(a.reduced);
    if (s.count() < 2) {
        a.plan = build_cut_tree(a.reduced, po, opt.anneal_steps);
        return a;
    }
    const Graph g = id_graph(a.reduced);
    AnnealOptions ao;
    ao.steps = opt.anneal_steps;
    ao.objective = Objective::CutRank;
    ao.seed = derive_seed(seed, 1);
    a.rank_width = anneal_rank_decomposition(g, s, ao).width;
    ao.objective = Objective::Mixed;
    ao.seed = derive_seed(seed, 2);
    const AnnealResult mixed = anneal_rank_decomposition(g, s, ao);
    a.mixed_rank_width = mixed.width;
    a.plan = build_cut_tree(a.reduced, mixed.rd, po);
    return a;
}

BenchRow run_instance(const BenchInstance& inst, const BenchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const ZxDiagram raw = instance_diagram(inst);
    BenchRow row;
    row.instance = inst;
    row.n_vertices = to_graph_like(raw).num_spiders();
    const Analysis a = analyze(raw, opt, inst.seed);
    row.nc = a.reduced.num_spiders() == 0 ? 0 : nc_count(a.reduced);
    row.rank_width = a.rank_width;
    row.mixed_rank_width = a.mixed_rank_width;
    row.alpha = a.plan.alpha;
    row.terms_log2 = a.plan.nc == 0 ? 0.0 : a.plan.alpha * static_cast<double>(a.plan.nc);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<BenchRow> run_bench(const std::string& family, const std::string& grid, const BenchOptions& opt) {
    const std::vector<BenchInstance> insts = expand_grid(family, grid);
    std::vector<BenchRow> rows(insts.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(insts.size(), static_cast<std::size_t>(std::max(1, opt.jobs))));
    std::vector<std::future<void>> futures;
    for (std::size_t t = 0; t < jobs; ++t) {
        futures.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, t] {
            for (std::size_t i = t; i < insts.size(); i += jobs) rows[i] = run_instance(insts[i], opt);
        }));
    }
    for (auto& f : futures) f.get();
    return rows;
}

std::string csv_header() {
    return "family,n_qubits,n_gates,n_vertices,nc,p,rank_width,mixed_rank_width,alpha,terms_log2,seed,wall_ms";
}

std::string csv_row(const BenchRow& r) {
    std::ostringstream out;
    out << r.instance.family << ',' << opt_field(r.instance.n_qubits) << ',' << opt_field(r.instance.n_gates) << ','
        << r.n_vertices << ',' << r.nc << ',' << opt_field(r.instance.p) << ',' << r.rank_width << ','
        << r.mixed_rank_width << ',' << fmt(r.alpha) << ',' << fmt(r.terms_log2) << ',' << r.instance.seed << ','
        << fmt(r.wall_ms);
    return out.str();
}

}  // namespace zxcut
