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


// Benchmark sweeps: instance grids, per-instance width and plan measurements, CSV rows.

#ifndef ZXCUT_RUNNER_HPP
#define ZXCUT_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxcut/cut_tree.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

struct BenchOptions {
    int trees = 5000;
    Selection selection = Selection::Inverse;
    double temperature = 0.05;
    long anneal_steps = 20000;
    int jobs = 1;
};

/// One benchmark instance. Fields that do not apply to a family stay empty.
struct BenchInstance {
    std::string family;
    /// Vertex count of an Erdos-Renyi instance.
    std::optional<int> n;
    std::optional<int> n_qubits;
    std::optional<int> n_gates;
    std::optional<double> p;
    /// RZ probability of the cliffordrz family.
    double p_phase = 0.2;
    std::uint64_t seed = 0;
};

struct BenchRow {
    BenchInstance instance;
    /// Spiders of the graph-like diagram before simplification; nc is counted after it.
    std::size_t n_vertices = 0;
    std::size_t nc = 0;
    int rank_width = 0;
    int mixed_rank_width = 0;
    double alpha = 0;
    double terms_log2 = 0;
    double wall_ms = 0;
};

/// Families: "er" (keys n, p, seed), "cliffordrz" (qubits, gates, seed, p_phase), and
/// "pauli" (qubits, gadgets, seed; gadgets defaults to twice the qubit count).
/// Grid syntax: `key=v1,v2,...;key=...`, where an integer value may be a range `lo:hi`.
/// Rows are the cartesian product in key order n|qubits, p|gates|gadgets, seed.
/// Throws ParseError.
std::vector<BenchInstance> expand_grid(const std::string& family, const std::string& grid);

/// The raw (unsimplified) diagram of an instance.
ZxDiagram instance_diagram(const BenchInstance& inst);

/// Measurements on a diagram: to_graph_like and full_reduce, then annealed rank-width,
/// annealed mixed width, and the best cut tree over the mixed decomposition.
struct Analysis {
    ZxDiagram reduced;
    int rank_width = 0;
    int mixed_rank_width = 0;
    CutTree plan;
};
Analysis analyze(const ZxDiagram& raw, const BenchOptions& opt, std::uint64_t seed);

BenchRow run_instance(const BenchInstance& inst, const BenchOptions& opt);

/// All instances of the grid, on up to opt.jobs threads; rows come back in grid order.
std::vector<BenchRow> run_bench(const std::string& family, const std::string& grid, const BenchOptions& opt);

/// family,n_qubits,n_gates,n_vertices,nc,p,rank_width,mixed_rank_width,alpha,terms_log2,seed,wall_ms
std::string csv_header();
std::string csv_row(const BenchRow& row);

}  // namespace zxcut

#endif  // ZXCUT_RUNNER_HPP
