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


// zxcut command-line front end: simulate, plan, bench, widths.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxcut/anneal.hpp"
#include "zxcut/circuit.hpp"
#include "zxcut/cut_tree.hpp"
#include "zxcut/error.hpp"
#include "zxcut/graph.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/runner.hpp"
#include "zxcut/serialize.hpp"
#include "zxcut/simulate.hpp"
#include "zxcut/splitmix.hpp"
#include "zxcut/tree_decomposition.hpp"

namespace {

using namespace zxcut;

/// A diagram JSON file starts with '{'; anything else is read as a circuit.
ZxDiagram load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return diagram_from_string(text);
    return to_diagram(parse_circuit(text));
}

void add_planner_flags(CLI::App* cmd, BenchOptions& opt) {
    static const std::map<std::string, Selection> selections{{"inverse", Selection::Inverse},
                                                             {"boltzmann", Selection::Boltzmann}};
    cmd->add_option("--trees", opt.trees, "Sampled cut trees")->check(CLI::PositiveNumber);
    cmd->add_option("--selection", opt.selection, "Cut selection rule")
        ->transform(CLI::CheckedTransformer(selections, CLI::ignore_case));
    cmd->add_option("--temperature", opt.temperature, "Selection temperature")->check(CLI::PositiveNumber);
    cmd->add_option("--anneal-steps", opt.anneal_steps, "Annealing steps per decomposition");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amplitude simulation of ZX-diagrams by width-guided cutting"};
    app.require_subcommand(1);

    std::string file;
    std::uint64_t seed = 0;

    SimConfig sim;
    std::string mode = "rankwidth";
    bool no_clifford_base = false;
    auto* simulate_cmd = app.add_subcommand("simulate", "Compute <0...0|C|0...0> or a closed diagram's value");
    simulate_cmd->add_option("file", file, "Circuit or diagram JSON file")->required();
    simulate_cmd->add_option("--mode", mode, "rankwidth or treewidth")->check(CLI::IsMember({"rankwidth", "treewidth"}));
    simulate_cmd->add_flag("--mixed", sim.use_mixed, "Use mixed cuts");
    simulate_cmd->add_flag("--no-clifford-base", no_clifford_base, "Cut down to single spiders");
    simulate_cmd->add_option("--threshold", sim.hybrid_threshold, "Non-Clifford count at which recursion stops")
        ->check(CLI::NonNegativeNumber);
    simulate_cmd->add_option("--seed", seed, "Random seed");
    simulate_cmd->add_option("--jobs", sim.parallelism, "Worker threads")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--anneal-steps", sim.anneal_steps, "Annealing steps");

    BenchOptions plan_opt;
    auto* plan_cmd = app.add_subcommand("plan", "Emit the best cut tree without executing it");
    plan_cmd->add_option("file", file, "Circuit or diagram JSON file")->required();
    plan_cmd->add_option("--seed", seed, "Random seed");
    add_planner_flags(plan_cmd, plan_opt);

    BenchOptions bench_opt;
    std::string family;
    std::string grid;
    std::string out;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark grid and write CSV");
    bench_cmd->add_option("family", family, "er, cliffordrz or pauli")->required();
    bench_cmd->add_option("--grid", grid, "Grid such as n=12,18;p=0.1,0.5;seed=0:4")->required();
    bench_cmd->add_option("--out", out, "Output CSV (stdout when omitted)");
    bench_cmd->add_option("--jobs", bench_opt.jobs, "Instances run in parallel")->check(CLI::PositiveNumber);
    add_planner_flags(bench_cmd, bench_opt);

    long width_steps = 20000;
    auto* widths_cmd = app.add_subcommand("widths", "Annealed rank, mixed and tree widths after simplification");
    widths_cmd->add_option("file", file, "Circuit or diagram JSON file")->required();
    widths_cmd->add_option("--seed", seed, "Random seed");
    widths_cmd->add_option("--anneal-steps", width_steps, "Annealing steps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate_cmd) {
            sim.mode = parse_mode(mode);
            sim.use_clifford_base = !no_clifford_base;
            sim.seed = seed;
            std::cout << stats_json(simulate(load(file), sim)) << '\n';
        } else if (*plan_cmd) {
            const Analysis a = analyze(load(file), plan_opt, seed);
            std::cout << to_json(a.plan) << '\n';
        } else if (*bench_cmd) {
            const auto rows = run_bench(family, grid, bench_opt);
            std::ofstream file_out;
            if (!out.empty()) {
                file_out.open(out);
                if (!file_out) throw ParseError("cannot write " + out);
            }
            std::ostream& os = out.empty() ? std::cout : file_out;
            os << csv_header() << '\n';
            for (const BenchRow& r : rows) os << csv_row(r) << '\n';
        } else if (*widths_cmd) {
            const ZxDiagram reduced = full_reduce(to_graph_like(load(file)));
            const Bits s = spider_bits(reduced);
            nlohmann::ordered_json j;
            j["spiders"] = s.count();
            j["nc"] = nc_count(reduced);
            int rank = 0;
            int mixed = 0;
            int tree = s.none() ? -1 : 0;
            if (s.count() >= 2) {
                const Graph g = id_graph(reduced);
                AnnealOptions ao;
                ao.steps = width_steps;
                ao.seed = derive_seed(seed, 1);
                rank = anneal_rank_decomposition(g, s, ao).width;
                ao.objective = Objective::Mixed;
                ao.seed = derive_seed(seed, 2);
                mixed = anneal_rank_decomposition(g, s, ao).width;
                tree = min_fill_decomposition(g, s).width();
            }
            j["rank_width"] = rank;
            j["mixed_rank_width"] = mixed;
            j["tree_width"] = tree;
            std::cout << j.dump() << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "zxcut: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
