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


#include "zxcut/decomp_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zxcut/error.hpp"

namespace zxcut {

using nlohmann::json;

json to_json(const RankDecomposition& rd) {
    json edges = json::array();
    for (auto [a, b] : rd.unrooted_edges()) edges.push_back({a, b});
    return json{{"graph_size", rd.graph_size}, {"root", rd.root},           {"parent", rd.parent},
                {"left", rd.left},             {"right", rd.right},         {"leaf_sets", rd.leaf_sets},
                {"edges", std::move(edges)}};
}

RankDecomposition rank_decomposition_from_json(const json& j) {
    RankDecomposition rd;
    try {
        rd.graph_size = j.at("graph_size").get<std::size_t>();
        rd.root = j.at("root").get<int>();
        rd.parent = j.at("parent").get<std::vector<int>>();
        rd.left = j.at("left").get<std::vector<int>>();
        rd.right = j.at("right").get<std::vector<int>>();
        rd.leaf_sets = j.at("leaf_sets").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("rank decomposition json: ") + e.what());
    }
    const std::size_t n = rd.parent.size();
    if (rd.left.size() != n || rd.right.size() != n || rd.leaf_sets.size() != n) {
        throw ParseError("rank decomposition json: array sizes differ");
    }
    return rd;
}

json to_json(const TreeDecomposition& td) { return json{{"bags", td.bags}, {"edges", td.edges}}; }

TreeDecomposition tree_decomposition_from_json(const json& j) {
    TreeDecomposition td;
    try {
        td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
        td.edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("tree decomposition json: ") + e.what());
    }
    return td;
}

std::string cache_key(const Graph& g, Objective objective, std::uint64_t seed) {
    // FNV-1a over the upper-triangular adjacency.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Bits& r = g.adj(static_cast<int>(v));
        for (auto u = r.find_next(v); u != Bits::npos; u = r.find_next(u)) mix(v << 32 | u);
    }
    mix(static_cast<std::uint64_t>(objective));
    mix(seed);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf) + "-" + objective_name(objective);
}

std::optional<RankDecomposition> load_cached(const std::string& dir, const std::string& key) {
    std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("cached decomposition: ") + e.what());
    }
    return rank_decomposition_from_json(j);
}

void store_cached(const std::string& dir, const std::string& key, const RankDecomposition& rd) {
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / (key + ".json"));
    if (!out) throw Error("cannot write decomposition cache in " + dir);
    out << to_json(rd).dump() << '\n';
}

}  // namespace zxcut
