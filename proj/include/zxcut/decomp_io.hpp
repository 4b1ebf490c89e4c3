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


#ifndef ZXCUT_DECOMP_IO_HPP
#define ZXCUT_DECOMP_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "zxcut/rank_decomposition.hpp"
#include "zxcut/tree_decomposition.hpp"

namespace zxcut {

// Rank decompositions: {"graph_size", "root", "parent", "left", "right", "leaf_sets",
// "edges"}; "edges" lists the unrooted tree for readers and is ignored on load.
nlohmann::json to_json(const RankDecomposition& rd);
RankDecomposition rank_decomposition_from_json(const nlohmann::json& j);

// Tree decompositions: {"bags": [[...]], "edges": [[a, b], ...]}.
nlohmann::json to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j);

/// Hex digest of the graph's adjacency combined with the objective and seed.
std::string cache_key(const Graph& g, Objective objective, std::uint64_t seed);

/// File cache of rank decompositions under `dir`, keyed by cache_key.
std::optional<RankDecomposition> load_cached(const std::string& dir, const std::string& key);
void store_cached(const std::string& dir, const std::string& key, const RankDecomposition& rd);

}  // namespace zxcut

#endif  // ZXCUT_DECOMP_IO_HPP
