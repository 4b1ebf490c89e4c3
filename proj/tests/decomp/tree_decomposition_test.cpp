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


#include <gtest/gtest.h>

#include <random>

#include "../support/naive_f2.hpp"
#include "zxcut/error.hpp"
#include "zxcut/separators.hpp"
#include "zxcut/tree_decomposition.hpp"

namespace zxcut {
namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

// Component weights of g[vertices \ sep], by flood fill.
std::vector<double> component_weights(const Graph& g, const Bits& vertices, const Bits& sep, const Weights& w) {
    Bits left = vertices - sep;
    std::vector<double> out;
    while (left.any()) {
        Bits comp(g.size());
        Bits frontier(g.size());
        frontier.set(left.find_first());
        while (frontier.any()) {
            comp |= frontier;
            Bits next(g.size());
            for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
                next |= g.adj(static_cast<int>(v)) & left;
            }
            frontier = next - comp;
        }
        out.push_back(total(w, comp));
        left -= comp;
    }
    return out;
}

TEST(MinFill, TreeHasWidthOne) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng() % 20;
        Graph g(n);
        for (std::size_t v = 1; v < n; ++v) g.add_edge(static_cast<int>(v), static_cast<int>(rng() % v));
        TreeDecomposition td = min_fill_decomposition(g);
        EXPECT_EQ(validate(td, g, g.full_set()), "");
        EXPECT_EQ(td.width(), 1);
    }
}

TEST(MinFill, CycleHasWidthTwo) {
    for (int n = 3; n <= 20; ++n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        TreeDecomposition td = min_fill_decomposition(g);
        EXPECT_EQ(validate(td, g, g.full_set()), "");
        EXPECT_EQ(td.width(), 2) << "C_" << n;
    }
}

TEST(MinFill, CliqueIsOneBagWide) {
    for (int n = 1; n <= 9; ++n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        }
        EXPECT_EQ(min_fill_decomposition(g).width(), n - 1);
    }
}

TEST(MinFill, RandomGraphsAndSubsetsAreValid) {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 30;
        Graph g = random_graph(rng, n, 0.05 + 0.5 * (t % 5) / 4.0);
        Bits sub(n);
        for (std::size_t i = 0; i < n; ++i) sub.set(i, rng() % 4 != 0);
        EXPECT_EQ(validate(min_fill_decomposition(g), g, g.full_set()), "");
        EXPECT_EQ(validate(min_fill_decomposition(g, sub), g, sub), "");
    }
}

TEST(TreeDecompositionChecks, EachPropertyDetectedIndependently) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    Bits all = g.full_set();
    TreeDecomposition good{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    ASSERT_EQ(validate(good, g, all), "");

    TreeDecomposition no_vertex{{{0, 1}, {1, 2}}, {{0, 1}}};
    EXPECT_FALSE(covers_vertices(no_vertex, all));
    EXPECT_TRUE(is_tree(no_vertex));

    TreeDecomposition no_edge{{{0, 1}, {1}, {2, 3}}, {{0, 1}, {1, 2}}};
    EXPECT_TRUE(covers_vertices(no_edge, all));
    EXPECT_FALSE(covers_edges(no_edge, g, all));
    EXPECT_TRUE(has_connected_occurrences(no_edge));

    TreeDecomposition split{{{0, 1}, {2, 3}, {1, 2}}, {{0, 1}, {1, 2}}};
    EXPECT_TRUE(covers_edges(split, g, all));
    EXPECT_FALSE(has_connected_occurrences(split));

    TreeDecomposition cyclic{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}, {2, 0}}};
    EXPECT_FALSE(is_tree(cyclic));
}

TEST(BalancedSeparator, PathMiddle) {
    Graph g(5);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 1);
    Weights w(5, 1.0);
    Bits sep = balanced_separator(min_fill_decomposition(g), g, g.full_set(), w);
    for (double c : component_weights(g, g.full_set(), sep, w)) EXPECT_LE(c, 2.5);
    EXPECT_LE(sep.count(), 2u);
}

TEST(BalancedSeparator, StarCentre) {
    Graph g(8);
    for (int i = 1; i < 8; ++i) g.add_edge(0, i);
    Weights w(8, 1.0);
    Bits sep = balanced_separator(min_fill_decomposition(g), g, g.full_set(), w);
    EXPECT_TRUE(sep.test(0));
    EXPECT_LE(sep.count(), 2u);
}

TEST(BalancedSeparator, RandomGraphsMeetBothBounds) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 14;
        Graph g = random_graph(rng, n, 0.1 + 0.5 * (t % 4) / 3.0);
        Weights w(n);
        for (auto& x : w) x = t % 2 ? 1.0 : static_cast<double>(rng() % 3);
        Bits all = g.full_set();
        if (!(total(w, all) > 0)) {
            EXPECT_THROW(balanced_separator(min_fill_decomposition(g), g, all, w), PreconditionViolation);
            continue;
        }
        TreeDecomposition td = min_fill_decomposition(g);
        Bits sep = balanced_separator(td, g, all, w);
        EXPECT_LE(static_cast<int>(sep.count()), td.width() + 1);
        for (double c : component_weights(g, all, sep, w)) EXPECT_LE(c, total(w, all) / 2 + 1e-12);
    }
}

}  // namespace
}  // namespace zxcut
