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

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/naive_f2.hpp"
#include "../support/random_diagrams.hpp"
#include "zxcut/error.hpp"
#include "zxcut/f2linalg.hpp"
#include "zxcut/rewrite.hpp"

namespace zxcut {
namespace {

using testing::IntMatrix;
using testing::naive_rank;

Graph graph_from(const IntMatrix& adj) {
    Graph g(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            if (adj[i][j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

F2Matrix matrix_from(const IntMatrix& m, std::size_t cols) {
    F2Matrix f(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) f.set(i, j, m[i][j] != 0);
    }
    return f;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
}

Bits range_set(std::size_t n, int lo, int hi) {
    Bits x(n);
    for (int i = lo; i < hi; ++i) x.set(i);
    return x;
}

TEST(F2Matrix, TextGridRoundTrip) {
    F2Matrix m = F2Matrix::from_string("101\n011\n");
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m.to_string(), "101\n011\n");
    EXPECT_EQ(F2Matrix::from_string(m.to_string()), m);
    EXPECT_THROW(F2Matrix::from_string("10\n1\n"), ParseError);
    EXPECT_EQ(m.transpose().transpose(), m);
}

TEST(F2Matrix, RankBoundsAndPermutationInvariance) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 20;
        std::size_t c = 1 + rng() % 20;
        IntMatrix im = testing::random_int_matrix(rng, r, c, 0.3);
        F2Matrix m = matrix_from(im, c);
        int rank = m.rank();
        EXPECT_EQ(rank, naive_rank(im));
        EXPECT_LE(rank, static_cast<int>(std::min(r, c)));
        EXPECT_EQ(m.transpose().rank(), rank);
        std::shuffle(im.begin(), im.end(), rng);
        std::vector<std::size_t> perm(c);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix pm = im;
        for (auto& row : pm) {
            for (std::size_t j = 0; j < c; ++j) row[j] = im[&row - &pm[0]][perm[j]];
        }
        EXPECT_EQ(matrix_from(pm, c).rank(), rank);
    }
}

TEST(CutRank, TrivialSides) {
    std::mt19937_64 rng(42);
    Graph g = graph_from(testing::random_adjacency(rng, 9, 0.5));
    EXPECT_EQ(cut_rank(g, Bits(9)), 0);
    EXPECT_EQ(cut_rank(g, g.full_set()), 0);
}

TEST(CutRank, CompleteBipartiteSideHasRankOne) {
    Graph g = complete_bipartite(3, 4);
    EXPECT_EQ(cut_rank(g, range_set(7, 0, 3)), 1);
}

TEST(CutRank, MatchesNaiveEliminationAndIsSymmetric) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 300; ++t) {
        IntMatrix adj = testing::random_adjacency(rng, 10, 0.2 + 0.6 * (t % 5) / 4.0);
        Graph g = graph_from(adj);
        std::vector<int> ids(10);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<int> x(ids.begin(), ids.begin() + 5);
        std::vector<int> y(ids.begin() + 5, ids.end());
        Bits bx = from_indices(10, x);
        int expect = naive_rank(testing::naive_cut_matrix(adj, x, y));
        EXPECT_EQ(cut_rank(g, bx), expect);
        EXPECT_EQ(cut_rank(g, ~bx), expect);
        EXPECT_EQ(g.biadjacency(bx).rank(), expect);
    }
}

TEST(BipartiteDecomposition, IdentityGivesSingletons) {
    BipartiteDecomposition dec = bipartite_decomposition(F2Matrix::identity(3));
    ASSERT_EQ(dec.pairs.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(dec.pairs[i].first, std::vector<int>{i});
        EXPECT_EQ(dec.pairs[i].second, std::vector<int>{i});
    }
}

TEST(BipartiteDecomposition, AllOnesGivesOnePair) {
    BipartiteDecomposition dec = bipartite_decomposition(F2Matrix::ones(4, 5));
    ASSERT_EQ(dec.pairs.size(), 1u);
    EXPECT_EQ(dec.pairs[0].first, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(dec.pairs[0].second, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(BipartiteDecomposition, ReconstructsWithRankPairs) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng() % 32;
        std::size_t c = 1 + rng() % 32;
        IntMatrix im = testing::random_int_matrix(rng, r, c, 0.1 + 0.8 * (t % 4) / 3.0);
        F2Matrix m = matrix_from(im, c);
        BipartiteDecomposition dec = bipartite_decomposition(m);
        EXPECT_EQ(reconstruct(dec, r, c), m);
        EXPECT_EQ(static_cast<int>(dec.pairs.size()), naive_rank(im));
    }
}

TEST(EssentialRows, MatchBruteForceRankDrop) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 10;
        std::size_t c = 1 + rng() % 10;
        IntMatrix im = testing::random_int_matrix(rng, r, c, 0.35);
        Bits er = essential_rows(matrix_from(im, c));
        int rank = naive_rank(im);
        for (std::size_t i = 0; i < r; ++i) {
            IntMatrix without = im;
            without.erase(without.begin() + static_cast<long>(i));
            EXPECT_EQ(er.test(i), naive_rank(without) < rank);
        }
    }
}

TEST(MixedDecomposition, CompleteBipartiteExhaustive) {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            Graph g = complete_bipartite(a, b);
            MixedCut cut = mixed_cut(g, range_set(a + b, 0, a));
            if (std::min(a, b) >= 2) {
                EXPECT_EQ(cut.score, 2) << a << "x" << b;
                EXPECT_EQ(cut.pairs.size(), 1u);
                EXPECT_TRUE(cut.deleted.empty());
            } else {
                EXPECT_EQ(cut.score, 1) << a << "x" << b;
                EXPECT_EQ(cut.deleted.size(), 1u);
            }
        }
    }
}

TEST(MixedDecomposition, EmptyCut) {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    MixedCut cut = mixed_cut(g, range_set(6, 0, 3));
    EXPECT_EQ(cut.score, 0);
    EXPECT_TRUE(cut.pairs.empty());
    EXPECT_TRUE(cut.deleted.empty());
}

TEST(MixedDecomposition, StarDeletesCentre) {
    Graph g(7);
    for (int i = 1; i < 7; ++i) g.add_edge(0, i);
    Bits centre(7);
    centre.set(0);
    MixedCut cut = mixed_cut(g, centre);
    EXPECT_EQ(cut.score, 1);
    EXPECT_EQ(cut.deleted, std::vector<int>{0});
}

TEST(MixedDecomposition, RandomCutsSatisfyBounds) {
    std::mt19937_64 rng(46);
    int improvable = 0;
    for (int t = 0; t < 400; ++t) {
        std::size_t n = 4 + rng() % 14;
        Graph g = graph_from(testing::random_adjacency(rng, n, 0.1 + 0.8 * (t % 5) / 4.0));
        Bits x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, rng() % 2);
        F2Matrix m = g.biadjacency(x);
        MixedDecomposition dec = mixed_decomposition_greedy(m);
        ASSERT_TRUE(verify_mixed(m, dec));
        int rank = cut_rank(g, x);
        int score = dec.score();
        EXPECT_LE(score, 2 * rank);
        EXPECT_LE(score, static_cast<int>(std::min(x.count(), n - x.count())));
        if (rank > 0 && (essential_rows(m).any() || essential_cols(m).any())) {
            EXPECT_LT(score, 2 * rank);
            ++improvable;
        }
        EXPECT_EQ(mixed_score(g, x), mixed_score(g, ~x));
    }
    EXPECT_GT(improvable, 0);
}

TEST(MixedDecomposition, GraphCutTranslatesIndices) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 5 + rng() % 10;
        Graph g = graph_from(testing::random_adjacency(rng, n, 0.5));
        Bits x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, rng() % 2);
        MixedCut cut = mixed_cut(g, x);
        // Remove deleted vertices, then the pairs must toggle the remaining cross edges away.
        Graph h = g;
        for (int v : cut.deleted) {
            for (std::size_t w = 0; w < n; ++w) h.remove_edge(v, static_cast<int>(w));
        }
        for (const auto& [a, b] : cut.pairs) {
            for (int u : a) {
                EXPECT_TRUE(x.test(u));
                for (int w : b) h.toggle_edge(u, w);
            }
            for (int w : b) EXPECT_FALSE(x.test(w));
        }
        EXPECT_EQ(cut_rank(h, x), 0);
    }
}

TEST(Graph, PivotMatchesDiagramPivot) {
    std::mt19937_64 rng(48);
    for (int t = 0; t < 100; ++t) {
        ZxDiagram d = testing::random_graph_like(rng, 9, 0.5, testing::PhaseMix::Clifford);
        DiagramGraph dg = graph_of(d);
        int u = static_cast<int>(rng() % 9);
        if (dg.graph.degree(u) == 0) continue;
        int v = static_cast<int>(dg.graph.adj(u).find_first());
        d.set_phase(u, Phase::zero());
        d.set_phase(v, Phase::pi());
        ZxDiagram p = pivot(d, u, v);
        Graph h = dg.graph;
        h.pivot(u, v);
        for (int a = 0; a < 9; ++a) {
            for (int b = a + 1; b < 9; ++b) {
                if (a == u || a == v || b == u || b == v) continue;
                EXPECT_EQ(h.has_edge(a, b), p.connected(a, b));
            }
        }
    }
}

TEST(Graph, ComponentsAndInduced) {
    Graph g(6);
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    g.add_edge(1, 5);
    auto comps = g.components();
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0], (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(comps[1], (std::vector<int>{1, 5}));
    EXPECT_EQ(comps[2], std::vector<int>{3});
    Graph h = g.induced({2, 4, 5});
    EXPECT_TRUE(h.has_edge(0, 1));
    EXPECT_EQ(h.num_edges(), 1u);
}

}  // namespace
}  // namespace zxcut
