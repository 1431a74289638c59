// Copyright 2026 The imatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <vector>

#include <gtest/gtest.h>

#include "imatch/conflict.hpp"
#include "imatch/generators.hpp"
#include "imatch/matchers.hpp"
#include "oracles.hpp"

namespace {

using imatch::EdgeId;
using imatch::Graph;
using imatch::Matching;
using imatch::Rational;

std::vector<EdgeId> ids(const Matching& m) { return {m.edges().begin(), m.edges().end()}; }

TEST(GreedyF, CompleteGraphTakesFirstEdge) {
  const auto r = imatch::greedy_f(imatch::complete_graph(4), Rational(12));
  EXPECT_EQ(ids(r.matching), (std::vector<EdgeId>{EdgeId{0}}));
  EXPECT_EQ(r.residual.num_edges(), 0u);
  EXPECT_EQ(r.residual.num_vertices(), 4u);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].conflict_count, 6u);
  EXPECT_EQ(r.trace.steps[0].edges_before, 6u);
}

TEST(GreedyF, PetersenBelowThirteenTakesNothing) {
  const Graph p = imatch::petersen_graph();
  const auto r = imatch::greedy_f(p, Rational(12));
  EXPECT_TRUE(r.matching.empty());
  EXPECT_EQ(r.residual, p);
  const auto r13 = imatch::greedy_f(p, Rational(13));
  EXPECT_FALSE(r13.matching.empty());
  EXPECT_TRUE(imatch::is_induced_matching(p, r13.matching));
}

TEST(GreedyF, ZeroThresholdAndNegative) {
  const Graph g = imatch::heawood_graph();
  const auto r = imatch::greedy_f(g, Rational(0));
  EXPECT_TRUE(r.matching.empty());
  EXPECT_EQ(r.residual, g);
  try {
    imatch::greedy_f(g, Rational(-1));
    FAIL();
  } catch (const imatch::Error& e) {
    EXPECT_EQ(e.code(), imatch::ErrorCode::InvalidArgument);
  }
}

TEST(GreedyF, FractionalThreshold) {
  // c = 5 everywhere on C7: 9/2 admits nothing, 11/2 admits edges.
  const Graph c7 = imatch::cycle_graph(7);
  EXPECT_TRUE(imatch::greedy_f(c7, Rational(9, 2)).matching.empty());
  EXPECT_FALSE(imatch::greedy_f(c7, Rational(11, 2)).matching.empty());
}

TEST(GreedyF, MatchesOracleAndResidualProperty) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::gnm(10, 8 + seed % 12, seed);
    for (std::int64_t f : {3, 5, 7, 9}) {
      const auto r = imatch::greedy_f(g, Rational(f));
      std::vector<EdgeId> picks;
      for (const auto& s : r.trace.steps) picks.push_back(s.edge);
      EXPECT_EQ(picks, oracle::greedy_f(g, f)) << "seed " << seed << " f " << f;
      EXPECT_TRUE(imatch::is_induced_matching(g, r.matching));
      for (std::uint32_t i = 0; i < r.residual.num_edges(); ++i)
        EXPECT_GT(static_cast<std::int64_t>(imatch::conflict_count(r.residual, EdgeId{i})), f);
      // residual ids map back to identical endpoints
      for (std::uint32_t i = 0; i < r.residual.num_edges(); ++i)
        EXPECT_EQ(r.residual.edges()[i], g.edge(r.residual_origin[i]));
      std::size_t removed = 0;
      for (const auto& s : r.trace.steps) {
        EXPECT_LE(static_cast<std::int64_t>(s.conflict_count), f);
        removed += s.conflict_count;
      }
      EXPECT_EQ(removed, g.num_edges() - r.residual.num_edges());
    }
  }
}

TEST(LocalSearch, SmallExamples) {
  EXPECT_EQ(imatch::local_search(imatch::cycle_graph(7)).matching.size(), 2u);
  EXPECT_EQ(imatch::local_search(imatch::complete_graph(4)).matching.size(), 1u);
  EXPECT_TRUE(imatch::local_search(Graph::build(5, std::vector<imatch::VertexPair>{})).matching.empty());
  const auto p = imatch::local_search(imatch::petersen_graph());
  EXPECT_GE(p.matching.size(), 2u);
  EXPECT_FALSE(p.trace.moves.empty());
  EXPECT_EQ(p.trace.scans, p.trace.moves.size() + 1);
}

TEST(LocalSearch, SwapIsUsed) {
  // Path 3-2-0-1-4-5: the first Add takes (0,1), which blocks both
  // (2,3) and (4,5); only a Swap reaches size 2.
  const Graph g = Graph::build(6, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {4, 5}});
  const auto r = imatch::local_search(g);
  EXPECT_EQ(r.matching.size(), 2u);
  bool swapped = false;
  for (const auto& mv : r.trace.moves) swapped = swapped || mv.kind == imatch::MoveKind::Swap;
  EXPECT_TRUE(swapped);
  EXPECT_TRUE(oracle::is_local_optimum(g, ids(r.matching)));
}

TEST(LocalSearch, MatchesUnprunedOracle) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = oracle::gnm(9 + seed % 5, 8 + seed % 11, seed);
    const auto r = imatch::local_search(g);
    EXPECT_EQ(ids(r.matching), oracle::local_search(g)) << "seed " << seed;
    EXPECT_TRUE(oracle::is_local_optimum(g, ids(r.matching))) << "seed " << seed;
  }
}

TEST(LocalSearch, TraceReplaysToResult) {
  const Graph g = imatch::random_regular(16, 3, std::uint64_t{5});
  const auto r = imatch::local_search(g);
  Matching replay;
  for (const auto& mv : r.trace.moves) {
    if (mv.kind == imatch::MoveKind::Add) {
      replay.insert(mv.first);
    } else {
      ASSERT_TRUE(replay.contains(mv.removed));
      replay.erase(mv.removed);
      replay.insert(mv.first);
      replay.insert(mv.second);
    }
    ASSERT_TRUE(imatch::is_induced_matching(g, replay));
  }
  EXPECT_EQ(replay, r.matching);
}

TEST(LocalSearch, Deterministic) {
  const Graph g = imatch::random_regular(20, 4, std::uint64_t{9});
  const auto a = imatch::local_search(g);
  const auto b = imatch::local_search(g);
  EXPECT_EQ(a.matching, b.matching);
  EXPECT_EQ(a.trace.moves.size(), b.trace.moves.size());
}

TEST(GreedyMaximal, Examples) {
  EXPECT_EQ(imatch::greedy_maximal(imatch::complete_graph(4)).size(), 1u);
  const Graph c7 = imatch::cycle_graph(7);
  EXPECT_EQ(ids(imatch::greedy_maximal(c7)), (std::vector<EdgeId>{EdgeId{0}, EdgeId{4}}));  // e1, e4
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = imatch::random_regular(14, 3 + seed % 2, seed);
    const auto m = imatch::greedy_maximal(g);
    EXPECT_TRUE(imatch::is_maximal_induced_matching(g, m));
    const auto d = static_cast<std::int64_t>(g.max_degree());
    EXPECT_GE(static_cast<std::int64_t>(m.size()) * (2 * d * d - 2 * d + 1), static_cast<std::int64_t>(g.num_edges()));
  }
}

TEST(Combined, Examples) {
  const auto k4 = imatch::combined_pipeline(imatch::complete_graph(4));
  EXPECT_EQ(k4.threshold, Rational(12));
  EXPECT_EQ(k4.greedy.matching.size(), 1u);
  EXPECT_EQ(k4.greedy.residual.num_edges(), 0u);
  EXPECT_EQ(k4.matching.size(), 1u);

  const auto p = imatch::combined_pipeline(imatch::petersen_graph());
  EXPECT_TRUE(p.greedy.matching.empty());
  EXPECT_GE(p.matching.size(), 2u);

  const auto empty = imatch::combined_pipeline(Graph::build(4, std::vector<imatch::VertexPair>{}));
  EXPECT_TRUE(empty.matching.empty());
  EXPECT_FALSE(empty.guarantee_applies);
}

TEST(Combined, ThresholdIsIntegral) {
  for (std::size_t d = 0; d < 12; ++d) {
    const Rational f = imatch::combined_threshold(d);
    EXPECT_EQ(f.denominator(), 1);
    EXPECT_EQ(f * 2, Rational(static_cast<std::int64_t>(3 * d * d - d)));
  }
}

TEST(Combined, UnionIsInducedAndMeetsGuarantee) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t d = 3 + seed % 3;
    const Graph g = imatch::random_regular(16, d, seed);
    const auto r = imatch::combined_pipeline(g);
    EXPECT_TRUE(imatch::is_induced_matching(g, r.matching));
    EXPECT_EQ(r.matching.size(), r.greedy.matching.size() + r.residual_matching.size());
    EXPECT_TRUE(r.guarantee_applies);
    EXPECT_GE(Rational(static_cast<std::int64_t>(r.matching.size())) * r.threshold,
              Rational(static_cast<std::int64_t>(g.num_edges())));
  }
}

}  // namespace
