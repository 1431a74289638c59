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


#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "imatch/generators.hpp"
#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"
#include "oracles.hpp"

namespace {

using imatch::Graph;
using imatch::GraphClass;
using imatch::Vertex;

bool is_induced_cycle_witness(const Graph& g, const std::vector<Vertex>& w) {
  const std::set<Vertex> s(w.begin(), w.end());
  if (s.size() != w.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == w.size() - 1);
      if (g.adjacent(w[i], w[j]) != consecutive) return false;
    }
  return true;
}

TEST(GraphOps, CutAndInternalEdges) {
  const Graph k4 = imatch::complete_graph(4);
  const Graph c7 = imatch::cycle_graph(7);
  EXPECT_EQ(imatch::cut_size(k4, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}), 4u);
  EXPECT_EQ(imatch::cut_size(c7, std::vector<Vertex>{0}, std::vector<Vertex>{3}), 0u);
  EXPECT_EQ(imatch::internal_edges(k4, std::vector<Vertex>{1, 2, 3}), 3u);
  try {
    imatch::cut_size(k4, std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 2});
    FAIL() << "overlapping sets accepted";
  } catch (const imatch::Error& e) {
    EXPECT_EQ(e.code(), imatch::ErrorCode::NonDisjointSets);
  }
}

TEST(GraphOps, InducedCyclesOnNamedGraphs) {
  const Graph c7 = imatch::cycle_graph(7);
  for (std::size_t k : {3u, 4u, 5u}) EXPECT_FALSE(imatch::has_induced_cycle(c7, k)) << k;
  EXPECT_TRUE(imatch::has_induced_cycle(imatch::complete_graph(4), 3));
  EXPECT_FALSE(imatch::has_induced_cycle(imatch::complete_graph(4), 4));
  const Graph p = imatch::petersen_graph();
  EXPECT_FALSE(imatch::has_induced_cycle(p, 3));
  EXPECT_FALSE(imatch::has_induced_cycle(p, 4));
  const auto w = imatch::find_induced_cycle(p, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 5u);
  EXPECT_TRUE(is_induced_cycle_witness(p, *w));
  const Graph h = imatch::heawood_graph();
  for (std::size_t k : {3u, 4u, 5u}) EXPECT_FALSE(imatch::has_induced_cycle(h, k)) << k;
}

TEST(GraphOps, InducedCycleRejectsOtherLengths) {
  for (std::size_t k : {0u, 2u, 6u}) {
    try {
      imatch::has_induced_cycle(imatch::petersen_graph(), k);
      FAIL() << k;
    } catch (const imatch::Error& e) {
      EXPECT_EQ(e.code(), imatch::ErrorCode::InvalidCycleLength);
    }
  }
}

TEST(GraphOps, InducedCyclesMatchSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 5 + seed % 7;
    const double p = 0.2 + 0.1 * static_cast<double>(seed % 5);
    const Graph g = oracle::gnp(n, p, seed);
    for (std::size_t k : {3u, 4u, 5u}) {
      const auto w = imatch::find_induced_cycle(g, k);
      ASSERT_EQ(w.has_value(), oracle::has_induced_cycle(g, k)) << "seed " << seed << " k " << k;
      if (w) {
        EXPECT_EQ(w->size(), k);
        EXPECT_TRUE(is_induced_cycle_witness(g, *w));
      }
    }
  }
}

TEST(GraphOps, Claws) {
  EXPECT_TRUE(imatch::is_claw_free(imatch::complete_graph(4)));
  const Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto claw = imatch::find_claw(star);
  ASSERT_TRUE(claw.has_value());
  EXPECT_EQ(claw->center, 0u);
  EXPECT_EQ(std::set<Vertex>(claw->leaves.begin(), claw->leaves.end()), (std::set<Vertex>{1, 2, 3}));
  EXPECT_TRUE(imatch::is_claw_free(imatch::line_graph(imatch::petersen_graph())));
  EXPECT_FALSE(imatch::is_claw_free(imatch::petersen_graph()));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::gnp(4 + seed % 8, 0.3 + 0.05 * static_cast<double>(seed % 7), seed);
    EXPECT_EQ(imatch::is_claw_free(g), !oracle::has_claw(g)) << seed;
  }
}

TEST(GraphOps, LineGraphs) {
  const Graph lk4 = imatch::line_graph(imatch::complete_graph(4));
  EXPECT_EQ(lk4.num_vertices(), 6u);
  EXPECT_TRUE(lk4.is_regular());
  EXPECT_EQ(lk4.max_degree(), 4u);
  EXPECT_EQ(lk4.num_edges(), 12u);  // octahedron

  const Graph lc7 = imatch::line_graph(imatch::cycle_graph(7));
  EXPECT_EQ(lc7.num_vertices(), 7u);
  EXPECT_EQ(lc7.num_edges(), 7u);
  EXPECT_TRUE(lc7.is_regular());
  EXPECT_EQ(lc7.max_degree(), 2u);

  const Graph lp3 = imatch::line_graph(imatch::path_graph(3));
  EXPECT_EQ(lp3.num_vertices(), 2u);
  EXPECT_EQ(lp3.num_edges(), 1u);

  const Graph lp = imatch::line_graph(imatch::petersen_graph());
  EXPECT_EQ(lp.num_vertices(), 15u);
  EXPECT_TRUE(lp.is_regular());
  EXPECT_EQ(lp.max_degree(), 4u);
}

TEST(GraphOps, LineGraphVertexIsEdge) {
  const Graph g = oracle::gnp(9, 0.4, 3);
  const Graph l = imatch::line_graph(g);
  ASSERT_EQ(l.num_vertices(), g.num_edges());
  for (std::uint32_t i = 0; i < g.num_edges(); ++i)
    for (std::uint32_t j = i + 1; j < g.num_edges(); ++j) {
      const auto& a = g.edges()[i];
      const auto& b = g.edges()[j];
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      EXPECT_EQ(l.adjacent(i, j), share);
    }
}

TEST(GraphOps, Squares) {
  const Graph c7 = imatch::square(imatch::cycle_graph(7));
  EXPECT_TRUE(c7.is_regular());
  EXPECT_EQ(c7.max_degree(), 4u);
  EXPECT_EQ(c7.num_edges(), 14u);
  EXPECT_EQ(imatch::square(imatch::complete_graph(4)), imatch::complete_graph(4));
  const Graph p4 = imatch::square(imatch::path_graph(4));
  EXPECT_EQ(p4.num_edges(), 5u);
  EXPECT_FALSE(p4.adjacent(0, 3));
}

TEST(GraphOps, Certificates) {
  const auto p = imatch::certify(imatch::petersen_graph());
  EXPECT_TRUE(p.c3_free());
  EXPECT_TRUE(p.c4_free());
  EXPECT_FALSE(p.c5_free());
  EXPECT_FALSE(p.claw_free());
  EXPECT_TRUE(p.regular());
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_TRUE(p.in(GraphClass::C4Free));
  EXPECT_TRUE(p.in(GraphClass::C3C4Free));
  EXPECT_FALSE(p.in(GraphClass::C5Free));
  EXPECT_TRUE(p.in(GraphClass::General));

  const auto h = imatch::certify(imatch::heawood_graph());
  EXPECT_TRUE(h.in(GraphClass::C3C4Free));
  EXPECT_TRUE(h.in(GraphClass::C5Free));

  const auto lp = imatch::certify(imatch::line_graph(imatch::petersen_graph()));
  EXPECT_TRUE(lp.claw_free());
  EXPECT_TRUE(lp.in(GraphClass::ClawFree));
  EXPECT_EQ(lp.degree(), 4u);
}

TEST(GraphOps, ClassNames) {
  for (auto c : {GraphClass::General, GraphClass::C4Free, GraphClass::C3C4Free, GraphClass::C5Free, GraphClass::ClawFree})
    EXPECT_EQ(imatch::parse_graph_class(imatch::to_string(c)), c);
  try {
    imatch::parse_graph_class("c6free");
    FAIL();
  } catch (const imatch::Error& e) {
    EXPECT_EQ(e.code(), imatch::ErrorCode::UnknownName);
  }
}

}  // namespace
