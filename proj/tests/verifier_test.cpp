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


#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "imatch/generators.hpp"
#include "imatch/matchers.hpp"
#include "imatch/verifier.hpp"

namespace {

using imatch::BoundCheck;
using imatch::EdgeId;
using imatch::Graph;
using imatch::Matching;
using imatch::Rational;

const BoundCheck& find(const std::vector<BoundCheck>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c;
  static BoundCheck missing;
  ADD_FAILURE() << "no check " << id;
  return missing;
}

void expect_all_pass(const std::vector<BoundCheck>& checks) {
  for (const auto& c : checks) EXPECT_TRUE(!c.applicable || c.pass) << c.id << ": " << c.context;
}

TEST(Verifier, ConflictBoundTightOnPetersen) {
  const auto c = imatch::check_conflict_bound(imatch::petersen_graph());
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.instances, 15u);
  EXPECT_EQ(c.lhs, Rational(13));
  EXPECT_EQ(c.rhs, Rational(13));
  EXPECT_NE(c.note.find("tight on 15 of 15"), std::string::npos);
}

TEST(Verifier, PetersenLocalSearchPassesEverything) {
  const Graph p = imatch::petersen_graph();
  const auto m = imatch::local_search(p).matching;
  const auto checks = imatch::check_ls_properties(p, m);
  expect_all_pass(checks);
  for (const char* id : {"prop1.maximal", "prop2.pc_pairwise", "lemma1.i", "lemma1.ii", "lemma1.iii", "p.upper", "p.lower"})
    EXPECT_TRUE(find(checks, id).applicable) << id;
}

TEST(Verifier, CompleteGraphSingleEdge) {
  const Graph k4 = imatch::complete_graph(4);
  const auto checks = imatch::check_ls_properties(k4, Matching{EdgeId{0}});
  expect_all_pass(checks);
  EXPECT_EQ(find(checks, "lemma1.iii").lhs, Rational(0));  // N2 is empty
}

TEST(Verifier, SevenCycleDegreeTwo) {
  const Graph c7 = imatch::cycle_graph(7);
  const Matching m{EdgeId{0}, EdgeId{4}};
  const auto checks = imatch::check_ls_properties(c7, m);
  expect_all_pass(checks);
  const auto& shape = find(checks, "lemma1.i");
  EXPECT_TRUE(shape.applicable);
  EXPECT_EQ(shape.instances, 2u);
  EXPECT_EQ(shape.lhs, Rational(0));
  EXPECT_FALSE(find(checks, "lemma1.iii").applicable);
  for (const auto& c : imatch::check_theorem1(c7, m, Rational(0), 0)) EXPECT_FALSE(c.applicable);
  for (const auto& c : imatch::check_class_theorems(c7, m, imatch::certify(c7))) EXPECT_FALSE(c.applicable);
}

TEST(Verifier, DetectsNonLocalOptimum) {
  // (0,1) alone is maximal, but its private conflicts contain three
  // compatible pairs, e.g. (2,3), (4,5).
  const Graph g = Graph::build(6, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {4, 5}});
  const auto checks = imatch::check_ls_properties(g, Matching{*g.find_edge(0, 1)});
  EXPECT_TRUE(find(checks, "prop1.maximal").pass);
  const auto& pairwise = find(checks, "prop2.pc_pairwise");
  EXPECT_FALSE(pairwise.pass);
  EXPECT_EQ(pairwise.failures, 1u);
  EXPECT_EQ(pairwise.lhs, Rational(3));
}

TEST(Verifier, DetectsNonMaximalAndNonInduced) {
  const Graph c7 = imatch::cycle_graph(7);
  const auto partial = imatch::check_ls_properties(c7, Matching{EdgeId{0}});
  EXPECT_FALSE(find(partial, "prop1.maximal").pass);
  const auto broken = imatch::check_ls_properties(c7, Matching{EdgeId{0}, EdgeId{2}});
  ASSERT_EQ(broken.size(), 1u);
  EXPECT_FALSE(broken[0].pass);
  EXPECT_EQ(broken[0].id, "matching.induced");
  const auto maximal = imatch::check_maximal(c7, Matching{EdgeId{0}});
  EXPECT_FALSE(find(maximal, "maximal.maximal").pass);
}

TEST(Verifier, SizeBoundInstantiations) {
  const Graph p = imatch::petersen_graph();
  const auto m = imatch::local_search(p).matching;
  const auto measured = imatch::check_theorem1(p, m, Rational(13), 0);
  expect_all_pass(measured);
  EXPECT_EQ(find(measured, "thm1.ii").lhs, Rational(15, 11));
  const auto pure = imatch::check_theorem1(p, m, Rational(0), 0, ".pure");
  EXPECT_EQ(find(pure, "thm1.ii.pure").lhs, Rational(15, 24));
  const auto too_strong = imatch::check_theorem1(p, m, Rational(14), 0);
  for (const auto& c : too_strong) {
    EXPECT_FALSE(c.applicable);
    EXPECT_NE(c.note.find("PreconditionUnmet"), std::string::npos);
  }
}

TEST(Verifier, ClassBoundValues) {
  const Graph h = imatch::heawood_graph();
  const auto hc = imatch::check_class_theorems(h, imatch::local_search(h).matching, imatch::certify(h));
  expect_all_pass(hc);
  EXPECT_EQ(find(hc, "thm3.ii").lhs, Rational(21, 9));
  EXPECT_EQ(find(hc, "thm3.i").rhs, Rational(5));
  EXPECT_TRUE(find(hc, "thm4.ii").applicable);
  EXPECT_FALSE(find(hc, "lemma2").applicable);

  const Graph p = imatch::petersen_graph();
  const auto pc = imatch::check_class_theorems(p, imatch::local_search(p).matching, imatch::certify(p));
  expect_all_pass(pc);
  EXPECT_EQ(find(pc, "thm2.ii").lhs, Rational(10, 7));  // 15 / (21/2)
  EXPECT_FALSE(find(pc, "thm4.ii").applicable);

  const Graph k33 = imatch::complete_bipartite(3, 3);
  const auto kc = imatch::check_class_theorems(k33, imatch::local_search(k33).matching, imatch::certify(k33));
  expect_all_pass(kc);
  EXPECT_EQ(find(kc, "thm4.ii").lhs, Rational(9, 11));  // 9 / (27/2 - 3 + 1/2)
  EXPECT_FALSE(find(kc, "thm2.ii").applicable);
}

TEST(Verifier, ClawFreeBounds) {
  for (std::size_t d = 3; d <= 6; ++d) {
    const Graph k = imatch::complete_graph(d + 1);
    const auto checks = imatch::check_clawfree(k, imatch::greedy_maximal(k), imatch::certify(k));
    expect_all_pass(checks);
    EXPECT_TRUE(find(checks, "thm5.conflict").applicable);
  }
  EXPECT_EQ(imatch::clawfree_conflict_cap(6), Rational(48));
  const Graph p = imatch::petersen_graph();
  EXPECT_FALSE(imatch::check_clawfree(p, imatch::greedy_maximal(p), imatch::certify(p))[0].applicable);
}

// Every closed-form ratio is (size-bound denominator) / (2d - 1).
TEST(Verifier, RatioClosedForms) {
  using namespace imatch::ratio;
  for (std::int64_t k = 3; k <= 30; ++k) {
    const Rational d(k);
    const Rational nu = 2 * d - 1;
    EXPECT_EQ(combined(d), (3 * d * d - d) / 2 / nu);
    EXPECT_EQ(c3c4_free(d), d * d / nu);
    EXPECT_EQ(c5_free(d), (Rational(3, 2) * d * d - d + Rational(1, 2)) / nu);
    EXPECT_EQ(claw_free_ls(d), (d * d + d - 1) / nu);
    EXPECT_EQ(claw_free_maximal(d), (Rational(7, 6) * d * d + d) / nu);
    EXPECT_EQ(maximal(d), (2 * d * d - 2 * d + 1) / nu);
    EXPECT_LE(c4_free_direct(d), c4_free(d));
  }
  EXPECT_EQ(combined(Rational(3)), Rational(12, 5));
  EXPECT_EQ(c3c4_free(Rational(3)), Rational(9, 5));
  EXPECT_EQ(c4_free(Rational(3)), Rational(21, 10));
  EXPECT_EQ(c4_free_direct(Rational(3)), Rational(21, 10));
  EXPECT_EQ(c5_free(Rational(3)), Rational(11, 5));
}

TEST(Verifier, RatiosNeedExactOptimum) {
  const Graph p = imatch::petersen_graph();
  const auto tag = imatch::certify(p);
  imatch::ExactResult inexact;
  inexact.value = 3;
  inexact.budget_exhausted = true;
  for (const auto& c : imatch::check_ratios(p, tag, imatch::Algorithm::LocalSearch, 3, inexact)) {
    EXPECT_FALSE(c.applicable);
    EXPECT_NE(c.note.find("InexactOptimum"), std::string::npos);
  }
  const auto exact = imatch::exact_mim(p);
  const auto checks = imatch::check_ratios(p, tag, imatch::Algorithm::LocalSearch, 2, exact);
  expect_all_pass(checks);
  EXPECT_EQ(find(checks, "local-search.nu.upper").lhs, Rational(3));
  EXPECT_EQ(find(checks, "local-search.nu.upper").rhs, Rational(3));
  EXPECT_EQ(find(checks, "local-search.cor2.ii").lhs, Rational(3, 2));
  // a bad output is caught
  const auto bad = imatch::check_ratios(p, tag, imatch::Algorithm::LocalSearch, 1, exact);
  EXPECT_FALSE(find(bad, "local-search.cor2.ii").pass);
}

TEST(Verifier, CombinedChecks) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = imatch::random_regular(18, 3 + seed % 3, seed);
    expect_all_pass(imatch::check_combined(g, imatch::combined_pipeline(g)));
  }
  const Graph k4 = imatch::complete_graph(4);
  const auto checks = imatch::check_combined(k4, imatch::combined_pipeline(k4));
  EXPECT_EQ(find(checks, "cor1.size").lhs, Rational(1, 2));
}

}  // namespace
