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

// Exact maximum induced matching for small graphs.
//
// Induced matchings of G are the independent sets of L(G)^2, so the solver
// builds that conflict graph and runs a plain branch and bound for maximum
// independent set: branch on a maximum-degree vertex of the remaining
// candidates (take it / drop it), prune with a greedy clique cover of the
// candidates.

#ifndef IMATCH_EXACT_HPP
#define IMATCH_EXACT_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "imatch/conflict.hpp"
#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"
#include "imatch/matchers.hpp"

namespace imatch {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct ExactResult {
  std::size_t value = 0;
  Matching matching;
  std::uint64_t nodes = 0;
  /// Set when the budget ran out; value is then only a lower bound.
  bool budget_exhausted = false;

  bool exact() const noexcept { return !budget_exhausted; }
};

namespace detail {

class IndependentSetSearch {
 public:
  using Bits = boost::dynamic_bitset<>;

  IndependentSetSearch(const Graph& h, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = h.num_vertices();
    adj_.assign(n, Bits(n));
    for (const auto& e : h.edges()) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
    }
  }

  void seed(std::vector<std::size_t> initial) { best_ = std::move(initial); }

  void run() {
    Bits all(adj_.size());
    all.set();
    std::vector<std::size_t> chosen;
    expand(all, chosen);
  }

  const std::vector<std::size_t>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  // Number of cliques in a greedy clique cover of p; an independent set
  // takes at most one vertex per clique.
  std::size_t clique_cover_bound(const Bits& p) const {
    Bits rest = p;
    std::size_t cliques = 0;
    while (rest.any()) {
      ++cliques;
      std::size_t v = rest.find_first();
      Bits common = adj_[v] & rest;
      rest.reset(v);
      for (std::size_t w = common.find_first(); w != Bits::npos; w = common.find_next(w)) {
        if (!common.test(w)) continue;
        rest.reset(w);
        common &= adj_[w];
      }
    }
    return cliques;
  }

  void expand(Bits p, std::vector<std::size_t>& chosen) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (p.none()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + clique_cover_bound(p) <= best_.size()) return;

    std::size_t pivot = Bits::npos;
    std::size_t pivot_degree = 0;
    for (std::size_t v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
      const std::size_t deg = (adj_[v] & p).count();
      if (pivot == Bits::npos || deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    if (pivot_degree == 0) {
      // Remaining candidates are pairwise compatible.
      if (chosen.size() + p.count() > best_.size()) {
        best_ = chosen;
        for (std::size_t v = p.find_first(); v != Bits::npos; v = p.find_next(v)) best_.push_back(v);
      }
      return;
    }

    Bits with = p - adj_[pivot];
    with.reset(pivot);
    chosen.push_back(pivot);
    expand(std::move(with), chosen);
    chosen.pop_back();

    p.reset(pivot);
    expand(std::move(p), chosen);
  }

  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Maximum induced matching by branch and bound on L(G)^2. When the node
/// budget is exhausted the best matching found so far is returned with
/// budget_exhausted set.
inline ExactResult exact_mim(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  const Graph conflicts = square(line_graph(g));
  detail::IndependentSetSearch search(conflicts, node_budget);
  const Matching seed = greedy_maximal(g);
  std::vector<std::size_t> initial;
  for (EdgeId e : seed.edges()) initial.push_back(e.index);
  search.seed(std::move(initial));
  search.run();

  ExactResult out;
  std::vector<EdgeId> ids;
  for (std::size_t v : search.best()) ids.push_back(EdgeId{static_cast<std::uint32_t>(v)});
  out.matching = Matching(std::move(ids));
  out.value = out.matching.size();
  out.nodes = search.nodes();
  out.budget_exhausted = search.exhausted();
  return out;
}

inline constexpr std::size_t kBruteForceMaxEdges = 20;

/// Enumerates all 2^m edge subsets. Two edges are compatible iff the
/// subgraph induced by their four endpoints has exactly those two edges;
/// a subset is an induced matching iff it is pairwise compatible.
inline std::size_t brute_force_mim(const Graph& g) {
  const std::size_t m = g.num_edges();
  if (m > kBruteForceMaxEdges)
    throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(kBruteForceMaxEdges) +
                                         " edges, got " + std::to_string(m));
  std::vector<std::uint32_t> incompatible(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& a = g.edges()[i];
      const Edge& b = g.edges()[j];
      const Vertex vs[4] = {a.u, a.v, b.u, b.v};
      bool ok = true;
      std::size_t induced = 0;
      for (int p = 0; p < 4 && ok; ++p) {
        for (int q = p + 1; q < 4; ++q) {
          if (vs[p] == vs[q]) {
            ok = false;
            break;
          }
          if (g.adjacent(vs[p], vs[q])) ++induced;
        }
      }
      if (!ok || induced != 2) {
        incompatible[i] |= 1u << j;
        incompatible[j] |= 1u << i;
      }
    }
  }
  std::size_t best = 0;
  const std::uint32_t limit = 1u << m;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = subset; rest != 0 && ok; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (incompatible[static_cast<std::size_t>(i)] & subset) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace imatch

#endif  // IMATCH_EXACT_HPP
