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

#ifndef IMATCH_MATCHERS_HPP
#define IMATCH_MATCHERS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "imatch/conflict.hpp"
#include "imatch/graph.hpp"
#include "imatch/rational.hpp"

namespace imatch {

struct GreedyStep {
  EdgeId edge;                     // id in the input graph
  std::size_t conflict_count = 0;  // c_{G_{i-1}}(e_i)
  std::size_t edges_before = 0;    // m(G_{i-1})
};

struct GreedyTrace {
  Rational threshold;
  std::vector<GreedyStep> steps;
};

struct GreedyResult {
  Matching matching;
  /// G minus the conflict sets removed along the way; same vertex set.
  Graph residual;
  /// residual edge id -> input edge id.
  std::vector<EdgeId> residual_origin;
  GreedyTrace trace;
};

/// Greedy(f): while some edge of the current graph has at most f conflicts,
/// take the lowest-id such edge and delete its conflict set. Conflict counts
/// are recomputed from scratch after each deletion.
inline GreedyResult greedy_f(const Graph& g, const Rational& threshold) {
  if (threshold < 0) throw Error(ErrorCode::InvalidArgument, "threshold must be non-negative");
  GreedyResult out;
  out.trace.threshold = threshold;
  Graph current = g;
  std::vector<EdgeId> origin;
  origin.reserve(g.num_edges());
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) origin.push_back(EdgeId{i});

  for (;;) {
    std::vector<EdgeId> picked_conflicts;
    EdgeId picked{};
    bool found = false;
    for (std::uint32_t i = 0; i < current.num_edges() && !found; ++i) {
      auto c = conflict_set(current, EdgeId{i});
      if (Rational(static_cast<std::int64_t>(c.size())) <= threshold) {
        picked = EdgeId{i};
        picked_conflicts = std::move(c);
        found = true;
      }
    }
    if (!found) break;
    out.trace.steps.push_back({origin[picked.index], picked_conflicts.size(), current.num_edges()});
    out.matching.insert(origin[picked.index]);

    auto removal = remove_edges(current, picked_conflicts);
    std::vector<EdgeId> next_origin;
    next_origin.reserve(removal.new_to_old.size());
    for (EdgeId old : removal.new_to_old) next_origin.push_back(origin[old.index]);
    origin = std::move(next_origin);
    current = std::move(removal.graph);
  }
  out.residual = std::move(current);
  out.residual_origin = std::move(origin);
  return out;
}

enum class MoveKind { Add, Swap };

/// Add uses `first`; Swap replaces `removed` with `first` and `second`.
struct Move {
  MoveKind kind = MoveKind::Add;
  EdgeId removed;
  EdgeId first;
  EdgeId second;
};

struct LocalSearchTrace {
  std::vector<Move> moves;
  std::size_t scans = 0;  // neighborhood scans, including the final failing one
};

struct LocalSearchResult {
  Matching matching;
  LocalSearchTrace trace;
};

/// Local search over induced matchings with two moves: add one edge, or
/// exchange one matched edge for two. Each scan tries every Add (ascending
/// edge id) before any Swap (matched edge ascending, then the replacement
/// pair lexicographically) and restarts after the first applied move. Stops
/// when a full scan finds no improving move.
inline LocalSearchResult local_search(const Graph& g) {
  LocalSearchResult out;
  Matching& m = out.matching;
  std::vector<std::uint32_t> cover(g.num_vertices(), 0);
  auto apply_cover = [&](EdgeId e, int delta) {
    for (Vertex w : closed_edge_neighborhood(g, e)) cover[w] += static_cast<std::uint32_t>(delta);
  };
  auto free_edge = [&](EdgeId e) {
    const Edge& uv = g.edge(e);
    return cover[uv.u] == 0 && cover[uv.v] == 0;
  };

  for (;;) {
    ++out.trace.scans;
    bool moved = false;
    for (std::uint32_t i = 0; i < g.num_edges() && !moved; ++i) {
      const EdgeId e{i};
      if (!m.contains(e) && free_edge(e)) {
        m.insert(e);
        apply_cover(e, +1);
        out.trace.moves.push_back({MoveKind::Add, EdgeId{}, e, EdgeId{}});
        moved = true;
      }
    }
    if (moved) continue;

    // M is maximal here, so any edge compatible with M \ {e} lies in C(e):
    // the candidates are exactly PC(M,e) \ {e}.
    const std::vector<EdgeId> matched(m.edges().begin(), m.edges().end());
    for (EdgeId e : matched) {
      apply_cover(e, -1);
      std::vector<EdgeId> candidates;
      for (EdgeId f : conflict_set(g, e)) {
        if (f != e && free_edge(f)) candidates.push_back(f);
      }
      for (std::size_t a = 0; a < candidates.size() && !moved; ++a) {
        for (std::size_t b = a + 1; b < candidates.size() && !moved; ++b) {
          if (edges_conflict(g, candidates[a], candidates[b])) continue;
          m.erase(e);
          m.insert(candidates[a]);
          m.insert(candidates[b]);
          apply_cover(candidates[a], +1);
          apply_cover(candidates[b], +1);
          out.trace.moves.push_back({MoveKind::Swap, e, candidates[a], candidates[b]});
          moved = true;
        }
      }
      if (moved) break;
      apply_cover(e, +1);
    }
    if (!moved) break;
  }
  return out;
}

/// Ascending scan adding every edge compatible with the edges taken so far.
/// The result is maximal; its private conflict sets need not be 2K2-free.
inline Matching greedy_maximal(const Graph& g) {
  Matching m;
  std::vector<std::uint32_t> cover(g.num_vertices(), 0);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& uv = g.edges()[i];
    if (cover[uv.u] != 0 || cover[uv.v] != 0) continue;
    m.insert(EdgeId{i});
    for (Vertex w : closed_edge_neighborhood(g, EdgeId{i})) ++cover[w];
  }
  return m;
}

/// (3d^2 - d) / 2, an integer for every integer d.
inline Rational combined_threshold(std::size_t degree) {
  const auto d = static_cast<std::int64_t>(degree);
  return Rational(3 * d * d - d, 2);
}

struct CombinedResult {
  Matching matching;  // greedy part ∪ local-search part, ids of the input
  GreedyResult greedy;
  LocalSearchResult residual_search;  // ids of greedy.residual
  Matching residual_matching;         // the same edges, ids of the input
  std::size_t degree = 0;
  Rational threshold;
  /// The size guarantee m/f is only claimed for regular graphs, d >= 3.
  bool guarantee_applies = false;
};

/// Greedy((3d^2-d)/2) followed by local search on the residual graph, with
/// d the measured maximum degree.
inline CombinedResult combined_pipeline(const Graph& g) {
  CombinedResult out;
  out.degree = g.max_degree();
  out.threshold = combined_threshold(out.degree);
  out.guarantee_applies = g.is_regular() && out.degree >= 3;
  out.greedy = greedy_f(g, out.threshold);
  out.residual_search = local_search(out.greedy.residual);

  std::vector<EdgeId> residual_ids;
  for (EdgeId e : out.residual_search.matching.edges()) residual_ids.push_back(out.greedy.residual_origin[e.index]);
  out.residual_matching = Matching(residual_ids);

  std::vector<EdgeId> all(out.greedy.matching.edges().begin(), out.greedy.matching.edges().end());
  all.insert(all.end(), residual_ids.begin(), residual_ids.end());
  out.matching = Matching(std::move(all));
  if (out.matching.size() != out.greedy.matching.size() + out.residual_matching.size() ||
      !is_induced_matching(g, out.matching)) {
    throw std::logic_error("combined pipeline produced a non-induced matching");
  }
  return out;
}

}  // namespace imatch

#endif  // IMATCH_MATCHERS_HPP
