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

// Conflict sets and private conflicts of edges.
//
// Two edges conflict when their distance in the line graph is at most two,
// i.e. one of them has an endpoint in the closed neighborhood of the other.
// C(e) is e together with everything it conflicts with; an edge set is an
// induced matching exactly when its members are pairwise non-conflicting.
// All routines here work from adjacency directly (O(d^2) per edge); the
// line-graph-square formulation is used only as a test oracle.

#ifndef IMATCH_CONFLICT_HPP
#define IMATCH_CONFLICT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imatch/graph.hpp"

namespace imatch {

/// A set of edge ids of one graph, kept sorted and duplicate-free. Whether
/// it is an induced matching is checked by is_induced_matching(), never
/// assumed.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }
  Matching(std::initializer_list<EdgeId> edges) : Matching(std::vector<EdgeId>(edges)) {}

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  void insert(EdgeId e) {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
  }

  void erase(EdgeId e) {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) edges_.erase(it);
  }

  /// V(M), sorted.
  std::vector<Vertex> vertices(const Graph& g) const {
    std::vector<Vertex> out;
    for (EdgeId e : edges_) {
      out.push_back(g.edge(e).u);
      out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<VertexPair> pairs(const Graph& g) const {
    std::vector<VertexPair> out;
    for (EdgeId e : edges_) out.emplace_back(g.edge(e).u, g.edge(e).v);
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<EdgeId> edges_;
};

/// N[x] ∪ N[y] for e = xy, sorted.
inline std::vector<Vertex> closed_edge_neighborhood(const Graph& g, EdgeId e) {
  const Edge& xy = g.edge(e);
  std::vector<Vertex> out;
  const auto nx = g.neighbors(xy.u);
  const auto ny = g.neighbors(xy.v);
  std::set_union(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(out));
  // x and y are in each other's neighborhood, so they are already present.
  return out;
}

/// C_G(e): every edge with an endpoint in N[x] ∪ N[y], sorted.
inline std::vector<EdgeId> conflict_set(const Graph& g, EdgeId e) {
  std::vector<EdgeId> out;
  for (Vertex w : closed_edge_neighborhood(g, e)) {
    const auto inc = g.incident_edges(w);
    out.insert(out.end(), inc.begin(), inc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::size_t conflict_count(const Graph& g, EdgeId e) { return conflict_set(g, e).size(); }

/// True iff f ∈ C_G(e) (the relation is symmetric).
inline bool edges_conflict(const Graph& g, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  for (Vertex p : {a.u, a.v}) {
    for (Vertex q : {b.u, b.v}) {
      if (p == q || g.adjacent(p, q)) return true;
    }
  }
  return false;
}

/// All conflict sets of a graph, computed once.
class ConflictIndex {
 public:
  explicit ConflictIndex(const Graph& g) {
    sets_.reserve(g.num_edges());
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) sets_.push_back(conflict_set(g, EdgeId{i}));
  }

  std::size_t num_edges() const noexcept { return sets_.size(); }
  std::span<const EdgeId> conflicts(EdgeId e) const { return sets_.at(e.index); }
  std::size_t count(EdgeId e) const { return sets_.at(e.index).size(); }

  bool conflict(EdgeId e, EdgeId f) const {
    const auto& s = sets_.at(e.index);
    return std::binary_search(s.begin(), s.end(), f);
  }

  /// Minimum c_G(e) over all edges; 0 for an edgeless graph.
  std::size_t min_count() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i)
      best = (i == 0) ? sets_[i].size() : std::min(best, sets_[i].size());
    return best;
  }

 private:
  std::vector<std::vector<EdgeId>> sets_;
};

/// n_xy and m_xy of one edge xy.
struct EdgeNeighborhoodStats {
  Edge edge;
  std::size_t common_neighbors = 0;   // n_xy = |N(x) ∩ N(y)|
  std::size_t neighborhood_edges = 0; // m_xy = m_G((N(x) ∪ N(y)) \ {x,y})
};

inline EdgeNeighborhoodStats edge_stats(const Graph& g, EdgeId e) {
  EdgeNeighborhoodStats s;
  s.edge = g.edge(e);
  const auto nx = g.neighbors(s.edge.u);
  const auto ny = g.neighbors(s.edge.v);
  std::vector<Vertex> common;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
  s.common_neighbors = common.size();

  std::vector<Vertex> around = closed_edge_neighborhood(g, e);
  std::erase_if(around, [&](Vertex w) { return w == s.edge.u || w == s.edge.v; });
  for (Vertex w : around) {
    for (Vertex z : g.neighbors(w)) {
      if (z > w && std::binary_search(around.begin(), around.end(), z)) ++s.neighborhood_edges;
    }
  }
  return s;
}

/// 2d^2 - 2d + 1 - (d n_xy + m_xy), with d the measured maximum degree.
/// Always an upper bound on c_G(e).
inline std::int64_t conflict_bound_rhs(const Graph& g, EdgeId e) {
  const auto d = static_cast<std::int64_t>(g.max_degree());
  const auto s = edge_stats(g, e);
  return 2 * d * d - 2 * d + 1 -
         (d * static_cast<std::int64_t>(s.common_neighbors) + static_cast<std::int64_t>(s.neighborhood_edges));
}

struct InducedMatchingCheck {
  bool induced = true;
  /// First offending pair when not induced (equal ids never occur).
  std::optional<std::pair<EdgeId, EdgeId>> violation;

  explicit operator bool() const noexcept { return induced; }
};

/// True iff no two edges share a vertex and no edge of G joins endpoints of
/// two distinct edges of the set.
inline InducedMatchingCheck is_induced_matching(const Graph& g, std::span<const EdgeId> edges) {
  constexpr std::uint32_t kFree = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> owner(g.num_vertices(), kFree);
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (EdgeId e : sorted) {
    const Edge& xy = g.edge(e);
    for (Vertex w : {xy.u, xy.v}) {
      if (owner[w] != kFree) return {false, std::make_pair(EdgeId{owner[w]}, e)};
      owner[w] = e.index;
    }
  }
  for (EdgeId e : sorted) {
    const Edge& xy = g.edge(e);
    for (Vertex w : {xy.u, xy.v}) {
      for (Vertex z : g.neighbors(w)) {
        if (owner[z] != kFree && owner[z] != e.index) {
          EdgeId f{owner[z]};
          return {false, std::make_pair(std::min(e, f), std::max(e, f))};
        }
      }
    }
  }
  return {};
}

inline InducedMatchingCheck is_induced_matching(const Graph& g, const Matching& m) {
  return is_induced_matching(g, m.edges());
}

/// cover[v] = number of edges f in M with v ∈ N[f]. An edge conflicts with
/// some member of M iff one of its endpoints has positive cover.
inline std::vector<std::uint32_t> conflict_cover(const Graph& g, const Matching& m) {
  std::vector<std::uint32_t> cover(g.num_vertices(), 0);
  for (EdgeId e : m.edges()) {
    for (Vertex w : closed_edge_neighborhood(g, e)) ++cover[w];
  }
  return cover;
}

/// Edges in no C_G(e), e ∈ M.
inline std::vector<EdgeId> uncovered_edges(const Graph& g, const Matching& m) {
  const auto cover = conflict_cover(g, m);
  std::vector<EdgeId> out;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (cover[e.u] == 0 && cover[e.v] == 0) out.push_back(EdgeId{i});
  }
  return out;
}

inline bool is_maximal_induced_matching(const Graph& g, const Matching& m) {
  if (!is_induced_matching(g, m)) throw Error(ErrorCode::NotInducedMatching, "matching is not induced");
  return uncovered_edges(g, m).empty();
}

namespace detail {

inline void require_member(const Matching& m, EdgeId e) {
  if (!m.contains(e))
    throw Error(ErrorCode::EdgeNotInMatching, "edge " + std::to_string(e.index) + " is not in the matching");
}

}  // namespace detail

/// PC_G(M,e) = C_G(e) minus the conflict sets of the other members of M.
inline std::vector<EdgeId> private_conflicts(const Graph& g, const Matching& m, EdgeId e) {
  g.check(e);
  detail::require_member(m, e);
  auto cover = conflict_cover(g, m);
  for (Vertex w : closed_edge_neighborhood(g, e)) --cover[w];
  std::vector<EdgeId> out;
  for (EdgeId f : conflict_set(g, e)) {
    const Edge& uv = g.edge(f);
    if (cover[uv.u] == 0 && cover[uv.v] == 0) out.push_back(f);
  }
  return out;
}

/// Vertex partition around a matched edge xy induced by its private
/// conflict edges:
///   N1  = vertices of (N(x) ∪ N(y)) \ {x,y} touching PC_G(M,xy)
///   N2  = vertices outside N[x] ∪ N[y] touching PC_G(M,xy)
///   N1' = members of N1 with a neighbor in N2, split into
///         Nx = N1' \ N(y), Ny = N1' \ N(x), Nxy = N1' ∩ N(x) ∩ N(y).
struct PCDecomposition {
  Edge edge;
  std::vector<EdgeId> private_conflicts;
  std::vector<Vertex> n1;
  std::vector<Vertex> n2;
  std::vector<Vertex> n1_prime;
  std::vector<Vertex> nx;
  std::vector<Vertex> ny;
  std::vector<Vertex> nxy;

  std::size_t dx() const noexcept { return nx.size(); }
  std::size_t dy() const noexcept { return ny.size(); }
  std::size_t dxy() const noexcept { return nxy.size(); }
};

inline PCDecomposition pc_decomposition(const Graph& g, const Matching& m, EdgeId e) {
  PCDecomposition out;
  out.private_conflicts = private_conflicts(g, m, e);
  out.edge = g.edge(e);
  const Vertex x = out.edge.u;
  const Vertex y = out.edge.v;
  const auto around = closed_edge_neighborhood(g, e);

  std::vector<char> touched(g.num_vertices(), 0);
  for (EdgeId f : out.private_conflicts) {
    touched[g.edge(f).u] = 1;
    touched[g.edge(f).v] = 1;
  }
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (!touched[w] || w == x || w == y) continue;
    if (std::binary_search(around.begin(), around.end(), w))
      out.n1.push_back(w);
    else
      out.n2.push_back(w);
  }
  for (Vertex u : out.n1) {
    const auto nb = g.neighbors(u);
    const bool reaches_n2 = std::any_of(nb.begin(), nb.end(), [&](Vertex z) {
      return std::binary_search(out.n2.begin(), out.n2.end(), z);
    });
    if (!reaches_n2) continue;
    out.n1_prime.push_back(u);
    const bool to_x = g.adjacent(u, x);
    const bool to_y = g.adjacent(u, y);
    if (to_x && to_y)
      out.nxy.push_back(u);
    else if (to_x)
      out.nx.push_back(u);
    else
      out.ny.push_back(u);
  }
  return out;
}

}  // namespace imatch

#endif  // IMATCH_CONFLICT_HPP
