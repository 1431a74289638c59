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

#ifndef IMATCH_GRAPH_HPP
#define IMATCH_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imatch/errors.hpp"

namespace imatch {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Position of an edge in the canonical (sorted) edge sequence of a Graph.
struct EdgeId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in CSR form. Edges are stored sorted
/// lexicographically with u < v; an EdgeId is an index into that sequence,
/// which makes every "lowest edge first" rule downstream deterministic.
class Graph {
 public:
  Graph() = default;

  /// Normalizes orientation and sorts. Rejects loops, duplicates and
  /// endpoints outside [0, n).
  static Graph build(std::size_t n, std::span<const VertexPair> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::OutOfRangeVertex,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
      edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges.begin(), edges.end());
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                      ") appears more than once");
    }
    return Graph(n, std::move(edges));
  }

  static Graph build(std::size_t n, std::initializer_list<VertexPair> pairs) {
    return build(n, std::span<const VertexPair>(pairs.begin(), pairs.size()));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge& edge(EdgeId e) const {
    check(e);
    return edges_[e.index];
  }

  bool valid(EdgeId e) const noexcept { return e.index < edges_.size(); }

  void check(EdgeId e) const {
    if (!valid(e)) {
      throw Error(ErrorCode::InvalidEdgeId,
                  "edge id " + std::to_string(e.index) + " out of range (m=" +
                      std::to_string(edges_.size()) + ")");
    }
  }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex u) const {
    return {nbrs_.data() + offsets_[u], nbrs_.data() + offsets_[u + 1]};
  }

  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(Vertex u) const {
    return {inc_.data() + offsets_[u], inc_.data() + offsets_[u + 1]};
  }

  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  /// True iff every vertex has the same degree (vacuously for n = 0).
  bool is_regular() const noexcept { return max_degree_ == min_degree_; }

  bool adjacent(Vertex a, Vertex b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto nb = neighbors(a);
    const auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return inc_[offsets_[a] + static_cast<std::size_t>(it - nb.begin())];
  }

  std::vector<VertexPair> vertex_pairs() const {
    std::vector<VertexPair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    nbrs_.resize(2 * edges_.size());
    inc_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Lower neighbors first, then higher ones; the sorted edge order keeps
    // each neighbor list sorted.
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      nbrs_[fill[e.v]] = e.u;
      inc_[fill[e.v]++] = EdgeId{i};
    }
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      nbrs_[fill[e.u]] = e.v;
      inc_[fill[e.u]++] = EdgeId{i};
    }
    if (n_ > 0) {
      max_degree_ = 0;
      min_degree_ = edges_.size() * 2 + 1;
      for (Vertex u = 0; u < n_; ++u) {
        max_degree_ = std::max(max_degree_, degree(u));
        min_degree_ = std::min(min_degree_, degree(u));
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::vector<EdgeId> inc_;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

/// Result of deleting edges: the surviving graph keeps all vertices, and
/// edge ids are translated in both directions.
struct EdgeDeletion {
  Graph graph;
  std::vector<std::optional<EdgeId>> old_to_new;
  std::vector<EdgeId> new_to_old;
};

inline EdgeDeletion remove_edges(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<bool> gone(g.num_edges(), false);
  for (EdgeId e : removed) {
    g.check(e);
    gone[e.index] = true;
  }
  EdgeDeletion out;
  out.old_to_new.assign(g.num_edges(), std::nullopt);
  std::vector<VertexPair> kept;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    if (gone[i]) continue;
    // Surviving edges keep their relative order, so the new id is the
    // running count.
    out.old_to_new[i] = EdgeId{static_cast<std::uint32_t>(kept.size())};
    out.new_to_old.push_back(EdgeId{i});
    kept.emplace_back(g.edges()[i].u, g.edges()[i].v);
  }
  out.graph = Graph::build(g.num_vertices(), kept);
  return out;
}

}  // namespace imatch

#endif  // IMATCH_GRAPH_HPP
