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

#ifndef IMATCH_GRAPH_OPS_HPP
#define IMATCH_GRAPH_OPS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imatch/graph.hpp"

namespace imatch {

namespace detail {

inline std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) {
    if (v >= g.num_vertices())
      throw Error(ErrorCode::OutOfRangeVertex, "vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  return in;
}

}  // namespace detail

/// m_G(X,Y): number of edges with one endpoint in X and the other in Y.
inline std::size_t cut_size(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  const auto in_x = detail::membership(g, x);
  const auto in_y = detail::membership(g, y);
  for (Vertex v : y) {
    if (in_x[v])
      throw Error(ErrorCode::NonDisjointSets, "vertex " + std::to_string(v) + " is in both sets");
  }
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if ((in_x[e.u] && in_y[e.v]) || (in_y[e.u] && in_x[e.v])) ++count;
  }
  return count;
}

/// m_G(X): number of edges of the subgraph induced by X.
inline std::size_t internal_edges(const Graph& g, std::span<const Vertex> x) {
  const auto in_x = detail::membership(g, x);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (in_x[e.u] && in_x[e.v]) ++count;
  }
  return count;
}

namespace detail {

// Extends an induced path whose first vertex is the smallest vertex of the
// cycle. A new vertex must be adjacent to its predecessor only, except the
// last one, which must also close the cycle at path[0].
inline bool extend_induced_path(const Graph& g, std::size_t k, std::vector<Vertex>& path) {
  const Vertex tail = path.back();
  const Vertex start = path.front();
  for (Vertex w : g.neighbors(tail)) {
    if (w <= start) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
      const bool adj = g.adjacent(w, path[i]);
      const bool must = (i == 0 && path.size() + 1 == k);
      if (adj != must || w == path[i]) ok = false;
    }
    if (!ok) continue;
    path.push_back(w);
    if (path.size() == k) {
      // Each cycle is seen twice (both directions); fix one orientation.
      if (path[1] < path.back()) return true;
    } else if (extend_induced_path(g, k, path)) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Returns a vertex sequence inducing exactly a C_k (k in {3,4,5}), if any.
inline std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, std::size_t k) {
  if (k < 3 || k > 5)
    throw Error(ErrorCode::InvalidCycleLength, "cycle length must be 3, 4 or 5, got " + std::to_string(k));
  std::vector<Vertex> path;
  path.reserve(k);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path.assign(1, s);
    if (detail::extend_induced_path(g, k, path)) return path;
  }
  return std::nullopt;
}

inline bool has_induced_cycle(const Graph& g, std::size_t k) {
  return find_induced_cycle(g, k).has_value();
}

struct Claw {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
};

/// A vertex with three pairwise non-adjacent neighbors, if any.
inline std::optional<Claw> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
            return Claw{c, {nb[i], nb[j], nb[k]}};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Vertex i of the result is edge i of g; adjacent iff the edges share an
/// endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<VertexPair> pairs;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    const auto inc = g.incident_edges(w);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        pairs.emplace_back(inc[i].index, inc[j].index);
  }
  // Two distinct simple edges share at most one endpoint, so no duplicates.
  return Graph::build(g.num_edges(), pairs);
}

/// Same vertex set, adjacency at distance one or two.
inline Graph square(const Graph& g) {
  std::vector<VertexPair> pairs;
  std::vector<Vertex> stamp(g.num_vertices(), static_cast<Vertex>(-1));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    stamp[u] = u;
    for (Vertex v : g.neighbors(u)) {
      if (stamp[v] != u) {
        stamp[v] = u;
        if (u < v) pairs.emplace_back(u, v);
      }
      for (Vertex w : g.neighbors(v)) {
        if (stamp[w] != u) {
          stamp[w] = u;
          if (u < w) pairs.emplace_back(u, w);
        }
      }
    }
  }
  return Graph::build(g.num_vertices(), pairs);
}

enum class GraphClass { General, C4Free, C3C4Free, C5Free, ClawFree };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::General: return "general";
    case GraphClass::C4Free: return "c4free";
    case GraphClass::C3C4Free: return "c3c4free";
    case GraphClass::C5Free: return "c5free";
    case GraphClass::ClawFree: return "clawfree";
  }
  return "general";
}

inline GraphClass parse_graph_class(const std::string& name) {
  for (GraphClass c : {GraphClass::General, GraphClass::C4Free, GraphClass::C3C4Free,
                       GraphClass::C5Free, GraphClass::ClawFree}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::UnknownName, "unknown graph class '" + name + "'");
}

class ClassTag;
inline ClassTag certify(const Graph& g);

/// Certified class memberships of one graph. Only certify() creates these,
/// so holding a ClassTag means the detection routines actually ran.
class ClassTag {
 public:
  bool c3_free() const noexcept { return c3_free_; }
  bool c4_free() const noexcept { return c4_free_; }
  bool c5_free() const noexcept { return c5_free_; }
  bool claw_free() const noexcept { return claw_free_; }
  bool regular() const noexcept { return regular_; }
  /// The common degree when regular, otherwise the maximum degree.
  std::size_t degree() const noexcept { return degree_; }

  bool in(GraphClass c) const noexcept {
    switch (c) {
      case GraphClass::General: return true;
      case GraphClass::C4Free: return c4_free_;
      case GraphClass::C3C4Free: return c3_free_ && c4_free_;
      case GraphClass::C5Free: return c5_free_;
      case GraphClass::ClawFree: return claw_free_;
    }
    return false;
  }

  friend ClassTag certify(const Graph& g);

 private:
  ClassTag() = default;

  bool c3_free_ = true;
  bool c4_free_ = true;
  bool c5_free_ = true;
  bool claw_free_ = true;
  bool regular_ = true;
  std::size_t degree_ = 0;
};

inline ClassTag certify(const Graph& g) {
  ClassTag tag;
  tag.c3_free_ = !has_induced_cycle(g, 3);
  tag.c4_free_ = !has_induced_cycle(g, 4);
  tag.c5_free_ = !has_induced_cycle(g, 5);
  tag.claw_free_ = is_claw_free(g);
  tag.regular_ = g.is_regular();
  tag.degree_ = g.max_degree();
  return tag;
}

}  // namespace imatch

#endif  // IMATCH_GRAPH_OPS_HPP
