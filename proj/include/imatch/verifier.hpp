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

// Mechanical checks of the structural properties and size bounds that hold
// for local-search optima, greedy outputs and maximal induced matchings.
//
// Every check is an inequality lhs <= rhs in exact rational arithmetic.
// Lower bounds |M| >= X are stored as lhs = X, rhs = |M|; structural
// statements are stored as "number of violations <= 0". Checks that range
// over many edges are folded into one record holding the edge with the
// smallest slack (rhs - lhs), so the record passes iff every instance does.

#ifndef IMATCH_VERIFIER_HPP
#define IMATCH_VERIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imatch/conflict.hpp"
#include "imatch/exact.hpp"
#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"
#include "imatch/matchers.hpp"
#include "imatch/rational.hpp"

namespace imatch {

struct BoundCheck {
  std::string id;
  Rational lhs;
  Rational rhs;
  bool applicable = true;
  bool pass = true;
  std::string context;
  /// Reason when not applicable; otherwise free-form detail.
  std::string note;
  std::size_t instances = 1;
  std::size_t failures = 0;
};

inline BoundCheck not_applicable(std::string id, std::string reason) {
  BoundCheck c;
  c.id = std::move(id);
  c.applicable = false;
  c.pass = true;
  c.instances = 0;
  c.note = std::move(reason);
  return c;
}

inline BoundCheck single_check(std::string id, Rational lhs, Rational rhs, std::string context = {}) {
  BoundCheck c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs <= rhs;
  c.failures = c.pass ? 0 : 1;
  c.context = std::move(context);
  return c;
}

/// Folds many lhs <= rhs instances into one record (the tightest one).
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string id) { check_.id = std::move(id); check_.instances = 0; }

  void add(Rational lhs, Rational rhs, std::string context) {
    const bool ok = lhs <= rhs;
    if (!ok) ++check_.failures;
    if (lhs == rhs) ++tight_;
    if (check_.instances == 0 || rhs - lhs < check_.rhs - check_.lhs) {
      check_.lhs = lhs;
      check_.rhs = rhs;
      check_.context = std::move(context);
    }
    ++check_.instances;
  }

  BoundCheck finish(std::string note = {}) && {
    check_.pass = check_.failures == 0;
    check_.note = std::move(note);
    if (check_.instances > 0) {
      if (!check_.note.empty()) check_.note += "; ";
      check_.note += "tight on " + std::to_string(tight_) + " of " + std::to_string(check_.instances);
    }
    return std::move(check_);
  }

 private:
  BoundCheck check_;
  std::size_t tight_ = 0;
};

namespace detail {

inline Rational q(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

inline std::string edge_label(const Edge& e) {
  return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

inline bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// m_G(A, B) for sorted, disjoint vertex lists.
inline std::size_t cut_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t count = 0;
  for (Vertex u : a)
    for (Vertex w : g.neighbors(u))
      if (contains(b, w)) ++count;
  return count;
}

inline std::string degree_reason(std::size_t d) {
  return "maximum degree " + std::to_string(d) + " < 3";
}

}  // namespace detail

/// c_G(e) <= 2d^2 - 2d + 1 - (d n_xy + m_xy) for every edge.
inline BoundCheck check_conflict_bound(const Graph& g) {
  CheckAccumulator acc("eq3.conflict_bound");
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const EdgeId e{i};
    acc.add(detail::q(conflict_count(g, e)), Rational(conflict_bound_rhs(g, e)), detail::edge_label(g.edge(e)));
  }
  return std::move(acc).finish("d=" + std::to_string(g.max_degree()));
}

/// Properties that every local-search optimum has: maximality, 2K2-free
/// private conflict sets, the shape of PC(M,xy) in terms of N1/N2,
/// independence of N2, the bound on m(N(x) ∩ N1, N2), and the double-count
/// sandwich on p = sum of c(xy) over M.
inline std::vector<BoundCheck> check_ls_properties(const Graph& g, const Matching& m) {
  std::vector<BoundCheck> out;
  const auto d = static_cast<std::int64_t>(g.max_degree());
  const auto induced = is_induced_matching(g, m);
  out.push_back(single_check("matching.induced", Rational(induced ? 0 : 1), Rational(0),
                             induced ? "" : "edges " + std::to_string(induced.violation->first.index) + " and " +
                                                std::to_string(induced.violation->second.index)));
  if (!induced) return out;

  const auto uncovered = uncovered_edges(g, m);
  out.push_back(single_check("prop1.maximal", detail::q(uncovered.size()), Rational(0),
                             uncovered.empty() ? "" : detail::edge_label(g.edge(uncovered.front()))));

  CheckAccumulator pairwise("prop2.pc_pairwise");
  CheckAccumulator shape("lemma1.i");
  CheckAccumulator independent("lemma1.ii");
  CheckAccumulator cut_bound("lemma1.iii");
  std::size_t total_pc = 0;
  std::size_t total_conflicts = 0;
  std::size_t total_neighborhood_edges = 0;
  std::size_t min_common = 0;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const auto s = edge_stats(g, EdgeId{i});
    min_common = (i == 0) ? s.common_neighbors : std::min(min_common, s.common_neighbors);
  }

  for (EdgeId e : m.edges()) {
    const auto pcd = pc_decomposition(g, m, e);
    const auto& pc = pcd.private_conflicts;
    const std::string label = detail::edge_label(pcd.edge);
    total_pc += pc.size();
    total_conflicts += conflict_count(g, e);
    total_neighborhood_edges += edge_stats(g, e).neighborhood_edges;

    std::size_t free_pairs = 0;
    for (std::size_t a = 0; a < pc.size(); ++a)
      for (std::size_t b = a + 1; b < pc.size(); ++b)
        if (!edges_conflict(g, pc[a], pc[b])) ++free_pairs;
    pairwise.add(detail::q(free_pairs), Rational(0), label);

    // E({x,y} ∪ N1) ∪ E(N1, N2) versus PC(M,xy).
    std::vector<Vertex> core = pcd.n1;
    core.push_back(pcd.edge.u);
    core.push_back(pcd.edge.v);
    std::sort(core.begin(), core.end());
    std::vector<EdgeId> predicted;
    for (std::uint32_t j = 0; j < g.num_edges(); ++j) {
      const Edge& uv = g.edges()[j];
      const bool inside = detail::contains(core, uv.u) && detail::contains(core, uv.v);
      const bool across = (detail::contains(pcd.n1, uv.u) && detail::contains(pcd.n2, uv.v)) ||
                          (detail::contains(pcd.n2, uv.u) && detail::contains(pcd.n1, uv.v));
      if (inside || across) predicted.push_back(EdgeId{j});
    }
    std::vector<EdgeId> diff;
    std::set_symmetric_difference(pc.begin(), pc.end(), predicted.begin(), predicted.end(), std::back_inserter(diff));
    shape.add(detail::q(diff.size()), Rational(0), label);

    independent.add(detail::q(internal_edges(g, pcd.n2)), Rational(0), label);

    if (d >= 3) {
      for (Vertex x : {pcd.edge.u, pcd.edge.v}) {
        std::vector<Vertex> side;
        for (Vertex u : pcd.n1)
          if (g.adjacent(u, x)) side.push_back(u);
        if (side.empty()) continue;
        Vertex best = side.front();
        std::size_t best_reach = 0;
        std::size_t lhs = 0;
        for (Vertex u : side) {
          std::size_t reach = 0;
          for (Vertex w : g.neighbors(u))
            if (detail::contains(pcd.n2, w)) ++reach;
          lhs += reach;
          if (reach > best_reach) {
            best_reach = reach;
            best = u;
          }
        }
        const auto xu = edge_stats(g, *g.find_edge(x, best));
        const std::int64_t rhs = d - 1 + (d - 3) * static_cast<std::int64_t>(xu.common_neighbors) +
                                 static_cast<std::int64_t>(xu.neighborhood_edges);
        cut_bound.add(detail::q(lhs), Rational(rhs),
                      label + " side " + std::to_string(x) + " u=" + std::to_string(best));
      }
    }
  }
  out.push_back(std::move(pairwise).finish());
  out.push_back(std::move(shape).finish());
  out.push_back(std::move(independent).finish());
  if (d >= 3)
    out.push_back(std::move(cut_bound).finish());
  else
    out.push_back(not_applicable("lemma1.iii", detail::degree_reason(g.max_degree())));

  // p = #{(e,f) : e ∈ M, f ∈ C(e)}.
  const Rational p = detail::q(total_conflicts);
  const auto size = static_cast<std::int64_t>(m.size());
  const std::int64_t g_min = static_cast<std::int64_t>(min_common);
  out.push_back(single_check("p.upper", p,
                             Rational((2 * d * d - 2 * d + 1 - d * g_min) * size -
                                      static_cast<std::int64_t>(total_neighborhood_edges)),
                             "p=" + std::to_string(total_conflicts)));
  out.push_back(single_check("p.lower", Rational(2 * static_cast<std::int64_t>(g.num_edges()) -
                                                 static_cast<std::int64_t>(total_pc)),
                             p, "sum pc=" + std::to_string(total_pc)));
  return out;
}

/// Minimum c_G(e) and n_xy over all edges (0 for an edgeless graph).
struct EdgeMinima {
  std::size_t conflicts = 0;
  std::size_t common_neighbors = 0;
};

inline EdgeMinima edge_minima(const Graph& g) {
  EdgeMinima out;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const auto c = conflict_count(g, EdgeId{i});
    const auto n = edge_stats(g, EdgeId{i}).common_neighbors;
    out.conflicts = (i == 0) ? c : std::min(out.conflicts, c);
    out.common_neighbors = (i == 0) ? n : std::min(out.common_neighbors, n);
  }
  return out;
}

/// Private-conflict sum and size bound for LS optima given lower bounds
/// f_lb <= c_G(e) and g_lb <= n_xy over all edges. `suffix` distinguishes
/// several instantiations in one report.
inline std::vector<BoundCheck> check_theorem1(const Graph& g, const Matching& m, const Rational& f_lb,
                                              std::size_t g_lb, const std::string& suffix = "") {
  const std::string id_i = "thm1.i" + suffix;
  const std::string id_ii = "thm1.ii" + suffix;
  const std::size_t deg = g.max_degree();
  if (deg < 3) return {not_applicable(id_i, detail::degree_reason(deg)), not_applicable(id_ii, detail::degree_reason(deg))};
  const auto minima = edge_minima(g);
  if (f_lb > detail::q(minima.conflicts) || g_lb > minima.common_neighbors) {
    const std::string why = "PreconditionUnmet: f=" + to_string(f_lb) + ", g=" + std::to_string(g_lb) +
                            " exceed measured minima c=" + std::to_string(minima.conflicts) +
                            ", n=" + std::to_string(minima.common_neighbors);
    return {not_applicable(id_i, why), not_applicable(id_ii, why)};
  }
  const Rational d = detail::q(deg);
  const Rational gg = detail::q(g_lb);
  std::size_t total_pc = 0;
  std::size_t total_mxy = 0;
  for (EdgeId e : m.edges()) {
    total_pc += private_conflicts(g, m, e).size();
    total_mxy += edge_stats(g, e).neighborhood_edges;
  }
  const Rational size = detail::q(m.size());
  const std::string params = "f=" + to_string(f_lb) + ", g=" + std::to_string(g_lb);
  std::vector<BoundCheck> out;
  out.push_back(single_check(id_i, detail::q(total_pc),
                             (4 * d * d - 1 - 2 * f_lb - 6 * gg) * size + detail::q(total_mxy), params));
  const Rational denom = 3 * d * d - d - f_lb - (d + 6) / 2 * gg;
  if (denom <= 0) {
    out.push_back(not_applicable(id_ii, "non-positive denominator " + to_string(denom)));
  } else {
    out.push_back(single_check(id_ii, detail::q(g.num_edges()) / denom, size, params + ", denominator=" + to_string(denom)));
  }
  return out;
}

/// Class-specific bounds for LS optima (C4-free, {C3,C4}-free, C5-free,
/// claw-free). Classes the tag does not certify are reported as N/A.
inline std::vector<BoundCheck> check_class_theorems(const Graph& g, const Matching& m, const ClassTag& tag) {
  std::vector<BoundCheck> out;
  const std::size_t deg = g.max_degree();
  const std::vector<std::string> ids = {"thm2.i", "thm2.pc", "thm2.ii", "thm3.i", "thm3.ii", "thm4.i",
                                        "thm4.i.constraints", "thm4.sum", "thm4.ii", "lemma2.n1n2", "lemma2.pc",
                                        "lemma2"};
  if (deg < 3) {
    for (const auto& id : ids) out.push_back(not_applicable(id, detail::degree_reason(deg)));
    return out;
  }
  const Rational d = detail::q(deg);
  const Rational size = detail::q(m.size());
  const Rational edges = detail::q(g.num_edges());

  CheckAccumulator thm2_cut("thm2.i");
  CheckAccumulator thm2_pc("thm2.pc");
  CheckAccumulator thm3_pc("thm3.i");
  CheckAccumulator thm4_cut("thm4.i");
  CheckAccumulator thm4_constraints("thm4.i.constraints");
  CheckAccumulator claw_cut("lemma2.n1n2");
  CheckAccumulator claw_pc("lemma2.pc");
  Rational thm4_sum = 0;

  const Rational thm2_cut_rhs = std::max(d, d * d / 4);
  const Rational thm2_pc_base = std::max(3 * d - 1, d * d / 4 + 2 * d - 1);
  for (EdgeId e : m.edges()) {
    const auto pcd = pc_decomposition(g, m, e);
    const auto stats = edge_stats(g, e);
    const std::string label = detail::edge_label(pcd.edge);
    const Rational pc = detail::q(pcd.private_conflicts.size());
    const Rational mxy = detail::q(stats.neighborhood_edges);
    const Rational cut = detail::q(detail::cut_between(g, pcd.n1, pcd.n2));
    const Rational dx = detail::q(pcd.dx());
    const Rational dy = detail::q(pcd.dy());
    const Rational dxy = detail::q(pcd.dxy());

    thm2_cut.add(cut, thm2_cut_rhs, label);
    thm2_pc.add(pc, thm2_pc_base + mxy, label);
    thm3_pc.add(pc, 2 * d - 1, label);
    thm4_cut.add(cut, (d - 1 - dy) * dx + (d - 2) * dxy + (d - 1 - dx) * dy,
                 label + " dx=" + std::to_string(pcd.dx()) + " dy=" + std::to_string(pcd.dy()) +
                     " dxy=" + std::to_string(pcd.dxy()));
    std::size_t violated = 0;
    if (dx + dxy > d - 1) ++violated;
    if (dy + dxy > d - 1) ++violated;
    if (pcd.dxy() > stats.common_neighbors) ++violated;
    thm4_constraints.add(detail::q(violated), Rational(0), label);
    thm4_sum += 2 * d * d - d * dxy + (d - 1 - dy) * dx + (d - 2) * dxy + (d - 1 - dx) * dy;
    claw_cut.add(cut, detail::q(pcd.n1.size()), label);
    claw_pc.add(pc, 4 * d - 3 + mxy, label);
  }

  const auto size_bound = [&](const std::string& id, const Rational& denom) {
    return single_check(id, edges / denom, size, "denominator=" + to_string(denom));
  };

  if (tag.c4_free()) {
    out.push_back(std::move(thm2_cut).finish());
    out.push_back(std::move(thm2_pc).finish());
    out.push_back(size_bound("thm2.ii", std::max(d * d + d / 2, Rational(9, 8) * d * d)));
  } else {
    for (const char* id : {"thm2.i", "thm2.pc", "thm2.ii"}) out.push_back(not_applicable(id, "graph contains an induced C4"));
  }
  if (tag.c3_free() && tag.c4_free()) {
    out.push_back(std::move(thm3_pc).finish());
    out.push_back(size_bound("thm3.ii", d * d));
  } else {
    for (const char* id : {"thm3.i", "thm3.ii"}) out.push_back(not_applicable(id, "graph contains an induced C3 or C4"));
  }
  if (tag.c5_free()) {
    out.push_back(std::move(thm4_cut).finish());
    out.push_back(std::move(thm4_constraints).finish());
    out.push_back(single_check("thm4.sum", 2 * edges, thm4_sum));
    out.push_back(size_bound("thm4.ii", Rational(3, 2) * d * d - d + Rational(1, 2)));
  } else {
    for (const char* id : {"thm4.i", "thm4.i.constraints", "thm4.sum", "thm4.ii"})
      out.push_back(not_applicable(id, "graph contains an induced C5"));
  }
  if (tag.claw_free()) {
    out.push_back(std::move(claw_cut).finish());
    out.push_back(std::move(claw_pc).finish());
    out.push_back(size_bound("lemma2", d * d + d - 1));
  } else {
    for (const char* id : {"lemma2.n1n2", "lemma2.pc", "lemma2"}) out.push_back(not_applicable(id, "graph contains a claw"));
  }
  return out;
}

/// (7/6) d^2 + d.
inline Rational clawfree_conflict_cap(std::size_t degree) {
  const Rational d = detail::q(degree);
  return Rational(7, 6) * d * d + d;
}

/// Claw-free graphs: every c_G(xy) is at most (7/6)d^2 + d, hence every
/// maximal induced matching has at least m / ((7/6)d^2 + d) edges.
inline std::vector<BoundCheck> check_clawfree(const Graph& g, const Matching& maximal, const ClassTag& tag,
                                              const std::string& suffix = "") {
  const std::string id_c = "thm5.conflict";
  const std::string id_s = "thm5.size" + suffix;
  if (!tag.claw_free()) return {not_applicable(id_c, "graph contains a claw"), not_applicable(id_s, "graph contains a claw")};
  const std::size_t deg = g.max_degree();
  if (deg < 3) return {not_applicable(id_c, detail::degree_reason(deg)), not_applicable(id_s, detail::degree_reason(deg))};
  const Rational cap = clawfree_conflict_cap(deg);
  CheckAccumulator acc(id_c);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i)
    acc.add(detail::q(conflict_count(g, EdgeId{i})), cap, detail::edge_label(g.edges()[i]));
  std::vector<BoundCheck> out;
  out.push_back(std::move(acc).finish());
  if (!is_induced_matching(g, maximal) || !uncovered_edges(g, maximal).empty()) {
    out.push_back(not_applicable(id_s, "PreconditionUnmet: matching is not a maximal induced matching"));
  } else {
    out.push_back(single_check(id_s, detail::q(g.num_edges()) / cap, detail::q(maximal.size())));
  }
  return out;
}

enum class Algorithm { LocalSearch, Combined, Maximal };

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::LocalSearch: return "local-search";
    case Algorithm::Combined: return "combined";
    case Algorithm::Maximal: return "maximal";
  }
  return "unknown";
}

/// Approximation-ratio closed forms in d.
namespace ratio {
inline Rational combined(const Rational& d) { return Rational(3, 4) * d + Rational(1, 8) + 1 / (16 * d - 8); }
inline Rational c4_free(const Rational& d) { return Rational(9, 16) * d + Rational(33, 80); }
inline Rational c4_free_direct(const Rational& d) {
  return std::max(d * d + d / 2, Rational(9, 8) * d * d) / (2 * d - 1);
}
inline Rational c3c4_free(const Rational& d) { return d / 2 + Rational(1, 4) + 1 / (8 * d - 4); }
inline Rational c5_free(const Rational& d) { return Rational(3, 4) * d - Rational(1, 8) + 3 / (16 * d - 8); }
inline Rational claw_free_ls(const Rational& d) { return d / 2 + Rational(3, 4) - 1 / (8 * d - 4); }
inline Rational claw_free_maximal(const Rational& d) {
  return Rational(7, 12) * d + Rational(19, 24) + 19 / (48 * d - 24);
}
inline Rational maximal(const Rational& d) { return (2 * d * d - 2 * d + 1) / (2 * d - 1); }
}  // namespace ratio

/// nu_s / |M| against the approximation factors for d-regular graphs, and
/// nu_s <= m / (2d - 1). Needs an exact optimum.
inline std::vector<BoundCheck> check_ratios(const Graph& g, const ClassTag& tag, Algorithm alg,
                                            std::size_t found, const ExactResult& exact) {
  const std::string prefix = to_string(alg) + ".";
  std::vector<std::pair<std::string, Rational>> bounds;
  const Rational d = detail::q(g.max_degree());
  switch (alg) {
    case Algorithm::Combined:
      bounds.emplace_back("cor1", ratio::combined(d));
      break;
    case Algorithm::LocalSearch:
      if (tag.c4_free()) {
        bounds.emplace_back("cor2.i", ratio::c4_free(d));
        bounds.emplace_back("cor2.i.direct", ratio::c4_free_direct(d));
      }
      if (tag.c3_free() && tag.c4_free()) bounds.emplace_back("cor2.ii", ratio::c3c4_free(d));
      if (tag.c5_free()) bounds.emplace_back("cor3", ratio::c5_free(d));
      if (tag.claw_free()) bounds.emplace_back("cor4.ls", ratio::claw_free_ls(d));
      break;
    case Algorithm::Maximal:
      bounds.emplace_back("maximal.ratio", ratio::maximal(d));
      if (tag.claw_free()) bounds.emplace_back("cor4.maximal", ratio::claw_free_maximal(d));
      break;
  }

  std::string reason;
  if (!exact.exact()) reason = "InexactOptimum: node budget exhausted";
  else if (!g.is_regular()) reason = "graph is not regular";
  else if (g.max_degree() < 3) reason = detail::degree_reason(g.max_degree());

  std::vector<BoundCheck> out;
  if (!reason.empty()) {
    out.push_back(not_applicable(prefix + "nu.upper", reason));
    for (const auto& [id, _] : bounds) out.push_back(not_applicable(prefix + id, reason));
    return out;
  }
  const Rational nu = detail::q(exact.value);
  out.push_back(single_check(prefix + "nu.upper", nu, detail::q(g.num_edges()) / (2 * d - 1)));
  for (const auto& [id, bound] : bounds) {
    if (found == 0) {
      out.push_back(single_check(prefix + id, nu, Rational(0), "empty output; compared nu_s <= 0"));
    } else {
      out.push_back(single_check(prefix + id, nu / detail::q(found), bound,
                                 "nu_s=" + std::to_string(exact.value) + ", |M|=" + std::to_string(found)));
    }
  }
  return out;
}

/// Greedy((3d^2-d)/2) + local search: union is induced, greedy part has at
/// least (m(G) - m(G'))/f edges, every residual edge has more than f
/// conflicts, local search on G' meets its own size bound with the measured
/// residual minimum, and the union has at least m/f edges.
inline std::vector<BoundCheck> check_combined(const Graph& g, const CombinedResult& run) {
  std::vector<BoundCheck> out;
  const auto induced = is_induced_matching(g, run.matching);
  out.push_back(single_check("combined.induced", Rational(induced ? 0 : 1), Rational(0)));
  const Rational f = run.threshold;
  const Graph& residual = run.greedy.residual;
  std::size_t low = 0;
  for (std::uint32_t i = 0; i < residual.num_edges(); ++i)
    if (detail::q(conflict_count(residual, EdgeId{i})) <= f) ++low;
  out.push_back(single_check("greedy.residual", detail::q(low), Rational(0), "f=" + to_string(f)));
  if (f > 0) {
    out.push_back(single_check("greedy.size", detail::q(g.num_edges() - residual.num_edges()) / f,
                               detail::q(run.greedy.matching.size()), "f=" + to_string(f)));
  } else {
    out.push_back(not_applicable("greedy.size", "threshold is zero"));
  }
  if (!run.guarantee_applies) {
    out.push_back(not_applicable("combined.residual_thm1", "guarantee stated for regular graphs with d >= 3"));
    out.push_back(not_applicable("cor1.size", "guarantee stated for regular graphs with d >= 3"));
    return out;
  }
  const Rational d = detail::q(run.degree);
  const Rational f_residual = detail::q(edge_minima(residual).conflicts);
  const Rational denom = 3 * d * d - d - f_residual;
  if (residual.num_edges() == 0) {
    out.push_back(single_check("combined.residual_thm1", Rational(0), detail::q(run.residual_matching.size()),
                               "empty residual"));
  } else {
    out.push_back(single_check("combined.residual_thm1", detail::q(residual.num_edges()) / denom,
                               detail::q(run.residual_matching.size()), "residual min c=" + to_string(f_residual)));
  }
  out.push_back(single_check("cor1.size", detail::q(g.num_edges()) / f, detail::q(run.matching.size()),
                             "f=" + to_string(f)));
  return out;
}

/// Any maximal induced matching has at least m / (2d^2 - 2d + 1) edges.
inline std::vector<BoundCheck> check_maximal(const Graph& g, const Matching& m) {
  std::vector<BoundCheck> out;
  const bool induced = static_cast<bool>(is_induced_matching(g, m));
  out.push_back(single_check("maximal.induced", Rational(induced ? 0 : 1), Rational(0)));
  const auto uncovered = induced ? uncovered_edges(g, m).size() : g.num_edges();
  out.push_back(single_check("maximal.maximal", detail::q(uncovered), Rational(0)));
  if (g.num_edges() == 0) {
    out.push_back(not_applicable("maximal.size", "edgeless graph"));
    return out;
  }
  const Rational d = detail::q(g.max_degree());
  out.push_back(single_check("maximal.size", detail::q(g.num_edges()) / (2 * d * d - 2 * d + 1), detail::q(m.size())));
  return out;
}

}  // namespace imatch

#endif  // IMATCH_VERIFIER_HPP
