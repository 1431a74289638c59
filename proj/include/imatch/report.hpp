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

// Per-graph verification reports and their JSON / CSV forms.
//
// Reports contain no timestamps or timings, so identical inputs give
// byte-identical output.

#ifndef IMATCH_REPORT_HPP
#define IMATCH_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "imatch/conflict.hpp"
#include "imatch/exact.hpp"
#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"
#include "imatch/matchers.hpp"
#include "imatch/rational.hpp"
#include "imatch/verifier.hpp"

namespace imatch {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"decimal", to_decimal(r)}};
}

inline Json to_json(const Graph& g, const Matching& m) {
  Json out = Json::array();
  for (const auto& [u, v] : m.pairs(g)) out.push_back(Json::array({u, v}));
  return out;
}

inline Json to_json(const Graph& g, const LocalSearchTrace& trace) {
  Json moves = Json::array();
  auto pair = [&](EdgeId e) { return Json::array({g.edge(e).u, g.edge(e).v}); };
  for (const auto& mv : trace.moves) {
    if (mv.kind == MoveKind::Add) {
      moves.push_back(Json{{"move", "add"}, {"edge", pair(mv.first)}});
    } else {
      moves.push_back(Json{{"move", "swap"}, {"removed", pair(mv.removed)}, {"added", Json::array({pair(mv.first), pair(mv.second)})}});
    }
  }
  return Json{{"scans", trace.scans}, {"moves", std::move(moves)}};
}

inline Json to_json(const Graph& g, const GreedyTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"edge", Json::array({g.edge(s.edge).u, g.edge(s.edge).v})},
                         {"conflicts", s.conflict_count},
                         {"edges_before", s.edges_before}});
  }
  return Json{{"threshold", to_json(trace.threshold)}, {"steps", std::move(steps)}};
}

inline Json to_json(const BoundCheck& c) {
  return Json{{"id", c.id},         {"applicable", c.applicable}, {"pass", c.pass},
              {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)},   {"instances", c.instances},
              {"failures", c.failures}, {"context", c.context},   {"note", c.note}};
}

struct AlgorithmOutcome {
  std::string name;
  Matching matching;
  Json trace;  // algorithm-specific detail
};

struct BoundReport {
  std::string graph_id;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool regular = false;
  bool c3_free = false;
  bool c4_free = false;
  bool c5_free = false;
  bool claw_free = false;
  std::vector<AlgorithmOutcome> algorithms;
  std::optional<ExactResult> exact;
  std::vector<BoundCheck> checks;

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (c.applicable && !c.pass) out.push_back(c.id);
    return out;
  }

  bool passed() const { return failed_checks().empty(); }

  const BoundCheck* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  const AlgorithmOutcome* algorithm(const std::string& name) const {
    for (const auto& a : algorithms)
      if (a.name == name) return &a;
    return nullptr;
  }
};

struct VerifyOptions {
  bool with_exact = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

namespace detail {

inline void append(std::vector<BoundCheck>& dst, std::vector<BoundCheck> src) {
  for (auto& c : src) dst.push_back(std::move(c));
}

}  // namespace detail

/// Runs local search and the maximal greedy (plus the combined pipeline on
/// regular inputs, and the exact solver on request) and evaluates every
/// check whose preconditions the graph meets.
inline BoundReport verify_graph(const Graph& g, std::string graph_id, const VerifyOptions& options = {}) {
  const ClassTag tag = certify(g);
  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.vertices = g.num_vertices();
  report.edges = g.num_edges();
  report.max_degree = g.max_degree();
  report.min_degree = g.min_degree();
  report.regular = g.is_regular();
  report.c3_free = tag.c3_free();
  report.c4_free = tag.c4_free();
  report.c5_free = tag.c5_free();
  report.claw_free = tag.claw_free();

  auto& checks = report.checks;
  checks.push_back(check_conflict_bound(g));

  const auto ls = local_search(g);
  report.algorithms.push_back({to_string(Algorithm::LocalSearch), ls.matching, to_json(g, ls.trace)});
  detail::append(checks, check_ls_properties(g, ls.matching));
  const auto minima = edge_minima(g);
  detail::append(checks, check_theorem1(g, ls.matching, detail::q(minima.conflicts), minima.common_neighbors));
  detail::append(checks, check_theorem1(g, ls.matching, Rational(0), 0, ".pure"));
  detail::append(checks, check_class_theorems(g, ls.matching, tag));

  const Matching maximal = greedy_maximal(g);
  report.algorithms.push_back({to_string(Algorithm::Maximal), maximal, Json::object()});
  detail::append(checks, check_maximal(g, maximal));
  detail::append(checks, check_clawfree(g, maximal, tag));

  std::optional<CombinedResult> combined;
  if (g.is_regular()) {
    combined = combined_pipeline(g);
    report.algorithms.push_back({to_string(Algorithm::Combined), combined->matching,
                                 Json{{"threshold", to_json(combined->threshold)},
                                      {"greedy", to_json(g, combined->greedy.trace)},
                                      {"greedy_size", combined->greedy.matching.size()},
                                      {"residual_edges", combined->greedy.residual.num_edges()},
                                      {"residual_size", combined->residual_matching.size()}}});
    detail::append(checks, check_combined(g, *combined));
  }

  if (options.with_exact) {
    report.exact = exact_mim(g, options.node_budget);
    const auto& ex = *report.exact;
    if (ex.exact()) {
      const Rational nu = detail::q(ex.value);
      checks.push_back(single_check("exact.induced", Rational(is_induced_matching(g, ex.matching) ? 0 : 1), Rational(0)));
      checks.push_back(single_check("exact.dominates.local-search", detail::q(ls.matching.size()), nu));
      checks.push_back(single_check("exact.dominates.maximal", detail::q(maximal.size()), nu));
      if (combined) checks.push_back(single_check("exact.dominates.combined", detail::q(combined->matching.size()), nu));
    }
    detail::append(checks, check_ratios(g, tag, Algorithm::LocalSearch, ls.matching.size(), ex));
    detail::append(checks, check_ratios(g, tag, Algorithm::Maximal, maximal.size(), ex));
    if (combined) detail::append(checks, check_ratios(g, tag, Algorithm::Combined, combined->matching.size(), ex));
  }
  return report;
}

/// `provenance` is embedded verbatim (tool flags, input path, ...).
inline Json to_json(const Graph& g, const BoundReport& r, const Json& provenance = Json::object()) {
  Json algorithms = Json::array();
  for (const auto& a : r.algorithms) {
    algorithms.push_back(Json{{"name", a.name}, {"size", a.matching.size()}, {"matching", to_json(g, a.matching)}, {"trace", a.trace}});
  }
  Json exact = nullptr;
  if (r.exact) {
    exact = Json{{"value", r.exact->value},
                 {"exact", r.exact->exact()},
                 {"nodes", r.exact->nodes},
                 {"matching", to_json(g, r.exact->matching)}};
  }
  Json checks = Json::array();
  std::size_t applicable = 0;
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    if (c.applicable) {
      ++applicable;
      if (!c.pass) ++failed;
    }
  }
  return Json{{"schema_version", kReportSchemaVersion},
              {"tool_version", kToolVersion},
              {"provenance", provenance},
              {"graph",
               {{"id", r.graph_id},
                {"n", r.vertices},
                {"m", r.edges},
                {"max_degree", r.max_degree},
                {"min_degree", r.min_degree},
                {"regular", r.regular},
                {"certificates", {{"c3_free", r.c3_free}, {"c4_free", r.c4_free}, {"c5_free", r.c5_free}, {"claw_free", r.claw_free}}}}},
              {"algorithms", std::move(algorithms)},
              {"exact", std::move(exact)},
              {"checks", std::move(checks)},
              {"summary",
               {{"checks", r.checks.size()},
                {"applicable", applicable},
                {"failed", failed},
                {"failed_ids", r.failed_checks()},
                {"passed", failed == 0}}}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline constexpr const char* kCheckCsvHeader =
    "graph,check,applicable,pass,lhs,rhs,lhs_decimal,rhs_decimal,instances,failures,context,note";

/// One row per (graph, check), no header.
inline void write_check_rows(std::ostream& out, const BoundReport& r) {
  for (const auto& c : r.checks) {
    out << detail::csv_field(r.graph_id) << ',' << c.id << ',' << (c.applicable ? 1 : 0) << ',' << (c.pass ? 1 : 0)
        << ',' << to_string(c.lhs) << ',' << to_string(c.rhs) << ',' << to_decimal(c.lhs) << ',' << to_decimal(c.rhs)
        << ',' << c.instances << ',' << c.failures << ',' << detail::csv_field(c.context) << ','
        << detail::csv_field(c.note) << '\n';
  }
}

}  // namespace imatch

#endif  // IMATCH_REPORT_HPP
