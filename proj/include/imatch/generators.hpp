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

#ifndef IMATCH_GENERATORS_HPP
#define IMATCH_GENERATORS_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"

namespace imatch {

inline constexpr std::size_t kDefaultRetryBudget = 100'000;

namespace detail {

inline std::string rate_message(std::size_t attempts, std::size_t accepted) {
  std::ostringstream os;
  os << accepted << " of " << attempts << " attempts accepted (rate "
     << (attempts == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(attempts)) << ")";
  return os.str();
}

inline void check_regular_params(std::size_t n, std::size_t d) {
  if ((n * d) % 2 != 0)
    throw Error(ErrorCode::ParityError, "n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  if (d > 0 && d >= n)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(d) + " needs more than " + std::to_string(n) + " vertices");
}

// One pairing-model attempt; empty result means a loop or multi-edge.
template <class Rng>
std::optional<Graph> pairing_attempt(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<VertexPair> pairs;
  pairs.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1]) return std::nullopt;
    pairs.emplace_back(std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1]));
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return std::nullopt;
  return Graph::build(n, pairs);
}

// Union of d random perfect matchings between {0..h-1} and {h..2h-1}.
template <class Rng>
std::optional<Graph> bipartite_attempt(std::size_t n, std::size_t d, Rng& rng) {
  const std::size_t half = n / 2;
  std::vector<Vertex> perm(half);
  std::vector<VertexPair> pairs;
  pairs.reserve(half * d);
  for (std::size_t k = 0; k < d; ++k) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex i = 0; i < half; ++i) pairs.emplace_back(i, static_cast<Vertex>(half + perm[i]));
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return std::nullopt;
  return Graph::build(n, pairs);
}

}  // namespace detail

/// Simple d-regular graph from the pairing (configuration) model, rejecting
/// any pairing with a loop or a repeated pair.
template <class Rng>
Graph random_regular(std::size_t n, std::size_t d, Rng& rng, std::size_t retry_budget = kDefaultRetryBudget) {
  detail::check_regular_params(n, d);
  for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
    if (auto g = detail::pairing_attempt(n, d, rng)) return std::move(*g);
  }
  throw Error(ErrorCode::RetriesExhausted, "no simple pairing: " + detail::rate_message(retry_budget, 0));
}

inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t retry_budget = kDefaultRetryBudget) {
  std::mt19937_64 rng(seed);
  return random_regular(n, d, rng, retry_budget);
}

/// d-regular bipartite graph on two sides of n/2 vertices.
template <class Rng>
Graph random_bipartite_regular(std::size_t n, std::size_t d, Rng& rng,
                               std::size_t retry_budget = kDefaultRetryBudget) {
  if (n % 2 != 0) throw Error(ErrorCode::ParityError, "bipartite sampler needs an even vertex count");
  if (d > n / 2)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(d) + " exceeds side size " + std::to_string(n / 2));
  for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
    if (auto g = detail::bipartite_attempt(n, d, rng)) return std::move(*g);
  }
  throw Error(ErrorCode::RetriesExhausted, "no simple bipartite union: " + detail::rate_message(retry_budget, 0));
}

enum class Sampler { Pairing, Bipartite };

struct ClassSample {
  Graph graph;
  ClassTag tag;
  std::size_t attempts = 0;  // including the accepted one
};

/// Rejection-samples regular graphs until the class certificate passes.
/// Each pairing attempt counts against the budget.
template <class Rng>
ClassSample random_regular_in_class(std::size_t n, std::size_t d, GraphClass cls, Rng& rng,
                                    std::size_t retry_budget = kDefaultRetryBudget,
                                    Sampler sampler = Sampler::Pairing) {
  if (sampler == Sampler::Pairing) {
    detail::check_regular_params(n, d);
  } else {
    if (n % 2 != 0) throw Error(ErrorCode::ParityError, "bipartite sampler needs an even vertex count");
    if (d > n / 2) throw Error(ErrorCode::DegreeTooLarge, "degree exceeds side size");
  }
  std::size_t simple = 0;
  for (std::size_t attempt = 1; attempt <= retry_budget; ++attempt) {
    auto g = sampler == Sampler::Pairing ? detail::pairing_attempt(n, d, rng) : detail::bipartite_attempt(n, d, rng);
    if (!g) continue;
    ++simple;
    ClassTag tag = certify(*g);
    if (tag.in(cls) && tag.regular()) return ClassSample{std::move(*g), tag, attempt};
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no " + to_string(cls) + " graph (" + std::to_string(simple) + " simple candidates): " +
                  detail::rate_message(retry_budget, 0));
}

inline ClassSample random_regular_in_class(std::size_t n, std::size_t d, GraphClass cls, std::uint64_t seed,
                                           std::size_t retry_budget = kDefaultRetryBudget,
                                           Sampler sampler = Sampler::Pairing) {
  std::mt19937_64 rng(seed);
  return random_regular_in_class(n, d, cls, rng, retry_budget, sampler);
}

// Named families.

inline Graph complete_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, pairs);
}

/// Path on n vertices (n - 1 edges).
inline Graph path_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::build(n, pairs);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) pairs.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::build(a + b, pairs);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen_graph() {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::build(10, pairs);
}

/// Incidence graph of the Fano plane, LCF notation [5,-5]^7.
inline Graph heawood_graph() {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < 14; ++i) {
    pairs.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) pairs.emplace_back(i, (i + 5) % 14);
  }
  return Graph::build(14, pairs);
}

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::size_t parse_count(const std::string& text, const std::string& family) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::UnknownName, "family '" + family + "' needs a non-negative integer argument, got '" + text + "'");
  return static_cast<std::size_t>(std::stoull(text));
}

}  // namespace detail

/// Builds a graph from a family expression:
///   petersen | heawood | k4 | k_d_plus_1(d) | cycle(n) | path(n)
///   | complete_bipartite(d) | line_of(<expression>)
inline Graph named_family(std::string_view spec) {
  const std::string text = detail::trim(spec);
  const auto open = text.find('(');
  if (open == std::string::npos) {
    if (text == "petersen") return petersen_graph();
    if (text == "heawood") return heawood_graph();
    if (text == "k4") return complete_graph(4);
    throw Error(ErrorCode::UnknownName, "unknown graph family '" + text + "'");
  }
  if (text.back() != ')') throw Error(ErrorCode::UnknownName, "malformed family expression '" + text + "'");
  const std::string head = detail::trim(std::string_view(text).substr(0, open));
  const std::string arg = detail::trim(std::string_view(text).substr(open + 1, text.size() - open - 2));
  if (head == "line_of") return line_graph(named_family(arg));
  if (head == "k_d_plus_1") return complete_graph(detail::parse_count(arg, head) + 1);
  if (head == "cycle") return cycle_graph(detail::parse_count(arg, head));
  if (head == "path") return path_graph(detail::parse_count(arg, head));
  if (head == "complete_bipartite") {
    const std::size_t d = detail::parse_count(arg, head);
    return complete_bipartite(d, d);
  }
  throw Error(ErrorCode::UnknownName, "unknown graph family '" + head + "'");
}

}  // namespace imatch

#endif  // IMATCH_GENERATORS_HPP
