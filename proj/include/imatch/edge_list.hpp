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

// Plain edge-list text format:
//
//   n m
//   u v      (m lines, 0-based, whitespace separated)
//
// Orientation of each pair is free on input; output is canonical (u < v,
// sorted), so writing a parsed graph reproduces its canonical form.

#ifndef IMATCH_EDGE_LIST_HPP
#define IMATCH_EDGE_LIST_HPP

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "imatch/graph.hpp"

namespace imatch {

inline Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorCode::ParseError, "missing or invalid 'n m' header");
  std::vector<VertexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v))
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::OutOfRangeVertex,
                  "edge " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::ParseError, "unexpected trailing token '" + trailing + "'");
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_edge_list(in);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace imatch

#endif  // IMATCH_EDGE_LIST_HPP
