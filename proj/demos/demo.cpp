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

// Small tour: sample a cubic graph, run the three heuristics and the exact
// solver, print the failing checks (there should be none).

#include <cstdint>
#include <iostream>

#include "imatch/exact.hpp"
#include "imatch/generators.hpp"
#include "imatch/matchers.hpp"
#include "imatch/report.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  const imatch::Graph g = imatch::random_regular(16, 3, seed);
  std::cout << "random cubic graph, n=" << g.num_vertices() << " m=" << g.num_edges() << " seed=" << seed << "\n";

  const auto ls = imatch::local_search(g);
  const auto combined = imatch::combined_pipeline(g);
  const auto maximal = imatch::greedy_maximal(g);
  const auto exact = imatch::exact_mim(g);
  std::cout << "local search  " << ls.matching.size() << " (" << ls.trace.moves.size() << " moves)\n"
            << "combined      " << combined.matching.size() << " (greedy part " << combined.greedy.matching.size()
            << ")\n"
            << "maximal       " << maximal.size() << "\n"
            << "optimum       " << exact.value << "\n";

  const auto report = imatch::verify_graph(g, "demo", {true, imatch::kDefaultNodeBudget});
  std::size_t applicable = 0;
  for (const auto& c : report.checks) applicable += c.applicable ? 1 : 0;
  std::cout << applicable << " applicable checks, " << report.failed_checks().size() << " failed\n";
  for (const auto& id : report.failed_checks()) std::cout << "  " << id << "\n";
  return report.passed() ? 0 : 1;
}
