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

// imatch: generate instances, run the matchers, verify bounds, benchmark.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage / input error,
// 3 resource exhaustion (retry or node budget).

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "imatch/conflict.hpp"
#include "imatch/edge_list.hpp"
#include "imatch/errors.hpp"
#include "imatch/exact.hpp"
#include "imatch/generators.hpp"
#include "imatch/graph.hpp"
#include "imatch/graph_ops.hpp"
#include "imatch/matchers.hpp"
#include "imatch/rational.hpp"
#include "imatch/report.hpp"
#include "imatch/verifier.hpp"

namespace fs = std::filesystem;
using imatch::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr const char* kOutDirEnv = "IMATCH_OUT_DIR";

int exit_code_for(imatch::ErrorCode code) {
  switch (code) {
    case imatch::ErrorCode::RetriesExhausted:
    case imatch::ErrorCode::TooLarge:
      return kExitResource;
    default:
      return kExitUsage;
  }
}

// Flag beats environment beats ".".
fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return ".";
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw imatch::Error(imatch::ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "graph" : out;
}

Json graph_summary(const imatch::Graph& g, const imatch::ClassTag& tag) {
  return Json{{"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"max_degree", g.max_degree()},
              {"min_degree", g.min_degree()},
              {"regular", tag.regular()},
              {"certificates",
               {{"c3_free", tag.c3_free()}, {"c4_free", tag.c4_free()}, {"c5_free", tag.c5_free()}, {"claw_free", tag.claw_free()}}}};
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::string cls = "general";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string sampler = "pairing";
  std::size_t retries = imatch::kDefaultRetryBudget;
  std::string out_dir;
};

int cmd_gen(const GenOptions& o) {
  const fs::path dir = resolve_out_dir(o.out_dir);
  auto emit = [&](const std::string& stem, const imatch::Graph& g, Json extra) {
    const auto tag = imatch::certify(g);
    write_text(dir / (stem + ".edges"), imatch::to_edge_list(g));
    Json cert{{"schema_version", imatch::kReportSchemaVersion},
              {"tool_version", imatch::kToolVersion},
              {"graph", graph_summary(g, tag)}};
    for (auto& [k, v] : extra.items()) cert[k] = v;
    write_text(dir / (stem + ".json"), dump(cert));
    std::cout << (dir / (stem + ".edges")).string() << "\n";
  };

  if (!o.family.empty()) {
    const imatch::Graph g = imatch::named_family(o.family);
    emit(sanitize(o.family), g, Json{{"provenance", {{"command", "gen"}, {"family", o.family}}}});
    return kExitOk;
  }

  const imatch::GraphClass cls = imatch::parse_graph_class(o.cls);
  const imatch::Sampler sampler = o.sampler == "bipartite" ? imatch::Sampler::Bipartite : imatch::Sampler::Pairing;
  for (std::size_t k = 0; k < o.count; ++k) {
    const std::uint64_t seed = o.seed + k;
    const auto sample = imatch::random_regular_in_class(o.n, o.d, cls, seed, o.retries, sampler);
    const std::string stem = "reg_n" + std::to_string(o.n) + "_d" + std::to_string(o.d) + "_" + o.cls + "_s" +
                             std::to_string(seed);
    emit(stem, sample.graph,
         Json{{"provenance",
               {{"command", "gen"},
                {"n", o.n},
                {"d", o.d},
                {"class", o.cls},
                {"seed", seed},
                {"sampler", o.sampler},
                {"retry_budget", o.retries},
                {"attempts", sample.attempts}}}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- run

struct RunOptions {
  std::string alg;
  std::string f;
  std::uint64_t budget = imatch::kDefaultNodeBudget;
  std::string out;
  std::string input;
};

int cmd_run(const RunOptions& o) {
  const imatch::Graph g = imatch::read_edge_list(fs::path(o.input));
  Json result{{"schema_version", imatch::kReportSchemaVersion},
              {"tool_version", imatch::kToolVersion},
              {"provenance", {{"command", "run"}, {"alg", o.alg}, {"f", o.f}, {"budget", o.budget}, {"input", fs::path(o.input).filename().string()}}},
              {"graph", graph_summary(g, imatch::certify(g))}};
  int code = kExitOk;
  imatch::Matching matching;

  if (o.alg == "greedy-f") {
    const imatch::Rational f = o.f.empty() ? imatch::combined_threshold(g.max_degree()) : imatch::parse_rational(o.f);
    auto r = imatch::greedy_f(g, f);
    matching = r.matching;
    result["trace"] = imatch::to_json(g, r.trace);
    result["residual_edges"] = r.residual.num_edges();
  } else if (o.alg == "local-search") {
    auto r = imatch::local_search(g);
    matching = r.matching;
    result["trace"] = imatch::to_json(g, r.trace);
  } else if (o.alg == "combined") {
    if (!o.f.empty()) throw imatch::Error(imatch::ErrorCode::InvalidArgument, "--f is fixed to (3d^2-d)/2 for combined; use greedy-f");
    auto r = imatch::combined_pipeline(g);
    matching = r.matching;
    result["greedy"] = {{"size", r.greedy.matching.size()}, {"trace", imatch::to_json(g, r.greedy.trace)}};
    result["residual"] = {{"edges", r.greedy.residual.num_edges()},
                          {"size", r.residual_matching.size()},
                          {"matching", imatch::to_json(g, r.residual_matching)},
                          {"trace", imatch::to_json(r.greedy.residual, r.residual_search.trace)}};
  } else if (o.alg == "maximal") {
    matching = imatch::greedy_maximal(g);
  } else if (o.alg == "exact") {
    auto r = imatch::exact_mim(g, o.budget);
    matching = r.matching;
    result["exact"] = r.exact();
    result["nodes"] = r.nodes;
    if (!r.exact()) code = kExitResource;
  } else {
    throw imatch::Error(imatch::ErrorCode::InvalidArgument, "unknown algorithm '" + o.alg + "'");
  }

  result["size"] = matching.size();
  result["matching"] = imatch::to_json(g, matching);
  if (!o.out.empty()) write_text(o.out, dump(result));

  if (o.alg == "exact") {
    std::cout << (code == kExitOk ? "nu_s=" : "nu_s>=") << matching.size() << "\n";
    if (code != kExitOk) std::cerr << "node budget " << o.budget << " exhausted; value is a lower bound\n";
  } else {
    std::cout << "size=" << matching.size() << "\n";
  }
  return code;
}

// ---------------------------------------------------------------- verify

struct VerifyCliOptions {
  bool with_exact = false;
  std::uint64_t budget = imatch::kDefaultNodeBudget;
  std::string out_dir;
  std::string csv;
  unsigned jobs = 1;
  std::vector<std::string> inputs;
};

struct VerifyOutcome {
  std::string stem;
  std::string json;
  std::string csv_rows;
  std::vector<std::string> failed;
  std::size_t applicable = 0;
  bool inexact = false;
  std::string error;
  int error_code = kExitOk;
};

template <class Work>
void run_parallel(std::size_t items, unsigned jobs, Work work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items; i = next++) work(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

int cmd_verify(VerifyCliOptions o) {
  std::sort(o.inputs.begin(), o.inputs.end());
  const fs::path dir = resolve_out_dir(o.out_dir);
  std::vector<VerifyOutcome> outcomes(o.inputs.size());

  run_parallel(o.inputs.size(), o.jobs, [&](std::size_t i) {
    auto& out = outcomes[i];
    const fs::path path(o.inputs[i]);
    out.stem = path.stem().string();
    try {
      const imatch::Graph g = imatch::read_edge_list(path);
      const auto report = imatch::verify_graph(g, out.stem, {o.with_exact, o.budget});
      const Json provenance{{"command", "verify"},
                            {"input", path.filename().string()},
                            {"with_exact", o.with_exact},
                            {"budget", o.budget}};
      out.json = dump(imatch::to_json(g, report, provenance));
      std::ostringstream rows;
      imatch::write_check_rows(rows, report);
      out.csv_rows = rows.str();
      out.failed = report.failed_checks();
      for (const auto& c : report.checks) out.applicable += c.applicable ? 1 : 0;
      out.inexact = report.exact && !report.exact->exact();
    } catch (const imatch::Error& e) {
      out.error = e.what();
      out.error_code = exit_code_for(e.code());
    }
  });

  int code = kExitOk;
  bool any_failed = false;
  bool any_inexact = false;
  std::string csv = std::string(imatch::kCheckCsvHeader) + "\n";
  for (const auto& out : outcomes) {
    if (!out.error.empty()) {
      std::cerr << out.stem << ": error: " << out.error << "\n";
      code = std::max(code, out.error_code);
      continue;
    }
    write_text(dir / (out.stem + ".report.json"), out.json);
    csv += out.csv_rows;
    any_inexact = any_inexact || out.inexact;
    if (out.failed.empty()) {
      std::cout << out.stem << ": PASS (" << out.applicable << " applicable checks)\n";
    } else {
      any_failed = true;
      std::cout << out.stem << ": FAIL";
      for (const auto& id : out.failed) std::cout << ' ' << id;
      std::cout << "\n";
    }
  }
  if (!o.csv.empty()) write_text(o.csv, csv);
  if (code != kExitOk) return code;
  if (any_failed) return kExitCheckFailed;
  if (any_inexact) {
    std::cerr << "exact solver ran out of budget; ratio checks were skipped\n";
    return kExitResource;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string corpus;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  bool with_exact = false;
  std::uint64_t budget = imatch::kDefaultNodeBudget;
  bool no_timing = false;
  std::string out;
};

constexpr const char* kBenchHeader =
    "instance,n,m,d,algorithm,size,nu_s,ratio,guarantee_denominator,bound_slack,time_ms";

struct BenchRow {
  std::string algorithm;
  std::size_t size = 0;
  imatch::Rational denominator;
  double millis = 0;
};

// Size guarantee |M| >= m / denominator used for the slack column.
imatch::Rational guarantee_denominator(const imatch::Graph& g, const std::string& alg) {
  const auto d = static_cast<std::int64_t>(g.max_degree());
  if (alg == "combined") return imatch::combined_threshold(g.max_degree());
  if (alg == "maximal") return imatch::Rational(2 * d * d - 2 * d + 1);
  const auto minima = imatch::edge_minima(g);
  const auto f = static_cast<std::int64_t>(minima.conflicts);
  const auto gg = static_cast<std::int64_t>(minima.common_neighbors);
  return imatch::Rational(3 * d * d - d - f) - imatch::Rational((d + 6) * gg, 2);
}

int cmd_bench(const BenchOptions& o) {
  std::vector<std::pair<std::string, imatch::Graph>> corpus;
  if (!o.corpus.empty()) {
    if (!fs::is_directory(o.corpus)) throw imatch::Error(imatch::ErrorCode::InvalidArgument, "not a directory: " + o.corpus);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".edges") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) corpus.emplace_back(p.stem().string(), imatch::read_edge_list(p));
  } else {
    for (std::size_t k = 0; k < o.count; ++k) {
      const std::uint64_t seed = o.seed + k;
      corpus.emplace_back("reg_n" + std::to_string(o.n) + "_d" + std::to_string(o.d) + "_s" + std::to_string(seed),
                          imatch::random_regular(o.n, o.d, seed));
    }
  }

  std::ostringstream csv;
  csv << kBenchHeader << "\n";
  struct Aggregate {
    double ratio_sum = 0;
    std::size_t ratio_count = 0;
    double slack_sum = 0;
    std::size_t slack_count = 0;
  };
  std::map<std::string, Aggregate> agg;
  bool inexact = false;
  const std::size_t reps = std::max<std::size_t>(o.reps, 1);

  for (const auto& [name, g] : corpus) {
    std::optional<imatch::ExactResult> exact;
    if (o.with_exact) {
      exact = imatch::exact_mim(g, o.budget);
      if (!exact->exact()) inexact = true;
    }
    std::vector<std::string> algorithms = {"local-search", "maximal"};
    if (g.is_regular()) algorithms.insert(algorithms.begin() + 1, "combined");
    for (const auto& alg : algorithms) {
      BenchRow row;
      row.algorithm = alg;
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t r = 0; r < reps; ++r) {
        if (alg == "local-search") row.size = imatch::local_search(g).matching.size();
        else if (alg == "combined") row.size = imatch::combined_pipeline(g).matching.size();
        else row.size = imatch::greedy_maximal(g).size();
      }
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() /
                   static_cast<double>(reps);
      row.denominator = guarantee_denominator(g, alg);

      csv << name << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << g.max_degree() << ',' << alg << ','
          << row.size << ',';
      if (exact && exact->exact()) {
        csv << exact->value << ',';
        if (row.size > 0) {
          const imatch::Rational ratio(static_cast<std::int64_t>(exact->value), static_cast<std::int64_t>(row.size));
          csv << imatch::to_decimal(ratio);
          agg[alg].ratio_sum += boost::rational_cast<double>(ratio);
          ++agg[alg].ratio_count;
        }
        csv << ',';
      } else {
        csv << ",,";
      }
      if (g.num_edges() > 0 && row.denominator > 0) {
        const imatch::Rational slack =
            imatch::Rational(static_cast<std::int64_t>(row.size)) * row.denominator / static_cast<std::int64_t>(g.num_edges());
        csv << imatch::to_string(row.denominator) << ',' << imatch::to_decimal(slack) << ',';
        agg[alg].slack_sum += boost::rational_cast<double>(slack);
        ++agg[alg].slack_count;
      } else {
        csv << ",,";
      }
      if (o.no_timing) csv << "NA";
      else csv << row.millis;
      csv << "\n";
    }
  }

  if (o.out.empty()) std::cout << csv.str();
  else write_text(o.out, csv.str());

  std::cerr << corpus.size() << " instances\n";
  for (const auto& [alg, a] : agg) {
    std::cerr << alg << ": mean nu_s/|M| = "
              << (a.ratio_count ? std::to_string(a.ratio_sum / static_cast<double>(a.ratio_count)) : "n/a")
              << ", mean bound slack = "
              << (a.slack_count ? std::to_string(a.slack_sum / static_cast<double>(a.slack_count)) : "n/a") << "\n";
  }
  if (inexact) {
    std::cerr << "exact solver ran out of budget on some instances\n";
    return kExitResource;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imatch: induced matching heuristics, exact oracle and bound verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", imatch::kToolVersion);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate graphs (edge list + JSON certificate)");
  auto* family_opt = gen_cmd->add_option("--family", gen.family, "named family, e.g. petersen, cycle(7), line_of(petersen)");
  auto* n_opt = gen_cmd->add_option("--n", gen.n, "vertex count");
  auto* d_opt = gen_cmd->add_option("--d", gen.d, "degree");
  gen_cmd->add_option("--class", gen.cls, "general | c4free | c3c4free | c5free | clawfree")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "first seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "number of graphs (seeds seed, seed+1, ...)")->capture_default_str();
  gen_cmd->add_option("--sampler", gen.sampler, "pairing | bipartite")
      ->check(CLI::IsMember({"pairing", "bipartite"}))
      ->capture_default_str();
  gen_cmd->add_option("--retries", gen.retries, "rejection-sampling budget per graph")->capture_default_str();
  gen_cmd->add_option("--out-dir", gen.out_dir, std::string("output directory (default $") + kOutDirEnv + " or .)");
  family_opt->excludes(n_opt)->excludes(d_opt);
  n_opt->needs(d_opt);
  d_opt->needs(n_opt);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run one algorithm on an edge-list file");
  run_cmd->add_option("--alg", run.alg, "greedy-f | local-search | combined | maximal | exact")
      ->required()
      ->check(CLI::IsMember({"greedy-f", "local-search", "combined", "maximal", "exact"}));
  run_cmd->add_option("--f", run.f, "greedy-f threshold p or p/q (default (3d^2-d)/2)");
  run_cmd->add_option("--budget", run.budget, "exact solver node budget")->capture_default_str();
  run_cmd->add_option("--out", run.out, "write matching and trace JSON here");
  run_cmd->add_option("input", run.input, "edge-list file")->required();

  VerifyCliOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check every applicable bound on each input graph");
  verify_cmd->add_flag("--with-exact", verify.with_exact, "also solve exactly and check approximation ratios");
  verify_cmd->add_option("--budget", verify.budget, "exact solver node budget")->capture_default_str();
  verify_cmd->add_option("--out-dir", verify.out_dir, std::string("report directory (default $") + kOutDirEnv + " or .)");
  verify_cmd->add_option("--csv", verify.csv, "summary CSV, one row per (graph, check)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("inputs", verify.inputs, "edge-list files")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark the heuristics over a corpus");
  auto* corpus_opt = bench_cmd->add_option("--corpus", bench.corpus, "directory of .edges files");
  auto* bn_opt = bench_cmd->add_option("--n", bench.n, "random corpus: vertex count");
  auto* bd_opt = bench_cmd->add_option("--d", bench.d, "random corpus: degree");
  bench_cmd->add_option("--count", bench.count, "random corpus: instances")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "random corpus: first seed")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "timing repetitions")->capture_default_str();
  bench_cmd->add_flag("--with-exact", bench.with_exact, "fill the nu_s and ratio columns");
  bench_cmd->add_option("--budget", bench.budget, "exact solver node budget")->capture_default_str();
  bench_cmd->add_flag("--no-timing", bench.no_timing, "write NA in the time column (reproducible output)");
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  corpus_opt->excludes(bn_opt)->excludes(bd_opt);
  bn_opt->needs(bd_opt);
  bd_opt->needs(bn_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen.family.empty() && (n_opt->count() == 0 || d_opt->count() == 0)) {
        std::cerr << "gen: give --family or both --n and --d\n";
        return kExitUsage;
      }
      return cmd_gen(gen);
    }
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) {
      if (bench.corpus.empty() && bench.count > 0 && (bn_opt->count() == 0 || bd_opt->count() == 0)) {
        std::cerr << "bench: give --corpus or --n and --d\n";
        return kExitUsage;
      }
      return cmd_bench(bench);
    }
  } catch (const imatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
