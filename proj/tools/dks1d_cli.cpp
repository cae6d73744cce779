// Copyright 2026 The dks1d Authors
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

// dks1d: optimal consecutive-edge weights for points on a line.
//
//   dks1d --in points.txt [--backend implicit] [--arith exact] [--format json]
//   dks1d --mode generate --n 1000 --dist gaussian --seed 7 --out pts.txt
//   dks1d --mode pieces-stats --n 100 --trials 1000 [--out stats.csv]
//   dks1d --mode bench --n 3200 --trials 3
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dks1d/errors.hpp"
#include "dks1d/experiments.hpp"
#include "dks1d/explicit_chain.hpp"
#include "dks1d/io.hpp"
#include "dks1d/oracle.hpp"
#include "dks1d/random.hpp"
#include "dks1d/solver.hpp"

namespace {

using namespace dks1d;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidArgument("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

template <Scalar T>
PointSet<T> load_points(const RunConfig& cfg) {
  if (!cfg.input.empty()) return parse_points_file<T>(cfg.input);
  const std::vector<double> gaps = generate_gaps(cfg.distribution, cfg.n, cfg.seed);
  std::vector<T> converted;
  for (double g : gaps) converted.push_back(scalar_from_double<T>(g));
  return points_from_gaps<T>(converted);
}

template <Scalar T>
int run_solve(const RunConfig& cfg) {
  const Instance<T> inst = build_instance<T>(load_points<T>(cfg));
  const SolveResult<T> res = solve(inst, cfg.backend);
  Sink sink(cfg.output);
  std::ostream& out = sink.stream();
  emit_result(out, res, cfg.format);
  if (cfg.dump_plf && inst.size() >= 3) {
    const ExplicitChain<T> chain = build_chain(inst);
    for (std::size_t level = 2; level <= chain.last_level(); ++level) {
      out << "# R_" << level << '\n';
      chain.function(level).dump(out);
    }
  }
  if (cfg.oracle) {
    const OracleResult<T> ref = oracle_consecutive(inst);
    out << "oracle Q = " << format_scalar(ref.q_value) << '\n';
    for (std::size_t i = 0; i < ref.weights.size(); ++i) {
      out << "oracle w[" << i + 1 << "] = " << format_scalar(ref.weights[i]) << '\n';
    }
  }
  if (!res.certificate_valid) {
    std::cerr << "error: optimality certificate failed\n";
    return kExitInvariant;
  }
  return 0;
}

template <Scalar T>
int run_generate(const RunConfig& cfg) {
  Sink sink(cfg.output);
  write_points(sink.stream(), load_points<T>(cfg));
  return 0;
}

int run_pieces(const RunConfig& cfg) {
  const PieceStats stats = run_pieces_stats(cfg);
  Sink sink(cfg.output);
  if (ends_with(cfg.output, ".csv")) {
    write_pieces_csv(sink.stream(), cfg, stats);
  } else {
    write_pieces_table(sink.stream(), cfg, stats);
  }
  return 0;
}

int run_bench_mode(const RunConfig& cfg) {
  const std::vector<BenchRow> rows = run_bench(cfg);
  Sink sink(cfg.output);
  if (ends_with(cfg.output, ".csv")) {
    write_bench_csv(sink.stream(), rows);
  } else {
    write_bench_table(sink.stream(), cfg, rows);
  }
  return 0;
}

int dispatch(const RunConfig& cfg) {
  validate(cfg);
  const bool exact = cfg.arithmetic == Arithmetic::kExact;
  switch (cfg.mode) {
    case Mode::kSolve:
      return exact ? run_solve<Rational>(cfg) : run_solve<double>(cfg);
    case Mode::kGenerate:
      return exact ? run_generate<Rational>(cfg) : run_generate<double>(cfg);
    case Mode::kPiecesStats:
      return run_pieces(cfg);
    case Mode::kBench:
      return run_bench_mode(cfg);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal consecutive-edge weights for points on a line"};
  RunConfig cfg;
  const std::map<std::string, Mode> modes{{"solve", Mode::kSolve},
                                          {"pieces-stats", Mode::kPiecesStats},
                                          {"bench", Mode::kBench},
                                          {"generate", Mode::kGenerate}};
  const std::map<std::string, Backend> backends{{"explicit", Backend::kExplicit},
                                                {"implicit", Backend::kImplicit}};
  const std::map<std::string, Arithmetic> ariths{{"float", Arithmetic::kFloat},
                                                 {"exact", Arithmetic::kExact}};
  const std::map<std::string, Distribution> dists{
      {"small-uniform", Distribution::kSmallUniform},
      {"large-uniform", Distribution::kLargeUniform},
      {"gaussian", Distribution::kGaussian}};
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::kText},
                                                    {"json", OutputFormat::kJson}};

  app.add_option("--mode", cfg.mode, "solve | pieces-stats | bench | generate")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--backend", cfg.backend, "explicit | implicit")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  app.add_option("--arith", cfg.arithmetic, "float | exact")
      ->transform(CLI::CheckedTransformer(ariths, CLI::ignore_case));
  app.add_option("--n", cfg.n, "number of points for generated instances")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  app.add_option("--trials", cfg.trials, "trials for pieces-stats and bench")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  app.add_option("--dist", cfg.distribution, "small-uniform | large-uniform | gaussian")
      ->transform(CLI::CheckedTransformer(dists, CLI::ignore_case));
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--in", cfg.input, "points file (one coordinate per line)");
  app.add_option("--out", cfg.output, "output path; stats and bench write CSV for *.csv");
  app.add_option("--format", cfg.format, "text | json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--dump-plf", cfg.dump_plf, "print the pieces of every R_i");
  app.add_flag("--oracle", cfg.oracle, "cross-check with brute-force enumeration (n <= 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return dispatch(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}
