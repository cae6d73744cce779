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

// Batch experiments driven by the CLI: the piece-count study and the
// scaling benchmark.

#ifndef DKS1D_EXPERIMENTS_HPP_
#define DKS1D_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dks1d/execution.hpp"
#include "dks1d/io.hpp"
#include "dks1d/random.hpp"
#include "dks1d/solver.hpp"

namespace dks1d {

enum class Mode { kSolve, kPiecesStats, kBench, kGenerate };
enum class Arithmetic { kFloat, kExact };

struct RunConfig {
  Mode mode = Mode::kSolve;
  Backend backend = Backend::kExplicit;
  Arithmetic arithmetic = Arithmetic::kFloat;
  std::size_t n = 100;
  std::size_t trials = 1;
  Distribution distribution = Distribution::kSmallUniform;
  std::uint64_t seed = 1;
  std::string input;
  std::string output;
  OutputFormat format = OutputFormat::kText;
  bool dump_plf = false;
  bool oracle = false;
};

// Throws InvalidArgument when trials < 1 or n < 2.
void validate(const RunConfig& cfg);

struct PieceStats {
  std::size_t n = 0;
  std::vector<std::size_t> per_trial;  // max pieces over R_2..R_{n-1}
  double average = 0.0;
  std::size_t maximum = 0;
};

// Max piece count of the explicit chain for one generated instance.
std::size_t max_pieces_for_trial(const RunConfig& cfg, std::uint64_t trial);

// Trial t uses generate_gaps(dist, n, seed, t). Both execution modes return
// identical statistics.
PieceStats run_pieces_stats(const RunConfig& cfg, Execution exec = Execution::kParallel);

void write_pieces_table(std::ostream& out, const RunConfig& cfg, const PieceStats& stats);
void write_pieces_csv(std::ostream& out, const RunConfig& cfg, const PieceStats& stats);

struct BenchRow {
  Backend backend = Backend::kExplicit;
  std::size_t n = 0;
  double seconds = 0.0;  // mean over trials
  double matrix_ops = 0.0;
};

// Sizes 100, 200, 400, ... up to cfg.n.
std::vector<std::size_t> bench_ladder(std::size_t max_n);

// Times solve() for both backends on each ladder size, one instance per
// trial. Generation sits outside the timed region. Runs serially so the
// timings are not skewed by sibling threads.
std::vector<BenchRow> run_bench(const RunConfig& cfg);

void write_bench_table(std::ostream& out, const RunConfig& cfg, const std::vector<BenchRow>& rows);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace dks1d

#endif  // DKS1D_EXPERIMENTS_HPP_
