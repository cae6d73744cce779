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

#include "dks1d/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "dks1d/errors.hpp"
#include "dks1d/explicit_chain.hpp"

namespace dks1d {
namespace {

template <Scalar T>
Instance<T> instance_from(const std::vector<double>& gaps) {
  std::vector<T> converted;
  converted.reserve(gaps.size());
  for (double g : gaps) converted.push_back(scalar_from_double<T>(g));
  return Instance<T>(std::move(converted));
}

template <Scalar T>
std::size_t chain_max_pieces(const std::vector<double>& gaps) {
  return build_chain(instance_from<T>(gaps)).max_pieces();
}

template <Scalar T>
double time_solve(const std::vector<double>& gaps, Backend backend, double* matrix_ops) {
  const Instance<T> inst = instance_from<T>(gaps);
  const auto start = std::chrono::steady_clock::now();
  const SolveResult<T> res = solve(inst, backend);
  const auto stop = std::chrono::steady_clock::now();
  if (!res.certificate_valid) throw InvariantViolation("bench: invalid certificate");
  *matrix_ops += static_cast<double>(res.counters.matrix_ops);
  return std::chrono::duration<double>(stop - start).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (cfg.n < 2) throw InvalidArgument("n must be at least 2");
}

std::size_t max_pieces_for_trial(const RunConfig& cfg, std::uint64_t trial) {
  const std::vector<double> gaps = generate_gaps(cfg.distribution, cfg.n, cfg.seed, trial);
  return cfg.arithmetic == Arithmetic::kExact ? chain_max_pieces<Rational>(gaps)
                                              : chain_max_pieces<double>(gaps);
}

PieceStats run_pieces_stats(const RunConfig& cfg, Execution exec) {
  validate(cfg);
  if (cfg.n < 3) throw InvalidArgument("pieces-stats needs n >= 3");
  PieceStats stats;
  stats.n = cfg.n;
  stats.per_trial.assign(cfg.trials, 0);
  const auto trials = static_cast<std::int64_t>(cfg.trials);
  if (exec == Execution::kSerial) {
    for (std::int64_t t = 0; t < trials; ++t) {
      stats.per_trial[t] = max_pieces_for_trial(cfg, static_cast<std::uint64_t>(t));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < trials; ++t) {
      stats.per_trial[t] = max_pieces_for_trial(cfg, static_cast<std::uint64_t>(t));
    }
  }
  // Aggregated serially so both modes sum in the same order.
  const std::size_t total = std::accumulate(stats.per_trial.begin(), stats.per_trial.end(),
                                            std::size_t{0});
  stats.average = static_cast<double>(total) / static_cast<double>(cfg.trials);
  stats.maximum = *std::max_element(stats.per_trial.begin(), stats.per_trial.end());
  return stats;
}

void write_pieces_table(std::ostream& out, const RunConfig& cfg, const PieceStats& stats) {
  out << "distribution   n        trials   avg pieces   max pieces\n";
  char line[128];
  std::snprintf(line, sizeof(line), "%-14s %-8zu %-8zu %-12s %zu\n",
                std::string(distribution_name(cfg.distribution)).c_str(), stats.n,
                stats.per_trial.size(), fixed(stats.average, 3).c_str(), stats.maximum);
  out << line;
}

void write_pieces_csv(std::ostream& out, const RunConfig& cfg, const PieceStats& stats) {
  out << "distribution,n,trials,avg_pieces,max_pieces\n";
  out << distribution_name(cfg.distribution) << ',' << stats.n << ',' << stats.per_trial.size()
      << ',' << fixed(stats.average, 6) << ',' << stats.maximum << '\n';
}

std::vector<std::size_t> bench_ladder(std::size_t max_n) {
  std::vector<std::size_t> ladder;
  for (std::size_t n = 100; n <= max_n; n *= 2) ladder.push_back(n);
  if (ladder.empty()) ladder.push_back(max_n);
  return ladder;
}

std::vector<BenchRow> run_bench(const RunConfig& cfg) {
  validate(cfg);
  std::vector<BenchRow> rows;
  for (Backend backend : {Backend::kExplicit, Backend::kImplicit}) {
    for (std::size_t n : bench_ladder(cfg.n)) {
      BenchRow row;
      row.backend = backend;
      row.n = n;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::vector<double> gaps = generate_gaps(cfg.distribution, n, cfg.seed, t);
        row.seconds += cfg.arithmetic == Arithmetic::kExact
                           ? time_solve<Rational>(gaps, backend, &row.matrix_ops)
                           : time_solve<double>(gaps, backend, &row.matrix_ops);
      }
      row.seconds /= static_cast<double>(cfg.trials);
      row.matrix_ops /= static_cast<double>(cfg.trials);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_table(std::ostream& out, const RunConfig& cfg, const std::vector<BenchRow>& rows) {
  out << "backend    arith  n        seconds      ratio\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BenchRow& r = rows[i];
    std::string ratio = "-";
    if (i > 0 && rows[i - 1].backend == r.backend && rows[i - 1].seconds > 0) {
      ratio = fixed(r.seconds / rows[i - 1].seconds, 2);
    }
    char line[128];
    std::snprintf(line, sizeof(line), "%-10s %-6s %-8zu %-12s %s\n",
                  std::string(backend_name(r.backend)).c_str(),
                  cfg.arithmetic == Arithmetic::kExact ? "exact" : "float", r.n,
                  fixed(r.seconds, 6).c_str(), ratio.c_str());
    out << line;
  }
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "backend,n,seconds,matrix_ops\n";
  for (const BenchRow& r : rows) {
    out << backend_name(r.backend) << ',' << r.n << ',' << fixed(r.seconds, 9) << ','
        << fixed(r.matrix_ops, 0) << '\n';
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace dks1d
