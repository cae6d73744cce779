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

#include "dks1d/random.hpp"

#include <array>
#include <string>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "dks1d/errors.hpp"

namespace dks1d {

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::kSmallUniform:
      return "small-uniform";
    case Distribution::kLargeUniform:
      return "large-uniform";
    case Distribution::kGaussian:
      return "gaussian";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  for (Distribution d :
       {Distribution::kSmallUniform, Distribution::kLargeUniform, Distribution::kGaussian}) {
    if (distribution_name(d) == name) return d;
  }
  throw InvalidArgument("unknown distribution '" + std::string(name) + "'");
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::array<std::uint32_t, 4> words{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

double draw_gap(Distribution dist, std::mt19937_64& rng) {
  switch (dist) {
    case Distribution::kSmallUniform:
      return static_cast<double>(
          boost::random::uniform_int_distribution<std::int64_t>(1, kSmallUniformMax)(rng));
    case Distribution::kLargeUniform:
      return static_cast<double>(
          boost::random::uniform_int_distribution<std::int64_t>(1, kLargeUniformMax)(rng));
    case Distribution::kGaussian: {
      boost::random::normal_distribution<double> normal(kGaussianMean, kGaussianStddev);
      double g = normal(rng);
      while (g < 1.0) g = normal(rng);
      return g;
    }
  }
  throw InvalidArgument("unknown distribution");
}

std::vector<double> generate_gaps(Distribution dist, std::size_t n, std::uint64_t seed,
                                  std::uint64_t trial) {
  if (n < 2) throw InvalidArgument("generate: n must be at least 2");
  std::mt19937_64 rng = trial_engine(seed, trial);
  std::vector<double> gaps(n - 1);
  for (double& g : gaps) g = draw_gap(dist, rng);
  return gaps;
}

}  // namespace dks1d
