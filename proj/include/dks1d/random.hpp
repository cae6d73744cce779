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

// Seeded instance generation for the three gap distributions.
//
// The engine is std::mt19937_64 seeded through std::seed_seq from
// (master seed, trial index); both are fully specified by the C++ standard.
// Draws go through Boost.Random distributions, which are fixed code rather
// than implementation-defined, so a seed yields the same gaps everywhere.

#ifndef DKS1D_RANDOM_HPP_
#define DKS1D_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dks1d {

enum class Distribution { kSmallUniform, kLargeUniform, kGaussian };

std::string_view distribution_name(Distribution d);
// Throws InvalidArgument on an unknown name.
Distribution parse_distribution(std::string_view name);

inline constexpr std::int64_t kSmallUniformMax = 50;
inline constexpr std::int64_t kLargeUniformMax = 10000;
inline constexpr double kGaussianMean = 100.0;
inline constexpr double kGaussianStddev = 30.0;

// Engine for trial `trial` of a run with master seed `seed`.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

// One gap. Uniform draws are integers; Gaussian draws are redrawn until >= 1.
double draw_gap(Distribution dist, std::mt19937_64& rng);

// n - 1 i.i.d. gaps for an n-point instance.
std::vector<double> generate_gaps(Distribution dist, std::size_t n, std::uint64_t seed,
                                  std::uint64_t trial = 0);

}  // namespace dks1d

#endif  // DKS1D_RANDOM_HPP_
