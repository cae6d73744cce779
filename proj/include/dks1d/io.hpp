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

// Point-file input and result output.

#ifndef DKS1D_IO_HPP_
#define DKS1D_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "dks1d/instance.hpp"
#include "dks1d/numerics.hpp"
#include "dks1d/solver.hpp"

namespace dks1d {

enum class OutputFormat { kText, kJson };

OutputFormat parse_output_format(std::string_view name);

// One coordinate per line, decimal or "p/q". Blank lines and everything after
// '#' are ignored. Errors carry the 1-based line number.
template <Scalar T>
PointSet<T> parse_points(std::istream& in);

template <Scalar T>
PointSet<T> parse_points_file(const std::string& path);

template <Scalar T>
void write_points(std::ostream& out, const PointSet<T>& points);

template <Scalar T>
void emit_result(std::ostream& out, const SolveResult<T>& res, OutputFormat fmt);

}  // namespace dks1d

#endif  // DKS1D_IO_HPP_
