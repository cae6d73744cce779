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

#ifndef DKS1D_COUNTERS_HPP_
#define DKS1D_COUNTERS_HPP_

#include <cstdint>

namespace dks1d {

// Work counters threaded through queries by pointer; a null pointer disables
// counting. Not shared across threads.
struct OpCounter {
  std::uint64_t eval_queries = 0;
  std::uint64_t inverse_queries = 0;
  std::uint64_t op3_queries = 0;
  // 3x3 transform products and transform-point applications in the implicit
  // backend.
  std::uint64_t matrix_ops = 0;

  std::uint64_t total_queries() const { return eval_queries + inverse_queries + op3_queries; }
};

inline void bump(OpCounter* c, std::uint64_t OpCounter::*field, std::uint64_t by = 1) {
  if (c != nullptr) c->*field += by;
}

}  // namespace dks1d

#endif  // DKS1D_COUNTERS_HPP_
