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

#ifndef DKS1D_EXECUTION_HPP_
#define DKS1D_EXECUTION_HPP_

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dks1d {

// Batch kernels (oracle enumeration, experiment trials) come in a serial
// reference form and an OpenMP form that must produce identical results.
enum class Execution { kSerial, kParallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dks1d

#endif  // DKS1D_EXECUTION_HPP_
