// Copyright 2026 The qlss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

#include "qlss/gate.hpp"

namespace qlss::kernels {

/// Straightforward reference: visits every basis index and updates the groups
/// whose target bits are zero and control bits are one. Single-threaded.
void apply_reference(std::span<cplx> amps, int n_qubits, const Gate& g);

/// Production kernel: enumerates only the affected amplitude groups via bit
/// insertion, with dedicated paths for one-target and diagonal gates, and
/// splits the groups across OpenMP threads. Each group is updated by exactly
/// one thread, so results do not depend on the thread count.
void apply(std::span<cplx> amps, int n_qubits, const Gate& g);

/// Groups below this count run on the calling thread.
inline constexpr long long kParallelThreshold = 1 << 11;

} // namespace qlss::kernels
