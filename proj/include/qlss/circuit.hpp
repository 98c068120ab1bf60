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

#include <map>
#include <string>
#include <vector>

#include "qlss/gate.hpp"

namespace qlss {

/// Ordered gate list on `n_qubits` qubits. Qubit 0 is the least significant bit
/// of the basis index. `global_phase` is applied after the last gate; it lets
/// synthesis and fusion stay exact rather than exact-up-to-phase.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    double global_phase = 0.0;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    /// Validates `g` against this circuit's qubit count before appending.
    Circuit& add(Gate g);
    /// Appends `other`, whose qubit count must not exceed ours.
    Circuit& append(const Circuit& other);
    Circuit inverse() const;
    void validate() const;
    bool empty() const { return gates.empty(); }
    std::size_t size() const { return gates.size(); }
};

struct CircuitStats {
    int depth = 0;
    long long total_gates = 0;
    long long two_qubit_gates = 0;
    std::map<std::string, long long> by_label;
};

/// Depth is the ASAP layer count where gates sharing a qubit serialize.
CircuitStats stats(const Circuit& circuit);

} // namespace qlss
