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

#include <optional>
#include <vector>

#include "qlss/circuit.hpp"

namespace qlss {

/// Dense statevector over 2^n_qubits basis states, qubit 0 least significant.
struct QuantumState {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    static QuantumState zero(int n_qubits);
    static QuantumState basis(int n_qubits, long long index);
    /// Copies `v`; its length must be a power of two.
    static QuantumState from_vector(const CVector& v);

    CVector to_vector() const;
    double norm() const;
    double probability_of(int qubit, int outcome) const;
};

/// |<a|b>|, insensitive to global phase.
double fidelity(const QuantumState& a, const QuantumState& b);

enum class KernelMode { Parallel, Reference };

/// Applies every gate of `circuit` in order to `initial` (default |0...0>),
/// followed by the circuit's global phase.
QuantumState run(const Circuit& circuit, const std::optional<QuantumState>& initial = std::nullopt,
                 KernelMode mode = KernelMode::Parallel);

struct PostSelection {
    QuantumState state;
    double probability = 0.0;
};

/// Projects `qubit` onto `outcome` and renormalizes. The returned state keeps
/// all qubits; the selected qubit is fixed at `outcome`.
PostSelection postselect(const QuantumState& state, int qubit, int outcome);

} // namespace qlss
