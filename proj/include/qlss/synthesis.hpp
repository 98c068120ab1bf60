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
#include <vector>

#include "qlss/circuit.hpp"

namespace qlss {

struct SynthesisOptions {
    /// Widest dense block (targets + controls) that decompose() will synthesize.
    int max_block_qubits = 8;
};

/// Lowers a circuit to single-qubit gates and CX. Named single-qubit gates pass
/// through; single-controlled single-qubit gates use the two-CX ABC
/// construction; two-qubit blocks use the KAK form with at most three CX; wider
/// blocks use quantum Shannon decomposition. A gate with repeat > 1 is lowered
/// once from its base and emitted `repeat` times. Exact including global phase.
Circuit decompose(const Circuit& circuit, const SynthesisOptions& options = {});

namespace synth {

/// U = e^{i phase} RZ(beta) RY(gamma) RZ(delta).
struct ZyzAngles {
    double phase = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

ZyzAngles zyz(const CMatrix& u);

enum class Axis { Y, Z };

/// Appends gates equal to `u` acting on `qubits` (qubits[i] is bit i of u's index).
void append_unitary(Circuit& out, const CMatrix& u, std::span<const int> qubits);

/// Uniformly controlled rotation: for every control value c (bit j of c is the
/// state of controls[j]), applies R_axis(angles[c]) to `target`. Gray-code
/// construction with 2^k rotations and 2^k CX for k > 0 controls.
void append_multiplexed_rotation(Circuit& out, Axis axis, std::span<const double> angles, int target,
                                 std::span<const int> controls);

/// Full matrix of a gate list acting on `n` local qubits (small n only).
CMatrix local_matrix(const Circuit& c);

} // namespace synth

} // namespace qlss
