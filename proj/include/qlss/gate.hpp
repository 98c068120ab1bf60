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

#include <string>
#include <string_view>
#include <vector>

#include "qlss/types.hpp"

namespace qlss {

enum class GateKind { H, X, Y, Z, S, T, RX, RY, RZ, PHASE, CX, SWAP, UNITARY };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view label);

/// True for kinds whose matrix is determined by an angle parameter.
bool is_rotation(GateKind kind);

/// A unitary on `targets`, optionally conditioned on every qubit in `controls`
/// being |1>. Bit i of the matrix index corresponds to targets[i].
///
/// A gate may stand for `repeat` applications of `base`; then `matrix` holds
/// base^repeat so simulation stays a single dense application while synthesis
/// can still account for the repetitions.
struct Gate {
    GateKind kind = GateKind::UNITARY;
    std::vector<int> targets;
    std::vector<int> controls;
    double angle = 0.0;
    CMatrix matrix;
    int repeat = 1;
    CMatrix base;

    int arity() const { return static_cast<int>(targets.size() + controls.size()); }
    bool is_diagonal(double tol = 1e-12) const;
    /// All qubits the gate touches, targets first.
    std::vector<int> qubits() const;
};

CMatrix rx_matrix(double angle);
CMatrix ry_matrix(double angle);
CMatrix rz_matrix(double angle);
CMatrix phase_matrix(double angle);

/// Matrix of a fixed or rotation kind (not UNITARY).
CMatrix named_matrix(GateKind kind, double angle = 0.0);

namespace gates {

Gate h(int q);
Gate x(int q);
Gate y(int q);
Gate z(int q);
Gate s(int q);
Gate t(int q);
Gate rx(int q, double angle);
Gate ry(int q, double angle);
Gate rz(int q, double angle);
Gate phase(int q, double angle);
Gate cx(int control, int target);
Gate swap(int a, int b);
Gate unitary(CMatrix m, std::vector<int> targets, std::vector<int> controls = {});
/// Controlled power: matrix = base^repeat.
Gate unitary_power(const CMatrix& base, int repeat, std::vector<int> targets, std::vector<int> controls = {});
Gate controlled(Gate g, std::vector<int> controls);

} // namespace gates

Gate adjoint(const Gate& g);

/// Throws std::invalid_argument on malformed gates (duplicate qubits, matrix size,
/// non-unitary matrix, qubits outside [0, n_qubits)).
void validate_gate(const Gate& g, int n_qubits);

} // namespace qlss
