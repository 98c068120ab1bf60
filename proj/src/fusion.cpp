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

#include "qlss/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace qlss {

namespace {

constexpr double kIdentityTol = 1e-12;

struct Pending {
    CMatrix product;
    Gate first;     // kept verbatim when the run has a single gate
    int count = 0;
    bool diagonal = true;
};

bool offdiag_zero(const CMatrix& m) { return std::abs(m(0, 1)) <= kIdentityTol && std::abs(m(1, 0)) <= kIdentityTol; }

/// Whether gate `g` commutes with every diagonal operator on qubit `q`.
bool diagonal_on(const Gate& g, int q)
{
    if (std::find(g.controls.begin(), g.controls.end(), q) != g.controls.end()) return true;
    return g.is_diagonal(kIdentityTol);
}

void flush(std::optional<Pending>& slot, int q, Circuit& out)
{
    if (!slot) return;
    Pending& p = *slot;
    const CMatrix& m = p.product;
    const bool proportional_to_identity = offdiag_zero(m) && std::abs(m(0, 0) - m(1, 1)) <= kIdentityTol;
    if (proportional_to_identity) {
        out.global_phase += std::arg(m(0, 0));
    } else if (p.count == 1) {
        out.add(std::move(p.first));
    } else {
        out.add(gates::unitary(m, {q}));
    }
    slot.reset();
}

} // namespace

Circuit fuse(const Circuit& circuit)
{
    Circuit out(circuit.n_qubits);
    out.global_phase = circuit.global_phase;
    std::vector<std::optional<Pending>> pending(static_cast<std::size_t>(circuit.n_qubits));

    for (const Gate& g : circuit.gates) {
        if (g.targets.size() == 1 && g.controls.empty()) {
            auto& slot = pending[g.targets[0]];
            if (!slot) {
                slot = Pending{g.matrix, g, 1, g.is_diagonal(kIdentityTol)};
            } else {
                slot->product = g.matrix * slot->product;
                slot->count += 1;
                slot->diagonal = offdiag_zero(slot->product);
            }
            continue;
        }
        for (int q : g.qubits()) {
            auto& slot = pending[q];
            if (slot && !(slot->diagonal && diagonal_on(g, q))) flush(slot, q, out);
        }
        out.add(g);
    }
    for (int q = 0; q < circuit.n_qubits; ++q) flush(pending[q], q, out);
    return out;
}

} // namespace qlss
