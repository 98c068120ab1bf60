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

#include "qlss/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlss {

Circuit& Circuit::add(Gate g)
{
    validate_gate(g, n_qubits);
    gates.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other)
{
    if (other.n_qubits > n_qubits) {
        throw std::invalid_argument("append: circuit on " + std::to_string(other.n_qubits) +
                                    " qubits does not fit in " + std::to_string(n_qubits));
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    global_phase += other.global_phase;
    return *this;
}

Circuit Circuit::inverse() const
{
    Circuit inv(n_qubits);
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) inv.gates.push_back(adjoint(*it));
    inv.global_phase = -global_phase;
    return inv;
}

void Circuit::validate() const
{
    if (n_qubits < 1) throw std::invalid_argument("circuit must have at least one qubit");
    for (const Gate& g : gates) validate_gate(g, n_qubits);
}

CircuitStats stats(const Circuit& circuit)
{
    CircuitStats st;
    std::vector<int> layer(static_cast<std::size_t>(circuit.n_qubits), 0);
    for (const Gate& g : circuit.gates) {
        int top = 0;
        for (int q : g.targets) top = std::max(top, layer[q]);
        for (int q : g.controls) top = std::max(top, layer[q]);
        ++top;
        for (int q : g.targets) layer[q] = top;
        for (int q : g.controls) layer[q] = top;
        st.depth = std::max(st.depth, top);
        ++st.total_gates;
        if (g.arity() == 2) ++st.two_qubit_gates;
        ++st.by_label[std::string(to_string(g.kind))];
    }
    return st;
}

} // namespace qlss
