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

#include "qlss/state.hpp"

#include <cmath>
#include <stdexcept>

#include "qlss/kernels.hpp"

namespace qlss {

QuantumState QuantumState::zero(int n_qubits) { return basis(n_qubits, 0); }

QuantumState QuantumState::basis(int n_qubits, long long index)
{
    if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("state size out of range");
    QuantumState s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    if (index < 0 || index >= static_cast<long long>(s.amplitudes.size()))
        throw std::invalid_argument("basis index out of range");
    s.amplitudes[static_cast<std::size_t>(index)] = 1.0;
    return s;
}

QuantumState QuantumState::from_vector(const CVector& v)
{
    if (!is_power_of_two(v.size()) || v.size() < 2)
        throw std::invalid_argument("state length " + std::to_string(v.size()) + " is not a power of two");
    QuantumState s;
    s.n_qubits = log2_exact(v.size());
    s.amplitudes.assign(v.data(), v.data() + v.size());
    return s;
}

CVector QuantumState::to_vector() const
{
    return Eigen::Map<const CVector>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
}

double QuantumState::norm() const
{
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

double QuantumState::probability_of(int qubit, int outcome) const
{
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        if (static_cast<int>(i >> qubit & 1) == outcome) p += std::norm(amplitudes[i]);
    return p;
}

double fidelity(const QuantumState& a, const QuantumState& b)
{
    if (a.amplitudes.size() != b.amplitudes.size()) throw std::invalid_argument("fidelity: size mismatch");
    cplx ip = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) ip += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return std::abs(ip);
}

QuantumState run(const Circuit& circuit, const std::optional<QuantumState>& initial, KernelMode mode)
{
    circuit.validate();
    QuantumState state = initial ? *initial : QuantumState::zero(circuit.n_qubits);
    if (state.n_qubits != circuit.n_qubits) {
        throw std::invalid_argument("initial state has " + std::to_string(state.n_qubits) + " qubits, circuit has " +
                                    std::to_string(circuit.n_qubits));
    }
    std::span<cplx> amps(state.amplitudes);
    for (const Gate& g : circuit.gates) {
        if (mode == KernelMode::Parallel)
            kernels::apply(amps, circuit.n_qubits, g);
        else
            kernels::apply_reference(amps, circuit.n_qubits, g);
    }
    if (circuit.global_phase != 0.0) {
        const cplx ph = std::polar(1.0, circuit.global_phase);
        for (cplx& a : state.amplitudes) a *= ph;
    }
    return state;
}

PostSelection postselect(const QuantumState& state, int qubit, int outcome)
{
    if (qubit < 0 || qubit >= state.n_qubits) throw std::invalid_argument("postselect: qubit out of range");
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("postselect: outcome must be 0 or 1");
    const double p = state.probability_of(qubit, outcome);
    if (p < 1e-12) {
        throw ZeroProbabilityError("post-selection of qubit " + std::to_string(qubit) + " on outcome " +
                                   std::to_string(outcome) + " has zero probability");
    }
    PostSelection out{state, p};
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < out.state.amplitudes.size(); ++i) {
        cplx& a = out.state.amplitudes[i];
        a = static_cast<int>(i >> qubit & 1) == outcome ? a * scale : cplx{0.0, 0.0};
    }
    return out;
}

} // namespace qlss
