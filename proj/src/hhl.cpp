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

#include "qlss/hhl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qlss/state.hpp"
#include "qlss/synthesis.hpp"

namespace qlss {

namespace {

constexpr double kNormTol = 1e-9;

void check_config(const HHLConfig& config)
{
    if (config.n_c < 1) throw std::invalid_argument("HHL: n_c must be >= 1");
    if (!(config.t > 0.0)) throw std::invalid_argument("HHL: evolution time must be positive");
    if (!(config.c_const > 0.0)) throw std::invalid_argument("HHL: inversion constant must be positive");
    if (config.signed_phases && config.n_c < 2) throw std::invalid_argument("HHL: signed encoding needs n_c >= 2");
}

void check_system(const LinearSystem& system)
{
    if (!is_power_of_two(system.dim()) || system.dim() < 2)
        throw std::invalid_argument("HHL: system dimension must be a power of two >= 2");
    if (!is_hermitian(system.a)) throw std::invalid_argument("HHL: system matrix must be Hermitian");
    if (system.b.size() != system.dim()) throw std::invalid_argument("HHL: rhs length mismatch");
}

std::vector<int> iota_vec(int first, int count)
{
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), first);
    return v;
}

} // namespace

int select_clock_qubits(int n_d, double kappa, bool has_negative)
{
    if (n_d < 1) throw std::invalid_argument("select_clock_qubits: n_d must be >= 1");
    if (!(kappa >= 1.0)) throw std::invalid_argument("select_clock_qubits: kappa must be >= 1");
    const int from_kappa = static_cast<int>(std::ceil(std::log2(kappa + 1.0)));
    return std::max(n_d + 1, from_kappa) + (has_negative ? 1 : 0);
}

double select_evolution_time(double eig_max_abs, int n_c, bool signed_phases)
{
    if (!(eig_max_abs > 0.0)) throw std::invalid_argument("select_evolution_time: eig_max_abs must be positive");
    if (signed_phases) return kPi * (1.0 - std::ldexp(1.0, -(n_c - 1))) / eig_max_abs;
    return 2.0 * kPi * (1.0 - std::ldexp(1.0, -n_c)) / eig_max_abs;
}

double default_inversion_constant(int n_c, double t)
{
    return 2.0 * kPi / (std::ldexp(1.0, n_c) * t);
}

double clock_eigenvalue(long long k, int n_c, double t, bool signed_phases)
{
    const long long n = 1LL << n_c;
    if (signed_phases && k >= n / 2) k -= n;
    return 2.0 * kPi * static_cast<double>(k) / (static_cast<double>(n) * t);
}

HHLConfig auto_config(const LinearSystem& system, std::optional<int> n_c)
{
    check_system(system);
    const MatrixMetrics m = metrics(system.a);
    HHLConfig c;
    c.signed_phases = m.has_negative;
    c.n_c = n_c ? *n_c : select_clock_qubits(log2_exact(system.dim()), m.condition_number, m.has_negative);
    c.t = select_evolution_time(m.eig_max_abs, c.n_c, c.signed_phases);
    c.c_const = default_inversion_constant(c.n_c, c.t);
    return c;
}

HHLConfig centered_config(int n_c, double lambda_ref)
{
    if (n_c < 1) throw std::invalid_argument("centered_config: n_c must be >= 1");
    if (!(lambda_ref > 0.0)) throw std::invalid_argument("centered_config: lambda_ref must be positive");
    HHLConfig c;
    c.n_c = n_c;
    c.t = kPi / lambda_ref;
    c.c_const = default_inversion_constant(n_c, c.t);
    return c;
}

Circuit state_prep(const CVector& b)
{
    if (!is_power_of_two(static_cast<long long>(b.size())) || b.size() < 2)
        throw std::invalid_argument("state_prep: length must be a power of two >= 2");
    if (std::abs(b.norm() - 1.0) > kNormTol) throw std::invalid_argument("state_prep: vector must be normalized");
    const int n = log2_exact(b.size());
    Circuit out(n);

    // Magnitudes: RY tree from the most significant qubit down.
    for (int m = n - 1; m >= 0; --m) {
        const long long groups = 1LL << (n - 1 - m);
        const long long half = 1LL << m;
        std::vector<double> angles(static_cast<std::size_t>(groups));
        for (long long c = 0; c < groups; ++c) {
            const long long base = c << (m + 1);
            const double lo = b.segment(base, half).norm();
            const double hi = b.segment(base + half, half).norm();
            angles[static_cast<std::size_t>(c)] = 2.0 * std::atan2(hi, lo);
        }
        const std::vector<int> controls = iota_vec(m + 1, n - 1 - m);
        synth::append_multiplexed_rotation(out, synth::Axis::Y, angles, m, controls);
    }

    // Phases: peel diag(e^{i phi}) one qubit at a time into multiplexed RZ.
    std::vector<double> phases(static_cast<std::size_t>(b.size()));
    for (Eigen::Index i = 0; i < b.size(); ++i)
        phases[static_cast<std::size_t>(i)] = std::abs(b(i)) > 0.0 ? std::arg(b(i)) : 0.0;
    for (int m = 0; m < n; ++m) {
        const std::size_t pairs = phases.size() / 2;
        std::vector<double> angles(pairs), carried(pairs);
        for (std::size_t c = 0; c < pairs; ++c) {
            angles[c] = phases[2 * c + 1] - phases[2 * c];
            carried[c] = 0.5 * (phases[2 * c + 1] + phases[2 * c]);
        }
        const std::vector<int> controls = iota_vec(m + 1, n - 1 - m);
        synth::append_multiplexed_rotation(out, synth::Axis::Z, angles, m, controls);
        phases = std::move(carried);
    }
    out.global_phase += phases[0];
    return out;
}

Circuit qft(int n_qubits, std::span<const int> qubits)
{
    const int n = static_cast<int>(qubits.size());
    Circuit out(n_qubits);
    for (int j = n - 1; j >= 0; --j) {
        out.add(gates::h(qubits[j]));
        for (int k = j - 1; k >= 0; --k)
            out.add(gates::controlled(gates::phase(qubits[j], kPi / static_cast<double>(1LL << (j - k))), {qubits[k]}));
    }
    for (int i = 0; i < n / 2; ++i) out.add(gates::swap(qubits[i], qubits[n - 1 - i]));
    return out;
}

Circuit inverse_qft(int n_qubits, std::span<const int> qubits)
{
    return qft(n_qubits, qubits).inverse();
}

namespace {

template <typename PowerFn>
Circuit qpe_impl(int n_d, int n_c, PowerFn&& power)
{
    const int n = n_d + n_c;
    Circuit out(n);
    const std::vector<int> data = iota_vec(0, n_d);
    const std::vector<int> clock = iota_vec(n_d, n_c);
    for (int q : clock) out.add(gates::h(q));
    for (int j = 0; j < n_c; ++j) out.add(power(j, data, clock[static_cast<std::size_t>(j)]));
    out.append(inverse_qft(n, clock));
    return out;
}

} // namespace

Circuit qpe(const CMatrix& u, int n_c)
{
    if (!is_unitary(u)) throw std::invalid_argument("qpe: u must be unitary");
    if (!is_power_of_two(u.rows()) || u.rows() < 2) throw std::invalid_argument("qpe: u must act on whole qubits");
    if (n_c < 1) throw std::invalid_argument("qpe: n_c must be >= 1");
    const int n_d = log2_exact(u.rows());
    return qpe_impl(n_d, n_c, [&](int j, const std::vector<int>& data, int ctrl) {
        return gates::unitary_power(u, 1 << j, data, {ctrl});
    });
}

Circuit qpe(const EigenDecomposition& eig, double t, int n_c)
{
    if (n_c < 1) throw std::invalid_argument("qpe: n_c must be >= 1");
    const int n_d = log2_exact(eig.values.size());
    const CMatrix u = unitary_exp(eig, t);
    return qpe_impl(n_d, n_c, [&](int j, const std::vector<int>& data, int ctrl) {
        const int reps = 1 << j;
        Gate g = gates::unitary(unitary_exp(eig, t * reps), data, {ctrl});
        if (reps > 1) {
            g.repeat = reps;
            g.base = u;
        }
        return g;
    });
}

std::vector<double> inversion_angles(int n_c, double t, double c_const, bool signed_phases)
{
    const long long n = 1LL << n_c;
    std::vector<double> angles(static_cast<std::size_t>(n), 0.0);
    for (long long k = 1; k < n; ++k) {
        const double ratio = c_const / clock_eigenvalue(k, n_c, t, signed_phases);
        if (std::abs(ratio) > 1.0 + 1e-12) {
            throw std::invalid_argument("eigen_inversion: inversion constant " + std::to_string(c_const) +
                                        " exceeds representable eigenvalue at clock value " + std::to_string(k));
        }
        angles[static_cast<std::size_t>(k)] = 2.0 * std::asin(std::clamp(ratio, -1.0, 1.0));
    }
    return angles;
}

Circuit eigen_inversion(int n_qubits, std::span<const int> clock_qubits, int ancilla, double t, double c_const,
                        bool signed_phases)
{
    const int n_c = static_cast<int>(clock_qubits.size());
    const std::vector<double> angles = inversion_angles(n_c, t, c_const, signed_phases);
    Circuit out(n_qubits);
    synth::append_multiplexed_rotation(out, synth::Axis::Y, angles, ancilla, clock_qubits);
    return out;
}

Circuit build(const LinearSystem& system, const HHLConfig& config)
{
    check_system(system);
    check_config(config);
    const int n_d = log2_exact(system.dim());
    const int n = n_d + config.n_c + 1;
    const int ancilla = n - 1;

    Circuit out(n);
    out.append(state_prep(system.b));
    const Circuit pe = qpe(eig_hermitian(system.a), config.t, config.n_c);
    out.append(pe);
    const std::vector<int> clock = iota_vec(n_d, config.n_c);
    out.append(eigen_inversion(n, clock, ancilla, config.t, config.c_const, config.signed_phases));
    out.append(pe.inverse());
    return out;
}

HHLSolution solve(const LinearSystem& system, const HHLConfig& config)
{
    const Circuit circuit = build(system, config);
    const int n_d = log2_exact(system.dim());
    const int ancilla = circuit.n_qubits - 1;

    const QuantumState final_state = run(circuit);
    PostSelection post;
    try {
        post = postselect(final_state, ancilla, 1);
    } catch (const ZeroProbabilityError&) {
        throw ZeroProbabilityError("HHL: ancilla success probability below 1e-12 (inversion constant too small or b "
                                   "orthogonal to the solution space)");
    }

    // Data register on the clock = 0, ancilla = 1 slice.
    const long long offset = 1LL << ancilla;
    CVector slice(system.dim());
    for (Eigen::Index i = 0; i < slice.size(); ++i)
        slice(i) = post.state.amplitudes[static_cast<std::size_t>(offset + i)];
    const double slice_norm = slice.norm();
    if (!(slice_norm > 0.0)) throw ZeroProbabilityError("HHL: clock register never returned to |0>");

    HHLSolution s;
    s.n_d = n_d;
    s.config = config;
    s.success_probability = post.probability;
    s.clock_leakage = std::max(0.0, 1.0 - slice_norm * slice_norm);
    s.state_solution = slice / slice_norm;
    s.norm_estimate = std::sqrt(post.probability) / config.c_const;
    s.recovered_vector = system.b_norm * s.norm_estimate * system.extract(s.state_solution);

    const CVector exact = classical_solve(system);
    s.state_error = (exact / exact.norm() - s.state_solution).norm();
    s.vector_error = (system.b_norm * system.extract(exact) - s.recovered_vector).norm();
    return s;
}

} // namespace qlss
