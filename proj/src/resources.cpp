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

#include "qlss/resources.hpp"

#include <cmath>
#include <stdexcept>

#include "qlss/synthesis.hpp"

namespace qlss {

namespace {

constexpr double kAngleTol = 1e-12;

bool near_multiple(double angle, double unit)
{
    const double r = std::remainder(angle, unit);
    return std::abs(r) < kAngleTol;
}

long long isqrt_ceil(long long v)
{
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : r + 1;
}

} // namespace

QubitParams QubitParams::preset(std::string_view name)
{
    QubitParams q;
    q.name = std::string(name);
    if (name == "ns-1e-4") {
        q.t_meas = 100e-9;
        q.t_1q = q.t_2q = q.t_tgate = 50e-9;
        q.e_meas = q.e_1q = q.e_2q = q.e_tgate = 1e-4;
    } else if (name == "us-1e-4") {
        q.t_meas = q.t_1q = q.t_2q = q.t_tgate = 100e-6;
        q.e_meas = q.e_1q = q.e_2q = 1e-4;
        q.e_tgate = 1e-6;
    } else {
        throw std::invalid_argument("unknown qubit preset '" + std::string(name) + "' (expected ns-1e-4 or us-1e-4)");
    }
    return q;
}

void QubitParams::validate() const
{
    for (double t : {t_meas, t_1q, t_2q, t_tgate})
        if (!(t > 0.0)) throw std::invalid_argument("qubit durations must be positive");
    for (double e : {e_meas, e_1q, e_2q, e_tgate})
        if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("qubit error rates must lie in (0, 1)");
}

double QECSpec::cycle_time(const QubitParams& q) const
{
    return (cycle_coeff_2q * q.t_2q + cycle_coeff_meas * q.t_meas) * distance;
}

void QECSpec::validate() const
{
    if (distance < 1 || phys_per_logical < 1) throw std::invalid_argument("QEC distance and qubit count must be >= 1");
    if (!(logical_error_rate > 0.0) || !(threshold > 0.0)) throw std::invalid_argument("QEC rates must be positive");
}

TFactorySpec TFactorySpec::default_for(const QubitParams& q, const QECSpec& qec)
{
    TFactorySpec f;
    f.duration = 46.0 * q.t_1q * qec.distance;
    f.phys_qubits = 3000;
    f.states_per_batch = 1;
    f.output_error = 35.0 * q.e_tgate * q.e_tgate * q.e_tgate;
    return f;
}

void TFactorySpec::validate() const
{
    if (!(duration > 0.0) || phys_qubits < 1 || states_per_batch < 1 || !(output_error > 0.0))
        throw std::invalid_argument("T factory parameters must be positive");
}

ErrorBudget ErrorBudget::split(double total)
{
    if (!(total > 0.0 && total < 1.0)) throw std::invalid_argument("error budget must lie in (0, 1)");
    ErrorBudget b;
    b.total = total;
    b.logical_part = b.distill_part = b.synthesis_part = total / 3.0;
    return b;
}

LogicalCounts logical_counts(const Circuit& circuit)
{
    LogicalCounts c;
    c.n_alg = circuit.n_qubits;
    for (const Gate& g : circuit.gates) {
        const std::string where = " (" + std::string(to_string(g.kind)) + " gate); decompose the circuit first";
        if (g.kind == GateKind::UNITARY) throw DecompositionError("raw unitary cannot be costed" + where);
        if (g.repeat > 1) throw DecompositionError("repeated gate cannot be costed" + where);
        if (!g.controls.empty()) {
            if (g.kind == GateKind::CX && g.controls.size() == 1) {
                ++c.clifford;
            } else if ((g.kind == GateKind::Z || g.kind == GateKind::X) && g.controls.size() == 2) {
                ++c.ccz_ccix;
            } else if ((g.kind == GateKind::Z || g.kind == GateKind::X) && g.controls.size() == 1) {
                ++c.clifford;
            } else {
                throw DecompositionError("controlled gate cannot be costed" + where);
            }
            continue;
        }
        switch (g.kind) {
        case GateKind::T:
            ++c.t_gates;
            break;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::PHASE:
            if (near_multiple(g.angle, kPi / 2))
                ++c.clifford;
            else if (near_multiple(g.angle, kPi / 4))
                ++c.t_gates;
            else
                ++c.rotations;
            break;
        default:
            ++c.clifford;
        }
    }
    c.logical_depth = stats(circuit).depth;
    return c;
}

long long t_state_count(const LogicalCounts& counts)
{
    return counts.t_gates + 4 * counts.ccz_ccix + 18 * counts.rotations;
}

int layout(int n_alg)
{
    if (n_alg < 1) throw std::invalid_argument("layout: n_alg must be >= 1");
    return static_cast<int>(2LL * n_alg + isqrt_ceil(8LL * n_alg) + 1);
}

long long t_factory_count(long long t_states, const TFactorySpec& factory, double runtime)
{
    if (t_states == 0) return 0;
    if (!(runtime > 0.0)) throw std::invalid_argument("t_factory_count: runtime must be positive");
    const double need = static_cast<double>(t_states) * factory.duration /
                        (static_cast<double>(factory.states_per_batch) * runtime);
    // Guard the ceiling against round-off on exact ratios.
    const double r = std::round(need);
    return std::abs(need - r) < 1e-9 * std::max(1.0, r) ? static_cast<long long>(r)
                                                          : static_cast<long long>(std::ceil(need));
}

TFactorySpec EstimatorInputs::factory_or_default() const
{
    return factory ? *factory : TFactorySpec::default_for(qubits, qec);
}

ResourceReport estimate(const LogicalCounts& counts, const EstimatorInputs& inputs)
{
    inputs.qubits.validate();
    inputs.qec.validate();
    const TFactorySpec factory = inputs.factory_or_default();
    factory.validate();

    ResourceReport r;
    r.counts = counts;
    r.n_alg = counts.n_alg;
    r.n_after = layout(counts.n_alg);
    r.phys_alg = static_cast<long long>(r.n_after) * inputs.qec.phys_per_logical;
    r.t_states = t_state_count(counts);
    r.logical_cycles = counts.logical_depth + static_cast<long long>(std::llround(
                                                  inputs.rotation_cycle_multiplier * static_cast<double>(counts.rotations)));
    r.cycle_time = inputs.qec.cycle_time(inputs.qubits);
    r.runtime = static_cast<double>(r.logical_cycles) * r.cycle_time;
    if (!(r.runtime > 0.0)) throw std::invalid_argument("estimate: circuit has zero runtime");
    r.t_factories = t_factory_count(r.t_states, factory, r.runtime);
    r.phys_factories = r.t_factories * factory.phys_qubits;
    r.phys_total = r.phys_alg + r.phys_factories;
    r.min_logical_error_rate =
        inputs.budget.logical_part / (static_cast<double>(r.n_after) * static_cast<double>(r.logical_cycles));
    r.logical_rate_feasible = inputs.qec.logical_error_rate <= r.min_logical_error_rate;
    if (r.t_states > 0) {
        r.min_tstate_error_rate = inputs.budget.distill_part / static_cast<double>(r.t_states);
        r.tstate_rate_feasible = factory.output_error <= *r.min_tstate_error_rate;
    } else {
        r.tstate_rate_feasible = true;
    }
    return r;
}

ResourceReport estimate(const Circuit& circuit, const EstimatorInputs& inputs)
{
    return estimate(logical_counts(circuit), inputs);
}

std::optional<LineFit> fit_line(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

SweepResult summarize_sweep(std::vector<SweepRow> rows)
{
    SweepResult out;
    out.rows = std::move(rows);
    std::vector<double> x, runtime, cycles, tstates;
    for (const SweepRow& r : out.rows) {
        x.push_back(r.n_c);
        runtime.push_back(std::log10(r.report.runtime));
        cycles.push_back(std::log10(static_cast<double>(r.report.logical_cycles)));
        tstates.push_back(r.report.t_states > 0 ? std::log10(static_cast<double>(r.report.t_states)) : 0.0);
    }
    out.runtime_fit = fit_line(x, runtime);
    out.cycles_fit = fit_line(x, cycles);
    out.t_states_fit = fit_line(x, tstates);
    return out;
}

SweepResult sweep_nc(const LinearSystem& system, std::span<const int> n_c_values, const EstimatorInputs& inputs,
                     const ConfigFor& config_for, int jobs)
{
    const auto n = static_cast<long long>(n_c_values.size());
    std::vector<SweepRow> rows(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
    for (long long i = 0; i < n; ++i) {
        try {
            const int nc = n_c_values[static_cast<std::size_t>(i)];
            const HHLConfig cfg = config_for ? config_for(system, nc) : auto_config(system, nc);
            rows[static_cast<std::size_t>(i)] = {nc, estimate(decompose(build(system, cfg)), inputs)};
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return summarize_sweep(std::move(rows));
}

} // namespace qlss
