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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlss/circuit.hpp"
#include "qlss/hhl.hpp"

namespace qlss {

/// Durations in seconds, error rates as probabilities.
struct QubitParams {
    std::string name;
    double t_meas = 0.0;
    double t_1q = 0.0;
    double t_2q = 0.0;
    double t_tgate = 0.0;
    double e_meas = 0.0;
    double e_1q = 0.0;
    double e_2q = 0.0;
    double e_tgate = 0.0;

    /// "ns-1e-4" or "us-1e-4".
    static QubitParams preset(std::string_view name);
    void validate() const;
};

struct QECSpec {
    int distance = 7;
    int phys_per_logical = 98;
    double logical_error_rate = 3e-10;
    double threshold = 0.01;
    /// cycle_time = (coeff_2q * t_2q + coeff_meas * t_meas) * distance
    double cycle_coeff_2q = 4.0;
    double cycle_coeff_meas = 2.0;

    double cycle_time(const QubitParams& q) const;
    void validate() const;
};

struct TFactorySpec {
    double duration = 0.0; // seconds per batch
    long long phys_qubits = 0;
    long long states_per_batch = 1;
    double output_error = 0.0;

    /// 15-to-1 style placeholder: 46 * t_1q * d per batch, 3000 qubits, 35 e_T^3.
    static TFactorySpec default_for(const QubitParams& q, const QECSpec& qec);
    void validate() const;
};

struct ErrorBudget {
    double total = 0.0;
    double logical_part = 0.0;
    double distill_part = 0.0;
    double synthesis_part = 0.0;

    static ErrorBudget split(double total);
};

struct LogicalCounts {
    int n_alg = 0;
    long long t_gates = 0;
    long long ccz_ccix = 0;
    long long rotations = 0;
    long long clifford = 0;
    long long logical_depth = 0;
};

/// Classifies a lowered circuit; raw unitaries and unsupported controlled gates throw DecompositionError.
LogicalCounts logical_counts(const Circuit& circuit);

long long t_state_count(const LogicalCounts& counts);

/// Logical qubits after layout: 2n + ceil(sqrt(8n)) + 1.
int layout(int n_alg);

long long t_factory_count(long long t_states, const TFactorySpec& factory, double runtime);

struct EstimatorInputs {
    QubitParams qubits = QubitParams::preset("ns-1e-4");
    QECSpec qec;
    std::optional<TFactorySpec> factory; // default_for(qubits, qec) when empty
    ErrorBudget budget = ErrorBudget::split(0.01);
    /// Extra logical cycles per rotation.
    double rotation_cycle_multiplier = 1.0;

    TFactorySpec factory_or_default() const;
};

struct ResourceReport {
    LogicalCounts counts;
    int n_alg = 0;
    int n_after = 0;
    long long phys_alg = 0;
    long long phys_factories = 0;
    long long phys_total = 0;
    long long t_states = 0;
    long long t_factories = 0;
    long long logical_cycles = 0;
    double cycle_time = 0.0;
    double runtime = 0.0;
    double min_logical_error_rate = 0.0;
    std::optional<double> min_tstate_error_rate; // empty when no T states are needed
    bool logical_rate_feasible = false;
    bool tstate_rate_feasible = false;
};

ResourceReport estimate(const LogicalCounts& counts, const EstimatorInputs& inputs);
ResourceReport estimate(const Circuit& circuit, const EstimatorInputs& inputs);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least squares; empty with fewer than two points.
std::optional<LineFit> fit_line(std::span<const double> x, std::span<const double> y);

struct SweepRow {
    int n_c = 0;
    ResourceReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<LineFit> runtime_fit; // log10 values against n_c
    std::optional<LineFit> cycles_fit;
    std::optional<LineFit> t_states_fit;
};

using ConfigFor = std::function<HHLConfig(const LinearSystem&, int n_c)>;

/// One estimate per n_c of decompose(build(system, config_for(system, n_c))).
SweepResult sweep_nc(const LinearSystem& system, std::span<const int> n_c_values, const EstimatorInputs& inputs,
                     const ConfigFor& config_for = {}, int jobs = 1);

/// Fits and packages precomputed rows.
SweepResult summarize_sweep(std::vector<SweepRow> rows);

} // namespace qlss
