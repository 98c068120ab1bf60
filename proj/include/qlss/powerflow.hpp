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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlss/hhl.hpp"
#include "qlss/linalg.hpp"

namespace qlss {

enum class BusKind { Slack, PV, PQ };

std::string_view to_string(BusKind kind);
BusKind bus_kind_from_string(std::string_view s);

struct Bus {
    int id = 0;
    BusKind kind = BusKind::PQ;
    double p_spec = 0.0; // per unit, generation minus load
    double q_spec = 0.0;
    double v_mag = 1.0;
    double theta = 0.0; // radians
};

struct Branch {
    int from = 0; // bus ids
    int to = 0;
    double r = 0.0;
    double x = 0.0;
    double b = 0.0; // total line charging
};

struct PowerFlowCase {
    std::vector<Bus> buses;
    CMatrix y_bus;
    double tolerance = 1e-8;

    /// Pi-model admittance assembly.
    static PowerFlowCase from_branches(std::vector<Bus> buses, const std::vector<Branch>& branches);

    void validate() const;
    int index_of(int bus_id) const;

    /// Bus indices whose angle is unknown (PV and PQ), then whose magnitude is unknown (PQ).
    std::vector<int> angle_buses() const;
    std::vector<int> magnitude_buses() const;
    int n_unknowns() const;

    RVector unknowns() const;
    void set_unknowns(const RVector& x);
};

struct Injections {
    RVector p;
    RVector q;
};

/// S_k = V_k conj(sum_j Y_kj V_j).
Injections power_injections(const PowerFlowCase& pf);

/// [P - P_spec over angle buses; Q - Q_spec over magnitude buses].
RVector mismatch(const PowerFlowCase& pf);

/// Analytic d(mismatch)/d(unknowns), polar coordinates.
RMatrix jacobian_matrix(const PowerFlowCase& pf);

/// J dx = -mismatch, padded with mean |diag J| and hermitized.
LinearSystem jacobian(const PowerFlowCase& pf);

struct LinearSolveResult {
    RVector x; // in original (unpadded) coordinates
    std::optional<double> state_error;
    std::optional<double> vector_error;
    double condition_number = 0.0;
};

class LinearSolver {
public:
    virtual ~LinearSolver() = default;
    virtual LinearSolveResult solve(const LinearSystem& system) const = 0;
    virtual std::string name() const = 0;
};

class ClassicalSolver final : public LinearSolver {
public:
    LinearSolveResult solve(const LinearSystem& system) const override;
    std::string name() const override { return "classical"; }
};

class HhlSolver final : public LinearSolver {
public:
    explicit HhlSolver(std::optional<int> n_c = std::nullopt) : n_c_(n_c) {}
    LinearSolveResult solve(const LinearSystem& system) const override;
    std::string name() const override { return "hhl"; }

private:
    std::optional<int> n_c_;
};

struct NRRecord {
    int iteration = 0;
    double mismatch_inf_norm = 0.0;
    /// Errors of the linear solve that produced this iterate; empty at iteration 0.
    std::optional<double> state_error;
    std::optional<double> vector_error;
    std::optional<double> linear_system_condition;
};

struct NRTrace {
    std::vector<NRRecord> records;
    bool converged = false;
    int iterations_used = 0;
    PowerFlowCase final_case;
};

class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, NRTrace trace, bool singular = false)
        : Error(what), trace_(std::move(trace)), singular_(singular)
    {
    }
    const NRTrace& trace() const { return trace_; }
    bool singular() const { return singular_; }

private:
    NRTrace trace_;
    bool singular_;
};

inline constexpr double kDivergenceLimit = 1e6;

NRTrace nr_solve(PowerFlowCase pf, const LinearSolver& solver, int max_iter = 20);

} // namespace qlss
