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
#include <span>

#include "qlss/circuit.hpp"
#include "qlss/linalg.hpp"

namespace qlss {

struct HHLConfig {
    int n_c = 0;
    double t = 0.0;
    double c_const = 0.0;
    /// Two's-complement phase encoding for spectra with negative eigenvalues.
    bool signed_phases = false;
};

struct HHLSolution {
    int n_d = 0;
    HHLConfig config;
    CVector state_solution;
    double success_probability = 0.0;
    double norm_estimate = 0.0;
    CVector recovered_vector;
    double state_error = 0.0;
    double vector_error = 0.0;
    /// Post-selected weight that did not return to clock = 0.
    double clock_leakage = 0.0;
};

int select_clock_qubits(int n_d, double kappa, bool has_negative);

double select_evolution_time(double eig_max_abs, int n_c, bool signed_phases);

/// Smallest nonzero representable |lambda~| for the given clock size.
double default_inversion_constant(int n_c, double t);

/// Eigenvalue represented by clock value k.
double clock_eigenvalue(long long k, int n_c, double t, bool signed_phases);

HHLConfig auto_config(const LinearSystem& system, std::optional<int> n_c = std::nullopt);

/// Unsigned config that places lambda_ref exactly on clock value 2^{n_c-1}.
/// Suits spectra clustered around lambda_ref (kappa near 1).
HHLConfig centered_config(int n_c, double lambda_ref);

/// Prepares b (exactly, including phase) from |0...0> on qubits 0..log2(len)-1.
Circuit state_prep(const CVector& b);

/// QFT on the listed qubits (qubits[0] least significant), swaps included.
Circuit qft(int n_qubits, std::span<const int> qubits);
Circuit inverse_qft(int n_qubits, std::span<const int> qubits);

/// Phase estimation of u on data qubits 0..n_d-1 with clock qubits n_d..n_d+n_c-1.
/// Powers are formed by repeated squaring.
Circuit qpe(const CMatrix& u, int n_c);

/// Phase estimation of exp(iAt); each power is exponentiated directly from the spectrum.
Circuit qpe(const EigenDecomposition& eig, double t, int n_c);

std::vector<double> inversion_angles(int n_c, double t, double c_const, bool signed_phases);

/// Uniformly controlled RY on qubit `ancilla`, controlled by clock_qubits (LSB first).
Circuit eigen_inversion(int n_qubits, std::span<const int> clock_qubits, int ancilla, double t, double c_const,
                        bool signed_phases);

/// Layout: data 0..n_d-1, clock n_d..n_d+n_c-1, ancilla n_d+n_c.
Circuit build(const LinearSystem& system, const HHLConfig& config);

HHLSolution solve(const LinearSystem& system, const HHLConfig& config);

} // namespace qlss
