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

#include "qlss/types.hpp"

namespace qlss {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNonzeroTol = 1e-14;

/// A linear system A x = b prepared for a quantum linear solver.
///
/// `b` is always normalized; `b_norm` keeps the norm of the caller's original
/// right-hand side so the un-normalized solution can be reconstructed. When the
/// system was hermitized the solution of the original problem lives in the lower
/// half of the doubled vector, starting at `solution_offset`.
struct LinearSystem {
    CMatrix a;
    CVector b;
    int original_dim = 0;
    bool hermitized = false;
    int padded_dim = 0;
    double b_norm = 0.0;
    int solution_offset = 0;

    int dim() const { return static_cast<int>(a.rows()); }

    /// Maps a vector in processed coordinates back to the original unknowns.
    CVector extract(const CVector& processed) const;
};

struct EigenDecomposition {
    RVector values;  // ascending
    CMatrix vectors; // columns are orthonormal eigenvectors
};

struct MatrixMetrics {
    double condition_number = 0.0;
    double sparsity = 0.0;
    double eig_min_abs = 0.0;
    double eig_max_abs = 0.0;
    bool has_negative = false;
};

bool is_hermitian(const CMatrix& a, double tol = kHermitianTol);
bool is_unitary(const CMatrix& u, double tol = 1e-10);

/// Validates and normalizes without changing dimensions.
LinearSystem make_system(const CMatrix& a, const CVector& b);

/// Embeds the matrix in the top-left corner of the next power-of-two size.
/// New diagonal entries are `pad_value`, everything else in the padding is zero,
/// and the right-hand side is zero-padded. Idempotent on power-of-two systems.
LinearSystem pad_to_pow2(const LinearSystem& system, double pad_value = 1.0);

/// Builds a Hermitian system from (A, b). Hermitian input is only padded.
/// Non-Hermitian input is padded first and then doubled to [[0, A], [A^dagger, 0]]
/// with right-hand side [b; 0]; the solution is read from the lower half.
LinearSystem hermitize(const CMatrix& a, const CVector& b, double pad_value = 1.0);

EigenDecomposition eig_hermitian(const CMatrix& a);

/// e^{i t A} for Hermitian A.
CMatrix unitary_exp(const CMatrix& a, double t);
CMatrix unitary_exp(const EigenDecomposition& eig, double t);

/// Fraction of entries whose magnitude is at most kNonzeroTol.
double sparsity(const CMatrix& a);

/// Condition number and spectrum extremes of a Hermitian matrix.
/// Throws SingularMatrixError when |lambda|_min < 1e-14 |lambda|_max.
MatrixMetrics metrics(const CMatrix& a);

/// Dense LU solve of the processed system (normalized b). Returns x in processed
/// coordinates with ||A x - b|| <= 1e-10 ||b||.
CVector classical_solve(const LinearSystem& system);

/// Dense LU solve with singularity detection.
CVector solve_dense(const CMatrix& a, const CVector& b);

} // namespace qlss
