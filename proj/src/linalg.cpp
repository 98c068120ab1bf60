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

#include "qlss/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace qlss {

namespace {

void require_square(const CMatrix& a)
{
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw std::invalid_argument("matrix must be square and non-empty, got " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()));
    }
    if (!a.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

int next_pow2(int n)
{
    int p = 2;
    while (p < n) p *= 2;
    return p;
}

} // namespace

CVector LinearSystem::extract(const CVector& processed) const
{
    if (processed.size() != dim()) {
        throw std::invalid_argument("extract: vector length " + std::to_string(processed.size()) +
                                    " does not match system dimension " + std::to_string(dim()));
    }
    return processed.segment(solution_offset, original_dim);
}

bool is_hermitian(const CMatrix& a, double tol)
{
    if (a.rows() != a.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
        }
    }
    return true;
}

bool is_unitary(const CMatrix& u, double tol)
{
    if (u.rows() != u.cols()) return false;
    const CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

LinearSystem make_system(const CMatrix& a, const CVector& b)
{
    require_square(a);
    if (b.size() != a.rows()) {
        throw std::invalid_argument("rhs length " + std::to_string(b.size()) + " does not match matrix dimension " +
                                    std::to_string(a.rows()));
    }
    const double norm = b.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("rhs must be finite and non-zero");

    LinearSystem s;
    s.a = a;
    s.b = b / norm;
    s.original_dim = static_cast<int>(a.rows());
    s.padded_dim = static_cast<int>(a.rows());
    s.b_norm = norm;
    return s;
}

LinearSystem pad_to_pow2(const LinearSystem& system, double pad_value)
{
    const int n = system.dim();
    const int p = next_pow2(n);
    if (p == n) {
        LinearSystem out = system;
        out.padded_dim = n;
        return out;
    }
    LinearSystem out = system;
    out.a = CMatrix::Zero(p, p);
    out.a.topLeftCorner(n, n) = system.a;
    for (int i = n; i < p; ++i) out.a(i, i) = pad_value;
    out.b = CVector::Zero(p);
    out.b.head(n) = system.b;
    out.padded_dim = p;
    return out;
}

LinearSystem hermitize(const CMatrix& a, const CVector& b, double pad_value)
{
    LinearSystem base = make_system(a, b);
    if (is_hermitian(a)) return pad_to_pow2(base, pad_value);

    const LinearSystem padded = pad_to_pow2(base, pad_value);
    const int m = padded.dim();
    LinearSystem out = padded;
    out.a = CMatrix::Zero(2 * m, 2 * m);
    out.a.topRightCorner(m, m) = padded.a;
    out.a.bottomLeftCorner(m, m) = padded.a.adjoint();
    out.b = CVector::Zero(2 * m);
    out.b.head(m) = padded.b;
    out.hermitized = true;
    out.padded_dim = 2 * m;
    out.solution_offset = m;
    return out;
}

EigenDecomposition eig_hermitian(const CMatrix& a)
{
    require_square(a);
    if (!is_hermitian(a)) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    // Symmetrize so round-off in the input does not leak into the solver.
    const CMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw Error("eig_hermitian: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix unitary_exp(const EigenDecomposition& eig, double t)
{
    CVector phases(eig.values.size());
    for (Eigen::Index j = 0; j < eig.values.size(); ++j) phases(j) = std::polar(1.0, t * eig.values(j));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

CMatrix unitary_exp(const CMatrix& a, double t) { return unitary_exp(eig_hermitian(a), t); }

double sparsity(const CMatrix& a)
{
    const auto total = static_cast<double>(a.size());
    if (total == 0) return 0.0;
    Eigen::Index nnz = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (std::abs(a(i, j)) > kNonzeroTol) ++nnz;
    return 1.0 - static_cast<double>(nnz) / total;
}

MatrixMetrics metrics(const CMatrix& a)
{
    const EigenDecomposition eig = eig_hermitian(a);
    MatrixMetrics m;
    m.eig_min_abs = eig.values.cwiseAbs().minCoeff();
    m.eig_max_abs = eig.values.cwiseAbs().maxCoeff();
    m.has_negative = eig.values.minCoeff() < 0.0;
    m.sparsity = sparsity(a);
    if (m.eig_max_abs == 0.0 || m.eig_min_abs < 1e-14 * m.eig_max_abs) {
        throw SingularMatrixError("matrix is singular (|lambda|_min = " + std::to_string(m.eig_min_abs) + ")");
    }
    m.condition_number = m.eig_max_abs / m.eig_min_abs;
    return m;
}

CVector solve_dense(const CMatrix& a, const CVector& b)
{
    require_square(a);
    if (b.size() != a.rows()) throw std::invalid_argument("solve_dense: dimension mismatch");
    Eigen::FullPivLU<CMatrix> lu(a);
    const double scale = a.cwiseAbs().maxCoeff();
    lu.setThreshold(1e-14);
    if (scale == 0.0 || !lu.isInvertible()) throw SingularMatrixError("matrix is singular");
    CVector x = lu.solve(b);
    // One refinement step keeps the residual at the 1e-10 level for moderately conditioned inputs.
    x += lu.solve(b - a * x);
    return x;
}

CVector classical_solve(const LinearSystem& system) { return solve_dense(system.a, system.b); }

} // namespace qlss
