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

#include "qlss/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qlss/linalg.hpp"

namespace qlss {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 13> kNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::S, "S"},
    {GateKind::T, "T"},
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::PHASE, "PHASE"},
    {GateKind::CX, "CX"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::UNITARY, "UNITARY"},
}};

const cplx I{0.0, 1.0};

Gate single(GateKind kind, int q, double angle = 0.0)
{
    Gate g;
    g.kind = kind;
    g.targets = {q};
    g.angle = angle;
    g.matrix = named_matrix(kind, angle);
    return g;
}

CMatrix matrix_power(const CMatrix& m, int p)
{
    CMatrix result = CMatrix::Identity(m.rows(), m.cols());
    CMatrix sq = m;
    while (p > 0) {
        if (p & 1) result = result * sq;
        p >>= 1;
        if (p) sq = sq * sq;
    }
    return result;
}

} // namespace

std::string_view to_string(GateKind kind)
{
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "UNITARY";
}

GateKind gate_kind_from_string(std::string_view label)
{
    for (const auto& [k, name] : kNames)
        if (name == label) return k;
    throw std::invalid_argument("unknown gate label '" + std::string(label) + "'");
}

bool is_rotation(GateKind kind)
{
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::PHASE;
}

bool Gate::is_diagonal(double tol) const
{
    for (Eigen::Index j = 0; j < matrix.cols(); ++j)
        for (Eigen::Index i = 0; i < matrix.rows(); ++i)
            if (i != j && std::abs(matrix(i, j)) > tol) return false;
    return true;
}

std::vector<int> Gate::qubits() const
{
    std::vector<int> q = targets;
    q.insert(q.end(), controls.begin(), controls.end());
    return q;
}

CMatrix rx_matrix(double a)
{
    CMatrix m(2, 2);
    m << std::cos(a / 2), -I * std::sin(a / 2), -I * std::sin(a / 2), std::cos(a / 2);
    return m;
}

CMatrix ry_matrix(double a)
{
    CMatrix m(2, 2);
    m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
    return m;
}

CMatrix rz_matrix(double a)
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -a / 2);
    m(1, 1) = std::polar(1.0, a / 2);
    return m;
}

CMatrix phase_matrix(double a)
{
    CMatrix m = CMatrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, a);
    return m;
}

CMatrix named_matrix(GateKind kind, double angle)
{
    CMatrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case GateKind::H: m << r, r, r, -r; return m;
    case GateKind::X:
    case GateKind::CX: m << 0, 1, 1, 0; return m;
    case GateKind::Y: m << 0, -I, I, 0; return m;
    case GateKind::Z: m << 1, 0, 0, -1; return m;
    case GateKind::S: return phase_matrix(kPi / 2);
    case GateKind::T: return phase_matrix(kPi / 4);
    case GateKind::RX: return rx_matrix(angle);
    case GateKind::RY: return ry_matrix(angle);
    case GateKind::RZ: return rz_matrix(angle);
    case GateKind::PHASE: return phase_matrix(angle);
    case GateKind::SWAP: {
        CMatrix sw = CMatrix::Zero(4, 4);
        sw(0, 0) = sw(3, 3) = sw(1, 2) = sw(2, 1) = 1.0;
        return sw;
    }
    case GateKind::UNITARY: break;
    }
    throw std::invalid_argument("named_matrix: UNITARY has no canonical matrix");
}

namespace gates {

Gate h(int q) { return single(GateKind::H, q); }
Gate x(int q) { return single(GateKind::X, q); }
Gate y(int q) { return single(GateKind::Y, q); }
Gate z(int q) { return single(GateKind::Z, q); }
Gate s(int q) { return single(GateKind::S, q); }
Gate t(int q) { return single(GateKind::T, q); }
Gate rx(int q, double a) { return single(GateKind::RX, q, a); }
Gate ry(int q, double a) { return single(GateKind::RY, q, a); }
Gate rz(int q, double a) { return single(GateKind::RZ, q, a); }
Gate phase(int q, double a) { return single(GateKind::PHASE, q, a); }

Gate cx(int control, int target)
{
    Gate g = single(GateKind::CX, target);
    g.controls = {control};
    return g;
}

Gate swap(int a, int b)
{
    Gate g;
    g.kind = GateKind::SWAP;
    g.targets = {a, b};
    g.matrix = named_matrix(GateKind::SWAP);
    return g;
}

Gate unitary(CMatrix m, std::vector<int> targets, std::vector<int> controls)
{
    Gate g;
    g.kind = GateKind::UNITARY;
    g.matrix = std::move(m);
    g.targets = std::move(targets);
    g.controls = std::move(controls);
    return g;
}

Gate unitary_power(const CMatrix& base, int repeat, std::vector<int> targets, std::vector<int> controls)
{
    if (repeat < 1) throw std::invalid_argument("unitary_power: repeat must be >= 1");
    Gate g = unitary(matrix_power(base, repeat), std::move(targets), std::move(controls));
    if (repeat > 1) {
        g.repeat = repeat;
        g.base = base;
    }
    return g;
}

Gate controlled(Gate g, std::vector<int> controls)
{
    if (g.kind == GateKind::X && g.controls.empty() && controls.size() == 1) g.kind = GateKind::CX;
    g.controls.insert(g.controls.end(), controls.begin(), controls.end());
    return g;
}

} // namespace gates

Gate adjoint(const Gate& g)
{
    Gate a = g;
    a.matrix = g.matrix.adjoint();
    if (g.repeat > 1) a.base = g.base.adjoint();
    switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::PHASE: a.angle = -g.angle; break;
    case GateKind::S:
        a.kind = GateKind::PHASE;
        a.angle = -kPi / 2;
        break;
    case GateKind::T:
        a.kind = GateKind::PHASE;
        a.angle = -kPi / 4;
        break;
    default: break;
    }
    return a;
}

void validate_gate(const Gate& g, int n_qubits)
{
    if (g.targets.empty()) throw std::invalid_argument("gate has no targets");
    std::vector<int> all = g.qubits();
    for (int q : all) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument("gate " + std::string(to_string(g.kind)) + " uses qubit " +
                                        std::to_string(q) + " outside [0, " + std::to_string(n_qubits) + ")");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("gate " + std::string(to_string(g.kind)) + " repeats a qubit");
    }
    const Eigen::Index dim = Eigen::Index{1} << g.targets.size();
    if (g.matrix.rows() != dim || g.matrix.cols() != dim) {
        throw std::invalid_argument("gate matrix is " + std::to_string(g.matrix.rows()) + "x" +
                                    std::to_string(g.matrix.cols()) + ", expected " + std::to_string(dim));
    }
    if (!is_unitary(g.matrix, 1e-10)) {
        throw std::invalid_argument("gate " + std::string(to_string(g.kind)) + " matrix is not unitary");
    }
}

} // namespace qlss
