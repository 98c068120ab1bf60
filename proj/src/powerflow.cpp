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

#include "qlss/powerflow.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qlss {

std::string_view to_string(BusKind kind)
{
    switch (kind) {
    case BusKind::Slack:
        return "slack";
    case BusKind::PV:
        return "PV";
    case BusKind::PQ:
        return "PQ";
    }
    return "?";
}

BusKind bus_kind_from_string(std::string_view s)
{
    if (s == "slack" || s == "SLACK" || s == "ref") return BusKind::Slack;
    if (s == "PV" || s == "pv") return BusKind::PV;
    if (s == "PQ" || s == "pq") return BusKind::PQ;
    throw std::invalid_argument("unknown bus kind '" + std::string(s) + "'");
}

PowerFlowCase PowerFlowCase::from_branches(std::vector<Bus> buses, const std::vector<Branch>& branches)
{
    PowerFlowCase pf;
    pf.buses = std::move(buses);
    const auto n = static_cast<Eigen::Index>(pf.buses.size());
    pf.y_bus = CMatrix::Zero(n, n);
    for (const Branch& br : branches) {
        const int f = pf.index_of(br.from);
        const int t = pf.index_of(br.to);
        if (f == t) throw std::invalid_argument("branch connects bus " + std::to_string(br.from) + " to itself");
        const cplx z{br.r, br.x};
        if (std::abs(z) == 0.0) throw std::invalid_argument("branch with zero impedance");
        const cplx y = 1.0 / z;
        const cplx shunt{0.0, br.b / 2.0};
        pf.y_bus(f, f) += y + shunt;
        pf.y_bus(t, t) += y + shunt;
        pf.y_bus(f, t) -= y;
        pf.y_bus(t, f) -= y;
    }
    pf.validate();
    return pf;
}

void PowerFlowCase::validate() const
{
    if (buses.empty()) throw std::invalid_argument("power-flow case has no buses");
    const auto n = static_cast<Eigen::Index>(buses.size());
    if (y_bus.rows() != n || y_bus.cols() != n) throw std::invalid_argument("y_bus dimension != bus count");
    int slack = 0;
    std::set<int> ids;
    for (const Bus& b : buses) {
        if (b.kind == BusKind::Slack) ++slack;
        if (!ids.insert(b.id).second) throw std::invalid_argument("duplicate bus id " + std::to_string(b.id));
        if (!(b.v_mag > 0.0)) throw std::invalid_argument("bus " + std::to_string(b.id) + " has non-positive |V|");
    }
    if (slack != 1) throw std::invalid_argument("power-flow case needs exactly one slack bus");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

int PowerFlowCase::index_of(int bus_id) const
{
    for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].id == bus_id) return static_cast<int>(i);
    throw std::invalid_argument("unknown bus id " + std::to_string(bus_id));
}

std::vector<int> PowerFlowCase::angle_buses() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].kind != BusKind::Slack) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> PowerFlowCase::magnitude_buses() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].kind == BusKind::PQ) out.push_back(static_cast<int>(i));
    return out;
}

int PowerFlowCase::n_unknowns() const
{
    return static_cast<int>(angle_buses().size() + magnitude_buses().size());
}

RVector PowerFlowCase::unknowns() const
{
    const auto ang = angle_buses();
    const auto mag = magnitude_buses();
    RVector x(static_cast<Eigen::Index>(ang.size() + mag.size()));
    Eigen::Index k = 0;
    for (int i : ang) x(k++) = buses[static_cast<std::size_t>(i)].theta;
    for (int i : mag) x(k++) = buses[static_cast<std::size_t>(i)].v_mag;
    return x;
}

void PowerFlowCase::set_unknowns(const RVector& x)
{
    const auto ang = angle_buses();
    const auto mag = magnitude_buses();
    if (x.size() != static_cast<Eigen::Index>(ang.size() + mag.size()))
        throw std::invalid_argument("set_unknowns: wrong length");
    Eigen::Index k = 0;
    for (int i : ang) buses[static_cast<std::size_t>(i)].theta = x(k++);
    for (int i : mag) buses[static_cast<std::size_t>(i)].v_mag = x(k++);
}

Injections power_injections(const PowerFlowCase& pf)
{
    const auto n = static_cast<Eigen::Index>(pf.buses.size());
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Bus& b = pf.buses[static_cast<std::size_t>(i)];
        v(i) = std::polar(b.v_mag, b.theta);
    }
    const CVector s = v.cwiseProduct((pf.y_bus * v).conjugate());
    return {s.real(), s.imag()};
}

RVector mismatch(const PowerFlowCase& pf)
{
    const Injections inj = power_injections(pf);
    const auto ang = pf.angle_buses();
    const auto mag = pf.magnitude_buses();
    RVector f(static_cast<Eigen::Index>(ang.size() + mag.size()));
    Eigen::Index k = 0;
    for (int i : ang) f(k++) = inj.p(i) - pf.buses[static_cast<std::size_t>(i)].p_spec;
    for (int i : mag) f(k++) = inj.q(i) - pf.buses[static_cast<std::size_t>(i)].q_spec;
    return f;
}

RMatrix jacobian_matrix(const PowerFlowCase& pf)
{
    const auto n = static_cast<int>(pf.buses.size());
    const Injections inj = power_injections(pf);
    const RMatrix g = pf.y_bus.real();
    const RMatrix bm = pf.y_bus.imag();
    auto vm = [&](int i) { return pf.buses[static_cast<std::size_t>(i)].v_mag; };
    auto th = [&](int i) { return pf.buses[static_cast<std::size_t>(i)].theta; };

    // Full-bus partials, then slice to the unknowns.
    RMatrix dp_dth(n, n), dp_dv(n, n), dq_dth(n, n), dq_dv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (i == k) {
                dp_dth(i, i) = -inj.q(i) - bm(i, i) * vm(i) * vm(i);
                dq_dth(i, i) = inj.p(i) - g(i, i) * vm(i) * vm(i);
                dp_dv(i, i) = inj.p(i) / vm(i) + g(i, i) * vm(i);
                dq_dv(i, i) = inj.q(i) / vm(i) - bm(i, i) * vm(i);
            } else {
                const double t = th(i) - th(k);
                const double gs_bc = g(i, k) * std::sin(t) - bm(i, k) * std::cos(t);
                const double gc_bs = g(i, k) * std::cos(t) + bm(i, k) * std::sin(t);
                dp_dth(i, k) = vm(i) * vm(k) * gs_bc;
                dq_dth(i, k) = -vm(i) * vm(k) * gc_bs;
                dp_dv(i, k) = vm(i) * gc_bs;
                dq_dv(i, k) = vm(i) * gs_bc;
            }
        }
    }

    const auto ang = pf.angle_buses();
    const auto mag = pf.magnitude_buses();
    const auto na = static_cast<Eigen::Index>(ang.size());
    const auto nm = static_cast<Eigen::Index>(mag.size());
    RMatrix j(na + nm, na + nm);
    for (Eigen::Index r = 0; r < na; ++r) {
        for (Eigen::Index c = 0; c < na; ++c) j(r, c) = dp_dth(ang[r], ang[c]);
        for (Eigen::Index c = 0; c < nm; ++c) j(r, na + c) = dp_dv(ang[r], mag[c]);
    }
    for (Eigen::Index r = 0; r < nm; ++r) {
        for (Eigen::Index c = 0; c < na; ++c) j(na + r, c) = dq_dth(mag[r], ang[c]);
        for (Eigen::Index c = 0; c < nm; ++c) j(na + r, na + c) = dq_dv(mag[r], mag[c]);
    }
    return j;
}

LinearSystem jacobian(const PowerFlowCase& pf)
{
    const RMatrix j = jacobian_matrix(pf);
    const RVector f = mismatch(pf);
    // Pad inside J's own scale so the padded block does not set the condition number.
    const double pad = j.diagonal().cwiseAbs().mean();
    return hermitize(j.cast<cplx>(), (-f).cast<cplx>(), pad > 0.0 ? pad : 1.0);
}

LinearSolveResult ClassicalSolver::solve(const LinearSystem& system) const
{
    LinearSolveResult r;
    r.condition_number = metrics(system.a).condition_number;
    r.x = (system.b_norm * system.extract(classical_solve(system))).real();
    return r;
}

LinearSolveResult HhlSolver::solve(const LinearSystem& system) const
{
    const HHLConfig config = auto_config(system, n_c_);
    const HHLSolution s = qlss::solve(system, config);
    LinearSolveResult r;
    r.condition_number = metrics(system.a).condition_number;
    r.x = s.recovered_vector.real();
    r.state_error = s.state_error;
    r.vector_error = s.vector_error;
    return r;
}

NRTrace nr_solve(PowerFlowCase pf, const LinearSolver& solver, int max_iter)
{
    if (max_iter < 1) throw std::invalid_argument("nr_solve: max_iter must be >= 1");
    pf.validate();
    NRTrace trace;
    auto record = [&](int it, const RVector& f, const LinearSolveResult* lin) {
        const double norm = f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
        if (!std::isfinite(norm)) throw DivergenceError("N-R: non-finite mismatch", trace);
        NRRecord rec;
        rec.iteration = it;
        rec.mismatch_inf_norm = norm;
        if (lin) {
            rec.state_error = lin->state_error;
            rec.vector_error = lin->vector_error;
            rec.linear_system_condition = lin->condition_number;
        }
        trace.records.push_back(rec);
        return norm;
    };

    RVector f = mismatch(pf);
    double norm = record(0, f, nullptr);
    for (int it = 1;; ++it) {
        if (norm < pf.tolerance) {
            trace.converged = true;
            break;
        }
        if (norm > kDivergenceLimit) {
            trace.final_case = pf;
            throw DivergenceError("N-R: mismatch norm " + std::to_string(norm) + " exceeds divergence limit", trace);
        }
        if (it > max_iter) break;

        LinearSolveResult lin;
        try {
            lin = solver.solve(jacobian(pf));
        } catch (const SingularMatrixError& e) {
            trace.final_case = pf;
            throw DivergenceError(std::string("N-R: singular Jacobian: ") + e.what(), trace, true);
        }
        pf.set_unknowns(pf.unknowns() + lin.x);
        trace.iterations_used = it;
        f = mismatch(pf);
        norm = record(it, f, &lin);
    }
    trace.final_case = pf;
    return trace;
}

} // namespace qlss
