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

// Serial reference kernel against the OpenMP kernel on the same gates.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qlss/gate.hpp"
#include "qlss/kernels.hpp"
#include "qlss/state.hpp"

namespace {

using namespace qlss;

std::vector<cplx> random_amplitudes(int n)
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> d;
    std::vector<cplx> v(std::size_t{1} << n);
    for (auto& a : v) a = {d(rng), d(rng)};
    return v;
}

Gate dense_two_qubit(int n)
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> d;
    CMatrix m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = {d(rng), d(rng)};
    Eigen::HouseholderQR<CMatrix> qr(m);
    return gates::unitary(qr.householderQ(), {0, n - 1}, {n / 2});
}

template <typename Fn>
void run_gate(benchmark::State& st, const Gate& g, Fn kernel)
{
    const int n = static_cast<int>(st.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : st) {
        kernel(std::span<cplx>(amps), n, g);
        benchmark::DoNotOptimize(amps.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long long>(amps.size()));
}

void BM_H_Reference(benchmark::State& st) { run_gate(st, gates::h(1), kernels::apply_reference); }
void BM_H_Parallel(benchmark::State& st) { run_gate(st, gates::h(1), kernels::apply); }
void BM_CX_Reference(benchmark::State& st) { run_gate(st, gates::cx(0, 3), kernels::apply_reference); }
void BM_CX_Parallel(benchmark::State& st) { run_gate(st, gates::cx(0, 3), kernels::apply); }
void BM_RZ_Reference(benchmark::State& st) { run_gate(st, gates::rz(2, 0.3), kernels::apply_reference); }
void BM_RZ_Parallel(benchmark::State& st) { run_gate(st, gates::rz(2, 0.3), kernels::apply); }

void BM_Dense2Q_Reference(benchmark::State& st)
{
    run_gate(st, dense_two_qubit(static_cast<int>(st.range(0))), kernels::apply_reference);
}
void BM_Dense2Q_Parallel(benchmark::State& st)
{
    run_gate(st, dense_two_qubit(static_cast<int>(st.range(0))), kernels::apply);
}

} // namespace

BENCHMARK(BM_H_Reference)->DenseRange(12, 22, 5);
BENCHMARK(BM_H_Parallel)->DenseRange(12, 22, 5);
BENCHMARK(BM_CX_Reference)->DenseRange(12, 22, 5);
BENCHMARK(BM_CX_Parallel)->DenseRange(12, 22, 5);
BENCHMARK(BM_RZ_Reference)->DenseRange(12, 22, 5);
BENCHMARK(BM_RZ_Parallel)->DenseRange(12, 22, 5);
BENCHMARK(BM_Dense2Q_Reference)->DenseRange(12, 22, 5);
BENCHMARK(BM_Dense2Q_Parallel)->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
