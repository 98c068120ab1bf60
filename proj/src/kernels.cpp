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

#include "qlss/kernels.hpp"

#include <algorithm>
#include <vector>

namespace qlss::kernels {

namespace {

using Index = long long;

struct Layout {
    Index target_mask = 0;
    Index control_mask = 0;
    std::vector<int> fixed;       // sorted positions of targets and controls
    std::vector<Index> offsets;   // offset of local basis state m
};

Layout make_layout(const Gate& g)
{
    Layout l;
    for (int q : g.targets) l.target_mask |= Index{1} << q;
    for (int q : g.controls) l.control_mask |= Index{1} << q;
    l.fixed = g.qubits();
    std::sort(l.fixed.begin(), l.fixed.end());
    const Index dim = Index{1} << g.targets.size();
    l.offsets.resize(static_cast<std::size_t>(dim));
    for (Index m = 0; m < dim; ++m) {
        Index off = 0;
        for (std::size_t i = 0; i < g.targets.size(); ++i)
            if (m >> i & 1) off |= Index{1} << g.targets[i];
        l.offsets[static_cast<std::size_t>(m)] = off;
    }
    return l;
}

inline Index insert_zeros(Index g, const std::vector<int>& sorted_positions)
{
    for (int pos : sorted_positions) {
        const Index low = g & ((Index{1} << pos) - 1);
        g = ((g >> pos) << (pos + 1)) | low;
    }
    return g;
}

} // namespace

void apply_reference(std::span<cplx> amps, int n_qubits, const Gate& g)
{
    const Layout l = make_layout(g);
    const Index n = Index{1} << n_qubits;
    const auto dim = static_cast<Index>(l.offsets.size());
    std::vector<cplx> in(static_cast<std::size_t>(dim));
    for (Index i = 0; i < n; ++i) {
        if ((i & l.target_mask) != 0) continue;
        if ((i & l.control_mask) != l.control_mask) continue;
        for (Index m = 0; m < dim; ++m) in[m] = amps[i | l.offsets[m]];
        for (Index r = 0; r < dim; ++r) {
            cplx acc = 0.0;
            for (Index c = 0; c < dim; ++c) acc += g.matrix(r, c) * in[c];
            amps[i | l.offsets[r]] = acc;
        }
    }
}

void apply(std::span<cplx> amps, int n_qubits, const Gate& g)
{
    const Layout l = make_layout(g);
    const Index groups = Index{1} << (n_qubits - static_cast<int>(l.fixed.size()));
    const bool parallel = groups >= kParallelThreshold;
    cplx* a = amps.data();

    if (g.targets.size() == 1) {
        const Index stride = Index{1} << g.targets[0];
        const cplx m00 = g.matrix(0, 0), m01 = g.matrix(0, 1);
        const cplx m10 = g.matrix(1, 0), m11 = g.matrix(1, 1);
        if (g.is_diagonal(0.0)) {
#pragma omp parallel for schedule(static) if (parallel)
            for (Index grp = 0; grp < groups; ++grp) {
                const Index i0 = insert_zeros(grp, l.fixed) | l.control_mask;
                a[i0] *= m00;
                a[i0 | stride] *= m11;
            }
            return;
        }
#pragma omp parallel for schedule(static) if (parallel)
        for (Index grp = 0; grp < groups; ++grp) {
            const Index i0 = insert_zeros(grp, l.fixed) | l.control_mask;
            const Index i1 = i0 | stride;
            const cplx x0 = a[i0], x1 = a[i1];
            a[i0] = m00 * x0 + m01 * x1;
            a[i1] = m10 * x0 + m11 * x1;
        }
        return;
    }

    const auto dim = static_cast<Index>(l.offsets.size());
    if (g.is_diagonal(0.0)) {
        std::vector<cplx> d(static_cast<std::size_t>(dim));
        for (Index m = 0; m < dim; ++m) d[m] = g.matrix(m, m);
#pragma omp parallel for schedule(static) if (parallel)
        for (Index grp = 0; grp < groups; ++grp) {
            const Index base = insert_zeros(grp, l.fixed) | l.control_mask;
            for (Index m = 0; m < dim; ++m) a[base | l.offsets[m]] *= d[m];
        }
        return;
    }

    // Row-major copy so the inner product walks contiguous memory.
    std::vector<cplx> mat(static_cast<std::size_t>(dim * dim));
    for (Index r = 0; r < dim; ++r)
        for (Index c = 0; c < dim; ++c) mat[r * dim + c] = g.matrix(r, c);

#pragma omp parallel if (parallel)
    {
        std::vector<cplx> in(static_cast<std::size_t>(dim));
#pragma omp for schedule(static)
        for (Index grp = 0; grp < groups; ++grp) {
            const Index base = insert_zeros(grp, l.fixed) | l.control_mask;
            for (Index m = 0; m < dim; ++m) in[m] = a[base | l.offsets[m]];
            for (Index r = 0; r < dim; ++r) {
                const cplx* row = &mat[r * dim];
                cplx acc = 0.0;
                for (Index c = 0; c < dim; ++c) acc += row[c] * in[c];
                a[base | l.offsets[r]] = acc;
            }
        }
    }
}

} // namespace qlss::kernels
