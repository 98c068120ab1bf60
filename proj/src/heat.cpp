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

#include "qlss/heat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlss {

HeatSpec HeatSpec::uniform(int l, double r)
{
    if (l < 2) throw std::invalid_argument("heat: l must be >= 2");
    HeatSpec s;
    s.l = l;
    s.r = r;
    s.forcing = RVector::Constant(l * l, 1.0 / static_cast<double>(l));
    return s;
}

CMatrix heat_coefficients(int l, double r)
{
    if (l < 2) throw std::invalid_argument("heat: l must be >= 2, got " + std::to_string(l));
    if (!(r > 0.0)) throw std::invalid_argument("heat: r must be positive");
    const int n = l * l;
    CMatrix a = CMatrix::Zero(n, n);
    for (int p = 0; p < n; ++p) {
        a(p, p) = 1.0 + 4.0 * r;
        for (int q = 0; q < n; ++q) {
            const int d = std::abs(p - q);
            if (d == 1 || d == l) a(p, q) = -r;
        }
    }
    return a;
}

LinearSystem heat_matrix(const HeatSpec& spec)
{
    const CMatrix a = heat_coefficients(spec.l, spec.r);
    if (spec.forcing.size() != a.rows()) {
        throw std::invalid_argument("heat: forcing length " + std::to_string(spec.forcing.size()) + " != l^2 = " +
                                    std::to_string(a.rows()));
    }
    return pad_to_pow2(make_system(a, spec.forcing.cast<cplx>()));
}

} // namespace qlss
