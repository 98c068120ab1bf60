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

#include "qlss/linalg.hpp"

namespace qlss {

/// Implicit 2-D heat step on an l x l lattice: A T = F.
struct HeatSpec {
    int l = 3;
    double r = 0.00016;
    RVector forcing;

    /// Uniform positive forcing of unit norm.
    static HeatSpec uniform(int l, double r);
};

/// Unpadded l^2 x l^2 coefficient matrix: 1+4r on the diagonal, -r at |p-q| in {1, l}.
CMatrix heat_coefficients(int l, double r);

/// Coefficient matrix with normalized forcing, identity-padded to a power of two.
LinearSystem heat_matrix(const HeatSpec& spec);

} // namespace qlss
