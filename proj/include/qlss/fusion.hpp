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

#include "qlss/circuit.hpp"

namespace qlss {

/// Gate fusion. Single-qubit gates on the same qubit with nothing in between on
/// that qubit merge into one gate; a pending diagonal single-qubit gate floats
/// past gates that act diagonally on its qubit (controls, diagonal multi-qubit
/// gates) so it can merge with the next diagonal on that qubit. Merged products
/// proportional to the identity are dropped and their phase moves into the
/// circuit's global phase, so run(fuse(c)) == run(c) exactly.
Circuit fuse(const Circuit& circuit);

} // namespace qlss
