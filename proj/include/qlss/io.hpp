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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qlss/circuit.hpp"
#include "qlss/hhl.hpp"
#include "qlss/powerflow.hpp"
#include "qlss/resources.hpp"

namespace qlss::io {

using Json = nlohmann::ordered_json;

/// Coordinate format; real/integer/complex fields, general/symmetric/hermitian symmetry.
CMatrix read_matrix_market(std::istream& in);
CMatrix read_matrix_market_file(const std::string& path);
/// Writes complex general coordinate format, skipping exact zeros.
void write_matrix_market(std::ostream& out, const CMatrix& a);

/// JSON array of [re, im] pairs (bare numbers are read as real).
CVector read_vector_json(std::istream& in);
/// One value per row: "re,im" or "re"; an optional header row is skipped.
CVector read_vector_csv(std::istream& in);
/// Dispatches on the .json / .csv extension.
CVector read_vector_file(const std::string& path);

Json parse_json(std::istream& in);
Json read_json_file(const std::string& path);

Json vector_to_json(const CVector& v);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json case_to_json(const PowerFlowCase& pf);
PowerFlowCase case_from_json(const Json& j);
Json voltages_to_json(const PowerFlowCase& pf);

Json solution_to_json(const HHLSolution& s);
Json report_to_json(const ResourceReport& r, const EstimatorInputs& inputs);

/// Fixed-precision text for CSV cells.
std::string format_double(double v);

void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
void write_trace_csv(std::ostream& out, const NRTrace& trace);

void write_text_file(const std::string& path, const std::string& text);

} // namespace qlss::io
