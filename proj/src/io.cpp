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

#include "qlss/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qlss::io {

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && lower(s.substr(s.size() - suffix.size())) == suffix;
}

cplx complex_from_json(const Json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ParseError("expected a number or an [re, im] pair, got " + j.dump());
}

Json complex_to_json(cplx z)
{
    return Json::array({z.real(), z.imag()});
}

template <typename T>
T require(const Json& j, const char* key)
{
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

template <typename T>
T optional_field(const Json& j, const char* key, T fallback)
{
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

Json optional_to_json(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

CMatrix read_matrix_market(std::istream& in)
{
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty Matrix Market input", 1);
    ++line_no;
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") throw ParseError("missing %%MatrixMarket banner", line_no);
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix") throw ParseError("unsupported object '" + object + "'", line_no);
    if (format != "coordinate") throw ParseError("unsupported format '" + format + "' (coordinate only)", line_no);
    const bool is_complex = field == "complex";
    if (!is_complex && field != "real" && field != "integer")
        throw ParseError("unsupported field '" + field + "'", line_no);
    if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian")
        throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);

    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        std::istringstream sz(t);
        if (!(sz >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0)
            throw ParseError("malformed size line '" + t + "'", line_no);
        std::string extra;
        if (sz >> extra) throw ParseError("trailing data on size line", line_no);
        break;
    }
    if (rows < 0) throw ParseError("missing size line", line_no);

    CMatrix a = CMatrix::Zero(rows, cols);
    long long seen = 0;
    while (seen < nnz && std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        std::istringstream es(t);
        long long i = 0, j = 0;
        double re = 0.0, im = 0.0;
        if (!(es >> i >> j >> re)) throw ParseError("malformed entry '" + t + "'", line_no);
        if (is_complex && !(es >> im)) throw ParseError("complex entry needs real and imaginary parts", line_no);
        std::string extra;
        if (es >> extra) throw ParseError("trailing data '" + extra + "' in entry", line_no);
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range", line_no);
        if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite entry", line_no);
        const cplx z{re, im};
        a(i - 1, j - 1) += z;
        if (i != j) {
            if (symmetry == "symmetric") a(j - 1, i - 1) += z;
            if (symmetry == "hermitian") a(j - 1, i - 1) += std::conj(z);
        }
        ++seen;
    }
    if (seen < nnz)
        throw ParseError("expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen), line_no);
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (!t.empty() && t[0] != '%') throw ParseError("unexpected data after last entry", line_no);
    }
    return a;
}

CMatrix read_matrix_market_file(const std::string& path)
{
    auto in = open_input(path);
    try {
        return read_matrix_market(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_matrix_market(std::ostream& out, const CMatrix& a)
{
    long long nnz = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != cplx{0.0, 0.0}) ++nnz;
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
    char buf[96];
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const cplx z = a(i, j);
            if (z == cplx{0.0, 0.0}) continue;
            std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g\n", static_cast<long long>(i + 1),
                          static_cast<long long>(j + 1), z.real(), z.imag());
            out << buf;
        }
    }
}

Json parse_json(std::istream& in)
{
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw ParseError(std::string("invalid JSON: ") + e.what(), line);
    }
}

Json read_json_file(const std::string& path)
{
    auto in = open_input(path);
    try {
        return parse_json(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

CVector read_vector_json(std::istream& in)
{
    const Json j = parse_json(in);
    if (!j.is_array() || j.empty()) throw ParseError("vector JSON must be a non-empty array");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

CVector read_vector_csv(std::istream& in)
{
    std::vector<cplx> vals;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::string cells[2];
        const auto comma = t.find(',');
        cells[0] = trim(t.substr(0, comma));
        cells[1] = comma == std::string::npos ? std::string{} : trim(t.substr(comma + 1));
        if (cells[1].find(',') != std::string::npos) throw ParseError("expected at most two columns", line_no);
        auto parse = [&](const std::string& s, double& out) {
            std::size_t used = 0;
            try {
                out = std::stod(s, &used);
            } catch (const std::exception&) {
                return false;
            }
            return used == s.size();
        };
        double re = 0.0, im = 0.0;
        if (!parse(cells[0], re) || (!cells[1].empty() && !parse(cells[1], im))) {
            if (vals.empty() && lower(cells[0]) == "re") continue; // header
            throw ParseError("malformed vector row '" + t + "'", line_no);
        }
        vals.emplace_back(re, im);
    }
    if (vals.empty()) throw ParseError("vector CSV has no rows", line_no);
    CVector v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
    return v;
}

CVector read_vector_file(const std::string& path)
{
    auto in = open_input(path);
    try {
        if (ends_with(path, ".json")) return read_vector_json(in);
        if (ends_with(path, ".csv")) return read_vector_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    throw ParseError(path + ": vector files must end in .json or .csv");
}

Json vector_to_json(const CVector& v)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(complex_to_json(v(i)));
    return j;
}

Json matrix_to_json(const CMatrix& m)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

CMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("ragged matrix rows");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json circuit_to_json(const Circuit& c)
{
    Json gates_json = Json::array();
    for (const Gate& g : c.gates) {
        Json gj;
        gj["label"] = std::string(to_string(g.kind));
        gj["targets"] = g.targets;
        gj["controls"] = g.controls;
        if (is_rotation(g.kind)) gj["params"] = Json::array({g.angle});
        if (g.kind == GateKind::UNITARY) gj["matrix"] = matrix_to_json(g.matrix);
        if (g.repeat > 1) {
            gj["repeat"] = g.repeat;
            gj["base"] = matrix_to_json(g.base);
        }
        gates_json.push_back(std::move(gj));
    }
    Json j;
    j["n_qubits"] = c.n_qubits;
    j["global_phase"] = c.global_phase;
    j["gates"] = std::move(gates_json);
    return j;
}

Circuit circuit_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("circuit JSON must be an object");
    Circuit c(require<int>(j, "n_qubits"));
    c.global_phase = optional_field<double>(j, "global_phase", 0.0);
    if (!j.contains("gates") || !j["gates"].is_array()) throw ParseError("circuit needs a 'gates' array");
    std::size_t idx = 0;
    for (const Json& gj : j["gates"]) {
        try {
            Gate g;
            g.kind = gate_kind_from_string(require<std::string>(gj, "label"));
            g.targets = require<std::vector<int>>(gj, "targets");
            g.controls = optional_field<std::vector<int>>(gj, "controls", {});
            if (is_rotation(g.kind)) {
                if (gj.contains("params")) {
                    const auto p = gj["params"].get<std::vector<double>>();
                    if (p.size() != 1) throw ParseError("rotation needs exactly one parameter");
                    g.angle = p[0];
                } else {
                    g.angle = require<double>(gj, "angle");
                }
            }
            if (g.kind == GateKind::UNITARY) {
                if (!gj.contains("matrix")) throw ParseError("UNITARY gate needs a 'matrix'");
                g.matrix = matrix_from_json(gj["matrix"]);
            } else {
                g.matrix = named_matrix(g.kind, g.angle);
            }
            g.repeat = optional_field<int>(gj, "repeat", 1);
            if (g.repeat > 1) {
                if (!gj.contains("base")) throw ParseError("repeated gate needs a 'base' matrix");
                g.base = matrix_from_json(gj["base"]);
            }
            validate_gate(g, c.n_qubits);
            c.add(std::move(g));
        } catch (const ParseError& e) {
            throw ParseError("gate " + std::to_string(idx) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError("gate " + std::to_string(idx) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("gate " + std::to_string(idx) + ": " + e.what());
        }
        ++idx;
    }
    return c;
}

Json case_to_json(const PowerFlowCase& pf)
{
    Json buses = Json::array();
    for (const Bus& b : pf.buses) {
        Json bj;
        bj["id"] = b.id;
        bj["type"] = std::string(to_string(b.kind));
        bj["p"] = b.p_spec;
        bj["q"] = b.q_spec;
        bj["v"] = b.v_mag;
        bj["theta"] = b.theta;
        buses.push_back(std::move(bj));
    }
    Json j;
    j["tolerance"] = pf.tolerance;
    j["buses"] = std::move(buses);
    j["y_bus"] = matrix_to_json(pf.y_bus);
    return j;
}

PowerFlowCase case_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("case JSON must be an object");
    if (!j.contains("buses") || !j["buses"].is_array()) throw ParseError("case needs a 'buses' array");
    std::vector<Bus> buses;
    for (const Json& bj : j["buses"]) {
        Bus b;
        b.id = require<int>(bj, "id");
        try {
            b.kind = bus_kind_from_string(require<std::string>(bj, "type"));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        b.p_spec = optional_field<double>(bj, "p", 0.0);
        b.q_spec = optional_field<double>(bj, "q", 0.0);
        b.v_mag = optional_field<double>(bj, "v", 1.0);
        b.theta = optional_field<double>(bj, "theta", 0.0);
        buses.push_back(b);
    }
    try {
        PowerFlowCase pf;
        if (j.contains("branches")) {
            std::vector<Branch> branches;
            for (const Json& brj : j["branches"]) {
                Branch br;
                br.from = require<int>(brj, "from");
                br.to = require<int>(brj, "to");
                br.r = require<double>(brj, "r");
                br.x = require<double>(brj, "x");
                br.b = optional_field<double>(brj, "b", 0.0);
                branches.push_back(br);
            }
            pf = PowerFlowCase::from_branches(std::move(buses), branches);
        } else if (j.contains("y_bus")) {
            pf.buses = std::move(buses);
            pf.y_bus = matrix_from_json(j["y_bus"]);
        } else {
            throw ParseError("case needs 'branches' or 'y_bus'");
        }
        pf.tolerance = optional_field<double>(j, "tolerance", 1e-8);
        pf.validate();
        return pf;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid case: ") + e.what());
    }
}

Json voltages_to_json(const PowerFlowCase& pf)
{
    Json buses = Json::array();
    for (const Bus& b : pf.buses) {
        Json bj;
        bj["id"] = b.id;
        bj["type"] = std::string(to_string(b.kind));
        bj["v"] = b.v_mag;
        bj["theta"] = b.theta;
        buses.push_back(std::move(bj));
    }
    Json j;
    j["buses"] = std::move(buses);
    return j;
}

Json solution_to_json(const HHLSolution& s)
{
    Json j;
    j["n_d"] = s.n_d;
    j["n_c"] = s.config.n_c;
    j["t"] = s.config.t;
    j["c_const"] = s.config.c_const;
    j["signed"] = s.config.signed_phases;
    j["success_probability"] = s.success_probability;
    j["norm_estimate"] = s.norm_estimate;
    j["state_error"] = s.state_error;
    j["vector_error"] = s.vector_error;
    j["clock_leakage"] = s.clock_leakage;
    j["recovered_vector"] = vector_to_json(s.recovered_vector);
    return j;
}

Json report_to_json(const ResourceReport& r, const EstimatorInputs& inputs)
{
    const TFactorySpec f = inputs.factory_or_default();
    Json j;
    j["qubit_params"] = inputs.qubits.name.empty() ? Json("custom") : Json(inputs.qubits.name);
    j["error_budget"] = inputs.budget.total;
    j["logical_qubits_pre_layout"] = r.n_alg;
    j["logical_qubits_after_layout"] = r.n_after;
    j["physical_qubits_algorithm"] = r.phys_alg;
    j["physical_qubits_t_factories"] = r.phys_factories;
    j["physical_qubits_total"] = r.phys_total;
    j["t_states"] = r.t_states;
    j["t_factories"] = r.t_factories;
    j["logical_depth"] = r.counts.logical_depth;
    j["logical_cycles"] = r.logical_cycles;
    j["logical_cycle_time_s"] = r.cycle_time;
    j["runtime_s"] = r.runtime;
    j["min_logical_error_rate"] = r.min_logical_error_rate;
    j["min_t_state_error_rate"] = optional_to_json(r.min_tstate_error_rate);
    j["logical_error_rate_feasible"] = r.logical_rate_feasible;
    j["t_state_error_rate_feasible"] = r.tstate_rate_feasible;
    Json counts;
    counts["t_gates"] = r.counts.t_gates;
    counts["ccz_ccix"] = r.counts.ccz_ccix;
    counts["rotations"] = r.counts.rotations;
    counts["clifford"] = r.counts.clifford;
    j["gate_counts"] = std::move(counts);
    Json qec;
    qec["distance"] = inputs.qec.distance;
    qec["physical_per_logical"] = inputs.qec.phys_per_logical;
    qec["logical_error_rate"] = inputs.qec.logical_error_rate;
    qec["threshold"] = inputs.qec.threshold;
    j["qec"] = std::move(qec);
    Json fj;
    fj["duration_s"] = f.duration;
    fj["physical_qubits"] = f.phys_qubits;
    fj["states_per_batch"] = f.states_per_batch;
    fj["output_error"] = f.output_error;
    j["t_factory"] = std::move(fj);
    return j;
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep)
{
    out << "n_c,runtime_s,logical_cycles,t_states,t_factories,phys_alg,phys_factories,phys_total,min_logical_rate,"
           "min_tstate_rate\n";
    for (const SweepRow& row : sweep.rows) {
        const ResourceReport& r = row.report;
        out << row.n_c << ',' << format_double(r.runtime) << ',' << r.logical_cycles << ',' << r.t_states << ','
            << r.t_factories << ',' << r.phys_alg << ',' << r.phys_factories << ',' << r.phys_total << ','
            << format_double(r.min_logical_error_rate) << ','
            << (r.min_tstate_error_rate ? format_double(*r.min_tstate_error_rate) : std::string{}) << '\n';
    }
}

void write_trace_csv(std::ostream& out, const NRTrace& trace)
{
    out << "iteration,mismatch_inf_norm,state_error,vector_error,condition_number\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; };
    for (const NRRecord& r : trace.records) {
        out << r.iteration << ',' << format_double(r.mismatch_inf_norm) << ',' << opt(r.state_error) << ','
            << opt(r.vector_error) << ',' << opt(r.linear_system_condition) << '\n';
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace qlss::io
