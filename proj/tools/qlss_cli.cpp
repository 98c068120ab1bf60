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

// Command-line driver: HHL solves, heat and power-flow experiments, resource estimates.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlss/fusion.hpp"
#include "qlss/heat.hpp"
#include "qlss/hhl.hpp"
#include "qlss/io.hpp"
#include "qlss/powerflow.hpp"
#include "qlss/resources.hpp"
#include "qlss/state.hpp"
#include "qlss/synthesis.hpp"

namespace {

using namespace qlss;
using io::Json;

enum Exit : int {
    kOk = 0,
    kParse = 1,
    kIncompatible = 2,
    kZeroProbability = 3,
    kDivergence = 4,
    kUndecomposable = 5,
};

struct Globals {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string config;
};

/// "a..b", "a,b,c" or "a".
std::vector<int> parse_range(const std::string& text)
{
    std::vector<int> out;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw ParseError("malformed range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int a = to_int(text.substr(0, dots));
        const int b = to_int(text.substr(dots + 2));
        if (b < a) throw ParseError("empty range '" + text + "'");
        for (int v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    if (out.empty()) throw ParseError("empty range");
    return out;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text_file(path, text);
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

/// Inserts "_nc<k>" before the extension.
std::string with_suffix(const std::string& path, int n_c)
{
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    const std::string tag = "_nc" + std::to_string(n_c);
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + tag;
    return path.substr(0, dot) + tag + path.substr(dot);
}

void apply_section(CLI::App* app, const Json& section, const std::string& where)
{
    if (!section.is_object()) throw ParseError("config: section '" + where + "' must be an object");
    for (const auto& [key, val] : section.items()) {
        CLI::Option* opt = app->get_option_no_throw("--" + key);
        if (!opt) throw ParseError("config: unknown option '" + key + "' in '" + where + "'");
        if (val.is_null() || opt->count() > 0) continue;
        const std::string text = val.is_string() ? val.get<std::string>() : val.dump();
        try {
            opt->add_result(text);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw ParseError("config: option '" + key + "': " + e.what());
        }
    }
}

/// Explicit flags win; config values fill whatever was not given.
void apply_config(CLI::App& app, const std::string& path)
{
    const Json cfg = io::read_json_file(path);
    if (!cfg.is_object()) throw ParseError("config: top level must be an object");
    Json globals = Json::object();
    for (const auto& [key, val] : cfg.items()) {
        if (val.is_object()) {
            CLI::App* sub = nullptr;
            try {
                sub = app.get_subcommand(key);
            } catch (const CLI::OptionNotFound&) {
                throw ParseError("config: unknown section '" + key + "'");
            }
            if (sub->parsed()) apply_section(sub, val, key);
        } else {
            globals[key] = val;
        }
    }
    apply_section(&app, globals, "top level");
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string matrix, rhs, out;
    std::optional<int> nc;
    std::optional<double> t, c_const;
};

int cmd_solve(const SolveArgs& a)
{
    const CMatrix m = io::read_matrix_market_file(a.matrix);
    const CVector b = io::read_vector_file(a.rhs);
    const LinearSystem system = hermitize(m, b);
    HHLConfig cfg = auto_config(system, a.nc);
    if (a.t) {
        cfg.t = *a.t;
        cfg.c_const = default_inversion_constant(cfg.n_c, cfg.t);
    }
    if (a.c_const) cfg.c_const = *a.c_const;
    const HHLSolution s = solve(system, cfg);
    if (!a.out.empty()) io::write_text_file(a.out, dump(io::solution_to_json(s)));
    else std::cout << dump(io::solution_to_json(s));
    std::cerr << "state_error=" << io::format_double(s.state_error)
              << " vector_error=" << io::format_double(s.vector_error) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct SourceArgs {
    bool from_heat = false;
    int l = 3;
    double r = 0.00016;
    std::string forcing = "uniform";
    std::string powerflow_case;
    std::string matrix, rhs;
};

HeatSpec heat_spec(const SourceArgs& a, std::uint64_t seed)
{
    HeatSpec spec = HeatSpec::uniform(a.l, a.r);
    if (a.forcing == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(0.5, 1.5);
        for (Eigen::Index i = 0; i < spec.forcing.size(); ++i) spec.forcing(i) = dist(rng);
        spec.forcing /= spec.forcing.norm();
    } else if (a.forcing != "uniform") {
        throw std::invalid_argument("forcing must be 'uniform' or 'random'");
    }
    return spec;
}

struct Source {
    LinearSystem system;
    ConfigFor config_for;
};

Source load_source(const SourceArgs& a, std::uint64_t seed)
{
    const int chosen = int(a.from_heat) + int(!a.powerflow_case.empty()) + int(!a.matrix.empty());
    if (chosen != 1) throw ParseError("choose exactly one of --from-heat, --from-powerflow, --matrix");
    if (a.from_heat) {
        return {heat_matrix(heat_spec(a, seed)), [](const LinearSystem&, int nc) { return centered_config(nc, 1.0); }};
    }
    if (!a.powerflow_case.empty()) {
        const PowerFlowCase pf = io::case_from_json(io::read_json_file(a.powerflow_case));
        return {jacobian(pf), [](const LinearSystem& s, int nc) { return auto_config(s, nc); }};
    }
    if (a.rhs.empty()) throw ParseError("--matrix needs --rhs");
    return {hermitize(io::read_matrix_market_file(a.matrix), io::read_vector_file(a.rhs)),
            [](const LinearSystem& s, int nc) { return auto_config(s, nc); }};
}

void add_source_options(CLI::App* sub, SourceArgs& a)
{
    sub->add_flag("--from-heat", a.from_heat, "Heat-diffusion system");
    sub->add_option("--l", a.l, "Lattice points per side")->check(CLI::Range(2, 6));
    sub->add_option("--r", a.r, "Diffusion coefficient")->check(CLI::PositiveNumber);
    sub->add_option("--forcing", a.forcing, "Heat forcing: uniform|random")
        ->check(CLI::IsMember({"uniform", "random"}));
    sub->add_option("--from-powerflow", a.powerflow_case, "Power-flow case JSON (Jacobian at the initial point)");
    sub->add_option("--matrix", a.matrix, "Matrix Market coefficient matrix");
    sub->add_option("--rhs", a.rhs, "Right-hand side (.json or .csv)");
}

// ---------------------------------------------------------------------------

struct HeatArgs {
    SourceArgs src;
    std::string nc_range = "3..6";
    std::string out;
};

struct HeatRow {
    int n_c = 0;
    HHLSolution solution;
    CircuitStats stats;
    std::size_t fused = 0;
};

int cmd_heat(const HeatArgs& a, const Globals& g)
{
    const std::vector<int> ncs = parse_range(a.nc_range);
    const LinearSystem system = heat_matrix(heat_spec(a.src, g.seed));
    std::vector<HeatRow> rows(ncs.size());
    std::vector<std::exception_ptr> errors(ncs.size());
    const auto n = static_cast<long long>(ncs.size());
#pragma omp parallel for schedule(dynamic) num_threads(g.jobs)
    for (long long i = 0; i < n; ++i) {
        try {
            HeatRow& row = rows[static_cast<std::size_t>(i)];
            row.n_c = ncs[static_cast<std::size_t>(i)];
            const HHLConfig cfg = centered_config(row.n_c, 1.0);
            row.solution = solve(system, cfg);
            const Circuit lowered = decompose(build(system, cfg));
            row.stats = stats(lowered);
            row.fused = fuse(lowered).size();
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::ostringstream csv;
    csv << "l,n_c,state_error,vector_error,depth,gates,gates_after_fusion,reduction_pct\n";
    for (const HeatRow& row : rows) {
        const double reduction =
            row.stats.total_gates ? 100.0 * (1.0 - static_cast<double>(row.fused) / row.stats.total_gates) : 0.0;
        csv << a.src.l << ',' << row.n_c << ',' << io::format_double(row.solution.state_error) << ','
            << io::format_double(row.solution.vector_error) << ',' << row.stats.depth << ',' << row.stats.total_gates
            << ',' << row.fused << ',' << io::format_double(reduction) << '\n';
    }
    emit(a.out, csv.str());
    return kOk;
}

// ---------------------------------------------------------------------------

struct PowerflowArgs {
    std::string case_path;
    std::string solver = "classical";
    std::string nc;
    int max_iter = 20;
    std::string out;
    std::string voltages_out;
};

int cmd_powerflow(const PowerflowArgs& a, const Globals& g)
{
    const PowerFlowCase pf = io::case_from_json(io::read_json_file(a.case_path));
    std::vector<std::optional<int>> runs;
    if (a.solver == "classical") {
        runs.push_back(std::nullopt);
    } else if (a.nc.empty()) {
        runs.push_back(std::nullopt);
    } else {
        for (int v : parse_range(a.nc)) runs.push_back(v);
    }
    const bool multi = runs.size() > 1;

    struct Outcome {
        NRTrace trace;
        std::string error;
        int code = kOk;
    };
    std::vector<Outcome> outcomes(runs.size());
    const auto n = static_cast<long long>(runs.size());
#pragma omp parallel for schedule(dynamic) num_threads(g.jobs)
    for (long long i = 0; i < n; ++i) {
        Outcome& o = outcomes[static_cast<std::size_t>(i)];
        const auto nc = runs[static_cast<std::size_t>(i)];
        try {
            if (a.solver == "classical")
                o.trace = nr_solve(pf, ClassicalSolver{}, a.max_iter);
            else
                o.trace = nr_solve(pf, HhlSolver{nc}, a.max_iter);
            if (!o.trace.converged) {
                o.code = kDivergence;
                o.error = "did not converge within " + std::to_string(a.max_iter) + " iterations";
            }
        } catch (const DivergenceError& e) {
            o.trace = e.trace();
            o.code = e.singular() ? kIncompatible : kDivergence;
            o.error = e.what();
        } catch (const ZeroProbabilityError& e) {
            o.code = kZeroProbability;
            o.error = e.what();
        }
    }

    int code = kOk;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Outcome& o = outcomes[i];
        const std::string tag = runs[i] ? std::to_string(*runs[i]) : std::string("auto");
        std::ostringstream csv;
        io::write_trace_csv(csv, o.trace);
        if (!a.out.empty())
            io::write_text_file(multi ? with_suffix(a.out, *runs[i]) : a.out, csv.str());
        else
            std::cout << csv.str();
        if (!a.voltages_out.empty() && !o.trace.final_case.buses.empty()) {
            io::write_text_file(multi ? with_suffix(a.voltages_out, *runs[i]) : a.voltages_out,
                                dump(io::voltages_to_json(o.trace.final_case)));
        }
        const double last = o.trace.records.empty() ? 0.0 : o.trace.records.back().mismatch_inf_norm;
        std::cerr << "solver=" << a.solver << (a.solver == "hhl" ? " n_c=" + tag : std::string{})
                  << " converged=" << (o.trace.converged ? 1 : 0) << " iterations=" << o.trace.iterations_used
                  << " mismatch=" << io::format_double(last) << (o.error.empty() ? "" : " error=" + o.error)
                  << '\n';
        if (o.code != kOk && code == kOk) code = o.code;
    }
    return code;
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
    SourceArgs src;
    std::string circuit_path;
    std::optional<int> nc;
    std::string nc_range;
    std::string qubits = "ns-1e-4";
    double budget = 0.01;
    int qec_distance = 7;
    int qec_phys = 98;
    double qec_rate = 3e-10;
    double rotation_cycles = 1.0;
    std::optional<double> factory_duration;
    long long factory_qubits = 3000;
    long long factory_batch = 1;
    std::optional<double> factory_output_error;
    bool no_decompose = false;
    std::string out;
    std::string sweep_out;
};

EstimatorInputs estimator_inputs(const EstimateArgs& a)
{
    EstimatorInputs in;
    in.qubits = QubitParams::preset(a.qubits);
    in.budget = ErrorBudget::split(a.budget);
    in.qec.distance = a.qec_distance;
    in.qec.phys_per_logical = a.qec_phys;
    in.qec.logical_error_rate = a.qec_rate;
    in.rotation_cycle_multiplier = a.rotation_cycles;
    TFactorySpec f = TFactorySpec::default_for(in.qubits, in.qec);
    if (a.factory_duration) f.duration = *a.factory_duration;
    f.phys_qubits = a.factory_qubits;
    f.states_per_batch = a.factory_batch;
    if (a.factory_output_error) f.output_error = *a.factory_output_error;
    in.factory = f;
    return in;
}

Json fit_json(const std::optional<LineFit>& f)
{
    if (!f) return nullptr;
    Json j;
    j["slope"] = f->slope;
    j["intercept"] = f->intercept;
    j["r_squared"] = f->r_squared;
    return j;
}

int cmd_estimate(const EstimateArgs& a, const Globals& g)
{
    const EstimatorInputs inputs = estimator_inputs(a);
    if (!a.circuit_path.empty()) {
        Circuit c = io::circuit_from_json(io::read_json_file(a.circuit_path));
        if (!a.no_decompose) c = decompose(c);
        emit(a.out, dump(io::report_to_json(estimate(c, inputs), inputs)));
        return kOk;
    }
    const Source src = load_source(a.src, g.seed);
    if (a.nc_range.empty()) {
        const int nc = a.nc ? *a.nc : auto_config(src.system).n_c;
        const Circuit c = decompose(build(src.system, src.config_for(src.system, nc)));
        Json j = io::report_to_json(estimate(c, inputs), inputs);
        j["n_c"] = nc;
        emit(a.out, dump(j));
        return kOk;
    }
    const std::vector<int> ncs = parse_range(a.nc_range);
    const SweepResult sweep = sweep_nc(src.system, ncs, inputs, src.config_for, g.jobs);
    std::ostringstream csv;
    io::write_sweep_csv(csv, sweep);
    if (!a.sweep_out.empty() || a.out.empty()) emit(a.sweep_out, csv.str());
    if (!a.out.empty()) {
        Json reports = Json::array();
        for (const SweepRow& row : sweep.rows) {
            Json r = io::report_to_json(row.report, inputs);
            r["n_c"] = row.n_c;
            reports.push_back(std::move(r));
        }
        Json j;
        j["reports"] = std::move(reports);
        Json fits;
        fits["runtime"] = fit_json(sweep.runtime_fit);
        fits["logical_cycles"] = fit_json(sweep.cycles_fit);
        fits["t_states"] = fit_json(sweep.t_states_fit);
        j["log10_fits"] = std::move(fits);
        io::write_text_file(a.out, dump(j));
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct CircuitArgs {
    SourceArgs src;
    std::optional<int> nc;
    bool decompose = false;
    bool fuse = false;
    std::string out;
    std::string stats_out;
};

int cmd_circuit(const CircuitArgs& a, const Globals& g)
{
    const Source src = load_source(a.src, g.seed);
    const int nc = a.nc ? *a.nc : auto_config(src.system).n_c;
    const Circuit built = build(src.system, src.config_for(src.system, nc));
    const Circuit lowered = decompose(built);
    const Circuit fused = fuse(lowered);
    const CircuitStats st = stats(lowered);

    const Circuit& chosen = a.fuse ? fused : (a.decompose ? lowered : built);
    if (!a.out.empty()) io::write_text_file(a.out, dump(io::circuit_to_json(chosen)));

    std::ostringstream csv;
    const double reduction =
        st.total_gates ? 100.0 * (1.0 - static_cast<double>(fused.size()) / st.total_gates) : 0.0;
    csv << "n_d,n_c,depth,gates,two_qubit_gates,gates_after_fusion,reduction_pct\n";
    csv << log2_exact(src.system.dim()) << ',' << nc << ',' << st.depth << ',' << st.total_gates << ','
        << st.two_qubit_gates << ',' << fused.size() << ',' << io::format_double(reduction) << '\n';
    emit(a.stats_out, csv.str());
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qlss: HHL linear-solver laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized fixtures");
    app.add_option("--jobs", g.jobs, "Parallel sweep points")->check(CLI::PositiveNumber);
    app.add_option("--config", g.config, "JSON config (default: $QLSS_CONFIG)");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "HHL solve of a Matrix Market system");
    solve_cmd->add_option("matrix", solve_args.matrix, "Matrix Market file")->required();
    solve_cmd->add_option("rhs", solve_args.rhs, "Right-hand side (.json or .csv)")->required();
    solve_cmd->add_option("--nc", solve_args.nc, "Clock qubits")->check(CLI::Range(1, 16));
    solve_cmd->add_option("--t", solve_args.t, "Evolution time")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--c-const", solve_args.c_const, "Inversion constant")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", solve_args.out, "Solution JSON path");

    HeatArgs heat_args;
    heat_args.src.from_heat = true;
    auto* heat_cmd = app.add_subcommand("heat", "Heat-diffusion HHL sweep over n_c");
    heat_cmd->add_option("--l", heat_args.src.l, "Lattice points per side")->check(CLI::Range(2, 6));
    heat_cmd->add_option("--r", heat_args.src.r, "Diffusion coefficient")->check(CLI::PositiveNumber);
    heat_cmd->add_option("--nc-range", heat_args.nc_range, "Clock sizes, e.g. 3..6");
    heat_cmd->add_option("--forcing", heat_args.src.forcing, "uniform|random")
        ->check(CLI::IsMember({"uniform", "random"}));
    heat_cmd->add_option("--out", heat_args.out, "CSV path");

    PowerflowArgs pf_args;
    auto* pf_cmd = app.add_subcommand("powerflow", "Newton-Raphson power flow");
    pf_cmd->add_option("case", pf_args.case_path, "Case JSON")->required();
    pf_cmd->add_option("--solver", pf_args.solver, "classical|hhl")->check(CLI::IsMember({"classical", "hhl"}));
    pf_cmd->add_option("--nc", pf_args.nc, "Clock qubits for HHL, e.g. 5 or 4..7");
    pf_cmd->add_option("--max-iter", pf_args.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    pf_cmd->add_option("--out", pf_args.out, "Trace CSV path (suffixed _nc<k> for ranges)");
    pf_cmd->add_option("--voltages-out", pf_args.voltages_out, "Final voltages JSON path");

    EstimateArgs est_args;
    auto* est_cmd = app.add_subcommand("estimate", "Fault-tolerant resource estimate");
    est_cmd->add_option("circuit", est_args.circuit_path, "Circuit JSON");
    add_source_options(est_cmd, est_args.src);
    est_cmd->add_option("--nc", est_args.nc, "Clock qubits")->check(CLI::Range(1, 16));
    est_cmd->add_option("--nc-range", est_args.nc_range, "Sweep, e.g. 3..6");
    est_cmd->add_option("--qubits", est_args.qubits, "Qubit preset")->check(CLI::IsMember({"ns-1e-4", "us-1e-4"}));
    est_cmd->add_option("--budget", est_args.budget, "Total error budget")->check(CLI::Range(1e-12, 0.999999));
    est_cmd->add_option("--qec-distance", est_args.qec_distance, "Code distance")->check(CLI::PositiveNumber);
    est_cmd->add_option("--qec-phys-per-logical", est_args.qec_phys, "Physical qubits per logical qubit")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--qec-logical-error-rate", est_args.qec_rate, "Logical error rate per cycle")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--rotation-cycles", est_args.rotation_cycles, "Extra logical cycles per rotation")
        ->check(CLI::NonNegativeNumber);
    est_cmd->add_option("--factory-duration", est_args.factory_duration, "T factory batch time (s)")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--factory-qubits", est_args.factory_qubits, "Physical qubits per factory")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--factory-batch", est_args.factory_batch, "T states per batch")->check(CLI::PositiveNumber);
    est_cmd->add_option("--factory-output-error", est_args.factory_output_error, "T state output error")
        ->check(CLI::PositiveNumber);
    est_cmd->add_flag("--no-decompose", est_args.no_decompose, "Cost the circuit as given");
    est_cmd->add_option("--out", est_args.out, "Report JSON path");
    est_cmd->add_option("--sweep-out", est_args.sweep_out, "Sweep CSV path");

    CircuitArgs circ_args;
    auto* circ_cmd = app.add_subcommand("circuit", "Export an HHL circuit and its gate statistics");
    add_source_options(circ_cmd, circ_args.src);
    circ_cmd->add_option("--nc", circ_args.nc, "Clock qubits")->check(CLI::Range(1, 16));
    circ_cmd->add_flag("--decompose", circ_args.decompose, "Write the lowered {1q, CX} circuit");
    circ_cmd->add_flag("--fuse", circ_args.fuse, "Write the lowered and fused circuit");
    circ_cmd->add_option("--out", circ_args.out, "Circuit JSON path");
    circ_cmd->add_option("--stats-out", circ_args.stats_out, "Statistics CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        std::string config_path = g.config;
        if (config_path.empty()) {
            if (const char* env = std::getenv("QLSS_CONFIG")) config_path = env;
        }
        if (!config_path.empty()) apply_config(app, config_path);
        if (g.jobs < 1) throw ParseError("--jobs must be >= 1");

        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (heat_cmd->parsed()) return cmd_heat(heat_args, g);
        if (pf_cmd->parsed()) return cmd_powerflow(pf_args, g);
        if (est_cmd->parsed()) return cmd_estimate(est_args, g);
        if (circ_cmd->parsed()) return cmd_circuit(circ_args, g);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: singular system: " << e.what() << '\n';
        return kIncompatible;
    } catch (const ZeroProbabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kZeroProbability;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.singular() ? kIncompatible : kDivergence;
    } catch (const DecompositionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUndecomposable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: incompatible input: " << e.what() << '\n';
        return kIncompatible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
    return kParse;
}
