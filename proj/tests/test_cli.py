# Copyright 2026 The qlss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the qlss executable: exit codes, artifacts, schemas."""

import csv
import json
import math
import os
import pathlib
import subprocess

import jsonschema
import numpy as np
import pytest
from referencing import Registry, Resource

QLSS = os.environ["QLSS_BIN"]
ROOT = pathlib.Path(os.environ["QLSS_ROOT"])
CASE = ROOT / "data" / "case4gs.json"
SCHEMAS = ROOT / "schemas"


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(doc, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def run(*args, cwd, env=None, check=None):
    full_env = dict(os.environ)
    full_env.pop("QLSS_CONFIG", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([QLSS, *map(str, args)], cwd=cwd, env=full_env, capture_output=True, text=True,
                          timeout=600)
    if check is not None:
        assert proc.returncode == check, proc.stderr
    return proc


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def write_mtx(path, a):
    a = np.asarray(a, dtype=complex)
    lines = ["%%MatrixMarket matrix coordinate complex general", f"{a.shape[0]} {a.shape[1]} {a.size}"]
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            lines.append(f"{i + 1} {j + 1} {float(a[i, j].real)!r} {float(a[i, j].imag)!r}")
    path.write_text("\n".join(lines) + "\n")


def write_vec(path, b):
    path.write_text(json.dumps([[float(np.real(x)), float(np.imag(x))] for x in b]))


def vector(doc):
    return np.array([complex(re, im) for re, im in doc])


# --- solve -------------------------------------------------------------------


def test_solve_identity(tmp_path):
    write_mtx(tmp_path / "a.mtx", np.eye(4))
    write_vec(tmp_path / "b.json", [0, 1, 0, 0])
    run("solve", "a.mtx", "b.json", "--out", "s.json", cwd=tmp_path, check=0)
    doc = json.loads((tmp_path / "s.json").read_text())
    validate(doc, "solution.schema.json")
    assert doc["vector_error"] <= 1e-6
    assert np.allclose(vector(doc["recovered_vector"]), [0, 1, 0, 0], atol=1e-6)


def test_solve_exact_phase_matches_classical(tmp_path):
    a = np.diag([1.0, 2.0])
    b = np.array([0.6, 0.8])
    write_mtx(tmp_path / "a.mtx", a)
    (tmp_path / "b.csv").write_text("re,im\n0.6,0\n0.8,0\n")
    proc = run("solve", "a.mtx", "b.csv", "--nc", 2, "--t", math.pi / 2, "--c-const", 1, "--out", "s.json",
               cwd=tmp_path, check=0)
    assert "state_error=" in proc.stderr and "vector_error=" in proc.stderr
    doc = json.loads((tmp_path / "s.json").read_text())
    assert np.allclose(vector(doc["recovered_vector"]), np.linalg.solve(a, b), atol=1e-9)
    assert doc["state_error"] <= 1e-6


def test_solve_non_hermitian(tmp_path):
    a = np.array([[2.0, 1.0], [0.0, 1.0]])
    b = np.array([1.0, 1.0])
    write_mtx(tmp_path / "a.mtx", a)
    write_vec(tmp_path / "b.json", b)
    run("solve", "a.mtx", "b.json", "--out", "s.json", cwd=tmp_path, check=0)
    doc = json.loads((tmp_path / "s.json").read_text())
    validate(doc, "solution.schema.json")
    assert doc["signed"] is True
    assert doc["n_d"] == 2


def test_solve_malformed_matrix(tmp_path):
    (tmp_path / "a.mtx").write_text("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n2 q 2\n")
    write_vec(tmp_path / "b.json", [1, 1])
    proc = run("solve", "a.mtx", "b.json", cwd=tmp_path, check=1)
    assert "line 4" in proc.stderr


def test_solve_singular(tmp_path):
    write_mtx(tmp_path / "a.mtx", np.diag([1.0, 0.0]))
    write_vec(tmp_path / "b.json", [1, 1])
    run("solve", "a.mtx", "b.json", cwd=tmp_path, check=2)


def test_solve_dimension_mismatch(tmp_path):
    write_mtx(tmp_path / "a.mtx", np.eye(2))
    write_vec(tmp_path / "b.json", [1, 1, 1])
    run("solve", "a.mtx", "b.json", cwd=tmp_path, check=2)


def test_solve_zero_probability(tmp_path):
    write_mtx(tmp_path / "a.mtx", np.eye(2))
    write_vec(tmp_path / "b.json", [1, 0])
    run("solve", "a.mtx", "b.json", "--c-const", 1e-9, cwd=tmp_path, check=3)


def test_unknown_flag_rejected(tmp_path):
    run("solve", "a.mtx", "b.json", "--bogus", cwd=tmp_path, check=1)
    run("heat", "--l", 9, cwd=tmp_path, check=1)


# --- heat --------------------------------------------------------------------


def test_heat_small_lattice(tmp_path):
    run("heat", "--l", 3, "--r", 0.00016, "--nc-range", "3..6", "--out", "h.csv", "--jobs", 2, cwd=tmp_path,
        check=0)
    rows = read_csv(tmp_path / "h.csv")
    assert list(rows[0].keys()) == ["l", "n_c", "state_error", "vector_error", "depth", "gates",
                                    "gates_after_fusion", "reduction_pct"]
    assert [int(r["n_c"]) for r in rows] == [3, 4, 5, 6]
    for r in rows:
        assert float(r["reduction_pct"]) >= 30
        assert float(r["state_error"]) <= 1e-3


def test_heat_large_lattice(tmp_path):
    run("heat", "--l", 5, "--r", 0.00064, "--nc-range", "3..5", "--out", "h.csv", "--jobs", 3, cwd=tmp_path,
        check=0)
    rows = read_csv(tmp_path / "h.csv")
    assert len(rows) == 3
    assert all(float(r["reduction_pct"]) >= 30 for r in rows)


def test_heat_deterministic_across_jobs(tmp_path):
    run("heat", "--nc-range", "3..4", "--out", "a.csv", "--jobs", 1, cwd=tmp_path, check=0)
    run("heat", "--nc-range", "3..4", "--out", "b.csv", "--jobs", 2, cwd=tmp_path, check=0)
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_heat_random_forcing_seeded(tmp_path):
    run("--seed", 5, "heat", "--nc-range", "3", "--forcing", "random", "--out", "a.csv", cwd=tmp_path, check=0)
    run("--seed", 5, "heat", "--nc-range", "3", "--forcing", "random", "--out", "b.csv", cwd=tmp_path, check=0)
    run("--seed", 6, "heat", "--nc-range", "3", "--forcing", "random", "--out", "c.csv", cwd=tmp_path, check=0)
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert (tmp_path / "a.csv").read_bytes() != (tmp_path / "c.csv").read_bytes()


# --- powerflow ---------------------------------------------------------------


def final_voltages(path):
    doc = json.loads(path.read_text())
    validate(doc, "voltages.schema.json")
    return np.array([[b["v"], b["theta"]] for b in doc["buses"]])


def test_powerflow_classical(tmp_path):
    run("powerflow", CASE, "--out", "t.csv", "--voltages-out", "v.json", cwd=tmp_path, check=0)
    rows = read_csv(tmp_path / "t.csv")
    assert list(rows[0].keys())[:4] == ["iteration", "mismatch_inf_norm", "state_error", "vector_error"]
    assert float(rows[-1]["mismatch_inf_norm"]) < 1e-8


def test_powerflow_hhl_matches_classical(tmp_path):
    run("powerflow", CASE, "--voltages-out", "c.json", "--out", "c.csv", cwd=tmp_path, check=0)
    run("powerflow", CASE, "--solver", "hhl", "--nc", 5, "--voltages-out", "h.json", "--out", "h.csv",
        cwd=tmp_path, check=0)
    assert np.max(np.abs(final_voltages(tmp_path / "c.json") - final_voltages(tmp_path / "h.json"))) <= 1e-6
    rows = read_csv(tmp_path / "h.csv")
    assert rows[1]["state_error"] != ""


def test_powerflow_sweep_writes_one_trace_per_nc(tmp_path):
    run("powerflow", CASE, "--solver", "hhl", "--nc", "4..7", "--out", "trace.csv", "--jobs", 4, cwd=tmp_path,
        check=0)
    for n_c in range(4, 8):
        assert (tmp_path / f"trace_nc{n_c}.csv").exists()


def test_powerflow_divergence(tmp_path):
    doc = json.loads(CASE.read_text())
    for bus in doc["buses"]:
        bus["p"] *= 50
        bus["q"] *= 50
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    proc = run("powerflow", "bad.json", "--max-iter", 50, "--out", "t.csv", cwd=tmp_path)
    assert proc.returncode in (2, 4), proc.stderr
    assert len(read_csv(tmp_path / "t.csv")) >= 1


def test_powerflow_iteration_cap(tmp_path):
    run("powerflow", CASE, "--max-iter", 1, "--out", "t.csv", cwd=tmp_path, check=4)


def test_case_file_validates():
    validate(json.loads(CASE.read_text()), "case.schema.json")


# --- estimate ----------------------------------------------------------------


def test_estimate_heat_single(tmp_path):
    run("estimate", "--from-heat", "--l", 3, "--nc", 3, "--budget", 0.01, "--out", "r.json", cwd=tmp_path,
        check=0)
    doc = json.loads((tmp_path / "r.json").read_text())
    validate(doc, "report.schema.json")
    assert doc["logical_qubits_pre_layout"] == 8
    assert doc["logical_qubits_after_layout"] == 25
    assert doc["physical_qubits_total"] == doc["physical_qubits_algorithm"] + doc["physical_qubits_t_factories"]


def test_estimate_budget_scaling(tmp_path):
    run("estimate", "--from-heat", "--nc", 3, "--budget", 0.01, "--out", "a.json", cwd=tmp_path, check=0)
    run("estimate", "--from-heat", "--nc", 3, "--budget", 0.1, "--out", "b.json", cwd=tmp_path, check=0)
    a = json.loads((tmp_path / "a.json").read_text())
    b = json.loads((tmp_path / "b.json").read_text())
    assert b["min_logical_error_rate"] / a["min_logical_error_rate"] == pytest.approx(10.0, rel=1e-12)


def test_estimate_presets(tmp_path):
    run("estimate", "--from-heat", "--nc", 3, "--qubits", "ns-1e-4", "--out", "a.json", cwd=tmp_path, check=0)
    run("estimate", "--from-heat", "--nc", 3, "--qubits", "us-1e-4", "--out", "b.json", cwd=tmp_path, check=0)
    a = json.loads((tmp_path / "a.json").read_text())
    b = json.loads((tmp_path / "b.json").read_text())
    for key in ("logical_qubits_after_layout", "physical_qubits_algorithm", "t_states", "logical_cycles"):
        assert a[key] == b[key]
    assert a["runtime_s"] != b["runtime_s"]


def test_estimate_sweep(tmp_path):
    run("estimate", "--from-powerflow", CASE, "--nc-range", "4..6", "--jobs", 3, "--out", "s.json", "--sweep-out",
        "s.csv", cwd=tmp_path, check=0)
    doc = json.loads((tmp_path / "s.json").read_text())
    validate(doc, "sweep.schema.json")
    assert len(doc["reports"]) == 3
    rows = read_csv(tmp_path / "s.csv")
    assert list(rows[0].keys()) == ["n_c", "runtime_s", "logical_cycles", "t_states", "t_factories", "phys_alg",
                                    "phys_factories", "phys_total", "min_logical_rate", "min_tstate_rate"]
    assert 0.23 <= doc["log10_fits"]["runtime"]["slope"] <= 0.42


def test_estimate_from_circuit_file(tmp_path):
    run("circuit", "--from-heat", "--nc", 3, "--out", "c.json", "--stats-out", "c.csv", cwd=tmp_path, check=0)
    circuit = json.loads((tmp_path / "c.json").read_text())
    validate(circuit, "circuit.schema.json")
    run("estimate", "c.json", "--out", "r.json", cwd=tmp_path, check=0)
    run("estimate", "--from-heat", "--nc", 3, "--out", "direct.json", cwd=tmp_path, check=0)
    r = json.loads((tmp_path / "r.json").read_text())
    direct = json.loads((tmp_path / "direct.json").read_text())
    for key in ("logical_qubits_pre_layout", "t_states", "logical_cycles", "t_factories"):
        assert r[key] == direct[key]


def test_estimate_undecomposable(tmp_path):
    circuit = {"n_qubits": 2, "gates": [{"label": "UNITARY", "targets": [0, 1],
                                         "matrix": [[[1 if i == j else 0, 0] for j in range(4)] for i in range(4)]}]}
    (tmp_path / "c.json").write_text(json.dumps(circuit))
    run("estimate", "c.json", "--no-decompose", cwd=tmp_path, check=5)
    wide = np.eye(512)
    circuit = {"n_qubits": 9, "gates": [{"label": "UNITARY", "targets": list(range(9)),
                                         "matrix": [[[float(x), 0.0] for x in row] for row in wide]}]}
    (tmp_path / "w.json").write_text(json.dumps(circuit))
    run("estimate", "w.json", cwd=tmp_path, check=5)


def test_estimate_deterministic(tmp_path):
    run("estimate", "--from-heat", "--nc-range", "3..4", "--out", "a.json", "--sweep-out", "a.csv", "--jobs", 1,
        cwd=tmp_path, check=0)
    run("estimate", "--from-heat", "--nc-range", "3..4", "--out", "b.json", "--sweep-out", "b.csv", "--jobs", 2,
        cwd=tmp_path, check=0)
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


# --- config ------------------------------------------------------------------


def test_default_config_validates():
    validate(json.loads((ROOT / "config" / "default.json").read_text()), "config.schema.json")


def test_config_file_and_override(tmp_path):
    (tmp_path / "cfg.json").write_text(json.dumps({"heat": {"nc-range": "3..4", "l": 2}}))
    run("--config", "cfg.json", "heat", "--out", "a.csv", cwd=tmp_path, check=0)
    rows = read_csv(tmp_path / "a.csv")
    assert [int(r["n_c"]) for r in rows] == [3, 4] and rows[0]["l"] == "2"
    run("--config", "cfg.json", "heat", "--l", 3, "--out", "b.csv", cwd=tmp_path, check=0)
    assert read_csv(tmp_path / "b.csv")[0]["l"] == "3"
    run("heat", "--out", "c.csv", cwd=tmp_path, env={"QLSS_CONFIG": str(tmp_path / "cfg.json")}, check=0)
    assert len(read_csv(tmp_path / "c.csv")) == 2


def test_config_unknown_key(tmp_path):
    (tmp_path / "cfg.json").write_text(json.dumps({"heat": {"colour": 1}}))
    run("--config", "cfg.json", "heat", cwd=tmp_path, check=1)
    (tmp_path / "bad.json").write_text("{ not json")
    run("--config", "bad.json", "heat", cwd=tmp_path, check=1)


def test_shipped_default_config_runs(tmp_path):
    run("--config", ROOT / "config" / "default.json", "heat", "--nc-range", "3", "--out", "h.csv", cwd=tmp_path,
        check=0)
    run("--config", ROOT / "config" / "default.json", "estimate", "--from-heat", "--nc", 3, "--out", "r.json",
        cwd=tmp_path, check=0)
    validate(json.loads((tmp_path / "r.json").read_text()), "report.schema.json")
