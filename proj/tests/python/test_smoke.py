"""End-to-end smoke tests for the python bindings and the CLI binary."""

import csv
import io
import json
import math
import os
import subprocess

import pytest

kg = pytest.importorskip("kgring")


def test_solve_ground_state():
    p = kg.ModelParams(mu=1.0, a0=0.25, r0=2.0)
    state = kg.solve_bound_state(p, kg.QuantumNumbers(0, 0, 0))
    assert abs(state.E) < p.mu
    assert abs(state.E - 0.8776393913749308) < 1e-12
    assert abs(kg.energy_residual_noncentral(p, state.qn, state.E)) < 1e-12


def test_solver_against_scipy_root():
    scipy_opt = pytest.importorskip("scipy.optimize")
    p = kg.ModelParams(mu=1.0, a0=0.7, r0=1.3, C=0.4, D=4)
    qn = kg.QuantumNumbers(1, 1, 1)
    state = kg.solve_bound_state(p, qn)
    root = scipy_opt.brentq(
        lambda E: kg.energy_residual_noncentral(p, qn, E),
        -p.mu * (1 - 1e-9),
        p.mu * (1 - 1e-9),
        xtol=1e-14,
    )
    assert abs(state.E - root) < 1e-11


def test_coulomb_closed_form():
    assert kg.coulomb_energy(1.0, 1.0, 0, 0, 3) == pytest.approx(0.6, abs=1e-15)
    assert abs(kg.coulomb_root(1.0, 1.0, 0, 0, 3) - 0.6) < 1e-10


def test_spectrum_matches_scipy_quad_normalization():
    scipy_int = pytest.importorskip("scipy.integrate")
    p = kg.ModelParams(mu=1.0, a0=0.25, r0=2.0, C=0.3, D=3)
    state = kg.solve_bound_state(p, kg.QuantumNumbers(0, 1, 1))
    norm, err = scipy_int.quad(
        lambda r: kg.radial_wavefunction(state, r) ** 2 * r**2, 0, 80, limit=200
    )
    assert norm == pytest.approx(1.0, abs=1e-7)


def test_special_functions_match_scipy():
    scipy_special = pytest.importorskip("scipy.special")
    assert kg.laguerre(4, 1.7, 2.2).value == pytest.approx(
        scipy_special.eval_genlaguerre(4, 1.7, 2.2), rel=1e-12
    )
    assert kg.jacobi_sym(3, 0.9, -0.4).value == pytest.approx(
        scipy_special.eval_jacobi(3, 0.9, 0.9, -0.4), rel=1e-12
    )
    assert kg.log_gamma(7.25) == pytest.approx(scipy_special.gammaln(7.25), rel=1e-14)


def test_angular_identities():
    mp_ = kg.m_prime(2, 0.7, 1.9)
    assert mp_ == pytest.approx(math.sqrt(5.33), rel=1e-14)
    j = kg.j_from_ntilde(1, mp_, 4, 0.7, 1.9)
    assert kg.ntilde_from_j(j, mp_, 4, 0.7, 1.9) == pytest.approx(1.0, abs=1e-9)


def test_polar_and_azimuthal_values():
    assert kg.polar_wavefunction(0, 0.0, 1.0) == pytest.approx(1 / math.sqrt(2), rel=1e-14)
    phi = kg.azimuthal(2, math.pi / 3)
    assert abs(phi) == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-14)


def test_matrix_crosscheck_quick():
    check = kg.matrix_eigen_crosscheck_coulomb(1.0, 1.0, 0, 0, 3, 500, 100.0)
    assert check.converged
    assert check.gap < 5e-3


def test_errors_map_to_python_exceptions():
    p = kg.ModelParams(1.0, 0.25, 2.0)
    with pytest.raises(ValueError):
        kg.channel_at(p, 1.5)
    with pytest.raises(ValueError):
        kg.j_from_ntilde(0, 0.0, 3, 1.0, 1.0)
    with pytest.raises(ValueError):
        kg.ModelParams(-1.0, 1.0, 1.0)


def _cli():
    path = os.environ.get("KGRING_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("KGRING_CLI not set; CLI binary unavailable")
    return path


def _run(*args):
    return subprocess.run([_cli(), *args], capture_output=True, text=True)


def test_cli_spectrum_csv():
    out = _run("--a0", "0.25", "--r0", "2", "--n", "0..1", "--ntheta", "0..1", "--m", "0")
    assert out.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.stdout)))
    assert len(rows) == 4
    assert all(r["status"] == "ok" for r in rows)
    ground = float(rows[0]["E_R"])
    assert abs(ground - 0.8776393913749308) < 1e-10


def test_cli_json_round_trip():
    out = _run("--a0", "0.25", "--r0", "2", "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)
    assert len(rows) == 1
    again = _run("--a0", "0.25", "--r0", "2", "--format", "json")
    assert again.stdout == out.stdout  # byte-stable output


def test_cli_coulomb_limits():
    out = _run("--coulomb", "1", "--mode", "limits", "--format", "json")
    assert out.returncode == 0
    row = json.loads(out.stdout)[0]
    assert row["E_coulomb"] == pytest.approx(0.6, abs=1e-15)
    assert row["E_R"] == pytest.approx(0.6, abs=1e-10)


def test_cli_exit_codes():
    assert _run("--format", "xml").returncode == 1
    assert _run("--D", "1").returncode == 1
    assert _run("--mode", "bogus").returncode == 1
    ok = _run("--a0", "0.25", "--r0", "2", "--mode", "verify", "--grid", "600", "--rmax", "80")
    assert ok.returncode == 0


def test_cli_wavefunction_samples():
    out = _run("--a0", "0.25", "--r0", "2", "--mode", "wavefunction", "--samples", "40")
    assert out.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.stdout)))
    assert len(rows) == 40
    values = [float(r["value"]) for r in rows]
    assert all(v > 0 for v in values)  # ground state has no nodes
