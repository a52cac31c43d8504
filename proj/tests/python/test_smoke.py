"""Smoke tests for the python bindings: each exposed operation runs and a few
cheap cross-checks hold. The heavy numerical validation lives in the C++
suites."""

import math

import numpy as np
import pytest

import phasespec as ps

SQ75 = math.sqrt(0.75)


def dicke_params(dphi=0.0):
    return ps.SystemParams(
        dicke=True, gamma12=1.0, omega12=20.0, n_photons=0.5, m_abs=SQ75,
        phi_b=dphi, gamma_d=2.0,
    )


def test_params_validation():
    p = dicke_params()
    q = ps.validate_params(p)
    assert q.n == pytest.approx(2.0)
    assert q.a == pytest.approx(1.0)
    with pytest.raises(ValueError):
        ps.validate_params(ps.SystemParams(n_photons=0.5, m_abs=0.9))


def test_bell_state_and_concurrence():
    rho = ps.bell_initial_state(0.0)
    assert rho.is_physical()
    assert ps.concurrence_xstate(rho) == 1.0
    assert ps.concurrence_general(rho) == pytest.approx(1.0, abs=1e-10)
    s = rho.project(dicke_params())
    assert s.rho_u == pytest.approx(0.5)
    assert s.rho_ss == 0.0


def test_geometry():
    assert ps.collective_damping(1e-4, 0.3) == pytest.approx(1.0, abs=1e-6)
    assert ps.collective_damping(math.pi, 0.0) == pytest.approx(
        -3.0 / (2.0 * math.pi**2), abs=1e-12
    )


def test_fast_path_matches_oracle():
    p = dicke_params(dphi=math.pi)
    rho0 = ps.bell_initial_state(p.phi_b)
    L = ps.build_liouvillian(p)
    for t in (0.5, 2.0):
        fast = ps.evolve_populations(p, rho0.project(p), t)
        exact = L.evolve(rho0, t).project(p)
        assert fast.rho_ee == pytest.approx(exact.rho_ee, abs=1e-10)
        assert fast.rho_u == pytest.approx(exact.rho_u, abs=1e-10)

    c_fast = ps.correlation(p, rho0, 0.7, 1.4)
    c_oracle = L.weighted_correlation(L.evolve(rho0, 0.7), 0.7)
    assert abs(c_fast - c_oracle) < 1e-10


def test_spectra():
    p = dicke_params()
    rho0 = ps.bell_initial_state(p.phi_b)
    assert ps.physical_spectrum(p, rho0, 20.0, 0.0) == 0.0
    s1 = ps.physical_spectrum(p, rho0, 20.0, 1.0)
    assert s1 > 0.0
    grid = ps.physical_spectrum_grid(p, rho0, [-20.0, 20.0], [0.0, 0.5, 1.0])
    vals = np.asarray(grid.values)
    assert vals.shape == (2, 3)
    assert vals[1, 2] == pytest.approx(s1, rel=2e-2)  # same point, default steps differ

    state = ps.evolve_populations(p, rho0.project(p), 1.0)
    qs = ps.line_shape_spectrum(p, state, 20.0)
    closed = ps.analytic_dicke_spectrum(p, state, 20.0)
    assert qs == pytest.approx(closed, rel=0.03)
    bb = ps.broadband_spectrum(p, rho0, 20.0, 4.0)
    assert bb == pytest.approx(qs, rel=0.05)


def test_holes_and_esd():
    p = dicke_params(dphi=math.pi)
    rho0 = ps.bell_initial_state(p.phi_b)
    omegas = [17.0 + 0.2 * k for k in range(31)]
    times = [0.05 * k for k in range(61)]
    grid = ps.line_shape_grid(p, rho0, omegas, times)
    holes = ps.detect_hole(grid, 20.0)
    assert holes and holes[0].t_start < 1.5

    esd = ps.esd_times(p, rho0, 10.0)
    assert len(esd.death_times) == 1
    assert len(esd.revival_times) == 1
    assert esd.steady_value > 0.5


def test_steady_state_phase_flip():
    base = dict(omega12=20.0, n_photons=0.5, m_abs=SQ75, gamma_d=2.0)
    plus = ps.steady_state(ps.SystemParams(gamma12=0.5, **base))
    minus = ps.steady_state(ps.SystemParams(gamma12=-0.5, **base))
    assert abs(plus.rho_eg) == pytest.approx(abs(minus.rho_eg), abs=1e-12)
    assert plus.rho_eg.real == pytest.approx(-minus.rho_eg.real, abs=1e-12)


def test_figure_table_and_scan(tmp_path):
    figs = ps.figure_params("fig9")
    assert set(figs) == {"gneg", "gpos"}
    with pytest.raises(KeyError):
        ps.figure_params("fig1")

    cfg = """{
      "dicke": true, "gamma12": 1.0, "omega12": 20.0, "n_photons": 0.5,
      "m_abs": 0.8660254037844386, "gamma_d": 2.0,
      "t_max": 1.0, "t_step": 0.1,
      "products": ["populations", "steady"],
      "prefix": "smoke", "out_dir": "%s"
    }""" % tmp_path.as_posix()
    files = ps.run_scan_config(cfg)
    assert "smoke_populations.csv" in files
    assert (tmp_path / "smoke_meta.json").exists()
