import cmath
import math

import numpy as np
import pytest

import nrange

A1 = np.array([[6 + 1j, 0, 0.5], [-4, -3 - 6j, 0]])
TALL = np.array([[5j, 1, 0], [0, 0, 1], [0, 0, 0], [1, 2, 3]])
SIGMA_A1 = (8.729218825364361, 4.695821408327243)


def test_singular_values_match_frozen_values():
    assert nrange.singular_values(A1) == pytest.approx(SIGMA_A1, rel=1e-13)


def test_w_is_spectral_norm_disc():
    r = nrange.w_disc(A1)
    assert r.kind == "disc"
    assert r.outer_radius == pytest.approx(SIGMA_A1[0], rel=1e-13)
    assert r.contains(8.7 * cmath.exp(0.4j))
    assert not r.contains(8.8)


def test_boundary_witness_attains_radius():
    x, y, value = nrange.boundary_witness(A1, 1.1)
    x, y = np.array(x), np.array(y)
    assert np.vdot(y, A1 @ x) == pytest.approx(value, abs=1e-12)
    assert value == pytest.approx(SIGMA_A1[0] * cmath.exp(1.1j), abs=1e-10)


def test_monte_carlo_stays_inside():
    assert nrange.mc_rect_sup(A1, 2000, seed=3) <= SIGMA_A1[0] + 1e-12
    assert nrange.power_sigma_max(A1) == pytest.approx(SIGMA_A1[0], rel=1e-10)


def test_wnorm_disc_and_domain_error():
    b = 2 * np.ones((2, 3)) / math.sqrt(6)
    r = nrange.wnorm_disc(A1, b)
    assert r.kind == "disc"
    assert r.outer_radius == pytest.approx(abs(-0.1020620726159658 - 1.0206207261596576j) + 8.398288516120411)
    with pytest.raises(nrange.DomainError):
        nrange.wnorm_disc(A1, 0.1 * b)


def test_field_of_values_of_normal_matrix_is_hull():
    curve = nrange.fov_boundary(np.diag([1, 1j, -1]), 360)
    assert len(curve["angles"]) == 360
    assert max(curve["support"]) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        nrange.fov_region(A1)


def test_projector_ranges_nest():
    h = np.vstack([np.zeros((1, 3)), np.eye(3)])
    lower = nrange.w_lower(TALL, h, 360)
    higher = nrange.w_higher(TALL, h, 360)
    assert np.all(lower["support"] <= higher["support"] + 1e-9)


def test_vector_ellipse_zero_focus_is_half_axis_disc():
    r = nrange.vector_ellipse(np.array([0, 3, 4j]))
    assert r.kind == "disc"
    assert r.outer_radius == pytest.approx(2.5)


def test_rank_k_range_and_witness():
    a = np.array([[1, 2j, 0], [0, 1, -1], [3, 0, 1j], [1, 1, 1]])
    assert nrange.rank_k_regime(4, 3, 2) == "low"
    region = nrange.phi_k_region(a, 2)
    sigma = nrange.singular_values(a)
    assert region.outer_radius == pytest.approx(sigma[1])
    z = 0.5 * sigma[1] * cmath.exp(0.7j)
    assert nrange.phi_k_contains(a, 2, z)
    w = nrange.find_witness(a, 2, z, seed=5)
    assert w["success"]
    m, n = w["m"], w["n"]
    assert np.allclose(m.conj().T @ a @ n, z * np.eye(2), atol=1e-7)


def test_region_json_round_trip():
    r = nrange.phi_k_region(np.array([[2, 0], [0, 1], [0, 0]]), 2)
    back = nrange.Region.from_json(r.to_json("phik"))
    assert back.kind == r.kind
    assert back.outer_radius == r.outer_radius
    with pytest.raises(nrange.ParseError):
        nrange.Region.from_json("{")


def test_verify_suite_passes():
    results = nrange.verify("prop7")
    assert results and all(r["passed"] for r in results)
    with pytest.raises(nrange.InputError):
        nrange.verify("prop99")
