"""Finite-dimensional angle space: operators, commutator, embeddings."""

import math

import numpy as np
import pytest

from intangle import continuum, finite_dim

PI = math.pi
RNG = np.random.default_rng(20240814)

# Embedding convergence regression values from the first validated run
# (lambda = -0.5); the gap to the continuum bound closes like 1/L.
EMBED_RS = {50: 3.4490189996238603, 100: 3.5987085987168776,
            200: 3.676003270701417, 400: 3.7152724136690543}


def basis_vector(space, m_index):
    v = np.zeros(space.dimension, dtype=complex)
    v[m_index] = 1.0
    return finite_dim.FiniteState(space, v)


def test_space_validation():
    for bad in (0, -3, 1.5):
        with pytest.raises((ValueError, TypeError)):
            finite_dim.FiniteSpace(L=bad)
    space = finite_dim.FiniteSpace(L=4)
    assert space.dimension == 9
    assert space.thetas()[0] == -PI
    assert np.array_equal(space.ms(), np.arange(-4, 5))


def test_eigenstates_orthonormal_and_complete():
    space = finite_dim.FiniteSpace(L=6)
    d = space.dimension
    frame = np.column_stack([finite_dim.angle_eigenstate(space, n).coeffs
                             for n in range(d)])
    gram = frame.conj().T @ frame
    assert np.max(np.abs(gram - np.eye(d))) < 1e-12
    resolution = frame @ frame.conj().T
    assert np.max(np.abs(resolution - np.eye(d))) < 1e-12


def test_eigenstate_magnitudes_and_index():
    space = finite_dim.FiniteSpace(L=1)
    state = finite_dim.angle_eigenstate(space, 1)
    assert np.allclose(np.abs(state.coeffs), 1.0 / math.sqrt(3.0), atol=1e-15)
    for bad in (-1, 3):
        with pytest.raises(IndexError):
            finite_dim.angle_eigenstate(space, bad)


def test_angle_operator_spectrum():
    space = finite_dim.FiniteSpace(L=7)
    phi = finite_dim.angle_operator(space)
    assert np.max(np.abs(phi - phi.conj().T)) < 1e-13
    eigs = np.linalg.eigvalsh(phi)
    assert np.allclose(eigs, np.sort(space.thetas()), atol=1e-10)
    assert math.isclose(np.trace(phi).real, float(np.sum(space.thetas())),
                        rel_tol=0, abs_tol=1e-9)


def test_angle_operator_returns_copy():
    space = finite_dim.FiniteSpace(L=3)
    finite_dim.angle_operator(space)[0, 0] = 99.0
    assert finite_dim.angle_operator(space)[0, 0] != 99.0


def test_angle_eigenstate_expectation():
    space = finite_dim.FiniteSpace(L=9)
    phi = finite_dim.angle_operator(space)
    for n in (0, 4, 18):
        v = finite_dim.angle_eigenstate(space, n).coeffs
        expect = np.vdot(v, phi @ v).real
        assert math.isclose(expect, space.thetas()[n], rel_tol=0,
                            abs_tol=1e-11)


def test_lz_operator():
    space = finite_dim.FiniteSpace(L=5)
    lz = finite_dim.lz_operator(space)
    assert np.count_nonzero(lz - np.diag(np.diagonal(lz))) == 0
    assert np.trace(lz) == 0.0
    assert np.array_equal(np.diagonal(lz), space.ms().astype(float))


def test_commutator_modes_agree():
    for L in (5, 20, 50):
        space = finite_dim.FiniteSpace(L=L)
        direct = finite_dim.commutator(space, "direct")
        closed = finite_dim.commutator(space, "closed_form")
        assert np.max(np.abs(direct - closed)) < 1e-10
        assert np.max(np.abs(np.diagonal(direct))) == 0.0
        assert np.max(np.abs(np.diagonal(closed))) == 0.0


def test_commutator_mode_validation():
    space = finite_dim.FiniteSpace(L=3)
    with pytest.raises(ValueError):
        finite_dim.commutator(space, "spectral")


def test_commutator_column_through_m0():
    # acting on the flat state: entry m picks up i*(-1)**m/m as L grows
    space = finite_dim.FiniteSpace(L=400)
    phi = finite_dim.angle_operator(space)
    col = phi[:, space.L]
    ms = space.ms()
    sel = (np.abs(ms) <= 20) & (ms != 0)
    expected = 1j * (-1.0) ** ms[sel] / ms[sel]
    dev = np.abs(col[sel] - expected)
    # the complex deviation is pi/D per entry; magnitudes converge faster
    assert np.max(dev) < 2.0 * PI / space.dimension
    assert np.max(np.abs(np.abs(col[sel]) - np.abs(expected))) < 5e-4
    small = finite_dim.FiniteSpace(L=200)
    col_small = finite_dim.angle_operator(small)[:, small.L]
    dev_small = abs(col_small[small.L + 5] - 1j * (-1.0) ** 5 / 5)
    dev_large = abs(col[space.L + 5] - 1j * (-1.0) ** 5 / 5)
    assert 1.7 < dev_small / dev_large < 2.3


def test_rs_report_lz_eigenstate():
    space = finite_dim.FiniteSpace(L=6)
    rep = finite_dim.rs_report(basis_vector(space, 2))
    assert rep.dlz == 0.0
    assert rep.rs_bound < 1e-14
    assert rep.product < 1e-12


def test_rs_report_angle_eigenstate():
    space = finite_dim.FiniteSpace(L=12)
    rep = finite_dim.rs_report(finite_dim.angle_eigenstate(space, 3))
    assert rep.dphi < 1e-6
    assert rep.rs_bound < 1e-6


def test_rs_inequality_random_states():
    for L in (5, 20, 50):
        space = finite_dim.FiniteSpace(L=L)
        d = space.dimension
        for _ in range(100):
            raw = RNG.normal(size=d) + 1j * RNG.normal(size=d)
            state = finite_dim.from_coefficients(space, raw)
            rep = finite_dim.rs_report(state)
            assert rep.product >= rep.rs_bound - 1e-10


def test_state_validation():
    space = finite_dim.FiniteSpace(L=2)
    with pytest.raises(ValueError):
        finite_dim.FiniteState(space, np.ones(5, dtype=complex))
    with pytest.raises(ValueError):
        finite_dim.FiniteState(space, np.ones(4, dtype=complex))
    normalized = finite_dim.from_coefficients(space, np.ones(5))
    assert math.isclose(float(np.sum(np.abs(normalized.coeffs) ** 2)), 1.0,
                        rel_tol=1e-14)


def test_embed_flat_state_is_m0():
    space = finite_dim.FiniteSpace(L=8)
    state = finite_dim.embed_intelligent(0.0, space)
    expected = np.zeros(space.dimension)
    expected[space.L] = 1.0
    assert np.array_equal(state.coeffs.real, expected)


def test_embedding_convergence_table():
    cont = continuum.report(-0.5)
    gaps = {}
    for L, frozen in EMBED_RS.items():
        space = finite_dim.FiniteSpace(L=L)
        rep = finite_dim.rs_report(finite_dim.embed_intelligent(-0.5, space))
        assert abs(rep.rs_bound - frozen) < 1e-6
        assert rep.product >= rep.rs_bound
        gaps[L] = (cont.bound - rep.rs_bound) / cont.bound
    assert gaps[400] < 0.02
    for L in (50, 100, 200):
        assert 1.9 < gaps[L] / gaps[2 * L] < 2.05


def test_embedding_width_converges():
    cont = continuum.report(-0.5)
    err = {}
    for L in (100, 400):
        space = finite_dim.FiniteSpace(L=L)
        rep = finite_dim.rs_report(finite_dim.embed_intelligent(-0.5, space))
        err[L] = abs(rep.dphi - cont.delta_phi)
    assert err[400] < err[100]


def test_embedding_approx_bound_tracks_rs_bound():
    space = finite_dim.FiniteSpace(L=400)
    rep = finite_dim.rs_report(finite_dim.embed_intelligent(-0.5, space))
    assert abs(rep.approx_bound - rep.rs_bound) / rep.rs_bound < 0.01


def test_embed_gaussian_side():
    space = finite_dim.FiniteSpace(L=60)
    state = finite_dim.embed_intelligent(1.0, space)
    total = float(np.sum(np.abs(state.coeffs) ** 2))
    assert math.isclose(total, 1.0, rel_tol=1e-12)
    rep = finite_dim.rs_report(state)
    assert rep.product >= rep.rs_bound - 1e-10
