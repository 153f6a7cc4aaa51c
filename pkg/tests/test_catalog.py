import numpy as np
import pytest
from scipy import integrate

from qwigner.catalog import (
    BranchAmbiguity,
    UnknownExample,
    bloch_state,
    catalog,
    dihedral_group,
    dihedral_multiplet,
    dihedral_twirl,
    make,
    nearly_commuting,
    qubit2_gaussian_reference,
    qubit2_reference,
    qubit3_radial,
    qubit_wigner_state_factor,
    regular_part,
    twirl_rank,
)


@pytest.mark.parametrize("name", [n for n in catalog() if "<" not in n] + ["dihedral-7"])
def test_every_example_builds(name):
    ex = make(name)
    assert ex.tuple.d == ex.state.shape[0]
    assert abs(np.trace(ex.state) - 1) < 1e-12


def test_unknown_example():
    with pytest.raises(UnknownExample):
        make("nope")
    with pytest.raises(UnknownExample):
        make("dihedral-x")


def test_seeded_examples_are_reproducible():
    a = make("random-pair", seed=5).tuple.ops
    b = make("random-pair", seed=5).tuple.ops
    c = make("random-pair", seed=6).tuple.ops
    assert np.array_equal(a, b) and not np.array_equal(a, c)


def test_nearly_commuting_structure():
    a1, a2 = nearly_commuting(0.05)
    assert np.allclose(np.diag(a1), [-1, 1, 1, -1, 0])
    assert np.allclose(np.diag(a2), [-1, -1, 1, 1, 2])
    # no coupling from the apex to the bottom corners
    assert a1[4, 0] == 0 and a1[4, 1] == 0
    assert np.max(np.abs(a1 - np.diag(np.diag(a1)))) <= 0.05


@pytest.mark.parametrize("p", [3, 4, 5, 7])
def test_dihedral_group_and_multiplet(p):
    group = dihedral_group(p)
    assert len(group) == 2 * p
    for u, r in group:
        assert np.allclose(u @ u.T, np.eye(p)) and np.allclose(r @ r.T, np.eye(2))
    ex = dihedral_multiplet(p)
    for u, r in group:
        lhs = np.einsum("ij,kjl,lm->kim", u.T, ex.tuple.ops, u)
        assert np.allclose(lhs, np.tensordot(r, ex.tuple.ops, axes=1), atol=1e-12)
    assert twirl_rank(p) == 2 * p


def test_twirl_is_idempotent():
    rng = np.random.default_rng(0)
    x = rng.standard_normal((5, 5))
    y = dihedral_twirl(5, x + x.T)
    assert np.allclose(dihedral_twirl(5, y), y)


def test_qubit3_radial_mass_and_limit():
    e = 0.02
    mass, _ = integrate.quad(lambda s: 4 * np.pi * s * s * qubit3_radial(s, e), 0, 3, points=[1])
    assert mass == pytest.approx(2, abs=1e-8)
    assert qubit3_radial(0.0, e) == pytest.approx(qubit3_radial(1e-5, e), rel=1e-6)


def test_qubit2_references():
    for e in (1e-2, 1e-3):
        m1, _ = integrate.quad(lambda r: 2 * np.pi * r * qubit2_reference(r, e), 0, 1, limit=400)
        m2, _ = integrate.quad(lambda r: 2 * np.pi * r * qubit2_reference(r, e), 1, np.inf, limit=400)
        assert m1 + m2 == pytest.approx(1, abs=1e-8)
    # inside the disc both regularizations converge to the regular part
    assert qubit2_reference(0.5, 1e-4) == pytest.approx(regular_part(0.5), rel=1e-3)
    assert qubit2_gaussian_reference(0.5, 1e-3) == pytest.approx(regular_part(0.5), rel=2e-2)
    with pytest.raises(ValueError):
        regular_part(1.0)


def test_qubit2_branch_guard():
    # eps = 0 puts z = r^2 - 1 on the negative axis for r < 1
    with pytest.raises(BranchAmbiguity):
        qubit2_reference(0.5, 0.0)


def test_state_factor():
    assert qubit_wigner_state_factor([1, 0, 0], [0.5, 0, 0]) == pytest.approx(0.75)
    assert np.allclose(bloch_state([0, 0, 1]), np.diag([1, 0]))
    with pytest.raises(ValueError):
        qubit_wigner_state_factor([0, 0, 0], [1, 1, 0])


@pytest.mark.parametrize("p", [4, 6, 8])
def test_twirl_rank_even_polygons(p):
    # exact-zero images carry roundoff that must not be counted
    assert twirl_rank(p) == 2 * p


def test_qubit3_moments():
    e = 0.02
    m2, _ = integrate.quad(lambda s: 4 * np.pi * s**2 * qubit3_radial(s, e), 0, 3, points=[1])
    assert m2 == pytest.approx(2, abs=1e-6)
    m4 = [integrate.quad(lambda s: 4 * np.pi * s**4 * qubit3_radial(s, e), 0, 3, points=[1])[0] for e in (1e-2, 1e-3)]
    # 6 + O(eps): the Gaussian adds 12 eps
    assert m4[0] == pytest.approx(6 + 12e-2, abs=1e-6)
    assert m4[1] == pytest.approx(6, abs=2e-2)


def test_qubit2_reference_origin_limit():
    assert qubit2_reference(0.0, 1e-6) == pytest.approx(-1 / (2 * np.pi), rel=1e-5)
    assert regular_part(0.0) == pytest.approx(-1 / (2 * np.pi))


def _pauli3_grids(eps, lo_shift=0.0):
    import warnings

    from qwigner.core import PAULI, maximally_mixed, validate_tuple
    from qwigner.grid import GridSpec, compute_wigner_grid

    A = validate_tuple(PAULI)
    spec = GridSpec([-2, -2, -2 + lo_shift], [2, 2, 2 + lo_shift], 64, eps)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g_i = compute_wigner_grid(A, maximally_mixed(2), spec)
        g_z = compute_wigner_grid(A, bloch_state([0, 0, 1]), spec)
    return spec, 2 * g_i.values, g_z


def test_state_factor_grid_literal():
    """Polarized-qubit grid against the state factor times the rho = I grid, 3% of peak at eps = 0.01."""
    spec, w_i, g_z = _pauli3_grids(0.01)
    lit = qubit_wigner_state_factor(spec.points(), [0, 0, 1]) * w_i
    rel = float(np.max(np.abs(g_z.values - lit)) / g_z.peak)
    assert rel <= 0.03, f"max error {rel:.3g} of peak"


def test_state_factor_grid_with_smearing_term():
    """Exact smeared identity: W_rho,eps = (1 + r.a)/2 W_I,eps + eps r.grad W_I,eps."""
    eps, dz = 0.01, 1e-4
    spec, w_i, g_z = _pauli3_grids(eps)
    _, w_up, _ = _pauli3_grids(eps, dz)
    _, w_dn, _ = _pauli3_grids(eps, -dz)
    grad_z = (w_up - w_dn) / (2 * dz)
    pred = qubit_wigner_state_factor(spec.points(), [0, 0, 1]) * w_i + eps * grad_z
    assert np.max(np.abs(g_z.values - pred)) <= 1e-6 * g_z.peak


def test_dihedral7_covariance():
    from qwigner.core import random_state
    from qwigner.grid import auto_spec, compute_wigner_grid, interpolate

    ex = dihedral_multiplet(7)
    rho = random_state(7, np.random.default_rng(1))
    u, r = ex.extra["group"][2]
    spec = auto_spec(ex.tuple, 256, 0.01, pad=0.3)
    g0 = compute_wigner_grid(ex.tuple, rho, spec)
    g1 = compute_wigner_grid(ex.tuple, u @ rho @ u.T, spec)
    assert np.max(np.abs(g1.values - interpolate(g0, spec.points() @ r))) <= 0.02 * g0.peak
