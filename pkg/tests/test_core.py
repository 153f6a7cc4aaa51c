import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwigner.core import (
    PAULI,
    DimensionMismatch,
    NotHermitian,
    NotNormalized,
    NotPsd,
    Tolerances,
    combine,
    eigendecompose,
    expectation_tuple,
    maximally_mixed,
    pencil,
    random_hermitian,
    random_state,
    validate_state,
    validate_tuple,
)
from qwigner.geometry import in_jnr_hull


def test_validate_symmetrizes_within_tolerance():
    a = np.array([[1.0, 2.0 + 1e-11], [2.0, 0.0]])
    A = validate_tuple([a])
    assert np.array_equal(A.ops[0], A.ops[0].conj().T)
    assert A.ops[0][0, 1] == pytest.approx(2.0 + 5e-12, abs=1e-15)


def test_validated_tuple_is_read_only():
    A = validate_tuple(PAULI)
    with pytest.raises(ValueError):
        A.ops[0, 0, 0] = 3


def test_not_hermitian_reports_deviation():
    with pytest.raises(NotHermitian) as info:
        validate_tuple([np.array([[0, 1], [0, 0]])])
    assert info.value.max_deviation == pytest.approx(1.0)


def test_loose_tolerance_accepts():
    a = np.array([[0, 1 + 1e-6], [1, 0]])
    with pytest.raises(NotHermitian):
        validate_tuple([a])
    validate_tuple([a], Tolerances(hermiticity=1e-5))


@pytest.mark.parametrize(
    "raw",
    [[], [np.eye(2), np.eye(3)], [np.ones((2, 3))], [np.ones(4)]],
)
def test_shape_errors(raw):
    with pytest.raises(DimensionMismatch):
        validate_tuple(raw)


def test_state_errors():
    with pytest.raises(NotNormalized):
        validate_state(np.eye(2))
    with pytest.raises(NotPsd):
        validate_state(np.diag([1.5, -0.5]))
    with pytest.raises(DimensionMismatch):
        validate_state(np.eye(2) / 2, d=3)
    rho = validate_state(np.diag([0.25, 0.75]))
    assert np.allclose(rho, np.diag([0.25, 0.75]))


def test_transform_and_mix():
    A = validate_tuple(PAULI)
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    B = A.transform(h)
    # Hadamard swaps x and z and flips y
    assert np.allclose(B.ops[0], PAULI[2])
    assert np.allclose(B.ops[2], PAULI[0])
    assert np.allclose(B.ops[1], -PAULI[1])
    C = A.mix(np.eye(3)[[1, 0, 2]])
    assert np.allclose(C.ops[0], PAULI[1])


def test_combine_shape_check():
    A = validate_tuple(PAULI)
    with pytest.raises(DimensionMismatch):
        combine(A, [1.0, 2.0])


def test_pauli_pencil_spectrum():
    A = validate_tuple(PAULI)
    pe = pencil(A, [3.0, 0.0, 4.0])
    assert np.allclose(pe.eigenvalues, [-5, 5])
    assert len(pe.clusters) == 2


def test_degenerate_cluster():
    pe = eigendecompose(np.diag([1.0, 1.0 + 1e-12, 3.0]))
    assert [len(c) for c in pe.clusters] == [2, 1]
    assert np.allclose(pe.projectors[0], np.diag([1, 1, 0]))
    assert pe.gaps()[0] == pytest.approx(1e-12, abs=1e-13)


def test_expectation_tuple_requires_unit_vector():
    A = validate_tuple(PAULI)
    with pytest.raises(NotNormalized):
        expectation_tuple(A, [1.0, 1.0])
    assert np.allclose(expectation_tuple(A, [1.0, 0.0]), [0, 0, 1])


def test_expectation_tuple_matches_gradient_of_eigenvalue():
    """Hellmann-Feynman: the expectation tuple of a simple eigenvector is the gradient of its eigenvalue."""
    rng = np.random.default_rng(5)
    A = validate_tuple([random_hermitian(4, rng) for _ in range(3)])
    xi = rng.standard_normal(3)
    pe = pencil(A, xi)
    h = 1e-6
    for mu in range(4):
        grad = np.array(
            [(pencil(A, xi + h * e).eigenvalues[mu] - pencil(A, xi - h * e).eigenvalues[mu]) / (2 * h) for e in np.eye(3)]
        )
        assert np.max(np.abs(grad - expectation_tuple(A, pe.eigenvectors[:, mu]))) < 1e-6


@st.composite
def tuples(draw, n=None, d=None):
    seed = draw(st.integers(0, 2**32 - 1))
    n = n or draw(st.integers(1, 3))
    d = d or draw(st.integers(1, 5))
    rng = np.random.default_rng(seed)
    return validate_tuple([random_hermitian(d, rng) for _ in range(n)]), random_state(d, rng), rng


@given(tuples())
def test_spectral_mean(data):
    A, rho, rng = data
    xi = rng.standard_normal(A.n)
    pe = pencil(A, xi)
    total = sum(v * np.trace(rho @ p).real for v, p in zip(pe.cluster_values, pe.projectors))
    assert abs(total - np.trace(rho @ combine(A, xi)).real) < 1e-10


@given(tuples(), st.sampled_from([2.0, 10.0]))
def test_homogeneity(data, lam):
    A, rho, rng = data
    xi = rng.standard_normal(A.n)
    pe, pl = pencil(A, xi), pencil(A, lam * xi)
    assert np.allclose(pl.eigenvalues, lam * pe.eigenvalues, atol=1e-10 * lam)
    if len(pe.clusters) == len(pl.clusters):
        for p, q in zip(pe.projectors, pl.projectors):
            assert np.max(np.abs(p - q)) < 1e-6


@given(tuples(n=2, d=4))
def test_eigenvector_expectations_inside_numerical_range(data):
    A, rho, rng = data
    pe = pencil(A, rng.standard_normal(2))
    pts = [expectation_tuple(A, v) for v in pe.eigenvectors.T]
    assert np.all(in_jnr_hull(A, pts, slack=1e-8))


def test_maximally_mixed():
    assert np.allclose(maximally_mixed(4), np.eye(4) / 4)
