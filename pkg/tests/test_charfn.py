import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st

from qwigner.charfn import NotReducing, char_function, char_function_blocks, char_function_many, check_reducing
from qwigner.core import PAULI, DimensionMismatch, combine, maximally_mixed, random_hermitian, random_state, validate_tuple


def expm_oracle(A, rho, xi):
    return np.trace(rho @ scipy.linalg.expm(1j * combine(A, xi)))


def test_pauli_closed_form():
    A = validate_tuple(PAULI)
    xi = np.array([0.3, -1.2, 0.7])
    assert char_function(A, maximally_mixed(2), xi) == pytest.approx(np.cos(np.linalg.norm(xi)), abs=1e-14)


def test_commuting_closed_form():
    A = validate_tuple([np.diag([0.0, 1.0]), np.diag([0.0, 2.0])])
    rho = np.diag([0.25, 0.75])
    xi = np.array([0.4, 1.1])
    want = 0.25 + 0.75 * np.exp(1j * (xi[0] + 2 * xi[1]))
    assert abs(char_function(A, rho, xi) - want) < 1e-14


@st.composite
def systems(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    n, d = draw(st.integers(1, 3)), draw(st.integers(1, 5))
    rng = np.random.default_rng(seed)
    return validate_tuple([random_hermitian(d, rng) for _ in range(n)]), random_state(d, rng), rng


@given(systems())
def test_matches_matrix_exponential(data):
    A, rho, rng = data
    xi = 2 * rng.standard_normal(A.n)
    assert abs(char_function(A, rho, xi) - expm_oracle(A, rho, xi)) < 1e-10


@given(systems())
def test_origin_symmetry_and_bound(data):
    A, rho, rng = data
    xis = 3 * rng.standard_normal((30, A.n))
    f = char_function_many(A, rho, xis)
    assert abs(char_function(A, rho, np.zeros(A.n)) - 1) < 1e-12
    assert np.all(np.abs(f) <= 1 + 1e-12)
    assert np.allclose(char_function_many(A, rho, -xis), f.conj(), atol=1e-12)


@given(systems())
def test_batched_equals_single(data):
    A, rho, rng = data
    xis = rng.standard_normal((7, A.n))
    single = np.array([char_function(A, rho, x) for x in xis])
    assert np.allclose(char_function_many(A, rho, xis, chunk=3), single, atol=1e-13)


def test_batched_shape_check():
    A = validate_tuple(PAULI)
    with pytest.raises(DimensionMismatch):
        char_function_many(A, maximally_mixed(2), np.zeros((4, 2)))


def block_system(seed):
    rng = np.random.default_rng(seed)
    ops = []
    for _ in range(2):
        a = np.zeros((4, 4), complex)
        a[:2, :2] = random_hermitian(2, rng)
        a[2:, 2:] = random_hermitian(2, rng)
        ops.append(a)
    q = [np.diag([1, 1, 0, 0]).astype(complex), np.diag([0, 0, 1, 1]).astype(complex)]
    return validate_tuple(ops), q, rng


def test_blocks_ignore_offdiagonal_state():
    A, q, rng = block_system(11)
    rho = random_state(4, rng)
    rho_diag = q[0] @ rho @ q[0] + q[1] @ rho @ q[1]
    for xi in rng.standard_normal((20, 2)):
        full = char_function(A, rho, xi)
        assert abs(full - char_function(A, rho_diag, xi)) < 1e-12
        assert abs(full - char_function_blocks(A, rho, q, xi)) < 1e-12


def test_non_reducing_projectors_rejected():
    A = validate_tuple(PAULI)
    with pytest.raises(NotReducing):
        check_reducing(A, [np.diag([1, 0]), np.diag([0, 1])])
    with pytest.raises(NotReducing):
        check_reducing(A, [np.eye(2), np.eye(2)])
