import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwigner.catalog import make
from qwigner.core import PAULI, DegreeTooHigh, DimensionMismatch, NotPsd, random_hermitian, validate_tuple
from qwigner.moments import (
    DegenerateSpectrum,
    MomentTable,
    bmv_mixed_moment,
    bmv_triple_counterexample,
    check_multinomial,
    commutator_orthogonality,
    hermitian_basis_vectors,
    incomp_trace_identity,
    info_complete,
    multi_indices,
    normal_complete,
    quantize,
    real_rank,
    weyl_moment,
    weyl_moment_bruteforce,
    weyl_span_dimension,
)


def rand_tuple(seed, n, d, real=False):
    rng = np.random.default_rng(seed)
    return validate_tuple([random_hermitian(d, rng, real) for _ in range(n)])


def test_multi_indices_count():
    from math import comb

    for n in range(1, 4):
        for R in range(6):
            idx = list(multi_indices(n, R))
            assert len(idx) == comb(R + n - 1, n - 1) == len(set(idx))
            assert all(sum(r) == R and min(r) >= 0 for r in idx)


def test_low_degree_moments():
    A = rand_tuple(1, 2, 3)
    a, b = A.ops
    assert np.allclose(weyl_moment(A, (0, 0)), np.eye(3))
    assert np.allclose(weyl_moment(A, (1, 0)), a)
    assert np.allclose(weyl_moment(A, (1, 1)), (a @ b + b @ a) / 2)
    want = (a @ a @ b + a @ b @ a + b @ a @ a) / 3
    assert np.allclose(weyl_moment(A, (2, 1)), want)


@pytest.mark.parametrize("seed", range(3))
def test_recursion_equals_bruteforce(seed):
    A = rand_tuple(seed, 3, 3)
    table = MomentTable(A, 5)
    for R in range(6):
        for r in multi_indices(3, R):
            assert np.max(np.abs(table[r] - weyl_moment_bruteforce(A, r))) < 1e-12 * max(1, 3.0**R)


def test_moments_are_hermitian():
    A = rand_tuple(4, 2, 4)
    for _, m in MomentTable(A, 6).items():
        assert np.array_equal(m, m.conj().T)


def test_degree_guards():
    A = rand_tuple(0, 2, 2)
    t = MomentTable(A, 3)
    with pytest.raises(DegreeTooHigh):
        t[(2, 2)]
    with pytest.raises(DimensionMismatch):
        t[(1, 1, 1)]
    with pytest.raises(DegreeTooHigh):
        quantize(A, {(6, 5): 1.0})


@given(st.integers(0, 2**32 - 1), st.integers(1, 5))
def test_multinomial_identity(seed, R):
    A = rand_tuple(seed, 3, 3)
    xi = np.random.default_rng(seed + 1).standard_normal(3)
    scale = np.linalg.norm(np.tensordot(xi, A.ops, axes=1), 2) ** R
    assert check_multinomial(A, xi, R) <= 1e-9 * scale


def test_quantize_linear_and_pauli_square():
    A = validate_tuple(PAULI)
    # a1^2 + a2^2 + a3^2 quantizes to 3 I
    q = quantize(A, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    assert np.allclose(q, 3 * np.eye(2))
    # a1 a2 is symmetrized to (s1 s2 + s2 s1)/2 = 0
    assert np.allclose(quantize(A, {(1, 1, 0): 1}), 0)
    assert np.allclose(quantize(A, {(1, 0, 0): 2, (0, 0, 0): -1}), 2 * PAULI[0] - np.eye(2))


@pytest.mark.parametrize("seed", range(5))
def test_commutator_orthogonal_to_moments(seed):
    A = rand_tuple(seed, 2, 4)
    scale = np.linalg.norm(A.ops[0], 2) * np.linalg.norm(A.ops[1], 2)
    assert commutator_orthogonality(*A.ops, R_max=6) <= 1e-9 * scale**4


def test_basis_vectors_are_isometric():
    A = rand_tuple(2, 2, 4)
    x, y = A.ops
    vx, vy = hermitian_basis_vectors(np.array([x, y]))
    assert np.dot(vx, vy) == pytest.approx(np.trace(x @ y).real)


def test_real_rank():
    assert real_rank(PAULI) == 3
    assert real_rank([PAULI[0], 2 * PAULI[0], np.zeros((2, 2))]) == 1
    assert real_rank(np.concatenate([PAULI, [np.eye(2)]])) == 4


def test_span_dimensions():
    assert weyl_span_dimension(validate_tuple(PAULI)) == 4
    assert info_complete(validate_tuple(PAULI))
    assert weyl_span_dimension(validate_tuple(PAULI[:2])) == 3
    assert not info_complete(validate_tuple(PAULI[:2]))
    hits = sum(weyl_span_dimension(rand_tuple(s, 2, 4)) == 10 for s in range(10))
    assert hits >= 9
    for d in (5, 6):
        assert weyl_span_dimension(rand_tuple(d, 2, d)) == d * (d + 1) // 2


def test_span_dimension_real_and_complex_triples():
    for s in range(5):
        assert weyl_span_dimension(rand_tuple(s, 3, 3, real=True)) <= 6
    assert weyl_span_dimension(rand_tuple(0, 3, 3)) == 9


@given(st.integers(0, 2**32 - 1))
def test_span_dimension_basis_invariant(seed):
    A = rand_tuple(seed, 2, 3)
    q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((3, 3)) + 1j)
    assert weyl_span_dimension(A) == weyl_span_dimension(A.transform(q))


def test_incomplete_pair_trace_identity():
    A = rand_tuple(7, 2, 4)
    scale = np.linalg.norm(A.ops[0], 2) * np.linalg.norm(A.ops[1], 2)
    res = incomp_trace_identity(*A.ops, samples=20, rng=np.random.default_rng(0))
    assert res <= 1e-9 * scale * 1e3
    # a generic non-moment pair breaks the identity
    rng = np.random.default_rng(1)
    P = [(random_hermitian(4, rng), random_hermitian(4, rng))]
    assert incomp_trace_identity(*A.ops, samples=0, rng=rng, P=P) > 1e-3


def test_normal_complete():
    A = rand_tuple(3, 2, 4)
    r = normal_complete(*A.ops)
    assert r.complete and r.min_overlap > 1e-9
    # shared eigenvector: diagonal A1, A2 with a common basis vector
    b = np.diag([1.0, 2.0, 3.0])
    c = np.zeros((3, 3))
    c[0, 0] = 5
    c[1:, 1:] = [[0, 1], [1, 0]]
    r = normal_complete(b, c)
    assert not r.complete
    i, j = r.witness
    vb, vc = np.linalg.eigh(b)[1], np.linalg.eigh(c)[1]
    assert abs(np.vdot(vb[:, i], vc[:, j])) < 1e-12
    with pytest.raises(DegenerateSpectrum):
        normal_complete(np.diag([1.0, 1.0, 2.0]), b)


def test_bmv():
    assert bmv_triple_counterexample() == pytest.approx(-0.25, abs=1e-12)
    with pytest.raises(NotPsd):
        bmv_mixed_moment(np.diag([1.0, -1.0]), np.eye(2), 1, 1)
    rng = np.random.default_rng(0)
    g = [rng.standard_normal((3, 3)) for _ in range(2)]
    a, b = (x @ x.T for x in g)
    assert bmv_mixed_moment(a, b, 2, 3) >= -1e-10


def test_catalog_dihedral_is_not_informationally_complete():
    ex = make("dihedral-5")
    assert weyl_span_dimension(ex.tuple) <= 15
