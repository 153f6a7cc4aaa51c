"""Weyl-ordered moments, the quantization map and the trace/rank checks built on them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DegreeTooHigh,
    DimensionMismatch,
    NotPsd,
    OperatorTuple,
    QWignerError,
    validate_tuple,
)

__all__ = [
    "R_MAX",
    "DegenerateSpectrum",
    "MomentTable",
    "multi_indices",
    "weyl_moment",
    "weyl_moment_bruteforce",
    "check_multinomial",
    "quantize",
    "commutator_orthogonality",
    "hermitian_basis_vectors",
    "real_rank",
    "weyl_span_dimension",
    "info_complete",
    "incomp_trace_identity",
    "normal_complete",
    "bmv_mixed_moment",
    "bmv_triple_counterexample",
]

R_MAX = 10
RANK_RTOL = 1e-8


class DegenerateSpectrum(QWignerError, ValueError):
    pass


def multi_indices(n: int, R: int):
    """All r in N^n with |r| = R, in lexicographically descending order."""
    for cut in itertools.combinations(range(R + n - 1), n - 1):
        prev, r = -1, []
        for c in cut:
            r.append(c - prev - 1)
            prev = c
        r.append(R + n - 2 - prev)
        yield tuple(r)


class MomentTable:
    """Memoized Weyl-ordered moments of one operator tuple.

    Uses ``M^r = (1/R) sum_k r_k A_k M^(r - e_k)``: grouping the orderings by
    their first factor, a fraction ``r_k / R`` starts with ``A_k`` and the
    remainder is again a uniform average.
    """

    def __init__(self, A: OperatorTuple, max_degree: int = R_MAX):
        self.A = validate_tuple(A)
        self.max_degree = max_degree
        d = self.A.d
        self._cache = {(0,) * self.A.n: np.eye(d, dtype=complex)}

    def __getitem__(self, r) -> np.ndarray:
        r = tuple(int(x) for x in r)
        if len(r) != self.A.n or min(r) < 0:
            raise DimensionMismatch(f"bad multi-index {r} for n = {self.A.n}")
        if sum(r) > self.max_degree:
            raise DegreeTooHigh(f"degree {sum(r)} exceeds {self.max_degree}")
        try:
            return self._cache[r]
        except KeyError:
            pass
        R = sum(r)
        acc = np.zeros((self.A.d, self.A.d), dtype=complex)
        for k, rk in enumerate(r):
            if rk:
                lower = list(r)
                lower[k] -= 1
                acc += rk * (self.A.ops[k] @ self[lower])
        acc /= R
        m = (acc + acc.conj().T) / 2
        self._cache[r] = m
        return m

    def degree(self, R: int):
        """``[(r, M^r)]`` for all multi-indices of total degree R."""
        return [(r, self[r]) for r in multi_indices(self.A.n, R)]

    def items(self, max_degree: int | None = None):
        top = self.max_degree if max_degree is None else max_degree
        for R in range(top + 1):
            yield from self.degree(R)


def weyl_moment(A: OperatorTuple, r, table: MomentTable | None = None) -> np.ndarray:
    table = table or MomentTable(A)
    return table[r]


def weyl_moment_bruteforce(A: OperatorTuple, r) -> np.ndarray:
    """Average over all R! orderings of the factor word; test oracle only."""
    A = validate_tuple(A)
    word = [k for k, rk in enumerate(r) for _ in range(rk)]
    d = A.d
    acc = np.zeros((d, d), dtype=complex)
    count = 0
    for perm in itertools.permutations(word):
        m = np.eye(d, dtype=complex)
        for k in perm:
            m = m @ A.ops[k]
        acc += m
        count += 1
    return acc / count


def _multinomial(R, r):
    out = math.factorial(R)
    for rk in r:
        out //= math.factorial(rk)
    return out


def check_multinomial(A: OperatorTuple, xi, R: int, table: MomentTable | None = None) -> float:
    """``max |sum_r C(R, r) xi^r M^r - (xi.A)^R|``."""
    A = validate_tuple(A)
    xi = np.asarray(xi, dtype=float)
    table = table or MomentTable(A, max(R, 1))
    lhs = np.zeros((A.d, A.d), dtype=complex)
    for r, m in table.degree(R):
        lhs += _multinomial(R, r) * np.prod(xi ** np.array(r)) * m
    rhs = np.linalg.matrix_power(np.tensordot(xi, A.ops, axes=1), R)
    return float(np.max(np.abs(lhs - rhs)))


def quantize(A: OperatorTuple, poly: dict, table: MomentTable | None = None) -> np.ndarray:
    """Weyl quantization of a real polynomial given as ``{exponent tuple: coefficient}``."""
    A = validate_tuple(A)
    if poly:
        top = max(sum(r) for r in poly)
        if top > R_MAX:
            raise DegreeTooHigh(f"polynomial degree {top} exceeds {R_MAX}")
    table = table or MomentTable(A)
    out = np.zeros((A.d, A.d), dtype=complex)
    for r, c in poly.items():
        out += float(c) * table[r]
    return out


def commutator_orthogonality(A1, A2, R_max: int = 6) -> float:
    """``max_r |tr(i[A1, A2] M^r)|`` over all moments of the pair up to degree R_max."""
    A = validate_tuple([A1, A2])
    c = 1j * (A.ops[0] @ A.ops[1] - A.ops[1] @ A.ops[0])
    table = MomentTable(A, R_max)
    return max(abs(np.trace(c @ m)) for _, m in table.items())


def hermitian_basis_vectors(mats) -> np.ndarray:
    """Real coordinate vectors (length d^2) of Hermitian matrices, isometric for tr(XY)."""
    mats = np.asarray(mats)
    d = mats.shape[-1]
    iu = np.triu_indices(d, 1)
    diag = np.real(np.diagonal(mats, axis1=-2, axis2=-1))
    off = mats[..., iu[0], iu[1]] * np.sqrt(2)
    return np.concatenate([diag, off.real, off.imag], axis=-1)


def real_rank(mats, rtol: float = RANK_RTOL, scales=None, zero_tol: float = 1e-10) -> int:
    """Real dimension of the span of Hermitian matrices.

    Matrices with norm below ``zero_tol`` times their expected scale (default:
    the largest norm present) are roundoff and dropped; the rest are
    normalized, and singular values below ``rtol`` times the largest count
    as zero.
    """
    v = hermitian_basis_vectors(mats)
    nrm = np.linalg.norm(v, axis=1)
    if scales is None:
        scales = np.max(nrm, initial=0.0)
    keep = nrm > zero_tol * np.asarray(scales, dtype=float)
    v = v[keep] / nrm[keep, None]
    if len(v) == 0:
        return 0
    s = np.linalg.svd(v, compute_uv=False)
    return int(np.sum(s > rtol * s[0]))


def weyl_span_dimension(A: OperatorTuple, R_cap: int | None = None, rtol: float = RANK_RTOL) -> int:
    """Real dimension of span{M^r : |r| <= R_cap}.

    Without ``R_cap`` the degree is raised until the rank has not grown for
    two consecutive degrees (or reaches d^2), with a hard cap of d^2.
    """
    A = validate_tuple(A)
    d = A.d
    cap = d * d if R_cap is None else R_cap
    table = MomentTable(A, max(cap, 1))
    norm = max(float(np.max(np.linalg.norm(A.ops, 2, axis=(1, 2)))), 1e-300)
    mats, scales, rank, stable = [], [], 0, 0
    for R in range(cap + 1):
        block = [m for _, m in table.degree(R)]
        mats.extend(block)
        scales.extend([norm**R] * len(block))
        new = real_rank(mats, rtol, scales)
        stable = stable + 1 if new == rank else 0
        rank = new
        if R_cap is None and (stable >= 2 or rank == d * d):
            break
    return rank


def info_complete(A: OperatorTuple, rtol: float = RANK_RTOL) -> bool:
    A = validate_tuple(A)
    return weyl_span_dimension(A, rtol=rtol) == A.d**2


def incomp_trace_identity(A1, A2, samples: int, rng: np.random.Generator, P=None, R_max=None) -> float:
    """``max |tr(A1 P1 A2 P2) - tr(A2 P1 A1 P2)|`` over sampled P1, P2.

    P1, P2 are random real combinations of the moments up to degree d - 1,
    unless explicit pairs are passed in ``P``.
    """
    A = validate_tuple([A1, A2])
    a1, a2 = A.ops
    if P is None:
        top = A.d - 1 if R_max is None else R_max
        basis = [m for _, m in MomentTable(A, top).items()]
        P = []
        for _ in range(samples):
            c1, c2 = rng.standard_normal((2, len(basis)))
            P.append((np.tensordot(c1, basis, axes=1), np.tensordot(c2, basis, axes=1)))
    res = 0.0
    for p1, p2 in P:
        res = max(res, abs(np.trace(a1 @ p1 @ a2 @ p2) - np.trace(a2 @ p1 @ a1 @ p2)))
    return float(res)


@dataclass(frozen=True)
class NormalCompleteness:
    complete: bool
    min_overlap: float
    witness: tuple  # (i, j): eigenvector i of A1, eigenvector j of A2 (0-based)


def normal_complete(A1, A2, tol: float = 1e-9, gap_tol: float = 1e-8) -> NormalCompleteness:
    """Completeness of the normally ordered moments ``A1^p A2^q`` for nondegenerate spectra."""
    A = validate_tuple([A1, A2])
    vecs = []
    for k, a in enumerate(A.ops):
        w, v = np.linalg.eigh(a)
        diam = max(w[-1] - w[0], 1.0)
        if len(w) > 1 and np.min(np.diff(w)) <= gap_tol * diam:
            raise DegenerateSpectrum(f"A{k + 1} has a degenerate eigenvalue")
        vecs.append(v)
    ov = np.abs(vecs[0].conj().T @ vecs[1])
    i, j = np.unravel_index(np.argmin(ov), ov.shape)
    return NormalCompleteness(bool(ov[i, j] > tol), float(ov[i, j]), (int(i), int(j)))


def bmv_mixed_moment(A1, A2, n: int, m: int, psd_tol: float = 1e-9) -> float:
    """``tr M^(n, m)(A1, A2)`` for positive semidefinite A1, A2."""
    A = validate_tuple([A1, A2])
    for k, a in enumerate(A.ops):
        lmin = np.linalg.eigvalsh(a)[0]
        if lmin < -psd_tol:
            raise NotPsd(f"A{k + 1} has eigenvalue {lmin:.3e}")
    return float(np.trace(MomentTable(A, n + m)[(n, m)]).real)


def bmv_triple_counterexample(vectors=None) -> float:
    """``tr(ABC + CBA)`` for rank-one projections onto three vectors.

    The default vectors ``cos(2 pi k/3) e1 + sin(2 pi k/3) e2`` (k = 1, 2, 3)
    have pairwise overlaps -1/2, giving -1/4.
    """
    if vectors is None:
        ang = 2 * np.pi * np.arange(1, 4) / 3
        vectors = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    a, b, c = (np.outer(v, np.conj(v)) / np.vdot(v, v) for v in np.asarray(vectors, dtype=complex))
    return float(np.trace(a @ b @ c + c @ b @ a).real)
