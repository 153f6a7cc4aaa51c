"""Validated linear-algebra substrate: operator tuples, states, pencil eigendecompositions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "QWignerError",
    "DimensionMismatch",
    "NotHermitian",
    "NotNormalized",
    "NotPsd",
    "ConvergenceFailure",
    "DegreeTooHigh",
    "Tolerances",
    "DEFAULT_TOL",
    "OperatorTuple",
    "PencilEigen",
    "validate_tuple",
    "validate_state",
    "maximally_mixed",
    "combine",
    "eigendecompose",
    "pencil",
    "expectation_tuple",
    "random_hermitian",
    "random_state",
    "PAULI",
]


class QWignerError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(QWignerError, ValueError):
    pass


class NotHermitian(QWignerError, ValueError):
    def __init__(self, msg, max_deviation):
        super().__init__(msg)
        self.max_deviation = max_deviation


class NotNormalized(QWignerError, ValueError):
    pass


class NotPsd(QWignerError, ValueError):
    pass


class ConvergenceFailure(QWignerError, ArithmeticError):
    pass


class DegreeTooHigh(QWignerError, ValueError):
    pass


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances for input validation."""

    hermiticity: float = 1e-9
    trace: float = 1e-9
    psd: float = 1e-9
    norm: float = 1e-9
    # relative to the spectral diameter
    degeneracy: float = 1e-8


DEFAULT_TOL = Tolerances()

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


def _as_square(m, what="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionMismatch(f"{what} must be a nonempty square matrix, got shape {m.shape}")
    return m


def _symmetrize(m, tol, what="matrix"):
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise NotHermitian(f"{what} is not Hermitian: max |M - M^*| = {dev:.3e}", dev)
    return (m + m.conj().T) / 2


@dataclass(frozen=True, eq=False)
class OperatorTuple:
    """An n-tuple of Hermitian d x d matrices, stored as an (n, d, d) array.

    Construct through :func:`validate_tuple`, which checks and symmetrizes.
    """

    ops: np.ndarray

    @property
    def n(self) -> int:
        return self.ops.shape[0]

    @property
    def d(self) -> int:
        return self.ops.shape[1]

    def __len__(self):
        return self.n

    def __getitem__(self, k):
        return self.ops[k]

    def __iter__(self):
        return iter(self.ops)

    def transform(self, unitary) -> "OperatorTuple":
        """Return the tuple ``U^* A_k U``."""
        u = np.asarray(unitary, dtype=complex)
        return OperatorTuple(np.einsum("ji,kjl,lm->kim", u.conj(), self.ops, u))

    def mix(self, coeffs) -> "OperatorTuple":
        """Return the tuple ``B_k = sum_l coeffs[k, l] A_l`` (real coefficients)."""
        c = np.asarray(coeffs, dtype=float)
        return OperatorTuple(np.einsum("kl,lij->kij", c, self.ops))


def validate_tuple(raw, tol: Tolerances = DEFAULT_TOL) -> OperatorTuple:
    """Check that ``raw`` is a nonempty list of equal-size Hermitian matrices.

    Matrices passing the hermiticity check are replaced by their Hermitian
    part so downstream code sees exactly Hermitian input.
    """
    if isinstance(raw, OperatorTuple):
        return raw
    mats = list(raw)
    if len(mats) == 0:
        raise DimensionMismatch("need a nonempty list of square matrices")
    mats = [_as_square(m, f"operator {k}") for k, m in enumerate(mats)]
    d = mats[0].shape[0]
    for k, m in enumerate(mats):
        if m.shape != (d, d):
            raise DimensionMismatch(f"operator {k} has shape {m.shape}, expected {(d, d)}")
    ops = np.stack([_symmetrize(m, tol.hermiticity, f"operator {k}") for k, m in enumerate(mats)])
    ops.setflags(write=False)
    return OperatorTuple(ops)


def validate_state(rho, d: int | None = None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate a density matrix (Hermitian, PSD, unit trace) and return its Hermitian part."""
    rho = _as_square(rho, "state")
    if d is not None and rho.shape != (d, d):
        raise DimensionMismatch(f"state has shape {rho.shape}, expected {(d, d)}")
    rho = _symmetrize(rho, tol.hermiticity, "state")
    tr = np.trace(rho).real
    if abs(tr - 1) > tol.trace:
        raise NotNormalized(f"state has trace {tr!r}")
    lmin = np.linalg.eigvalsh(rho)[0]
    if lmin < -tol.psd:
        raise NotPsd(f"state has negative eigenvalue {lmin:.3e}")
    return rho


def maximally_mixed(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex) / d


def combine(A: OperatorTuple, xi) -> np.ndarray:
    """Return the Hermitian matrix ``xi . A = sum_k xi_k A_k``."""
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (A.n,):
        raise DimensionMismatch(f"xi has shape {xi.shape}, expected ({A.n},)")
    return np.tensordot(xi, A.ops, axes=1)


@dataclass(frozen=True, eq=False)
class PencilEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    ``eigenvectors[:, mu]`` belongs to ``eigenvalues[mu]``. ``clusters`` groups
    indices of numerically equal eigenvalues; projectors are formed lazily.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    clusters: tuple
    xi: np.ndarray | None = None
    matrix: np.ndarray | None = field(default=None, repr=False)

    @property
    def cluster_values(self) -> np.ndarray:
        return np.array([self.eigenvalues[c].mean() for c in self.clusters])

    @property
    def projectors(self) -> list:
        v = self.eigenvectors
        return [v[:, c] @ v[:, c].conj().T for c in self.clusters]

    def gaps(self) -> np.ndarray:
        """Distance of each eigenvalue to its nearest neighbour (inf when d = 1)."""
        w = self.eigenvalues
        g = np.full(w.shape, np.inf)
        if len(w) > 1:
            dw = np.diff(w)
            g[:-1] = dw
            g[1:] = np.minimum(g[1:], dw)
        return g

    def weights(self, rho) -> np.ndarray:
        """``<v_mu| rho |v_mu>`` for every eigenvector."""
        v = self.eigenvectors
        return np.einsum("im,ij,jm->m", v.conj(), rho, v).real


def _clusters(w, rel_gap):
    diam = w[-1] - w[0]
    thresh = rel_gap * diam
    out, cur = [], [0]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] <= thresh:
            cur.append(i)
        else:
            out.append(np.array(cur))
            cur = [i]
    out.append(np.array(cur))
    return tuple(out)


def eigendecompose(M, tol: Tolerances = DEFAULT_TOL, xi=None) -> PencilEigen:
    M = np.asarray(M, dtype=complex)
    try:
        w, v = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return PencilEigen(w, v, _clusters(w, tol.degeneracy), xi, M)


def pencil(A: OperatorTuple, xi, tol: Tolerances = DEFAULT_TOL) -> PencilEigen:
    """Eigendecomposition of ``xi . A``."""
    xi = np.asarray(xi, dtype=float)
    return eigendecompose(combine(A, xi), tol, xi=xi)


def expectation_tuple(A: OperatorTuple, psi, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Return ``(<psi|A_1|psi>, ..., <psi|A_n|psi>)`` for a unit vector psi."""
    psi = np.asarray(psi, dtype=complex)
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1) > tol.norm:
        raise NotNormalized(f"|psi| = {nrm!r}")
    return np.einsum("i,kij,j->k", psi.conj(), A.ops, psi).real


def random_hermitian(d: int, rng: np.random.Generator, real: bool = False) -> np.ndarray:
    """GUE-like random Hermitian matrix (GOE-like if ``real``)."""
    x = rng.standard_normal((d, d))
    if not real:
        x = x + 1j * rng.standard_normal((d, d))
    return (x + x.conj().T) / 2


def random_state(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    g = rng.standard_normal((d, rank or d)) + 1j * rng.standard_normal((d, rank or d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
