"""Joint numerical range, singular support, eigenvalue curves and nearly-commuting ellipses."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.spatial import cKDTree

from .core import DimensionMismatch, OperatorTuple, QWignerError, validate_tuple

__all__ = [
    "DegenerateBranch",
    "sphere_directions",
    "half_sphere_directions",
    "support_function",
    "JNRBoundary",
    "jnr_boundary",
    "in_jnr_hull",
    "SingularSample",
    "SingularSet",
    "singular_set",
    "gpoly",
    "heart_quartic",
    "polynomial_residual",
    "strict_convexity_probe",
    "eigenvalue_curves",
    "curve_point",
    "reconstruct_from_curve",
    "pair_ellipse",
    "nearly_commuting_ellipses",
    "emit_points",
]

SING_GAP_RTOL = 1e-6


class DegenerateBranch(QWignerError, ValueError):
    pass


def sphere_directions(n: int, resolution: int) -> np.ndarray:
    """Deterministic quasi-uniform unit vectors: equal angles (n=2), Fibonacci lattice (n=3)."""
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        t = 2 * np.pi * np.arange(resolution) / resolution
        return np.stack([np.cos(t), np.sin(t)], axis=1)
    if n == 3:
        i = np.arange(resolution) + 0.5
        z = 1 - 2 * i / resolution
        phi = np.pi * (1 + 5**0.5) * i
        rho = np.sqrt(1 - z * z)
        return np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=1)
    # no lattice construction for n > 3; a fixed-seed cloud keeps results reproducible
    x = np.random.default_rng(0x5EED).standard_normal((resolution, n))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def half_sphere_directions(n: int, resolution: int) -> np.ndarray:
    """One representative of each antipodal pair (about ``resolution`` of them)."""
    if n == 2:
        t = np.pi * np.arange(resolution) / resolution
        return np.stack([np.cos(t), np.sin(t)], axis=1)
    u = sphere_directions(n, 2 * resolution)
    return u[u[:, -1] > 0] if n > 1 else u[:1]


def _batched_eig(A: OperatorTuple, directions):
    mats = np.einsum("mk,kij->mij", directions, A.ops)
    return np.linalg.eigh(mats)


def support_function(A: OperatorTuple, directions) -> np.ndarray:
    """``m(u) = max{u.x : x in the joint numerical range}`` = top eigenvalue of ``u.A``."""
    u = np.atleast_2d(np.asarray(directions, dtype=float))
    return np.linalg.eigvalsh(np.einsum("mk,kij->mij", u, A.ops))[:, -1]


@dataclass(frozen=True, eq=False)
class JNRBoundary:
    u: np.ndarray
    m: np.ndarray
    points: np.ndarray  # nan rows where the top eigenvalue is degenerate
    degenerate: np.ndarray
    top_gap: np.ndarray


def jnr_boundary(A: OperatorTuple, directions, gap_rtol: float = SING_GAP_RTOL) -> JNRBoundary:
    A = validate_tuple(A)
    u = np.atleast_2d(np.asarray(directions, dtype=float))
    if u.size == 0:
        raise ValueError("need at least one direction")
    w, v = _batched_eig(A, u)
    diam = np.maximum(w[:, -1] - w[:, 0], 1e-300)
    gap = w[:, -1] - w[:, -2] if A.d > 1 else np.full(len(u), np.inf)
    degen = gap <= gap_rtol * diam
    psi = v[:, :, -1]
    pts = np.einsum("mi,kij,mj->mk", psi.conj(), A.ops, psi).real
    pts[degen] = np.nan
    return JNRBoundary(u, w[:, -1], pts, degen, gap)


def in_jnr_hull(A: OperatorTuple, points, directions=None, slack: float = 1e-8) -> np.ndarray:
    """Test ``u.a <= m(u) + slack`` for all sampled directions (outer polyhedral approximation)."""
    A = validate_tuple(A)
    if directions is None:
        directions = sphere_directions(A.n, 720 if A.n == 2 else 2000)
    pts = np.atleast_2d(points)
    m = support_function(A, directions)
    excess = pts @ np.asarray(directions).T - m
    return np.max(excess, axis=1) <= slack


@dataclass(frozen=True)
class SingularSample:
    u: np.ndarray
    mu: int
    a: np.ndarray
    gap: float


@dataclass(frozen=True, eq=False)
class SingularSet:
    """Sampled singular support, one row per (direction, nondegenerate branch)."""

    u: np.ndarray
    mu: np.ndarray
    a: np.ndarray
    gap: np.ndarray
    alpha: np.ndarray

    def __len__(self):
        return len(self.mu)

    def __iter__(self):
        for i in range(len(self)):
            yield SingularSample(self.u[i], int(self.mu[i]), self.a[i], float(self.gap[i]))


def singular_set(A: OperatorTuple, resolution: int = 400, gap_rtol: float = SING_GAP_RTOL, directions=None) -> SingularSet:
    """Expectation tuples of eigenvectors of nondegenerate eigenvalues of ``u.A``.

    Only one of each antipodal pair of directions is used, since ``-u`` gives
    the same points with the branch order reversed.  Branches whose gap is
    below ``gap_rtol`` times the spectral diameter are dropped.
    """
    A = validate_tuple(A)
    if A.n < 2:
        raise DimensionMismatch("singular sets need at least two operators")
    u = half_sphere_directions(A.n, resolution) if directions is None else np.atleast_2d(directions)
    w, v = _batched_eig(A, u)
    m, d = w.shape
    gap = np.full((m, d), np.inf)
    if d > 1:
        dw = np.diff(w, axis=1)
        gap[:, :-1] = dw
        gap[:, 1:] = np.minimum(gap[:, 1:], dw)
    diam = (w[:, -1] - w[:, 0])[:, None]
    keep = gap > gap_rtol * diam
    a = np.einsum("xim,kij,xjm->xmk", v.conj(), A.ops, v).real
    ii, mu = np.nonzero(keep)
    return SingularSet(u[ii], mu, a[ii, mu], gap[ii, mu], w[ii, mu])


def gpoly(a) -> np.ndarray:
    """Dual-variety polynomial of the 3x3 counterexample triple (zero on its singular set)."""
    a = np.asarray(a, dtype=float)
    a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2]
    return (
        4 * a3**2 * (a1**2 - 2 * a1 * a3 + 5 * a3**2 + 2 * a1 - 6 * a3 + 1)
        + 4 * a3 * (2 * a3 - a1 - 1) * a2**2
        + a2**4
    )


def heart_quartic(a) -> np.ndarray:
    """Quartic vanishing on the singular curve of the 'heart' pair."""
    a = np.asarray(a, dtype=float)
    a1, a2 = a[..., 0], a[..., 1]
    return 4 * a1**3 + 4 * a1**4 - 27 * a2**2 - 18 * a1 * a2**2 + 13 * a1**2 * a2**2 + 32 * a2**4


_POLYS = {"gpoly": (gpoly, 3), "heart_quartic": (heart_quartic, 2)}


def polynomial_residual(points, which: str) -> float:
    try:
        poly, dim = _POLYS[which]
    except KeyError:
        raise ValueError(f"unknown polynomial {which!r}; choose from {sorted(_POLYS)}") from None
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[-1] != dim:
        raise DimensionMismatch(f"{which} needs {dim}-dimensional points, got {pts.shape[-1]}")
    return float(np.max(np.abs(poly(pts)))) if len(pts) else 0.0


@dataclass(frozen=True, eq=False)
class ConvexityReport:
    directions: np.ndarray
    gaps: np.ndarray
    min_gap: float
    flagged: np.ndarray  # directions whose top eigenvalue is (nearly) degenerate


def strict_convexity_probe(A: OperatorTuple, directions, threshold: float = SING_GAP_RTOL) -> ConvexityReport:
    """Gap between the two largest eigenvalues of ``u.A`` per direction.

    A vanishing gap means the supporting line at u may touch the numerical
    range in a segment rather than a point.
    """
    b = jnr_boundary(A, directions, threshold)
    return ConvexityReport(b.u, b.top_gap, float(np.min(b.top_gap)), b.u[b.degenerate])


@dataclass(frozen=True, eq=False)
class EigenCurves:
    t: np.ndarray
    values: np.ndarray  # (T, d), columns are continuity-matched branches
    ambiguous: np.ndarray  # (T,) True where the sorted spectrum had a near-degeneracy
    sorted_values: np.ndarray


def eigenvalue_curves(A1, A2, t_samples, gap_rtol: float = 1e-6) -> EigenCurves:
    """Eigenvalues of ``C(t) = A1 cos t + A2 sin t`` with branches followed by continuity.

    Each new spectrum is matched to the linear extrapolation of the previous
    two steps by nearest value; steps at which two sorted eigenvalues come
    closer than ``gap_rtol`` times the spectral diameter are flagged.
    """
    from scipy.optimize import linear_sum_assignment

    A = validate_tuple([A1, A2])
    t = np.asarray(t_samples, dtype=float)
    dirs = np.stack([np.cos(t), np.sin(t)], axis=1)
    w = np.linalg.eigvalsh(np.einsum("mk,kij->mij", dirs, A.ops))
    diam = np.maximum(w[:, -1] - w[:, 0], 1e-300)
    ambiguous = np.zeros(len(t), bool)
    if A.d > 1:
        ambiguous = np.min(np.diff(w, axis=1), axis=1) <= gap_rtol * diam
    out = np.empty_like(w)
    out[0] = w[0]
    for i in range(1, len(t)):
        pred = out[i - 1] if i == 1 else 2 * out[i - 1] - out[i - 2]
        _, col = linear_sum_assignment(np.abs(pred[:, None] - w[i][None, :]))
        out[i] = w[i][col]
    return EigenCurves(t, out, ambiguous, w)


def curve_point(A1, A2, t: float, mu: int, h: float = 1e-5, gap_rtol: float = 1e-6):
    """Sorted eigenvalue ``c_mu(t)`` of C(t) and its derivative by central difference."""
    A = validate_tuple([A1, A2])

    def ev(s):
        return np.linalg.eigvalsh(np.cos(s) * A.ops[0] + np.sin(s) * A.ops[1])

    w = ev(t)
    diam = max(w[-1] - w[0], 1e-300)
    others = np.delete(w, mu)
    if len(others) and np.min(np.abs(others - w[mu])) <= gap_rtol * diam:
        raise DegenerateBranch(f"branch {mu} is degenerate at t = {t}")
    return float(w[mu]), float((ev(t + h)[mu] - ev(t - h)[mu]) / (2 * h))


def reconstruct_from_curve(c: float, cdot: float, t: float) -> np.ndarray:
    """Expectation pair from an eigenvalue curve: rotate ``(c, c')`` by angle t."""
    ct, st = np.cos(t), np.sin(t)
    return np.array([ct * c - st * cdot, st * c + ct * cdot])


def pair_ellipse(B1, B2):
    """Center and 2x2 axis matrix of the numerical range of a 2x2 pair.

    Writing ``B_k = x0_k I + x_k . sigma``, the range is ``x0 + M r`` over the
    unit ball with ``M`` the 2x3 matrix of rows ``x_k``; its boundary is
    ``center + axes @ (cos phi, sin phi)``.  One or both semi-axes vanish for
    commuting compressions (segment or point).
    """
    from .core import PAULI

    B = np.array([B1, B2], dtype=complex)
    x0 = np.trace(B, axis1=1, axis2=2).real / 2
    M = np.einsum("kij,pji->kp", B, PAULI).real / 2
    U, S, _ = np.linalg.svd(M)
    return x0, U * S


@dataclass(frozen=True, eq=False)
class EllipseReport:
    pairs: list
    centers: np.ndarray
    axes: np.ndarray
    diagonal_points: np.ndarray
    offdiag_max: float
    hausdorff: float
    samples: SingularSet


def nearly_commuting_ellipses(A1, A2, resolution: int = 4000, ellipse_samples: int = 20000) -> EllipseReport:
    """Compare the singular set with the union of compressed 2x2 ellipses.

    The operators are taken in their given (near-diagonal) basis.  The
    returned ``hausdorff`` is the one-sided distance from sampled singular
    points to the union of the ellipses and the diagonal points.
    """
    A = validate_tuple([A1, A2])
    a1, a2 = A.ops
    d = A.d
    off = np.max(np.abs(A.ops - np.array([np.diag(np.diag(x)) for x in A.ops])))
    diag_pts = np.stack([np.diag(a1).real, np.diag(a2).real], axis=1)
    pairs, centers, axes, clouds = [], [], [], [diag_pts]
    phi = 2 * np.pi * np.arange(ellipse_samples) / ellipse_samples
    circ = np.stack([np.cos(phi), np.sin(phi)])
    for mu in range(d):
        for nu in range(mu + 1, d):
            idx = np.ix_([mu, nu], [mu, nu])
            c, ax = pair_ellipse(a1[idx], a2[idx])
            pairs.append((mu, nu))
            centers.append(c)
            axes.append(ax)
            clouds.append((c[:, None] + ax @ circ).T)
    sing = singular_set(A, resolution)
    dist, _ = cKDTree(np.concatenate(clouds)).query(sing.a)
    return EllipseReport(
        pairs,
        np.array(centers),
        np.array(axes),
        diag_pts,
        float(off),
        float(np.max(dist)) if len(dist) else 0.0,
        sing,
    )


def emit_points(samples: SingularSet, path) -> Path:
    """Write a singular-set point cloud as CSV: u components, branch, a components, gap."""
    path = Path(path)
    n = samples.u.shape[1] if len(samples) else 0
    head = [f"u{k + 1}" for k in range(n)] + ["branch"] + [f"a{k + 1}" for k in range(n)] + ["gap"]
    rows = [",".join(head)]
    for s in samples:
        rows.append(",".join([*(repr(float(x)) for x in s.u), str(s.mu), *(repr(float(x)) for x in s.a), repr(s.gap)]))
    path.write_text("\n".join(rows) + "\n")
    return path
