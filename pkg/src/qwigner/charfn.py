"""Characteristic function ``W^(xi) = tr rho exp(i xi.A)`` of the Wigner distribution.

Fourier convention used throughout the package::

    W^(xi) = int da W(a) exp(i xi.a)
    W(a)   = (2 pi)^-n int dxi W^(xi) exp(-i xi.a)
"""

from __future__ import annotations

import numpy as np

from .core import (
    DEFAULT_TOL,
    ConvergenceFailure,
    DimensionMismatch,
    OperatorTuple,
    QWignerError,
    Tolerances,
    pencil,
)

__all__ = ["NotReducing", "char_function", "char_function_many", "char_function_blocks"]


class NotReducing(QWignerError, ValueError):
    pass


def char_function(A: OperatorTuple, rho, xi, tol: Tolerances = DEFAULT_TOL) -> complex:
    """Evaluate ``tr rho exp(i xi.A)`` from one eigendecomposition of ``xi.A``.

    ``tr(rho P_mu)`` is accumulated from eigenvector sandwiches, so degenerate
    clusters need no explicit projector.
    """
    pe = pencil(A, xi, tol)
    w = pe.weights(np.asarray(rho, dtype=complex))
    return complex(np.sum(np.exp(1j * pe.eigenvalues) * w))


def char_function_many(A: OperatorTuple, rho, xis, chunk: int = 65536) -> np.ndarray:
    """Vectorized :func:`char_function` over an ``(..., n)`` array of frequencies."""
    xis = np.asarray(xis, dtype=float)
    if xis.shape[-1] != A.n:
        raise DimensionMismatch(f"frequencies have trailing size {xis.shape[-1]}, expected {A.n}")
    flat = xis.reshape(-1, A.n)
    out = np.empty(flat.shape[0], dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    if A.d == 1:
        return (rho[0, 0] * np.exp(1j * flat @ A.ops[:, 0, 0].real)).reshape(xis.shape[:-1])
    for start in range(0, flat.shape[0], chunk):
        x = flat[start : start + chunk]
        mats = np.tensordot(x, A.ops, axes=1)
        try:
            w, v = np.linalg.eigh(mats)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
        wts = np.einsum("sim,ij,sjm->sm", v.conj(), rho, v).real
        out[start : start + chunk] = np.sum(np.exp(1j * w) * wts, axis=1)
    return out.reshape(xis.shape[:-1])


def check_reducing(A: OperatorTuple, projectors, tol: float = 1e-9):
    """Raise :class:`NotReducing` unless the projectors form a reducing decomposition for A."""
    qs = [np.asarray(q, dtype=complex) for q in projectors]
    d = A.d
    if sum(qs).shape != (d, d) or np.max(np.abs(sum(qs) - np.eye(d))) > tol:
        raise NotReducing("projectors do not sum to the identity")
    for i, q in enumerate(qs):
        if np.max(np.abs(q @ q - q)) > tol or np.max(np.abs(q - q.conj().T)) > tol:
            raise NotReducing(f"Q_{i} is not an orthogonal projection")
        for k, a in enumerate(A.ops):
            c = np.max(np.abs(q @ a - a @ q))
            if c > tol:
                raise NotReducing(f"||[Q_{i}, A_{k}]|| = {c:.3e} exceeds {tol:.1e}")
    return qs


def char_function_blocks(A: OperatorTuple, rho, projectors, xi, tol: float = 1e-9) -> complex:
    """Sum of block characteristic functions over a reducing family of projections.

    Uses the unnormalized compressions ``Q rho Q``; the result is independent
    of the off-diagonal blocks of rho.
    """
    qs = check_reducing(A, projectors, tol)
    rho = np.asarray(rho, dtype=complex)
    return sum(char_function(A, q @ rho @ q, xi) for q in qs)
