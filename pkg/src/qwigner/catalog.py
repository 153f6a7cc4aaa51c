"""Named operator systems and closed-form qubit references.

Trace conventions are stated per function: ``qubit3_radial`` is for the
unnormalized state rho = I, ``qubit2_reference`` for rho = I/2.  Grids are
always computed for unit-trace states.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, special

from .core import (
    PAULI,
    OperatorTuple,
    QWignerError,
    maximally_mixed,
    random_hermitian,
    validate_state,
    validate_tuple,
)
from .moments import real_rank

__all__ = [
    "DEFAULT_SEED",
    "UnknownExample",
    "BranchAmbiguity",
    "NamedExample",
    "catalog",
    "make",
    "HEART",
    "DUAL_COUNTEREXAMPLE",
    "NIKOLAUS_POINTS",
    "NIKOLAUS_EDGES",
    "nearly_commuting",
    "dihedral_group",
    "dihedral_twirl",
    "twirl_rank",
    "dihedral_multiplet",
    "qubit3_radial",
    "qubit2_reference",
    "qubit2_gaussian_reference",
    "regular_part",
    "qubit_wigner_state_factor",
    "bloch_state",
]

DEFAULT_SEED = 0x3160


class UnknownExample(QWignerError, KeyError):
    pass


class BranchAmbiguity(QWignerError, ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class NamedExample:
    name: str
    tuple: OperatorTuple
    state: np.ndarray
    notes: str = ""
    extra: dict = field(default_factory=dict)


HEART = np.array(
    [
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    ],
    dtype=float,
)

DUAL_COUNTEREXAMPLE = np.array(
    [
        [[1, 0, 0], [0, -1, 1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
    ],
    dtype=float,
)

# house-shaped five point configuration; the apex is not coupled to the bottom corners
NIKOLAUS_POINTS = np.array([(-1, -1), (1, -1), (1, 1), (-1, 1), (0, 2)], dtype=float)
NIKOLAUS_EDGES = [(0, 1), (0, 3), (1, 2), (2, 3), (0, 2), (1, 3), (3, 4), (2, 4)]


def bloch_state(r) -> np.ndarray:
    """Qubit state ``(I + r . sigma) / 2``; r may have 2 or 3 components."""
    r = np.zeros(3) + np.pad(np.asarray(r, dtype=float), (0, 3 - len(r)))
    if np.linalg.norm(r) > 1 + 1e-12:
        raise ValueError(f"Bloch vector {r} lies outside the unit ball")
    return (np.eye(2) + np.tensordot(r, PAULI, axes=1)) / 2


def nearly_commuting(eps_prime: float = 0.05, seed: int = DEFAULT_SEED):
    """Diagonal pair on the five house points plus seeded off-diagonal couplings.

    Each edge (mu, nu) gets a real coupling in A1 and an imaginary one in A2,
    both drawn from [0.5, 1], so the compressed 2x2 pairs have proper ellipses.
    Returns ``(A1, A2)`` in the unperturbed eigenbasis.
    """
    rng = np.random.default_rng(seed)
    b1 = np.zeros((5, 5), complex)
    b2 = np.zeros((5, 5), complex)
    for i, j in NIKOLAUS_EDGES:
        b1[i, j] = rng.uniform(0.5, 1.0)
        b2[i, j] = 1j * rng.uniform(0.5, 1.0)
    b1 += b1.conj().T
    b2 += b2.conj().T
    a1 = np.diag(NIKOLAUS_POINTS[:, 0]) + eps_prime * b1
    a2 = np.diag(NIKOLAUS_POINTS[:, 1]) + eps_prime * b2
    return a1, a2


def dihedral_group(p: int):
    """Elements of D_p as ``(U_g, R_g)``.

    ``U`` permutes the p polygon vertices (rotation = cyclic shift,
    reflection = index reversal about vertex 0 on the vertical axis); ``R`` is
    the matching 2-D orthogonal matrix.  Both are homomorphisms and
    ``U_g^* A_k U_g = sum_l R_g[k, l] A_l`` for a multiplet.
    """
    if p <= 2:
        raise ValueError("need p > 2")
    shift = np.roll(np.eye(p), 1, axis=0)  # |j> -> |j+1>
    flip = np.eye(p)[(-np.arange(p)) % p]  # |j> -> |-j>
    refl = np.diag([-1.0, 1.0])
    out = []
    for k in range(p):
        th = 2 * np.pi * k / p
        rot = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
        uk = np.linalg.matrix_power(shift, k)
        out.append((uk, rot))
        out.append((uk @ flip, rot @ refl))
    return out


def dihedral_twirl(p: int, X) -> np.ndarray:
    """Projection of X onto the component transforming like the 2-D representation."""
    X = np.asarray(X, dtype=complex)
    acc = np.zeros_like(X)
    group = dihedral_group(p)
    for u, r in group:
        acc += np.trace(r) * (u @ X @ u.T)
    return 2 * acc / len(group)


def twirl_rank(p: int) -> int:
    """Rank of the twirl as a real-linear map on p x p Hermitian matrices."""
    basis = []
    for j in range(p):
        for k in range(j, p):
            e = np.zeros((p, p), complex)
            e[j, k] = e[k, j] = 1
            basis.append(e)
            if k > j:
                f = np.zeros((p, p), complex)
                f[j, k], f[k, j] = 1j, -1j
                basis.append(f)
    images = [dihedral_twirl(p, b) for b in basis]
    return real_rank(images)


def dihedral_multiplet(p: int, seed: int = DEFAULT_SEED) -> NamedExample:
    """Pair (A1, A2) carrying the 2-D representation of D_p, with rho = I/p.

    A2 is the reflection-symmetric part of a twirled random Hermitian matrix;
    A1 follows from the rotation law ``U_r^* A2 U_r = sin(t) A1 + cos(t) A2``.
    """
    rng = np.random.default_rng(seed)
    group = dihedral_group(p)
    y = dihedral_twirl(p, random_hermitian(p, rng))
    flip = group[1][0]
    a2 = (y + flip @ y @ flip.T) / 2
    th = 2 * np.pi / p
    shift = group[2][0]
    a1 = (shift.T @ a2 @ shift - np.cos(th) * a2) / np.sin(th)
    scale = max(np.linalg.norm(a1, 2), np.linalg.norm(a2, 2))
    A = validate_tuple([a1 / scale, a2 / scale])
    return NamedExample(
        f"dihedral-{p}",
        A,
        maximally_mixed(p),
        f"D_{p} multiplet from a twirled Hermitian matrix (seed {seed})",
        {"group": group},
    )


def qubit3_radial(s, epsilon: float):
    """Regularized Wigner function of the Pauli triple for rho = I (total mass 2).

    Radial profile of ``W * G_eps``; at s = 0 the removable singularity is
    replaced by its limit.
    """
    s = np.asarray(s, dtype=float)
    e = float(epsilon)
    if e <= 0:
        raise ValueError("epsilon must be positive")
    pref = 1.0 / (8 * np.pi**1.5 * e**1.5)
    small = np.abs(s) < 1e-6
    ss = np.where(small, 1.0, s)
    br = np.exp(-((ss + 1) ** 2) / (4 * e)) * (ss + 1) + np.exp(-((ss - 1) ** 2) / (4 * e)) * (ss - 1)
    # bracket = f(s) - f(-s) with f(x) = (x+1) exp(-(x+1)^2 / 4e), so -> 2 s f'(0)
    lim = 2 * np.exp(-1 / (4 * e)) * (1 - 1 / (2 * e))
    out = np.where(small, pref * lim, pref * br / ss)
    return out if out.ndim else float(out)


def qubit2_reference(r, epsilon: float):
    """Pauli pair, rho = I/2, regularized by ``exp(-eps |xi|)`` (not Gaussian).

    ``(1/2pi) d/dlam Im[((eps - i lam)^2 + r^2)^(-1/2)]`` at lam = 1, with the
    derivative taken analytically on the principal branch.
    """
    r = np.asarray(r, dtype=float)
    a = complex(epsilon, -1.0)
    z = a * a + r**2
    if np.any((np.imag(z) == 0) & (np.real(z) < 0)):
        raise BranchAmbiguity("square-root argument on the negative real axis")
    out = np.asarray(np.imag(1j * a * z**-1.5) / (2 * np.pi))
    return out if out.ndim else float(out)


def qubit2_gaussian_reference(r, epsilon: float):
    """Pauli pair, rho = I/2, Gaussian regularization ``exp(-eps |xi|^2)``.

    One-dimensional Hankel integral ``(1/2pi) int s cos(s) exp(-eps s^2) J0(r s) ds``
    evaluated by adaptive quadrature; this is the quantity the FFT grid samples.
    """
    smax = np.sqrt(46.0 / epsilon)

    def one(rr):
        f = lambda s: s * np.cos(s) * np.exp(-epsilon * s * s) * special.j0(rr * s)  # noqa: E731
        val, _ = integrate.quad(f, 0, smax, limit=4000, epsabs=1e-13, epsrel=1e-11)
        return val / (2 * np.pi)

    r = np.asarray(r, dtype=float)
    out = np.vectorize(one)(r)
    return out if out.ndim else float(out)


def regular_part(r):
    """Non-singular part ``-1 / (2 pi (1 - r^2)^(3/2))`` of the Pauli-pair function, r < 1."""
    r = np.asarray(r, dtype=float)
    if np.any(r >= 1):
        raise ValueError("regular part is defined for r < 1 only")
    out = -1.0 / (2 * np.pi * (1 - r * r) ** 1.5)
    return out if out.ndim else float(out)


def qubit_wigner_state_factor(a, bloch_r):
    """Factor ``(1 + r.a) / 2`` turning the rho = I function into that of ``(I + r.sigma)/2``."""
    r = np.asarray(bloch_r, dtype=float)
    if np.linalg.norm(r) > 1 + 1e-12:
        raise ValueError("Bloch vector outside the unit ball")
    a = np.asarray(a, dtype=float)
    out = 0.5 * (1 + a @ r)
    return out if np.ndim(out) else float(out)


def _fixed(name, ops, notes, state=None):
    A = validate_tuple(ops)
    rho = maximally_mixed(A.d) if state is None else validate_state(state, A.d)
    return NamedExample(name, A, rho, notes)


def _random_pair(seed, d=4):
    rng = np.random.default_rng(seed)
    return [random_hermitian(d, rng) for _ in range(2)]


_CATALOG = {
    "pauli3": lambda seed, **kw: _fixed("pauli3", PAULI, "Pauli triple, rho = I/2"),
    "pauli2": lambda seed, bloch=(0.0, 0.0, 0.0), **kw: _fixed(
        "pauli2", PAULI[:2], "Pauli pair, rho from a Bloch vector", bloch_state(bloch)
    ),
    "heart": lambda seed, **kw: _fixed("heart", HEART, "3x3 pair with a flat boundary piece (double top eigenvalue of A1)"),
    "dual-counterexample": lambda seed, **kw: _fixed(
        "dual-counterexample", DUAL_COUNTEREXAMPLE, "3x3 triple whose dual variety adds a real line"
    ),
    "nearly-commuting": lambda seed, eps_prime=0.05, **kw: _fixed(
        "nearly-commuting", nearly_commuting(eps_prime, seed), f"house configuration, eps' = {eps_prime}"
    ),
    "commuting-demo": lambda seed, **kw: _fixed(
        "commuting-demo", [np.diag([0.0, 1.0]), np.diag([0.0, 2.0])], "diagonal pair", np.diag([0.25, 0.75])
    ),
    "random-pair": lambda seed, **kw: _fixed("random-pair", _random_pair(seed), f"seeded 4x4 pair (seed {seed})"),
}


def catalog() -> list:
    """Names accepted by :func:`make` (``dihedral-<p>`` for any p > 2)."""
    return sorted(_CATALOG) + ["dihedral-<p>"]


def make(name: str, seed: int = DEFAULT_SEED, **kwargs) -> NamedExample:
    if name.startswith("dihedral-"):
        try:
            p = int(name.split("-", 1)[1])
        except ValueError:
            raise UnknownExample(name) from None
        return dihedral_multiplet(p, seed)
    try:
        factory = _CATALOG[name]
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(catalog())}") from None
    return factory(seed, **kwargs)
