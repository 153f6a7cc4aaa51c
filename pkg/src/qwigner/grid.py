"""Gaussian-regularized Wigner distribution on an n-dimensional grid.

The distribution itself is generally singular, so what is sampled is the
convolution ``W_eps = W * G_eps`` with the Gaussian whose Fourier transform is
``exp(-eps |xi|^2)``, i.e. ``G_eps(a) = (4 pi eps)^(-n/2) exp(-|a|^2 / (4 eps))``
(variance ``2 eps`` per axis).  ``W_eps`` is obtained by sampling the damped
characteristic function on the dual lattice and applying one inverse DFT.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.fft

from .charfn import char_function_many
from .core import DegreeTooHigh, DimensionMismatch, OperatorTuple, QWignerError

__all__ = [
    "AliasingRisk",
    "InsufficientDamping",
    "GridSpec",
    "WignerGrid",
    "compute_wigner_grid",
    "auto_spec",
    "jnr_bounding_box",
    "marginal",
    "smeared_spectral_marginal",
    "grid_moment",
    "negativity_report",
    "emit",
    "read_grid_csv",
    "interpolate",
]

MAX_AXES = 4
DAMPING_TARGET = 1e-12


class AliasingRisk(UserWarning):
    """The grid box does not contain the (dilated) joint numerical range."""


class InsufficientDamping(UserWarning):
    """The Gaussian damping at the dual-grid Nyquist frequency exceeds the target."""


class GridIOError(QWignerError, OSError):
    pass


@dataclass(frozen=True)
class GridSpec:
    lo: np.ndarray
    hi: np.ndarray
    samples: tuple
    epsilon: float

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lo, dtype=float))
        hi = np.atleast_1d(np.asarray(self.hi, dtype=float))
        samples = tuple(int(s) for s in np.atleast_1d(self.samples))
        n = max(len(lo), len(hi), len(samples))
        lo, hi = np.broadcast_to(lo, (n,)).copy(), np.broadcast_to(hi, (n,)).copy()
        if len(samples) == 1:
            samples = samples * n
        if len(samples) != n:
            raise DimensionMismatch("lo, hi and samples disagree in length")
        if n > MAX_AXES:
            raise DimensionMismatch(f"grids are limited to {MAX_AXES} axes, got {n}")
        if np.any(lo >= hi):
            raise ValueError("need lo < hi on every axis")
        for s in samples:
            if s < 8 or s & (s - 1):
                raise ValueError(f"samples per axis must be a power of two >= 8, got {s}")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "epsilon", float(self.epsilon))

    @property
    def n(self) -> int:
        return len(self.samples)

    @property
    def length(self) -> np.ndarray:
        return self.hi - self.lo

    @property
    def spacing(self) -> np.ndarray:
        return self.length / np.array(self.samples)

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def axes(self) -> list:
        """Cell-center coordinates along each axis."""
        return [lo + (np.arange(s) + 0.5) * h for lo, s, h in zip(self.lo, self.samples, self.spacing)]

    def points(self) -> np.ndarray:
        """All cell centers, shape ``samples + (n,)``."""
        return np.stack(np.meshgrid(*self.axes(), indexing="ij"), axis=-1)

    def frequencies(self) -> list:
        return [2 * np.pi * scipy.fft.fftfreq(s, h) for s, h in zip(self.samples, self.spacing)]

    def damping(self) -> float:
        """Largest value of ``exp(-eps xi^2)`` at a per-axis Nyquist frequency."""
        nyq = np.pi / self.spacing
        return float(np.exp(-self.epsilon * np.min(nyq) ** 2))


@dataclass(frozen=True, eq=False)
class WignerGrid:
    spec: GridSpec
    values: np.ndarray
    residual_imag: float = 0.0
    damping: float = 0.0

    @property
    def peak(self) -> float:
        return float(np.max(np.abs(self.values)))

    def total_mass(self) -> float:
        return float(self.values.sum() * self.spec.cell_volume)


def jnr_bounding_box(A: OperatorTuple):
    """Exact axis-aligned bounding box of the joint numerical range."""
    ev = np.linalg.eigvalsh(A.ops)
    return ev[:, 0], ev[:, -1]


def auto_spec(A: OperatorTuple, samples=64, epsilon=None, pad: float = 0.5) -> GridSpec:
    """Box around the joint numerical range, padded by ``pad`` times its width (at least 0.5).

    Without an explicit epsilon the default ``1e-2 * (box diameter / 4)^2`` is used.
    """
    blo, bhi = jnr_bounding_box(A)
    width = np.maximum(bhi - blo, 1.0)
    lo, hi = blo - pad * width, bhi + pad * width
    if epsilon is None:
        epsilon = 1e-2 * (np.linalg.norm(hi - lo) / 4) ** 2
    margin = 3 * np.sqrt(2 * epsilon)
    lo, hi = np.minimum(lo, blo - margin), np.maximum(hi, bhi + margin)
    return GridSpec(lo, hi, samples, epsilon)


def compute_wigner_grid(A: OperatorTuple, rho, spec: GridSpec, workers: int | None = None) -> WignerGrid:
    """Sample ``W_eps`` at the cell centers of ``spec``.

    The inverse transform carries the phase ``exp(-i xi.(lo + h/2))`` so the
    box need not be centered at the origin.  The discarded imaginary part is
    reported in ``residual_imag``.
    """
    if spec.n != A.n:
        raise DimensionMismatch(f"grid has {spec.n} axes but the tuple has {A.n} operators")
    jlo, jhi = jnr_bounding_box(A)
    margin = 3 * np.sqrt(2 * spec.epsilon)
    if np.any(jlo - margin < spec.lo) or np.any(jhi + margin > spec.hi):
        warnings.warn(
            f"box [{spec.lo}, {spec.hi}] does not contain the numerical range "
            f"[{jlo}, {jhi}] plus margin {margin:.3g}",
            AliasingRisk,
            stacklevel=2,
        )
    damping = spec.damping()
    if damping > DAMPING_TARGET:
        warnings.warn(
            f"Gaussian damping at the Nyquist frequency is only {damping:.2e}; "
            "refine the grid or raise epsilon",
            InsufficientDamping,
            stacklevel=2,
        )

    freqs = spec.frequencies()
    xi = np.stack(np.meshgrid(*freqs, indexing="ij"), axis=-1)
    center0 = spec.lo + spec.spacing / 2
    f = char_function_many(A, rho, xi)
    f *= np.exp(-spec.epsilon * np.sum(xi**2, axis=-1) - 1j * (xi @ center0))
    out = scipy.fft.fftn(f, workers=workers) / np.prod(spec.length)
    values = np.ascontiguousarray(out.real)
    return WignerGrid(spec, values, float(np.max(np.abs(out.imag))), damping)


def interpolate(grid: WignerGrid, points, fill: float = 0.0) -> np.ndarray:
    """Multilinear interpolation of the grid values at arbitrary points ``(..., n)``."""
    from scipy.interpolate import RegularGridInterpolator

    rgi = RegularGridInterpolator(grid.spec.axes(), grid.values, bounds_error=False, fill_value=fill)
    return rgi(points)


def marginal(grid: WignerGrid, direction, order: int = 3):
    """Density of ``u.a`` under the gridded distribution.

    ``direction`` is an axis index or a real n-vector ``u``.  Returns
    ``(t, density)``.  Axis marginals are exact sums over the other axes.  For
    a general ``u`` the grid is interpolated onto slabs perpendicular to ``u``
    at the grid spacing and each slab is summed.  The default cubic spline is
    far more accurate than ``order=1`` (multilinear) on oblique directions,
    where projected cell centers beat against the slab spacing.
    """
    spec = grid.spec
    if np.ndim(direction) == 0:
        k = int(direction)
        others = tuple(i for i in range(spec.n) if i != k)
        dens = grid.values.sum(axis=others) * np.prod(spec.spacing[list(others)])
        return spec.axes()[k], dens
    from scipy.ndimage import map_coordinates

    u = np.asarray(direction, dtype=float)
    if u.shape != (spec.n,):
        raise DimensionMismatch(f"direction has shape {u.shape}, expected ({spec.n},)")
    unorm = float(np.linalg.norm(u))
    if unorm == 0:
        raise ValueError("direction must be nonzero")
    uhat = u / unorm
    # orthonormal complement of uhat
    q, _ = np.linalg.qr(np.column_stack([uhat, np.eye(spec.n)]))
    perp = q[:, 1 : spec.n]
    step = float(np.min(spec.spacing))
    center = (spec.lo + spec.hi) / 2
    radius = float(np.linalg.norm(spec.length)) / 2
    m = int(np.ceil(radius / step))
    offs = step * np.arange(-m, m + 1)
    t_hat = float(center @ uhat) + offs
    slab = np.stack(np.meshgrid(*([offs] * (spec.n - 1)), indexing="ij"), axis=-1).reshape(-1, spec.n - 1)
    pts = center + (t_hat - center @ uhat)[:, None, None] * uhat + (slab @ perp.T)[None]
    idx = (pts - spec.lo) / spec.spacing - 0.5
    vals = map_coordinates(grid.values, np.moveaxis(idx, -1, 0), order=order, mode="constant", cval=0.0)
    dens_hat = vals.sum(axis=1) * step ** (spec.n - 1)
    return unorm * t_hat, dens_hat / unorm


def smeared_spectral_marginal(A: OperatorTuple, rho, u, epsilon: float, t) -> np.ndarray:
    """``sum_mu tr(rho P_mu(u)) N(t; alpha_mu(u), 2 eps |u|^2)``: the exact marginal of ``W_eps``."""
    u = np.asarray(u, dtype=float)
    w, v = np.linalg.eigh(np.tensordot(u, A.ops, axes=1))
    wts = np.einsum("im,ij,jm->m", v.conj(), rho, v).real
    var = 2 * epsilon * float(u @ u)
    t = np.asarray(t, dtype=float)[..., None]
    return np.sum(wts * np.exp(-((t - w) ** 2) / (2 * var)) / np.sqrt(2 * np.pi * var), axis=-1)


def grid_moment(grid: WignerGrid, r, deconvolve: bool = False) -> float:
    """Riemann sum of ``a^r`` against the grid.

    With ``deconvolve`` the Gaussian inflation ``2 eps`` of each pure second
    moment is removed; this is exact for total degree <= 2.  Higher degrees
    are returned as is and carry an O(eps) bias.
    """
    r = tuple(int(x) for x in r)
    spec = grid.spec
    if len(r) != spec.n:
        raise DimensionMismatch(f"multi-index {r} has wrong length for {spec.n} axes")
    R = sum(r)
    if R > 8:
        raise DegreeTooHigh(f"grid moments are limited to degree 8, got {R}")
    w = grid.values
    for k, (ax, rk) in enumerate(zip(spec.axes(), r)):
        if rk:
            shape = [1] * spec.n
            shape[k] = -1
            w = w * (ax**rk).reshape(shape)
    m = float(w.sum() * spec.cell_volume)
    if deconvolve and R == 2 and max(r) == 2:
        m -= 2 * spec.epsilon * grid.total_mass()
    return m


@dataclass(frozen=True)
class NegativityReport:
    min_value: float
    negative_mass: float
    peak: float


def negativity_report(grid: WignerGrid) -> NegativityReport:
    v = grid.values
    neg = float(np.clip(-v, 0, None).sum() * grid.spec.cell_volume)
    return NegativityReport(float(v.min()), neg, grid.peak)


def _header(spec: GridSpec):
    vec = lambda x: " ".join(repr(float(v)) for v in x)  # noqa: E731
    return [
        "n,lo,hi,N,epsilon",
        f"{spec.n},{vec(spec.lo)},{vec(spec.hi)},{' '.join(str(s) for s in spec.samples)},{spec.epsilon!r}",
    ]


def emit(grid: WignerGrid, path, format: str = "csv", slice_axis: int | None = None, slice_index=None):
    """Write the grid as CSV or as an 8-bit PGM (P5) image of a 2-D slice.

    CSV: two header lines (field names, spec values; vectors space separated),
    a ``value`` line, then the values in row-major order.  PGM: axis 0 runs
    left to right, axis 1 bottom to top; values are rescaled min -> 0,
    max -> 255 and the scaling is written to ``<path>.meta``.
    """
    path = Path(path)
    try:
        if format == "csv":
            lines = _header(grid.spec) + ["value"] + [repr(float(v)) for v in grid.values.ravel()]
            path.write_text("\n".join(lines) + "\n")
            return path
        if format != "pgm-slice":
            raise ValueError(f"unknown format {format!r}")
        vals, fixed = _slice2d(grid, slice_axis, slice_index)
        lo, hi = float(vals.min()), float(vals.max())
        scale = 255.0 / (hi - lo) if hi > lo else 0.0
        img = np.round((vals - lo) * scale).astype(np.uint8)
        # rows top to bottom = axis 1 descending
        img = img.T[::-1]
        h, w = img.shape
        with open(path, "wb") as fh:
            fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
            fh.write(img.tobytes())
        meta = _header(grid.spec) + [
            f"min {lo!r}",
            f"max {hi!r}",
            f"scale {scale!r}",
            "pixel = round((value - min) * scale)",
            f"slice {fixed}",
        ]
        Path(str(path) + ".meta").write_text("\n".join(meta) + "\n")
        return path
    except OSError as exc:
        raise GridIOError(str(exc)) from exc


def _slice2d(grid, slice_axis, slice_index):
    v = grid.values
    if v.ndim == 2:
        return v, "none"
    if v.ndim != 3:
        raise DimensionMismatch("pgm-slice needs a 2-D or 3-D grid")
    ax = 2 if slice_axis is None else int(slice_axis)
    idx = v.shape[ax] // 2 if slice_index is None else int(slice_index)
    return np.take(v, idx, axis=ax), f"axis={ax} index={idx}"


def read_grid_csv(path) -> WignerGrid:
    """Inverse of ``emit(..., format="csv")``."""
    lines = Path(path).read_text().splitlines()
    if lines[0] != "n,lo,hi,N,epsilon" or lines[2] != "value":
        raise GridIOError(f"{path} is not a grid CSV")
    n, lo, hi, N, eps = lines[1].split(",")
    parse = lambda s, t=float: [t(x) for x in s.split()]  # noqa: E731
    spec = GridSpec(parse(lo), parse(hi), tuple(parse(N, int)), float(eps))
    vals = np.array([float(x) for x in lines[3:]]).reshape(spec.samples)
    if spec.n != int(n):
        raise GridIOError("inconsistent axis count")
    return WignerGrid(spec, vals)
