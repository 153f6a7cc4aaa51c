"""``qwigner`` command-line entry point.

Every subcommand prints a TSV report ``check  value  threshold  status`` and
a final bare ``PASS`` or ``FAIL`` line.  Exit status is 0 on success, 1 when
a check fails and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import scipy.linalg

from . import catalog as cat
from . import charfn, geometry, grid, moments
from .core import DEFAULT_TOL, QWignerError, Tolerances, combine, expectation_tuple, pencil
from .io import load_system, system_to_dict

__all__ = ["main", "run", "Report", "check_suite"]


class UsageError(Exception):
    pass


@dataclass
class Report:
    rows: list = field(default_factory=list)

    def add(self, name, value, threshold=None, ok=None):
        """``ok=None`` marks an informational row."""
        status = "INFO" if ok is None else ("PASS" if ok else "FAIL")
        self.rows.append((name, value, threshold, status))
        return ok

    def le(self, name, value, threshold):
        return self.add(name, value, threshold, bool(value <= threshold))

    def ge(self, name, value, threshold):
        return self.add(name, value, threshold, bool(value >= threshold))

    @property
    def passed(self) -> bool:
        return all(r[3] != "FAIL" for r in self.rows)

    def render(self) -> str:
        def fmt(x):
            if x is None:
                return "-"
            if isinstance(x, (float, np.floating)):
                return f"{float(x):.6g}"
            return str(x)

        lines = ["check\tvalue\tthreshold\tstatus"]
        lines += ["\t".join([r[0], fmt(r[1]), fmt(r[2]), r[3]]) for r in self.rows]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


# ---------------------------------------------------------------- inputs


def _tolerances(args) -> Tolerances:
    tol = DEFAULT_TOL
    for name in ("hermiticity", "trace", "psd", "degeneracy"):
        v = getattr(args, f"tol_{name}", None)
        if v is not None:
            tol = replace(tol, **{name: v})
    return tol


def _system(args, need=True):
    """``(A, rho, label)`` from ``--input`` or ``--example``."""
    tol = _tolerances(args)
    if getattr(args, "input", None):
        try:
            A, rho = load_system(args.input, tol)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
        return A, rho, Path(args.input).name
    if getattr(args, "example", None):
        ex = cat.make(args.example, args.seed)
        return ex.tuple, ex.state, ex.name
    if need:
        raise UsageError("give --input FILE or --example NAME")
    return None, None, None


def _outpath(args, name):
    p = Path(name)
    if not p.is_absolute() and args.outdir:
        p = Path(args.outdir) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _spec_from_args(args, A):
    if args.box is None:
        return grid.auto_spec(A, args.samples, args.epsilon)
    eps = args.epsilon if args.epsilon is not None else 1e-2
    return grid.GridSpec([args.box[0]] * A.n, [args.box[1]] * A.n, args.samples, eps)


# ---------------------------------------------------------------- checks


def _check_core(A, rho, rng, rep):
    res = hom = 0.0
    for _ in range(20):
        xi = rng.standard_normal(A.n)
        pe = pencil(A, xi)
        w = pe.weights(rho)
        res = max(res, abs(np.dot(pe.eigenvalues, w) - np.trace(rho @ combine(A, xi)).real))
        for lam in (2.0, 10.0):
            pl = pencil(A, lam * xi)
            hom = max(hom, np.max(np.abs(pl.eigenvalues - lam * pe.eigenvalues)) / lam)
    rep.le("core.spectral_mean", res, 1e-10)
    rep.le("core.homogeneity", hom, 1e-10)
    if A.n >= 2:
        pts = [expectation_tuple(A, v) for v in pencil(A, rng.standard_normal(A.n)).eigenvectors.T]
        rep.add("core.eigvec_in_hull", int(np.sum(geometry.in_jnr_hull(A, pts))), len(pts),
                bool(np.all(geometry.in_jnr_hull(A, pts))))


def _check_charfn(A, rho, rng, rep):
    xis = 3 * rng.standard_normal((100, A.n))
    f = charfn.char_function_many(A, rho, xis)
    fm = charfn.char_function_many(A, rho, -xis)
    rep.le("charfn.origin", abs(charfn.char_function(A, rho, np.zeros(A.n)) - 1), 1e-12)
    rep.le("charfn.bounded", float(np.max(np.abs(f))), 1 + 1e-12)
    rep.le("charfn.hermitian_symmetry", float(np.max(np.abs(fm - f.conj()))), 1e-12)
    oracle = np.array([np.trace(rho @ scipy.linalg.expm(1j * combine(A, x))) for x in xis[:20]])
    rep.le("charfn.expm_oracle", float(np.max(np.abs(oracle - f[:20]))), 1e-10)


def _check_moments(A, rho, rng, rep, R_max=5):
    table = moments.MomentTable(A, max(R_max, 6))
    worst = 0.0
    for R in range(1, R_max + 1):
        xi = rng.standard_normal(A.n)
        scale = max(np.linalg.norm(combine(A, xi), 2) ** R, 1e-300)
        worst = max(worst, moments.check_multinomial(A, xi, R, table) / scale)
    rep.le("moments.multinomial_rel", worst, 1e-9)
    bf = 0.0
    norm = max(np.max(np.linalg.norm(A.ops, 2, axis=(1, 2))), 1.0)
    for R in range(min(R_max, 5) + 1):
        for r in moments.multi_indices(A.n, R):
            bf = max(bf, np.max(np.abs(table[r] - moments.weyl_moment_bruteforce(A, r))) / norm**R)
    rep.le("moments.bruteforce_rel", bf, 1e-12)
    if A.n == 2:
        scale = max(np.linalg.norm(A.ops[0], 2) * np.linalg.norm(A.ops[1], 2), 1.0)
        c = moments.commutator_orthogonality(A.ops[0], A.ops[1], 6)
        rep.le("moments.commutator_orthogonality", c / scale ** 4, 1e-9)
    dim = moments.weyl_span_dimension(A)
    rep.add("moments.span_dimension", dim, A.d**2)
    if A.n == 2:
        rep.le("moments.pair_span_bound", dim, A.d * (A.d + 1) // 2)


def _check_geometry(A, rho, rng, rep):
    if A.n < 2:
        return
    sing = geometry.singular_set(A, 200)
    rep.add("geometry.singular_points", len(sing))
    inside = geometry.in_jnr_hull(A, sing.a) if len(sing) else np.array([True])
    rep.add("geometry.singular_in_hull", int(np.sum(inside)), len(inside), bool(np.all(inside)))
    dirs = geometry.sphere_directions(A.n, 64)
    b = geometry.jnr_boundary(A, dirs)
    ok = ~b.degenerate
    res = np.max(np.abs(np.sum(b.points[ok] * b.u[ok], axis=1) - b.m[ok])) if ok.any() else 0.0
    rep.le("geometry.support_touch", float(res), 1e-9)


def _check_grid(A, rho, rng, rep):
    if A.n > 3:
        rep.add("grid.skipped", A.n)
        return
    spec = grid.auto_spec(A, 128 if A.n <= 2 else 32)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", grid.InsufficientDamping)
        g = grid.compute_wigner_grid(A, rho, spec)
    rep.le("grid.mass", abs(g.total_mass() - 1), 1e-3)
    for k in range(A.n):
        r = [0] * A.n
        r[k] = 1
        rep.le(f"grid.mean_{k + 1}", abs(grid.grid_moment(g, r) - np.trace(rho @ A.ops[k]).real), 1e-2)


SUITES = {
    "core": _check_core,
    "charfn": _check_charfn,
    "moments": _check_moments,
    "geometry": _check_geometry,
    "grid": _check_grid,
}


def check_suite(A, rho, which="all", seed=cat.DEFAULT_SEED) -> Report:
    rep = Report()
    rng = np.random.default_rng(seed)
    names = list(SUITES) if which == "all" else [which]
    for name in names:
        SUITES[name](A, rho, rng, rep)
    return rep


# ---------------------------------------------------------------- subcommands


def cmd_validate(args, rep):
    A, rho, label = _system(args)
    rep.add("source", label)
    rep.add("n", A.n)
    rep.add("d", A.d)
    w = np.linalg.eigvalsh(rho)
    rep.le("state.trace_error", abs(np.trace(rho).real - 1), args.tol_trace or DEFAULT_TOL.trace)
    rep.ge("state.min_eigenvalue", float(w[0]), -(args.tol_psd or DEFAULT_TOL.psd))
    rep.add("state.purity", float(np.trace(rho @ rho).real))


def cmd_charfn(args, rep):
    A, rho, _ = _system(args)
    xi = np.asarray(args.xi, dtype=float)
    if xi.shape != (A.n,):
        raise UsageError(f"--xi needs {A.n} components")
    f = charfn.char_function(A, rho, xi)
    rep.add("re", f.real)
    rep.add("im", f.imag)
    rep.le("abs", abs(f), 1 + 1e-12)
    oracle = np.trace(rho @ scipy.linalg.expm(1j * combine(A, xi)))
    rep.le("expm_oracle", abs(oracle - f), 1e-10)


def cmd_wigner(args, rep):
    A, rho, _ = _system(args)
    spec = _spec_from_args(args, A)
    g = grid.compute_wigner_grid(A, rho, spec, workers=args.threads)
    rep.add("epsilon", spec.epsilon)
    rep.add("samples", "x".join(map(str, spec.samples)))
    rep.le("mass_error", abs(g.total_mass() - 1), 1e-3)
    for k in range(A.n):
        r = [0] * A.n
        r[k] = 1
        rep.le(f"mean_{k + 1}_error", abs(grid.grid_moment(g, r) - np.trace(rho @ A.ops[k]).real), 1e-2)
    neg = grid.negativity_report(g)
    rep.add("min", neg.min_value)
    rep.add("peak", neg.peak)
    rep.add("negative_mass", neg.negative_mass)
    rep.le("residual_imag", g.residual_imag, 1e-8)
    rep.add("nyquist_damping", g.damping)
    if args.out:
        rep.add("csv", grid.emit(g, _outpath(args, args.out), "csv"))
    if args.image:
        rep.add("pgm", grid.emit(g, _outpath(args, args.image), "pgm-slice", args.slice_axis, args.slice_index))


def cmd_marginal(args, rep):
    A, rho, _ = _system(args)
    spec = _spec_from_args(args, A)
    g = grid.compute_wigner_grid(A, rho, spec, workers=args.threads)
    if args.axis is not None:
        u = np.eye(A.n)[args.axis]
        t, dens = grid.marginal(g, args.axis)
    else:
        if args.direction is None or len(args.direction) != A.n:
            raise UsageError(f"give --axis K or --direction with {A.n} components")
        u = np.asarray(args.direction, dtype=float)
        t, dens = grid.marginal(g, u)
    ref = grid.smeared_spectral_marginal(A, rho, u, spec.epsilon, t)
    dt = t[1] - t[0]
    rep.le("l1_vs_spectral", float(np.sum(np.abs(dens - ref)) * dt), 1e-2)
    if args.out:
        p = _outpath(args, args.out)
        np.savetxt(p, np.stack([t, dens, ref], axis=1), delimiter=",", header="t,density,spectral",
                   comments="", fmt="%.17g")
        rep.add("csv", p)


def cmd_jnr(args, rep):
    A, rho, _ = _system(args)
    dirs = geometry.sphere_directions(A.n, args.resolution)
    b = geometry.jnr_boundary(A, dirs)
    rep.add("directions", len(dirs))
    rep.add("degenerate_directions", int(b.degenerate.sum()))
    rep.add("min_top_gap", float(np.min(b.top_gap)))
    if args.out:
        p = _outpath(args, args.out)
        head = [f"u{k + 1}" for k in range(A.n)] + ["m"] + [f"a{k + 1}" for k in range(A.n)] + ["degenerate"]
        data = np.column_stack([b.u, b.m, b.points, b.degenerate.astype(float)])
        np.savetxt(p, data, delimiter=",", header=",".join(head), comments="", fmt="%.17g")
        rep.add("csv", p)


def cmd_sing(args, rep):
    A, rho, _ = _system(args)
    s = geometry.singular_set(A, args.resolution)
    rep.add("points", len(s))
    p = _outpath(args, args.out)
    geometry.emit_points(s, p)
    rep.add("csv", p)
    if args.residual:
        rep.le(f"max_residual_{args.residual}", geometry.polynomial_residual(s.a, args.residual), args.residual_tol)
    inside = geometry.in_jnr_hull(A, s.a) if len(s) else np.array([True])
    rep.add("in_hull", int(inside.sum()), len(inside), bool(inside.all()))


def cmd_curves(args, rep):
    A, rho, _ = _system(args)
    if A.n != 2:
        raise UsageError("curves need a pair")
    t = 2 * np.pi * np.arange(args.t_samples) / args.t_samples
    c = geometry.eigenvalue_curves(A.ops[0], A.ops[1], t)
    rep.add("ambiguous_steps", int(c.ambiguous.sum()))
    worst = 0.0
    for ti in t[:: max(1, len(t) // 50)]:
        pe = pencil(A, [np.cos(ti), np.sin(ti)])
        for mu in range(A.d):
            try:
                val, der = geometry.curve_point(A.ops[0], A.ops[1], ti, mu)
            except geometry.DegenerateBranch:
                continue
            a = geometry.reconstruct_from_curve(val, der, ti)
            worst = max(worst, np.max(np.abs(a - expectation_tuple(A, pe.eigenvectors[:, mu]))))
    rep.le("reconstruction_error", worst, 1e-6)
    if args.out:
        p = _outpath(args, args.out)
        head = ["t"] + [f"c{m + 1}" for m in range(A.d)] + ["ambiguous"]
        np.savetxt(p, np.column_stack([t, c.values, c.ambiguous.astype(float)]), delimiter=",",
                   header=",".join(head), comments="", fmt="%.17g")
        rep.add("csv", p)


def cmd_ellipses(args, rep):
    A, rho, _ = _system(args)
    if A.n != 2:
        raise UsageError("ellipses need a pair")
    e = geometry.nearly_commuting_ellipses(A.ops[0], A.ops[1], args.resolution)
    rep.add("offdiag_max", e.offdiag_max)
    rep.add("ellipses", len(e.pairs))
    rep.le("hausdorff", e.hausdorff, args.max_distance)
    if args.out:
        p = _outpath(args, args.out)
        geometry.emit_points(e.samples, p)
        rep.add("csv", p)


def cmd_moments(args, rep):
    A, rho, _ = _system(args)
    rng = np.random.default_rng(args.seed)
    _check_moments(A, rho, rng, rep, args.degree)


def cmd_infocomp(args, rep):
    A, rho, _ = _system(args)
    dim = moments.weyl_span_dimension(A)
    rep.add("span_dimension", dim, A.d**2)
    rep.add("info_complete", dim == A.d**2)
    if A.n == 2:
        rep.le("pair_bound", dim, A.d * (A.d + 1) // 2)
    if np.allclose(A.ops.imag, 0):
        rep.le("real_bound", dim, A.d * (A.d + 1) // 2)
    if A.n == 2 and args.samples:
        res = moments.incomp_trace_identity(A.ops[0], A.ops[1], args.samples, np.random.default_rng(args.seed))
        scale = max(np.linalg.norm(A.ops[0], 2) * np.linalg.norm(A.ops[1], 2), 1.0)
        rep.le("trace_identity", res / scale, 1e-9)


def cmd_normal_complete(args, rep):
    A, rho, _ = _system(args)
    if A.n != 2:
        raise UsageError("normal ordering needs a pair")
    r = moments.normal_complete(A.ops[0], A.ops[1], args.overlap_tol)
    rep.add("min_overlap", r.min_overlap, args.overlap_tol)
    rep.add("witness", f"{r.witness[0]},{r.witness[1]}")
    rep.add("complete", r.complete)


def cmd_bmv(args, rep):
    rep.le("triple_counterexample_error", abs(moments.bmv_triple_counterexample() + 0.25), 1e-12)
    rng = np.random.default_rng(args.seed)
    worst = np.inf
    for _ in range(args.pairs):
        ops = []
        for _ in range(2):
            g = rng.standard_normal((args.dim, args.dim)) + 1j * rng.standard_normal((args.dim, args.dim))
            p = g @ g.conj().T
            ops.append(p / np.linalg.norm(p, 2))
        for R in range(args.max_degree + 1):
            for n in range(R + 1):
                worst = min(worst, moments.bmv_mixed_moment(ops[0], ops[1], n, R - n))
    if args.pairs:
        rep.ge("min_mixed_moment", worst, -1e-10)
    A, rho, _ = _system(args, need=False)
    if A is not None:
        if A.n != 2:
            raise UsageError("BMV moments need a pair")
        vals = [moments.bmv_mixed_moment(A.ops[0], A.ops[1], n, R - n)
                for R in range(args.max_degree + 1) for n in range(R + 1)]
        rep.ge("input_min_mixed_moment", min(vals), -1e-10)


def cmd_symmetry(args, rep):
    p = args.p
    rep.add("twirl_rank", cat.twirl_rank(p), 2 * p, cat.twirl_rank(p) == 2 * p)
    ex = cat.dihedral_multiplet(p, args.seed)
    A = ex.tuple
    law = 0.0
    for u, r in ex.extra["group"]:
        lhs = np.einsum("ij,kjl,lm->kim", u.T, A.ops, u)
        law = max(law, np.max(np.abs(lhs - np.tensordot(r, A.ops, axes=1))))
    rep.le("multiplet_law", law, 1e-12)
    if args.samples:
        from .core import random_state

        rho = random_state(p, np.random.default_rng(args.seed))
        u, r = ex.extra["group"][2]
        spec = grid.auto_spec(A, args.samples, 1e-2, pad=0.3)
        g0 = grid.compute_wigner_grid(A, rho, spec, workers=args.threads)
        g1 = grid.compute_wigner_grid(A, u @ rho @ u.T, spec, workers=args.threads)
        pts = spec.points()
        err = np.max(np.abs(g1.values - grid.interpolate(g0, pts @ r)))
        rep.le("grid_covariance_rel", err / g0.peak, 0.02)


def cmd_example(args, rep):
    if args.action == "list":
        for name in cat.catalog():
            rep.add("example", name)
        return
    if not args.name:
        raise UsageError("example dump needs a name")
    ex = cat.make(args.name, args.seed)
    text = json.dumps(system_to_dict(ex.tuple, ex.state))
    if args.out:
        p = _outpath(args, args.out)
        p.write_text(text + "\n")
        rep.add("json", p)
    else:
        print(text)
        rep.rows.append(None)  # marker: JSON already on stdout, no report


def cmd_check(args, rep):
    A, rho, label = _system(args)
    rep.add("source", label)
    rep.rows.extend(check_suite(A, rho, args.suite, args.seed).rows)


# ---------------------------------------------------------------- parser


def _add_common(p, system=True):
    if system:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--input", metavar="FILE", help="matrix-tuple JSON file")
        src.add_argument("--example", metavar="NAME", help="catalog example (see 'example list')")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=cat.DEFAULT_SEED,
                   help="seed for every random draw (default %(default)#x)")
    p.add_argument("--threads", type=int, default=None, help="cap on FFT worker threads")
    p.add_argument("--outdir", default=None, help="directory for relative output paths")
    for name in ("hermiticity", "trace", "psd", "degeneracy"):
        p.add_argument(f"--tol-{name}", type=float, default=None, help=f"override the {name} tolerance")


def _add_grid(p):
    p.add_argument("--epsilon", type=float, default=None, help="Gaussian regularization parameter")
    p.add_argument("--box", type=float, nargs=2, metavar=("LO", "HI"), default=None,
                   help="cube [LO, HI]^n (default: padded numerical-range box)")
    p.add_argument("--samples", type=int, default=64, help="samples per axis, a power of two")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qwigner", description="Generalized Wigner distributions of Hermitian tuples.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, system=True):
        p = sub.add_parser(name, help=help, description=help)
        _add_common(p, system)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "Input validation: Hermitian operators and a density matrix.")

    p = add("charfn", cmd_charfn, "Characteristic function tr(rho exp(i xi.A)) via the pencil spectrum.")
    p.add_argument("--xi", type=float, nargs="+", required=True)

    p = add("wigner", cmd_wigner, "Regularized Wigner distribution on a grid (Gaussian damping and FFT).")
    _add_grid(p)
    p.add_argument("--out", help="CSV grid file")
    p.add_argument("--image", help="PGM image of a 2-D slice")
    p.add_argument("--slice-axis", type=int, default=None)
    p.add_argument("--slice-index", type=int, default=None)

    p = add("marginal", cmd_marginal, "Marginal property: projection of the grid against the spectral measure of u.A.")
    _add_grid(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--axis", type=int)
    g.add_argument("--direction", type=float, nargs="+")
    p.add_argument("--out", help="CSV of t, grid density, spectral density")

    p = add("jnr", cmd_jnr, "Joint numerical range boundary from top eigenvectors of u.A.")
    p.add_argument("--resolution", type=int, default=360)
    p.add_argument("--out", help="CSV of u, support value, boundary point")

    p = add("sing", cmd_sing, "Singular support: expectation tuples of nondegenerate pencil eigenvectors.")
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--residual", choices=["gpoly", "heart_quartic"], default=None,
                   help="published polynomial to evaluate on the samples")
    p.add_argument("--residual-tol", type=float, default=1e-6)
    p.add_argument("--out", default="sing.csv", help="point cloud CSV (default %(default)s)")

    p = add("curves", cmd_curves, "Eigenvalue curves of A1 cos t + A2 sin t and boundary reconstruction.")
    p.add_argument("--t-samples", type=int, default=720)
    p.add_argument("--out", help="CSV of t and continuity-matched branches")

    p = add("ellipses", cmd_ellipses, "Nearly commuting pairs: singular set against compressed 2x2 ellipses.")
    p.add_argument("--resolution", type=int, default=4000)
    p.add_argument("--max-distance", type=float, default=0.15)
    p.add_argument("--out", help="singular point cloud CSV")

    p = add("moments", cmd_moments, "Weyl-ordered moments: multinomial identity, oracle and commutator checks.")
    p.add_argument("--degree", type=int, default=5)

    p = add("infocomp", cmd_infocomp, "Informational completeness: real dimension of the Weyl moment span.")
    p.add_argument("--samples", type=int, default=20, help="random pairs for the pair trace identity")

    p = add("normal-complete", cmd_normal_complete, "Completeness of normally ordered moments A1^p A2^q.")
    p.add_argument("--overlap-tol", type=float, default=1e-9)

    p = add("bmv", cmd_bmv, "BMV-type mixed-moment positivity and the three-projection counterexample.")
    p.add_argument("--pairs", type=int, default=50)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=10)

    p = add("symmetry", cmd_symmetry, "Dihedral covariance: twirl rank and rotated-state grid check.", system=False)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--samples", type=int, default=128, help="grid samples per axis, 0 to skip the grid")

    p = add("example", cmd_example, "Catalog of named operator systems: list names or dump JSON.", system=False)
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.add_argument("--out", help="write the JSON here instead of stdout")

    p = add("check", cmd_check, "Invariant suite (spectral, characteristic function, moments, geometry, grid).")
    p.add_argument("suite", choices=["all", *SUITES])
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report()
    try:
        args.func(args, rep)
    except UsageError as exc:
        print(f"qwigner: {exc}", file=sys.stderr)
        return 2
    except cat.UnknownExample as exc:
        print(f"qwigner: {exc.args[0]}", file=sys.stderr)
        return 2
    except QWignerError as exc:
        rep.add(type(exc).__name__, str(exc), None, False)
    except (ValueError, OSError) as exc:
        print(f"qwigner: {exc}", file=sys.stderr)
        return 2
    if rep.rows and rep.rows[-1] is None:
        return 0
    print(rep.render())
    return 0 if rep.passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
