"""Residuals for the Yang-Baxter identities on V x V x V.

The ungraded checks ride on sparse operator composition.  The graded check
is contracted componentwise so the parity sign of each summand can be
attached exactly where it belongs.
"""

import random
import time
from dataclasses import dataclass

import scipy.sparse as sp

from .build import instantiate, strip_grading, to_R_form
from .grading import grading
from .matrices import SparseMat, maxabs
from .params import EPS_SING, ParamPoint
from .tables import load_table

IDENTITIES = ("gybe", "tybe", "qybe", "alt")

#: default parameter domain for sampled checks
Q_RANGE = (1.05, 1.5)
ALPHA_RANGE = (0.3, 1.2)
U_RANGE = (-2.0, 2.0)


def default_tol(identity, m):
    """Fourth-degree m=4 compositions lose about a digit in binary64."""
    if m == 4 and identity in ("gybe", "tybe", "alt"):
        return 1e-8
    return 1e-9


@dataclass(frozen=True)
class CheckReport:
    identity: str
    m: int
    kind: str
    variant: str | None
    q: float
    alpha: float
    u: float | None
    v: float | None
    backend: str
    tol: float
    residual_max: float
    residual_rel: float
    passed: bool
    seed: int | None = None
    wall_time: float = 0.0

    def as_record(self, with_wall_time=False):
        rec = {
            "identity": self.identity, "m": self.m, "kind": self.kind,
            "variant": self.variant, "q": self.q, "alpha": self.alpha,
            "u": self.u, "v": self.v, "backend": self.backend,
            "tol": self.tol, "seed": self.seed,
            "residual_max": self.residual_max,
            "residual_rel": self.residual_rel,
            "passed": self.passed,
        }
        if with_wall_time:
            rec["wall_time"] = self.wall_time
        return rec


def embed(t, slot):
    """Operator on V^3 acting as t on the named factor pair."""
    d = t.dim
    n = d * d * d

    def place(i, k, j, l, z):
        if slot == 12:
            return ((i - 1) * d + (k - 1)) * d + (z - 1), ((j - 1) * d + (l - 1)) * d + (z - 1)
        if slot == 23:
            return ((z - 1) * d + (i - 1)) * d + (k - 1), ((z - 1) * d + (j - 1)) * d + (l - 1)
        if slot == 13:
            return ((i - 1) * d + (z - 1)) * d + (k - 1), ((j - 1) * d + (z - 1)) * d + (l - 1)
        raise ValueError(f"invalid slot {slot!r}")

    if t.backend == "mp":
        return SparseMat.from_entries(n, (
            place(i, k, j, l, z) + (v,)
            for (i, k, j, l), v in t.comp.items() for z in range(1, d + 1)
        ))
    rows, cols, data = [], [], []
    for (i, k, j, l), v in t.comp.items():
        for z in range(1, d + 1):
            r, c = place(i, k, j, l, z)
            rows.append(r)
            cols.append(c)
            data.append(v)
    return sp.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr()


def _three_tensors(table, p, eps=EPS_SING):
    if p.v is None:
        raise ValueError("point must carry both u and v")
    t_u = instantiate(table, p.with_u(p.u), eps)
    t_uv = instantiate(table, p.with_u(p.u + p.v), eps)
    t_v = instantiate(table, p.with_u(p.v), eps)
    return t_u, t_uv, t_v


def _rel(res, scale):
    if scale == 0:
        return res
    return res / scale


def _finish(identity, m, kind, variant, p, tol, res, scale, t0, seed=None):
    tol = default_tol(identity, m) if tol is None else tol
    rel = float(_rel(res, scale))
    return CheckReport(
        identity=identity, m=m, kind=kind, variant=variant,
        q=p.q, alpha=p.alpha, u=p.u if identity != "qybe" else None,
        v=p.v if identity != "qybe" else None,
        backend=p.backend, tol=tol,
        residual_max=float(res), residual_rel=rel, passed=rel < tol,
        seed=seed, wall_time=time.perf_counter() - t0,
    )


def residual_tybe(m, p, variant=None, tol=None, seed=None):
    """|R12(u) R23(u+v) R12(v) - R23(v) R12(u+v) R23(u)| on stripped tensors."""
    t0 = time.perf_counter()
    table = load_table(m, "trig", variant)
    t_u, t_uv, t_v = (strip_grading(t) for t in _three_tensors(table, p))
    with p.precision():
        lhs = embed(t_u, 12) @ embed(t_uv, 23) @ embed(t_v, 12)
        rhs = embed(t_v, 23) @ embed(t_uv, 12) @ embed(t_u, 23)
        res = maxabs(lhs - rhs)
        scale = maxabs(lhs)
    return _finish("tybe", m, "trig", variant, p, tol, res, scale, t0, seed)


def residual_qybe(m, p, tol=None, seed=None):
    """Braid relation for the stripped quantum tensor; u, v unused."""
    t0 = time.perf_counter()
    table = load_table(m, "quantum")
    t = strip_grading(instantiate(table, p))
    with p.precision():
        b12 = embed(t, 12)
        b23 = embed(t, 23)
        lhs = b12 @ b23 @ b12
        rhs = b23 @ b12 @ b23
        res = maxabs(lhs - rhs)
        scale = maxabs(lhs)
    return _finish("qybe", m, "quantum", None, p, tol, res, scale, t0, seed)


def residual_alt_tybe(m, p, variant=None, tol=None, seed=None):
    """R-form check: R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)."""
    t0 = time.perf_counter()
    table = load_table(m, "trig", variant)
    r_u, r_uv, r_v = (to_R_form(strip_grading(t)) for t in _three_tensors(table, p))
    with p.precision():
        lhs = embed(r_u, 12) @ embed(r_uv, 13) @ embed(r_v, 23)
        rhs = embed(r_v, 23) @ embed(r_uv, 13) @ embed(r_u, 12)
        res = maxabs(lhs - rhs)
        scale = maxabs(lhs)
    return _finish("alt", m, "trig", variant, p, tol, res, scale, t0, seed)


def gybe_sides(t_u, t_uv, t_v, m):
    """Both sides of the graded identity, contracted componentwise.

    Summed indices a', b', c'; free inputs a, b, c and outputs a'', b'', c''.
    Keys are (a'', b'', c'', a, b, c).  The parity factor of each summand is
    the product of the three per-factor strip signs (-1)^{[j]([l]+[k])}, the
    form forced by requiring that stripping the grading removes all signs.
    """
    g = grading(m)

    def gr(x):
        return int(g[x - 1])

    by_j = {}
    for quad, v in t_uv.comp.items():
        by_j.setdefault(quad[2], []).append((quad, v))
    by_jl = {}
    for quad, v in t_u.comp.items():
        by_jl.setdefault((quad[2], quad[3]), []).append((quad, v))

    lhs = {}
    for (bp, ap, a, b), zv in t_v.comp.items():
        for (cp, app, _, c), yv in by_j.get(ap, ()):
            for (cpp, bpp, _, _), xv in by_jl.get((bp, cp), ()):
                e = (gr(bp) * (gr(cp) + gr(bpp))
                     + gr(ap) * (gr(c) + gr(app))
                     + gr(a) * (gr(b) + gr(ap)))
                val = xv * yv * zv
                if e % 2:
                    val = -val
                key = (app, bpp, cpp, a, b, c)
                lhs[key] = lhs.get(key, 0) + val

    by_l = {}
    for quad, v in t_uv.comp.items():
        by_l.setdefault(quad[3], []).append((quad, v))
    by_jl_v = {}
    for quad, v in t_v.comp.items():
        by_jl_v.setdefault((quad[2], quad[3]), []).append((quad, v))

    rhs = {}
    for (cp, bp, b, c), xv in t_u.comp.items():
        for (cpp, ap, a, _), yv in by_l.get(cp, ()):
            for (bpp, app, _, _), zv in by_jl_v.get((ap, bp), ()):
                e = (gr(ap) * (gr(bp) + gr(app))
                     + gr(a) * (gr(cp) + gr(ap))
                     + gr(b) * (gr(c) + gr(bp)))
                val = zv * yv * xv
                if e % 2:
                    val = -val
                key = (app, bpp, cpp, a, b, c)
                rhs[key] = rhs.get(key, 0) + val

    return lhs, rhs


def residual_gybe(m, p, variant=None, tol=None, seed=None):
    """The graded identity on the graded (as-printed) trigonometric tensor."""
    t0 = time.perf_counter()
    table = load_table(m, "trig", variant)
    t_u, t_uv, t_v = _three_tensors(table, p)
    with p.precision():
        lhs, rhs = gybe_sides(t_u, t_uv, t_v, m)
        res = 0
        for key in set(lhs) | set(rhs):
            d = abs(lhs.get(key, 0) - rhs.get(key, 0))
            if d > res:
                res = d
        scale = max((abs(v) for v in lhs.values()), default=0)
    return _finish("gybe", m, "trig", variant, p, tol, res, scale, t0, seed)


RESIDUALS = {
    "gybe": residual_gybe,
    "tybe": residual_tybe,
    "qybe": residual_qybe,
    "alt": residual_alt_tybe,
}


def sample_point(rng, m, need_v=True, backend="float64", eps=EPS_SING,
                 q_range=Q_RANGE, alpha_range=ALPHA_RANGE, u_range=U_RANGE):
    """Draw an admissible point; u, v and u+v must all clear the margin."""
    while True:
        q = rng.uniform(*q_range)
        alpha = rng.uniform(*alpha_range)
        u = rng.uniform(*u_range)
        v = rng.uniform(*u_range) if need_v else None
        p = ParamPoint(q=q, alpha=alpha, u=u, v=v, backend=backend)
        spots = [u] if not need_v else [u, v, u + v]
        if all(p.with_u(x).admissible(m, eps) for x in spots):
            return p


def sample_points(m, trials, seed, **kw):
    rng = random.Random(seed)
    return [sample_point(rng, m, **kw) for _ in range(trials)]


def run_checks(identity, m, trials, seed, variant=None, tol=None, backend="float64"):
    """Seeded batch of residual checks, one report per trial."""
    if identity not in RESIDUALS:
        raise ValueError(f"unknown identity {identity!r}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    points = sample_points(m, trials, seed, need_v=(identity != "qybe"),
                           backend=backend)
    fn = RESIDUALS[identity]
    reports = []
    for p in points:
        if identity == "qybe":
            reports.append(fn(m, p, tol=tol, seed=seed))
        else:
            reports.append(fn(m, p, variant=variant, tol=tol, seed=seed))
    return reports


def perturb(t, quad, rel=0.01):
    """Scale one component by (1 + rel); the mutation-sensitivity probe."""
    if quad not in t.comp:
        raise KeyError(f"no component {quad}")
    comp = dict(t.comp)
    comp[quad] = comp[quad] * (1 + rel)
    return type(t)(m=t.m, comp=comp, backend=t.backend)


def residual_tybe_tensors(t_u, t_uv, t_v, p):
    """TYBE residual for already-instantiated stripped tensors."""
    with p.precision():
        lhs = embed(t_u, 12) @ embed(t_uv, 23) @ embed(t_v, 12)
        rhs = embed(t_v, 23) @ embed(t_uv, 12) @ embed(t_u, 23)
        res = maxabs(lhs - rhs)
        scale = maxabs(lhs)
    return float(_rel(res, scale))


def residual_qybe_tensor(t, p):
    """Braid residual for an already-instantiated stripped tensor."""
    with p.precision():
        b12 = embed(t, 12)
        b23 = embed(t, 23)
        lhs = b12 @ b23 @ b12
        rhs = b23 @ b12 @ b23
        res = maxabs(lhs - rhs)
        scale = maxabs(lhs)
    return float(_rel(res, scale))
