"""Spectral projectors recovered by Lagrange interpolation in the operator.

P_k = prod_{j != k} (T - Xi_j I) / (Xi_k - Xi_j), evaluated as repeated
sparse multiplies against the instantiated trigonometric tensor; no dense
eigendecomposition anywhere.  All spectral statements hold for the
grading-stripped matrices, so everything here works in the stripped picture.
"""

from .build import eigenvalue_separation, eigenvalues, instantiate, strip_grading
from .matrices import count_above, eye, maxabs, scaled, trace
from .params import EPS_SING
from .tables import load_table

MIN_SEPARATION = 1e-6


class EigenvalueCollision(ArithmeticError):
    """Two eigenvalues too close for stable interpolation at this point."""


def recover_projectors(m, p, variant=None, min_separation=MIN_SEPARATION):
    """Projectors P_1..P_{m+1} from the trigonometric tensor at point p."""
    vals = eigenvalues(m, "trig", p)
    sep = eigenvalue_separation(vals)
    if sep <= min_separation:
        raise EigenvalueCollision(
            f"eigenvalue separation {sep} below {min_separation} at u={p.u}"
        )
    table = load_table(m, "trig", variant)
    T = strip_grading(instantiate(table, p)).to_matrix()
    n = (2 ** m) ** 2
    I = eye(n, p.backend, one=p.one)
    projs = []
    with p.precision():
        for k, xk in enumerate(vals):
            acc = I
            denom = p.one
            for j, xj in enumerate(vals):
                if j == k:
                    continue
                acc = acc @ (T - scaled(I, xj))
                denom = denom * (xk - xj)
            projs.append(scaled(acc, 1 / denom))
    return projs


def projector_axioms(projs, p):
    """Max-norm residuals for idempotency, orthogonality, completeness."""
    n = projs[0].shape[0] if hasattr(projs[0], "shape") else projs[0].dim
    I = eye(n, p.backend, one=p.one)
    with p.precision():
        idem = max(maxabs(P @ P - P) for P in projs)
        orth = 0
        for a in range(len(projs)):
            for b in range(len(projs)):
                if a == b:
                    continue
                r = maxabs(projs[a] @ projs[b])
                if r > orth:
                    orth = r
        total = projs[0]
        for P in projs[1:]:
            total = total + P
        comp = maxabs(total - I)
    return {
        "idempotency": float(idem),
        "orthogonality": float(orth),
        "completeness": float(comp),
    }


def projector_traces(projs):
    return [float(trace(P)) for P in projs]


def projector_counts(projs, threshold_factor=1e-10):
    """Nonzero counts with threshold 1e-10 times each projector's max entry."""
    return [count_above(P, threshold_factor * maxabs(P)) for P in projs]


def u_independence(m, p, u0, u1, variant=None):
    """Max deviation between projector sets recovered at two u values."""
    ps0 = recover_projectors(m, p.with_u(u0), variant)
    ps1 = recover_projectors(m, p.with_u(u1), variant)
    with p.precision():
        return float(max(maxabs(a - b) for a, b in zip(ps0, ps1)))


def reconstruct(projs, vals, p):
    """Sum of eigenvalue-weighted projectors, as a matrix."""
    with p.precision():
        total = scaled(projs[0], vals[0])
        for P, x in zip(projs[1:], vals[1:]):
            total = total + scaled(P, x)
        return total


def reconstruction_residual(m, kind, p, p_recover=None, variant=None, eps=EPS_SING):
    """Relative deviation between Sum_k xi_k P_k and the instantiated table.

    Projectors are recovered at p_recover (default: p itself); weights and the
    reference tensor are taken at p.
    """
    p_rec = p_recover or p
    projs = recover_projectors(m, p_rec, variant)
    vals = eigenvalues(m, kind, p)
    table = load_table(m, kind, variant if kind == "trig" else None)
    ref = strip_grading(instantiate(table, p, eps)).to_matrix()
    with p.precision():
        built = reconstruct(projs, vals, p)
        return float(maxabs(built - ref) / maxabs(ref))


def eigen_equation_residual(m, p, variant=None):
    """Max over k of |T P_k - Xi_k P_k| relative to |T|."""
    table = load_table(m, "trig", variant)
    T = strip_grading(instantiate(table, p)).to_matrix()
    projs = recover_projectors(m, p, variant)
    vals = eigenvalues(m, "trig", p)
    with p.precision():
        worst = max(
            maxabs((T @ P) - scaled(P, x)) for P, x in zip(projs, vals)
        )
        return float(worst / maxabs(T))
