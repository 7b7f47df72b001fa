"""Instantiate component tables as sparse rank-4 tensors and transform them.

A tensor component e^{ik}_{jl} maps the input pair (j,l) to the output pair
(i,k); flattened to a matrix the row is (i-1)*2^m + (k-1) and the column is
(j-1)*2^m + (l-1).
"""

import math
from dataclasses import dataclass

import mpmath
import numpy as np
import scipy.sparse as sp

from .coeffs import eval_expr
from .grading import grading
from .matrices import SparseMat
from .params import EPS_SING


def _neg_exact(v):
    # mpmath rounds even unary negation to the ambient precision, so flip
    # the sign without re-rounding; float negation is exact already
    if isinstance(v, mpmath.mpf):
        return mpmath.fneg(v, exact=True)
    return -v


@dataclass(frozen=True)
class SparseTensor4:
    m: int
    comp: dict
    backend: str = "float64"

    @property
    def dim(self):
        return 2 ** self.m

    @property
    def nnz(self):
        return len(self.comp)

    def __getitem__(self, quad):
        return self.comp.get(quad, 0)

    def to_matrix(self):
        dim = self.dim
        if self.backend == "mp":
            return SparseMat.from_entries(dim * dim, (
                ((i - 1) * dim + (k - 1), (j - 1) * dim + (l - 1), v)
                for (i, k, j, l), v in self.comp.items()
            ))
        rows, cols, data = [], [], []
        for (i, k, j, l), v in self.comp.items():
            rows.append((i - 1) * dim + (k - 1))
            cols.append((j - 1) * dim + (l - 1))
            data.append(v)
        mat = sp.coo_matrix((data, (rows, cols)), shape=(dim * dim, dim * dim))
        return mat.tocsr()

    def maxabs(self):
        return max((abs(v) for v in self.comp.values()), default=0)


def instantiate(table, p, eps=EPS_SING):
    """Evaluate every table entry at p; the (1,1,1,1) component comes out 1."""
    p.require_admissible(table.m, eps)
    comp = {}
    with p.precision():
        for g in table.groups:
            base = eval_expr(g.coeff, p, eps)
            for t in g.terms:
                v = base
                if t.factor:
                    v = v * eval_expr(t.factor, p, eps)
                if t.quad in comp:
                    raise ValueError(f"duplicate component {t.quad}")
                comp[t.quad] = v
    return SparseTensor4(m=table.m, comp=comp, backend=p.backend)


def strip_grading(t):
    """Multiply each component e^{ik}_{jl} by (-1)^{[j]([l]+[k])}.

    Applied to a graded solution this yields the ungraded one; applying it
    twice is the identity.
    """
    g = grading(t.m)
    comp = {}
    for (i, k, j, l), v in t.comp.items():
        if g[j - 1] and (g[l - 1] + g[k - 1]) % 2:
            v = _neg_exact(v)
        comp[(i, k, j, l)] = v
    return SparseTensor4(m=t.m, comp=comp, backend=t.backend)


def to_R_form(t):
    """Swap the output pair: R^{ik}_{jl} = Rcheck^{ki}_{jl}."""
    comp = {(k, i, j, l): v for (i, k, j, l), v in t.comp.items()}
    return SparseTensor4(m=t.m, comp=comp, backend=t.backend)


def identity_tensor(m, p):
    dim = 2 ** m
    comp = {(i, k, i, k): p.one for i in range(1, dim + 1) for k in range(1, dim + 1)}
    return SparseTensor4(m=m, comp=comp, backend=p.backend)


def tensor_diff_maxabs(a, b):
    best = 0
    for quad in set(a.comp) | set(b.comp):
        d = abs(a[quad] - b[quad])
        if d > best:
            best = d
    return best


def xi_trig(k, p):
    """Trigonometric eigenvalue: prod_{j=0}^{k-2} [alpha+j+u]/[alpha+j-u]."""
    if k > 1:
        p.require_admissible(k - 1)
    with p.precision():
        val = p.one
        for j in range(k - 1):
            val = val * p.qbracket(j, 1, 1) / p.qbracket(j, 1, -1)
        return val


def xi_quantum(k, p):
    """Quantum eigenvalue: (-1)^(k-1) q^{(k-1)(2 alpha + k - 2)}."""
    val = p.qpow((k - 1) * (k - 2), 2 * (k - 1), 0)
    if (k - 1) % 2:
        val = _neg_exact(val)
    return val


def eigenvalues(m, kind, p):
    fn = xi_trig if kind == "trig" else xi_quantum
    return [fn(k, p) for k in range(1, m + 2)]


def eigenvalue_separation(vals):
    return min(
        abs(vals[a] - vals[b])
        for a in range(len(vals)) for b in range(a + 1, len(vals))
    )


def nonzero_stats(table):
    """Component count and percentage sparsity relative to 2^{4m} slots."""
    n = table.nterms
    total = 2 ** (4 * table.m)
    return n, 100.0 * n / total


def spectral_limit_error(m, p, u, trig_table, quantum_table):
    """Max relative deviation of the trigonometric tensor at large u from the
    quantum one."""
    t_trig = instantiate(trig_table, p.with_u(u))
    t_quant = instantiate(quantum_table, p)
    scale = t_quant.maxabs()
    return tensor_diff_maxabs(t_trig, t_quant) / scale


def binomial_trace(m, k):
    """Expected projector trace 2^m * C(m, k-1)."""
    return 2 ** m * math.comb(m, k - 1)
