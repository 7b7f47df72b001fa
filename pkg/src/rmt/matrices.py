"""Sparse matrix plumbing shared by the two numeric backends.

binary64 work rides on scipy CSR matrices; the arbitrary-precision backend
uses a small dict-of-rows type, since scipy cannot hold mpmath scalars.
Callers are responsible for pinning mpmath precision around mp arithmetic.
"""

import numpy as np
import scipy.sparse as sp


class SparseMat:
    """Dict-of-rows sparse matrix over an arbitrary scalar type."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim, rows=None):
        self.dim = dim
        self.rows = rows if rows is not None else {}

    @classmethod
    def from_entries(cls, dim, entries):
        rows = {}
        for r, c, v in entries:
            rows.setdefault(r, {})[c] = v
        return cls(dim, rows)

    @classmethod
    def eye(cls, dim, one=1.0):
        return cls(dim, {i: {i: one} for i in range(dim)})

    def entries(self):
        for r, row in self.rows.items():
            for c, v in row.items():
                yield r, c, v

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    if c in acc:
                        acc[c] = acc[c] + a * b
                    else:
                        acc[c] = a * b
            if acc:
                out[r] = acc
        return SparseMat(self.dim, out)

    def _combine(self, other, sign):
        out = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            dst = out.setdefault(r, {})
            for c, v in row.items():
                dst[c] = dst.get(c, 0) + sign * v
        return SparseMat(self.dim, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scaled(self, s):
        return SparseMat(self.dim, {
            r: {c: v * s for c, v in row.items()} for r, row in self.rows.items()
        })

    def maxabs(self):
        best = 0
        for _, _, v in self.entries():
            a = abs(v)
            if a > best:
                best = a
        return best

    def trace(self):
        t = 0
        for r, row in self.rows.items():
            if r in row:
                t = t + row[r]
        return t


def eye(dim, backend="float64", one=1.0):
    if backend == "mp":
        return SparseMat.eye(dim, one)
    return sp.identity(dim, format="csr")


def maxabs(M):
    if isinstance(M, SparseMat):
        return M.maxabs()
    return float(np.max(np.abs(M.data))) if M.nnz else 0.0


def trace(M):
    if isinstance(M, SparseMat):
        return M.trace()
    return float(M.diagonal().sum())


def scaled(M, s):
    if isinstance(M, SparseMat):
        return M.scaled(s)
    return M * s


def count_above(M, threshold):
    """Number of entries with |value| > threshold."""
    if isinstance(M, SparseMat):
        return sum(1 for _, _, v in M.entries() if abs(v) > threshold)
    return int(np.count_nonzero(np.abs(M.data) > threshold))
