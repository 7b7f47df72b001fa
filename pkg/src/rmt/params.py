"""Evaluation points (q, alpha, u) and the two numeric backends."""

import contextlib
from dataclasses import dataclass, replace
from fractions import Fraction

import mpmath


class SingularParameterError(ArithmeticError):
    """A bracket in a denominator is too close to zero at this point."""


class BranchError(ArithmeticError):
    """A half-power bracket came out non-positive on the real backend."""


#: default admissibility margin for denominator brackets
EPS_SING = 1e-3

BACKENDS = ("float64", "mp")


@dataclass(frozen=True)
class ParamPoint:
    """A numeric evaluation point for the scalar algebra.

    Parameters
    ----------
    q : float
        Deformation parameter, q > 0 and q != 1.
    alpha : float
        Representation parameter.
    u : float
        Spectral parameter.
    v : float, optional
        Second spectral parameter, used by the Yang-Baxter checks.
    backend : str
        "float64" (default) or "mp" (mpmath arbitrary precision).
    dps : int
        Decimal digits for the "mp" backend.
    """

    q: float
    alpha: float
    u: float = 0.0
    v: float | None = None
    backend: str = "float64"
    dps: int = 50

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.q <= 0:
            raise ValueError("q must be positive")
        if self.q == 1:
            raise ValueError("q = 1 is singular (Delta = 0)")

    def precision(self):
        """Context manager pinning mpmath working precision; no-op on float64."""
        if self.backend == "mp":
            return mpmath.workdps(self.dps)
        return contextlib.nullcontext()

    def scalar(self, x):
        """Coerce x to this point's scalar type."""
        if self.backend == "mp":
            with mpmath.workdps(self.dps):
                if isinstance(x, Fraction):
                    return mpmath.mpf(x.numerator) / x.denominator
                return mpmath.mpf(x)
        if isinstance(x, Fraction):
            return x.numerator / x.denominator
        return float(x)

    @property
    def one(self):
        return self.scalar(1)

    def with_u(self, u):
        return replace(self, u=float(u), v=None)

    def with_backend(self, backend, dps=None):
        return replace(self, backend=backend, dps=dps or self.dps)

    def qpow(self, c0=0, calpha=0, cu=0):
        """q**(c0 + calpha*alpha + cu*u) in the backend arithmetic."""
        with self.precision():
            q = self.scalar(self.q)
            e = self.scalar(c0) + self.scalar(self.alpha) * calpha + self.scalar(self.u) * cu
            if self.backend == "mp":
                return mpmath.power(q, e)
            return q ** e

    def qbracket(self, c0=0, calpha=0, cu=0):
        """[c0 + calpha*alpha + cu*u]_q = (q^X - q^-X) / (q - 1/q)."""
        with self.precision():
            num = self.qpow(c0, calpha, cu) - self.qpow(-c0, -calpha, -cu)
            return num / self.delta

    @property
    def delta(self):
        """Delta = q - 1/q."""
        with self.precision():
            q = self.scalar(self.q)
            return q - 1 / q

    def admissible(self, m, eps=EPS_SING):
        """True if no denominator bracket [alpha + j -+ u], j = 0..m-1, is within eps of zero."""
        for j in range(m):
            if abs(self.qbracket(j, 1, -1)) <= eps:
                return False
            if abs(self.qbracket(j, 1, 1)) <= eps:
                return False
        return True

    def require_admissible(self, m, eps=EPS_SING):
        if not self.admissible(m, eps):
            raise SingularParameterError(
                f"point (q={self.q}, alpha={self.alpha}, u={self.u}) "
                f"has a near-zero denominator bracket at level m={m}"
            )


def qbracket_limit_check(x, eps):
    """[x]_{1+eps}; tends to x as eps -> 0."""
    if not 0 < eps <= 1e-3:
        raise ValueError("eps must lie in (0, 1e-3]")
    p = ParamPoint(q=1.0 + eps, alpha=0.0, u=0.0)
    return p.qbracket(x)
