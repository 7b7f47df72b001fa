"""Scalar coefficient expressions: q-powers, q-brackets, Delta powers, helpers.

An expression is a product of atoms.  Exponents of q live on the lattice
c0 + ca*alpha + cu*u with half-integer c0 and integer ca, cu; brackets take
the same linear forms as arguments.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .params import EPS_SING, BranchError, SingularParameterError


@dataclass(frozen=True)
class LinForm:
    """c0 + ca*alpha + cu*u with half-integer c0."""

    c0: Fraction
    ca: int = 0
    cu: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c0", Fraction(self.c0))
        if self.c0.denominator not in (1, 2):
            raise ValueError(f"constant part must be half-integer, got {self.c0}")

    def __neg__(self):
        return LinForm(-self.c0, -self.ca, -self.cu)

    def format(self):
        parts = [str(self.c0)]
        if self.ca:
            parts.append(f"{self.ca}a")
        if self.cu:
            parts.append(f"{self.cu}u")
        return " + ".join(parts)

    _RE = re.compile(r"^(-?\d+(?:/2)?)(?:\+(-?\d+)a)?(?:\+(-?\d+)u)?$")

    @classmethod
    def parse(cls, text):
        s = text.replace(" ", "")
        m = cls._RE.match(s)
        if m is None:
            raise ValueError(f"bad linear form {text!r}")
        c0, ca, cu = m.groups()
        return cls(Fraction(c0), int(ca or 0), int(cu or 0))


@dataclass(frozen=True)
class IntConst:
    value: int


@dataclass(frozen=True)
class DeltaPow:
    power: int


@dataclass(frozen=True)
class QPow:
    exp: LinForm


@dataclass(frozen=True)
class Bracket:
    arg: LinForm
    power: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "power", Fraction(self.power))
        if self.power.denominator not in (1, 2) or self.power == 0:
            raise ValueError(f"bad bracket power {self.power}")


@dataclass(frozen=True)
class HelperRef:
    name: str
    conj: bool = False


_HELPER_RE = re.compile(r"^([fgh]\d{0,2})(~?)$")


def parse_atom(text):
    s = text.strip().replace(" ", "")
    if re.fullmatch(r"-?\d+", s):
        return IntConst(int(s))
    if s.startswith("Delta"):
        rest = s[len("Delta"):]
        if rest == "":
            return DeltaPow(1)
        if rest.startswith("^"):
            return DeltaPow(int(rest[1:]))
        raise ValueError(f"bad Delta atom {text!r}")
    if s.startswith("q^{") and s.endswith("}"):
        return QPow(LinForm.parse(s[3:-1]))
    if s.startswith("["):
        close = s.index("]")
        arg = LinForm.parse(s[1:close])
        rest = s[close + 1:]
        if rest == "":
            return Bracket(arg)
        if rest.startswith("^{") and rest.endswith("}"):
            return Bracket(arg, Fraction(rest[2:-1]))
        if rest.startswith("^"):
            return Bracket(arg, Fraction(rest[1:]))
        raise ValueError(f"bad bracket atom {text!r}")
    m = _HELPER_RE.match(s)
    if m:
        return HelperRef(m.group(1), conj=bool(m.group(2)))
    raise ValueError(f"unrecognized atom {text!r}")


def format_atom(atom):
    if isinstance(atom, IntConst):
        return str(atom.value)
    if isinstance(atom, DeltaPow):
        return "Delta" if atom.power == 1 else f"Delta^{atom.power}"
    if isinstance(atom, QPow):
        return "q^{" + atom.exp.format() + "}"
    if isinstance(atom, Bracket):
        s = "[" + atom.arg.format() + "]"
        if atom.power != 1:
            s += f"^{atom.power}"
        return s
    if isinstance(atom, HelperRef):
        return atom.name + ("~" if atom.conj else "")
    raise TypeError(f"not an atom: {atom!r}")


def parse_expr(text):
    """Parse a '*'-separated product of atoms.  '*' never occurs inside braces."""
    return tuple(parse_atom(part) for part in text.split("*"))


def format_expr(atoms):
    return " * ".join(format_atom(a) for a in atoms)


def eval_atom(atom, p, eps=EPS_SING):
    """Evaluate one atom at a parameter point."""
    from . import helpers

    if isinstance(atom, IntConst):
        return p.scalar(atom.value)
    if isinstance(atom, DeltaPow):
        d = p.delta
        if atom.power < 0 and abs(d) <= eps:
            raise SingularParameterError(f"Delta = {d} too close to zero")
        with p.precision():
            return d ** atom.power
    if isinstance(atom, QPow):
        e = atom.exp
        return p.qpow(e.c0, e.ca, e.cu)
    if isinstance(atom, Bracket):
        v = p.qbracket(atom.arg.c0, atom.arg.ca, atom.arg.cu)
        pw = atom.power
        with p.precision():
            if pw.denominator == 1:
                n = pw.numerator
                if n < 0 and abs(v) <= eps:
                    raise SingularParameterError(
                        f"bracket [{atom.arg.format()}] = {v} too close to zero"
                    )
                return v ** n
            if v <= 0:
                raise BranchError(
                    f"bracket [{atom.arg.format()}] = {v} not positive, "
                    f"cannot take power {pw}"
                )
            return v ** p.scalar(pw)
    if isinstance(atom, HelperRef):
        return helpers.eval_helper(atom.name, p, conj=atom.conj)
    raise TypeError(f"not an atom: {atom!r}")


def eval_expr(atoms, p, eps=EPS_SING):
    """Product of atom values at a parameter point."""
    with p.precision():
        acc = p.one
        for a in atoms:
            acc = acc * eval_atom(a, p, eps)
        return acc
