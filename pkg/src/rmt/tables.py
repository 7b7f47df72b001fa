"""Component tables: the .rmt text format, its parser, emitter, and checks.

A table file is line oriented:

    rmt m=2 kind=trig
    # optional comments
    group [0 + 1a] * [0 + 1a + -1u]^-1
    term * q^{0 + -1u} e 1 2 1 2
    term bold * -1 e 4 1 3 2

Each group line carries a shared coefficient expression; each term line one
component e^{ik}_{jl}, an optional extra factor, and an optional bold mark.
Bold marks the entries whose sign flips when the grading is stripped.
"""

import os
import re
from dataclasses import dataclass, replace
from pathlib import Path

from .coeffs import IntConst, format_expr, parse_expr

DATA_DIR = Path(__file__).parent / "data"

#: nonzero component counts per table
EXPECTED_COUNTS = {
    ("trig", 1): 6, ("trig", 2): 36, ("trig", 3): 216, ("trig", 4): 1296,
    ("quantum", 1): 5, ("quantum", 2): 26, ("quantum", 3): 139, ("quantum", 4): 758,
}

KINDS = ("trig", "quantum")


@dataclass(frozen=True)
class Term:
    i: int
    k: int
    j: int
    l: int
    factor: tuple = ()
    bold: bool = False

    @property
    def quad(self):
        return (self.i, self.k, self.j, self.l)


@dataclass(frozen=True)
class Group:
    coeff: tuple
    terms: tuple


@dataclass(frozen=True)
class Table:
    m: int
    kind: str
    groups: tuple
    variant: str | None = None

    @property
    def nterms(self):
        return sum(len(g.terms) for g in self.groups)

    def iter_terms(self):
        for g in self.groups:
            for t in g.terms:
                yield g, t


_HEADER_RE = re.compile(
    r"^rmt\s+m=(\d)\s+kind=(trig|quantum)(?:\s+variant=([A-Za-z0-9_-]+))?$"
)
_TERM_RE = re.compile(
    r"^term(\s+bold)?(?:\s+\*\s+(.*?))?\s+e\s+(\d+)\s+(\d+)\s+(\d+)\s+(\d+)$"
)


def parse_table(text):
    header = None
    groups = []
    coeff = None
    terms = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("rmt"):
            m = _HEADER_RE.match(line)
            if m is None:
                raise ValueError(f"line {lineno}: bad header {raw!r}")
            header = (int(m.group(1)), m.group(2), m.group(3))
            continue
        if header is None:
            raise ValueError(f"line {lineno}: content before header")
        if line.startswith("group"):
            if coeff is not None:
                groups.append(Group(coeff, tuple(terms)))
            coeff = parse_expr(line[len("group"):].strip())
            terms = []
            continue
        tm = _TERM_RE.match(line)
        if tm is None:
            raise ValueError(f"line {lineno}: bad line {raw!r}")
        if coeff is None:
            raise ValueError(f"line {lineno}: term before any group")
        bold, factor, i, k, j, l = tm.groups()
        terms.append(Term(
            int(i), int(k), int(j), int(l),
            factor=parse_expr(factor) if factor else (),
            bold=bool(bold),
        ))
    if coeff is not None:
        groups.append(Group(coeff, tuple(terms)))
    if header is None:
        raise ValueError("missing header line")
    m, kind, variant = header
    return Table(m=m, kind=kind, groups=tuple(groups), variant=variant)


def format_table(table):
    head = f"rmt m={table.m} kind={table.kind}"
    if table.variant:
        head += f" variant={table.variant}"
    lines = [head, ""]
    for g in table.groups:
        lines.append("group " + format_expr(g.coeff))
        for t in g.terms:
            parts = ["term"]
            if t.bold:
                parts.append("bold")
            if t.factor:
                parts.append("* " + format_expr(t.factor))
            parts.append(f"e {t.i} {t.k} {t.j} {t.l}")
            lines.append(" ".join(parts))
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def validate(table):
    """Return a list of problems; empty means the table is well formed."""
    problems = []
    if not 1 <= table.m <= 4:
        problems.append(f"m={table.m} out of range")
    if table.kind not in KINDS:
        problems.append(f"unknown kind {table.kind!r}")
    dim = 2 ** table.m
    seen = {}
    for gi, (g, t) in enumerate(table.iter_terms()):
        quad = t.quad
        if not all(1 <= x <= dim for x in quad):
            problems.append(f"component e {quad} out of range for m={table.m}")
        if quad in seen:
            problems.append(f"duplicate component e {quad}")
        seen[quad] = gi
    expected = EXPECTED_COUNTS.get((table.kind, table.m))
    if expected is not None and table.nterms != expected:
        problems.append(
            f"{table.kind} m={table.m} has {table.nterms} components, expected {expected}"
        )
    try:
        parse_table(format_table(table))
    except ValueError as exc:
        problems.append(f"round trip failed: {exc}")
    return problems


def boldface_strip(table):
    """Fold each bold mark into a factor of -1 and clear the mark.

    Applying this to a graded table yields the ungraded one.
    """
    groups = []
    for g in table.groups:
        terms = []
        for t in g.terms:
            if t.bold:
                t = replace(t, factor=(IntConst(-1),) + t.factor, bold=False)
            terms.append(t)
        groups.append(Group(g.coeff, tuple(terms)))
    return replace(table, groups=tuple(groups))


def table_filename(m, kind, variant=None):
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if m == 4 and kind == "trig":
        return f"m4_trig_{variant or 'corrected'}.rmt"
    if variant is not None:
        raise ValueError(f"no variants exist for m={m} kind={kind}")
    return f"m{m}_{kind}.rmt"


def data_dir():
    override = os.environ.get("RMT_DATA_DIR")
    return Path(override) if override else DATA_DIR


def load_table(m, kind, variant=None):
    """Load a shipped table; RMT_DATA_DIR overrides the packaged data."""
    path = data_dir() / table_filename(m, kind, variant)
    table = parse_table(path.read_text())
    problems = validate(table)
    if problems:
        raise ValueError(f"{path.name}: " + "; ".join(problems))
    return table


def available_tables():
    """(m, kind, variant) triples of the shipped data files."""
    out = []
    for m in range(1, 5):
        for kind in KINDS:
            if m == 4 and kind == "trig":
                out.append((4, "trig", "literal"))
                out.append((4, "trig", "corrected"))
            else:
                out.append((m, kind, None))
    return out
