"""Command-line surface: emit tensors, verify identities, inspect projectors.

Output is deterministic for a fixed (config, seed) pair: floats are printed
with 17 significant digits, high-precision values as decimal strings, and
wall-clock time appears only in bench output.  Exit codes: 0 all checks pass,
1 check failure, 2 usage error, 3 evaluation (singular point / branch) error.
"""

import sys
import time

import click
import mpmath

from .build import (
    binomial_trace,
    instantiate,
    nonzero_stats,
    spectral_limit_error,
    strip_grading,
)
from .grading import grading
from .params import (
    BACKENDS,
    BranchError,
    ParamPoint,
    SingularParameterError,
)
from .projectors import (
    EigenvalueCollision,
    eigen_equation_residual,
    projector_axioms,
    projector_counts,
    projector_traces,
    recover_projectors,
)
from .tables import (
    available_tables,
    boldface_strip,
    format_table,
    load_table,
)
from .ybe import default_tol, run_checks

SCHEMA = "rmt-report/1"

_EVAL_ERRORS = (SingularParameterError, BranchError, EigenvalueCollision)


def _json(obj, indent=0):
    """Render JSON with floats as bare 17-significant-digit tokens."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [
            f'{inner}"{k}": {_json(v, indent + 1)}' for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [inner + _json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format(obj, ".17g")
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _csv(rows, cols):
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(_csv_cell(row.get(c)) for c in cols))
    return "\n".join(lines)


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _fmt_value(v, p):
    # numbers stay JSON numbers; high-precision values become decimal strings
    if p.backend == "mp":
        with p.precision():
            return mpmath.nstr(v, p.dps)
    return float(v)


def _check_variant(variant, m, kind):
    if variant is not None and not (m == 4 and kind == "trig"):
        raise click.UsageError(
            "--variant applies to the m=4 trigonometric table only"
        )


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _EVAL_ERRORS as exc:
        click.echo(f"evaluation error: {exc}", err=True)
        sys.exit(3)


@click.group()
def main():
    """Graded trigonometric and quantum R matrices: data, checks, reports."""


_opt_q = click.option("--q", type=float, default=1.2, show_default=True,
                      help="Deformation parameter.")
_opt_alpha = click.option("--alpha", type=float, default=0.7,
                          show_default=True, help="Representation parameter.")
_opt_backend = click.option("--backend", type=click.Choice(BACKENDS),
                            default="float64", show_default=True)
_opt_variant = click.option("--variant",
                            type=click.Choice(["literal", "corrected"]),
                            default=None,
                            help="m=4 trigonometric table variant.")
_opt_out = click.option("--out", type=click.Path(dir_okay=False),
                        default=None, help="Write output to a file.")


@main.command()
@click.option("--m", type=click.IntRange(1, 4), required=True)
@click.option("--kind", type=click.Choice(["trig", "quantum"]),
              default="trig", show_default=True)
@_opt_variant
@click.option("--graded/--ungraded", "graded", default=True,
              help="Emit the graded components or the stripped ones.")
@_opt_q
@_opt_alpha
@click.option("--u", type=float, default=0.0, show_default=True,
              help="Spectral parameter.")
@_opt_backend
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "rmt"]),
              default="json", show_default=True)
@_opt_out
def emit(m, kind, variant, graded, q, alpha, u, backend, fmt, out):
    """Instantiate a table at a point and print its nonzero components."""
    _check_variant(variant, m, kind)
    table = load_table(m, kind, variant)

    if fmt == "rmt":
        if not graded:
            table = boldface_strip(table)
        _write(format_table(table).rstrip("\n"), out)
        return

    p = ParamPoint(q=q, alpha=alpha, u=u, backend=backend)
    t = _guard(instantiate, table, p)
    if not graded:
        t = strip_grading(t)
    g = grading(m)
    records = []
    for quad in sorted(t.comp):
        v = t.comp[quad]
        if v == 0:
            continue
        i, k, j, l = quad
        bold = bool(g[j - 1] and (g[l - 1] + g[k - 1]) % 2)
        records.append({"i": i, "k": k, "j": j, "l": l,
                        "value": _fmt_value(v, p), "bold": bold})

    if fmt == "csv":
        _write(_csv(records, ["i", "k", "j", "l", "value"]), out)
        return
    report = {
        "schema": SCHEMA,
        "command": "emit",
        "m": m,
        "kind": kind,
        "variant": table.variant,
        "graded": graded,
        "backend": backend,
        "q": q,
        "alpha": alpha,
        "u": u,
        "seed": None,
        "tol": None,
        "count": len(records),
        "records": records,
    }
    _write(_json(report), out)


def _summary(reports):
    worst = max(r.residual_rel for r in reports)
    npass = sum(1 for r in reports if r.passed)
    return {
        "trials": len(reports),
        "passed": npass,
        "failed": len(reports) - npass,
        "worst_residual_rel": float(worst),
        "all_passed": npass == len(reports),
    }


@main.command()
@click.option("--identity", type=click.Choice(["gybe", "tybe", "qybe", "alt"]),
              default="tybe", show_default=True)
@click.option("--m", type=click.IntRange(1, 4), required=True)
@_opt_variant
@click.option("--trials", type=click.IntRange(min=1), default=20,
              show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--tol", type=float, default=None,
              help="Residual tolerance (default depends on identity and m).")
@_opt_backend
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@_opt_out
def verify(identity, m, variant, trials, seed, tol, backend, fmt, out):
    """Check one Yang-Baxter identity at seeded random admissible points."""
    if identity == "qybe":
        _check_variant(variant, m, "quantum")
    else:
        _check_variant(variant, m, "trig")

    # with no explicit variant the m=4 spectral-parameter checks run both
    # shipped variants and report which one passes
    selector = m == 4 and identity != "qybe" and variant is None
    if selector:
        sides = {}
        for var in ("literal", "corrected"):
            reports = _guard(run_checks, identity, m, trials, seed,
                             variant=var, tol=tol, backend=backend)
            sides[var] = _summary(reports)
        selected = None
        for var in ("corrected", "literal"):
            if sides[var]["all_passed"]:
                selected = var
                break
        report = {
            "schema": SCHEMA,
            "command": "verify",
            "mode": "selector",
            "identity": identity,
            "m": m,
            "backend": backend,
            "seed": seed,
            "trials": trials,
            "tol": tol if tol is not None else default_tol(identity, m),
            "variants": sides,
            "selected": selected,
        }
        _write(_json(report), out)
        sys.exit(0 if selected else 1)

    reports = _guard(run_checks, identity, m, trials, seed,
                     variant=variant, tol=tol, backend=backend)
    records = [r.as_record() for r in reports]
    if fmt == "csv":
        cols = list(records[0].keys())
        _write(_csv(records, cols), out)
    else:
        report = {
            "schema": SCHEMA,
            "command": "verify",
            "identity": identity,
            "m": m,
            "variant": reports[0].variant,
            "backend": backend,
            "seed": seed,
            "trials": trials,
            "tol": reports[0].tol,
            "reports": records,
            "summary": _summary(reports),
        }
        _write(_json(report), out)
    sys.exit(0 if all(r.passed for r in reports) else 1)


@main.command()
@click.option("--m", type=click.IntRange(1, 4), required=True)
@_opt_variant
@_opt_q
@_opt_alpha
@click.option("--u", type=float, default=0.6, show_default=True,
              help="Spectral parameter (a generic, non-degenerate value).")
@_opt_backend
@click.option("--tol", type=float, default=None,
              help="Axiom residual tolerance (default depends on m, backend).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@_opt_out
def projectors(m, variant, q, alpha, u, backend, tol, fmt, out):
    """Recover the spectral projectors and report traces, counts, axioms."""
    _check_variant(variant, m, "trig")
    if tol is None:
        if backend == "mp":
            tol = 1e-20
        else:
            tol = 1e-8 if m == 4 else 1e-9
    p = ParamPoint(q=q, alpha=alpha, u=u, backend=backend)
    projs = _guard(recover_projectors, m, p, variant)
    axioms = projector_axioms(projs, p)
    traces = projector_traces(projs)
    counts = projector_counts(projs)
    eigres = _guard(eigen_equation_residual, m, p, variant)
    rows = []
    traces_ok = True
    for k, (tr, ct) in enumerate(zip(traces, counts), start=1):
        expect = binomial_trace(m, k)
        if abs(tr - expect) > 1e-6:
            traces_ok = False
        rows.append({"k": k, "trace": tr, "trace_expected": expect,
                     "count": ct})
    axioms_ok = all(v < tol for v in axioms.values())
    passed = axioms_ok and traces_ok and eigres < tol
    if fmt == "csv":
        _write(_csv(rows, ["k", "trace", "trace_expected", "count"]), out)
    else:
        report = {
            "schema": SCHEMA,
            "command": "projectors",
            "m": m,
            "variant": (variant or "corrected") if m == 4 else None,
            "backend": backend,
            "q": q,
            "alpha": alpha,
            "u": u,
            "seed": None,
            "tol": tol,
            "projectors": rows,
            "axioms": axioms,
            "eigen_equation": eigres,
            "passed": passed,
        }
        _write(_json(report), out)
    sys.exit(0 if passed else 1)


@main.command()
@click.option("--m", type=click.IntRange(1, 4), required=True)
@_opt_variant
@_opt_q
@_opt_alpha
@_opt_backend
@click.option("--tol", type=float, default=1e-4, show_default=True,
              help="Required relative error at u=40.")
@_opt_out
def limits(m, variant, q, alpha, backend, tol, out):
    """Spectral-limit error curve of the trigonometric table at large u."""
    _check_variant(variant, m, "trig")
    trig = load_table(m, "trig", variant)
    quantum = load_table(m, "quantum")
    p = ParamPoint(q=q, alpha=alpha, backend=backend)
    curve = []
    for u in (20, 40, 60):
        err = _guard(spectral_limit_error, m, p, u, trig, quantum)
        curve.append({"u": u, "error": float(err)})
    errs = [row["error"] for row in curve]
    decreasing = errs[0] > errs[1] > errs[2]
    passed = decreasing and errs[1] < tol
    report = {
        "schema": SCHEMA,
        "command": "limits",
        "m": m,
        "variant": trig.variant,
        "backend": backend,
        "q": q,
        "alpha": alpha,
        "seed": None,
        "tol": tol,
        "curve": curve,
        "decreasing": decreasing,
        "passed": passed,
    }
    _write(_json(report), out)
    sys.exit(0 if passed else 1)


@main.command()
@click.option("--m", "m_opt", type=click.IntRange(1, 4), default=None,
              help="Single size (default: all of m=1..4).")
@_opt_variant
@_opt_q
@_opt_alpha
@click.option("--u", type=float, default=0.6, show_default=True)
@click.option("--v", type=float, default=0.35, show_default=True)
@_opt_backend
@_opt_out
def bench(m_opt, variant, q, alpha, u, v, backend, out):
    """Wall-time table for the spectral-parameter check; no assertions."""
    from .ybe import residual_tybe

    if m_opt is not None:
        _check_variant(variant, m_opt, "trig")
    sizes = [m_opt] if m_opt else [1, 2, 3, 4]
    rows = []
    for m in sizes:
        p = ParamPoint(q=q, alpha=alpha, u=u, v=v, backend=backend)
        t0 = time.perf_counter()
        rep = _guard(residual_tybe, m, p, variant=variant if m == 4 else None)
        dt = time.perf_counter() - t0
        rows.append({"m": m, "variant": rep.variant,
                     "residual_rel": rep.residual_rel,
                     "wall_time": dt})
    report = {
        "schema": SCHEMA,
        "command": "bench",
        "backend": backend,
        "q": q,
        "alpha": alpha,
        "u": u,
        "v": v,
        "seed": None,
        "tol": None,
        "rows": rows,
    }
    _write(_json(report), out)


@main.command("validate-tables")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@_opt_out
def validate_tables(fmt, out):
    """Parse, validate and round-trip every shipped table file."""
    rows = []
    ok = True
    for m, kind, variant in available_tables():
        row = {"m": m, "kind": kind, "variant": variant}
        try:
            table = load_table(m, kind, variant)
            n, pct = nonzero_stats(table)
            row.update({"status": "ok", "nterms": n,
                        "sparsity_pct": round(pct, 4)})
        except Exception as exc:
            ok = False
            row.update({"status": "error", "error": str(exc)})
        rows.append(row)
    if fmt == "csv":
        cols = ["m", "kind", "variant", "status", "nterms", "sparsity_pct",
                "error"]
        _write(_csv(rows, cols), out)
    else:
        report = {
            "schema": SCHEMA,
            "command": "validate-tables",
            "seed": None,
            "tol": None,
            "tables": rows,
            "all_ok": ok,
        }
        _write(_json(report), out)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
