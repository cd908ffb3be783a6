"""Command-line front end.

Subcommands::

    clone    build and run one cloner, print its report
    table    fidelity / added-noise table over an (N, M) grid
    circuit  export a cloner's element list

Exit codes: 0 when every clone saturates the optimal bounds, 1 when a run
completes but misses them, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .cloner import VARIANTS, build_cloner, circuit_from_json, report

MAX_M = 32
MAX_PERCOPY_MODES = 128


class UsageError(Exception):
    pass


def parse_alpha(text: str) -> complex:
    """Parse ``"re,im"`` (or a lone ``"re"``) into a complex amplitude."""
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("alpha must be finite")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def check_config(N: int, M: int, variant: str, squeeze: float = 0.0) -> None:
    if not 1 <= N <= M <= MAX_M:
        raise UsageError(f"need 1 <= N <= M <= {MAX_M}, got N={N}, M={M}")
    if variant == "percopy" and N * M + N > MAX_PERCOPY_MODES:
        raise UsageError(
            f"percopy circuit for N={N}, M={M} needs {N * M + N} modes "
            f"(limit {MAX_PERCOPY_MODES})"
        )
    if not math.isfinite(squeeze):
        raise UsageError("squeeze must be finite")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def render_report(rep, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["clone", "mean_x", "mean_p", "var_x", "var_p", "fidelity",
                    "optimal_fidelity", "added_var_x", "added_var_p",
                    "optimal_added_variance", "saturated"])
        for i in range(rep.M):
            vals = [rep.means[i, 0], rep.means[i, 1], rep.covs[i, 0, 0], rep.covs[i, 1, 1],
                    rep.fidelities[i], rep.optimal_fidelity, rep.added_variance[i, 0],
                    rep.added_variance[i, 1], rep.optimal_added_variance]
            w.writerow([i, *(repr(float(v)) for v in vals), str(rep.saturated).lower()])
        return buf.getvalue()
    lines = [
        f"{rep.N} -> {rep.M} cloner ({rep.variant}), alpha = "
        f"{_fmt(rep.alpha.real)}{rep.alpha.imag:+.12g}i, squeeze = {_fmt(rep.squeeze)}",
        f"optimal fidelity       {_fmt(rep.optimal_fidelity)}",
        f"optimal added variance {_fmt(rep.optimal_added_variance)}",
        "clone  mean_x          mean_p          var_x           var_p           fidelity",
    ]
    for i in range(rep.M):
        lines.append(
            f"{i:<6} {_fmt(rep.means[i, 0]):<15} {_fmt(rep.means[i, 1]):<15} "
            f"{_fmt(rep.covs[i, 0, 0]):<15} {_fmt(rep.covs[i, 1, 1]):<15} "
            f"{_fmt(rep.fidelities[i])}"
        )
    for m, mu in enumerate(rep.anticlone_means):
        lines.append(f"anticlone {m}: mean ({_fmt(mu[0])}, {_fmt(mu[1])})")
    lines.append(f"saturated: {str(rep.saturated).lower()}")
    return "\n".join(lines) + "\n"


def cmd_clone(args) -> int:
    if args.circuit:
        with open(args.circuit, encoding="utf-8") as fh:
            circuit, layout = circuit_from_json(fh.read())
        if layout is None:
            raise UsageError(f"{args.circuit} carries no cloner layout")
    else:
        check_config(args.n, args.m, args.variant, args.squeeze)
        circuit, layout = build_cloner(args.n, args.m, args.variant)
    rep = report(circuit, layout, args.alpha, squeeze=args.squeeze)
    _write(render_report(rep, args.format), args.out)
    return 0 if rep.saturated else 1


TABLE_COLUMNS = ["N", "M", "F_sim", "F_formula", "F_abs_err",
                 "added_var_sim", "added_var_formula", "added_var_abs_err"]


def table_rows(n_max: int, m_max: int, variant: str = "msplitter", alpha: complex = 1.0):
    """One row per ``1 <= N <= n_max``, ``N <= M <= m_max``; worst clone per row."""
    rows = []
    for N in range(1, n_max + 1):
        for M in range(N, m_max + 1):
            rep = report(*build_cloner(N, M, variant), alpha)
            i = int(np.argmax(np.abs(rep.fidelities - rep.optimal_fidelity)))
            f_sim = float(rep.fidelities[i])
            j = np.unravel_index(
                np.argmax(np.abs(rep.added_variance - rep.optimal_added_variance)),
                rep.added_variance.shape,
            )
            a_sim = float(rep.added_variance[j])
            rows.append({
                "N": N, "M": M,
                "F_sim": f_sim, "F_formula": rep.optimal_fidelity,
                "F_abs_err": abs(f_sim - rep.optimal_fidelity),
                "added_var_sim": a_sim, "added_var_formula": rep.optimal_added_variance,
                "added_var_abs_err": abs(a_sim - rep.optimal_added_variance),
                "saturated": rep.saturated,
            })
    return rows


def render_table(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow([r[c] if c in ("N", "M") else repr(float(r[c])) for c in TABLE_COLUMNS])
        return buf.getvalue()
    out = ["  ".join(f"{c:>18}" for c in TABLE_COLUMNS)]
    for r in rows:
        out.append("  ".join(
            f"{r[c]:>18}" if c in ("N", "M") else f"{_fmt(r[c]):>18}" for c in TABLE_COLUMNS
        ))
    return "\n".join(out) + "\n"


def cmd_table(args) -> int:
    if not 1 <= args.n <= args.m <= MAX_M:
        raise UsageError(f"need 1 <= n_max <= m_max <= {MAX_M}, got {args.n}, {args.m}")
    if args.variant == "percopy":
        check_config(args.n, args.m, args.variant)
    rows = table_rows(args.n, args.m, args.variant, args.alpha)
    _write(render_table(rows, args.format), args.out)
    return 0 if all(r["saturated"] for r in rows) else 1


def cmd_circuit(args) -> int:
    check_config(args.n, args.m, args.variant)
    circuit, layout = build_cloner(args.n, args.m, args.variant)
    if args.format == "json":
        text = circuit.to_json(layout, indent=2) + "\n"
    else:
        lines = [f"{args.n} -> {args.m} cloner ({args.variant}) on {circuit.n_modes} modes",
                 f"{circuit.count('bs')} beam splitters, {circuit.count('amp')} amplifiers"]
        for i, e in enumerate(circuit.elements):
            fields = ", ".join(f"{k}={_fmt(v) if isinstance(v, float) else v}"
                               for k, v in e.to_dict().items() if k != "type")
            lines.append(f"{i:>4}  {e.kind:<4} {fields}")
        for role, modes in circuit.roles.items():
            lines.append(f"{role}: {modes}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvcloning", description="Optimal coherent-state cloning circuits."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default, m_default, formats):
        p.add_argument("--n", type=int, default=n_default)
        p.add_argument("--m", type=int, default=m_default)
        p.add_argument("--variant", choices=VARIANTS, default="msplitter")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("clone", help="run one cloner and report")
    common(p, 1, 2, ("human", "json", "csv"))
    p.add_argument("--alpha", type=parse_alpha, default=complex(1.0), metavar="RE,IM")
    p.add_argument("--squeeze", type=float, default=0.0,
                   help="squeezing of the input and of every auxiliary mode")
    p.add_argument("--circuit", default=None, help="run a circuit JSON file instead")
    p.set_defaults(func=cmd_clone)

    p = sub.add_parser("table", help="fidelity table over the grid N <= --n, M <= --m")
    common(p, 4, 8, ("human", "json", "csv"))
    p.add_argument("--alpha", type=parse_alpha, default=complex(1.0), metavar="RE,IM")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("circuit", help="export a cloner's element list")
    common(p, 1, 2, ("json", "human"))
    p.set_defaults(func=cmd_circuit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
