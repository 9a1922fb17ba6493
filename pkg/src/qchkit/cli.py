"""Command line interface.

    qchkit lvector --dim 3 --degrees 3
    qchkit ring    --dim 4 --degrees 2 --primitive-rank 1 --format json
    qchkit count   conics --dim 3 --degrees 3 --cycles point,line,line
    qchkit verify  [--dim N --degrees D,...]
    qchkit sweep   --max-r 2 --max-degree 4

Exit status: 0 all checks pass, 2 invalid input, 3 two exact routes disagree
(an internal bug).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import io as qio
from .enumerative import (
    CURVE_NAMES,
    CountQuery,
    QueryError,
    conics_through_two_points,
    count_query,
    count_through_cycles,
    cubics_through_three_points,
)
from .grassmann import (
    CIData,
    ConsistencyError,
    HypothesisError,
    l_vector_from_generating_function,
    l_vector_from_integrals,
    mu_closed_form,
)
from .qring import build_ring, verify_ring
from .verify import run_suite, sweep_cases

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3

CURVES = {name: j for j, name in CURVE_NAMES.items()}


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _pairing(text: str):
    try:
        return tuple(tuple(Fraction(v) for v in row.split(",")) for row in text.split(";") if row.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"pairing rows are ';'-separated, entries ','-separated: {text!r}")


def _ci(args, required=True) -> CIData | None:
    if args.dim is None and args.degrees is None and not required:
        return None
    if args.dim is None or args.degrees is None:
        raise HypothesisError("both --dim and --degrees are required")
    return CIData(args.dim, tuple(args.degrees))


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------

def run_lvector(args) -> int:
    ci = _ci(args)
    a = l_vector_from_integrals(ci)
    b = l_vector_from_generating_function(ci)
    agree = a == b and a.mu == mu_closed_form(ci)
    if args.format == "json":
        text = qio.dumps({
            "schema_version": qio.SCHEMA_VERSION,
            "ci": {"n": ci.n, "degrees": list(ci.degrees), "k": ci.k, "d": ci.d},
            "rows": [{"p": p, "integral": qio.fmt(x), "generating_function": qio.fmt(y)}
                     for p, (x, y) in enumerate(zip(a.l, b.l))],
            "mu": qio.fmt(a.mu),
            "mu_closed_form": qio.fmt(mu_closed_form(ci)),
            "agree": agree,
        })
    elif args.format == "csv":
        lines = ["schema_version,p,integral,generating_function"]
        lines += [f"{qio.SCHEMA_VERSION},{p},{x},{y}" for p, (x, y) in enumerate(zip(a.l, b.l))]
        text = "\n".join(lines) + "\n"
    else:
        text = f"{ci.label()}  k={ci.k}  d={ci.d}\n"
        text += qio.text_table(["p", "l_p (integral)", "l_p (gen. function)"],
                               [(p, x, y) for p, (x, y) in enumerate(zip(a.l, b.l))])
        text += f"mu = {a.mu}  (prod d_i^d_i = {mu_closed_form(ci)})\nagree: {agree}\n"
    _emit(args, text)
    return EXIT_OK if agree else EXIT_MISMATCH


def run_ring(args) -> int:
    ci = _ci(args)
    ring = build_ring(ci, m=args.primitive_rank, pairing=args.pairing)
    report = verify_ring(ring)
    if args.format == "json":
        text = qio.dumps(qio.ring_to_dict(ring, report))
    else:
        names = ring.names
        rows = [
            (names[a], names[b], " + ".join(f"{qio.fmt(v)}*{names[c]}" for c, v in sorted(e.items()) if v) or "0")
            for a, row in enumerate(ring.table) for b, e in enumerate(row) if a <= b
        ]
        if args.format == "csv":
            text = "schema_version,a,b,c,value\n" + "".join(
                f"{qio.SCHEMA_VERSION},{names[a]},{names[b]},{names[c]},{qio.fmt(v)}\n"
                for a, row in enumerate(ring.table) for b, e in enumerate(row)
                for c, v in sorted(e.items()) if v
            )
        else:
            text = (f"{ci.label()}  k={ring.k}  d={ring.d}  mu={ring.mu}  primitive rank={ring.m}\n"
                    + qio.text_table(["x", "y", "x*y"], rows)
                    + f"violations: {len(report)}\n" + "".join(f"  {v}\n" for v in report))
    _emit(args, text)
    return EXIT_OK if not report else EXIT_MISMATCH


def run_count(args) -> int:
    ci = _ci(args)
    j = CURVES[args.curve]
    if (args.cycles is None) == (args.codims is None):
        raise QueryError("give exactly one of --cycles or --codims")
    if args.cycles is not None:
        res = count_through_cycles(ci, j, [c for c in args.cycles.split(",") if c.strip()])
    else:
        res = count_query(CountQuery(ci, j, tuple(args.codims)))
    payload = {
        "schema_version": qio.SCHEMA_VERSION,
        "ci": {"n": ci.n, "degrees": list(ci.degrees)},
        "curve": args.curve,
        "codims": list(res.query.codims),
        "value": qio.fmt(res.value),
        "formula_route": qio.fmt(res.formula_triple),
        "ring_route": qio.fmt(res.ring_triple),
        "cycle_scale": qio.fmt(res.scale),
        "halved": res.halved,
        "routes_agree": res.routes_agree,
        "caveat": res.caveat,
    }
    if args.format == "json":
        text = qio.dumps(payload)
    elif args.format == "csv":
        keys = sorted(payload)
        text = ",".join(keys) + "\n" + ",".join(f'"{payload[k]}"' if k == "caveat" else str(payload[k])
                                                for k in keys) + "\n"
    else:
        text = (f"{qio.fmt(res.value)}\n"
                f"  {args.curve} on {ci.label()} meeting codims {list(res.query.codims)}\n"
                f"  formula route triple product: {payload['formula_route']}\n"
                f"  ring route triple product:    {payload['ring_route']}\n"
                f"  cycle class scale: {payload['cycle_scale']}  halved: {res.halved}\n"
                f"  note: {res.caveat}\n")
    _emit(args, text)
    return EXIT_OK if res.routes_agree else EXIT_MISMATCH


def run_verify(args) -> int:
    ci = _ci(args, required=False)
    checks = run_suite(None if ci is None else [ci], inject_fault=args.inject_fault, corpus=True)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        text = qio.dumps({
            "schema_version": qio.SCHEMA_VERSION,
            "passed": ok,
            "checks": [{"name": c.name, "case": c.case, "passed": c.passed, "detail": c.detail} for c in checks],
        })
    elif args.format == "csv":
        text = "schema_version,case,name,passed\n" + "".join(
            f'{qio.SCHEMA_VERSION},"{c.case}","{c.name}",{c.passed}\n' for c in checks)
    else:
        text = "".join(f"{'PASS' if c.passed else 'FAIL'}  {c.case:<26} {c.name}"
                       + (f"  [{c.detail}]" if not c.passed else "") + "\n" for c in checks)
        text += f"{sum(c.passed for c in checks)}/{len(checks)} checks passed\n"
    _emit(args, text)
    return EXIT_OK if ok else EXIT_MISMATCH


def sweep_row(ci: CIData) -> dict:
    lv = l_vector_from_integrals(ci)
    if lv != l_vector_from_generating_function(ci):
        raise ConsistencyError(f"l-vector routes disagree for {ci.label()}")
    conics = qio.fmt(conics_through_two_points(ci)) if ci.n == 2 * ci.s - 1 and not ci.is_quadric else ""
    cubics = qio.fmt(cubics_through_three_points(ci)) if ci.n == 3 * ci.s - 3 else ""
    return {
        "n": ci.n,
        "degrees": " ".join(map(str, ci.degrees)),
        "k": ci.k,
        "l_vector": " ".join(map(qio.fmt, lv.l)),
        "mu": qio.fmt(lv.mu),
        "conics_through_2_points": conics,
        "cubics_through_3_points": cubics,
    }


def run_sweep(args) -> int:
    cases = sweep_cases(args.max_r, args.max_degree)
    if not cases:
        print("warning: the parameter grid contains no valid complete intersection", file=sys.stderr)
    if args.jobs > 1 and cases:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(sweep_row, cases))
    else:
        rows = [sweep_row(ci) for ci in cases]
    if args.format == "json":
        text = qio.dumps({"schema_version": qio.SCHEMA_VERSION, "rows": rows})
    elif args.format == "table":
        text = qio.text_table(qio.SWEEP_HEADER[1:], [[r[h] for h in qio.SWEEP_HEADER[1:]] for r in rows])
    else:
        text = qio.sweep_csv(rows)
    _emit(args, text)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchkit",
        description="Quantum cohomology and curve counts of Fano complete intersections, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="table"):
        p.add_argument("--dim", type=int, help="dimension n of X")
        p.add_argument("--degrees", type=_int_list, help="comma-separated degrees d_1,...,d_r")
        p.add_argument("--format", choices=["json", "csv", "table"], default=fmt_default)
        p.add_argument("--out", help="write output here instead of standard output")

    p = sub.add_parser("lvector", help="line numbers l_p and mu by both routes")
    common(p)
    p.set_defaults(func=run_lvector)

    p = sub.add_parser("ring", help="structure constants of the quantum ring")
    common(p)
    p.add_argument("--primitive-rank", type=int, default=None)
    p.add_argument("--pairing", type=_pairing, default=None,
                   help="primitive intersection matrix, e.g. '0,1;-1,0'")
    p.set_defaults(func=run_ring)

    p = sub.add_parser("count", help="count lines/conics/cubics meeting three cycles")
    p.add_argument("curve", choices=sorted(CURVES))
    common(p)
    p.add_argument("--codims", type=_int_list, help="codimensions p,q,r of general linear sections")
    p.add_argument("--cycles", help="three of point, line, hyperplane, section:<c>")
    p.set_defaults(func=run_count)

    p = sub.add_parser("verify", help="run the property suite (default sweep if no variety given)")
    common(p)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("sweep", help="CSV of l-vectors and corollary counts over a grid")
    common(p, fmt_default="csv")
    p.add_argument("--max-r", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=run_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HypothesisError, QueryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
