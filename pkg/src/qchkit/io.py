"""Serialization: rationals as ``"num/den"`` strings, ring dumps, sweep CSV."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .grassmann import CIData, LVector
from .qring import QRing, verify_ring

SCHEMA_VERSION = 1


def fmt(x) -> str:
    """Exact text form: ``"7"`` for integers, ``"7/3"`` otherwise. Never a float."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"rationals are serialized as strings, got {type(s).__name__}")
    return Fraction(s)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def ring_to_dict(ring: QRing, report: list[str] | None = None) -> dict:
    names = ring.names
    table = []
    for a, row in enumerate(ring.table):
        for b, entry in enumerate(row):
            for c in sorted(entry):
                if entry[c]:
                    table.append({"a": names[a], "b": names[b], "c": names[c], "value": fmt(entry[c])})
    return {
        "schema_version": SCHEMA_VERSION,
        "ci": None if ring.ci is None else {"n": ring.ci.n, "degrees": list(ring.ci.degrees)},
        "relations": {
            "n": ring.n,
            "k": ring.k,
            "d": ring.d,
            "mu": fmt(ring.mu),
            "l": [fmt(v) for v in ring.lvec.l],
        },
        "basis": [{"name": nm, "degree": dg} for nm, dg in zip(names, ring.degrees)],
        "pairing": [[fmt(v) for v in row] for row in ring.pairing],
        "table": table,
        "report": list(verify_ring(ring) if report is None else report),
    }


def ring_from_dict(data: dict) -> QRing:
    """Rebuild a ring from a dump *without* recomputing the structure constants."""
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    rel = data["relations"]
    n, k, d = int(rel["n"]), int(rel["k"]), int(rel["d"])
    lvals = tuple(int(parse_rational(v)) for v in rel["l"])
    lvec = LVector(lvals, int(parse_rational(rel["mu"])))
    pairing = tuple(tuple(parse_rational(v) for v in row) for row in data["pairing"])
    names = [b["name"] for b in data["basis"]]
    index = {nm: i for i, nm in enumerate(names)}
    size = len(names)
    if size != n + 1 + len(pairing):
        raise ValueError("basis length does not match n and the pairing size")
    table = [[{} for _ in range(size)] for _ in range(size)]
    for e in data["table"]:
        table[index[e["a"]]][index[e["b"]]][index[e["c"]]] = parse_rational(e["value"])
    ci = None if data.get("ci") is None else CIData(int(data["ci"]["n"]), tuple(data["ci"]["degrees"]))
    return QRing(n, k, d, lvec, pairing, tuple(tuple(r) for r in table), ci)


SWEEP_HEADER = [
    "schema_version", "n", "degrees", "k", "l_vector", "mu",
    "conics_through_2_points", "cubics_through_3_points",
]


def sweep_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_HEADER, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({"schema_version": SCHEMA_VERSION, **row})
    return buf.getvalue()


def text_table(header: list[str], rows: Iterable[Iterable]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"
