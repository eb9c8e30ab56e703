"""Rendering of type lists, census reports, canonical tuples and sweeps.

Every report is first turned into plain dicts and lists, then into JSON, CSV
or an aligned text table. All three formats carry the same fields. Counts
are written as decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .counting import CensusReport, VerifyRecord
from .klein_surface import moduli_dimension
from .value_tuples import ValueTuple, boundary_values

FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class OutputConfig:
    format: str = "table"
    budget: int = 10**9
    parallelism: int = 1
    n_selection: str = "default"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.n_selection not in ("default", "all"):
            raise ValueError(f"unknown n-selection {self.n_selection!r}")


def type_str(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def dump_json(obj) -> str:
    return json.dumps(obj) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "".join(
        "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells
    )


# -- types -------------------------------------------------------------------

TYPES_HEADER = ("surface", "type", "dim")


def types_to_dict(g: int, m: int, listing) -> dict:
    """``listing`` is a sequence of (surface, [types]) pairs."""
    return {
        "g": g,
        "m": m,
        "types": [
            {"surface": list(s.as_tuple()), "type": list(t.as_tuple()), "dim": moduli_dimension(g)}
            for s, ts in listing
            for t in ts
        ],
    }


def render_types(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    rows = [(type_str(e["surface"]), type_str(e["type"]), e["dim"]) for e in data["types"]]
    return _csv(TYPES_HEADER, rows) if fmt == "csv" else _table(TYPES_HEADER, rows)


# -- census ------------------------------------------------------------------

CENSUS_HEADER = ("k", "eps", "type", "N", "oracle", "dim")


def census_to_dict(report: CensusReport) -> dict:
    groups = []
    for gr in report.groups:
        oracle_total = gr.oracle_total
        groups.append(
            {
                "k": gr.surface.k,
                "eps": gr.surface.epsilon,
                "entries": [
                    {
                        "type": list(e.arf_type.as_tuple()),
                        "N": str(e.closed_count),
                        "oracle": None if e.oracle_count is None else str(e.oracle_count),
                        "dim": e.moduli_dimension,
                    }
                    for e in gr.entries
                ],
                "total": str(gr.total),
                "oracle_total": None if oracle_total is None else str(oracle_total),
                "oracle_status": gr.oracle_status,
            }
        )
    return {
        "g": report.g,
        "m": report.m,
        "groups": groups,
        "skipped": [list(s.as_tuple()) for s in report.skipped],
    }


def _census_rows(data: dict):
    for gr in data["groups"]:
        for e in gr["entries"]:
            oracle = "-" if e["oracle"] is None else e["oracle"]
            yield (gr["k"], gr["eps"], type_str(e["type"]), e["N"], oracle, e["dim"])


def render_census(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    rows = list(_census_rows(data))
    if fmt == "csv":
        return _csv(CENSUS_HEADER, rows)
    out = [f"census g={data['g']} m={data['m']}\n", _table(CENSUS_HEADER, rows), "\n"]
    totals = [
        (gr["k"], gr["eps"], len(gr["entries"]), gr["total"],
         "-" if gr["oracle_total"] is None else gr["oracle_total"], gr["oracle_status"])
        for gr in data["groups"]
    ]
    out.append(_table(("k", "eps", "types", "total", "oracle_total", "oracle"), totals))
    skipped = " ".join(type_str(s) for s in data["skipped"]) or "none"
    out.append(f"\nskipped (zero geometric genus): {skipped}\n")
    return "".join(out)


# -- canonical tuples ----------------------------------------------------------


def tuple_to_dict(v: ValueTuple) -> dict:
    return {
        "m": v.m,
        "surface": list(v.surface.as_tuple()),
        "n": v.decomp.n,
        "g_tilde": v.decomp.g_tilde,
        "alpha": list(v.alpha),
        "beta": list(v.beta),
        "gamma": list(v.gamma),
        "delta": list(v.delta_vals),
        "closing": boundary_values(v)[-1],
    }


def render_tuple(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    keys = ("alpha", "beta", "gamma", "delta")
    if fmt == "csv":
        header = ("m", "surface", "n", "g_tilde") + keys + ("closing",)
        row = [data["m"], type_str(data["surface"]), data["n"], data["g_tilde"]]
        row += [type_str(data[k]) for k in keys] + [data["closing"]]
        return _csv(header, [row])
    head = f"m={data['m']} surface={type_str(data['surface'])} n={data['n']} g_tilde={data['g_tilde']}\n"
    body = " ".join(f"{k}={type_str(data[k])}" for k in keys)
    return head + body + f" closing={data['closing']}\n"


# -- verification ----------------------------------------------------------------


def verify_to_dict(records: list[VerifyRecord], ms) -> dict:
    return {
        "m": list(ms),
        "records": [
            {
                "surface": list(r.surface.as_tuple()),
                "m": r.m,
                "n": r.n,
                "status": r.status,
                "mismatches": [
                    {
                        "type": list(x.arf_type.as_tuple()),
                        "closed": None if x.closed is None else str(x.closed),
                        "oracle": str(x.oracle),
                    }
                    for x in r.mismatches
                ],
            }
            for r in records
        ],
    }


def _matrix(data: dict):
    cell: dict = {}
    rank = {"pass": 0, "budget": 1, "fail": 2}
    for r in data["records"]:
        key = (r["surface"][0], r["m"])
        if key not in cell or rank[r["status"]] > rank[cell[key]]:
            cell[key] = r["status"]
    genera = sorted({g for g, _ in cell})
    header = ("g",) + tuple(f"m={m}" for m in data["m"])
    rows = [(g,) + tuple(cell.get((g, m), "-").upper() for m in data["m"]) for g in genera]
    return header, rows


def render_verify(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    detail = [
        (type_str(r["surface"]), r["m"], r["n"], type_str(x["type"]),
         "-" if x["closed"] is None else x["closed"], x["oracle"])
        for r in data["records"]
        for x in r["mismatches"]
    ]
    detail_header = ("surface", "m", "n", "type", "closed", "oracle")
    if fmt == "csv":
        rows = [(type_str(r["surface"]), r["m"], r["n"], r["status"]) for r in data["records"]]
        return _csv(("surface", "m", "n", "status"), rows)
    header, rows = _matrix(data)
    out = _table(header, rows)
    if detail:
        out += "\nmismatches:\n" + _table(detail_header, detail)
    return out
