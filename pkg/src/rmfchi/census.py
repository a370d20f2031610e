"""Census sweeps: every existing type in a box, with its invariants.

A sweep walks all normalized types with g, n and |i| entries below the
given bounds, keeps those that exist, replaces extension-admitting
separating types by their extended refinements, and computes dimension
and both Euler characteristics per record.  Records are emitted in a
fixed total order and serialize byte-identically regardless of worker
count, so catalog files diff cleanly.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .enumerator import WorkLimitExceeded, WorkMeter
from .euler import chi_compactification, chi_component
from .topotype import (
    TopType,
    Variant,
    admits_extension,
    dimension,
    exists,
    format_type,
    nonsep,
    parse_type,
    sep,
    sepext,
)

_VARIANT_RANK = {Variant.NONSEP: 0, Variant.SEP: 1, Variant.SEP_EXT: 2}


@dataclass(frozen=True)
class SweepBounds:
    """Search box: g <= g_max, n <= n_max, every |i| <= abs_i_max.

    ``eps`` restricts the variants: "0" non-separating, "1" plain
    separating, "ext" extended, None all of them.
    """

    g_max: int
    n_max: int
    abs_i_max: int
    eps: str | None = None

    def __post_init__(self):
        if self.g_max < 0 or self.n_max < 1 or self.abs_i_max < 0:
            raise ValueError("bounds must cover at least one type")
        if self.eps not in (None, "0", "1", "ext"):
            raise ValueError("eps must be one of '0', '1', 'ext'")


@dataclass(frozen=True)
class CensusRecord:
    """One existing type with its invariants.

    ``graph_count`` is set only when chi(N) was obtained by counting
    graphs; ``error`` is set (and the chi(N) fields cleared) when the
    per-record work limit was exhausted.
    """

    type: TopType
    dim: int
    chi_h: int
    chi_n: int | None
    graph_count: int | None
    route: str | None
    error: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "type": format_type(self.type),
            "exists": True,
            "dim": self.dim,
            "chi_h": self.chi_h,
            "chi_n": self.chi_n,
            "graph_count": self.graph_count,
            "route": self.route,
            "error": self.error,
        }


def type_sort_key(t: TopType):
    return (_VARIANT_RANK[t.variant], t.g, t.n, t.k, t.indices,
            -1 if t.xi is None else t.xi)


def iter_types(bounds: SweepBounds) -> list[TopType]:
    """All existing normalized types in the box, sorted.

    Separating types that admit the extension are replaced by their
    extended refinements (those are the actual component labels).
    """
    out: set[TopType] = set()
    want_nonsep = bounds.eps in (None, "0")
    want_sep = bounds.eps in (None, "1")
    want_ext = bounds.eps in (None, "ext")
    for g in range(bounds.g_max + 1):
        for n in range(1, bounds.n_max + 1):
            if want_nonsep:
                for k in range(0, g + 1):
                    for idx in combinations_with_replacement(
                            range(bounds.abs_i_max + 1), k):
                        t = nonsep(g, n, idx)
                        if exists(t):
                            out.add(t)
            if want_sep or want_ext:
                for k in range(1, g + 2):
                    if (k - (g + 1)) % 2 != 0:
                        continue
                    values = range(-bounds.abs_i_max, bounds.abs_i_max + 1)
                    for idx in combinations_with_replacement(values, k):
                        t = sep(g, n, idx)
                        if not exists(t):
                            continue
                        if admits_extension(t):
                            if want_ext:
                                for xi in range(0, (g - k + 1) // 2 + 1):
                                    tt = sepext(g, n, idx, xi)
                                    if exists(tt):
                                        out.add(tt)
                        elif want_sep:
                            out.add(t)
    return sorted(out, key=type_sort_key)


def record_for(t: TopType, *, work_limit: int | None = None) -> CensusRecord:
    """Compute one census record; work-limit failures flag the record."""
    dim = dimension(t)
    chi_h = chi_component(t).value
    try:
        result = chi_compactification(t, meter=WorkMeter(work_limit))
        return CensusRecord(t, dim, chi_h, result.value,
                            result.graph_count, result.route.value)
    except WorkLimitExceeded as exc:
        return CensusRecord(t, dim, chi_h, None, None, None, str(exc))


def _record_json_for_text(args) -> dict:
    text, work_limit = args
    return record_for(parse_type(text), work_limit=work_limit).to_json_dict()


def sweep(bounds: SweepBounds, *, workers: int = 1,
          work_limit: int | None = None) -> list[CensusRecord]:
    """Census of the box, in sort order, one record per existing type."""
    types = iter_types(bounds)
    if workers <= 1:
        return [record_for(t, work_limit=work_limit) for t in types]
    # Workers receive the text form: records come back in order, so the
    # output is identical to the sequential one.
    jobs = [(format_type(t), work_limit) for t in types]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        dicts = list(pool.map(_record_json_for_text, jobs))
    return [_record_from_json(d) for d in dicts]


def _record_from_json(data: dict) -> CensusRecord:
    return CensusRecord(
        type=parse_type(data["type"]),
        dim=data["dim"],
        chi_h=data["chi_h"],
        chi_n=data["chi_n"],
        graph_count=data["graph_count"],
        route=data["route"],
        error=data["error"],
    )


def write_jsonl(records, stream) -> int:
    """One compact JSON object per line; returns the record count."""
    count = 0
    for rec in records:
        stream.write(json.dumps(rec.to_json_dict(),
                                separators=(",", ":")) + "\n")
        count += 1
    return count


CSV_COLUMNS = ("type", "exists", "dim", "chi_h", "chi_n", "graph_count",
               "route", "error")


def write_csv(records, stream) -> int:
    """CSV projection of the same fields; empty cells for nulls."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for rec in records:
        data = rec.to_json_dict()
        writer.writerow(["" if data[c] is None else data[c]
                         for c in CSV_COLUMNS])
        count += 1
    return count
