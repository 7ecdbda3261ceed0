"""Classification reports: names, property flags, automorphism groups, duals."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .catalog import named_class_map, named_semigroups
from .enumeration import (EnumerationResult, SEMIGROUP, enumerate_dimonoids,
                          enumerate_structures)
from .axioms import DIMONOID, DOPPELSEMIGROUP
from .iso import GroupId, automorphisms, canonical_form, identify_group
from .tables import DiStructure


@dataclass(frozen=True)
class ClassRow:
    key: str  # canonical key, hex
    name: str
    trivial: bool
    commutative: bool
    abelian: bool
    aut: GroupId
    dual_key: str

    def to_json(self) -> dict:
        return {
            "key": self.key, "name": self.name, "trivial": self.trivial,
            "commutative": self.commutative, "abelian": self.abelian,
            "aut": {"order": self.aut.order, "name": self.aut.name,
                    "abelian": self.aut.abelian,
                    "element_orders": list(self.aut.element_orders)},
            "dual_key": self.dual_key,
        }


@dataclass(frozen=True)
class ClassificationReport:
    order: int
    kind: str
    rows: tuple  # of ClassRow, sorted by canonical key
    summary: dict

    def row_by_name(self, name: str) -> ClassRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"schema": "dimonoids.report/1", "order": self.order,
                "kind": self.kind, "rows": [r.to_json() for r in self.rows],
                "summary": dict(self.summary)}


@lru_cache(maxsize=32)
def _name_map(order: int, kind: str) -> dict:
    """Canonical key bytes -> display name; first (highest priority) name wins."""
    if kind == SEMIGROUP:
        mapping: dict = {}
        for name, t in named_semigroups(order):
            mapping.setdefault(canonical_form(DiStructure(t, t)).key, name)
        return mapping
    return named_class_map(order, kind)[1]


def match_names(d: DiStructure, kind: str = DIMONOID) -> str | None:
    """The catalog name of d's isomorphism class, if it has one."""
    return _name_map(d.order, kind).get(canonical_form(d).key)


def _flags(rep: DiStructure):
    n = rep.order
    le, re = rep.left.entries, rep.right.entries
    trivial = le == re
    commutative = (
        all(le[x * n + y] == le[y * n + x] for x in range(n) for y in range(x + 1, n))
        and all(re[x * n + y] == re[y * n + x] for x in range(n) for y in range(x + 1, n)))
    abelian = all(le[x * n + y] == re[y * n + x] for x in range(n) for y in range(n))
    return trivial, commutative, abelian


def classify(result: EnumerationResult) -> ClassificationReport:
    """Name, flag, and group every class of an enumeration result."""
    names = _name_map(result.order, result.kind)
    rows = []
    unnamed_seq = 0
    for key, rep in result.class_reps:
        trivial, commutative, abelian = _flags(rep)
        name = names.get(key.key)
        if name is None:
            unnamed_seq += 1
            name = f"unnamed-{result.order}-{unnamed_seq}"
        aut = identify_group(automorphisms(rep))
        dual_key = canonical_form(rep.dual()).key.hex()
        rows.append(ClassRow(key=key.hex, name=name, trivial=trivial,
                             commutative=commutative, abelian=abelian,
                             aut=aut, dual_key=dual_key))
    rows = tuple(rows)
    known = {r.key for r in rows}
    assert all(r.dual_key in known for r in rows), "classes not closed under duality"
    # abelian pairs are table-equal to their dual, hence always self-paired;
    # the converse fails: a nonabelian class can be isomorphic to its dual
    assert all(r.dual_key == r.key for r in rows if r.abelian)
    nonabelian = sum(1 for r in rows if not r.abelian)
    self_paired_nonabelian = sum(1 for r in rows
                                 if not r.abelian and r.dual_key == r.key)
    summary = {
        "total": len(rows),
        "labeled": result.labeled_count,
        "trivial": sum(1 for r in rows if r.trivial),
        "commutative": sum(1 for r in rows if r.commutative),
        "abelian": sum(1 for r in rows if r.abelian),
        "nonabelian": nonabelian,
        "nonabelian_dual_pairs": (nonabelian - self_paired_nonabelian) // 2,
        "nonabelian_self_paired": self_paired_nonabelian,
        "unnamed": sum(1 for r in rows if r.name.startswith("unnamed-")),
    }
    return ClassificationReport(order=result.order, kind=result.kind,
                                rows=rows, summary=summary)


def classify_dimonoids(result: EnumerationResult) -> ClassificationReport:
    if result.kind != DIMONOID:
        raise ValueError(f"expected a dimonoid enumeration, got kind {result.kind!r}")
    return classify(result)


def classify_order(n: int, kind: str = DIMONOID, workers: int | None = None,
                   allow_large: bool = False) -> ClassificationReport:
    return classify(enumerate_structures(n, kind, workers, allow_large))


def solve_problem1(workers: int | None = None) -> ClassificationReport:
    """Noncommutative nonabelian nontrivial dimonoid classes of order 3.

    The full order-3 enumeration is filtered down to the cell whose exact
    size the classification tables leave open; the summary carries the
    answer as summary["total"].
    """
    full = classify(enumerate_dimonoids(3, workers=workers))
    rows = tuple(r for r in full.rows
                 if not r.commutative and not r.abelian and not r.trivial)
    summary = {
        "subset": "noncommutative nonabelian nontrivial",
        "total": len(rows),
        "dual_pairs": sum(1 for r in rows if r.dual_key > r.key),
        "self_paired": sum(1 for r in rows if r.dual_key == r.key),
        "named": sum(1 for r in rows if not r.name.startswith("unnamed-")),
        "unnamed": sum(1 for r in rows if r.name.startswith("unnamed-")),
        "nonabelian_noncommutative_total": sum(
            1 for r in full.rows if not r.commutative and not r.abelian),
        "order_3_dimonoid_classes": full.summary["total"],
    }
    return ClassificationReport(order=3, kind=DIMONOID, rows=rows, summary=summary)


# ---------------------------------------------------------------------------
# rendering

_MD_COLUMNS = 8


def _md_escape(name: str) -> str:
    return name.replace("|", "\\|")


def render_markdown(report: ClassificationReport) -> str:
    lines = [f"Classification: {report.kind} classes of order {report.order}.", ""]
    for start in range(0, len(report.rows), _MD_COLUMNS):
        chunk = report.rows[start:start + _MD_COLUMNS]
        lines.append("| D | " + " | ".join(_md_escape(r.name) for r in chunk) + " |")
        lines.append("|" + " --- |" * (len(chunk) + 1))
        lines.append("| Aut(D) | " + " | ".join(r.aut.name for r in chunk) + " |")
        lines.append("")
    lines.append("Summary:")
    for k, v in report.summary.items():
        lines.append(f"- {k}: {v}")
    return "\n".join(lines) + "\n"


def render_csv(report: ClassificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "name", "trivial", "commutative", "abelian",
                     "aut", "dual_key"])
    for r in report.rows:
        writer.writerow([r.key, r.name, int(r.trivial), int(r.commutative),
                         int(r.abelian), r.aut.name, r.dual_key])
    return buf.getvalue()


def render_json(report: ClassificationReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n"


_RENDERERS = {"markdown": render_markdown, "csv": render_csv, "json": render_json}


def render_report(report: ClassificationReport, fmt: str = "markdown") -> str:
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(_RENDERERS)}")
    return renderer(report)
