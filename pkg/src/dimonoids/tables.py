"""Immutable Cayley tables, table pairs, permutations, and their codecs.

Conventions used throughout the package:

* elements of an order-n structure are always the integers 0..n-1
* a table is stored row-major as a flat tuple, entries[x*n + y] == x*y
  (x indexes the row, y the column)
* relabeling by a permutation p satisfies t'(p(x), p(y)) = p(t(x, y))
* the text form of a table is n lines of n space-separated integers;
  a pair of tables is two such blocks separated by one blank line
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations


class TableFormatError(ValueError):
    """Malformed textual table; row/column are 1-based when known."""

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
        self.row = row
        self.column = column


class OrderMismatchError(ValueError):
    """Structures of different orders were combined."""


@dataclass(frozen=True)
class OpTable:
    """A binary operation on {0..order-1}, closed by construction."""

    order: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order must be a positive integer, got {n!r}")
        if len(self.entries) != n * n:
            raise ValueError(f"expected {n * n} entries for order {n}, got {len(self.entries)}")
        for v in self.entries:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"entry {v!r} outside 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows) -> "OpTable":
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("rows must form a square table")
        return cls(n, tuple(int(v) for r in rows for v in r))

    @classmethod
    def from_function(cls, n: int, fn) -> "OpTable":
        return cls(n, tuple(fn(x, y) for x in range(n) for y in range(n)))

    def at(self, x: int, y: int) -> int:
        return self.entries[x * self.order + y]

    def rows(self):
        n = self.order
        return tuple(self.entries[i * n:(i + 1) * n] for i in range(n))

    def transpose(self) -> "OpTable":
        n = self.order
        return OpTable(n, tuple(self.entries[y * n + x] for x in range(n) for y in range(n)))

    def __str__(self):
        return format_table(self)


@dataclass(frozen=True)
class DiStructure:
    """A pair of tables (left, right) on the same carrier."""

    left: OpTable
    right: OpTable

    def __post_init__(self):
        if self.left.order != self.right.order:
            raise OrderMismatchError(
                f"left has order {self.left.order}, right has order {self.right.order}")

    @property
    def order(self) -> int:
        return self.left.order

    def dual(self) -> "DiStructure":
        # (x,y) -> y*x with the two operations swapped; an involution
        return DiStructure(self.right.transpose(), self.left.transpose())

    def relabel(self, p: "Permutation") -> "DiStructure":
        return DiStructure(apply_permutation(self.left, p), apply_permutation(self.right, p))

    def __str__(self):
        return format_distructure(self)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def all_of_degree(cls, n: int):
        """All permutations of degree n in lexicographic order of images."""
        for images in permutations(range(n)):
            yield cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(x) == self(other(x))."""
        if len(self.images) != len(other.images):
            raise OrderMismatchError("permutation degrees differ")
        return Permutation(tuple(self.images[v] for v in other.images))


def apply_permutation(t: OpTable, p: Permutation) -> OpTable:
    """Relabel t by p: the result r satisfies r(p(x), p(y)) = p(t(x, y))."""
    n = t.order
    if p.degree != n:
        raise OrderMismatchError(f"table order {n}, permutation degree {p.degree}")
    img = p.images
    out = [0] * (n * n)
    e = t.entries
    for x in range(n):
        for y in range(n):
            out[img[x] * n + img[y]] = img[e[x * n + y]]
    return OpTable(n, tuple(out))


# ---------------------------------------------------------------------------
# text codec

def format_table(t: OpTable) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in t.rows())


def format_distructure(d: DiStructure) -> str:
    return format_table(d.left) + "\n\n" + format_table(d.right)


def _parse_block(lines, first_line_no: int, order: int | None = None) -> OpTable:
    if not lines:
        raise TableFormatError("empty table block", row=first_line_no)
    rows = []
    n = order if order is not None else len(lines)
    for i, line in enumerate(lines):
        tokens = line.split()
        lineno = first_line_no + i
        if len(tokens) != n:
            raise TableFormatError(
                f"expected {n} entries per row, got {len(tokens)}", row=lineno)
        row = []
        for j, tok in enumerate(tokens):
            try:
                v = int(tok, 10)
            except ValueError:
                raise TableFormatError(f"not an integer: {tok!r}", row=lineno, column=j + 1)
            if not 0 <= v < n:
                raise TableFormatError(
                    f"entry {v} outside 0..{n - 1}", row=lineno, column=j + 1)
            row.append(v)
        rows.append(row)
    if len(rows) != n:
        raise TableFormatError(f"expected {n} rows, got {len(rows)}", row=first_line_no)
    return OpTable.from_rows(rows)


def _blocks(text: str):
    """Split text into blocks of consecutive nonblank lines, with line numbers."""
    blocks = []
    current: list = []
    start = None
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            if start is None:
                start = i
            current.append(line)
        elif current:
            blocks.append((current, start))
            current, start = [], None
    if current:
        blocks.append((current, start))
    return blocks


def parse_table(text: str) -> OpTable:
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise TableFormatError(f"expected one table block, found {len(blocks)}")
    lines, start = blocks[0]
    return _parse_block(lines, start)


def parse_distructure(text: str) -> DiStructure:
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise TableFormatError(
            f"expected two table blocks separated by a blank line, found {len(blocks)}")
    (l1, s1), (l2, s2) = blocks
    left = _parse_block(l1, s1)
    right = _parse_block(l2, s2, order=left.order)
    return DiStructure(left, right)


def parse_structure(text: str):
    """Parse either a single table or a two-block pair, whichever the text holds."""
    blocks = _blocks(text)
    if len(blocks) == 1:
        return parse_table(text)
    return parse_distructure(text)


# ---------------------------------------------------------------------------
# JSON codec; mirrors the dataclass fields with tables as nested row arrays

def table_to_json(t: OpTable) -> dict:
    return {"order": t.order, "entries": [list(r) for r in t.rows()]}


def table_from_json(obj: dict) -> OpTable:
    t = OpTable.from_rows(obj["entries"])
    if t.order != obj.get("order", t.order):
        raise TableFormatError(f"declared order {obj['order']} but table has order {t.order}")
    return t


def distructure_to_json(d: DiStructure) -> dict:
    return {
        "order": d.order,
        "left": [list(r) for r in d.left.rows()],
        "right": [list(r) for r in d.right.rows()],
    }


def distructure_from_json(obj: dict) -> DiStructure:
    d = DiStructure(OpTable.from_rows(obj["left"]), OpTable.from_rows(obj["right"]))
    if d.order != obj.get("order", d.order):
        raise TableFormatError(f"declared order {obj['order']} but tables have order {d.order}")
    return d


def dumps_structure(obj) -> str:
    if isinstance(obj, DiStructure):
        return json.dumps(distructure_to_json(obj), sort_keys=True)
    return json.dumps(table_to_json(obj), sort_keys=True)
