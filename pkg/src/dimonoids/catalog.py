"""Standard semigroup families, derived constructions, and the name grammar.

Index conventions (elements are always 0..n-1):

* +0, +1, ~1 place the adjoined element at the last index
* O(n,m) marks A = {0..m-1} with zero n-1
* LOB uses a = 0, c = 1
* LO(m<-n) marks A = {0..m-1} with sink a = 0
* LOt0(m<-s) lives on s+1 elements with A = {0..m-1} and zero s
* M(r,m) maps index i to the power a^(i+1)

Name grammar (semigroups):

    name      = base { "+0" | "+1" | "~1" } | "dual(" name ")"
    base      = "C" n | "C" n "^-1" | "O" n | "L" n | "LO" n | "RO" n
              | "LOB" n | "ROB" n | "M(" r "," m ")" | "O(" n "," m ")"
              | "LO(" m "<-" n ")" | "RO(" m "<-" n ")"
              | "LOt0(" m "<-" s ")" | "ROt0(" m "<-" s ")"

Pair names: `left|right` joins two semigroup names, `triv(s)` is the pair
(s, s), `plus0(d)` and the suffix form `(d)+0` adjoin a shared zero,
`dual(d)` is the dual pair.  Two curated pair names cover classes whose
coordinates are isomorphic semigroups: `Cn|Cn^-1` (cyclic group with its
variant at the generator's inverse) and `O(3,1)a|O(3,1)b` (two one-
idempotent zero semigroups marking different elements).
"""
from __future__ import annotations

import re
from functools import lru_cache

from .axioms import (AxiomError, NotAssociativeError, assoc_witness,
                     check_dimonoid, check_doppelsemigroup, check_structure,
                     DIMONOID, DOPPELSEMIGROUP)
from .tables import DiStructure, OpTable, Permutation, apply_permutation


class ParameterError(ValueError):
    """A family parameter or catalog name is out of range or unknown."""


# ---------------------------------------------------------------------------
# base families

def cyclic(n: int) -> OpTable:
    """Cyclic group: x*y = (x + y) mod n."""
    _require(n >= 1, f"cyclic order must be >= 1, got {n}")
    return OpTable.from_function(n, lambda x, y: (x + y) % n)


def shifted_cyclic(n: int, shift: int) -> OpTable:
    """Variant of the cyclic group at g = shift: x*y = (x + y + shift) mod n."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    _require(0 <= shift < n, f"shift must lie in 0..{n - 1}, got {shift}")
    return OpTable.from_function(n, lambda x, y: (x + y + shift) % n)


def linear_semilattice(n: int) -> OpTable:
    """Chain semilattice: x*y = min(x, y)."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    return OpTable.from_function(n, min)


def null_semigroup(n: int, zero: int = 0) -> OpTable:
    """Every product equals the zero."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    _require(0 <= zero < n, f"zero must lie in 0..{n - 1}, got {zero}")
    return OpTable.from_function(n, lambda x, y: zero)


def monogenic(r: int, m: int) -> OpTable:
    """Monogenic semigroup of index r and period m; order r + m - 1.

    Index i stands for the power a^(i+1), so a^(r+m) = a^r folds high
    exponents back into the cycle.
    """
    _require(r >= 1, f"index must be >= 1, got {r}")
    _require(m >= 1, f"period must be >= 1, got {m}")
    n = r + m - 1

    def fold(x, y):
        e = x + y + 2
        if e > n:
            e = r + (e - r) % m
        return e - 1

    return OpTable.from_function(n, fold)


def idempotent_diagonal_at(n: int, marked, zero: int) -> OpTable:
    """x*y = x when x == y is marked, else the zero."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    marked = frozenset(marked)
    _require(0 <= zero < n, f"zero must lie in 0..{n - 1}, got {zero}")
    _require(zero not in marked, f"zero {zero} cannot be marked")
    _require(all(0 <= a < n for a in marked), f"marked elements outside 0..{n - 1}")
    return OpTable.from_function(n, lambda x, y: x if x == y and x in marked else zero)


def idempotent_diagonal(n: int, m: int) -> OpTable:
    """O(n,m): elements 0..m-1 are idempotent, every other product is the zero n-1."""
    _require(n >= 2, f"order must be >= 2, got {n}")
    _require(1 <= m <= n - 1, f"marked count must lie in 1..{n - 1}, got {m}")
    return idempotent_diagonal_at(n, range(m), n - 1)


def left_zero(n: int) -> OpTable:
    """x*y = x."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    return OpTable.from_function(n, lambda x, y: x)


def right_zero(n: int) -> OpTable:
    """x*y = y."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    return OpTable.from_function(n, lambda x, y: y)


def left_zero_band(n: int) -> OpTable:
    """LOB: 0*0 = 0, 0*y = 1 for y != 0, and every other row is constant x."""
    _require(n >= 2, f"order must be >= 2, got {n}")
    return OpTable.from_function(n, lambda x, y: x if x != 0 else (0 if y == 0 else 1))


def left_zero_collapse(m: int, n: int) -> OpTable:
    """LO(m<-n): elements below m are left zeros, the rest collapse to 0."""
    _require(n >= 1, f"order must be >= 1, got {n}")
    _require(1 <= m <= n, f"left-zero count must lie in 1..{n}, got {m}")
    return OpTable.from_function(n, lambda x, y: x if x < m else 0)


def masked_left_zero(m: int, s: int) -> OpTable:
    """LOt0(m<-s) on s+1 elements: x*y = x when y < m, else the zero s."""
    _require(s >= 1, f"carrier size must be >= 1, got {s}")
    _require(0 <= m <= s, f"mask size must lie in 0..{s}, got {m}")
    return OpTable.from_function(s + 1, lambda x, y: x if y < m else s)


# ---------------------------------------------------------------------------
# derived constructions

def _require(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


def _assert_assoc_preserved(src: OpTable, out: OpTable):
    if assoc_witness(src.entries, src.order) is None:
        assert assoc_witness(out.entries, out.order) is None
    return out


def adjoin_zero(t: OpTable) -> OpTable:
    """Add a fresh absorbing element at index n."""
    n = t.order
    out = OpTable.from_function(
        n + 1, lambda x, y: t.at(x, y) if x < n and y < n else n)
    return _assert_assoc_preserved(t, out)


def adjoin_identity(t: OpTable) -> OpTable:
    """Add a fresh two-sided identity at index n."""
    n = t.order

    def op(x, y):
        if x == n:
            return y
        if y == n:
            return x
        return t.at(x, y)

    return _assert_assoc_preserved(t, OpTable.from_function(n + 1, op))


def adjoin_tilde1(t: OpTable) -> OpTable:
    """Add u at index n with u*s = s*u = s and u*u = the existing identity.

    Requires t to be a monoid; the result never is one.
    """
    n = t.order
    e = next((c for c in range(n)
              if all(t.at(c, x) == x == t.at(x, c) for x in range(n))), None)
    _require(e is not None, "~1 requires a monoid, but the table has no identity")

    def op(x, y):
        if x == n and y == n:
            return e
        if x == n:
            return y
        if y == n:
            return x
        return t.at(x, y)

    return _assert_assoc_preserved(t, OpTable.from_function(n + 1, op))


def dual_table(t: OpTable) -> OpTable:
    return t.transpose()


_DERIVATIONS = {"+0": adjoin_zero, "+1": adjoin_identity, "~1": adjoin_tilde1,
                "dual": dual_table}


def derive_semigroup(t: OpTable, construction: str) -> OpTable:
    try:
        fn = _DERIVATIONS[construction]
    except KeyError:
        raise ParameterError(f"unknown construction {construction!r}; "
                             f"expected one of {sorted(_DERIVATIONS)}")
    return fn(t)


# ---------------------------------------------------------------------------
# pair constructions

def trivial_dimonoid(t: OpTable) -> DiStructure:
    """The pair (t, t); requires t associative."""
    w = assoc_witness(t.entries, t.order)
    if w is not None:
        raise NotAssociativeError(w)
    return DiStructure(t, t)


def pair_dimonoid(left: OpTable, right: OpTable, mode: str | None = DIMONOID) -> DiStructure:
    """Assemble a pair, checking the axioms of mode unless mode is None."""
    d = DiStructure(left, right)
    if mode is not None:
        verdict = check_structure(d, mode)
        if not verdict.ok:
            raise AxiomError(verdict)
    return d


def dual_dimonoid(d: DiStructure) -> DiStructure:
    return d.dual()


def adjoin_zero_dimonoid(d: DiStructure) -> DiStructure:
    """Adjoin one shared absorbing element to both tables."""
    out = DiStructure(adjoin_zero(d.left), adjoin_zero(d.right))
    if check_dimonoid(d).ok:
        assert check_dimonoid(out).ok
    if check_doppelsemigroup(d).ok:
        assert check_doppelsemigroup(out).ok
    return out


# ---------------------------------------------------------------------------
# name grammar

_BASE_PATTERNS = (
    (re.compile(r"^C(\d+)\^-1$"), lambda n: shifted_cyclic(n, n - 1)),
    (re.compile(r"^C(\d+)$"), cyclic),
    (re.compile(r"^O(\d+)$"), null_semigroup),
    (re.compile(r"^L(\d+)$"), linear_semilattice),
    (re.compile(r"^LO(\d+)$"), left_zero),
    (re.compile(r"^RO(\d+)$"), lambda n: right_zero(n)),
    (re.compile(r"^LOB(\d+)$"), left_zero_band),
    (re.compile(r"^ROB(\d+)$"), lambda n: left_zero_band(n).transpose()),
    (re.compile(r"^M\((\d+),(\d+)\)$"), monogenic),
    (re.compile(r"^O\((\d+),(\d+)\)$"), idempotent_diagonal),
    (re.compile(r"^LO\((\d+)<-(\d+)\)$"), left_zero_collapse),
    (re.compile(r"^RO\((\d+)<-(\d+)\)$"), lambda m, n: left_zero_collapse(m, n).transpose()),
    (re.compile(r"^LOt0\((\d+)<-(\d+)\)$"), masked_left_zero),
    (re.compile(r"^ROt0\((\d+)<-(\d+)\)$"), lambda m, s: masked_left_zero(m, s).transpose()),
)

_SUFFIXES = ("+0", "+1", "~1")


def _is_balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def build_semigroup(name: str) -> OpTable:
    """Build the standard table for a semigroup name."""
    name = name.strip()
    for suffix in _SUFFIXES:
        if name.endswith(suffix) and _is_balanced(name[:-len(suffix)]):
            return derive_semigroup(build_semigroup(name[:-len(suffix)]), suffix)
    if name.startswith("dual(") and name.endswith(")") and _is_balanced(name[5:-1]):
        return dual_table(build_semigroup(name[5:-1]))
    for pattern, builder in _BASE_PATTERNS:
        m = pattern.match(name)
        if m:
            return builder(*(int(g) for g in m.groups()))
    raise ParameterError(f"unknown semigroup name {name!r}")


def _split_pair(name: str):
    """Split a top-level `left|right` name, or return None."""
    depth = 0
    for i, ch in enumerate(name):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|" and depth == 0:
            return name[:i], name[i + 1:]
    return None


def _special_pair(name: str):
    m = re.match(r"^C(\d+)\|C(\d+)\^-1$", name)
    if m and m.group(1) == m.group(2):
        n = int(m.group(1))
        return DiStructure(cyclic(n), shifted_cyclic(n, n - 1))
    if name == "O(3,1)a|O(3,1)b":
        return DiStructure(idempotent_diagonal_at(3, (0,), 2),
                           idempotent_diagonal_at(3, (1,), 2))
    return None


def semigroup_dual_name(name: str) -> str:
    """Display name of the dual semigroup class (LO <-> RO, others fixed)."""
    for suffix in _SUFFIXES:
        # adjoining a two-sided zero or identity commutes with duality
        if name.endswith(suffix) and _is_balanced(name[:-len(suffix)]):
            return semigroup_dual_name(name[:-len(suffix)]) + suffix
    if name.startswith("RO"):
        return "LO" + name[2:]
    if name.startswith("LO"):
        return "RO" + name[2:]
    return name


def structure_dual_name(name: str) -> str:
    """Display name of the dual structure class: swap components, dualize each."""
    if name.startswith("(") and name.endswith(")+0") and _is_balanced(name[1:-3]):
        return f"({structure_dual_name(name[1:-3])})+0"
    if _special_pair(name) is not None:
        return name  # curated specials denote classes isomorphic to their dual
    split = _split_pair(name)
    if split is None:
        return semigroup_dual_name(name)
    return f"{semigroup_dual_name(split[1])}|{semigroup_dual_name(split[0])}"


def build_structure(name: str, kind: str | None = None) -> DiStructure:
    """Build the pair a structure name denotes.

    Bare semigroup names give the trivial pair.  A `left|right` name
    resolves through `named_class_map` so it lands on the same class the
    classifier reports under that name (dimonoid first when kind is None,
    then doppelsemigroup).  Alias names outside the map fall back to
    relabeling the right component until the pair satisfies the kind's
    axioms, preferring an abelian pair, then relabeling order.
    """
    name = name.strip()
    if name.startswith("(") and name.endswith(")+0") and _is_balanced(name[1:-3]):
        return adjoin_zero_dimonoid(build_structure(name[1:-3], kind))
    if name.startswith("triv(") and name.endswith(")") and _is_balanced(name[5:-1]):
        return trivial_dimonoid(build_semigroup(name[5:-1]))
    if name.startswith("plus0(") and name.endswith(")") and _is_balanced(name[6:-1]):
        return adjoin_zero_dimonoid(build_structure(name[6:-1], kind))
    if name.startswith("dual(") and name.endswith(")") and _is_balanced(name[5:-1]):
        # for a bare semigroup name this equals the trivial pair of its dual
        return dual_dimonoid(build_structure(name[5:-1], kind))
    special = _special_pair(name)
    if special is not None:
        return _checked_named_pair(special, name, kind)
    split = _split_pair(name)
    if split is None:
        return trivial_dimonoid(build_semigroup(name))
    left = build_semigroup(split[0])
    right = build_semigroup(split[1])
    if left.order != right.order:
        raise ParameterError(f"components of {name!r} have different orders")
    kinds = (DIMONOID, DOPPELSEMIGROUP) if kind is None else (kind,)
    for k in kinds:
        resolved = named_class_map(left.order, k)[0].get(name)
        if resolved is not None:
            return resolved
    for k in kinds:
        valid = []
        for p in Permutation.all_of_degree(left.order):
            d = DiStructure(left, apply_permutation(right, p))
            if d.left != d.right and check_structure(d, k).ok:
                if d.right == d.left.transpose():
                    return d
                valid.append(d)
        if valid:
            return valid[0]
    raise ParameterError(f"no relabeling makes {name!r} a valid nontrivial pair")


def _checked_named_pair(d: DiStructure, name: str, kind: str | None) -> DiStructure:
    kinds = (DIMONOID, DOPPELSEMIGROUP) if kind is None else (kind,)
    for k in kinds:
        if check_structure(d, k).ok:
            return d
    raise ParameterError(f"{name!r} does not satisfy the {' or '.join(kinds)} axioms")


# ---------------------------------------------------------------------------
# named family lists; order encodes display-name priority (first match wins)

@lru_cache(maxsize=32)
def named_semigroups(n: int):
    """(name, table) pairs at order n, most canonical names first.

    Later entries may repeat an earlier isomorphism class (for example
    M(2,1) repeats O2); matching keeps the first name.
    """
    _require(n >= 1, f"order must be >= 1, got {n}")
    if n == 1:
        return (("C1", cyclic(1)),)
    out = [(f"C{n}", cyclic(n)), (f"O{n}", null_semigroup(n)),
           (f"L{n}", linear_semilattice(n))]
    for r in range(2, n + 1):
        out.append((f"M({r},{n - r + 1})", monogenic(r, n - r + 1)))
    for m in range(1, n):
        out.append((f"O({n},{m})", idempotent_diagonal(n, m)))
    out.append((f"LO{n}", left_zero(n)))
    out.append((f"RO{n}", right_zero(n)))
    if n >= 3:
        out.append((f"LOB{n}", left_zero_band(n)))
        out.append((f"ROB{n}", left_zero_band(n).transpose()))
    for m in range(2, n):
        out.append((f"LO({m}<-{n})", left_zero_collapse(m, n)))
        out.append((f"RO({m}<-{n})", left_zero_collapse(m, n).transpose()))
    s = n - 1
    for m in range(1, s):
        out.append((f"LOt0({m}<-{s})", masked_left_zero(m, s)))
        out.append((f"ROt0({m}<-{s})", masked_left_zero(m, s).transpose()))
    for base_name, t in named_semigroups(n - 1):
        out.append((f"{base_name}+0", adjoin_zero(t)))
        out.append((f"{base_name}+1", adjoin_identity(t)))
        try:
            out.append((f"{base_name}~1", adjoin_tilde1(t)))
        except ParameterError:
            pass  # not a monoid
    return tuple(out)


def _special_pair_names(n: int):
    out = []
    if n >= 2:
        out.append((f"C{n}|C{n}^-1",
                    DiStructure(cyclic(n), shifted_cyclic(n, n - 1))))
    if n == 3:
        out.append(("O(3,1)a|O(3,1)b",
                    DiStructure(idempotent_diagonal_at(3, (0,), 2),
                                idempotent_diagonal_at(3, (1,), 2))))
    return out


@lru_cache(maxsize=32)
def named_structures(n: int, kind: str):
    """(name, pair) candidates at order n for one kind, priority first.

    Priority: trivial pairs, then +0 images of named smaller nontrivial
    classes, then curated same-component specials, then direct pairs of
    named semigroup classes over all relabelings of the right component.
    Within one `left|right` name, abelian candidates (right table equal to
    the transpose of the left) come first, then relabeling order.  Only
    candidates satisfying the kind's axioms appear.  One name can reach
    several isomorphism classes; `named_class_map` resolves that.
    """
    from .iso import canonical_form  # local import keeps module layering acyclic

    out = [(name, DiStructure(t, t)) for name, t in named_semigroups(n)]
    if n >= 2:
        seen_inner = set()
        for name, d in named_structures(n - 1, kind):
            if d.left == d.right:
                continue
            key = canonical_form(d).key
            if key in seen_inner:
                continue
            seen_inner.add(key)
            out.append((f"({name})+0", adjoin_zero_dimonoid(d)))
        for name, d in _special_pair_names(n):
            if check_structure(d, kind).ok:
                out.append((name, d))
        distinct = []
        seen_tables = set()
        for name, t in named_semigroups(n):
            key = canonical_form(DiStructure(t, t)).key
            if key in seen_tables:
                continue
            seen_tables.add(key)
            distinct.append((name, t))
        for lname, lt in distinct:
            for rname, rt in distinct:
                block = []
                for p in Permutation.all_of_degree(n):
                    rtp = apply_permutation(rt, p)
                    if rtp == lt:
                        continue  # trivial pair, already named by the bare tier
                    d = DiStructure(lt, rtp)
                    if check_structure(d, kind).ok:
                        block.append(d)
                block.sort(key=lambda d: d.right != d.left.transpose())
                out.extend((f"{lname}|{rname}", d) for d in block)
        return tuple(out)
    return tuple(out)


@lru_cache(maxsize=32)
def named_class_map(n: int, kind: str):
    """Resolve names to classes: (name -> pair, canonical key -> name).

    Each isomorphism class takes at most one name and each name lands on at
    most one class, in `named_structures` priority order.  Assigning a name
    also assigns the dual name to the dual class, so named dual partners
    always carry each other's dual name.  Classes left over (two classes
    sharing every applicable name) stay out of the maps.
    """
    from .iso import canonical_form  # local import keeps module layering acyclic

    by_name: dict = {}
    by_key: dict = {}

    def claim(key, name, d) -> None:
        if key in by_key or name in by_name:
            return
        by_key[key] = name
        by_name[name] = d

    for name, d in named_structures(n, kind):
        key = canonical_form(d).key
        if key in by_key or name in by_name:
            continue
        claim(key, name, d)
        dd = d.dual()
        dual_key = canonical_form(dd).key
        if dual_key != key:
            claim(dual_key, structure_dual_name(name), dd)
    return by_name, by_key
