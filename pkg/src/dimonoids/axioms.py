"""Axiom checks and structural profiles for tables and table pairs.

Writing x -| y for the left operation and x |- y for the right one, the
pair axioms are

    D1: (x -| y) -| z = x -| (y |- z)
    D2: (x |- y) -| z = x |- (y -| z)
    D3: (x -| y) |- z = x |- (y |- z)
    D4: (x -| y) |- z = x -| (y |- z)

A dimonoid is a pair of associative tables satisfying D1-D3; a
doppelsemigroup is a pair of associative tables satisfying D2 and D4.
Witnesses are always the lexicographically first failing triple (x, y, z).
"""
from __future__ import annotations

from dataclasses import dataclass

from .tables import DiStructure, OpTable

DIMONOID = "dimonoid"
DOPPELSEMIGROUP = "doppelsemigroup"
KINDS = (DIMONOID, DOPPELSEMIGROUP)


class NotAssociativeError(ValueError):
    """An operation required to be associative is not; carries the witness."""

    def __init__(self, witness):
        super().__init__(f"not associative, witness (x, y, z) = {witness}")
        self.witness = witness


class AxiomError(ValueError):
    """A checked structure failed its axioms; carries the AxiomVerdict."""

    def __init__(self, verdict):
        failed = ", ".join(name for name, _ in verdict.failures())
        super().__init__(f"axioms failed: {failed}")
        self.verdict = verdict


def assoc_witness(e, n: int):
    """First (x, y, z) with (x*y)*z != x*(y*z) in the flat table e, else None."""
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = e[xn + y]
            yn = y * n
            for z in range(n):
                if e[xy * n + z] != e[xn + e[yn + z]]:
                    return (x, y, z)
    return None


def _d1_witness(le, re, n):
    # (x -| y) -| z = x -| (y |- z)
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = le[xn + y]
            yn = y * n
            for z in range(n):
                if le[xy * n + z] != le[xn + re[yn + z]]:
                    return (x, y, z)
    return None


def _d2_witness(le, re, n):
    # (x |- y) -| z = x |- (y -| z)
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = re[xn + y]
            yn = y * n
            for z in range(n):
                if le[xy * n + z] != re[xn + le[yn + z]]:
                    return (x, y, z)
    return None


def _d3_witness(le, re, n):
    # (x -| y) |- z = x |- (y |- z)
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = le[xn + y]
            yn = y * n
            for z in range(n):
                if re[xy * n + z] != re[xn + re[yn + z]]:
                    return (x, y, z)
    return None


def _d4_witness(le, re, n):
    # (x -| y) |- z = x -| (y |- z)
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = le[xn + y]
            yn = y * n
            for z in range(n):
                if re[xy * n + z] != le[xn + re[yn + z]]:
                    return (x, y, z)
    return None


_AXIOM_WITNESS = {"d1": _d1_witness, "d2": _d2_witness, "d3": _d3_witness, "d4": _d4_witness}


def is_associative(t: OpTable):
    """Return (flag, witness); witness is None when associative."""
    w = assoc_witness(t.entries, t.order)
    return (w is None, w)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of a dimonoid or doppelsemigroup check.

    Axioms outside the checked mode are None.  A flag is False exactly
    when witnesses holds a triple for it.
    """

    mode: str
    left_associative: bool
    right_associative: bool
    d1: bool | None
    d2: bool
    d3: bool | None
    d4: bool | None
    witnesses: dict

    @property
    def ok(self) -> bool:
        flags = (self.left_associative, self.right_associative,
                 self.d1, self.d2, self.d3, self.d4)
        return all(f for f in flags if f is not None)

    def failures(self):
        return tuple(sorted(self.witnesses.items()))

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "ok": self.ok,
            "left_associative": self.left_associative,
            "right_associative": self.right_associative,
            "d1": self.d1,
            "d2": self.d2,
            "d3": self.d3,
            "d4": self.d4,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


def _check_pair(d: DiStructure, mode: str, axiom_names) -> AxiomVerdict:
    n = d.order
    le, re = d.left.entries, d.right.entries
    witnesses = {}
    wl = assoc_witness(le, n)
    if wl is not None:
        witnesses["left_associative"] = wl
    wr = assoc_witness(re, n)
    if wr is not None:
        witnesses["right_associative"] = wr
    flags = {"d1": None, "d2": None, "d3": None, "d4": None}
    for name in axiom_names:
        w = _AXIOM_WITNESS[name](le, re, n)
        flags[name] = w is None
        if w is not None:
            witnesses[name] = w
    return AxiomVerdict(mode=mode, left_associative=wl is None,
                        right_associative=wr is None, witnesses=witnesses, **flags)


def check_dimonoid(d: DiStructure) -> AxiomVerdict:
    """Both tables associative plus D1, D2, D3."""
    return _check_pair(d, DIMONOID, ("d1", "d2", "d3"))


def check_doppelsemigroup(d: DiStructure) -> AxiomVerdict:
    """Both tables associative plus D2, D4."""
    return _check_pair(d, DOPPELSEMIGROUP, ("d2", "d4"))


def check_structure(d: DiStructure, kind: str) -> AxiomVerdict:
    if kind == DIMONOID:
        return check_dimonoid(d)
    if kind == DOPPELSEMIGROUP:
        return check_doppelsemigroup(d)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# profiles

@dataclass(frozen=True)
class SemigroupProfile:
    commutative: bool
    band: bool
    semilattice: bool
    right_commutative: bool
    idempotents: tuple
    left_identities: tuple
    right_identities: tuple
    identity: int | None
    left_zeros: tuple
    right_zeros: tuple
    zero: int | None
    monogenic: tuple | None  # (index r, period m) with r + m - 1 == order

    def to_json(self) -> dict:
        out = {k: getattr(self, k) for k in (
            "commutative", "band", "semilattice", "right_commutative",
            "identity", "zero")}
        for k in ("idempotents", "left_identities", "right_identities",
                  "left_zeros", "right_zeros"):
            out[k] = list(getattr(self, k))
        out["monogenic"] = list(self.monogenic) if self.monogenic else None
        return out


def _monogenic_params(e, n):
    """(r, m) for the first generator of the whole carrier, else None."""
    for a in range(n):
        seen = {}
        powers = []
        x = a
        while x not in seen:
            seen[x] = len(powers)
            powers.append(x)
            x = e[x * n + a]
        if len(seen) == n:
            i = seen[x]  # a^(len+1) == a^(i+1)
            r = i + 1
            m = len(powers) - i
            return (r, m)
    return None


def semigroup_profile(t: OpTable) -> SemigroupProfile:
    """Structural profile of an associative table; raises NotAssociativeError otherwise."""
    n = t.order
    e = t.entries
    w = assoc_witness(e, n)
    if w is not None:
        raise NotAssociativeError(w)
    commutative = all(e[x * n + y] == e[y * n + x] for x in range(n) for y in range(x + 1, n))
    idempotents = tuple(x for x in range(n) if e[x * n + x] == x)
    band = len(idempotents) == n
    semilattice = band and commutative
    right_commutative = all(
        e[e[s * n + x] * n + y] == e[e[s * n + y] * n + x]
        for s in range(n) for x in range(n) for y in range(x + 1, n))
    left_identities = tuple(c for c in range(n) if all(e[c * n + x] == x for x in range(n)))
    right_identities = tuple(c for c in range(n) if all(e[x * n + c] == x for x in range(n)))
    identity = next((c for c in left_identities if c in right_identities), None)
    left_zeros = tuple(c for c in range(n) if all(e[c * n + x] == c for x in range(n)))
    right_zeros = tuple(c for c in range(n) if all(e[x * n + c] == c for x in range(n)))
    zero = next((c for c in left_zeros if c in right_zeros), None)
    monogenic = _monogenic_params(e, n)
    if monogenic is not None:
        assert monogenic[0] + monogenic[1] - 1 == n
    return SemigroupProfile(
        commutative=commutative, band=band, semilattice=semilattice,
        right_commutative=right_commutative, idempotents=idempotents,
        left_identities=left_identities, right_identities=right_identities,
        identity=identity, left_zeros=left_zeros, right_zeros=right_zeros,
        zero=zero, monogenic=monogenic)


@dataclass(frozen=True)
class DimonoidProfile:
    trivial: bool
    commutative: bool
    abelian: bool
    self_dual: bool

    def to_json(self) -> dict:
        return {"trivial": self.trivial, "commutative": self.commutative,
                "abelian": self.abelian, "self_dual": self.self_dual}


def dimonoid_profile(d: DiStructure) -> DimonoidProfile:
    """Table-level flags for a pair; abelian and self_dual must agree."""
    n = d.order
    le, re = d.left.entries, d.right.entries
    trivial = le == re
    commutative = (
        all(le[x * n + y] == le[y * n + x] for x in range(n) for y in range(x + 1, n))
        and all(re[x * n + y] == re[y * n + x] for x in range(n) for y in range(x + 1, n)))
    abelian = all(le[x * n + y] == re[y * n + x] for x in range(n) for y in range(n))
    dd = d.dual()
    self_dual = dd.left == d.left and dd.right == d.right
    assert abelian == self_dual
    return DimonoidProfile(trivial=trivial, commutative=commutative,
                           abelian=abelian, self_dual=self_dual)
