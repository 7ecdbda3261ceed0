"""Tests for axiom checks, witnesses, and structural profiles."""
from __future__ import annotations

from itertools import product

import pytest

from dimonoids import (DiStructure, NotAssociativeError, OpTable,
                       check_dimonoid, check_doppelsemigroup, check_structure,
                       cyclic, dimonoid_profile, is_associative, left_zero,
                       linear_semilattice, monogenic, null_semigroup,
                       right_zero, semigroup_profile, shifted_cyclic)
from dimonoids.catalog import left_zero_collapse


def _all_tables(n: int):
    for entries in product(range(n), repeat=n * n):
        yield OpTable(n, entries)


def test_order2_associative_count():
    assoc = [t for t in _all_tables(2) if is_associative(t)[0]]
    assert len(assoc) == 8


def test_nor_table_witness():
    nor = OpTable.from_rows([(1, 0), (0, 0)])
    ok, witness = is_associative(nor)
    assert not ok
    # (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1
    assert witness == (0, 0, 1)


def test_is_associative_on_groups():
    for n in (1, 2, 3, 4):
        ok, witness = is_associative(cyclic(n))
        assert ok and witness is None


def test_dimonoid_left_right_zero_pair():
    d = DiStructure(left_zero(3), right_zero(3))
    verdict = check_dimonoid(d)
    assert verdict.ok
    assert verdict.mode == "dimonoid"
    assert (verdict.d1, verdict.d2, verdict.d3) == (True, True, True)
    assert verdict.d4 is None
    assert verdict.failures() == ()


def test_doppel_fails_on_left_right_zero_pair():
    # (x -| y) |- z = z but x -| (y |- z) = x, first failure at z != x
    d = DiStructure(left_zero(3), right_zero(3))
    verdict = check_doppelsemigroup(d)
    assert not verdict.ok
    assert verdict.mode == "doppelsemigroup"
    assert verdict.d2 is True
    assert verdict.d4 is False
    assert verdict.d1 is None and verdict.d3 is None
    assert verdict.witnesses == {"d4": (0, 0, 1)}
    assert verdict.failures() == (("d4", (0, 0, 1)),)


def test_cyclic_with_shifted_inverse_pair():
    d = DiStructure(cyclic(3), shifted_cyclic(3, 2))
    assert check_doppelsemigroup(d).ok
    verdict = check_dimonoid(d)
    assert not verdict.ok
    assert verdict.witnesses["d1"] == (0, 0, 0)
    assert verdict.witnesses["d3"] == (0, 0, 0)
    assert verdict.left_associative and verdict.right_associative


def test_trivial_pair_of_any_semigroup_is_both_kinds():
    for t in (cyclic(3), linear_semilattice(3), null_semigroup(3), monogenic(2, 2)):
        d = DiStructure(t, t)
        assert check_dimonoid(d).ok
        assert check_doppelsemigroup(d).ok


def test_nonassociative_component_is_reported():
    nor = OpTable.from_rows([(1, 0), (0, 0)])
    d = DiStructure(nor, null_semigroup(2))
    verdict = check_dimonoid(d)
    assert not verdict.ok
    assert not verdict.left_associative
    assert verdict.right_associative
    assert verdict.witnesses["left_associative"] == (0, 0, 1)


def test_check_structure_dispatch():
    d = DiStructure(left_zero(2), right_zero(2))
    assert check_structure(d, "dimonoid").ok
    assert not check_structure(d, "doppelsemigroup").ok
    with pytest.raises(ValueError):
        check_structure(d, "monoid")


def test_verdict_to_json():
    d = DiStructure(left_zero(2), right_zero(2))
    obj = check_doppelsemigroup(d).to_json()
    assert obj["mode"] == "doppelsemigroup"
    assert obj["ok"] is False
    assert obj["witnesses"] == {"d4": [0, 0, 1]}
    assert obj["d1"] is None


def test_profile_cyclic_group():
    p = semigroup_profile(cyclic(3))
    assert p.commutative
    assert not p.band and not p.semilattice
    assert p.idempotents == (0,)
    assert p.identity == 0
    assert p.zero is None
    assert p.monogenic == (1, 3)
    assert p.right_commutative  # commutative implies right-commutative


def test_profile_semilattice():
    p = semigroup_profile(linear_semilattice(3))
    assert p.semilattice and p.band and p.commutative
    assert p.idempotents == (0, 1, 2)
    assert p.identity == 2
    assert p.zero == 0
    assert p.monogenic is None


def test_profile_null_semigroup():
    p = semigroup_profile(null_semigroup(3))
    assert p.commutative and not p.band
    assert p.zero == 0
    assert p.identity is None
    assert p.monogenic is None
    two = semigroup_profile(null_semigroup(2))
    assert two.monogenic == (2, 1)  # the nonzero element generates O2


def test_profile_monogenic():
    p = semigroup_profile(monogenic(2, 2))
    assert p.monogenic == (2, 2)
    assert p.commutative
    p = semigroup_profile(monogenic(3, 1))
    assert p.monogenic == (3, 1)
    assert p.zero == 2


def test_profile_one_sided():
    p = semigroup_profile(left_zero(3))
    assert not p.commutative
    assert p.band and not p.semilattice
    assert p.left_zeros == (0, 1, 2)
    assert p.right_zeros == ()
    assert p.left_identities == ()
    assert p.right_identities == (0, 1, 2)
    assert p.identity is None and p.zero is None


def test_right_commutative_detection():
    # s*x*y lands on the collapse of s for row-constant collapse tables,
    # but on the collapse of the last factor for the transpose
    assert semigroup_profile(left_zero_collapse(2, 3)).right_commutative
    assert not semigroup_profile(left_zero_collapse(2, 3).transpose()).right_commutative
    assert semigroup_profile(left_zero(3)).right_commutative
    assert not semigroup_profile(right_zero(3)).right_commutative


def test_profile_rejects_nonassociative():
    nor = OpTable.from_rows([(1, 0), (0, 0)])
    with pytest.raises(NotAssociativeError) as exc:
        semigroup_profile(nor)
    assert exc.value.witness == (0, 0, 1)


def test_dimonoid_profile_flags():
    p = dimonoid_profile(DiStructure(cyclic(3), cyclic(3)))
    assert p.trivial and p.commutative and p.abelian and p.self_dual
    p = dimonoid_profile(DiStructure(left_zero(3), right_zero(3)))
    assert not p.trivial and not p.commutative
    assert p.abelian and p.self_dual
    p = dimonoid_profile(DiStructure(left_zero(2), null_semigroup(2)))
    assert not p.trivial and not p.commutative and not p.abelian


def test_abelian_equals_self_dual_exhaustively():
    for left in _all_tables(2):
        for right in _all_tables(2):
            p = dimonoid_profile(DiStructure(left, right))
            assert p.abelian == p.self_dual
