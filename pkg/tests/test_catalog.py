"""Tests for the named families, derived constructions, and the name grammar."""
from __future__ import annotations

import pytest

from dimonoids import (AxiomError, DiStructure, NotAssociativeError, OpTable,
                       ParameterError, adjoin_identity, adjoin_tilde1,
                       adjoin_zero, adjoin_zero_dimonoid, build_semigroup,
                       build_structure, canonical_form, check_dimonoid,
                       check_doppelsemigroup, cyclic, dimonoid_profile,
                       dual_dimonoid, dual_table, derive_semigroup,
                       idempotent_diagonal, is_associative, left_zero,
                       left_zero_band, left_zero_collapse, linear_semilattice,
                       masked_left_zero, monogenic, named_class_map,
                       named_semigroups, named_structures, null_semigroup,
                       pair_dimonoid, right_zero, semigroup_dual_name,
                       shifted_cyclic, structure_dual_name, trivial_dimonoid)


def test_base_family_tables():
    assert cyclic(3).rows() == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert shifted_cyclic(3, 2).rows() == ((2, 0, 1), (0, 1, 2), (1, 2, 0))
    assert linear_semilattice(3).rows() == ((0, 0, 0), (0, 1, 1), (0, 1, 2))
    assert null_semigroup(3).rows() == ((0, 0, 0), (0, 0, 0), (0, 0, 0))
    assert left_zero(3).rows() == ((0, 0, 0), (1, 1, 1), (2, 2, 2))
    assert right_zero(3).rows() == ((0, 1, 2), (0, 1, 2), (0, 1, 2))
    assert monogenic(3, 1).rows() == ((1, 2, 2), (2, 2, 2), (2, 2, 2))
    assert monogenic(2, 2).rows() == ((1, 2, 1), (2, 1, 2), (1, 2, 1))
    assert idempotent_diagonal(3, 1).rows() == ((0, 2, 2), (2, 2, 2), (2, 2, 2))
    assert idempotent_diagonal(3, 2).rows() == ((0, 2, 2), (2, 1, 2), (2, 2, 2))
    assert left_zero_band(3).rows() == ((0, 1, 1), (1, 1, 1), (2, 2, 2))
    assert left_zero_collapse(2, 3).rows() == ((0, 0, 0), (1, 1, 1), (0, 0, 0))
    assert masked_left_zero(1, 2).rows() == ((0, 2, 2), (1, 2, 2), (2, 2, 2))


def test_base_families_are_associative():
    tables = [cyclic(4), shifted_cyclic(4, 3), linear_semilattice(4),
              null_semigroup(4), left_zero(4), right_zero(4),
              left_zero_band(4), left_zero_collapse(2, 4),
              masked_left_zero(2, 3), monogenic(2, 3), monogenic(4, 1),
              idempotent_diagonal(4, 2)]
    for t in tables:
        ok, witness = is_associative(t)
        assert ok, witness


def test_family_parameter_errors():
    with pytest.raises(ParameterError):
        cyclic(0)
    with pytest.raises(ParameterError):
        shifted_cyclic(3, 3)
    with pytest.raises(ParameterError):
        null_semigroup(3, zero=3)
    with pytest.raises(ParameterError):
        monogenic(0, 2)
    with pytest.raises(ParameterError):
        idempotent_diagonal(3, 3)  # the zero cannot be marked
    with pytest.raises(ParameterError):
        left_zero_collapse(3, 2)
    with pytest.raises(ParameterError):
        masked_left_zero(3, 2)
    with pytest.raises(ParameterError):
        left_zero_band(1)


def test_adjoin_zero():
    t = adjoin_zero(cyclic(2))
    assert t.rows() == ((0, 1, 2), (1, 0, 2), (2, 2, 2))
    assert is_associative(t)[0]


def test_adjoin_identity():
    t = adjoin_identity(null_semigroup(2))
    assert t.rows() == ((0, 0, 0), (0, 0, 1), (0, 1, 2))
    assert is_associative(t)[0]


def test_adjoin_tilde1():
    t = adjoin_tilde1(cyclic(2))
    assert t.rows() == ((0, 1, 0), (1, 0, 1), (0, 1, 0))
    assert is_associative(t)[0]
    with pytest.raises(ParameterError):
        adjoin_tilde1(null_semigroup(2))  # no identity


def test_derive_semigroup_dispatch():
    assert derive_semigroup(left_zero(2), "dual") == right_zero(2)
    assert derive_semigroup(cyclic(2), "+0") == adjoin_zero(cyclic(2))
    with pytest.raises(ParameterError):
        derive_semigroup(cyclic(2), "+2")


def test_dual_table_is_transpose():
    assert dual_table(left_zero(3)) == right_zero(3)
    assert dual_table(cyclic(3)) == cyclic(3)


def test_trivial_dimonoid():
    d = trivial_dimonoid(cyclic(3))
    assert d.left == d.right == cyclic(3)
    with pytest.raises(NotAssociativeError):
        trivial_dimonoid(OpTable.from_rows([(1, 0), (0, 0)]))


def test_pair_dimonoid_checks_axioms():
    d = pair_dimonoid(left_zero(3), right_zero(3))
    assert check_dimonoid(d).ok
    with pytest.raises(AxiomError) as exc:
        pair_dimonoid(cyclic(3), shifted_cyclic(3, 2))  # doppel but not dimonoid
    assert "d1" in str(exc.value)
    d = pair_dimonoid(cyclic(3), shifted_cyclic(3, 2), mode="doppelsemigroup")
    assert check_doppelsemigroup(d).ok
    d = pair_dimonoid(cyclic(3), shifted_cyclic(3, 2), mode=None)  # unchecked
    assert not check_dimonoid(d).ok


def test_adjoin_zero_dimonoid():
    d = adjoin_zero_dimonoid(DiStructure(left_zero(2), right_zero(2)))
    assert d.order == 3
    assert d.left.rows() == ((0, 0, 2), (1, 1, 2), (2, 2, 2))
    assert d.right.rows() == ((0, 1, 2), (0, 1, 2), (2, 2, 2))
    assert check_dimonoid(d).ok


def test_build_semigroup_round_trips_every_name():
    for n in (1, 2, 3, 4):
        for name, t in named_semigroups(n):
            assert build_semigroup(name) == t, name


def test_build_semigroup_grammar():
    assert build_semigroup("C3") == cyclic(3)
    assert build_semigroup("C3^-1") == shifted_cyclic(3, 2)
    assert build_semigroup("O3") == null_semigroup(3)
    assert build_semigroup("L3") == linear_semilattice(3)
    assert build_semigroup("LO3") == left_zero(3)
    assert build_semigroup("RO3") == right_zero(3)
    assert build_semigroup("LOB3") == left_zero_band(3)
    assert build_semigroup("ROB3") == left_zero_band(3).transpose()
    assert build_semigroup("M(3,1)") == monogenic(3, 1)
    assert build_semigroup("O(3,2)") == idempotent_diagonal(3, 2)
    assert build_semigroup("LO(2<-3)") == left_zero_collapse(2, 3)
    assert build_semigroup("RO(2<-3)") == left_zero_collapse(2, 3).transpose()
    assert build_semigroup("LOt0(1<-2)") == masked_left_zero(1, 2)
    assert build_semigroup("ROt0(1<-2)") == masked_left_zero(1, 2).transpose()
    assert build_semigroup("C2+0") == adjoin_zero(cyclic(2))
    assert build_semigroup("O2+1") == adjoin_identity(null_semigroup(2))
    assert build_semigroup("C2~1") == adjoin_tilde1(cyclic(2))
    assert build_semigroup("dual(LO3)") == right_zero(3)
    assert build_semigroup(" C3 ") == cyclic(3)
    with pytest.raises(ParameterError):
        build_semigroup("Q8")
    with pytest.raises(ParameterError):
        build_semigroup("LO")


def test_named_semigroups_cover_all_order3_classes():
    keys = {canonical_form(DiStructure(t, t)).key for _, t in named_semigroups(3)}
    assert len(keys) == 24


def test_build_structure_trivial_and_derived():
    assert build_structure("C3") == trivial_dimonoid(cyclic(3))
    assert build_structure("triv(C3)") == trivial_dimonoid(cyclic(3))
    d = build_structure("(LO2|RO2)+0")
    assert d.order == 3 and check_dimonoid(d).ok
    assert build_structure("plus0(LO2|RO2)") == d
    assert build_structure("dual(O3)") == trivial_dimonoid(null_semigroup(3))


def test_build_structure_pairs():
    d = build_structure("LO3|RO3")
    assert d == DiStructure(left_zero(3), right_zero(3))
    d = build_structure("C3|C3^-1")
    assert d == DiStructure(cyclic(3), shifted_cyclic(3, 2))
    assert check_doppelsemigroup(d).ok
    d = build_structure("LO3|O3", kind="dimonoid")
    assert d.left == left_zero(3)
    assert check_dimonoid(d).ok
    with pytest.raises(ParameterError):
        build_structure("C2|C3")  # component orders differ
    with pytest.raises(ParameterError):
        build_structure("C3|C3^-1", kind="dimonoid")  # only a doppelsemigroup


def test_build_structure_dual_of_pair():
    d = build_structure("LO3|O3", kind="dimonoid")
    dd = build_structure("dual(LO3|O3)", kind="dimonoid")
    assert dd == dual_dimonoid(d)


def test_build_structure_prefers_abelian_twin():
    d = build_structure("LO(2<-3)|RO(2<-3)", kind="dimonoid")
    assert dimonoid_profile(d).abelian


def test_named_class_map_is_injective_both_ways():
    for kind in ("dimonoid", "doppelsemigroup"):
        for n in (1, 2, 3):
            by_name, by_key = named_class_map(n, kind)
            assert len(by_name) == len(by_key)
            keys = {canonical_form(d).key for d in by_name.values()}
            assert keys == set(by_key)
            for name, d in by_name.items():
                assert by_key[canonical_form(d).key] == name


def test_build_structure_agrees_with_named_class_map():
    for kind in ("dimonoid", "doppelsemigroup"):
        by_name, _ = named_class_map(3, kind)
        for name, d in by_name.items():
            built = build_structure(name, kind=kind)
            assert canonical_form(built).key == canonical_form(d).key, name


def test_semigroup_dual_name():
    assert semigroup_dual_name("LO3") == "RO3"
    assert semigroup_dual_name("RO3") == "LO3"
    assert semigroup_dual_name("C3") == "C3"
    assert semigroup_dual_name("LOt0(1<-2)") == "ROt0(1<-2)"
    assert semigroup_dual_name("RO(2<-3)") == "LO(2<-3)"
    assert semigroup_dual_name("LO2+0") == "RO2+0"
    assert semigroup_dual_name("RO2+1") == "LO2+1"
    assert semigroup_dual_name("O2+0") == "O2+0"


def test_structure_dual_name():
    assert structure_dual_name("LO3|O3") == "O3|RO3"
    assert structure_dual_name("LO(2<-3)|RO(2<-3)") == "LO(2<-3)|RO(2<-3)"
    assert structure_dual_name("(LO2|O2)+0") == "(O2|RO2)+0"
    assert structure_dual_name("C3|C3^-1") == "C3|C3^-1"
    assert structure_dual_name("O(3,1)a|O(3,1)b") == "O(3,1)a|O(3,1)b"
    assert structure_dual_name("LO3") == "RO3"


def test_dual_name_matches_dual_table():
    # on semigroup names the display dual must be the transpose's class
    for n in (2, 3):
        for name, t in named_semigroups(n):
            dual_name = semigroup_dual_name(name)
            built = build_semigroup(dual_name)
            d1 = DiStructure(t.transpose(), t.transpose())
            d2 = DiStructure(built, built)
            assert canonical_form(d1).key == canonical_form(d2).key, name


def test_named_structures_candidates_satisfy_axioms():
    from dimonoids import check_structure
    for kind in ("dimonoid", "doppelsemigroup"):
        for name, d in named_structures(2, kind):
            assert check_structure(d, kind).ok, name


def test_special_pair_tables():
    by_name, _ = named_class_map(3, "doppelsemigroup")
    d = by_name["O(3,1)a|O(3,1)b"]
    assert check_doppelsemigroup(d).ok
    left, right = d.left, d.right
    assert left != right
    assert canonical_form(DiStructure(left, left)).key == \
        canonical_form(DiStructure(right, right)).key
