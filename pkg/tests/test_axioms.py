import itertools

import pytest

import oracles
import published as pd
from btk import axioms
from btk.algebra import StructureTriple
from btk.config import OracleMismatch, oracle
from btk.stp import LogicalMatrix

BA2 = StructureTriple.from_tables(2, [1, 2, 2, 2], [1, 1, 1, 2], [2, 1])
DIAMOND = pd.K4[2].with_comp(LogicalMatrix(4, (4, 3, 2, 1)))
CHAIN3 = StructureTriple.from_tables(3, *oracles.chain(3))
# M3: three atoms 2, 3, 4 between top 1 and bottom 5
M3 = StructureTriple.from_tables(
    5,
    [1, 2, 3, 4, 5, 2, 2, 5, 5, 5, 3, 5, 3, 5, 5, 4, 5, 5, 4, 5, 5, 5, 5, 5, 5],
    [1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 3, 1, 3, 1, 1, 1, 4, 4, 1, 2, 3, 4, 5],
)


def test_ba2_is_everything():
    r = axioms.classify(BA2)
    assert all(v for v in r.as_dict().values())


def test_diamond_with_reversal_is_boolean():
    r = axioms.classify(DIAMOND)
    assert r.boolean and r.stone and r.pseudo and r.kleene and r.de_morgan and r.dic


def test_chain_with_reversal_is_kleene_not_boolean():
    r = axioms.classify(CHAIN3.with_comp(LogicalMatrix(3, (3, 2, 1))))
    assert r.kleene and r.dic and not r.boolean and not r.pseudo


def test_pseudo_complements_of_the_k4_lattices():
    for lat, expected in zip(pd.K4, pd.K4_PSEUDO):
        assert axioms.pseudo_complement(lat) == expected


def test_m3_is_a_non_distributive_lattice_without_pseudo_complement():
    assert axioms.is_lattice(M3) and axioms.is_bounded(M3)
    assert not axioms.is_distributive(M3)
    assert axioms.pseudo_complement(M3) is None


def test_pseudo_needs_a_bounded_lattice():
    bad = StructureTriple.from_tables(2, [1, 1, 1, 1], [1, 1, 1, 1])
    with pytest.raises(ValueError):
        axioms.pseudo_complement(bad)


def test_non_lattice_report():
    a = StructureTriple.from_tables(2, [2, 1, 1, 1], [1, 1, 1, 2], [2, 1])
    r = axioms.classify(a)
    assert not r.lattice and not r.distributive and not r.pseudo and not r.stone


def test_complement_flags_absent_without_complement():
    r = axioms.classify(BA2.lattice)
    assert r.de_morgan is None and r.free is None
    with pytest.raises(ValueError):
        axioms.classify_complement(BA2.lattice)


def test_k4_complement_classes_match_order_oracle():
    for lat in pd.K4:
        for comp in oracles.all_complements(4):
            a = lat.with_comp(LogicalMatrix(4, comp))
            ref = oracles.complement_classes(4, lat.meet.cols, lat.join.cols, comp)
            r = axioms.classify(a)
            assert {c for c in ("dic", "de_morgan", "kleene", "pseudo", "stone", "boolean") if r.flag(c)} == ref


def test_class_implications_on_k3():
    for meet, join in oracles.lattices_from_orders(3):
        lat = StructureTriple.from_tables(3, meet, join)
        for comp in itertools.product(range(1, 4), repeat=3):
            r = axioms.classify(lat.with_comp(LogicalMatrix(3, comp)))
            assert not r.kleene or r.de_morgan
            assert not r.boolean or r.stone
            assert not r.stone or r.pseudo


def test_oracle_switch_detects_disagreement(monkeypatch):
    monkeypatch.setattr(axioms, "_distributive_m", lambda a: False)
    with oracle(True), pytest.raises(OracleMismatch):
        axioms.is_distributive(BA2)
    with oracle(False):
        assert axioms.is_distributive(BA2) is False
