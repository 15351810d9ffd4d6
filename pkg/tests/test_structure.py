"""Conjugacy classes, normal structure, solvability machinery."""

import random
from itertools import combinations

import pytest

from vangraph import catalog
from vangraph.caps import CapExceeded, Caps
from vangraph.numth import prime_divisors
from vangraph.perms import parse_cycles
from vangraph.structure import (GroupStructure, centralizer,
                                conjugacy_classes, is_p_solvable,
                                normal_closure, quotient_group,
                                separating_subsets, structure_report)


def grp(spec):
    return catalog.catalog_group(spec)


def test_class_sizes_frozen():
    assert conjugacy_classes(grp("S3")).sizes == (1, 3, 2)
    assert conjugacy_classes(grp("S4")).sizes == (1, 6, 6, 8, 3)
    assert conjugacy_classes(grp("A4")).sizes == (1, 4, 4, 3)
    assert conjugacy_classes(grp("A5")).sizes == (1, 20, 12, 12, 15)
    assert conjugacy_classes(grp("D8")).sizes == (1, 2, 2, 1, 2)
    assert conjugacy_classes(grp("D12")).sizes == (1, 2, 3, 2, 3, 1)


def test_class_zero_is_identity_and_equation_holds():
    for spec in ("S3", "S4", "A5", "D12", "C6", "PSL(2,7)"):
        cls = conjugacy_classes(grp(spec))
        assert cls.reps[0].is_identity()
        assert cls.sizes[0] == 1
        order = cls.group.order
        assert sum(cls.sizes) == order
        for s in cls.sizes:
            assert order % s == 0
        for j, rep in enumerate(cls.reps):
            assert cls.class_of(rep) == j


def test_class_of_is_conjugation_invariant():
    g = grp("S5")
    cls = conjugacy_classes(g)
    elems = g.elements()
    rng = random.Random(11)
    for _ in range(100):
        x = rng.choice(elems)
        h = rng.choice(elems)
        assert cls.class_of(x) == cls.class_of(x.conjugate_by(h))


def test_centralizer_orbit_stabilizer():
    g = grp("S4")
    cls = conjugacy_classes(g)
    for j, rep in enumerate(cls.reps):
        c = centralizer(g, [rep])
        assert c.order * cls.sizes[j] == g.order
    assert centralizer(g, [parse_cycles("(1 2 3 4)", 4)]).order == 4


def test_power_and_inverse_class_maps():
    cls = conjugacy_classes(grp("S4"))
    for j, rep in enumerate(cls.reps):
        assert cls.inverse_class(j) == cls.class_of(rep.inverse())
        assert cls.power_class(j, 2) == cls.class_of(rep * rep)
        assert cls.power_class(j, 1) == j
    # real group: every class is its own inverse class
    assert all(cls.inverse_class(j) == j for j in range(cls.count))


def test_normal_closure_in_s4():
    g = grp("S4")
    cls = conjugacy_classes(g)
    assert normal_closure(g, [parse_cycles("(1 2)", 4)]).order == 24
    assert normal_closure(g, [parse_cycles("(1 2 3)", 4)]).order == 12
    v4 = normal_closure(g, [parse_cycles("(1 2)(3 4)", 4)])
    assert v4.order == 4
    assert v4.is_abelian()
    assert not v4.is_trivial()


def test_center_orders():
    for spec, want in [("S4", 1), ("D8", 2), ("D12", 2), ("C6", 6),
                       ("A5", 1)]:
        cls = conjugacy_classes(grp(spec))
        assert GroupStructure(cls).center.order == want


def test_minimal_normal_subgroups():
    cases = {
        "S4": [(4, True)],
        "A5": [(60, False)],
        "S5": [(60, False)],
        "C6": [(2, True), (3, True)],
        "D12": [(2, True), (3, True)],
        "C2 x A5": [(2, True), (60, False)],
        "A5 x A5": [(60, False), (60, False)],
    }
    for spec, want in cases.items():
        cls = conjugacy_classes(grp(spec))
        mins = GroupStructure(cls).minimal_normal_subgroups
        got = sorted((m.order, m.is_abelian()) for m in mins)
        assert got == sorted(want), spec


def test_minimal_normals_are_minimal():
    for spec in ("S4", "S5", "C6", "D12", "C2 x A5"):
        cls = conjugacy_classes(grp(spec))
        gs = GroupStructure(cls)
        mins = gs.minimal_normal_subgroups
        for m in mins:
            for other in mins:
                if other is not m:
                    assert not m.contains_subgroup(other)
            # closure of any nontrivial element is the whole subgroup
            for x in m.group.elements():
                if not x.is_identity():
                    assert gs.class_closure(cls.class_of(x)).same_as(m)


def test_fitting_subgroup():
    for spec, want in [("S4", 4), ("S3", 3), ("D8", 8), ("D12", 6),
                       ("A5", 1), ("A4", 4), ("C12", 12)]:
        cls = conjugacy_classes(grp(spec))
        assert GroupStructure(cls).fitting_subgroup.order == want, spec


def test_fitting_is_nilpotent_and_normal():
    for spec in ("S4", "D12", "S3 x A5"):
        g = grp(spec)
        cls = conjugacy_classes(g)
        fit = GroupStructure(cls).fitting_subgroup
        sub = fit.group
        # normal: closed under conjugation by ambient generators
        for x in sub.elements():
            for h in g.generators:
                assert x.conjugate_by(h) in sub
        # nilpotent here is checked through the derived series reaching 1
        # plus every Sylow being characteristic-by-order (abelian factors)
        fcls = conjugacy_classes(sub)
        assert GroupStructure(fcls).is_solvable()


def test_derived_series():
    def orders(spec):
        cls = conjugacy_classes(grp(spec))
        return [s.order for s in GroupStructure(cls).derived_series]

    assert orders("S4") == [24, 12, 4, 1]
    assert orders("S3") == [6, 3, 1]
    assert orders("A5") == [60, 60]
    assert orders("C6") == [6, 1]


def test_solvability():
    solvable = {"S3": True, "S4": True, "A4": True, "D12": True, "C12": True,
                "A5": False, "S5": False, "PSL(2,7)": False}
    for spec, want in solvable.items():
        cls = conjugacy_classes(grp(spec))
        assert GroupStructure(cls).is_solvable() is want, spec


def test_p_nilpotency():
    cases = {
        "S3": {2: True, 3: False},
        "A4": {2: False, 3: True},
        "D12": {2: True, 3: False},
        "A5": {2: False, 3: False, 5: False},
        "C6": {2: True, 3: True},
    }
    for spec, want in cases.items():
        cls = conjugacy_classes(grp(spec))
        gs = GroupStructure(cls)
        got = {p: gs.normal_p_complement(p) is not None
               for p in prime_divisors(cls.group.order)}
        assert got == want, spec


def test_p_solvability():
    for spec, want in [("S4", {2: True, 3: True}),
                       ("A5", {2: False, 3: False, 5: False}),
                       ("S5", {2: False, 3: False, 5: False}),
                       ("C2 x A5", {2: False, 3: False, 5: False}),
                       ("PSL(2,7)", {2: False, 3: False, 7: False})]:
        g = grp(spec)
        got = {p: is_p_solvable(g, p) for p in prime_divisors(g.order)}
        assert got == want, spec


def test_solvable_iff_p_solvable_for_all_p():
    for spec in ("S3", "S4", "A4", "A5", "S5", "D12", "C12", "PSL(2,5)"):
        g = grp(spec)
        cls = conjugacy_classes(g)
        solv = GroupStructure(cls).is_solvable()
        assert solv == all(is_p_solvable(g, p)
                           for p in prime_divisors(g.order)), spec


def test_p_not_dividing_order_is_trivially_good():
    g = grp("S4")
    cls = conjugacy_classes(g)
    gs = GroupStructure(cls)
    assert is_p_solvable(g, 7)
    comp = gs.normal_p_complement(7)
    assert comp is not None and comp.order == 24


def test_quotient_group():
    g = grp("S4")
    cls = conjugacy_classes(g)
    gs = GroupStructure(cls)
    v4 = [m for m in gs.minimal_normal_subgroups if m.order == 4][0]
    q = quotient_group(g, v4)
    assert q.group.order == 6
    qcls = conjugacy_classes(q.group)
    assert sorted(qcls.sizes) == [1, 2, 3]
    # size of (xN)^(G/N) divides the size of x^G
    for x in g.elements():
        down = q.project(x)
        qsize = qcls.sizes[qcls.class_of(down)]
        assert cls.sizes[cls.class_of(x)] % qsize == 0


def test_structure_report_shape():
    rep = structure_report(GroupStructure(conjugacy_classes(grp("S3"))))
    assert rep.order == 6
    assert rep.primes == (2, 3)
    assert rep.center_order == 1
    assert rep.fitting_order == 3
    assert rep.minimal_normals == ((3, True),)
    assert rep.derived_series_orders == (6, 3, 1)
    assert rep.is_solvable
    assert rep.p_nilpotent == {2: True, 3: False}
    assert rep.p_solvable == {2: True, 3: True}


def setwise_stabilizer_order(g, subset):
    target = set(subset)
    return sum(1 for x in g.elements()
               if {x.images[i] for i in target} == target)


def test_separating_subsets_contract():
    for spec in ("S3", "S4", "A5", "D12", "PSL(2,5)"):
        g = grp(spec)
        primes = prime_divisors(g.order)
        for p, q in combinations(primes, 2):
            g1, g2 = separating_subsets(g, p, q)
            assert g1 and g2
            assert not set(g1) & set(g2)
            both = set(g1) | set(g2)
            stab = sum(
                1 for x in g.elements()
                if {x.images[i] for i in g1} == set(g1)
                and {x.images[i] for i in g2} == set(g2))
            index = g.order // stab
            assert index % p == 0 and index % q == 0, (spec, p, q, both)


def test_separating_subsets_trivial_targets():
    g = grp("S3")
    # primes outside pi(G) impose no constraint but a witness still returns
    g1, g2 = separating_subsets(g, 7, 11)
    assert g1 and g2 and not set(g1) & set(g2)


def test_caps_raise_cap_exceeded():
    g = grp("S5")
    with pytest.raises(CapExceeded):
        conjugacy_classes(g, Caps(enum_cap=10))
