"""Exact character tables via eigenvector splitting over F_l."""

import random

from vangraph import catalog
from vangraph.cyclo import Cyc
from vangraph.dixon import character_table, class_constants, dixon_prime
from vangraph.structure import conjugacy_classes

DEGREES = {
    "S3": (1, 1, 2),
    "S4": (1, 1, 2, 3, 3),
    "S5": (1, 1, 4, 4, 5, 5, 6),
    "A4": (1, 1, 1, 3),
    "A5": (1, 3, 3, 4, 5),
    "D8": (1, 1, 1, 1, 2),
    "D12": (1, 1, 1, 1, 2, 2),
    "PSL(2,7)": (1, 3, 3, 6, 7, 8),
}


def table_for(spec):
    return character_table(conjugacy_classes(catalog.catalog_group(spec)))


def test_degree_multisets_frozen():
    for spec, want in DEGREES.items():
        t = table_for(spec)
        assert tuple(sorted(t.degrees)) == want, spec


def test_degree_square_sum_and_row_count():
    for spec in DEGREES:
        t = table_for(spec)
        assert sum(d * d for d in t.degrees) == t.group_order
        assert len(t.values) == t.classes.count
        for i, d in enumerate(t.degrees):
            assert t.row(i)[0].as_int() == d > 0


def test_s3_table_frozen():
    t = table_for("S3")
    # canonical row order: sign, trivial, standard
    rows = [[v.as_int() for v in t.row(i)] for i in range(3)]
    assert rows == [[1, -1, 1], [1, 1, 1], [2, 0, -1]]
    assert t.modulus == 7


def test_a5_irrational_values():
    t = table_for("A5")
    reps = t.classes.reps
    five_cols = [j for j, r in enumerate(reps) if r.order() == 5]
    assert len(five_cols) == 2
    golden = Cyc.root_of_unity(5, 2) + Cyc.root_of_unity(5, 3)  # (-1-sqrt5)/2
    rows3 = [i for i, d in enumerate(t.degrees) if d == 3]
    vals = {(i, j): t.row(i)[j] for i in rows3 for j in five_cols}
    # each degree-3 row carries both golden-ratio conjugates
    for i in rows3:
        got = sorted(str(vals[(i, j)]) for j in five_cols)
        want = sorted([str(Cyc.integer(1) + golden),
                       str(Cyc.integer(0) - golden)])
        assert got == want
    assert t.modulus == 31


def test_row_orthogonality_exact():
    for spec in ("S4", "A5"):
        t = table_for(spec)
        cls = t.classes
        n = cls.count
        for i in range(n):
            for j in range(n):
                total = Cyc.integer(0)
                for k in range(n):
                    inv = cls.inverse_class(k)
                    total = total + (Cyc.integer(cls.sizes[k])
                                     * t.row(i)[k] * t.row(j)[inv])
                want = t.group_order if i == j else 0
                assert (total - Cyc.integer(want)).is_zero(), (spec, i, j)


def test_column_orthogonality_exact():
    for spec in ("S4", "A5"):
        t = table_for(spec)
        cls = t.classes
        n = cls.count
        for k in range(n):
            for l in range(n):
                total = Cyc.integer(0)
                for i in range(n):
                    total = total + t.row(i)[k] * t.row(i)[cls.inverse_class(l)]
                want = t.group_order // cls.sizes[k] if k == l else 0
                assert (total - Cyc.integer(want)).is_zero(), (spec, k, l)


def test_tables_are_deterministic():
    a = table_for("S5")
    b = table_for("S5")
    assert a.degrees == b.degrees
    assert [[str(v) for v in row] for row in a.values] == \
           [[str(v) for v in row] for row in b.values]
    assert a.modulus == b.modulus


def test_dixon_prime_choice():
    # l = 1 (mod exponent), l^2 > 4|G|
    assert table_for("S3").modulus == 7
    assert table_for("A5").modulus == 31
    assert dixon_prime(60, 30) == 31


def test_class_constants_row_sums():
    cls = conjugacy_classes(catalog.catalog_group("S4"))
    cc = class_constants(cls)
    n = cls.count
    for i in range(n):
        for j in range(n):
            total = sum(cc.value(i, j, k) * cls.sizes[k] for k in range(n))
            assert total == cls.sizes[i] * cls.sizes[j]


def test_class_constants_match_characters():
    # |C_i| x_i * |C_j| x_j = deg * sum_k a_ijk |C_k| x_k on every row
    spec = "A5"
    cls = conjugacy_classes(catalog.catalog_group(spec))
    cc = class_constants(cls)
    t = character_table(cls, constants=cc)
    n = cls.count
    rng = random.Random(5)
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(10)]
    for i, j in pairs:
        for r in range(n):
            row = t.row(r)
            left = (Cyc.integer(cls.sizes[i]) * row[i]
                    * Cyc.integer(cls.sizes[j]) * row[j])
            right = Cyc.integer(0)
            for k in range(n):
                right = right + Cyc.integer(cc.value(i, j, k)
                                            * cls.sizes[k]) * row[k]
            right = Cyc.integer(t.degrees[r]) * right
            assert (left - right).is_zero(), (i, j, r)


def vanishing_columns(t):
    cols = set()
    for i in range(len(t.degrees)):
        cols |= t.vanishing_column_set(i)
    return cols


def test_vanishing_column_set():
    t = table_for("S3")
    assert t.vanishing_column_set(2) == {1}
    assert vanishing_columns(t) == {1}
    t5 = table_for("A5")
    assert vanishing_columns(t5) == {1, 2, 3, 4}
    manual = {j for j in range(t5.classes.count)
              if any(t5.row(i)[j].is_zero() for i in range(len(t5.degrees)))}
    assert vanishing_columns(t5) == manual


def test_defect_zero_rows():
    s4 = table_for("S4")
    assert s4.defect_zero_rows(2) == ()
    assert {s4.degrees[i] for i in s4.defect_zero_rows(3)} == {3}
    a5 = table_for("A5")
    assert {a5.degrees[i] for i in a5.defect_zero_rows(2)} == {4}
    assert {a5.degrees[i] for i in a5.defect_zero_rows(3)} == {3}
    assert {a5.degrees[i] for i in a5.defect_zero_rows(5)} == {5}


def test_burnside_vanishing_gate_small():
    # Van(G) empty exactly when G is abelian
    for spec in ("C2", "C6", "C12", "S3", "A4", "D8", "A5"):
        t = table_for(spec)
        cls = t.classes
        abelian = all(s == 1 for s in cls.sizes)
        assert (not vanishing_columns(t)) == abelian, spec
