"""Exact character tables of finite groups by Dixon's modular method.

Pipeline: class multiplication constants -> simultaneous eigenspace
splitting of the class matrices over a prime field F_l (l = 1 mod the
group exponent, l squared beyond four times the order) -> normalisation
via orthogonality to recover the mod-l characters and their degrees ->
exact lift to cyclotomic integers through a discrete Fourier transform
over the power map.

Every step is integer arithmetic; the final table is exact by
construction and is re-checked against the orthogonality relations in
the test suite.  The eigenspace splitting consumes randomness only from
a fixed-seed generator, so tables are bit-reproducible run to run.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .caps import Caps, CapExceeded, default_caps
from .cyclo import Cyc
from .numth import (charpoly, dixon_prime, mat_vec, nullspace, poly_roots,
                    primitive_root, solve_in_columns, sqrt_mod)
from .structure import ConjugacyClasses

_SPLIT_SEED = 0x0D15C0


@dataclass(frozen=True)
class ClassConstants:
    """a[i][j][k] counts the ways the fixed representative of class k
    factors as x * y with x in class i, y in class j."""

    table: tuple  # table[k][i][j]

    def value(self, i: int, j: int, k: int) -> int:
        return self.table[k][i][j]

    @property
    def count(self) -> int:
        return len(self.table)


def class_constants(classes: ConjugacyClasses, caps: Caps | None = None) -> ClassConstants:
    """One sweep over the group per target class: for z fixed and every x,
    x^-1 * z lands in the class that pairs with x's class."""
    caps = caps or default_caps()
    group = classes.group
    elements = group.elements(caps)
    class_of = classes.class_of_element
    k = classes.count
    inverses = [g.inverse() for g in elements]
    table = []
    for t in range(k):
        z = classes.reps[t]
        plane = [[0] * k for _ in range(k)]
        for eid, xinv in enumerate(inverses):
            j = class_of[group.element_id(xinv * z)]
            plane[class_of[eid]][j] += 1
        table.append(tuple(tuple(row) for row in plane))
    return ClassConstants(tuple(table))


def group_exponent(classes: ConjugacyClasses) -> int:
    return math.lcm(*(rep.order() for rep in classes.reps))


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducible characters sorted by degree then value
    vector; columns follow the conjugacy class order.  values[i][j] is
    stored at conductor equal to the order of class j's representative.
    """

    classes: ConjugacyClasses
    degrees: tuple[int, ...]
    values: tuple[tuple[Cyc, ...], ...]
    modulus: int

    @property
    def group_order(self) -> int:
        return self.classes.group.order

    def row(self, i: int) -> tuple[Cyc, ...]:
        return self.values[i]

    def defect_zero_rows(self, q: int) -> tuple[int, ...]:
        """Rows whose degree soaks up the full q-part of the group order."""
        return tuple(i for i, d in enumerate(self.degrees)
                     if (self.group_order // d) % q != 0)

    def vanishing_column_set(self, i: int) -> frozenset[int]:
        return frozenset(j for j, v in enumerate(self.values[i]) if v.is_zero())


def character_table(classes: ConjugacyClasses, caps: Caps | None = None,
                    constants: ClassConstants | None = None) -> CharacterTable:
    caps = caps or default_caps()
    k = classes.count
    if k > caps.table_class_cap:
        raise CapExceeded(f"{k} classes exceeds table cap {caps.table_class_cap}")
    order = classes.group.order
    if k == 1:
        one = Cyc.integer(1)
        return CharacterTable(classes, (1,), ((one,),), 3)

    constants = constants or class_constants(classes, caps)
    exponent = group_exponent(classes)
    ell = dixon_prime(order, exponent)
    # multiplication-by-class-sum matrices: column c of M_i holds a[i][c][*]
    mats = []
    for i in range(k):
        mats.append([[constants.value(i, c, r) % ell for c in range(k)] for r in range(k)])

    rng = random.Random(_SPLIT_SEED)
    spaces = [[_unit_vector(k, j) for j in range(k)]]  # list of column bases

    def refine(space, mat):
        d = len(space)
        mb = [mat_vec(mat, col, ell) for col in space]
        coords_cols = solve_in_columns(space, mb, ell)
        rt = [[coords_cols[c][rw] for c in range(d)] for rw in range(d)]
        roots = poly_roots(charpoly(rt, ell), ell, rng)
        if len(roots) <= 1:
            return [space]
        out = []
        covered = 0
        for lam in roots:
            shifted = [[(rt[a][b] - (lam if a == b else 0)) % ell
                        for b in range(d)] for a in range(d)]
            sub = []
            for coords in nullspace(shifted, ell):
                vec = [0] * k
                for c, col in zip(coords, space):
                    if c:
                        for t in range(k):
                            vec[t] = (vec[t] + c * col[t]) % ell
                sub.append(vec)
            covered += len(sub)
            out.append(sub)
        if covered != d:
            raise ArithmeticError("class matrix restriction was not diagonalisable")
        return out

    for i in range(1, k):
        if all(len(s) == 1 for s in spaces):
            break
        nxt = []
        for space in spaces:
            if len(space) == 1:
                nxt.append(space)
            else:
                nxt.extend(refine(space, mats[i]))
        spaces = nxt

    attempts = 0
    while not all(len(s) == 1 for s in spaces):
        # commuting family should have split already; fall back to random
        # combinations before giving up
        attempts += 1
        if attempts > 8:
            raise ArithmeticError("eigenspace splitting failed to separate characters")
        coeffs = [rng.randrange(ell) for _ in range(k)]
        mix = [[sum(c * mats[i][r][cc] for i, c in enumerate(coeffs)) % ell
                for cc in range(k)] for r in range(k)]
        nxt = []
        for space in spaces:
            if len(space) == 1:
                nxt.append(space)
            else:
                nxt.extend(refine(space, mix))
        spaces = nxt

    sizes = classes.sizes
    inv_sizes = [pow(s, -1, ell) for s in sizes]
    inv_class = [classes.inverse_class(j) for j in range(k)]
    theta_rows = []
    degrees = []
    for space in spaces:
        v = space[0]
        pivot = next(t for t in range(k) if v[t])
        vinv = pow(v[pivot], -1, ell)
        omegas = []
        for i in range(k):
            mv = mat_vec(mats[i], v, ell)
            omegas.append(mv[pivot] * vinv % ell)
        norm = sum(omegas[j] * omegas[inv_class[j]] % ell * inv_sizes[j]
                   for j in range(k)) % ell
        d_sq = order * pow(norm, -1, ell) % ell
        d = sqrt_mod(d_sq, ell)
        if d > ell - d:
            d = ell - d
        if d == 0 or d * d > order:
            raise ArithmeticError("impossible character degree from normalisation")
        theta = [d * omegas[j] % ell * inv_sizes[j] % ell for j in range(k)]
        degrees.append(d)
        theta_rows.append(theta)

    if sum(d * d for d in degrees) != order:
        raise ArithmeticError("degree squares do not sum to the group order")

    root_e = pow(primitive_root(ell), (ell - 1) // exponent, ell)
    inv_m = {d: pow(d, -1, ell) for d in {rep.order() for rep in classes.reps}}
    rows = []
    for d, theta in zip(degrees, theta_rows):
        row = []
        for j in range(k):
            m = classes.reps[j].order()
            w = pow(root_e, exponent // m, ell)
            powers = [1] * m
            for t in range(1, m):
                powers[t] = powers[t - 1] * w % ell
            theta_pows = [theta[classes.power_class(j, s)] for s in range(m)]
            mults = []
            for t in range(m):
                acc = 0
                for s in range(m):
                    acc += theta_pows[s] * powers[(-t * s) % m]
                mult = acc % ell * inv_m[m] % ell
                if mult > d:
                    raise ArithmeticError("cyclotomic lift produced an invalid multiplicity")
                mults.append(mult)
            if sum(mults) != d:
                raise ArithmeticError("lifted multiplicities do not sum to the degree")
            row.append(Cyc.make(m, tuple(mults)))
        rows.append(row)

    order_key = sorted(range(k), key=lambda r: (degrees[r],
                                                tuple(c.key() for c in rows[r])))
    degrees = tuple(degrees[r] for r in order_key)
    values = tuple(tuple(rows[r]) for r in order_key)
    return CharacterTable(classes, degrees, values, ell)


def _unit_vector(k: int, j: int) -> list[int]:
    v = [0] * k
    v[j] = 1
    return v
