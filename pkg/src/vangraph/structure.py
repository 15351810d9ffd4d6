"""Conjugacy classes and the normal-subgroup machinery built on them.

Covers: class enumeration by conjugation orbits, centres, normal
closures, minimal normal subgroups, the Fitting subgroup, coset-action
quotients, normal p-complements, p-solvability, derived series, and
exhaustive setwise-stabilizer separations for small point sets.

Everything is deterministic: classes are discovered in element
enumeration order (identity first, so class 0 is always the identity
class), and searches iterate in fixed sorted orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .caps import Caps, CapExceeded, default_caps
from .numth import is_prime_power, prime_divisors
from .perms import Perm, PermGroup, commutator


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy classes of a fully enumerated permutation group.

    ``reps[k]`` is the first element of class k in enumeration order;
    class 0 is the identity class.  ``power_class(k, e)`` gives the class
    of rep_k ** e for any integer e.
    """

    group: PermGroup
    reps: tuple[Perm, ...]
    sizes: tuple[int, ...]
    class_of_element: tuple[int, ...]
    _power: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.reps)

    def class_of(self, g: Perm) -> int:
        return self.class_of_element[self.group.element_id(g)]

    def power_class(self, k: int, e: int) -> int:
        row = self._power[k]
        return row[e % len(row)]

    def inverse_class(self, k: int) -> int:
        return self.power_class(k, -1)


def conjugacy_classes(group: PermGroup, caps: Caps | None = None) -> ConjugacyClasses:
    caps = caps or default_caps()
    elements = group.elements(caps)
    n = len(elements)
    class_of = [-1] * n
    reps: list[Perm] = []
    sizes: list[int] = []
    gen_invs = [(g, g.inverse()) for g in group.generators]
    for eid in range(n):
        if class_of[eid] >= 0:
            continue
        k = len(reps)
        reps.append(elements[eid])
        class_of[eid] = k
        frontier = [eid]
        count = 1
        while frontier:
            x = elements[frontier.pop()]
            for g, ginv in gen_invs:
                y = ginv * x * g
                yid = group.element_id(y)
                if class_of[yid] < 0:
                    class_of[yid] = k
                    count += 1
                    frontier.append(yid)
        sizes.append(count)
    power = []
    for rep in reps:
        m = rep.order()
        acc = Perm.identity(group.degree)
        row = []
        for _ in range(m):
            row.append(class_of[group.element_id(acc)])
            acc = acc * rep
        power.append(tuple(row))
    return ConjugacyClasses(group, tuple(reps), tuple(sizes), tuple(class_of), tuple(power))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup handle inside a fixed ambient group: the subgroup as its
    own PermGroup plus the class indices that seeded it (when relevant)."""

    ambient: PermGroup
    group: PermGroup
    seed_classes: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return self.group.order

    def __contains__(self, g: Perm) -> bool:
        return g in self.group

    def is_trivial(self) -> bool:
        return self.group.order == 1

    def is_abelian(self) -> bool:
        gens = self.group.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return all(g in self.group for g in other.group.generators)

    def same_as(self, other: "Subgroup") -> bool:
        return self.order == other.order and self.contains_subgroup(other)


def normal_closure(group: PermGroup, seeds, seed_classes: tuple[int, ...] = ()) -> Subgroup:
    """Smallest normal subgroup of ``group`` containing the seeds:
    repeatedly conjugate current generators by the group generators and
    regenerate until closed."""
    gens = [s for s in seeds if not s.is_identity()]
    while True:
        h = PermGroup(gens, degree=group.degree)
        fresh = []
        queued = {g.images for g in gens}
        for x in gens:
            for g in group.generators:
                c = x.conjugate_by(g)
                if c.images not in queued and c not in h:
                    queued.add(c.images)
                    fresh.append(c)
        if not fresh:
            return Subgroup(group, h, seed_classes)
        gens.extend(fresh)


def centralizer(group: PermGroup, targets, caps: Caps | None = None) -> PermGroup:
    """Subgroup of elements commuting with every target (by filtration,
    so the group must be enumerable)."""
    members = [g for g in group.elements(caps)
               if all(g * t == t * g for t in targets)]
    return PermGroup(members, degree=group.degree)


@dataclass(frozen=True)
class Quotient:
    """Coset action of a group on a normal subgroup's right cosets."""

    group: PermGroup          # the quotient as a permutation group on cosets
    coset_reps: tuple[Perm, ...]

    def project(self, g: Perm) -> Perm:
        images = []
        for rep in self.coset_reps:
            images.append(self._coset_index[self._canon(rep * g)])
        return Perm(tuple(images))

    # filled by quotient_group
    _canon: object = None
    _coset_index: object = None


def quotient_group(group: PermGroup, normal: Subgroup, caps: Caps | None = None) -> Quotient:
    """Permutation action of group on the right cosets of a normal
    subgroup.  Cosets are canonicalised by their minimal element, so the
    construction is deterministic.  Raises CapExceeded when the index
    exceeds the quotient degree cap."""
    caps = caps or default_caps()
    for h in normal.group.generators:
        for g in group.generators:
            if h.conjugate_by(g) not in normal.group:
                raise ValueError("subgroup is not normal")
    index = group.order // normal.order
    if index > caps.quotient_degree_cap:
        raise CapExceeded(f"index {index} exceeds quotient cap")
    n_elements = normal.group.elements(caps)

    def canon(x: Perm) -> tuple[int, ...]:
        return min((n * x).images for n in n_elements)

    reps: list[Perm] = [Perm.identity(group.degree)]
    coset_index: dict[tuple[int, ...], int] = {canon(reps[0]): 0}
    head = 0
    while head < len(reps):
        r = reps[head]
        head += 1
        for g in group.generators:
            img = r * g
            key = canon(img)
            if key not in coset_index:
                coset_index[key] = len(reps)
                reps.append(img)
    if len(reps) != index:
        raise ArithmeticError("coset walk did not close correctly")

    def project(g: Perm) -> Perm:
        return Perm(tuple(coset_index[canon(r * g)] for r in reps))

    qgens = [project(g) for g in group.generators]
    q = Quotient(PermGroup(qgens, degree=index), tuple(reps))
    object.__setattr__(q, "_canon", canon)
    object.__setattr__(q, "_coset_index", coset_index)
    return q


class GroupStructure:
    """Lazily computed structural invariants of one group.

    Holds a per-group cache of class normal closures, since the minimal
    normal subgroup sweep, the Fitting subgroup and the p-nilpotency
    test all reuse them.
    """

    def __init__(self, classes: ConjugacyClasses, caps: Caps | None = None):
        self.classes = classes
        self.group = classes.group
        self.caps = caps or default_caps()
        self._closures: dict[int, Subgroup] = {}

    def class_closure(self, k: int) -> Subgroup:
        if k not in self._closures:
            self._closures[k] = normal_closure(self.group, [self.classes.reps[k]], (k,))
        return self._closures[k]

    @cached_property
    def center(self) -> Subgroup:
        reps = [self.classes.reps[k] for k, s in enumerate(self.classes.sizes) if s == 1]
        return Subgroup(self.group, PermGroup(reps, degree=self.group.degree))

    @cached_property
    def minimal_normal_subgroups(self) -> tuple[Subgroup, ...]:
        """Inclusion-minimal among the normal closures of single class
        representatives; every minimal normal subgroup arises this way."""
        distinct: list[Subgroup] = []
        for k in range(1, self.classes.count):
            n = self.class_closure(k)
            if not any(n.same_as(d) for d in distinct):
                distinct.append(n)
        minimal = [n for n in distinct
                   if not any(d.order < n.order and n.contains_subgroup(d) for d in distinct)]
        minimal.sort(key=lambda s: (s.order, s.seed_classes))
        return tuple(minimal)

    @cached_property
    def fitting_subgroup(self) -> Subgroup:
        """Join over primes p of O_p: each O_p is generated by the class
        closures that turn out to be normal p-subgroups."""
        gens: list[Perm] = []
        for p in prime_divisors(self.group.order):
            for k in range(1, self.classes.count):
                if not is_prime_power(self.classes.reps[k].order(), p):
                    continue
                closure = self.class_closure(k)
                if is_prime_power(closure.order, p):
                    gens.extend(closure.group.generators)
        return Subgroup(self.group, PermGroup(gens, degree=self.group.degree))

    @cached_property
    def derived_series(self) -> tuple[Subgroup, ...]:
        """G >= G' >= G'' >= ...; stops at 1 or at the first repeat (a
        perfect term), which is included so the stall is visible."""
        whole = Subgroup(self.group, self.group)
        series = [whole]
        while True:
            current = series[-1].group
            comms = [commutator(a, b)
                     for i, a in enumerate(current.generators)
                     for b in current.generators[i + 1:]]
            nxt = normal_closure(current, comms)
            series.append(Subgroup(self.group, nxt.group))
            if nxt.order == 1 or nxt.order == current.order:
                return tuple(series)

    @property
    def derived_subgroup(self) -> Subgroup:
        return self.derived_series[1] if len(self.derived_series) > 1 else self.derived_series[0]

    def is_solvable(self) -> bool:
        return self.derived_series[-1].order == 1

    def normal_p_complement(self, p: int) -> Subgroup | None:
        """The normal p-complement when the group is p-nilpotent, else
        None.  The subgroup generated by all p'-elements is normal and
        equals the complement exactly when p does not divide its order."""
        seeds = [self.classes.reps[k] for k in range(self.classes.count)
                 if self.classes.reps[k].order() % p != 0]
        k_sub = normal_closure(self.group, seeds)
        return k_sub if k_sub.order % p != 0 else None

    def has_abelian_sylow(self, p: int) -> bool | None:
        """For p-nilpotent groups: Sylow p is isomorphic to G/K, which is
        abelian iff the derived subgroup lands in the complement K.
        Returns None when the group is not p-nilpotent."""
        comp = self.normal_p_complement(p)
        if comp is None:
            return None
        return all(g in comp.group for g in self.derived_subgroup.group.generators)

    def p_solvable(self, p: int) -> bool:
        return is_p_solvable(self.group, p, self.caps, classes=self.classes)


def is_p_solvable(group: PermGroup, p: int, caps: Caps | None = None,
                  classes: ConjugacyClasses | None = None) -> bool:
    """Chief-series recursion: a nonabelian minimal normal subgroup of
    order divisible by p kills p-solvability; otherwise the question
    passes to the quotient.  Raises CapExceeded (indeterminate, distinct
    from False) if a quotient is out of reach."""
    caps = caps or default_caps()
    if group.order == 1 or group.order % p != 0:
        return True
    classes = classes or conjugacy_classes(group, caps)
    structure = GroupStructure(classes, caps)
    n = structure.minimal_normal_subgroups[0]
    if not n.is_abelian() and n.order % p == 0:
        return False
    q = quotient_group(group, n, caps)
    return is_p_solvable(q.group, p, caps)


@dataclass(frozen=True)
class StructureReport:
    """JSON-ready structural summary."""

    order: int
    degree: int
    primes: tuple[int, ...]
    center_order: int
    fitting_order: int
    minimal_normals: tuple[tuple[int, bool], ...]   # (order, is_abelian)
    derived_series_orders: tuple[int, ...]
    is_solvable: bool
    p_nilpotent: dict
    p_solvable: dict


def structure_report(structure: GroupStructure) -> StructureReport:
    group = structure.group
    primes = prime_divisors(group.order)
    p_nil = {}
    p_solv = {}
    for p in primes:
        p_nil[p] = structure.normal_p_complement(p) is not None
        try:
            p_solv[p] = structure.p_solvable(p)
        except CapExceeded:
            p_solv[p] = None
    return StructureReport(
        order=group.order,
        degree=group.degree,
        primes=primes,
        center_order=structure.center.order,
        fitting_order=structure.fitting_subgroup.order,
        minimal_normals=tuple((n.order, n.is_abelian()) for n in structure.minimal_normal_subgroups),
        derived_series_orders=tuple(s.order for s in structure.derived_series),
        is_solvable=structure.is_solvable(),
        p_nilpotent=p_nil,
        p_solvable=p_solv,
    )


def separating_subsets(group: PermGroup, p: int, q: int,
                       caps: Caps | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First pair of disjoint nonempty point subsets (by total size, then
    size of the first, then lexicographic order) whose joint setwise
    stabilizer has index divisible by every one of p, q that divides the
    group order.  Exhaustive, so the degree is capped.

    Raises SeparationAnomaly if the search exhausts without a witness:
    that contradicts the expected behaviour and must never be silent.
    """
    caps = caps or default_caps()
    n = group.degree
    if n > caps.sepset_points_cap:
        raise CapExceeded(f"degree {n} exceeds separating-subset cap")
    if n < 2:
        raise ValueError("need at least two points")
    targets = [r for r in (p, q) if group.order % r == 0]
    elements = group.elements(caps)
    images = [g.images for g in elements]
    points = range(n)
    order = group.order
    setwise_cache: dict[tuple[int, ...], list] = {}

    def setwise(sub: tuple[int, ...]) -> list:
        if sub not in setwise_cache:
            s = set(sub)
            setwise_cache[sub] = [im for im in images if {im[x] for x in sub} == s]
        return setwise_cache[sub]

    for total in range(2, 2 * n + 1):
        for s1 in range(max(1, total - n), total):
            s2 = total - s1
            if s1 > n or s2 < 1:
                continue
            for g1 in combinations(points, s1):
                set1 = set(g1)
                stab1 = setwise(g1)
                rest = [x for x in points if x not in set1]
                if len(rest) < s2:
                    continue
                for g2 in combinations(rest, s2):
                    set2 = set(g2)
                    joint = sum(1 for im in stab1 if {im[x] for x in g2} == set2)
                    index = order // joint
                    if all(index % r == 0 for r in targets):
                        return g1, g2
    raise SeparationAnomaly(group, p, q)


class SeparationAnomaly(Exception):
    """Exhaustive separating-subset search found no witness; this is
    flagged loudly because it would contradict the point-stabilizer
    separation property."""

    def __init__(self, group, p, q):
        super().__init__(f"no separating subsets for primes {p},{q} in {group!r}")
        self.group = group
        self.p = p
        self.q = q
