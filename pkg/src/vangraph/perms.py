"""Permutations of {1..n} and permutation groups with a deterministic
base-and-strong-generating-set (Schreier-Sims).

Composition reads left to right: ``(a * b)(x) == b(a(x))``, i.e. apply
``a`` first.  The cycle parser multiplies cycles in reading order under
the same convention.  Points are 0-based in memory; every piece of text
I/O (cycle strings, generator files) is 1-based.

The Schreier-Sims construction is fully deterministic: no randomized
sifting, base points are chosen as the smallest moved points, and orbits
are explored breadth-first in fixed generator order.  Groups built from
the same generator sequence therefore have identical chains, element
orders and enumeration orders from run to run.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

from .caps import Caps, CapExceeded, default_caps


@dataclass(frozen=True, slots=True)
class Perm:
    """A permutation stored as its tuple of images on 0-based points."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images!r}")

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Left-to-right composition: apply self, then other."""
        if len(other.images) != len(self.images):
            raise ValueError("degree mismatch")
        o = other.images
        return Perm(tuple(o[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def __pow__(self, e: int) -> "Perm":
        if e < 0:
            return self.inverse() ** (-e)
        out = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def conjugate_by(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its smallest point,
        listed by smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            seen[start] = True
            cyc = [start]
            p = self.images[start]
            while p != start:
                seen[p] = True
                cyc.append(p)
                p = self.images[p]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def sign(self) -> int:
        odd_cycles = sum(1 for c in self.cycles() if len(c) % 2 == 0)
        return -1 if odd_cycles % 2 else 1

    def min_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def cycle_string(self) -> str:
        """1-based cycle notation; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def embed(self, degree: int, offset: int = 0) -> "Perm":
        """The same permutation acting on points offset..offset+n-1 inside
        a larger point set."""
        if offset + self.degree > degree:
            raise ValueError("embedding does not fit")
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[offset + i] = offset + j
        return Perm(tuple(images))

    def __repr__(self) -> str:
        return f"Perm[{self.cycle_string()}]"


def commutator(a: Perm, b: Perm) -> Perm:
    return a.inverse() * b.inverse() * a * b


def cycle_perm(points: list[int], degree: int) -> Perm:
    """The cycle (points[0] points[1] ...) on 0-based points."""
    images = list(range(degree))
    for a, b in zip(points, points[1:]):
        images[a] = b
    if points:
        images[points[-1]] = points[0]
    return Perm(tuple(images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)``.

    Cycles compose left to right.  Empty or whitespace-only text is the
    identity.  Raises ValueError on out-of-range points, malformed
    parentheses, or a repeated point within one cycle.

    >>> parse_cycles("(1 2)(1 3)", 3).cycle_string()
    '(1 2 3)'
    """
    body = text.strip()
    if not body:
        return Perm.identity(degree)
    leftover = _CYCLE_RE.sub("", body).strip()
    if leftover:
        raise ValueError(f"malformed cycle notation: {text!r}")
    perm = Perm.identity(degree)
    for m in _CYCLE_RE.finditer(body):
        toks = m.group(1).replace(",", " ").split()
        pts = []
        for tok in toks:
            try:
                p = int(tok)
            except ValueError:
                raise ValueError(f"bad point {tok!r} in {text!r}") from None
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            pts.append(p - 1)
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: ({m.group(1)})")
        perm = perm * cycle_perm(pts, degree)
    return perm


@dataclass(frozen=True)
class _Level:
    point: int
    transversal: dict[int, Perm]


class PermGroup:
    """Group generated by permutations of one common degree.

    Treat instances as immutable; the strong generating set and the
    element enumeration are computed lazily and cached.
    """

    def __init__(self, generators=(), degree: int | None = None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("need a degree when there are no generators")
            degree = generators[0].degree
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Perm):
                raise TypeError("generators must be Perm values")
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)

    # -- Schreier-Sims ---------------------------------------------------

    @cached_property
    def _chain(self) -> tuple[_Level, ...]:
        degree = self.degree
        base: list[int] = []
        introduced: list[list[Perm]] = []

        def place(g: Perm):
            for i, b in enumerate(base):
                if g(b) != b:
                    introduced[i].append(g)
                    return
            m = g.min_moved()
            base.append(m)
            introduced.append([g])

        def level_gens(i: int) -> list[Perm]:
            return [g for lvl in introduced[i:] for g in lvl]

        def orbit_transversal(i: int) -> dict[int, Perm]:
            b = base[i]
            gens_i = level_gens(i)
            trans = {b: Perm.identity(degree)}
            queue = [b]
            while queue:
                p = queue.pop(0)
                up = trans[p]
                for g in gens_i:
                    q = g(p)
                    if q not in trans:
                        trans[q] = up * g
                        queue.append(q)
            return trans

        for g in self.generators:
            place(g)

        transversals: list[dict[int, Perm] | None] = [None] * len(base)

        def sift(g: Perm, start: int) -> tuple[Perm, int]:
            for i in range(start, len(base)):
                p = g(base[i])
                t = transversals[i]
                if p not in t:
                    return g, i
                g = g * t[p].inverse()
            return g, len(base)

        i = len(base) - 1
        while i >= 0:
            transversals[i] = orbit_transversal(i)
            gens_i = level_gens(i)
            trans = transversals[i]
            complete = True
            for p in sorted(trans):
                up = trans[p]
                for g in gens_i:
                    schreier = up * g * trans[g(p)].inverse()
                    if schreier.is_identity():
                        continue
                    residue, j = sift(schreier, i + 1)
                    if residue.is_identity():
                        continue
                    if j == len(base):
                        base.append(residue.min_moved())
                        introduced.append([])
                        transversals.append(None)
                    introduced[j].append(residue)
                    i = j
                    complete = False
                    break
                if not complete:
                    break
            if complete:
                i -= 1

        # rebuild final transversals top-down so orders are consistent
        final = []
        for i in range(len(base)):
            final.append(_Level(base[i], orbit_transversal(i)))
        return tuple(final)

    @cached_property
    def order(self) -> int:
        n = 1
        for lvl in self._chain:
            n *= len(lvl.transversal)
        return n

    def _sift_chain(self, g: Perm) -> Perm:
        for lvl in self._chain:
            p = g(lvl.point)
            if p not in lvl.transversal:
                return g
            g = g * lvl.transversal[p].inverse()
        return g

    def __contains__(self, g: Perm) -> bool:
        if not isinstance(g, Perm):
            return False
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        return self._sift_chain(g).is_identity()

    def is_trivial(self) -> bool:
        return not self.generators

    # -- orbits ----------------------------------------------------------

    def orbit(self, point: int) -> frozenset[int]:
        if not 0 <= point < self.degree:
            raise ValueError("point out of range")
        seen = {point}
        queue = [point]
        while queue:
            p = queue.pop(0)
            for g in self.generators:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= o
        return out

    # -- enumeration -----------------------------------------------------

    @cached_property
    def _enumeration(self) -> tuple[tuple[Perm, ...], dict[tuple[int, ...], int]]:
        elements = [Perm.identity(self.degree)]
        index = {elements[0].images: 0}
        head = 0
        while head < len(elements):
            e = elements[head]
            head += 1
            for g in self.generators:
                f = e * g
                if f.images not in index:
                    index[f.images] = len(elements)
                    elements.append(f)
        return tuple(elements), index

    def elements(self, caps: Caps | None = None) -> tuple[Perm, ...]:
        """All elements in deterministic breadth-first order (identity
        first).  Refuses via CapExceeded when the order exceeds the cap."""
        caps = caps or default_caps()
        if self.order > caps.enum_cap:
            raise CapExceeded(f"order {self.order} exceeds enumeration cap {caps.enum_cap}")
        return self._enumeration[0]

    def element_id(self, g: Perm, caps: Caps | None = None) -> int:
        self.elements(caps)
        try:
            return self._enumeration[1][g.images]
        except KeyError:
            raise ValueError("element not in group") from None

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"


def read_generator_file(text: str) -> PermGroup:
    """Parse the generator file format: first line ``degree: n``, then one
    cycle-notation permutation per line.  Blank lines are skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty generator file")
    m = re.fullmatch(r"degree\s*:\s*(\d+)", lines[0])
    if not m:
        raise ValueError(f"first line must be 'degree: n', got {lines[0]!r}")
    degree = int(m.group(1))
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gens = [parse_cycles(ln, degree) for ln in lines[1:]]
    return PermGroup(gens, degree=degree)
