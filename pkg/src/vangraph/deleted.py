"""Zero-sum vectors over F_q under scalars times alternating group.

The module D is the set of length-n vectors over F_q with coordinate
sum zero, acted on by G = F_q^x X A_n: the scalar multiplies, the
permutation shuffles coordinates, (v.(l,x))_i = l * v[x^-1(i)].  The
characteristic must exceed n so D is irreducible and the action story
is clean.

The orbit census encodes each vector as a dense integer (mixed radix
over the first n-1 coordinates; the last one is forced by the zero-sum
constraint) and sweeps the whole space with numpy index maps, one per
generator.  Everything else is exhaustive and checked.
"""
from __future__ import annotations

from itertools import permutations
from math import factorial

import numpy as np

from .caps import CapExceeded, Caps, default_caps
from .numth import is_prime, primitive_root
from .perms import Perm, PermGroup, cycle_perm


def _check_field(n: int, q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if q <= n:
        raise ValueError(f"need q > n (got q = {q}, n = {n})")


def check_vector(v, n: int, q: int) -> tuple[int, ...]:
    v = tuple(int(c) % q for c in v)
    if len(v) != n:
        raise ValueError(f"vector has length {len(v)}, expected {n}")
    if sum(v) % q:
        raise ValueError("coordinates must sum to zero")
    return v


def group_order(n: int, q: int) -> int:
    """Order of F_q^x X A_n."""
    return (q - 1) * factorial(n) // 2


def act(v, scalar: int, x: Perm, q: int) -> tuple[int, ...]:
    """Apply (scalar, x): coordinate i of the result is scalar times
    the coordinate of v sitting at the preimage of i."""
    n = len(v)
    _check_field(n, q)
    if x.degree != n:
        raise ValueError("permutation degree does not match vector length")
    scalar %= q
    if scalar == 0:
        raise ValueError("scalar must be a unit")
    inv = x.inverse().images
    return tuple(scalar * v[inv[i]] % q for i in range(n))


def distinct_coordinate_vector(n: int, q: int) -> tuple[int, ...]:
    """(1, 2, ..., n-1, b) with b forced by the zero-sum constraint;
    the first n-1 coordinates are pairwise distinct units.

    >>> distinct_coordinate_vector(7, 11)
    (1, 2, 3, 4, 5, 6, 1)
    >>> distinct_coordinate_vector(3, 5)
    (1, 2, 2)
    """
    _check_field(n, q)
    if q - 1 < n - 1:
        raise ValueError("field too small for distinct nonzero entries")
    beta = (-(n - 1) * n // 2) % q
    return tuple(range(1, n)) + (beta,)


def even_permutations(n: int) -> list[Perm]:
    """All of A_n, sorted by image tuple."""
    out = []
    for images in permutations(range(n)):
        p = Perm(images)
        if p.sign() == 1:
            out.append(p)
    return out


def stabilizer(v, n: int, q: int,
               caps: Caps | None = None) -> list[tuple[int, Perm]]:
    """Every (scalar, even permutation) pair fixing v, by brute force."""
    caps = caps or default_caps()
    _check_field(n, q)
    v = check_vector(v, n, q)
    pairs = group_order(n, q)
    if pairs > caps.stabilizer_pairs_cap:
        raise CapExceeded(f"{pairs} pairs exceeds the enumeration bound")
    hits = []
    for x in even_permutations(n):
        inv = x.inverse().images
        shuffled = tuple(v[inv[i]] for i in range(n))
        for scalar in range(1, q):
            if all(scalar * c % q == w for c, w in zip(shuffled, v)):
                hits.append((scalar, x))
    hits.sort(key=lambda p: (p[0], p[1].images))
    return hits


def module_generators(n: int, q: int) -> list[tuple[int, Perm]]:
    """Generators of F_q^x X A_n: one generating scalar, and the usual
    two generators of A_n.  The permutation part is order-checked."""
    _check_field(n, q)
    if n < 3:
        raise ValueError("need n >= 3")
    root = primitive_root(q)
    three = cycle_perm((0, 1, 2), n)
    big = cycle_perm(tuple(range(n)) if n % 2 else tuple(range(1, n)), n)
    if PermGroup([three, big]).order != factorial(n) // 2:
        raise AssertionError("alternating generators are wrong")
    return [(root, Perm.identity(n)), (1, three), (1, big)]


def _index_maps(n: int, q: int,
                gens: list[tuple[int, Perm]]) -> list[np.ndarray]:
    """One array per generator g mapping vector index to the index of
    the image vector.  Index encoding: little-endian base q over the
    first n-1 coordinates; the last coordinate is determined."""
    size = q ** (n - 1)
    idx = np.arange(size, dtype=np.int64)
    coords = []
    total = np.zeros(size, dtype=np.int16)
    for j in range(n - 1):
        d = ((idx // q ** j) % q).astype(np.int16)
        coords.append(d)
        total += d
    coords.append((-total) % q)
    maps = []
    for scalar, x in gens:
        inv = x.inverse().images
        out = np.zeros(size, dtype=np.int64)
        for j in range(n - 1):
            out += (scalar * coords[inv[j]] % q).astype(np.int64) * q ** j
        maps.append(out)
    return maps


def encode(v, n: int, q: int) -> int:
    return sum(int(v[j]) * q ** j for j in range(n - 1))


def decode(index: int, n: int, q: int) -> tuple[int, ...]:
    coords = []
    for _ in range(n - 1):
        index, c = divmod(index, q)
        coords.append(c)
    coords.append((-sum(coords)) % q)
    return tuple(coords)


def orbit_census(n: int, q: int,
                 caps: Caps | None = None
                 ) -> tuple[list[tuple[int, int]], bool]:
    """Partition all q^(n-1) vectors into orbits.

    Returns (sorted list of (orbit size, number of orbits of that
    size), whether some orbit is regular, i.e. as large as the group).
    """
    caps = caps or default_caps()
    _check_field(n, q)
    size = q ** (n - 1)
    if size > caps.census_vectors_cap:
        raise CapExceeded(f"{size} vectors exceeds the census bound")
    maps = _index_maps(n, q, module_generators(n, q))
    visited = np.zeros(size, dtype=bool)
    sizes: dict[int, int] = {}
    start = 0
    while start < size:
        if visited[start]:
            start += 1
            continue
        visited[start] = True
        frontier = np.array([start], dtype=np.int64)
        orbit = 1
        while frontier.size:
            images = np.concatenate([m[frontier] for m in maps])
            images = np.unique(images)
            fresh = images[~visited[images]]
            visited[fresh] = True
            orbit += fresh.size
            frontier = fresh
        sizes[orbit] = sizes.get(orbit, 0) + 1
    total = group_order(n, q)
    census = sorted(sizes.items())
    for orbit, _ in census:
        if total % orbit:
            raise AssertionError(f"orbit size {orbit} does not divide {total}")
    return census, any(orbit == total for orbit, _ in census)


def orbit_size(v, n: int, q: int) -> int:
    """Size of one orbit by plain breadth-first closure."""
    _check_field(n, q)
    v = check_vector(v, n, q)
    gens = module_generators(n, q)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for scalar, x in gens:
                u = act(w, scalar, x, q)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return len(seen)


def census_csv(census: list[tuple[int, int]]) -> str:
    lines = ["orbit_size,count"]
    lines += [f"{size},{count}" for size, count in census]
    return "\n".join(lines) + "\n"
