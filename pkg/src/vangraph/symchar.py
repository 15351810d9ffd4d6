"""Symmetric group characters from partition combinatorics.

Character values come from the Murnaghan-Nakayama rule, run on the
beta-number (abacus) encoding: removing a rim hook of length r from a
partition is moving one bead b to the empty slot b - r, and the sign of
the move is (-1)^(number of beads passed).  Degrees come from the hook
length formula.  Everything is exact integer arithmetic.

Partitions are plain tuples of weakly decreasing positive integers;
cycle types are the same shape (fixed points written as parts of 1).
"""
from __future__ import annotations

from functools import cache
from math import factorial, prod
from typing import Iterator


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    if largest is None or largest > n:
        largest = n
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(p) for p in lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def conjugate(lam) -> tuple[int, ...]:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_self_associate(lam) -> bool:
    lam = check_partition(lam)
    return lam == conjugate(lam)


def hook_lengths(lam) -> tuple[tuple[int, ...], ...]:
    lam = check_partition(lam)
    conj = conjugate(lam)
    # cell (i,j): arm lam[i]-j, leg conj[j-1]-i-1, plus the cell itself
    return tuple(
        tuple(lam[i] - j + conj[j - 1] - i for j in range(1, lam[i] + 1))
        for i in range(len(lam)))


def degree(lam) -> int:
    """Hook length formula; exact division.

    >>> degree((2, 1))
    2
    """
    lam = check_partition(lam)
    n = sum(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    d, r = divmod(factorial(n), hooks)
    if r:
        raise ArithmeticError("hook product does not divide n!")
    return d


def cycle_type_sign(mu) -> int:
    """Sign of any permutation with this cycle type."""
    mu = check_partition(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def centralizer_order(mu) -> int:
    """|C_{S_n}(x)| for x of type mu: prod over lengths l of l^m * m!."""
    mu = check_partition(mu)
    out = 1
    for length in set(mu):
        m = mu.count(length)
        out *= length ** m * factorial(m)
    return out


# The memo table below is shared process-wide; it is only safe without
# locking because evaluation is confined to one thread per process (the
# corpus runner parallelizes with processes, never threads).
_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def mn_value(lam, mu) -> int:
    """Character value chi_lambda on cycle type mu, |lam| = |mu|.

    >>> mn_value((2, 1), (3,))
    -1
    >>> mn_value((5, 2, 1), (2, 2, 2, 2))
    0
    """
    lam = check_partition(lam)
    mu = tuple(sorted(check_partition(mu), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    got = _memo.get(key)
    if got is not None:
        return got
    r, rest = mu[0], mu[1:]   # largest cycle first
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    slots = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in slots:
            continue
        passed = sum(1 for c in beta if nb < c < b)   # leg length
        moved = sorted((slots - {b}) | {nb}, reverse=True)
        sub = tuple(m - (ell - 1 - i) for i, m in enumerate(moved))
        sub = tuple(p for p in sub if p > 0)
        total += (-1 if passed % 2 else 1) * _mn(sub, rest)
    _memo[key] = total
    return total


def witness_partition(n: int, t: int,
                      has_fixed_point: bool) -> tuple[int, ...]:
    """A non-self-associate partition of n whose character vanishes on
    permutations of type (t,...,t) (no fixed point) or (t,...,t,1).

    The witness is (n-1,1) when a fixed point is present; otherwise
    (n-t-1,t,1) when the type has at least three cycles, and (n-3,2,1)
    when it has one or two.  Both claimed properties are re-verified on
    every call, so a wrong witness can never escape silently.
    """
    if n < 7 or t < 2:
        raise ValueError("need n >= 7 and t >= 2")
    if has_fixed_point:
        if (n - 1) % t:
            raise ValueError(f"type (t,..,t,1) needs t | n-1: t={t}, n={n}")
        mu = (t,) * ((n - 1) // t) + (1,)
        wit = (n - 1, 1)
    else:
        if n % t:
            raise ValueError(f"type (t,..,t) needs t | n: t={t}, n={n}")
        mu = (t,) * (n // t)
        wit = (n - t - 1, t, 1) if n // t >= 3 else (n - 3, 2, 1)
    if mn_value(wit, mu) != 0:
        raise AssertionError(f"witness {wit} does not vanish on {mu}")
    if is_self_associate(wit):
        raise AssertionError(f"witness {wit} is self-associate")
    return wit


def witness_cycle_type(n: int, t: int,
                       has_fixed_point: bool) -> tuple[int, ...]:
    if has_fixed_point:
        if (n - 1) % t:
            raise ValueError("t must divide n-1")
        return (t,) * ((n - 1) // t) + (1,)
    if n % t:
        raise ValueError("t must divide n")
    return (t,) * (n // t)


@cache
def sn_table(n: int) -> tuple[tuple[tuple[int, ...], ...],
                              tuple[tuple[int, ...], ...],
                              tuple[tuple[int, ...], ...]]:
    """Full S_n character table by the rim-hook recursion.

    Returns (row labels, column labels, values): rows and columns are
    both indexed by partitions of n in reverse lexicographic order,
    columns read as cycle types.
    """
    labels = tuple(partitions(n))
    values = tuple(tuple(mn_value(lam, mu) for mu in labels)
                   for lam in labels)
    return labels, labels, values
