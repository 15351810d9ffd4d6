"""Vanishing conjugacy classes and class-size prime graphs.

A class is vanishing when some irreducible character is exactly zero on
it (an exact cyclotomic test, never a numeric threshold).  From the
multiset of class sizes we build two graphs on primes: vertices are the
primes dividing some size in the chosen multiset, and an edge joins p
and q when a single size is divisible by pq.  The plain graph uses all
class sizes, the vanishing graph only the vanishing ones.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dixon import CharacterTable
from .numth import prime_divisors


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def has_edge(self, p: int, q: int) -> bool:
        a, b = min(p, q), max(p, q)
        return (a, b) in self.edges


def prime_graph(sizes) -> PrimeGraph:
    """Graph on primes dividing the given class sizes; {p,q} is an edge
    iff pq divides one single size."""
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for s in sizes:
        ps = prime_divisors(s)
        vertices.update(ps)
        for i, p in enumerate(ps):
            for q in ps[i + 1:]:
                edges.add((p, q))
    return PrimeGraph(tuple(sorted(vertices)), tuple(sorted(edges)))


def is_subgraph(small: PrimeGraph, big: PrimeGraph) -> bool:
    return (set(small.vertices) <= set(big.vertices)
            and set(small.edges) <= set(big.edges))


def is_complete(g: PrimeGraph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def is_complete_vertex(g: PrimeGraph, p: int) -> bool:
    """Whether p is adjacent to every other vertex.  Asking about a
    non-vertex is a caller error, distinct from returning False."""
    if p not in g.vertices:
        raise ValueError(f"{p} is not a vertex of the graph")
    return all(g.has_edge(p, q) for q in g.vertices if q != p)


def vanishing_class_indices(table: CharacterTable) -> tuple[int, ...]:
    """Classes on which some irreducible character vanishes.  The
    identity class never qualifies: degrees are positive integers."""
    k = table.classes.count
    hit = set()
    for row in table.values:
        for j in range(k):
            if j not in hit and row[j].is_zero():
                hit.add(j)
    return tuple(sorted(hit))


@dataclass(frozen=True)
class VanishingReport:
    vanishing_classes: tuple[int, ...]
    all_sizes: tuple[int, ...]           # every class size, class order
    vanishing_sizes: tuple[int, ...]     # sizes of the vanishing classes
    size_primes: tuple[int, ...]         # primes dividing some class size
    vanishing_size_primes: tuple[int, ...]
    graph: PrimeGraph
    vanishing_graph: PrimeGraph


def vanishing_report(table: CharacterTable) -> VanishingReport:
    sizes = table.classes.sizes
    vc = vanishing_class_indices(table)
    vsizes = tuple(sizes[j] for j in vc)
    g_all = prime_graph(sizes)
    g_van = prime_graph(vsizes)
    return VanishingReport(
        vanishing_classes=vc,
        all_sizes=sizes,
        vanishing_sizes=vsizes,
        size_primes=g_all.vertices,
        vanishing_size_primes=g_van.vertices,
        graph=g_all,
        vanishing_graph=g_van,
    )


def dot_text(g: PrimeGraph, bold_edges=()) -> str:
    """Byte-stable DOT rendering: vertices ascending, edges sorted; the
    empty graph collapses to a bare block."""
    if not g.vertices:
        return "graph G {}\n"
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f"  {v};")
    bold = {tuple(sorted(e)) for e in bold_edges}
    for p, q in g.edges:
        suffix = " [style=bold]" if (p, q) in bold else ""
        lines.append(f"  {p} -- {q}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
