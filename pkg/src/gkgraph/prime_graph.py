"""Gruenberg-Kegel (prime) graphs and the decision procedures on them.

A note on terminology: a *3-coclique* here is three pairwise NON-adjacent
primes.  Russian-language sources on prime graphs often write "3-клика" for
this object; the independent-set meaning is the one used throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .numtheory import is_prime, prime_divisors, primes_up_to

MAX_REALIZABILITY_VERTICES = 64


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        edges = frozenset(_pair(*e) for e in self.edges)
        vset = set(verts)
        for v in verts:
            if not is_prime(v):
                raise ValueError(f"vertex {v} is not prime")
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a}")
            if a not in vset or b not in vset:
                raise ValueError(f"edge {a}-{b} has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()) -> "PrimeGraph":
        return cls(tuple(vertices), frozenset(edges))

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> "PrimeGraph":
        vs = sorted(set(vertices))
        return cls(tuple(vs), frozenset(combinations(vs, 2)))

    @classmethod
    def two_cliques(cls, a: Iterable[int], b: Iterable[int], cross: Iterable[tuple[int, int]] = ()) -> "PrimeGraph":
        a, b = sorted(set(a)), sorted(set(b))
        edges = set(combinations(a, 2)) | set(combinations(b, 2)) | {_pair(*e) for e in cross}
        return cls(tuple(a + b), frozenset(edges))

    def adjacent(self, a: int, b: int) -> bool:
        return _pair(a, b) in self.edges

    def neighbours(self, v: int) -> list[int]:
        return [u for u in self.vertices if u != v and self.adjacent(u, v)]

    def complement(self) -> "PrimeGraph":
        all_pairs = set(combinations(self.vertices, 2))
        return PrimeGraph(self.vertices, frozenset(all_pairs - self.edges))

    def is_clique(self, vs: Iterable[int]) -> bool:
        return all(self.adjacent(a, b) for a, b in combinations(sorted(vs), 2))

    def induced(self, vs: Iterable[int]) -> "PrimeGraph":
        keep = set(vs)
        return PrimeGraph(tuple(keep), frozenset(e for e in self.edges if set(e) <= keep))

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class OrderSet:
    """A spectrum: a divisor-closed set of element orders."""

    orders: frozenset[int]

    def __post_init__(self):
        s = frozenset(self.orders)
        if 1 not in s:
            raise ValueError("a spectrum always contains 1")
        object.__setattr__(self, "orders", s)

    @classmethod
    def closure(cls, orders: Iterable[int]) -> "OrderSet":
        return cls(frozenset(divisor_closure(orders)))

    def is_divisor_closed(self) -> bool:
        return all(d in self.orders for n in self.orders for d in _divisors(n))

    def sorted(self) -> list[int]:
        return sorted(self.orders)

    def __contains__(self, n: int) -> bool:
        return n in self.orders


def _divisors(n: int) -> list[int]:
    out = [1]
    x = n
    p = 2
    fac = []
    while p * p <= x:
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        if e:
            fac.append((p, e))
        p += 1
    if x > 1:
        fac.append((x, 1))
    for p, e in fac:
        out = [d * p**k for d in out for k in range(e + 1)]
    return out


def divisor_closure(orders: Iterable[int]) -> set[int]:
    out = {1}
    for n in orders:
        out.update(_divisors(n))
    return out


def graph_from_orders(omega: OrderSet | Iterable[int]) -> PrimeGraph:
    """Gamma(G) from omega(G): r ~ s iff rs divides some element order."""
    orders = omega.orders if isinstance(omega, OrderSet) else frozenset(omega)
    if not orders:
        raise ValueError("empty spectrum")
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for n in orders:
        if n == 1:
            continue
        ps = sorted(prime_divisors(n))
        vertices.update(ps)
        edges.update(combinations(ps, 2))
    return PrimeGraph(tuple(vertices), frozenset(edges))


# -- cocliques and clique partitions -------------------------------------------

def find_3_coclique(g: PrimeGraph) -> tuple[int, int, int] | None:
    """Lexicographically least triple of pairwise non-adjacent vertices."""
    for tri in combinations(g.vertices, 3):
        a, b, c = tri
        if not (g.adjacent(a, b) or g.adjacent(a, c) or g.adjacent(b, c)):
            return tri
    return None


def is_triangle_free(g: PrimeGraph) -> bool:
    return find_3_coclique(g.complement()) is None


def two_clique_partition(g: PrimeGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split the vertices into two cliques, if possible.

    Equivalent to 2-colouring the complement.  Each complement component is
    coloured by BFS from its least vertex, which goes to side A; neighbours
    are visited in ascending order.
    """
    comp = g.complement()
    side: dict[int, int] = {}
    for start in comp.vertices:
        if start in side:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in comp.neighbours(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    a = frozenset(v for v, s in side.items() if s == 0)
    b = frozenset(v for v, s in side.items() if s == 1)
    return a, b


def three_coloring(g: PrimeGraph) -> dict[int, int] | None:
    """An exact proper 3-colouring of g, or None when none exists.

    Plain backtracking over vertices in descending degree order (ties by
    vertex value), trying colours in order and never opening colour c+1
    before colour c is in use.
    """
    order = sorted(g.vertices, key=lambda v: (-len(g.neighbours(v)), v))
    nbrs = {v: set(g.neighbours(v)) for v in g.vertices}
    colour: dict[int, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[u] for u in nbrs[v] if u in colour}
        for c in range(min(used + 1, 3)):
            if c in taken:
                continue
            colour[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            del colour[v]
        return False

    return dict(colour) if place(0, 0) else None


@dataclass(frozen=True)
class RealizabilityReport:
    no_3_coclique: bool
    complement_3_colorable: bool
    coloring: dict[int, int] | None = None
    obstruction: tuple[int, int, int] | str | None = None

    @property
    def realizable(self) -> bool:
        return self.no_3_coclique and self.complement_3_colorable

    def to_dict(self) -> dict:
        cert: dict = {}
        if self.coloring is not None:
            cert["coloring"] = {str(v): c for v, c in sorted(self.coloring.items())}
        if self.obstruction is not None:
            cert["obstruction"] = (
                list(self.obstruction) if isinstance(self.obstruction, tuple) else self.obstruction
            )
        return {
            "realizable": self.realizable,
            "no_3_coclique": self.no_3_coclique,
            "complement_3_colorable": self.complement_3_colorable,
            "certificate": cert,
        }


def solvable_realizable(g: PrimeGraph) -> RealizabilityReport:
    """Test whether g is the prime graph of some solvable group.

    A graph qualifies exactly when its complement is triangle-free and
    3-colourable.
    """
    if len(g) > MAX_REALIZABILITY_VERTICES:
        raise ValueError(f"graph has {len(g)} vertices, cap is {MAX_REALIZABILITY_VERTICES}")
    tri = find_3_coclique(g)
    coloring = three_coloring(g.complement())
    colorable = coloring is not None
    if tri is not None:
        obstruction: tuple | str | None = tri
    elif not colorable:
        obstruction = "complement-not-3-colorable"
    else:
        obstruction = None
    return RealizabilityReport(tri is None, colorable, coloring, obstruction)


# -- serialisation -------------------------------------------------------------

def to_dict(g: PrimeGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in sorted(g.edges)]}


def from_dict(doc: dict) -> PrimeGraph:
    return PrimeGraph(tuple(int(v) for v in doc["vertices"]), frozenset(tuple(map(int, e)) for e in doc["edges"]))


def export(g: PrimeGraph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_dict(g), separators=(",", ":"))
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f"  {v};" for v in g.vertices]
        lines += [f"  {a} -- {b};" for a, b in sorted(g.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'dot'")


def parse_edges(text: str, vertices: Iterable[int] = ()) -> PrimeGraph:
    """Parse the inline form ``"2-3,2-5"``; extra isolated vertices may be given."""
    verts = set(vertices)
    edges = set()
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if "-" in tok:
            a, b = (int(x) for x in tok.split("-"))
            edges.add(_pair(a, b))
            verts.update((a, b))
        else:
            verts.add(int(tok))
    return PrimeGraph(tuple(verts), frozenset(edges))


def relabel_on_primes(n: int, edges: Iterable[tuple[int, int]]) -> PrimeGraph:
    """Map an abstract graph on 0..n-1 onto the first n primes."""
    ps = []
    bound = 30
    while len(ps) < n:
        ps = primes_up_to(bound)
        bound *= 2
    ps = ps[:n]
    return PrimeGraph(tuple(ps), frozenset(_pair(ps[a], ps[b]) for a, b in edges))


def mycielskian(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]]:
    """Mycielski construction on an abstract graph with vertices 0..n-1."""
    edges = list(edges)
    out = list(edges)
    for a, b in edges:
        out.append((a, n + b))
        out.append((b, n + a))
    apex = 2 * n
    out += [(n + i, apex) for i in range(n)]
    return 2 * n + 1, out


def mycielski_graph(k: int) -> tuple[int, list[tuple[int, int]]]:
    """The Mycielski graph M_k: M_1 = K_1, M_2 = K_2, M_{k+1} = mu(M_k).

    M_k is triangle-free with chromatic number k; M_3 = C_5, M_4 = Groetzsch.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1, []
    n, edges = 2, [(0, 1)]
    for _ in range(k - 2):
        n, edges = mycielskian(n, edges)
    return n, edges


def grotzsch_graph() -> tuple[int, list[tuple[int, int]]]:
    return mycielski_graph(4)
