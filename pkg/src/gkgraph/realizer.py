"""Solvable groups with a prescribed two-clique prime graph.

Given a graph whose vertices split into cliques pi1 and pi2, build

    H = (F_1 + ... + F_k) x| C,    F_i = GF(p_i ** m_i)^+,  C cyclic of order prod(pi2),

where a generator c of C multiplies F_i by a fixed x_i whose order is the
product of D_i, the primes of pi2 *not* adjacent to p_i.  A prime q in D_i
then acts fixed-point-freely on F_i (no element of order p_i * q), while the
primes outside D_i centralise F_i (so p_i * q is an order).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

from .fields import MAX_FIELD_ORDER, get_field
from .numtheory import CapExceeded, MAX_INT, is_prime, lcm, mult_order
from .prime_graph import PrimeGraph, _pair, graph_from_orders, two_clique_partition

# Below this many elements the generator x is picked from the explicit
# cyclic subgroup; above it we scan codes upward.
_SUBGROUP_SCAN_LIMIT = 2**16


def _prod(xs: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b, xs, 1)


@dataclass(frozen=True)
class Tower:
    """One elementary abelian layer GF(p**m)^+ and how C acts on it."""

    p: int
    m: int
    D: tuple[int, ...] = ()
    x: int | None = None  # field code of the multiplier; None if the field is too big

    @property
    def field_order(self) -> int:
        return self.p**self.m

    @property
    def acting_order(self) -> int:
        return _prod(self.D)

    def x_coordinates(self) -> list[int] | None:
        if self.x is None:
            return None
        return get_field(self.p, self.m).coords(self.x)


@dataclass(frozen=True)
class SolvableBlueprint:
    towers: tuple[Tower, ...]
    pi2: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "towers", tuple(sorted(self.towers, key=lambda t: t.p)))
        object.__setattr__(self, "pi2", tuple(sorted(set(self.pi2))))
        ps = [t.p for t in self.towers]
        if len(set(ps)) != len(ps):
            raise ValueError("tower primes must be distinct")
        if set(ps) & set(self.pi2):
            raise ValueError("tower primes must avoid pi2")
        for q in self.pi2:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        for t in self.towers:
            if not set(t.D) <= set(self.pi2):
                raise ValueError(f"D for p={t.p} is not inside pi2")
            if (t.field_order - 1) % t.acting_order:
                raise ValueError(f"prod(D) does not divide {t.p}^{t.m} - 1")
            if t.x is not None and get_field(t.p, t.m).mult_order(t.x) != t.acting_order:
                raise ValueError(f"x for p={t.p} does not have order {t.acting_order}")

    @property
    def pi1(self) -> tuple[int, ...]:
        return tuple(t.p for t in self.towers)

    @property
    def complement_order(self) -> int:
        return _prod(self.pi2)

    @property
    def concrete(self) -> bool:
        return all(t.x is not None for t in self.towers)

    def to_dict(self) -> dict:
        return {
            "towers": [
                {"p": t.p, "m": t.m, "D": list(t.D), "x_coordinates": t.x_coordinates()} for t in self.towers
            ],
            "pi2": list(self.pi2),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> "SolvableBlueprint":
        towers = []
        for t in doc["towers"]:
            p, m = int(t["p"]), int(t["m"])
            coords = t.get("x_coordinates")
            x = get_field(p, m).from_coords(coords) if coords is not None else None
            towers.append(Tower(p, m, tuple(int(q) for q in t.get("D", ())), x))
        return cls(tuple(towers), tuple(int(q) for q in doc.get("pi2", ())))


def blueprint_order(b: SolvableBlueprint) -> int:
    """|H| = prod p_i**m_i * prod pi2."""
    out = b.complement_order
    for t in b.towers:
        out *= t.field_order
        if out > MAX_INT:
            raise CapExceeded("blueprint order exceeds 2**63 - 1")
    return out


def _least_element_of_order(p: int, m: int, n: int) -> int:
    F = get_field(p, m)
    if n == 1:
        return 1
    if n <= _SUBGROUP_SCAN_LIMIT:
        return F.elements_of_order(n, limit=_SUBGROUP_SCAN_LIMIT)[0]
    for a in range(2, F.order):
        if F.pow(a, n) == 1 and F.mult_order(a) == n:
            return a
    raise AssertionError(f"no element of order {n} in GF({p}^{m})")


def _order_mod(p: int, q: int) -> int:
    # Plain order of p modulo q.  The e(2, q) convention does not apply here:
    # all we need is prod(D) | p**m - 1, and 2 | p - 1 for odd p.
    return 1 if q == 2 else mult_order(p, q)


def make_tower(p: int, D: Iterable[int]) -> Tower:
    """The minimal tower for p acted on by the primes D."""
    D = tuple(sorted(set(D)))
    m = lcm(*(_order_mod(p, q) for q in D)) if D else 1
    # Fields past the 2**32 cap stay symbolic (x = None): the analytic graph still
    # holds, verify() reports the overflow and skips enumeration.
    x = None
    if p**m <= MAX_FIELD_ORDER:
        x = _least_element_of_order(p, m, _prod(D))
    return Tower(p, m, D, x)


def realize(g: PrimeGraph, partition: tuple[Iterable[int], Iterable[int]] | None = None) -> SolvableBlueprint:
    """A blueprint whose group has prime graph g.

    ``partition`` = (pi1, pi2) must split the vertices into two cliques;
    when omitted, :func:`two_clique_partition` supplies one.
    """
    if partition is None:
        partition = two_clique_partition(g)
        if partition is None:
            raise ValueError("graph is not a union of two cliques")
    pi1, pi2 = set(partition[0]), set(partition[1])
    if pi1 & pi2:
        raise ValueError("partition sets overlap")
    if pi1 | pi2 != set(g.vertices):
        raise ValueError("partition does not cover the vertex set")
    for side in (pi1, pi2):
        if not g.is_clique(side):
            raise ValueError(f"{sorted(side)} is not a clique")
    towers = tuple(make_tower(p, (q for q in pi2 if not g.adjacent(p, q))) for p in sorted(pi1))
    return SolvableBlueprint(towers, tuple(sorted(pi2)))


def analytic_graph(b: SolvableBlueprint) -> PrimeGraph:
    """Prime graph of the blueprint group read off its structure."""
    pi1, pi2 = b.pi1, b.pi2
    edges = {_pair(a, c) for i, a in enumerate(pi1) for c in pi1[i + 1 :]}
    edges |= {_pair(a, c) for i, a in enumerate(pi2) for c in pi2[i + 1 :]}
    for t in b.towers:
        edges |= {_pair(t.p, q) for q in pi2 if q not in t.D}
    return PrimeGraph(pi1 + pi2, frozenset(edges))


@dataclass(frozen=True)
class RealizationReport:
    blueprint: SolvableBlueprint
    target: PrimeGraph
    analytic: PrimeGraph
    analytic_match: bool
    enumerated_match: bool | None
    group_order: int | None
    note: str = ""

    def to_dict(self) -> dict:
        from .prime_graph import to_dict as graph_dict

        return {
            "blueprint": self.blueprint.to_dict(),
            "target": graph_dict(self.target),
            "analytic": graph_dict(self.analytic),
            "analytic_match": self.analytic_match,
            "enumerated_match": self.enumerated_match,
            "group_order": self.group_order,
            "note": self.note,
        }


def verify(b: SolvableBlueprint, g: PrimeGraph, cap: int = 10**6) -> RealizationReport:
    """Compare the blueprint's prime graph with g, by formula and (if small) by enumeration."""
    from .oracles import spectrum_blueprint

    analytic = analytic_graph(b)
    match = analytic == g
    try:
        order = blueprint_order(b)
    except CapExceeded:
        return RealizationReport(b, g, analytic, match, None, None, "order beyond 2**63; analytic check only")
    if not b.concrete:
        return RealizationReport(b, g, analytic, match, None, order, "tower field beyond 2**32; analytic check only")
    if order > cap:
        return RealizationReport(b, g, analytic, match, None, order, f"order {order} above cap {cap}; not enumerated")
    enumerated = graph_from_orders(spectrum_blueprint(b, cap=cap).omega)
    return RealizationReport(b, g, analytic, match, enumerated == g, order)
