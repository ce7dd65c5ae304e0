"""Symbolic certificates and their concretization to explicit primes.

A certificate is first written with symbolic prime sets such as
``R_{2m}(p)`` or ``{2} ∪ R_1(q)`` and then resolved for a concrete
q = p**m.  Clique sets resolve to every member; witness slots resolve to
their least admissible member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .numtheory import CapExceeded, PrimePower, mult_order, primitive_prime_divisors
from .prime_graph import PrimeGraph, to_dict as graph_dict


# -- symbolic terms -----------------------------------------------------------------

@dataclass(frozen=True)
class R:
    """R_k(base).  ``base`` is "p", "q" or a literal integer; ``times_m`` scales k by m."""

    k: int
    base: Union[str, int] = "q"
    times_m: bool = False

    def label(self) -> str:
        k = (f"{self.k}m" if self.k != 1 else "m") if self.times_m else str(self.k)
        return f"R_{{{k}}}({self.base})" if len(k) > 1 else f"R_{k}({self.base})"

    def declared(self, pp: PrimePower | None) -> tuple[int, int]:
        """(base, exponent) as integers."""
        if isinstance(self.base, int):
            base = self.base
        elif pp is None:
            raise ValueError(f"{self.label()} needs q")
        else:
            base = pp.p if self.base == "p" else pp.q
        k = self.k * (pp.m if self.times_m else 1)
        return base, k

    def resolve(self, pp: PrimePower | None) -> frozenset[int]:
        base, k = self.declared(pp)
        return primitive_prime_divisors(base, k)


@dataclass(frozen=True)
class Char:
    """The defining characteristic p."""

    def label(self) -> str:
        return "{p}"

    def resolve(self, pp: PrimePower | None) -> frozenset[int]:
        return frozenset({pp.p})


@dataclass(frozen=True)
class Primes:
    """An explicit prime set, optionally with the R-set each prime was declared in."""

    values: tuple[int, ...]
    note: str = ""

    def label(self) -> str:
        return "{" + ", ".join(map(str, self.values)) + "}"

    def resolve(self, pp: PrimePower | None) -> frozenset[int]:
        return frozenset(self.values)


Term = Union[R, Char, Primes]


def set_label(terms: tuple[Term, ...]) -> str:
    return " ∪ ".join(t.label() for t in terms) if terms else "∅"


@dataclass(frozen=True)
class Slot:
    """One prime of a witness triple.

    ``options`` are tried in order; within the first option that yields an
    admissible prime, the least one is taken.  ``fixed`` pins the prime
    (hard-coded substitutions) together with its declared (base, exponent).
    """

    name: str
    options: tuple[Term, ...] = ()
    odd: bool = False
    avoid: int = 1  # skip primes dividing this (|Out(S)|)
    fixed: int | None = None
    fixed_in: tuple[int, int] | None = None  # (base, exponent) for a fixed prime, None = characteristic
    source: str = ""


@dataclass(frozen=True)
class WitnessPrime:
    prime: int
    declared: str
    base: int | None = None
    exponent: int | None = None  # None with base None means "the characteristic"
    fixed: bool = False

    def check(self, pp: PrimePower | None) -> bool:
        """Does the prime lie in the set it was declared in?"""
        if self.base is None:
            if self.exponent is None and pp is not None and self.declared == "{p}":
                return self.prime == pp.p
            return True  # combinatorial witness, checked by oracle tests instead
        return mult_order(self.base, self.prime) == self.exponent

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "declared": self.declared,
            "base": self.base,
            "exponent": self.exponent,
            "hard_coded": self.fixed,
        }


# -- symbolic certificates -------------------------------------------------------------

@dataclass(frozen=True)
class SymbolicPositive:
    clique_a: tuple[Term, ...]
    clique_b: tuple[Term, ...]
    note: str = ""
    # Edges between the two cliques, when known from enumeration.
    cross: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class SymbolicNegative:
    slots: tuple[Slot, ...] = ()
    # Index triples into ``slots``; more than one means "one of these is a
    # 3-coclique, depending on outer content the predicates do not fix".
    triples: tuple[tuple[int, int, int], ...] = ((0, 1, 2),)
    marker: str | None = None
    substituted: bool = False


# -- concrete certificates -------------------------------------------------------------

@dataclass(frozen=True)
class PositiveCert:
    clique_a_symbolic: str
    clique_b_symbolic: str
    clique_a: frozenset[int] | None
    clique_b: frozenset[int] | None
    note: str = ""
    resolved: bool = True
    cross: frozenset[tuple[int, int]] | None = None

    @property
    def cross_edges_known(self) -> bool:
        return self.cross is not None

    @property
    def graph(self) -> PrimeGraph | None:
        """Two cliques plus the known cross edges (none if unknown)."""
        if not self.resolved:
            return None
        return PrimeGraph.two_cliques(self.clique_a, self.clique_b, self.cross or ())

    @property
    def partition(self):
        return (self.clique_a, self.clique_b)

    def to_dict(self) -> dict:
        out = {
            "kind": "two-clique-partition",
            "symbolic": [self.clique_a_symbolic, self.clique_b_symbolic],
            "resolved": self.resolved,
            "cross_edges_known": self.cross_edges_known,
            "note": self.note,
        }
        if self.resolved:
            out["cliques"] = [sorted(self.clique_a), sorted(self.clique_b)]
            out["graph"] = graph_dict(self.graph)
        return out


@dataclass(frozen=True)
class NegativeCert:
    witness: tuple[int, int, int] | None
    primes: tuple[WitnessPrime, ...] = ()
    candidates: tuple[tuple[int, int, int], ...] = ()
    marker: str | None = None
    substituted: bool = False
    note: str = ""

    @property
    def resolved(self) -> bool:
        return self.witness is not None or bool(self.candidates)

    @property
    def slot_values(self) -> tuple[int, ...]:
        return tuple(w.prime for w in self.primes)

    @property
    def substitution(self) -> tuple[int, ...]:
        """The hard-coded primes, in slot order (empty when nothing was substituted)."""
        return tuple(w.prime for w in self.primes if w.fixed) if self.substituted else ()

    def to_dict(self) -> dict:
        return {
            "kind": "3-coclique",
            "witness": list(self.witness) if self.witness else None,
            "candidates": [list(c) for c in self.candidates],
            "primes": [w.to_dict() for w in self.primes],
            "marker": self.marker,
            "substituted": self.substituted,
            "note": self.note,
        }


Certificate = Union[PositiveCert, NegativeCert]


def _resolve_slot(slot: Slot, pp: PrimePower | None) -> WitnessPrime | None:
    if slot.fixed is not None:
        if slot.fixed_in is None:
            return WitnessPrime(slot.fixed, slot.source or "{p}", fixed=True)
        base, e = slot.fixed_in
        return WitnessPrime(slot.fixed, slot.source or f"R_{e}({base})", base, e, fixed=True)
    for term in slot.options:
        if isinstance(term, Char):
            return WitnessPrime(pp.p, "{p}")
        try:
            cands = sorted(term.resolve(pp))
        except CapExceeded:
            continue
        for r in cands:
            if slot.odd and r == 2:
                continue
            if slot.avoid % r == 0:
                continue
            if isinstance(term, R):
                base, k = term.declared(pp)
                return WitnessPrime(r, term.label(), base, k)
            return WitnessPrime(r, slot.source or term.label())
    return None


def concretize_certificate(sym, q: PrimePower | int | None = None) -> Certificate:
    """Replace symbolic prime sets by explicit primes for the given q."""
    pp = q if isinstance(q, PrimePower) or q is None else PrimePower.from_int(q)
    if isinstance(sym, SymbolicPositive):
        la, lb = set_label(sym.clique_a), set_label(sym.clique_b)
        try:
            a = frozenset().union(*(t.resolve(pp) for t in sym.clique_a))
            b = frozenset().union(*(t.resolve(pp) for t in sym.clique_b))
        except CapExceeded as e:
            return PositiveCert(la, lb, None, None, f"unresolved: {e}", resolved=False)
        cross = frozenset(sym.cross) if sym.cross is not None else None
        return PositiveCert(la, lb, a, b, sym.note, cross=cross)
    if sym.marker is not None and not sym.slots:
        return NegativeCert(None, marker=sym.marker)
    primes = [_resolve_slot(s, pp) for s in sym.slots]
    if any(w is None for w in primes):
        missing = [s.name for s, w in zip(sym.slots, primes) if w is None]
        return NegativeCert(
            None,
            tuple(w for w in primes if w is not None),
            marker="unresolved",
            note=f"no admissible prime for {', '.join(missing)} within 63 bits",
        )
    triples = tuple(tuple(primes[i].prime for i in t) for t in sym.triples)
    if len(triples) == 1:
        return NegativeCert(triples[0], tuple(primes), triples, sym.marker, sym.substituted)
    return NegativeCert(None, tuple(primes), triples, sym.marker or "one-of", sym.substituted)
