"""Decide whether the prime graph of an almost simple group has a 3-coclique.

:func:`classify` walks a decision table keyed on the socle family.  Every
verdict carries a certificate: two cliques covering pi(S) when there is no
3-coclique, otherwise a witness triple of pairwise non-adjacent primes (or a
marker saying why no explicit triple is given).

Witness primes are chosen so that they do not divide |G:S|; a coclique of
Gamma(S) on such primes stays a coclique in Gamma(G).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import lru_cache

from .certificates import (
    Char,
    NegativeCert,
    PositiveCert,
    Primes,
    R,
    Slot,
    SymbolicNegative,
    SymbolicPositive,
    concretize_certificate,
)
from .descriptors import (
    AlmostSimpleDescriptor,
    Alternating,
    Exceptional,
    InvalidDescriptor,
    Linear,
    OrthogonalEven,
    OrthogonalOdd,
    OuterProfile,
    Sporadic,
    Symplectic,
    Unitary,
    UnsupportedDescriptor,
    canonicalize,
    diagonal_order,
    out_order,
    presets,
)
from .numtheory import PrimePower, fermat_mersenne, is_power_of_two, mult_order, prime_power, primes_up_to, r_part
from .prime_graph import find_3_coclique, two_clique_partition

__all__ = [
    "Verdict",
    "classify",
    "canonicalize",
    "presets",
    "concretize_certificate",
    "UNITARY_READINGS",
]

# How the PSU3(2^m) conditions are read: "q-1" asks for Inndiag(S) when
# (q - 1)_3 = 3, "q+1" asks for it when (q + 1)_3 = 3.  The "q-1" form never
# fires, since 3 | q - 1 forces m even and then Inndiag(S) = S.  The torus
# oracle shows it misses the coclique (3, 31, 331) of PSU3(32).2.
UNITARY_READINGS = ("q+1", "q-1")
DEFAULT_UNITARY_READING = "q+1"


@dataclass(frozen=True)
class Verdict:
    descriptor: AlmostSimpleDescriptor
    no_3_coclique: bool
    certificate: PositiveCert | NegativeCert
    provenance: str
    symbolic: SymbolicPositive | SymbolicNegative | None = None

    def to_dict(self) -> dict:
        return {
            "group": self.descriptor.label,
            "descriptor": self.descriptor.to_dict(),
            "no_3_coclique": self.no_3_coclique,
            "certificate": self.certificate.to_dict(),
            "provenance": self.provenance,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


# -- small builders -------------------------------------------------------------------

class _Ctx:
    """Per-descriptor data the rules share."""

    def __init__(self, d: AlmostSimpleDescriptor):
        self.d = d
        self.s = d.socle
        self.o = d.outer
        self.pp: PrimePower | None = prime_power(self.s.q) if hasattr(self.s, "q") else None
        out = out_order(self.s)
        # Primes a witness must avoid: those that may divide |G:S|.
        self.avoid = out if self.o.two_divides_index else out // r_part(out, 2)

    @property
    def exact(self) -> str | None:
        return self.o.is_exactly

    @property
    def inndiag(self) -> bool:
        if self.o.contains_inndiag or self.exact == "Aut":
            return True
        d = diagonal_order(self.s)
        if d == 1:
            return True
        # Out(S) = Inndiag/S of order 2: any even index already gives Inndiag.
        return d == 2 and out_order(self.s) == 2 and self.o.two_divides_index

    @property
    def graph(self) -> bool:
        return self.o.contains_graph_aut or self.exact == "Aut"

    def slot(self, j: int, name: str | None = None, odd: bool = False, over: str = "p") -> Slot:
        """Least prime of R_{jm}(p), falling back to R_j(q)."""
        options = (R(j, "p", True), R(j, "q")) if over == "p" else (R(j, "q"),)
        return Slot(name or f"r{j}", options, odd=odd, avoid=self.avoid)

    def char(self) -> Slot:
        return Slot("p", (Char(),))

    def fixed(self, prime: int, base: int | None = None, exp: int | None = None, name: str = "") -> Slot:
        if base is not None and exp is None:
            exp = mult_order(base, prime)
        return Slot(name or str(prime), fixed=prime, fixed_in=None if base is None else (base, exp))

    def three(self) -> Slot:
        """The prime 3, declared in R_{e(3,q)}(q)."""
        return self.fixed(3, self.pp.q, name="3")


def _negative(ctx, slots, tag, triples=((0, 1, 2),), marker=None, substituted=False, note="") -> Verdict:
    sym = SymbolicNegative(tuple(slots), tuple(triples), marker, substituted)
    cert = concretize_certificate(sym, ctx.pp)
    if note:
        cert = replace(cert, note=(cert.note + "; " if cert.note else "") + note)
    return Verdict(ctx.d, False, cert, tag, sym)


def _marker(ctx, marker, tag, note="") -> Verdict:
    return Verdict(ctx.d, False, NegativeCert(None, marker=marker, note=note), tag, SymbolicNegative((), (), marker))


def _fixed_triple(ctx, tag, primes, declared) -> Verdict:
    """A hard-coded witness; ``declared`` gives (base, exponent) per prime, None for the characteristic."""
    slots = []
    for r, dec in zip(primes, declared):
        if dec is None:
            slots.append(ctx.fixed(r, name="p"))
        else:
            slots.append(ctx.fixed(r, dec[0], dec[1]))
    return _negative(ctx, slots, tag, substituted=True)


def _positive(ctx, a, b, tag, note="", cross=None) -> Verdict:
    sym = SymbolicPositive(tuple(a), tuple(b), note, cross)
    return Verdict(ctx.d, True, concretize_certificate(sym, ctx.pp), tag, sym)


def _unstated_positive(ctx, tag) -> Verdict:
    # No 3-coclique, but no clique pair is available without enumerating the group.
    cert = PositiveCert("?", "?", None, None, "partition-not-stated", resolved=False)
    return Verdict(ctx.d, True, cert, tag, None)


def _lit(*primes) -> Primes:
    return Primes(tuple(primes))


# -- sporadic and alternating ------------------------------------------------------------

def _sporadic(ctx: _Ctx) -> Verdict:
    if ctx.s.name == "J2":
        return _positive(ctx, [_lit(2, 3, 5)], [_lit(7)], "sporadic:J2")
    return _marker(ctx, "cited-table", "sporadic:odd-coclique", "coclique of odd primes from a published table")


@lru_cache(maxsize=None)
def _alt_graph(n: int, symmetric: bool):
    from .oracles import spectrum_alternating

    return spectrum_alternating(n, symmetric).graph


# Prime graphs of the groups strictly between A6 and Aut(A6), frozen from
# the semilinear enumeration inside PGammaL2(9) (see tests).
_A6_EXTENSIONS = {
    "S6": ((2, 3), (5,), ()),
    "PGL2(9)": ((2, 5), (3,), ()),
    "Aut(A6)": ((2, 3), (5,), ((2, 5),)),
}


def _alternating(ctx: _Ctx) -> Verdict:
    n = ctx.s.n
    if n == 6 and (ctx.o.two_divides_index or ctx.exact):
        tag = ctx.exact
        if tag is None:
            raise UnsupportedDescriptor(
                "A6 < G with 2 | |G:S| is one of S6, PGL2(9), M10, Aut(A6); set is_exactly"
            )
        if tag == "M10":
            # Enumeration gives omega(M10) = {1,2,3,4,5,8}: {2,3,5} is a coclique.
            return _fixed_triple(ctx, "alternating:M10", (2, 3, 5), (None, None, None))
        a, b, cross = _A6_EXTENSIONS[tag]
        return _positive(ctx, [_lit(*a)], [_lit(*b)], f"alternating:{tag}", cross=cross)
    symmetric = ctx.o.two_divides_index
    name = f"{'S' if symmetric else 'A'}{n}"
    if n in (9, 10, 12) or (symmetric and n in (5, 8)):
        g = _alt_graph(n, symmetric)
        a, b = two_clique_partition(g)
        cross = tuple(e for e in g.edges if (e[0] in a) != (e[1] in a))
        return _positive(ctx, [_lit(*sorted(a))], [_lit(*sorted(b))], f"alternating:{name}", cross=cross)
    if n <= 12:
        w = find_3_coclique(_alt_graph(n, symmetric))
    elif n <= 17:
        w = (7, 11, 13)
    else:
        w = _large_alt_witness(n)
    return _fixed_triple(ctx, f"alternating:{name}", w, (None, None, None))


def _large_alt_witness(n: int) -> tuple[int, int, int]:
    ps = [p for p in primes_up_to(n - 1) if 2 * p > n + 1]
    if len(ps) < 3:
        raise AssertionError(f"fewer than three primes in ((n+1)/2, n) for n = {n}")
    return tuple(ps[:3])


# -- linear groups ---------------------------------------------------------------------

def _linear(ctx: _Ctx) -> Verdict:
    n = ctx.s.n
    if n == 2:
        return _linear2(ctx)
    if n == 3:
        return _linear3(ctx)
    if n == 4:
        return _linear4(ctx)
    return _linear_large(ctx)


def _linear2(ctx: _Ctx) -> Verdict:
    pp = ctx.pp
    p, m, q = pp.p, pp.m, pp.q
    if p == 2:
        if q == 8:
            if ctx.exact == "Aut":
                return _positive(ctx, [_lit(2, 3)], [_lit(7)], "linear2:Aut(PSL2(8))")
            # omega(PSL2(8)) = {1,2,3,7,9}
            return _fixed_triple(ctx, "linear2:PSL2(8)", (2, 7, 3), (None, (8, 1), (8, 2)))
        if m % 2 == 0 and ctx.o.two_divides_index:
            return _positive(ctx, [Char(), R(1)], [R(2)], "linear2:even-field-with-involution")
        return _negative(ctx, [ctx.char(), ctx.slot(1, "r1"), ctx.slot(2, "r2")], "linear2:even-odd-index")
    fm = fermat_mersenne(p) if m == 1 else None
    if fm is not None and (fm.is_fermat or fm.is_mersenne):
        if ctx.inndiag:
            return _positive(ctx, [Char()], [R(1), R(2)], "linear2:PGL2-fermat-mersenne")
        return _negative(
            ctx, [ctx.char(), Slot("r1", (R(1),)), Slot("r2", (R(2),))], "linear2:PSL2-fermat-mersenne"
        )
    return _negative(
        ctx, [ctx.char(), ctx.slot(1, "r1", odd=True), ctx.slot(2, "r2", odd=True)], "linear2:odd-field"
    )


# PSL3(4) extensions, frozen from the semilinear enumeration (see tests).
_PSL34 = {
    "PGL3(4)<f>": ((2, 3, 7), (5,), ((3, 5),)),
    "PGL3(4)<g>": ((2, 3, 5), (7,), ((3, 7),)),
    "Aut": ((2, 3, 5), (7,), ((2, 7), (3, 7))),
}


def _linear3(ctx: _Ctx) -> Verdict:
    pp = ctx.pp
    p, m, q = pp.p, pp.m, pp.q
    if p != 2:
        if not is_power_of_two(q + 1):
            return _negative(
                ctx, [ctx.char(), ctx.slot(2, "r2", odd=True), ctx.slot(3, "r3")], "linear3:odd-field"
            )
        # q = p is a Mersenne prime
        if r_part(q - 1, 3) != 3 or ctx.inndiag:
            return _positive(ctx, [Char(), R(1), R(2)], [R(3)], "linear3:mersenne")
        return _negative(ctx, [ctx.three(), ctx.char(), ctx.slot(3, "r3")], "linear3:mersenne-without-inndiag")
    if q == 4:
        return _linear3_q4(ctx)
    pos = lambda tag: _positive(ctx, [Char(), R(1), R(2)], [R(3)], tag)  # noqa: E731
    if r_part(q - 1, 3) == 3 and not ctx.inndiag:
        return _negative(ctx, [ctx.three(), ctx.slot(2, "r2"), ctx.slot(3, "r3")], "linear3:even-without-inndiag")
    if ctx.graph:
        return pos("linear3:even-with-graph")
    r2 = ctx.fixed(3, 2, 2, "r2") if m == 3 else ctx.slot(2, "r2")
    if m % 2 == 1 or not ctx.o.two_divides_index:
        return _negative(ctx, [ctx.char(), r2, ctx.slot(3, "r3")], "linear3:even-without-graph", substituted=m == 3)
    # m even and an involution outside Inndiag(S) that is not conjugate to g:
    # one of {2, r2, r3}, {2, r2, r3'} is a coclique.
    if q == 16:
        slots = [ctx.char(), ctx.fixed(17, 2, name="r2"), ctx.fixed(13, 2, name="r3"), ctx.fixed(7, 4, name="r3'")]
        return _negative(ctx, slots, "linear3:even-without-graph", ((0, 1, 2), (0, 1, 3)), substituted=True)
    slots = [ctx.char(), r2, ctx.slot(3, "r3"), Slot("r3'", (_half(3, m),), avoid=ctx.avoid)]
    return _negative(ctx, slots, "linear3:even-without-graph", ((0, 1, 2), (0, 1, 3)))


def _half(j: int, m: int) -> R:
    # R_{j m / 2}(2) as a literal-base term
    return R(j * m // 2, 2)


def _linear3_q4(ctx: _Ctx) -> Verdict:
    tag = ctx.exact
    if tag in _PSL34:
        a, b, cross = _PSL34[tag]
        return _positive(ctx, [_lit(*a)], [_lit(*b)], f"linear3:{'Aut(PSL3(4))' if tag == 'Aut' else tag}", cross=cross)
    if not ctx.o.contains_inndiag:
        # holds in PSL3(4), PSL3(4)<f>, <g>, <fg> and <f, g> by enumeration
        return _fixed_triple(ctx, "linear3:PSL3(4)-without-inndiag", (3, 5, 7), ((4, 1), (4, 2), (4, 3)))
    if ctx.o.contains_graph_aut:
        return _positive(ctx, [_lit(2, 3, 5)], [_lit(7)], "linear3:PGL3(4)-with-graph")
    if not ctx.o.two_divides_index:
        return _fixed_triple(ctx, "linear3:PGL3(4)", (2, 5, 7), (None, (4, 2), (4, 3)))
    raise UnsupportedDescriptor("PGL3(4) < G without a graph automorphism: set is_exactly (PGL3(4)<f> or not)")


def _linear4(ctx: _Ctx) -> Verdict:
    pp = ctx.pp
    p, m, q = pp.p, pp.m, pp.q
    if p != 2:
        return _negative(ctx, [ctx.char(), ctx.slot(3, "r3"), ctx.slot(4, "r4")], "linear4:odd-field")
    if q == 4 and (ctx.exact is not None or ctx.graph):
        tag = {"Aut": "Aut(PSL4(4))", None: "PSL4(4)-with-graph"}.get(ctx.exact, ctx.exact)
        return _unstated_positive(ctx, f"linear4:{tag}")
    if ctx.graph:
        return _positive(ctx, [Char(), R(2), R(4)], [R(1), R(3)], "linear4:even-with-graph")
    if q == 4 and ctx.o.two_divides_index:
        raise UnsupportedDescriptor("PSL4(4) < G without a graph automorphism: set is_exactly (PSL4(4)<f> or not)")
    if m % 2 == 1 or not ctx.o.two_divides_index:
        return _negative(ctx, [ctx.char(), ctx.slot(3, "r3"), ctx.slot(4, "r4")], "linear4:even-without-graph")
    if q == 16:
        slots = [ctx.char(), ctx.fixed(257, 2, name="r4"), ctx.fixed(13, 2, name="r3"), ctx.fixed(7, 4, name="r3'")]
        return _negative(ctx, slots, "linear4:even-without-graph", ((0, 2, 1), (0, 3, 1)), substituted=True)
    slots = [ctx.char(), ctx.slot(4, "r4"), ctx.slot(3, "r3"), Slot("r3'", (_half(3, m),), avoid=ctx.avoid)]
    return _negative(ctx, slots, "linear4:even-without-graph", ((0, 2, 1), (0, 3, 1)))


_LINEAR_LARGE_SPECIALS = {
    # (m, n, p): primes with their declared (base, exponent)
    (2, 5, 2): ((7, (4, 3)), (17, (4, 4)), (31, (4, 5))),
    (1, 6, 2): ((5, (2, 4)), (7, (2, 3)), (31, (2, 5))),
    (1, 7, 2): ((5, (2, 4)), (31, (2, 5)), (127, (2, 7))),
    (1, 8, 2): ((5, (2, 4)), (31, (2, 5)), (127, (2, 7))),
}


def _linear_large(ctx: _Ctx) -> Verdict:
    n, pp = ctx.s.n, ctx.pp
    key = (pp.m, n, pp.p)
    if key in _LINEAR_LARGE_SPECIALS:
        spec = _LINEAR_LARGE_SPECIALS[key]
        return _fixed_triple(ctx, "linear:n>=5-special", [r for r, _ in spec], [d for _, d in spec])
    return _negative(ctx, [ctx.slot(n, "a"), ctx.slot(n - 1, "b"), ctx.slot(n - 2, "c")], "linear:n>=5")


# -- unitary groups -----------------------------------------------------------------

def _unitary(ctx: _Ctx, reading: str) -> Verdict:
    n = ctx.s.n
    if n == 3:
        return _unitary3(ctx, reading)
    if n == 4:
        return _unitary4(ctx)
    if n == 5:
        return _unitary5(ctx)
    if n == 6:
        if ctx.pp.q == 4:
            return _fixed_triple(ctx, "unitary6:q=4", (13, 17, 41), ((2, 12), (2, 8), (2, 20)))
        return _negative(ctx, [ctx.slot(3, "r3"), ctx.slot(4, "r4"), ctx.slot(10, "r10")], "unitary6")
    if n % 2:
        c = n - 1 if n % 4 == 1 else n - 3
        idx = (2 * n, 2 * (n - 2), c)
    elif n % 4 == 0:
        idx = (2 * (n - 1), 2 * (n - 3), n)
    else:
        idx = (2 * (n - 1), 2 * (n - 3), n - 2)
    return _negative(ctx, [ctx.slot(j, f"r{j}") for j in idx], "unitary:n>=7")


def _unitary3(ctx: _Ctx, reading: str) -> Verdict:
    pp = ctx.pp
    p, m, q = pp.p, pp.m, pp.q
    cliques = ([Char(), R(1), R(2)], [R(6)])
    if p != 2:
        if q == 9:
            return _positive(ctx, *cliques, "unitary3:PSU3(9)")
        if not is_power_of_two(q - 1):
            return _negative(ctx, [ctx.char(), ctx.slot(1, "r1", odd=True), ctx.slot(6, "r6")], "unitary3:odd-field")
        # q = p is a Fermat prime
        if r_part(q + 1, 3) != 3 or ctx.inndiag:
            return _positive(ctx, *cliques, "unitary3:fermat")
        return _negative(ctx, [ctx.three(), ctx.char(), ctx.slot(6, "r6")], "unitary3:fermat-without-inndiag")
    if not ctx.o.two_divides_index:
        return _negative(ctx, [ctx.char(), ctx.slot(1, "r1"), ctx.slot(6, "r6")], "unitary3:even-odd-index")
    if reading == "q-1":
        needs_inndiag = r_part(q - 1, 3) == 3
    else:
        needs_inndiag = r_part(q + 1, 3) == 3
    if needs_inndiag and not ctx.inndiag:
        return _negative(
            ctx, [ctx.three(), ctx.slot(1, "r1"), ctx.slot(6, "r6")], f"unitary3:even-without-inndiag[{reading}]"
        )
    return _positive(ctx, *cliques, f"unitary3:even-with-involution[{reading}]")


def _unitary4(ctx: _Ctx) -> Verdict:
    pp = ctx.pp
    if pp.p != 2:
        return _negative(ctx, [ctx.char(), ctx.slot(4, "r4"), ctx.slot(6, "r6")], "unitary4:odd-field")
    if pp.q == 2:
        return _positive(ctx, [_lit(2, 3)], [_lit(5)], "unitary4:PSU4(2)")
    if ctx.o.two_divides_index:
        return _positive(ctx, [Char(), R(1), R(4)], [R(2), R(6)], "unitary4:even-with-involution")
    return _negative(ctx, [ctx.char(), ctx.slot(4, "r4"), ctx.slot(6, "r6")], "unitary4:even-odd-index")


def _unitary5(ctx: _Ctx) -> Verdict:
    if ctx.pp.q == 2:
        if ctx.o.two_divides_index or ctx.exact == "Aut":
            return _positive(ctx, [_lit(2, 3, 5)], [_lit(11)], "unitary5:Aut(PSU5(2))")
        return _fixed_triple(ctx, "unitary5:PSU5(2)", (2, 5, 11), (None, (2, 4), (2, 10)))
    return _negative(ctx, [ctx.slot(4, "r4"), ctx.slot(6, "r6"), ctx.slot(10, "r10")], "unitary5")


# -- symplectic and orthogonal ---------------------------------------------------------------

def _symplectic_witness(ctx: _Ctx, n: int, tag: str) -> Verdict | None:
    """Witness for PSp_n(q), n >= 6, or None when PSp_n(q) itself has no 3-coclique."""
    pp = ctx.pp
    if n == 6:
        if pp.q == 2:
            return None
        if pp.q == 4:
            return _fixed_triple(ctx, tag, (7, 17, 13), ((4, 3), (4, 4), (4, 6)))
        return _negative(
            ctx, [ctx.slot(3, "r3", odd=True), ctx.slot(4, "r4", odd=True), ctx.slot(6, "r6", odd=True)], tag
        )
    key = (pp.m, n, pp.p)
    if key == (1, 8, 2):
        return _fixed_triple(ctx, tag, (5, 7, 17), ((2, 4), (2, 3), (2, 8)))
    if key == (1, 10, 2):
        return _fixed_triple(ctx, tag, (7, 17, 31), ((2, 3), (2, 8), (2, 5)))
    return _negative(ctx, [ctx.slot(n, "a"), ctx.slot(n - 2, "b"), ctx.slot(n - 4, "c")], tag)


def _symplectic(ctx: _Ctx) -> Verdict:
    n = ctx.s.n
    if n == 4:
        return _positive(
            ctx, [Char(), R(1), R(2)], [R(4)], "symplectic4",
            note="derived partition, checked by enumeration for small q",
        )
    if n == 6 and ctx.pp.q == 2:
        return _positive(ctx, [_lit(2, 3, 5)], [_lit(7)], "symplectic6:PSp6(2)")
    return _symplectic_witness(ctx, n, f"symplectic{n if n <= 6 else ':n>=8'}")


def _orthogonal_odd(ctx: _Ctx) -> Verdict:
    # Same prime graph and |Out| as PSp_{n-1}(q).
    return _symplectic_witness(ctx, ctx.s.n - 1, "orthodd:via-symplectic")


def _orthogonal_even(ctx: _Ctx) -> Verdict:
    s = ctx.s
    if (s.n, s.q, s.sign) == (8, 2, "+"):
        return _positive(ctx, [_lit(2, 3, 5)], [_lit(7)], "ortheven:POmega8+(2)")
    v = _symplectic_witness(ctx, s.n - 2, "ortheven:via-odd-subgroup")
    if v is None:
        return _marker(
            ctx, "unresolved", "ortheven:via-odd-subgroup",
            "the odd-dimensional subgroup has no 3-coclique here; no explicit triple",
        )
    return v


# -- exceptional groups ---------------------------------------------------------------

_EXCEPTIONAL_R = {
    "E8": (30, 24, 20),
    "E7": (18, 14, 12),
    "E6": (9, 8, 5),
    "2E6": (18, 12, 10),
    "3D4": (3, 6, 12),
    "F4": (12, 8, 4),
    "G2": (6, 3, 2),
    "2G2": (1, 2, 6),
    "2F4": (2, 4, 6),
}


def _exceptional(ctx: _Ctx) -> Verdict:
    t, q = ctx.s.type, ctx.s.q
    tag = f"exceptional:{t}"
    if ctx.s.tits:
        return _fixed_triple(ctx, "exceptional:2F4(2)'", (3, 5, 13), ((2, 2), (2, 4), (2, 12)))
    if t == "3D4":
        if q == 2:
            return _positive(ctx, [_lit(2, 3, 7)], [_lit(13)], "exceptional:3D4(2)")
        if q == 4:
            return _fixed_triple(ctx, "exceptional:3D4(4)", (7, 13, 241), ((4, 3), (4, 6), (4, 12)))
    if t == "2F4" and q == 8:
        return _fixed_triple(ctx, "exceptional:2F4(8)", (2, 19, 37), (None, (2, 18), (2, 36)))
    if t == "G2" and q in (4, 8):
        if q == 4:
            return _fixed_triple(ctx, "exceptional:G2(4)", (13, 7, 5), ((4, 6), (4, 3), (4, 2)))
        # 7 lies in R_3(2) = R_1(8); R_6(2) is empty
        return _fixed_triple(ctx, "exceptional:G2(8)", (19, 73, 7), ((8, 6), (8, 3), (2, 3)))
    if t == "2B2":
        return _negative(ctx, [ctx.char(), ctx.slot(1, "s1"), ctx.slot(4, "s2")], tag)
    js = _EXCEPTIONAL_R[t]
    return _negative(ctx, [ctx.slot(j, f"r{j}") for j in js], tag)


# -- entry point ---------------------------------------------------------------------

def classify(d: AlmostSimpleDescriptor, unitary_reading: str = DEFAULT_UNITARY_READING) -> Verdict:
    """Decide whether Gamma(G) has a 3-coclique, with a certificate.

    ``unitary_reading`` selects how the PSU3(2^m) conditions are read;
    see :data:`UNITARY_READINGS`.  Raises :class:`UnsupportedDescriptor`
    when the predicates given do not determine the answer.
    """
    if unitary_reading not in UNITARY_READINGS:
        raise ValueError(f"unitary_reading must be one of {UNITARY_READINGS}")
    d = canonicalize(d)
    ctx = _Ctx(d)
    if not d.outer.pi_quotient_in_pi_S:
        return _marker(
            ctx, "remark", "remark:new-prime-in-quotient",
            "a prime of |G:S| outside pi(S) always yields a 3-coclique",
        )
    s = d.socle
    if isinstance(s, Sporadic):
        return _sporadic(ctx)
    if isinstance(s, Alternating):
        return _alternating(ctx)
    if isinstance(s, Linear):
        return _linear(ctx)
    if isinstance(s, Unitary):
        return _unitary(ctx, unitary_reading)
    if isinstance(s, Symplectic):
        return _symplectic(ctx)
    if isinstance(s, OrthogonalOdd):
        return _orthogonal_odd(ctx)
    if isinstance(s, OrthogonalEven):
        return _orthogonal_even(ctx)
    if isinstance(s, Exceptional):
        return _exceptional(ctx)
    raise InvalidDescriptor(f"unknown socle {s!r}")


def classify_preset(name: str, unitary_reading: str = DEFAULT_UNITARY_READING) -> Verdict:
    return classify(presets(name), unitary_reading)


def descriptor(family: str, outer: OuterProfile | None = None, **params) -> AlmostSimpleDescriptor:
    """Shorthand: ``descriptor("linear", n=2, q=7, outer=OuterProfile(...))``."""
    from .descriptors import make_socle

    return AlmostSimpleDescriptor(make_socle(family, **params), outer or OuterProfile())
