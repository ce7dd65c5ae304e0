"""Almost simple groups described by socle plus outer-automorphism content.

A descriptor does not model the subgroup G/S of Out(S) directly.  It carries
the handful of predicates the classification needs (is 2 in pi(G/S), does G
contain Inndiag(S), does it contain a graph automorphism, ...) and, for a few
small groups where those predicates are not enough, an exact name.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import asdict, dataclass, field, replace

from .numtheory import CapExceeded, PrimePower, prime_divisors, prime_power, primes_up_to


class InvalidDescriptor(ValueError):
    """The descriptor does not name an almost simple group we handle."""


class UnsupportedDescriptor(ValueError):
    """Valid group, but the predicates given do not determine the answer."""


def _pp(q: int) -> PrimePower:
    pp = prime_power(q)
    if pp is None:
        raise InvalidDescriptor(f"q = {q} is not a prime power")
    return pp


# -- socles ----------------------------------------------------------------------

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'", "HS", "McL", "Suz", "He", "HN", "Th", "Ly", "O'N", "Ru", "B", "M",
)
# Sporadic groups with |Out(S)| = 2; the rest have trivial outer automorphism group.
_SPORADIC_OUT2 = {"M12", "M22", "J2", "J3", "HS", "McL", "Suz", "He", "HN", "Fi22", "Fi24'", "O'N"}

EXCEPTIONAL_TYPES = ("E8", "E7", "E6", "2E6", "3D4", "F4", "G2", "2F4", "2G2", "2B2")


@dataclass(frozen=True)
class Alternating:
    n: int
    family = "alternating"

    def __post_init__(self):
        if self.n < 5:
            raise InvalidDescriptor("A_n is simple only for n >= 5")

    @property
    def label(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class Sporadic:
    name: str
    family = "sporadic"

    def __post_init__(self):
        if self.name not in SPORADIC_NAMES:
            raise InvalidDescriptor(f"unknown sporadic group {self.name!r}")

    @property
    def label(self) -> str:
        return self.name


@dataclass(frozen=True)
class Linear:
    n: int
    q: int
    family = "linear"

    def __post_init__(self):
        _pp(self.q)
        if self.n < 2:
            raise InvalidDescriptor("PSL_n needs n >= 2")
        if (self.n, self.q) in ((2, 2), (2, 3)):
            raise InvalidDescriptor(f"PSL{self.n}({self.q}) is solvable, not simple")

    @property
    def label(self) -> str:
        return f"PSL{self.n}({self.q})"


@dataclass(frozen=True)
class Unitary:
    n: int
    q: int
    family = "unitary"

    def __post_init__(self):
        _pp(self.q)
        if self.n < 3:
            raise InvalidDescriptor("PSU_n needs n >= 3 (PSU_2(q) is PSL_2(q))")
        if (self.n, self.q) == (3, 2):
            raise InvalidDescriptor("PSU3(2) is solvable, not simple")

    @property
    def label(self) -> str:
        return f"PSU{self.n}({self.q})"


@dataclass(frozen=True)
class Symplectic:
    n: int
    q: int
    family = "symplectic"

    def __post_init__(self):
        _pp(self.q)
        if self.n < 4 or self.n % 2:
            raise InvalidDescriptor("PSp_n needs even n >= 4")
        if (self.n, self.q) == (4, 2):
            raise InvalidDescriptor("PSp4(2) is not simple (it is S6)")

    @property
    def label(self) -> str:
        return f"PSp{self.n}({self.q})"


@dataclass(frozen=True)
class OrthogonalOdd:
    n: int
    q: int
    family = "orthodd"

    def __post_init__(self):
        _pp(self.q)
        if self.n < 7 or self.n % 2 == 0:
            raise InvalidDescriptor("POmega_n (n odd) needs n >= 7")

    @property
    def label(self) -> str:
        return f"POmega{self.n}({self.q})"


@dataclass(frozen=True)
class OrthogonalEven:
    n: int
    q: int
    sign: str
    family = "ortheven"

    def __post_init__(self):
        _pp(self.q)
        if self.n < 8 or self.n % 2:
            raise InvalidDescriptor("POmega^±_n needs even n >= 8")
        if self.sign not in ("+", "-"):
            raise InvalidDescriptor("sign must be '+' or '-'")

    @property
    def label(self) -> str:
        return f"POmega{self.n}{self.sign}({self.q})"


@dataclass(frozen=True)
class Exceptional:
    """Exceptional group of Lie type; ``2F4`` with q = 2 means the Tits group."""

    type: str
    q: int
    family = "exceptional"

    def __post_init__(self):
        pp = _pp(self.q)
        if self.type not in EXCEPTIONAL_TYPES:
            raise InvalidDescriptor(f"unknown exceptional type {self.type!r}")
        if self.type in ("2B2", "2F4") and (pp.p != 2 or pp.m % 2 == 0):
            raise InvalidDescriptor(f"{self.type}(q) needs q = 2^(2n+1)")
        if self.type == "2G2" and (pp.p != 3 or pp.m % 2 == 0):
            raise InvalidDescriptor("2G2(q) needs q = 3^(2n+1)")
        if (self.type, self.q) in (("2B2", 2), ("2G2", 3), ("G2", 2)):
            raise InvalidDescriptor(f"{self.type}({self.q}) is not simple")

    @property
    def tits(self) -> bool:
        return self.type == "2F4" and self.q == 2

    @property
    def label(self) -> str:
        return "2F4(2)'" if self.tits else f"{self.type}({self.q})"


Socle = Alternating | Sporadic | Linear | Unitary | Symplectic | OrthogonalOdd | OrthogonalEven | Exceptional


# -- outer content ---------------------------------------------------------------

@dataclass(frozen=True)
class OuterProfile:
    pi_quotient_in_pi_S: bool = True
    two_divides_index: bool = False
    contains_inndiag: bool = False
    contains_graph_aut: bool = False
    is_exactly: str | None = None


@dataclass(frozen=True)
class AlmostSimpleDescriptor:
    socle: Socle
    outer: OuterProfile = field(default_factory=OuterProfile)
    preset_name: str | None = None

    def __post_init__(self):
        validate_outer(self.socle, self.outer)

    @property
    def label(self) -> str:
        return self.preset_name or self.socle.label

    def to_dict(self) -> dict:
        s = {"family": self.socle.family, **asdict(self.socle)}
        return {"socle": s, "outer": asdict(self.outer), "preset_name": self.preset_name}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> "AlmostSimpleDescriptor":
        s = dict(doc["socle"])
        fam = s.pop("family")
        try:
            ctor = _FAMILIES[fam]
        except KeyError:
            raise InvalidDescriptor(f"unknown family {fam!r}") from None
        try:
            socle = ctor(**s)
        except TypeError as e:
            raise InvalidDescriptor(str(e)) from None
        outer = OuterProfile(**doc.get("outer", {}))
        return cls(socle, outer, doc.get("preset_name"))


_FAMILIES = {
    "alternating": Alternating,
    "sporadic": Sporadic,
    "linear": Linear,
    "unitary": Unitary,
    "symplectic": Symplectic,
    "orthodd": OrthogonalOdd,
    "ortheven": OrthogonalEven,
    "exceptional": Exceptional,
}


def make_socle(family: str, **params) -> Socle:
    try:
        return _FAMILIES[family](**params)
    except KeyError:
        raise InvalidDescriptor(f"unknown family {family!r}") from None


# Named groups that the predicates alone cannot pin down, per socle label.
EXACT_TAGS = {
    "A6": {"S6", "PGL2(9)", "M10", "Aut(A6)"},
    "PSL2(9)": {"S6", "PGL2(9)", "M10", "Aut(A6)"},
    "PSL2(8)": {"Aut"},
    "PSL2(7)": {"Aut"},
    "PSL3(2)": {"Aut"},
    "PSL3(4)": {"PGL3(4)<f>", "PGL3(4)<g>", "Aut"},
    "PSL4(4)": {"PSL4(4)<f>", "PSL4(4)<g>", "Aut"},
    "PSU5(2)": {"Aut"},
}


def diagonal_order(socle: Socle) -> int:
    """|Inndiag(S) : S|."""
    if isinstance(socle, Linear):
        return math.gcd(socle.n, socle.q - 1)
    if isinstance(socle, Unitary):
        return math.gcd(socle.n, socle.q + 1)
    if isinstance(socle, (Symplectic, OrthogonalOdd)):
        return math.gcd(2, socle.q - 1)
    if isinstance(socle, OrthogonalEven):
        return math.gcd(4, socle.q ** (socle.n // 2) - (1 if socle.sign == "+" else -1))
    if isinstance(socle, Exceptional):
        if socle.type == "E7":
            return math.gcd(2, socle.q - 1)
        if socle.type == "E6":
            return math.gcd(3, socle.q - 1)
        if socle.type == "2E6":
            return math.gcd(3, socle.q + 1)
    return 1


def out_order(socle: Socle) -> int:
    """|Out(S)|."""
    if isinstance(socle, Alternating):
        return 4 if socle.n == 6 else 2
    if isinstance(socle, Sporadic):
        return 2 if socle.name in _SPORADIC_OUT2 else 1
    pp = _pp(socle.q)
    m, d = pp.m, diagonal_order(socle)
    if isinstance(socle, Linear):
        return d * m * (1 if socle.n == 2 else 2)
    if isinstance(socle, Unitary):
        return 2 * d * m
    if isinstance(socle, Symplectic):
        return d * m * (2 if socle.n == 4 and pp.p == 2 else 1)
    if isinstance(socle, OrthogonalOdd):
        return d * m
    if isinstance(socle, OrthogonalEven):
        lam = 3 if (socle.n, socle.sign) == (8, "+") else 1
        return 2 * lam * d * m
    t = socle.type
    if socle.tits:
        return 2
    if t in ("E8", "2F4", "2G2", "2B2"):
        return m
    if t in ("E7",):
        return d * m
    if t in ("E6", "2E6"):
        return 2 * d * m
    if t == "3D4":
        return 3 * m
    if t == "F4":
        return (2 if pp.p == 2 else 1) * m
    if t == "G2":
        return (2 if pp.p == 3 else 1) * m
    raise AssertionError(t)


def validate_outer(socle: Socle, outer: OuterProfile) -> None:
    """Reject predicate combinations no subgroup of Aut(S) can have."""
    if outer.two_divides_index and out_order(socle) % 2:
        raise InvalidDescriptor(f"|Out({socle.label})| is odd, so 2 cannot divide |G:S|")
    if outer.contains_graph_aut:
        if not (isinstance(socle, Linear) and socle.n >= 3):
            raise InvalidDescriptor("the graph-automorphism flag is only meaningful for PSL_n, n >= 3")
        if not outer.two_divides_index:
            raise InvalidDescriptor("S<g> has index 2, so a graph automorphism forces 2 | |G:S|")
    if outer.contains_inndiag:
        d = diagonal_order(socle)
        if d % 2 == 0 and not outer.two_divides_index:
            raise InvalidDescriptor(f"|Inndiag : S| = {d} is even, so Inndiag <= G forces 2 | |G:S|")
    if outer.is_exactly is not None:
        allowed = EXACT_TAGS.get(socle.label, set())
        if outer.is_exactly not in allowed:
            raise InvalidDescriptor(f"is_exactly={outer.is_exactly!r} is not a known extension of {socle.label}")


# -- canonical forms ---------------------------------------------------------------

def canonicalize(d: AlmostSimpleDescriptor) -> AlmostSimpleDescriptor:
    """Rewrite exceptional isomorphisms to one canonical socle.

    PSL2(4), PSL2(5) -> A5;  PSL2(9) -> A6;  PSL4(2) -> A8;  PSL3(2) -> PSL2(7);
    PSp4(3) -> PSU4(2);  POmega_{2k+1}(2^m) -> PSp_{2k}(2^m).
    """
    s, o = d.socle, d.outer
    if isinstance(s, Linear):
        if s.n == 2 and s.q in (4, 5):
            two = o.two_divides_index or o.contains_inndiag
            return replace(d, socle=Alternating(5), outer=replace(o, two_divides_index=two, contains_inndiag=False))
        if s.n == 2 and s.q == 9:
            return replace(d, socle=Alternating(6), outer=_a6_outer(o))
        if (s.n, s.q) == (4, 2):
            return replace(d, socle=Alternating(8), outer=replace(o, contains_graph_aut=False, contains_inndiag=False))
        if (s.n, s.q) == (3, 2):
            # The graph automorphism of PSL3(2) becomes the diagonal one of PSL2(7).
            two = o.two_divides_index or o.contains_graph_aut
            return replace(
                d,
                socle=Linear(2, 7),
                outer=replace(o, two_divides_index=two, contains_inndiag=two, contains_graph_aut=False),
            )
    if isinstance(s, Symplectic) and (s.n, s.q) == (4, 3):
        return replace(d, socle=Unitary(4, 2), outer=replace(o, contains_inndiag=False))
    if isinstance(s, OrthogonalOdd) and s.q % 2 == 0:
        return replace(d, socle=Symplectic(s.n - 1, s.q))
    return d


def _a6_outer(o: OuterProfile) -> OuterProfile:
    # PSL2(9) predicates -> A6 names.  Only the unambiguous cases translate.
    tag = o.is_exactly
    if tag is None and o.contains_inndiag:
        tag = "PGL2(9)"
    return replace(o, is_exactly=tag, contains_inndiag=False)


# -- prime spectra of socles -------------------------------------------------------

def order_factors(socle: Socle) -> list[int]:
    """Integers whose prime divisors together are pi(S).

    These are the cyclotomic-style factors of the order formula; raises
    CapExceeded when one of them leaves the 63-bit range.
    """
    if isinstance(socle, Alternating):
        return list(range(2, socle.n + 1))
    if isinstance(socle, Sporadic):
        raise ValueError("sporadic orders are not tabulated here")
    q = socle.q
    if max(_exponents(socle)) * math.log2(q) > 63:
        raise CapExceeded(f"order factors of {socle.label} leave the 63-bit range")
    if isinstance(socle, Exceptional) and socle.tits:
        return [2, 3, 5, 13]
    if isinstance(socle, Exceptional) and socle.type == "3D4":
        return [q, q**8 + q**4 + 1, q**6 - 1, q**2 - 1]
    return [q] + [_factor_value(q, e) for e in _exponents_signed(socle)]


def _exponents_signed(socle: Socle) -> list[int]:
    # q**e - 1 for e > 0, q**(-e) + 1 for e < 0; "3D4" handled as a special.
    if isinstance(socle, Linear):
        return list(range(2, socle.n + 1))
    if isinstance(socle, Unitary):
        return [i if i % 2 == 0 else -i for i in range(2, socle.n + 1)]
    if isinstance(socle, (Symplectic, OrthogonalOdd)):
        k = socle.n // 2
        return [2 * i for i in range(1, k + 1)]
    if isinstance(socle, OrthogonalEven):
        k = socle.n // 2
        return [2 * i for i in range(1, k)] + [k if socle.sign == "+" else -k]
    return {
        "E8": [2, 8, 12, 14, 18, 20, 24, 30],
        "E7": [2, 6, 8, 10, 12, 14, 18],
        "E6": [2, 5, 6, 8, 9, 12],
        "2E6": [2, -5, 6, 8, -9, 12],
        "3D4": [2, 6, 8],  # the q^8 + q^4 + 1 factor is added directly
        "F4": [2, 6, 8, 12],
        "G2": [2, 6],
        "2F4": [1, -3, 4, -6],
        "2G2": [1, -3],
        "2B2": [1, -2],
    }[socle.type]


def _exponents(socle: Socle) -> list[int]:
    return [abs(e) for e in _exponents_signed(socle)] or [1]


def _factor_value(q: int, e: int) -> int:
    return q**e - 1 if e > 0 else q ** (-e) + 1


def pi_socle(socle: Socle) -> frozenset[int]:
    """pi(S) from the order formula."""
    if isinstance(socle, Sporadic):
        if socle.name == "J2":
            return frozenset({2, 3, 5, 7})
        raise ValueError("only pi(J2) is tabulated among the sporadic groups")
    if isinstance(socle, Alternating):
        return frozenset(primes_up_to(socle.n))
    out: set[int] = set()
    for f in order_factors(socle):
        out |= prime_divisors(f)
    return frozenset(out)


# -- presets ----------------------------------------------------------------------

def _norm(name: str) -> str:
    return re.sub(r"[\s_()<>.\[\]]", "", name).lower()


def _preset_table() -> dict[str, AlmostSimpleDescriptor]:
    two = OuterProfile(two_divides_index=True)
    t = {}

    def add(name, socle, outer=OuterProfile()):
        t[_norm(name)] = AlmostSimpleDescriptor(socle, outer, name)

    for n in (9, 10, 12):
        add(f"A{n}", Alternating(n))
    for n in (5, 8):
        add(f"S{n}", Alternating(n), two)
    add("S6", Alternating(6), OuterProfile(two_divides_index=True, is_exactly="S6"))
    add("PGL2(9)", Alternating(6), OuterProfile(two_divides_index=True, is_exactly="PGL2(9)"))
    add("M10", Alternating(6), OuterProfile(two_divides_index=True, is_exactly="M10"))
    add("Aut(A6)", Alternating(6), OuterProfile(two_divides_index=True, is_exactly="Aut(A6)"))
    add("Aut(PSL2(8))", Linear(2, 8), OuterProfile(is_exactly="Aut"))
    add("Aut(PSL3(2))", Linear(3, 2), OuterProfile(two_divides_index=True, contains_graph_aut=True, is_exactly="Aut"))
    inn = dict(contains_inndiag=True, two_divides_index=True)
    add("PGL3(4)<f>", Linear(3, 4), OuterProfile(**inn, is_exactly="PGL3(4)<f>"))
    add("PGL3(4)<g>", Linear(3, 4), OuterProfile(**inn, contains_graph_aut=True, is_exactly="PGL3(4)<g>"))
    add("Aut(PSL3(4))", Linear(3, 4), OuterProfile(**inn, contains_graph_aut=True, is_exactly="Aut"))
    add("PSL4(4)<f>", Linear(4, 4), OuterProfile(two_divides_index=True, contains_inndiag=True, is_exactly="PSL4(4)<f>"))
    add(
        "PSL4(4)<g>",
        Linear(4, 4),
        OuterProfile(two_divides_index=True, contains_inndiag=True, contains_graph_aut=True, is_exactly="PSL4(4)<g>"),
    )
    add(
        "Aut(PSL4(4))",
        Linear(4, 4),
        OuterProfile(two_divides_index=True, contains_inndiag=True, contains_graph_aut=True, is_exactly="Aut"),
    )
    add("Aut(PSU5(2))", Unitary(5, 2), OuterProfile(two_divides_index=True, is_exactly="Aut"))
    add("PSU3(9)", Unitary(3, 9))
    add("PSU4(2)", Unitary(4, 2))
    add("PSp6(2)", Symplectic(6, 2))
    add("POmega8+(2)", OrthogonalEven(8, 2, "+"))
    add("3D4(2)", Exceptional("3D4", 2))
    add("J2", Sporadic("J2"))
    add("Aut(J2)", Sporadic("J2"), two)
    return t


_PRESETS: dict[str, AlmostSimpleDescriptor] | None = None
_PGL2_RE = re.compile(r"^pgl2(\d+)$")


def preset_names() -> list[str]:
    global _PRESETS
    if _PRESETS is None:
        _PRESETS = _preset_table()
    return sorted(d.preset_name for d in _PRESETS.values()) + ["PGL2(p)"]


def presets(name: str) -> AlmostSimpleDescriptor:
    """Descriptor for a named group, e.g. ``"M10"``, ``"Aut(PSL2(8))"``, ``"PGL2_7"``."""
    global _PRESETS
    if _PRESETS is None:
        _PRESETS = _preset_table()
    key = _norm(name)
    if key in _PRESETS:
        return _PRESETS[key]
    m = _PGL2_RE.match(key)
    if m:
        q = int(m.group(1))
        socle = Linear(2, q)
        odd = q % 2 == 1
        return AlmostSimpleDescriptor(
            socle, OuterProfile(two_divides_index=odd, contains_inndiag=True), f"PGL2({q})"
        )
    raise InvalidDescriptor(f"unknown preset {name!r}")
