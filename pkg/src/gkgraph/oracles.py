"""Brute-force element-order spectra.

These are the ground truth the classifier and realizer are tested against:
cycle types for alternating and symmetric groups, explicit matrix
enumeration for small classical groups (optionally extended by field and
graph automorphisms), and direct enumeration of the metabelian blueprint
groups built by :mod:`gkgraph.realizer`.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .fields import get_field
from .matgroups import (
    DEFAULT_CAP,
    DEFAULT_SEED,
    ClassicalModel,
    ClosureMismatch,
    SemilinearGroup,
    element_orders,
)
from .numtheory import CapExceeded, PrimePower, divisors, lcm, prime_power
from .prime_graph import OrderSet, PrimeGraph, graph_from_orders

__all__ = [
    "SpectrumResult",
    "Extension",
    "ClosureMismatch",
    "spectrum_alternating",
    "spectrum_classical",
    "spectrum_named",
    "spectrum_blueprint",
    "semisimple_orders_psu3",
]


@dataclass(frozen=True)
class SpectrumResult:
    group_name: str
    group_order: int
    omega: OrderSet

    def __post_init__(self):
        if not self.omega.is_divisor_closed():
            raise AssertionError(f"spectrum of {self.group_name} is not divisor-closed")
        if max(self.omega.orders) > self.group_order:
            raise AssertionError(f"element order above |{self.group_name}|")

    @property
    def graph(self) -> PrimeGraph:
        return graph_from_orders(self.omega)

    def to_dict(self) -> dict:
        return {"name": self.group_name, "order": self.group_order, "omega": self.omega.sorted()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


# -- alternating and symmetric groups ----------------------------------------

def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def spectrum_alternating(n: int, symmetric: bool = False) -> SpectrumResult:
    """omega(A_n) or omega(S_n) from cycle types; 5 <= n <= 40."""
    if not 5 <= n <= 40:
        raise ValueError("n must lie in [5, 40]")
    orders = set()
    for part in _partitions(n):
        if symmetric or (n - len(part)) % 2 == 0:
            orders.add(lcm(*part))
    size = math.factorial(n) // (1 if symmetric else 2)
    return SpectrumResult(f"{'S' if symmetric else 'A'}{n}", size, OrderSet(frozenset(orders)))


# -- classical groups -----------------------------------------------------------

@dataclass(frozen=True)
class Extension:
    """Outer automorphisms adjoined to a projective classical group.

    ``field_step`` = s adjoins the field automorphism x -> x**(p**s) of the
    matrix field (0 for none); ``graph`` adjoins inverse-transpose.
    """

    field_step: int = 0
    graph: bool = False


_FAMILY_RE = re.compile(r"^(PSL|PGL|PSU|PGU|PSp)(\d+)$")


def _parse_family(family: str) -> tuple[str, int]:
    m = _FAMILY_RE.match(family.replace("_", ""))
    if not m:
        raise ValueError(f"unknown family {family!r}; expected e.g. PSL2, PGL2, PSU3, PSp4")
    kind, n = m.group(1), int(m.group(2))
    if n < 2 or (kind == "PSp" and n % 2):
        raise ValueError(f"bad dimension in {family!r}")
    return kind, n


def _field_auts(model: ClassicalModel, ext: Extension) -> list[int]:
    k = model.field.k
    s = ext.field_step
    if s == 0:
        return [0]
    if k % s:
        raise ValueError(f"field step {s} does not divide the field degree {k}")
    return list(range(0, k, s))


def spectrum_classical(
    family: str,
    q: int | PrimePower,
    extension: Extension | None = None,
    cap: int = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
) -> SpectrumResult:
    """omega of a small classical group, by enumerating matrices.

    ``family`` is one of PSL_n, PGL_n, PSU_n, PGU_n, PSp_n, written like
    ``"PSL2"``.  The unitary groups live over GF(q**2).
    """
    q = q.q if isinstance(q, PrimePower) else q
    kind, n = _parse_family(family)
    ext = extension or Extension()
    if ext.graph and n == 2:
        raise ValueError("inverse-transpose is inner for n = 2")
    model = ClassicalModel(kind, n, q)
    auts = _field_auts(model, ext)
    flags = [0, 1] if ext.graph else [0]
    total = model.order * len(auts) * len(flags)
    if total > cap:
        raise CapExceeded(f"group order {total} exceeds cap {cap}")
    base = model.elements(cap=cap, seed=seed)
    name = f"{kind}{n}({q})"
    if len(auts) > 1:
        name += f".<field^{ext.field_step}>"
    if ext.graph:
        name += ".<graph>"
    return _semilinear_spectrum(model, base, auts, flags, total, name)


def _semilinear_spectrum(model, base, auts, flags, expected, name, keep=None) -> SpectrumResult:
    grp = SemilinearGroup(model.alg)
    elems = [(A, f, g) for A in base for f in auts for g in flags]
    if keep is not None:
        elems = [x for x in elems if keep(x)]
    if len(elems) != expected:
        raise ClosureMismatch(f"{name}: {len(elems)} elements, expected {expected}")
    orders = element_orders(elems, grp.mul, grp.identity)
    return SpectrumResult(name, len(elems), OrderSet(frozenset(orders)))


def _is_square_class(model: ClassicalModel, A: tuple) -> bool:
    F = model.field
    d = model.alg.det(A)
    return F.pow(d, (F.order - 1) // 2) == 1


def spectrum_named(name: str, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED) -> SpectrumResult:
    """Spectra of the A6 extensions that are not plain semilinear groups.

    Supported: ``"M10"`` (PSL2(9) extended by the product of a diagonal and
    a field automorphism), ``"S6"``, ``"PGL2(9)"`` and ``"Aut(A6)"``.
    """
    key = name.replace(" ", "").lower()
    model = ClassicalModel("PGL", 2, 9)
    base = model.elements(cap=cap, seed=seed)
    if key == "m10":
        # Inner-diagonal part lies in PSL2(9) exactly when det is a square.
        keep = lambda x: _is_square_class(model, x[0]) == (x[1] == 0)  # noqa: E731
        return _semilinear_spectrum(model, base, [0, 1], [0], 720, "M10", keep)
    if key == "s6":
        keep = lambda x: _is_square_class(model, x[0])  # noqa: E731
        return _semilinear_spectrum(model, base, [0, 1], [0], 720, "S6", keep)
    if key == "pgl2(9)":
        return _semilinear_spectrum(model, base, [0], [0], 720, "PGL2(9)")
    if key == "aut(a6)":
        return _semilinear_spectrum(model, base, [0, 1], [0], 1440, "Aut(A6)")
    raise ValueError(f"unknown group {name!r}")


def semisimple_orders_psu3(q: int) -> frozenset[int]:
    """Orders of the semisimple elements of PSU3(q), from its maximal tori.

    Every semisimple element of SU3(q) is conjugate into one of three tori,
    written here by their eigenvalue triples inside GF(q**6)*:
    diag(a, b, 1/ab) with a, b in mu_{q+1}; (l, l**-q, l**(q-1)) with l in
    GF(q**2)*; and (u, u**(q**2), u**(q**4)) with u in mu_{q**2-q+1}.
    Reaches q far beyond matrix enumeration, since only ~q**2 torus
    elements are visited.
    """
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    N = q**6 - 1

    def proj_order(v1: int, v2: int, v3: int) -> int:
        # t**k is scalar iff k kills the eigenvalue differences.
        return N // math.gcd(N, v1 - v3, v2 - v3)

    orders = set()
    s = N // (q + 1)
    for i in range(q + 1):
        for j in range(q + 1):
            orders.add(proj_order(s * i, s * j, -s * (i + j)))
    s = N // (q * q - 1)
    for i in range(q * q - 1):
        v = s * i
        orders.add(proj_order(v, -q * v, (q - 1) * v))
    s = N // (q * q - q + 1)
    for i in range(q * q - q + 1):
        v = s * i
        orders.add(proj_order(v, v * q * q, v * q**4))
    return frozenset(orders)


# -- blueprint groups ------------------------------------------------------------

def _tower_power_nonzero(field, x: int, t: int, N: int, d: int) -> tuple[bool, bool]:
    """Which of {zero, nonzero} occur as g**d over g = (v, t), v in the field.

    g**d is computed for all v at once by square-and-multiply in the
    semidirect product, where (a, s)(b, u) = (a + x**s * b, s + u).
    """
    exp, log = field.exp_log_arrays
    logx = int(log[x])
    n = field.order - 1
    v = np.arange(field.order, dtype=np.int64)
    res_a = np.zeros_like(v)
    res_s = 0
    base_a, base_s = v, t
    e = d
    while e:
        if e & 1:
            res_a = field.add_arrays(res_a, field.scale_arrays(base_a, (logx * res_s) % n))
            res_s = (res_s + base_s) % N
        base_a = field.add_arrays(base_a, field.scale_arrays(base_a, (logx * base_s) % n))
        base_s = (base_s * 2) % N
        e >>= 1
    if res_s != 0:
        raise AssertionError("complement part did not vanish")
    nz = res_a != 0
    return bool((~nz).any()), bool(nz.any())


def spectrum_blueprint(b, cap: int = DEFAULT_CAP) -> SpectrumResult:
    """omega of F x| C for a realizer blueprint.

    For g = (v, t) with t of order d in C, g**d lies in F and ord(g) =
    d * ord(g**d).  Because F is a direct sum of the tower fields and C acts
    on each separately, every combination of per-tower outcomes occurs, so
    the enumeration over all v factors tower by tower.

    Only t dividing |C| is visited: for u coprime to |H| the power map
    g -> g**u permutes H, keeps orders, and carries the coset at t onto the
    one at t*u, and every unit mod |C| has such a representative u.
    """
    from .realizer import blueprint_order

    size = blueprint_order(b)
    if size > cap:
        raise CapExceeded(f"blueprint order {size} exceeds cap {cap}")
    N = reduce(lambda a, c: a * c, b.pi2, 1)
    fields = []
    for t in b.towers:
        if t.x is None:
            raise CapExceeded(f"tower over GF({t.p}^{t.m}) has no concrete generator")
        fields.append(get_field(t.p, t.m))
    orders = set()
    for t in divisors(N):
        t %= N
        d = N // math.gcd(N, t)
        options = [{1}]
        for tw, F in zip(b.towers, fields):
            zero, nonzero = _tower_power_nonzero(F, tw.x, t, N, d)
            opts = set()
            if zero:
                opts.add(1)
            if nonzero:
                opts.add(tw.p)
            options.append(opts)
        prods = {1}
        for opts in options:
            prods = {a * c for a in prods for c in opts}
        orders.update(d * a for a in prods)
    return SpectrumResult(_blueprint_name(b), size, OrderSet(frozenset(orders)))


def _blueprint_name(b) -> str:
    towers = " + ".join(f"GF({t.p}^{t.m})" for t in b.towers) or "1"
    return f"({towers}) x| C{reduce(lambda a, c: a * c, b.pi2, 1)}"
