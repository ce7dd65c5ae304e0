"""Finite fields GF(p**k) in a polynomial basis.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``x**i`` modulo the field's irreducible polynomial.  The
irreducible is the least monic degree-k polynomial in that same encoding, so
every field (and every element code) is reproducible run to run.

Small fields get lookup tables; larger ones fall back to polynomial
arithmetic, which is slow but only used for a handful of operations (finding
an element of given order, for instance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .numtheory import factorize, is_prime

MAX_FIELD_ORDER = 2**32
ADD_TABLE_LIMIT = 1024
LOG_TABLE_LIMIT = 2**22


# -- polynomials over GF(p), lists of coefficients low -> high ---------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv_lead = pow(g[-1], -1, p)
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv_lead % p
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return _trim(f[:dg] if len(f) > dg else f)


def _pmulmod(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(_trim(out), g, p)


def _ppowmod(a: list[int], e: int, g: list[int], p: int) -> list[int]:
    result, base = [1], _pmod(a, g, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, g, p)
        base = _pmulmod(base, base, g, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial f over GF(p)."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**k, f, p), x, p):
        return False
    for r in factorize(k).primes:
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    for code in range(p**k):
        f = [(code // p**i) % p for i in range(k)] + [1]
        if f[0] == 0 and k > 1:
            continue
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with p**k elements.  Use :func:`get_field` to share instances."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p) or k < 1:
            raise ValueError(f"GF({p}^{k}) is not a field")
        if p**k > MAX_FIELD_ORDER:
            raise OverflowError(f"GF({p}^{k}) exceeds the 2**32 field cap")
        self.p, self.k, self.order = p, k, p**k
        self.modulus = least_irreducible(p, k)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    # -- encoding ---------------------------------------------------------
    def coords(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def from_coords(self, c) -> int:
        return sum(int(x) % self.p * self.p**i for i, x in enumerate(c))

    def element(self, a: int) -> "FieldElement":
        return FieldElement(self, a % self.order)

    # -- tables -------------------------------------------------------------
    @cached_property
    def _addt(self) -> list[list[int]] | None:
        if self.order > ADD_TABLE_LIMIT:
            return None
        return [[self._add_slow(a, b) for b in range(self.order)] for a in range(self.order)]

    @cached_property
    def _logs(self) -> tuple[list[int], list[int]] | None:
        """(exp, log) tables for a fixed primitive element, or None if too big."""
        if self.order > LOG_TABLE_LIMIT:
            return None
        g = self.primitive_element()
        n = self.order - 1
        if self.k == 1:
            exp = [pow(g, i, self.p) for i in range(n)]
        else:
            exp = self._power_table(g, n)
        log = [0] * self.order
        for i, x in enumerate(exp):
            log[x] = i
        exp = exp + exp
        return exp, log

    def _power_table(self, g: int, n: int) -> list[int]:
        """[g**0, ..., g**(n-1)] as codes.

        Blocks of length B are mapped to the next block by multiplication
        with g**B, a GF(p)-linear map applied to the whole block at once.
        """
        B = max(1, math.isqrt(n))
        first, x = [], 1
        for _ in range(B):
            first.append(x)
            x = self._mul_slow(x, g)
        # Column j holds the coordinates of g**B * X**j.
        M = np.array([self.coords(self._mul_slow(x, self.p**j)) for j in range(self.k)], dtype=np.int64).T
        weights = np.array([self.p**i for i in range(self.k)], dtype=np.int64)
        block = np.array([self.coords(a) for a in first], dtype=np.int64)
        out = []
        while len(out) < n:
            out.extend((block @ weights).tolist())
            block = (block @ M.T) % self.p
        return out[:n]

    # -- arithmetic ---------------------------------------------------------
    def _add_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return self.from_coords(x + y for x, y in zip(self.coords(a), self.coords(b)))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        f = list(self.modulus)
        prod = _pmulmod(_trim(self.coords(a)), _trim(self.coords(b)), f, self.p)
        return self.from_coords(prod)

    def add(self, a: int, b: int) -> int:
        t = self._addt
        return t[a][b] if t is not None else self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coords(-c for c in self.coords(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        logs = self._logs if self.order <= LOG_TABLE_LIMIT else None
        if logs is None:
            return self._mul_slow(a, b)
        exp, log = logs
        return exp[log[a] + log[b]]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, times: int = 1) -> int:
        """a -> a**(p**times)."""
        return self.pow(a, self.p ** (times % self.k))

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.order - 1
        order = n
        for r, e in factorize(n) if n > 1 else ():
            for _ in range(e):
                if self.pow(a, order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def primitive_element(self) -> int:
        """The least element code generating the multiplicative group."""
        return self._primitive

    @cached_property
    def _primitive(self) -> int:
        if self.order == 2:
            return 1
        n = self.order - 1
        primes = factorize(n).primes
        for a in range(2 if self.order > 2 else 1, self.order):
            if all(self._pow_slow(a, n // r) != 1 for r in primes):
                return a
        raise AssertionError("multiplicative group is not cyclic")

    def _pow_slow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def elements_of_order(self, n: int, limit: int = 2**20):
        """Element codes of exact multiplicative order n, ascending.

        Enumerates the unique cyclic subgroup of order n; only feasible while
        n <= limit.
        """
        if (self.order - 1) % n:
            return []
        if n > limit:
            raise OverflowError(f"subgroup of order {n} too large to scan")
        g = self.pow(self.primitive_element(), (self.order - 1) // n)
        out, x = [], 1
        for i in range(n):
            if _gcd(i, n) == 1:
                out.append(x)
            x = self.mul(x, g)
        return sorted(out)

    # -- vectorised helpers (numpy) ---------------------------------------
    @cached_property
    def exp_log_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        exp, log = self._logs
        return np.array(exp, dtype=np.int64), np.array(log, dtype=np.int64)

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.k):
            out += ((a // scale) % self.p + (b // scale) % self.p) % self.p * scale
            scale *= self.p
        return out

    def scale_arrays(self, a: np.ndarray, log_c: int) -> np.ndarray:
        """Multiply every entry of a by the element exp[log_c]."""
        exp, log = self.exp_log_arrays
        n = self.order - 1
        return np.where(a == 0, 0, exp[(log[a] + log_c) % n])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1) -> GF:
    return GF(p, k)


@dataclass(frozen=True)
class FieldElement:
    field: GF
    value: int

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, times: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, times))

    @property
    def order(self) -> int:
        return self.field.mult_order(self.value)

    @property
    def coordinates(self) -> list[int]:
        return self.field.coords(self.value)
