"""Exact integer machinery for prime graphs.

Everything here works on Python ints but refuses values above the 63-bit cap
(``MAX_INT``); callers get a :class:`CapExceeded` instead of a silently huge
computation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

MAX_INT = 2**63 - 1
TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin bases, valid for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class CapExceeded(ValueError):
    """An intermediate value left the supported 63-bit range."""


def _check_range(n: int, what: str = "value") -> None:
    if n > MAX_INT:
        raise CapExceeded(f"{what} {n} exceeds 2**63 - 1")


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = _small_primes(TRIAL_LIMIT)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int, rng: random.Random) -> int:
    # Brent's variant; n is an odd composite without factors below TRIAL_LIMIT.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.factors)

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of 1 <= n <= 2**63 - 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n!r}")
    _check_range(n)
    counts: dict[int, int] = {}
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    if rest > 1:
        # Seeded so repeated calls are reproducible; the result does not
        # depend on the seed anyway.
        rng = random.Random(rest)
        stack = [rest]
        while stack:
            m = stack.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _rho(m, rng)
            stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(counts.items())))


def prime_divisors(n: int) -> frozenset[int]:
    """pi(n): the set of primes dividing n."""
    return factorize(n).primes


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


@dataclass(frozen=True)
class PrimePower:
    p: int
    m: int

    @property
    def q(self) -> int:
        return self.p**self.m

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        return pp


def prime_power(q: int) -> PrimePower | None:
    """Write q = p**m, or return None when q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q).factors
    if len(f) != 1:
        return None
    return PrimePower(f[0][0], f[0][1])


def mult_order(q: int, r: int) -> int:
    """e(r, q): multiplicative order of q modulo the prime r.

    For r = 2 the convention is e(2, q) = 1 when q = 1 (mod 4) and 2 otherwise.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if r == 2:
        if q % 2 == 0:
            raise ValueError("e(2, q) needs q odd")
        return 1 if q % 4 == 1 else 2
    if q % r == 0:
        raise ValueError(f"gcd({q}, {r}) != 1")
    order = r - 1
    for p, e in factorize(r - 1):
        for _ in range(e):
            if pow(q, order // p, r) == 1:
                order //= p
            else:
                break
    return order


def primitive_prime_divisors(q: int, m: int) -> frozenset[int]:
    """R_m(q): primes r with e(r, q) = m."""
    if q < 2 or m < 1:
        raise ValueError("need q >= 2 and m >= 1")
    if m * math.log2(q) > 63:
        raise CapExceeded(f"{q}**{m} exceeds 2**63 - 1")
    value = q**m
    _check_range(value, f"{q}**{m}")
    return frozenset(r for r in prime_divisors(value - 1) if mult_order(q, r) == m)


def r_part(x: int, r: int) -> int:
    """(x)_r, the largest power of r dividing x."""
    if x < 1:
        raise ValueError("x must be positive")
    out = 1
    while x % r == 0:
        x //= r
        out *= r
    return out


def is_power_of_two(x: int) -> bool:
    return x >= 1 and x & (x - 1) == 0


@dataclass(frozen=True)
class FermatMersenne:
    is_fermat: bool
    is_mersenne: bool


def fermat_mersenne(p: int) -> FermatMersenne:
    """Whether the prime p is of the form 2**k + 1 and/or 2**k - 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FermatMersenne(is_power_of_two(p - 1), is_power_of_two(p + 1))


def gerono_solutions(p: int, q: int) -> frozenset[tuple[int, int]]:
    """All (a, b) >= 1 with p**a - q**b = 1 and p**a <= 2**63 - 1.

    Only three shapes can occur: (p**a, q**b) = (9, 8), a = 1 with
    q**b = p - 1, or b = 1 with p**a = q + 1.
    """
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError("need two distinct primes")
    out = set()
    if (p, q) == (3, 2):
        out.add((2, 3))
    # a = 1: p - 1 must be a power of q.
    b = _log_exact(p - 1, q)
    if b:
        out.add((1, b))
    # b = 1: q + 1 must be a power of p.
    a = _log_exact(q + 1, p)
    if a and p**a <= MAX_INT:
        out.add((a, 1))
    return frozenset(out)


def _log_exact(n: int, base: int) -> int | None:
    if n < base:
        return None
    k = 0
    while n % base == 0:
        n //= base
        k += 1
    return k if n == 1 else None


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def primes_up_to(n: int) -> list[int]:
    if n <= TRIAL_LIMIT:
        return [p for p in _SMALL_PRIMES if p <= n]
    return _small_primes(n)
