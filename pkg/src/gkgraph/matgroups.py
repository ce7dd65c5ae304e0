"""Projective (semi)linear matrix groups over small finite fields.

Elements are triples ``(M, f, g)``: ``M`` a flat row-major tuple of field
codes normalised so its first nonzero entry is 1 (this kills scalars, so we
work inside PGL_n), ``f`` a power of the Frobenius x -> x**p and ``g`` a
0/1 flag for the inverse-transpose automorphism.  The triple acts as
``v -> M * phi(v)`` and multiplies by

    (A, f1, g1) * (B, f2, g2) = (A * phi_{f1,g1}(B), f1 + f2, g1 ^ g2).

These keys are hashable and totally ordered, which is all the enumeration
needs from a "group element key".
"""

from __future__ import annotations

import math
import random
from itertools import product
from typing import Callable, Iterable

from .fields import GF, get_field
from .numtheory import CapExceeded

DEFAULT_CAP = 10**7
DEFAULT_SEED = 20160622


class ClosureMismatch(RuntimeError):
    """Random generators failed to produce a group of the expected order."""


class MatrixAlgebra:
    """n x n matrices over a table-driven GF(q)."""

    def __init__(self, n: int, field: GF):
        if field.order > 1024:
            raise CapExceeded(f"{field} too large for table-driven matrix work")
        self.n, self.F = n, field
        q = field.order
        self.q = q
        self.mul_t = [[field.mul(a, b) for b in range(q)] for a in range(q)]
        self.add_t = [[field.add(a, b) for b in range(q)] for a in range(q)]
        self.neg_t = [field.neg(a) for a in range(q)]
        self.inv_t = [0] + [field.inv(a) for a in range(1, q)]
        self.frob_t = [field.frobenius(a) for a in range(q)]
        self.char2 = field.p == 2
        self.identity = tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    # -- plain matrix arithmetic -------------------------------------------------
    def mul(self, X: tuple, Y: tuple) -> tuple:
        n, M = self.n, self.mul_t
        out = []
        if self.char2:
            for i in range(0, n * n, n):
                for j in range(n):
                    s = 0
                    for k in range(n):
                        x = X[i + k]
                        if x:
                            s ^= M[x][Y[k * n + j]]
                    out.append(s)
        else:
            A = self.add_t
            for i in range(0, n * n, n):
                for j in range(n):
                    s = 0
                    for k in range(n):
                        x = X[i + k]
                        if x:
                            s = A[s][M[x][Y[k * n + j]]]
                    out.append(s)
        return tuple(out)

    def scale(self, c: int, X: tuple) -> tuple:
        row = self.mul_t[c]
        return tuple(row[x] for x in X)

    def normalize(self, X: tuple) -> tuple:
        for x in X:
            if x:
                if x == 1:
                    return X
                return self.scale(self.inv_t[x], X)
        raise ZeroDivisionError("zero matrix")

    def transpose(self, X: tuple) -> tuple:
        n = self.n
        return tuple(X[j * n + i] for i in range(n) for j in range(n))

    def frob(self, X: tuple, times: int) -> tuple:
        if times == 0:
            return X
        t = self.frob_t
        for _ in range(times):
            X = tuple(t[x] for x in X)
        return X

    def det(self, X: tuple) -> int:
        n = self.n
        if n == 2:
            return self.add_t[self.mul_t[X[0]][X[3]]][self.neg_t[self.mul_t[X[1]][X[2]]]]
        rows = [list(X[i * n : (i + 1) * n]) for i in range(n)]
        M, A, neg, inv = self.mul_t, self.add_t, self.neg_t, self.inv_t
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = neg[d]
            d = M[d][rows[c][c]]
            ic = inv[rows[c][c]]
            for r in range(c + 1, n):
                if rows[r][c]:
                    f = neg[M[rows[r][c]][ic]]
                    rows[r] = [A[a][M[f][b]] for a, b in zip(rows[r], rows[c])]
        return d

    def inverse(self, X: tuple) -> tuple:
        n = self.n
        M, A, neg, inv = self.mul_t, self.add_t, self.neg_t, self.inv_t
        rows = [list(X[i * n : (i + 1) * n]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            rows[c], rows[piv] = rows[piv], rows[c]
            ic = inv[rows[c][c]]
            rows[c] = [M[ic][a] for a in rows[c]]
            for r in range(n):
                if r != c and rows[r][c]:
                    f = neg[rows[r][c]]
                    rows[r] = [A[a][M[f][b]] for a, b in zip(rows[r], rows[c])]
        return tuple(x for row in rows for x in row[n:])

    # -- semilinear elements ----------------------------------------------------
    def apply_aut(self, X: tuple, f: int, g: int) -> tuple:
        X = self.frob(X, f)
        if g:
            X = self.transpose(self.inverse(X))
        return X


class SemilinearGroup:
    """Multiplication law on (M, f, g) triples with Frobenius powers mod k."""

    def __init__(self, alg: MatrixAlgebra):
        self.alg = alg
        self.k = alg.F.k
        self.identity = (alg.identity, 0, 0)

    def mul(self, x: tuple, y: tuple) -> tuple:
        A, f1, g1 = x
        B, f2, g2 = y
        alg = self.alg
        if f1 or g1:
            B = alg.apply_aut(B, f1, g1)
        return (alg.normalize(alg.mul(A, B)), (f1 + f2) % self.k, g1 ^ g2)

    def element(self, M: tuple, f: int = 0, g: int = 0) -> tuple:
        return (self.alg.normalize(M), f % self.k, g)


# -- order formulas -------------------------------------------------------------

def order_sl(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - 1
    return out


def order_su(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - (-1) ** i
    return out


def order_sp(n: int, q: int) -> int:
    k = n // 2
    out = q ** (k * k)
    for i in range(1, k + 1):
        out *= q ** (2 * i) - 1
    return out


def projective_order(kind: str, n: int, q: int) -> int:
    """Order of PSL/PGL/PSU/PGU/PSp_n(q)."""
    if kind == "PSL":
        return order_sl(n, q) // math.gcd(n, q - 1)
    if kind == "PGL":
        return order_sl(n, q)
    if kind == "PSU":
        return order_su(n, q) // math.gcd(n, q + 1)
    if kind == "PGU":
        return order_su(n, q)
    if kind == "PSp":
        return order_sp(n, q) // math.gcd(2, q - 1)
    raise ValueError(kind)


# -- enumeration -----------------------------------------------------------------

def closure(gens: Iterable[tuple], mul: Callable, identity: tuple, limit: int) -> list[tuple]:
    """All products of gens (right multiplication BFS); stops past ``limit``."""
    gens = list(gens)
    seen = {identity}
    out = [identity]
    i = 0
    while i < len(out):
        x = out[i]
        i += 1
        for s in gens:
            y = mul(x, s)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > limit:
                    return out
    return out


def scan_ambient(alg: MatrixAlgebra, member: Callable[[tuple], bool]) -> list[tuple]:
    """Normalised keys of every ambient matrix satisfying ``member``."""
    seen = set()
    for X in product(range(alg.q), repeat=alg.n * alg.n):
        if member(X):
            seen.add(alg.normalize(X))
    return sorted(seen)


class ClassicalModel:
    """Concrete matrix model of one of SL/GL/SU/GU/Sp_n over a small field.

    ``kind`` names the projective image: PSL, PGL, PSU, PGU or PSp.  For the
    unitary kinds the matrix field is GF(q**2) with the identity Hermitian
    form.
    """

    def __init__(self, kind: str, n: int, q: int):
        from .numtheory import PrimePower

        pp = PrimePower.from_int(q)
        self.kind, self.n, self.q, self.p, self.m = kind, n, q, pp.p, pp.m
        deg = 2 * pp.m if kind in ("PSU", "PGU") else pp.m
        self.field = get_field(pp.p, deg)
        self.alg = MatrixAlgebra(n, self.field)
        self.order = projective_order(kind, n, q)
        if kind == "PSp":
            k = n // 2
            neg1 = self.alg.neg_t[1]
            self.J = tuple(
                (1 if j == i + k else neg1 if i == j + k else 0) for i in range(n) for j in range(n)
            )

    # -- membership (used by the ambient scan) --
    def member(self, X: tuple) -> bool:
        alg = self.alg
        if self.kind == "PSL":
            return alg.det(X) == 1
        if self.kind == "PGL":
            return alg.det(X) != 0
        if self.kind in ("PSU", "PGU"):
            d = alg.det(X)
            if d == 0 or (self.kind == "PSU" and d != 1):
                return False
            Xs = alg.transpose(alg.frob(X, self.m))
            return alg.mul(Xs, X) == alg.identity
        if self.kind == "PSp":
            return alg.mul(alg.mul(alg.transpose(X), self.J), X) == self.J
        raise ValueError(self.kind)

    def ambient_size(self) -> int:
        return self.field.order ** (self.n * self.n)

    # -- random generators for closure --
    def random_generator(self, rng: random.Random) -> tuple:
        alg, F, n = self.alg, self.field, self.n
        Q = F.order
        if self.kind in ("PSL", "PGL"):
            while True:
                X = tuple(rng.randrange(Q) for _ in range(n * n))
                d = alg.det(X)
                if d and (self.kind == "PGL" or d == 1):
                    return X
        if self.kind == "PSp":
            while True:
                v = [rng.randrange(Q) for _ in range(n)]
                if any(v):
                    break
            Jv = [0] * n
            for i in range(n):
                s = 0
                for j in range(n):
                    s = alg.add_t[s][alg.mul_t[self.J[i * n + j]][v[j]]]
                Jv[i] = s
            a = rng.randrange(1, Q)
            return tuple(
                alg.add_t[1 if i == j else 0][alg.mul_t[a][alg.mul_t[v[i]][Jv[j]]]]
                for i in range(n)
                for j in range(n)
            )
        if self.kind in ("PSU", "PGU"):
            return self._random_unitary_transvection(rng)
        raise ValueError(self.kind)

    def _conj(self, a: int) -> int:
        return self.field.frobenius(a, self.m)

    def _random_unitary_transvection(self, rng: random.Random) -> tuple:
        alg, F, n, q = self.alg, self.field, self.n, self.q
        Q = F.order
        while True:
            v = [rng.randrange(Q) for _ in range(n)]
            if not any(v):
                continue
            norm = 0
            for x in v:
                norm = F.add(norm, F.pow(x, q + 1))
            if norm == 0:
                break
        # a + conj(a) = 0, a != 0
        trace_zero = [a for a in range(1, Q) if F.add(a, self._conj(a)) == 0]
        a = rng.choice(trace_zero)
        vbar = [self._conj(x) for x in v]
        return tuple(
            F.add(1 if i == j else 0, F.mul(a, F.mul(v[i], vbar[j]))) for i in range(n) for j in range(n)
        )

    def extra_generators(self) -> list[tuple]:
        """Generators needed beyond the random ones (the GU determinant part)."""
        if self.kind != "PGU":
            return []
        F = self.field
        lam = F.pow(F.primitive_element(), (F.order - 1) // (self.q + 1))
        return [tuple(lam if i == j == 0 else 1 if i == j else 0 for i in range(self.n) for j in range(self.n))]

    def elements(self, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED, max_gens: int = 8) -> list[tuple]:
        """Normalised matrix keys of the whole projective group."""
        if self.order > cap:
            raise CapExceeded(f"|{self.kind}_{self.n}({self.q})| = {self.order} exceeds cap {cap}")
        if self.ambient_size() <= cap:
            elems = scan_ambient(self.alg, self.member)
            if len(elems) != self.order:
                raise ClosureMismatch(f"ambient scan found {len(elems)} elements, expected {self.order}")
            return elems
        rng = random.Random(seed)
        gens = [self.alg.normalize(X) for X in self.extra_generators()]
        alg = self.alg
        mul = lambda x, y: alg.normalize(alg.mul(x, y))  # noqa: E731
        while len(gens) < max_gens:
            gens.append(alg.normalize(self.random_generator(rng)))
            if len(gens) < 2:
                continue
            elems = closure(gens, mul, alg.identity, self.order)
            if len(elems) == self.order:
                return elems
            if len(elems) > self.order:
                break
        raise ClosureMismatch(
            f"could not generate {self.kind}_{self.n}({self.q}) of order {self.order} from random elements"
        )


def element_orders(elems: list, mul: Callable, identity) -> list[int]:
    """Order of every element, walking each cyclic subgroup once."""
    index = {x: i for i, x in enumerate(elems)}
    orders = [0] * len(elems)
    for i, g in enumerate(elems):
        if orders[i]:
            continue
        powers = [i]
        x = g
        while x != identity:
            x = mul(x, g)
            powers.append(index[x])
        n = len(powers) if g != identity else 1
        if g == identity:
            orders[i] = 1
            continue
        for k, j in enumerate(powers, start=1):
            if not orders[j]:
                orders[j] = n // math.gcd(n, k)
    return orders
