import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gkgraph.numtheory import (
    MAX_INT,
    CapExceeded,
    factorize,
    fermat_mersenne,
    gerono_solutions,
    is_power_of_two,
    is_prime,
    mult_order,
    prime_power,
    primes_up_to,
    primitive_prime_divisors,
    r_part,
)

SMALL_PRIMES = primes_up_to(1000)


# -- factorization -------------------------------------------------------------------

def test_factorize_examples():
    assert factorize(1).factors == ()
    assert dict(factorize(127).factors) == {127: 1}
    assert dict(factorize(16777215).factors) == {3: 2, 5: 1, 7: 1, 13: 1, 17: 1, 241: 1}


@pytest.mark.parametrize("bad", [0, -5, MAX_INT + 1])
def test_factorize_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        factorize(bad)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=MAX_INT))
def test_factorize_matches_sympy(n):
    f = factorize(n)
    assert f.recompose() == n
    assert dict(f.factors) == sympy.factorint(n)
    ps = [p for p, _ in f.factors]
    assert ps == sorted(set(ps))


def test_factorize_semiprime_with_large_factors():
    # Two primes above the trial-division bound force the rho path.
    p, q = 1000003, 1000033
    assert dict(factorize(p * q).factors) == {p: 1, q: 1}
    assert dict(factorize(2**61 - 1).factors) == {2**61 - 1: 1}


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=MAX_INT))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_on_strong_pseudoprimes():
    for n in (2047, 3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051):
        assert is_prime(n) == sympy.isprime(n)


# -- multiplicative order -------------------------------------------------------------

def test_mult_order_examples():
    assert mult_order(2, 3) == 2
    assert mult_order(17, 2) == 1
    assert mult_order(7, 2) == 2


def test_mult_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        mult_order(6, 3)
    with pytest.raises(ValueError):
        mult_order(4, 2)


@given(st.integers(min_value=2, max_value=10**12), st.sampled_from(SMALL_PRIMES[1:]))
def test_mult_order_matches_sympy(q, r):
    if q % r == 0:
        return
    assert mult_order(q, r) == sympy.n_order(q, r)


@given(st.integers(min_value=1, max_value=10**9))
def test_two_convention(k):
    q = 2 * k + 1
    assert mult_order(q, 2) == (1 if q % 4 == 1 else 2)


# -- primitive prime divisors ------------------------------------------------------------

def test_ppd_examples():
    assert primitive_prime_divisors(2, 6) == frozenset()
    assert primitive_prime_divisors(2, 1) == frozenset()
    assert 241 in primitive_prime_divisors(4, 12)
    assert primitive_prime_divisors(2, 2) == {3}


def test_ppd_overflow_is_reported():
    with pytest.raises(CapExceeded):
        primitive_prime_divisors(2, 64)
    with pytest.raises(CapExceeded):
        primitive_prime_divisors(10**10, 2)


def _ppd_reference(q, m):
    if m == 1:
        # e(2, q) = 1 only for q = 1 mod 4, so 2 lies in R_1(q) exactly then.
        ps = sympy.primefactors(q - 1)
        return {r for r in ps if r != 2 or q % 4 == 1}
    out = set()
    for r in sympy.primefactors(q**m - 1):
        if r == 2:
            if m == 2 and q % 4 == 3:
                out.add(2)
            continue
        if sympy.n_order(q, r) == m:
            out.add(r)
    return out


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=200), st.integers(min_value=1, max_value=24))
def test_ppd_matches_reference(q, m):
    if q**m > MAX_INT:
        return
    assert primitive_prime_divisors(q, m) == _ppd_reference(q, m)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=60))
def test_ppd_sets_are_disjoint_and_avoid_q(q):
    sets = []
    for m in range(1, 40):
        if q**m > MAX_INT:
            break
        sets.append(primitive_prime_divisors(q, m))
    for a, b in itertools.combinations(sets, 2):
        assert not a & b
    for s in sets:
        assert all(q % r for r in s)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=100), st.integers(min_value=1, max_value=20))
def test_ppd_order_property(q, m):
    if q**m > MAX_INT:
        return
    for r in primitive_prime_divisors(q, m):
        if r == 2:
            continue
        assert pow(q, m, r) == 1
        assert all(pow(q, d, r) != 1 for d in sympy.divisors(m) if d < m)


# -- small helpers -------------------------------------------------------------------------

@pytest.mark.parametrize("x,r,want", [(126, 3, 9), (6, 3, 3), (5, 3, 1), (1, 2, 1), (96, 2, 32)])
def test_r_part(x, r, want):
    assert r_part(x, r) == want


def test_power_of_two():
    assert [x for x in range(1, 70) if is_power_of_two(x)] == [1, 2, 4, 8, 16, 32, 64]


def test_fermat_mersenne():
    assert fermat_mersenne(17).is_fermat and not fermat_mersenne(17).is_mersenne
    assert fermat_mersenne(127).is_mersenne and not fermat_mersenne(127).is_fermat
    fm = fermat_mersenne(11)
    assert not fm.is_fermat and not fm.is_mersenne
    assert fermat_mersenne(3).is_fermat and fermat_mersenne(3).is_mersenne
    with pytest.raises(ValueError):
        fermat_mersenne(9)
    fermat = [p for p in SMALL_PRIMES if fermat_mersenne(p).is_fermat]
    mersenne = [p for p in SMALL_PRIMES if fermat_mersenne(p).is_mersenne]
    # The predicate is literal: 2 - 1 = 2**0 counts.
    assert fermat == [2, 3, 5, 17, 257]
    assert mersenne == [3, 7, 31, 127]


def test_prime_power():
    pp = prime_power(343)
    assert (pp.p, pp.m, pp.q) == (7, 3, 343)
    assert prime_power(12) is None
    assert prime_power(1) is None


# -- Gerono -------------------------------------------------------------------------------

def test_gerono_examples():
    # 3 - 2 = 1 is a solution alongside 9 - 8 = 1.
    assert gerono_solutions(3, 2) == {(1, 1), (2, 3)}
    assert gerono_solutions(2, 3) == {(2, 1)}
    assert gerono_solutions(7, 5) == frozenset()


def _gerono_brute(p, q):
    powers_q = {}
    x, b = q, 1
    while x <= MAX_INT:
        powers_q[x] = b
        x, b = x * q, b + 1
    out = set()
    y, a = p, 1
    while y <= MAX_INT:
        if y - 1 in powers_q:
            out.add((a, powers_q[y - 1]))
        y, a = y * p, a + 1
    return out


def test_gerono_complete_below_1000():
    for p, q in itertools.permutations(SMALL_PRIMES, 2):
        assert gerono_solutions(p, q) == _gerono_brute(p, q), (p, q)
