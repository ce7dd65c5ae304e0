"""Acceptance suite: nine end-to-end criteria, each under a wall-clock bound.

Every test prints one ``ACCEPTANCE <n> PASS|FAIL`` line.  Run standalone
with ``python tests/test_acceptance.py`` to get just those lines.
"""

from __future__ import annotations

import itertools
import json
import random
import sys
import time
from pathlib import Path

import pytest

from gkgraph.classifier import DEFAULT_UNITARY_READING, classify
from gkgraph.cli import _exhaustive
from gkgraph.descriptors import (
    AlmostSimpleDescriptor,
    Alternating,
    Exceptional,
    Linear,
    OrthogonalEven,
    OuterProfile,
    Symplectic,
    Unitary,
    canonicalize,
    pi_socle,
    presets,
)
from gkgraph.numtheory import PrimePower, prime_power, primitive_prime_divisors, primes_up_to
from gkgraph.oracles import Extension, spectrum_alternating, spectrum_classical
from gkgraph.prime_graph import (
    PrimeGraph,
    find_3_coclique,
    grotzsch_graph,
    relabel_on_primes,
    solvable_realizable,
)
from gkgraph.realizer import realize, verify
from gkgraph.unitary_probe import probe_unitary_readings

REPORT_DIR = Path(__file__).resolve().parent.parent / "reports"
TWO = OuterProfile(two_divides_index=True)


def _emit(number: int, title: str, ok: bool, elapsed: float, bound: float, detail: str) -> str:
    status = "PASS" if ok and elapsed < bound else "FAIL"
    return f"ACCEPTANCE {number} {status} {title} ({elapsed:.1f}s, bound {bound:.0f}s): {detail}"


def _run(number: int, title: str, bound: float, body, capsys=None):
    t0 = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - t0
    line = _emit(number, title, ok, elapsed, bound, detail)
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok, elapsed, line


# -- 1 -------------------------------------------------------------------------------

def zsigmondy_scan():
    empty = []
    checked = 0
    for q in range(2, 101):
        if prime_power(q) is None:
            continue
        for m in range(1, 21):
            if q**m >= 2**63:
                break
            checked += 1
            if not primitive_prime_divisors(q, m):
                empty.append((q, m))
    return empty == [(2, 1), (2, 6), (3, 1)], f"{checked} (q, m) pairs, empty R_m(q) at {empty}"


# -- 2 -------------------------------------------------------------------------------

def _alt_descriptor(n: int, symmetric: bool) -> AlmostSimpleDescriptor:
    if symmetric and n == 6:
        return presets("S6")
    return AlmostSimpleDescriptor(Alternating(n), TWO if symmetric else OuterProfile())


def alternating_agreement():
    positives, mismatches = [], []
    for n in range(5, 19):
        for symmetric in (False, True):
            v = classify(_alt_descriptor(n, symmetric))
            oracle_free = find_3_coclique(spectrum_alternating(n, symmetric).graph) is None
            if v.no_3_coclique != oracle_free:
                mismatches.append(f"{'S' if symmetric else 'A'}{n}")
            if v.no_3_coclique:
                positives.append(f"{'S' if symmetric else 'A'}{n}")
    expected = {"A9", "A10", "A12", "S5", "S6", "S8", "S9", "S10", "S12"}
    ok = not mismatches and set(positives) == expected
    return ok, f"positives {sorted(positives)}; mismatches {mismatches}"


# -- 3 -------------------------------------------------------------------------------

PSL2_QS = (5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27, 31)


def psl2_agreement():
    mismatches, pgl_positive = [], []
    cases = []
    for q in PSL2_QS:
        cases.append((f"PSL2({q})", AlmostSimpleDescriptor(Linear(2, q)), ("PSL2", q, None)))
        cases.append((f"PGL2({q})", presets(f"PGL2_{q}"), ("PGL2", q, None)))
    cases.append(("PSL2(16).2", AlmostSimpleDescriptor(Linear(2, 16), TWO), ("PSL2", 16, Extension(field_step=2))))
    for name, d, (fam, q, ext) in cases:
        v = classify(d)
        oracle = spectrum_classical(fam, q, ext)
        if v.no_3_coclique != (find_3_coclique(oracle.graph) is None):
            mismatches.append(name)
        if name.startswith("PGL2") and v.no_3_coclique:
            pgl_positive.append(q)
    ok = not mismatches and pgl_positive == [5, 7, 9, 17, 31]
    return ok, f"{len(cases)} groups; PGL2(q) positive for q in {pgl_positive}; mismatches {mismatches}"


# -- 4 -------------------------------------------------------------------------------

def _round_trip(g: PrimeGraph, part) -> tuple[bool, bool | None]:
    rep = verify(realize(g, part), g, cap=10**6)
    return rep.analytic_match, rep.enumerated_match


def realizer_round_trip():
    primes = (2, 3, 5, 7, 11)
    total = analytic_ok = enumerated = enumerated_ok = 0
    for k in range(1, 6):
        for vs in itertools.combinations(primes, k):
            for mask in range(1 << k):
                a = [v for i, v in enumerate(vs) if mask >> i & 1]
                b = [v for v in vs if v not in a]
                pairs = [(x, y) for x in a for y in b]
                for cm in range(1 << len(pairs)):
                    cross = [pr for j, pr in enumerate(pairs) if cm >> j & 1]
                    am, em = _round_trip(PrimeGraph.two_cliques(a, b, cross), (a, b))
                    total += 1
                    analytic_ok += am
                    if em is not None:
                        enumerated += 1
                        enumerated_ok += em
    exhaustive = total
    rng = random.Random(20160622)
    pool = primes_up_to(50)
    for _ in range(250):
        vs = rng.sample(pool, rng.randint(1, 8))
        cut = rng.randint(0, len(vs))
        a, b = vs[:cut], vs[cut:]
        cross = [(x, y) for x in a for y in b if rng.random() < 0.5]
        am, em = _round_trip(PrimeGraph.two_cliques(a, b, cross), (a, b))
        total += 1
        analytic_ok += am
        if em is not None:
            enumerated += 1
            enumerated_ok += em
    ok = analytic_ok == total and enumerated_ok == enumerated
    detail = (
        f"{exhaustive} exhaustive + {total - exhaustive} random; analytic {analytic_ok}/{total}; "
        f"enumerated {enumerated_ok}/{enumerated}"
    )
    return ok, detail


# -- 5 -------------------------------------------------------------------------------

# (descriptor, expected witness, compare as set?, read the hard-coded substitution?)
WITNESS_TABLE = [
    (AlmostSimpleDescriptor(Linear(5, 4)), (7, 17, 31), True, False),
    (AlmostSimpleDescriptor(Linear(6, 2)), (5, 7, 31), True, False),
    (AlmostSimpleDescriptor(Linear(7, 2)), (5, 31, 127), True, False),
    (AlmostSimpleDescriptor(Linear(8, 2)), (5, 31, 127), True, False),
    (
        AlmostSimpleDescriptor(Linear(3, 16), OuterProfile(two_divides_index=True, contains_inndiag=True)),
        (17, 13, 7),
        False,
        True,
    ),
    (AlmostSimpleDescriptor(Linear(4, 16), TWO), (257, 13, 7), False, True),
    (AlmostSimpleDescriptor(Unitary(6, 4)), (13, 17, 41), True, False),
    (AlmostSimpleDescriptor(Symplectic(8, 2)), (5, 7, 17), True, False),
    (AlmostSimpleDescriptor(Symplectic(10, 2)), (7, 17, 31), True, False),
    (AlmostSimpleDescriptor(Exceptional("3D4", 4)), (7, 13, 241), True, False),
    (AlmostSimpleDescriptor(Exceptional("2F4", 2)), (3, 5, 13), True, False),
    (AlmostSimpleDescriptor(Exceptional("2F4", 8)), (2, 19, 37), True, False),
    (AlmostSimpleDescriptor(Exceptional("G2", 4)), (13, 7, 5), False, False),
    (AlmostSimpleDescriptor(Exceptional("G2", 8)), (19, 73, 7), False, False),
]


def witness_reproduction():
    bad = []
    for d, expected, as_set, substitution in WITNESS_TABLE:
        v = classify(d)
        c = v.certificate
        got = c.substitution if substitution else c.witness
        same = got is not None and (set(got) == set(expected) if as_set else tuple(got) == expected)
        pp = PrimePower.from_int(d.socle.q)
        declared_ok = all(w.check(pp) for w in c.primes) and all(w.base is not None or w.declared == "{p}" for w in c.primes)
        if v.no_3_coclique or not same or not declared_ok:
            bad.append(f"{d.label()}: got {got}")
    return not bad, f"{len(WITNESS_TABLE)} witnesses, failures {bad}"


# -- 6 -------------------------------------------------------------------------------

PIPELINE = [
    ("PGL2(7)", presets("PGL2_7")),
    ("S5", presets("S5")),
    ("S8", presets("S8")),
    ("A9", presets("A9")),
    ("J2", presets("J2")),
    ("3D4(2)", presets("3D4(2)")),
    ("PSp6(2)", presets("PSp6(2)")),
    ("POmega8+(2)", AlmostSimpleDescriptor(OrthogonalEven(8, 2, "+"))),
    ("PSU4(2)", presets("PSU4(2)")),
    ("PSL2(16).2", AlmostSimpleDescriptor(Linear(2, 16), TWO)),
]


def pipeline():
    rows, ok = [], True
    for name, d in PIPELINE:
        v = classify(d)
        c = v.certificate
        if not v.no_3_coclique or not c.resolved:
            ok = False
            rows.append(f"{name}: not a resolved positive")
            continue
        # Both orientations: the blueprint order differs a lot between them.
        reps = [verify(realize(c.graph, part), c.graph, cap=10**6) for part in (c.partition, c.partition[::-1])]
        good = all(r.analytic_match and r.enumerated_match is not False for r in reps)
        partitions_pi = set(c.clique_a) | set(c.clique_b) == set(pi_socle(canonicalize(d).socle))
        ok &= good and partitions_pi
        rows.append(f"{name}:{'enum' if any(r.enumerated_match for r in reps) else 'analytic'}")
    return ok, ", ".join(rows)


# -- 7 -------------------------------------------------------------------------------

def small_group_partitions():
    sp = spectrum_classical("PSp4", 3)
    su = spectrum_classical("PSU4", 2)
    two_cliques = sp.graph == PrimeGraph.two_cliques({2, 3}, {5})
    same = sp.omega == su.omega and sp.group_order == su.group_order
    d = AlmostSimpleDescriptor(Symplectic(4, 3))
    canon = canonicalize(d).socle == Unitary(4, 2)
    v = classify(d)
    cert = v.certificate
    derived = v.no_3_coclique and {frozenset(cert.clique_a), frozenset(cert.clique_b)} == {
        frozenset({2, 3}),
        frozenset({5}),
    }
    ok = two_cliques and same and canon and derived
    detail = (
        f"Gamma(PSp4(3)) two cliques {{2,3}}|{{5}}: {two_cliques}; omega equal to PSU4(2): {same} "
        f"({sp.omega.sorted()}); canonical PSU4(2): {canon}; classifier partition matches: {derived}"
    )
    return ok, detail


# -- 8 -------------------------------------------------------------------------------

def discrepancy_probe():
    report = probe_unitary_readings()
    REPORT_DIR.mkdir(exist_ok=True)
    (REPORT_DIR / "unitary_reading.md").write_text(report.to_markdown())
    (REPORT_DIR / "unitary_reading.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    enumerated = [r for r in report.rows if r.method == "full enumeration"]
    ok = (
        len(enumerated) == 3
        and all(r.agrees(DEFAULT_UNITARY_READING) for r in enumerated)
        and DEFAULT_UNITARY_READING in report.matching()
    )
    div = report.first_divergence()
    detail = (
        f"readings matching every row {report.matching()}; default {DEFAULT_UNITARY_READING!r}; "
        f"first divergence {div.group if div else None}; report in reports/unitary_reading.md"
    )
    return ok, detail


# -- 9 -------------------------------------------------------------------------------

def question_probe():
    n, edges = grotzsch_graph()
    rep = solvable_realizable(relabel_on_primes(n, edges).complement())
    small = _exhaustive(4)
    ok = rep.no_3_coclique and not rep.complement_3_colorable and not small
    return ok, (
        f"Grotzsch complement: no_3_coclique={rep.no_3_coclique}, "
        f"complement_3_colorable={rep.complement_3_colorable}; candidates on <= 4 vertices: {len(small)}"
    )


CRITERIA = [
    (1, "zsigmondy-exceptions", 10, zsigmondy_scan),
    (2, "alternating-agreement", 5, alternating_agreement),
    (3, "psl2-agreement", 120, psl2_agreement),
    (4, "realizer-round-trip", 60, realizer_round_trip),
    (5, "witness-reproduction", 10, witness_reproduction),
    (6, "certificate-to-solvable", 60, pipeline),
    (7, "small-group-partitions", 300, small_group_partitions),
    (8, "unitary-reading-probe", 300, discrepancy_probe),
    (9, "question-probe", 5, question_probe),
]


@pytest.mark.parametrize("number,title,bound,body", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance(number, title, bound, body, capsys):
    ok, elapsed, line = _run(number, title, bound, body, capsys)
    assert ok, line
    assert elapsed < bound, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    sys.exit(0 if all(ok and el < c[2] for (ok, el, _), c in zip(results, CRITERIA)) else 1)
