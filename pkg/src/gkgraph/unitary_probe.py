"""Which reading of the PSU3(2^m) conditions agrees with the groups.

Two kinds of evidence are collected:

* full enumeration of PSU3(4) and its field-automorphism extensions, which
  decides the 3-coclique question outright;
* for larger q, the torus oracle on S = PSU3(q).  For G = S.2 every element
  of odd order lies in S, so an odd 3-coclique of Gamma(S) is one of
  Gamma(G).  This is where the two readings disagree.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .classifier import DEFAULT_UNITARY_READING, UNITARY_READINGS, classify
from .descriptors import AlmostSimpleDescriptor, OuterProfile, Unitary
from .matgroups import projective_order
from .oracles import Extension, semisimple_orders_psu3, spectrum_classical
from .prime_graph import find_3_coclique, graph_from_orders


@dataclass
class ProbeRow:
    group: str
    method: str
    oracle_coclique: tuple[int, ...] | None
    verdicts: dict[str, bool]  # reading -> no_3_coclique
    seconds: float
    # False when "no coclique found" does not prove the graph coclique-free
    # (the torus oracle sees odd primes only).
    complete: bool = True

    def agrees(self, reading: str) -> bool:
        if self.oracle_coclique is not None:
            return not self.verdicts[reading]
        return self.verdicts[reading] or not self.complete


@dataclass
class ProbeReport:
    rows: list[ProbeRow] = field(default_factory=list)
    default: str = DEFAULT_UNITARY_READING

    def matching(self) -> list[str]:
        return [r for r in UNITARY_READINGS if all(row.agrees(r) for row in self.rows)]

    def first_divergence(self) -> ProbeRow | None:
        for row in self.rows:
            if len(set(row.verdicts.values())) > 1:
                return row
        return None

    def to_dict(self) -> dict:
        return {
            "default": self.default,
            "matching_readings": self.matching(),
            "rows": [
                {
                    "group": r.group,
                    "method": r.method,
                    "oracle_coclique": list(r.oracle_coclique) if r.oracle_coclique else None,
                    "verdicts": r.verdicts,
                    "agrees": {k: r.agrees(k) for k in r.verdicts},
                    "complete": r.complete,
                    "seconds": round(r.seconds, 2),
                }
                for r in self.rows
            ],
        }

    def to_markdown(self) -> str:
        head = "| group | method | oracle 3-coclique | " + " | ".join(f"`{r}` verdict" for r in UNITARY_READINGS) + " |"
        lines = [
            "# PSU3(2^m): which condition decides the involution case",
            "",
            "Readings: `q-1` asks for Inndiag(S) when (q-1)_3 = 3; `q+1` asks for it when (q+1)_3 = 3.",
            "A verdict is `positive` when no 3-coclique is claimed.",
            "",
            head,
            "|" + "---|" * (3 + len(UNITARY_READINGS)),
        ]
        for r in self.rows:
            cells = []
            for k in UNITARY_READINGS:
                word = "positive" if r.verdicts[k] else "negative"
                cells.append(word + ("" if r.agrees(k) else " (WRONG)"))
            coc = str(tuple(r.oracle_coclique)) if r.oracle_coclique else ("none" if r.complete else "none among odd primes")
            lines.append(f"| {r.group} | {r.method} | {coc} | " + " | ".join(cells) + " |")
        div = self.first_divergence()
        lines += ["", f"Readings consistent with every row: {', '.join(self.matching()) or 'none'}."]
        if div is not None:
            lines.append(f"First row where the readings differ: {div.group}.")
        lines.append(f"Shipped default: `{self.default}`.")
        if self.default in self.matching():
            lines.append("The default agrees with every oracle row.")
        else:
            lines.append("The default DISAGREES with the oracle.")
        lines += [
            "",
            "At q = 4 the readings coincide: (q-1)_3 = 3 there, but Inndiag(S) = S because 3 does not divide q+1.",
            "The `q-1` condition can only hold for even m, where Inndiag(S) = S always, so it never excludes anything.",
            "The torus rows compute the odd part of Gamma(PSU3(q)) exactly; for G = S.2 that part is inherited by G.",
        ]
        return "\n".join(lines) + "\n"


def _verdicts(q: int, outer: OuterProfile) -> dict[str, bool]:
    d = AlmostSimpleDescriptor(Unitary(3, q), outer)
    return {r: classify(d, r).no_3_coclique for r in UNITARY_READINGS}


def _odd_coclique(orders) -> tuple[int, int, int] | None:
    g = graph_from_orders(orders)
    odd = sorted(v for v in g.vertices if v != 2)
    for t in itertools.combinations(odd, 3):
        if not any(g.adjacent(a, b) for a, b in itertools.combinations(t, 2)):
            return t
    return None


def probe_unitary_readings(
    enumerate_q: tuple[int, ...] = (4,),
    torus_q: tuple[int, ...] = (8, 32, 128, 512),
) -> ProbeReport:
    report = ProbeReport()
    for q in enumerate_q:
        m = q.bit_length() - 1
        # x -> x**(2**s) on GF(q^2) for each proper divisor s of 2m.
        steps = [0] + [s for s in range(2 * m, 0, -1) if (2 * m) % s == 0 and s < 2 * m]
        for s in steps:
            t0 = time.perf_counter()
            res = spectrum_classical("PSU3", q, Extension(field_step=s))
            index = res.group_order // projective_order("PSU", 3, q)
            outer = OuterProfile(two_divides_index=index % 2 == 0)
            report.rows.append(
                ProbeRow(
                    res.group_name if s else f"PSU3({q})",
                    "full enumeration",
                    find_3_coclique(res.graph),
                    _verdicts(q, outer),
                    time.perf_counter() - t0,
                )
            )
    for q in torus_q:
        t0 = time.perf_counter()
        coc = _odd_coclique(semisimple_orders_psu3(q))
        report.rows.append(
            ProbeRow(
                f"PSU3({q}).2",
                "torus oracle, odd primes",
                coc,
                _verdicts(q, OuterProfile(two_divides_index=True)),
                time.perf_counter() - t0,
                complete=False,
            )
        )
    return report
