"""Command-line entry point: ``gkgraph <subcommand> ...``.

Exit codes: 0 on a computed result, 1 on invalid input, 2 when a cap is
hit or the input is valid but unsupported.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import prime_graph as pg
from .classifier import DEFAULT_UNITARY_READING, UNITARY_READINGS, classify
from .descriptors import (
    AlmostSimpleDescriptor,
    InvalidDescriptor,
    OuterProfile,
    UnsupportedDescriptor,
    make_socle,
    preset_names,
    presets,
)
from .matgroups import DEFAULT_CAP, DEFAULT_SEED, ClosureMismatch
from .numtheory import CapExceeded
from .prime_graph import PrimeGraph

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 1, 2


class InputError(ValueError):
    pass


def _emit(doc: dict, fmt: str, text: str | None = None, graph: PrimeGraph | None = None) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    elif fmt == "dot":
        if graph is None:
            raise InputError("this result has no graph to render as DOT")
        print(pg.export(graph, "dot"))
    else:
        print(text if text is not None else json.dumps(doc, indent=2))


def _read_json(path: str) -> dict:
    raw = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not valid JSON ({e})") from None


def _load_graph(args) -> PrimeGraph:
    """A graph from --edges, a graph document, or the certificate of a verdict document."""
    if getattr(args, "edges", None) is not None:
        verts = [int(v) for v in args.vertices.split(",")] if args.vertices else []
        return pg.parse_edges(args.edges, verts)
    if not getattr(args, "graph", None):
        raise InputError("give a graph file (or '-') or --edges")
    doc = _read_json(args.graph)
    if "certificate" in doc:
        cert = doc["certificate"]
        if "graph" not in cert:
            raise InputError("verdict has no concrete clique partition to realize")
        doc = cert["graph"]
    try:
        return pg.from_dict(doc)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad graph document: {e}") from None


# -- classify -------------------------------------------------------------------------

def _descriptor_from_args(args) -> AlmostSimpleDescriptor:
    if args.preset:
        return presets(args.preset)
    if args.descriptor:
        return AlmostSimpleDescriptor.from_dict(_read_json(args.descriptor))
    if not args.family:
        raise InputError("give --preset, --descriptor or --family")
    params = {}
    for key in ("n", "q", "type", "sign", "name"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    outer = OuterProfile(
        pi_quotient_in_pi_S=not args.new_prime_in_index,
        two_divides_index=args.even_index,
        contains_inndiag=args.inndiag,
        contains_graph_aut=args.graph_aut,
        is_exactly=args.exactly,
    )
    try:
        socle = make_socle(args.family, **params)
    except TypeError as e:
        raise InputError(f"parameters do not fit family {args.family!r}: {e}") from None
    return AlmostSimpleDescriptor(socle, outer)


def _verdict_text(v) -> str:
    c = v.certificate
    lines = [f"group: {v.descriptor.label}", f"no 3-coclique: {v.no_3_coclique}", f"rule: {v.provenance}"]
    if v.no_3_coclique:
        lines.append(f"cliques: {c.clique_a_symbolic} | {c.clique_b_symbolic}")
        if c.resolved:
            lines.append(f"        = {sorted(c.clique_a)} | {sorted(c.clique_b)}")
    elif c.witness:
        lines.append(f"witness: {set(c.witness)}")
        lines += [f"  {w.prime} in {w.declared}" for w in c.primes]
    elif c.candidates:
        lines.append("witness: one of " + ", ".join(str(set(t)) for t in c.candidates))
    if getattr(c, "marker", None):
        lines.append(f"marker: {c.marker}")
    if c.note:
        lines.append(f"note: {c.note}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    if args.list_presets:
        print("\n".join(preset_names()))
        return EXIT_OK
    d = _descriptor_from_args(args)
    v = classify(d, unitary_reading=args.unitary_reading)
    graph = None
    if v.no_3_coclique and v.certificate.resolved:
        graph = v.certificate.graph
    elif not v.no_3_coclique and v.certificate.witness:
        graph = PrimeGraph.from_edges(v.certificate.witness)
    _emit(v.to_dict(), args.format, _verdict_text(v), graph)
    return EXIT_OK


# -- realize / graph-check ------------------------------------------------------------------

def _parse_partition(text: str):
    try:
        left, right = text.split("|")
        return [int(x) for x in left.split(",") if x], [int(x) for x in right.split(",") if x]
    except ValueError:
        raise InputError("--partition looks like '2,3|5'") from None


def cmd_realize(args) -> int:
    from .realizer import realize, verify

    g = _load_graph(args)
    partition = _parse_partition(args.partition) if args.partition else None
    if partition is None and pg.two_clique_partition(g) is None:
        rep = pg.solvable_realizable(g)
        doc = {"error": "graph is not a union of two cliques", "graph_check": rep.to_dict()}
        print(json.dumps(doc, indent=2))
        return EXIT_INVALID
    try:
        b = realize(g, partition)
    except ValueError as e:
        raise InputError(str(e)) from None
    report = verify(b, g, cap=args.cap)
    doc = report.to_dict()
    text = "\n".join(
        [
            f"pi1 = {list(b.pi1)}, pi2 = {list(b.pi2)}",
            *(f"  GF({t.p}^{t.m}), C acts through order {t.acting_order} (D = {list(t.D)})" for t in b.towers),
            f"analytic match: {report.analytic_match}",
            f"enumerated match: {report.enumerated_match}",
            f"group order: {report.group_order}",
            *([f"note: {report.note}"] if report.note else []),
        ]
    )
    _emit(doc, args.format, text, report.analytic)
    return EXIT_OK if report.analytic_match and report.enumerated_match is not False else EXIT_INVALID


def cmd_graph_check(args) -> int:
    g = _load_graph(args)
    rep = pg.solvable_realizable(g)
    text = "\n".join(
        [
            f"no 3-coclique: {rep.no_3_coclique}",
            f"complement 3-colourable: {rep.complement_3_colorable}",
            f"realizable by a solvable group: {rep.realizable}",
            *([f"obstruction: {rep.obstruction}"] if rep.obstruction is not None else []),
        ]
    )
    _emit(rep.to_dict(), args.format, text, g)
    return EXIT_OK


# -- oracle ----------------------------------------------------------------------------

def cmd_oracle(args) -> int:
    from . import oracles

    if args.alt is not None:
        res = oracles.spectrum_alternating(args.alt, symmetric=args.sym)
    elif args.psl2 is not None:
        ext = args.ext or "none"
        if ext == "pgl":
            res = oracles.spectrum_classical("PGL2", args.psl2, cap=args.cap, seed=args.seed)
        elif ext.startswith("field"):
            step = int(ext[5:] or 1)
            res = oracles.spectrum_classical(
                "PSL2", args.psl2, oracles.Extension(field_step=step), cap=args.cap, seed=args.seed
            )
        elif ext == "none":
            res = oracles.spectrum_classical("PSL2", args.psl2, cap=args.cap, seed=args.seed)
        else:
            raise InputError("--ext is one of pgl, none, field<step>")
    elif args.classical:
        ext = oracles.Extension(field_step=args.field_step, graph=args.graph_aut)
        res = oracles.spectrum_classical(args.classical, args.q, ext, cap=args.cap, seed=args.seed)
    elif args.named:
        res = oracles.spectrum_named(args.named, cap=args.cap, seed=args.seed)
    elif args.blueprint:
        from .realizer import SolvableBlueprint

        doc = _read_json(args.blueprint)
        doc = doc.get("blueprint", doc)
        res = oracles.spectrum_blueprint(SolvableBlueprint.from_dict(doc), cap=args.cap)
    else:
        raise InputError("give one of --alt, --psl2, --classical, --named, --blueprint")
    g = res.graph
    doc = res.to_dict() | {"graph": pg.to_dict(g), "three_coclique": pg.find_3_coclique(g)}
    text = "\n".join(
        [
            f"{res.group_name}, order {res.group_order}",
            f"omega = {res.omega.sorted()}",
            f"edges = {sorted(g.edges)}",
            f"3-coclique: {pg.find_3_coclique(g)}",
            f"two-clique partition: {_fmt_partition(pg.two_clique_partition(g))}",
        ]
    )
    _emit(doc, args.format, text, g)
    return EXIT_OK


def _fmt_partition(part) -> str:
    if part is None:
        return "none"
    return f"{sorted(part[0])} | {sorted(part[1])}"


# -- question-probe ----------------------------------------------------------------------

PROBE_MAX_BOUND = 6


def _probe_candidate(name: str, n: int, edges) -> dict | None:
    """Complement of a triangle-free graph on {0..n-1}, relabelled on primes, if it is a candidate."""
    g = pg.relabel_on_primes(n, edges).complement()
    rep = pg.solvable_realizable(g)
    if rep.no_3_coclique and not rep.complement_3_colorable:
        return {"source": name, "vertices": len(g), "graph": pg.to_dict(g), "report": rep.to_dict()}
    return None


def _exhaustive(bound: int) -> list[dict]:
    found = []
    for n in range(1, bound + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = pg.relabel_on_primes(n, edges)
            rep = pg.solvable_realizable(g)
            if rep.no_3_coclique and not rep.complement_3_colorable:
                found.append({"source": f"exhaustive-{n}", "vertices": n, "graph": pg.to_dict(g), "report": rep.to_dict()})
    return found


def cmd_question_probe(args) -> int:
    if args.bound is not None:
        if args.bound > PROBE_MAX_BOUND:
            raise CapExceeded(f"exhaustive search is capped at {PROBE_MAX_BOUND} vertices")
        cands = _exhaustive(args.bound)
        source = f"all graphs on <= {args.bound} vertices"
    else:
        gen = args.generator or "grotzsch-complement"
        if gen == "grotzsch-complement":
            n, edges = pg.grotzsch_graph()
        elif gen.startswith("mycielski-complement-"):
            k = int(gen.rsplit("-", 1)[1])
            if not 1 <= k <= 5:
                raise InputError("mycielski-complement-k needs 1 <= k <= 5")
            n, edges = pg.mycielskian(*pg.mycielski_graph(k))
        else:
            raise InputError("generator is grotzsch-complement or mycielski-complement-k")
        c = _probe_candidate(gen, n, edges)
        cands = [c] if c else []
        source = gen
    doc = {
        "source": source,
        "candidates": cands,
        "count": len(cands),
        "group_side": "open: whether such a graph is the prime graph of a non-solvable group is not decided here",
    }
    text = f"{source}: {len(cands)} candidate(s) with no 3-coclique and non-3-colourable complement"
    _emit(doc, args.format, text, pg.from_dict(cands[0]["graph"]) if cands else None)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gkgraph", description="Prime graphs of almost simple and solvable groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (group order)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="decide 3-coclique freeness of an almost simple group")
    c.add_argument("--preset")
    c.add_argument("--list-presets", action="store_true")
    c.add_argument("--descriptor", help="descriptor JSON file")
    c.add_argument("--family", choices=("alternating", "sporadic", "linear", "unitary", "symplectic", "orthodd", "ortheven", "exceptional"))
    c.add_argument("--n", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--type", help="exceptional type, e.g. 3D4, E8, 2F4")
    c.add_argument("--sign", choices=("+", "-"))
    c.add_argument("--name", help="sporadic group name")
    c.add_argument("--even-index", action="store_true", help="2 divides |G:S|")
    c.add_argument("--inndiag", action="store_true", help="G contains Inndiag(S)")
    c.add_argument("--graph-aut", action="store_true", help="G contains S<g>")
    c.add_argument("--new-prime-in-index", action="store_true", help="|G:S| has a prime outside pi(S)")
    c.add_argument("--exactly", help="name of a specific extension, e.g. M10")
    c.add_argument("--unitary-reading", choices=UNITARY_READINGS, default=DEFAULT_UNITARY_READING)
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("realize", parents=[common], help="build a solvable group with a given two-clique prime graph")
    r.add_argument("graph", nargs="?", help="graph or verdict JSON file, '-' for stdin")
    r.add_argument("--edges")
    r.add_argument("--vertices", help="extra isolated vertices, comma separated")
    r.add_argument("--partition", help="pi1|pi2, e.g. '2,3|5'")
    r.set_defaults(func=cmd_realize)

    g = sub.add_parser("graph-check", parents=[common], help="test realizability by a solvable group")
    g.add_argument("graph", nargs="?")
    g.add_argument("--edges")
    g.add_argument("--vertices")
    g.set_defaults(func=cmd_graph_check)

    o = sub.add_parser("oracle", parents=[common], help="element orders and prime graph by enumeration")
    o.add_argument("--alt", type=int)
    o.add_argument("--sym", action="store_true")
    o.add_argument("--psl2", type=int)
    o.add_argument("--ext", help="pgl | none | field<step>")
    o.add_argument("--classical", help="PSL3, PGU3, PSp4, ...")
    o.add_argument("--q", type=int)
    o.add_argument("--field-step", type=int, default=0)
    o.add_argument("--graph-aut", action="store_true")
    o.add_argument("--named", help="M10, S6, PGL2(9), Aut(A6)")
    o.add_argument("--blueprint")
    o.set_defaults(func=cmd_oracle)

    qp = sub.add_parser("question-probe", parents=[common], help="graphs with no 3-coclique that no solvable group has")
    qp.add_argument("--generator")
    qp.add_argument("--bound", type=int)
    qp.set_defaults(func=cmd_question_probe)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; here 2 means cap/unsupported.
        return EXIT_OK if e.code == 0 else EXIT_INVALID
    if args.cap is None:
        args.cap = 10**6 if args.command == "realize" else DEFAULT_CAP
    if args.cap < 1:
        print("error: --cap must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (UnsupportedDescriptor, CapExceeded, ClosureMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidDescriptor, InputError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
