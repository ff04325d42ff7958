"""Command-line interface: ``gis SUBCOMMAND ...``.

Exit status is 0 on success, 1 on parse/validation errors and 2 when a
precondition fails (for instance a finite semigroup was needed).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FilePath

from . import congruence, green, morphisms, oracle, representation, semigroup
from .errors import GisError, InputError, PreconditionError
from .graph import Graph, condensation, format_graph, graph_dot, parse_graph, scc


def _read(path: str) -> str:
    try:
        return FilePath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _elements(g: Graph, max_len: int | None) -> list:
    if max_len is None:
        return semigroup.enumerate_elements(g)
    return semigroup.enumerate_elements_bounded(g, max_len)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit(out: list[str], text: str) -> None:
    out.extend(text.splitlines())


# -- subcommands -------------------------------------------------------------


def cmd_info(args, out):
    g = _graph(args.graph)
    acyclic = g.is_acyclic()
    out.append(f"vertices: {len(g.vertices)}")
    out.append(f"edges: {len(g.edges)}")
    out.append(f"sccs: {len(scc(g))}")
    out.append(f"acyclic: {_bool(acyclic)}")
    out.append(f"simple: {_bool(g.is_simple())}")
    out.append(f"size: {semigroup.semigroup_size(g) if acyclic else 'infinite'}")
    out.append(f"only-rees: {_bool(congruence.has_only_rees_congruences(g))}")
    try:
        free = _bool(congruence.is_congruence_free(g))
    except PreconditionError:
        free = "n/a"
    out.append(f"congruence-free: {free}")
    deg = representation.min_faithful_degree(g)
    out.append(f"min-degree: {'infinite' if deg == representation.INFINITE else deg}")


def cmd_elements(args, out):
    g = _graph(args.graph)
    if args.max_len is None:
        g.require_acyclic()
    out.extend(semigroup.format_element(a) for a in _elements(g, args.max_len))


def cmd_mul(args, out):
    g = _graph(args.graph)
    elems = [semigroup.parse_element(g, s) for s in args.elements]
    out.append(semigroup.format_element(semigroup.product(g, elems)))


def cmd_green(args, out):
    g = _graph(args.graph)
    a = semigroup.parse_element(g, args.a)
    b = semigroup.parse_element(g, args.b)
    rel = args.rel
    if rel.startswith("leq-"):
        fn = {"leq-l": green.leq_l, "leq-r": green.leq_r, "leq-j": green.leq_j}[rel]
        out.append(_bool(fn(g, a, b)))
    else:
        out.append(_bool(green.related(g, rel, a, b)))


def cmd_jposet(args, out):
    g = _graph(args.graph)
    p = green.j_poset(g)
    text = green.hasse_dot(p) if args.dot else green.format_poset(p)
    _emit(out, text)


def cmd_quotient(args, out):
    g = _graph(args.graph)
    seed = [v for v in args.vertices.split(",") if v]
    for v in seed:
        g.check_vertex(v)
    ideal = congruence.ideal_closure(g, seed)
    out.append("# ideal: " + " ".join(sorted(ideal.vertices)))
    _emit(out, format_graph(congruence.rees_quotient_graph(g, ideal)))


def cmd_congruences(args, out):
    g = _graph(args.graph)
    g.require_acyclic()
    t = oracle.build_table(g)
    congs = oracle.enumerate_congruences(t, bound=args.bound)
    out.append(f"congruences: {len(congs)}")
    for p in congs:
        blocks = " | ".join(
            " ".join(semigroup.format_element(t.elements[i]) for i in block) for block in p.blocks
        )
        line = f"{{{blocks}}}"
        if args.classify:
            line += "  rees" if oracle.is_rees_partition(t, p) else "  non-rees"
        out.append(line)


def cmd_nonrees(args, out):
    g = _graph(args.graph)
    spec = congruence.NonReesCanonical.for_edge(g, args.edge)
    if args.member:
        a = semigroup.parse_element(g, args.member[0])
        b = semigroup.parse_element(g, args.member[1])
        out.append(_bool(congruence.nonrees_member(g, spec, a, b)))
        return
    ideal = congruence.nonrees_ideal(g, spec)
    out.append(f"generator: ({spec.v}, {spec.e}/{spec.e})")
    out.append("ideal: " + " ".join(sorted(ideal.vertices)))
    if g.is_acyclic():
        classes = congruence.congruence_classes(g, spec)
        out.append(f"classes: {len(classes)}")
        for c in classes:
            out.append("  " + " ".join(semigroup.format_element(a) for a in c))


def cmd_mindegree(args, out):
    g = _graph(args.graph)
    deg = representation.min_faithful_degree(g)
    out.append("infinite" if deg == representation.INFINITE else str(deg))


def cmd_vp(args, out):
    g = _graph(args.graph)
    rep = representation.vagner_preston(g)
    out.append(f"degree: {rep.degree}")
    _emit(out, rep.format())


def _format_hom_inline(h: morphisms.GraphHom) -> str:
    vs = ",".join(f"{a}->{b}" for a, b in sorted(h.phi0.items()))
    es = ",".join(f"{a}->{b}" for a, b in sorted(h.phi1.items()))
    return f"v:{vs} e:{es}"


def cmd_aut(args, out):
    g = _graph(args.graph)
    auts = morphisms.graph_automorphisms(g)
    out.append(f"automorphisms: {len(auts)}")
    out.extend(_format_hom_inline(h) for h in auts)


def cmd_iso(args, out):
    a, b = _graph(args.graph), _graph(args.graph2)
    h = morphisms.graphs_isomorphic(a, b)
    _emit(out, "none" if h is None else h.format())


def cmd_hom(args, out):
    a, b = _graph(args.graph), _graph(args.graph2)
    h = morphisms.parse_map(_read(args.mapfile))
    if args.check:
        out.append(_bool(morphisms.check_graph_hom(a, b, h)))
        return
    m = morphisms.extend_hom(a, b, h)
    if args.max_len is None:
        a.require_acyclic()
    for x in _elements(a, args.max_len):
        out.append(f"{semigroup.format_element(x)} -> {semigroup.format_element(m(x))}")


def cmd_realize_poset(args, out):
    p = green.parse_poset(_read(args.posetfile))
    g = green.realize_poset(p)
    _emit(out, graph_dot(g) if args.dot else format_graph(g))


def cmd_condense(args, out):
    g = _graph(args.graph)
    _emit(out, format_graph(condensation(g)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gis", description="Graph inverse semigroup toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("info", cmd_info, "summary of a graph and its semigroup")
    p.add_argument("graph")

    p = add("elements", cmd_elements, "list the elements of G(E)")
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, help="bound path lengths (needed for cyclic graphs)")

    p = add("mul", cmd_mul, "multiply elements")
    p.add_argument("graph")
    p.add_argument("elements", nargs="+")

    p = add("green", cmd_green, "Green's relations and preorders")
    p.add_argument("graph")
    p.add_argument("rel", choices=["L", "R", "J", "H", "D", "leq-l", "leq-r", "leq-j"])
    p.add_argument("a")
    p.add_argument("b")

    p = add("jposet", cmd_jposet, "poset of nonzero J-classes")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")

    p = add("quotient", cmd_quotient, "graph of the Rees quotient by the ideal generated by vertices")
    p.add_argument("graph")
    p.add_argument("--vertices", required=True, help="comma-separated generating vertices")

    p = add("congruences", cmd_congruences, "enumerate all congruences of a finite G(E)")
    p.add_argument("graph")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_CONGRUENCE_BOUND)

    p = add("nonrees", cmd_nonrees, "the congruence generated by (s(e), e e^-1)")
    p.add_argument("graph")
    p.add_argument("edge")
    p.add_argument("--member", nargs=2, metavar=("A", "B"))

    p = add("mindegree", cmd_mindegree, "minimum faithful representation degree")
    p.add_argument("graph")

    p = add("vp", cmd_vp, "Vagner-Preston representation")
    p.add_argument("graph")

    p = add("aut", cmd_aut, "graph automorphisms")
    p.add_argument("graph")

    p = add("iso", cmd_iso, "find a graph isomorphism")
    p.add_argument("graph")
    p.add_argument("graph2")

    p = add("hom", cmd_hom, "check or extend a graph homomorphism")
    p.add_argument("graph")
    p.add_argument("graph2")
    p.add_argument("mapfile")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", action="store_true")
    mode.add_argument("--extend", action="store_true")
    p.add_argument("--max-len", type=int)

    p = add("realize-poset", cmd_realize_poset, "graph realizing a poset as J-classes")
    p.add_argument("posetfile")
    p.add_argument("--dot", action="store_true")

    p = add("condense", cmd_condense, "condensation of a graph")
    p.add_argument("graph")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out: list[str] = []
    try:
        args.func(args, out)
    except PreconditionError as exc:
        print(f"gis: {exc}", file=sys.stderr)
        return 2
    except GisError as exc:
        print(f"gis: {exc}", file=sys.stderr)
        return 1
    if out:
        print("\n".join(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
