"""Command line front end: ``e7kr build | check | decompose``."""

import argparse
import json
import sys
from pathlib import Path

from .cartan import I0, dim_A, dim_E7
from .crystal_core import ResourceLimitError, generate_subcrystal, letters_E7
from .export import atomic_write, cache_dir, cached_graph, graph_to_dot, graph_to_json
from .rows import DEFAULT_MAX_S, RowCrystal

EXIT_OK, EXIT_ARGS, EXIT_LIMIT, EXIT_FALSIFIED = 0, 1, 2, 3
MAX_ADJOINT_K = 3
MAX_CONJECTURE_S = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ARGS)


class BadArgs(Exception):
    pass


# -- build ---------------------------------------------------------------------------

def _expected_size(kind, s):
    if kind == "letters":
        return 56
    if kind in ("rows", "kr"):
        return dim_E7((0,) * 6 + (s,))
    return dim_E7((s,) + (0,) * 6)


def _builder(kind, s, max_nodes):
    if kind == "letters":
        def build():
            g = letters_E7()
            g.metadata = {"type": "letters", "s": 1}
            return g
    elif kind == "rows":
        if s > DEFAULT_MAX_S:
            raise ResourceLimitError(f"rows bounded by s <= {DEFAULT_MAX_S}, got {s}")

        def build():
            rc = RowCrystal(s)
            g = generate_subcrystal(rc, [rc.highest()], I0, lower_only=True)
            g.metadata = {"type": "rows", "s": s}
            return g
    elif kind == "kr":
        from .kr import build_kr
        if s > DEFAULT_MAX_S:
            raise ResourceLimitError(f"KR crystal bounded by s <= {DEFAULT_MAX_S}, got {s}")

        def build():
            return build_kr(s)
    elif kind == "adjoint":
        from .analysis.branching import build_adjoint_crystal
        if s > MAX_ADJOINT_K:
            raise ResourceLimitError(f"adjoint crystal bounded by k <= {MAX_ADJOINT_K}, got {s}")

        def build():
            return build_adjoint_crystal(s, max_nodes=max_nodes)
    else:
        raise BadArgs(f"unknown kind {kind}")
    size = _expected_size(kind, s)
    if max_nodes is not None and size > max_nodes:
        raise ResourceLimitError(f"{kind} {s} has {size} nodes, above --max-nodes {max_nodes}")
    return build


def cmd_build(args) -> int:
    s = 1 if args.s is None else args.s
    build = _builder(args.kind, s, args.max_nodes)
    g = cached_graph(args.kind, s, build, args.cache_dir)
    text = graph_to_dot(g, name=args.kind) if args.format == "dot" else graph_to_json(g)
    if args.out:
        atomic_write(args.out, text)
        print(f"wrote {len(g)} nodes, {g.edge_count()} edges to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- check ---------------------------------------------------------------------------

def _check_axioms(s, args):
    from .export import cached_graph
    from .kr import build_kr, observed_a7_components, a7_components
    if s > DEFAULT_MAX_S:
        raise ResourceLimitError(f"KR crystal bounded by s <= {DEFAULT_MAX_S}, got {s}")
    g = cached_graph("kr", s, lambda: build_kr(s), args.cache_dir)
    bad = g.axiom_violations()
    connected = g.is_connected()
    a7 = observed_a7_components(g) == sorted(a7_components(s))
    lines = [
        f"B^(7,{s}): {len(g)} nodes, {g.edge_count()} edges, {g.edge_count(0)} of color 0",
        f"axiom violations: {len(bad)}",
        *[f"  {v}" for v in bad],
        f"connected over I: {connected}",
        f"A7 components agree with the constraint list: {a7}",
    ]
    ok = not bad and connected and a7
    data = {"s": s, "nodes": len(g), "zero_edges": g.edge_count(0),
            "violations": bad, "connected": connected, "a7_match": a7}
    return ok, lines, data


def _check_perfect(s, args):
    from .analysis.perfect import check_perfect
    r = check_perfect(s)
    return r.verdict, r.lines(), r.to_dict()


def _check_conjecture(s, args):
    from .analysis.branching import check_conjecture
    limit = 4 if args.allow_s4 else MAX_CONJECTURE_S
    if s > limit:
        raise ResourceLimitError(f"conjecture check bounded by s <= {limit} (see --allow-s4)")
    r = check_conjecture(s, max_k=max(limit, s))
    ok = r.match and r.reference_match is not False and r.sigma_fixed
    return ok, r.lines(), r.to_dict()


def _check_prop42(s, args):
    from .analysis.branching import check_two_tensor_characterization
    r = check_two_tensor_characterization()
    return r.verdict, r.lines(), r.to_dict()


def _check_compgraph(k, args):
    from .analysis import compgraph as cg
    G = cg.adjoint_composition_graph(k)
    lines = [f"G_{k}(w1): " + G.lines()[0]]
    ok = True
    data = {"adjoint": G.to_dict()}
    if k == 2:
        drawn = G.labelled_edges() == cg.g2_edges_labelled()
        loop_free = [G.label(v) for v in G.loop_free]
        want = [cg.G2_VERTICES[v][0] for v in cg.G2_LOOP_FREE]
        lines.append(f"  edge set equals the reference drawing: {drawn}")
        lines.append(f"  loop-free vertices: {', '.join(loop_free)}")
        ok = drawn and loop_free == want and len(G.vertices) == 22
    L = cg.letter_composition_graph(k)
    lines.append(f"G_{k}(w7): " + L.lines()[0])
    lines.extend(L.lines()[1:])
    data["letters"] = L.to_dict()
    if k == 2:
        same = L.labelled_edges() == cg.x_chain_edges_labelled() and not L.loop_free
        lines.append(f"  equals the reversed x-letter diagram with loops: {same}")
        ok = ok and same
    if k == 7:
        same = L.labelled_edges() == cg.e6_chain_edges_labelled() and not L.loop_free
        lines.append(f"  equals the 4-chain with loops: {same}")
        ok = ok and same
    return ok, lines, data


def _check_phi(s, args):
    from .kr import KRCrystal, PhiAutomorphism, phi_via_sigma, printed_phi_report
    from .rows import is_i02_highest
    kr = KRCrystal(s)
    phi = PhiAutomorphism(s)
    table = phi.table()
    involution = all(table[table[b]] == b for b in table)
    hw = [b for b in table if is_i02_highest(b)]
    sigma_ok = all(table[b] == phi_via_sigma(kr, b) for b in hw)
    rep = printed_phi_report(s, phi)
    lines = [
        f"Phi on B^(7,{s}): {len(table)} elements",
        f"involution: {involution}",
        f"agrees with psi^-1 sigma psi on {len(hw)} I02-highest elements: {sigma_ok}",
        *rep.lines(),
    ]
    data = {"s": s, "involution": involution, "sigma_agreement": sigma_ok,
            "printed_preserves_length": rep.printed_preserves_length,
            "reversed_matches": rep.reversed_matches}
    return involution and sigma_ok, lines, data


SUITES = {
    "axioms": _check_axioms,
    "perfect": _check_perfect,
    "conjecture": _check_conjecture,
    "prop42": _check_prop42,
    "compgraph": _check_compgraph,
    "phi": _check_phi,
}
DEFAULT_S = {"axioms": 2, "perfect": 2, "conjecture": 2, "prop42": 2, "compgraph": 2, "phi": 2}


def cmd_check(args) -> int:
    s = DEFAULT_S[args.suite] if args.s is None else args.s
    ok, lines, data = SUITES[args.suite](s, args)
    print("\n".join(lines))
    print(f"result: {'PASS' if ok else 'FAIL'}")
    data = {"suite": args.suite, "s": s, "pass": bool(ok), "report": data}
    out = Path(args.out) if args.out else cache_dir(args.cache_dir) / "reports" / f"{args.suite}-{s}.json"
    atomic_write(out, json.dumps(data, ensure_ascii=False, sort_keys=True, indent=1, default=list) + "\n")
    return EXIT_OK if ok else EXIT_FALSIFIED


# -- decompose -----------------------------------------------------------------------

def _fmt_weight(a, prefix="fwA"):
    terms = [f"{'' if c == 1 else c}{prefix}{k}" for k, c in enumerate(a, start=1) if c]
    return " + ".join(terms) if terms else "0"


def cmd_decompose(args) -> int:
    s = args.s
    if s > DEFAULT_MAX_S:
        raise ResourceLimitError(f"decomposition bounded by s <= {DEFAULT_MAX_S}, got {s}")
    if args.target == "a6":
        from .kr import a6_components
        comps = a6_components(s)
        total = 0
        print(f"A6 components of B({s} w7): {len(comps)}")
        for p, mu in comps:
            d = dim_A(mu)
            total += d
            print(f"  {_fmt_weight(mu):<30} multiplicity 1  dimension {d:>7}  params {p}")
        print(f"dimension sum {total} (|B({s} w7)| = {_expected_size('rows', s)})")
    elif args.target == "a7":
        from .kr import a7_components
        comps = sorted(a7_components(s))
        total = 0
        print(f"A7 components of B^(7,{s}): {len(comps)}")
        for mu in comps:
            d = dim_A(mu)
            total += d
            print(f"  {_fmt_weight(mu):<30} multiplicity 1  dimension {d:>7}")
        print(f"dimension sum {total} (|B({s} w7)| = {_expected_size('rows', s)})")
    else:
        from .kr import e6_decomposition
        print("\n".join(e6_decomposition(s).lines()))
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-nodes", type=int, default=None,
                        help="refuse to build graphs larger than this")
    common.add_argument("--cache-dir", default=None,
                        help="cache location (default: $E7KR_CACHE_DIR or ~/.cache/e7kr)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker count; computations currently run in one process")
    common.add_argument("--out", default=None, help="output file")

    p = _Parser(prog="e7kr", description="KR crystals B^(7,s) of type E7^(1)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="build a crystal graph")
    b.add_argument("kind", choices=["letters", "rows", "kr", "adjoint"])
    b.add_argument("s", type=int, nargs="?", default=None)
    b.add_argument("--format", choices=["dot", "json"], default="json")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", parents=[common], help="run a verification suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("s", type=int, nargs="?", default=None)
    c.add_argument("--allow-s4", action="store_true", help="permit the s = 4 conjecture check")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("decompose", parents=[common], help="Levi branching of B(s w7)")
    d.add_argument("target", choices=["a6", "a7", "e6"])
    d.add_argument("s", type=int)
    d.set_defaults(func=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "s", None) is not None and args.s < 0:
        parser.error("s must be nonnegative")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"e7kr: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except BadArgs as exc:
        print(f"e7kr: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
