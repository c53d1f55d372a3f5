"""Command-line front end.

Each subcommand is a thin wrapper over the library: parse files, build
the requested engine, delegate, map results to exit codes.  Diagnostics
go to stderr, machine-readable results to stdout.

Exit codes: 0 success or "Yes"; 1 "No" or invalid surface; 2 parse, IO,
configuration, or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classify import classify, extract_component, homeomorphic, normal_form_name
from .engine import make_engine
from .errors import BudgetExceeded, InvalidSurface, SurfclassError
from .generate import FamilySpec, Relabel, Subdivide, generate
from .graphs import double_cover, face_dual, vertex_identification_graph, \
    boundary_identification_graph
from .invariants import invariant_triple
from .triangulation import parse, serialize, input_symbol_count

BENCH_SIZES = (8, 16, 32, 64, 128, 256, 512, 1024)


def _read_triangulation(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SurfclassError(f"cannot read {path}: {exc}") from None
    return parse(text)


def _engine_for(args, tri):
    return make_engine(engine=args.engine, oracle=args.oracle, tri=tri,
                       budget_bits=args.budget_bits)


def _write_space_report(args, engine, extra_symbols=None):
    if not getattr(args, "space_report", None):
        return
    ws = engine.workspace
    if ws is None:
        report = {"input_symbols": extra_symbols or 0, "budget_bits": 0,
                  "peak_bits": 0, "input_reads": 0}
    else:
        report = ws.space_report()
    Path(args.space_report).write_text(json.dumps(report) + "\n", encoding="utf-8")


def _triple_line(triple):
    name = normal_form_name(triple)
    return f"o={triple.o} chi={triple.chi} b={triple.b} name={name.text}"


def cmd_check(args):
    tri = _read_triangulation(args.file)
    engine = _engine_for(args, tri)
    violations = engine.check(tri)
    for violation in violations:
        print(violation)
    _write_space_report(args, engine)
    return 0 if not violations else 1


def cmd_classify(args):
    tri = _read_triangulation(args.file)
    engine = _engine_for(args, tri)
    for triple in classify(tri, engine):
        print(_triple_line(triple))
    _write_space_report(args, engine)
    return 0


def cmd_invariants(args):
    tri = _read_triangulation(args.file)
    engine = _engine_for(args, tri)
    violations = engine.check(tri)
    if violations:
        raise InvalidSurface("input is not a surface", violations)
    if tri.n:
        count = engine.count_components(engine.dual_graph(tri))
        for i in range(1, count + 1):
            component = tri if count == 1 else extract_component(tri, i, engine)
            print(_triple_line(invariant_triple(component, engine)))
    _write_space_report(args, engine)
    return 0


def cmd_homeomorphic(args):
    tri1 = _read_triangulation(args.file1)
    tri2 = _read_triangulation(args.file2)
    if args.engine == "metered":
        # one workspace for the pair; the instance is both tapes
        symbols = input_symbol_count(tri1) + input_symbol_count(tri2)
        engine = make_engine(engine="metered", oracle=args.oracle,
                             input_symbols=symbols, budget_bits=args.budget_bits)
    else:
        engine = _engine_for(args, tri1)
    try:
        same = homeomorphic(tri1, tri2, engine)
    except InvalidSurface as exc:
        print(f"{exc.which} input is not a surface:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return 1
    _write_space_report(args, engine)
    print("Yes" if same else "No")
    return 0 if same else 1


def cmd_double_cover(args):
    tri = _read_triangulation(args.file)
    print(serialize(double_cover(tri)))
    return 0


def cmd_graph(args):
    tri = _read_triangulation(args.file)
    builder = {"dual": face_dual, "K": vertex_identification_graph,
               "Kprime": boundary_identification_graph}[args.kind]
    graph = builder(tri)
    print(f"v {graph.num_vertices}")
    for a, b in graph.sorted_edges():
        print(f"e {a} {b}")
    return 0


def _parse_family(text):
    """Compact family spec: name[:genus][:punctures], e.g. orientable:2:1."""
    parts = text.split(":")
    family = parts[0]
    genus = int(parts[1]) if len(parts) > 1 else 0
    punctures = int(parts[2]) if len(parts) > 2 else 0
    return FamilySpec(family=family, genus=genus, punctures=punctures)


def cmd_generate(args):
    if args.union:
        components = tuple(_parse_family(part) for part in args.union.split(","))
        spec = FamilySpec(family="union", components=components)
    else:
        spec = FamilySpec(family=args.family, genus=args.genus,
                          punctures=args.punctures)
    mutations = []
    if args.subdivide:
        mutations.append(Subdivide(count=args.subdivide,
                                   seed=args.subdivide_seed
                                   if args.subdivide_seed is not None else args.seed or 0))
    if args.relabel or args.relabel_seed is not None:
        mutations.append(Relabel(seed=args.relabel_seed
                                 if args.relabel_seed is not None else args.seed or 0))
    if mutations:
        spec = FamilySpec(family=spec.family, genus=spec.genus,
                          punctures=spec.punctures, components=spec.components,
                          mutations=tuple(mutations))
    tape = serialize(generate(spec))
    if args.output:
        Path(args.output).write_text(tape + "\n", encoding="utf-8")
    else:
        print(tape)
    return 0


def _bench_input(n):
    """Connected annulus grown to exactly n triangles by subdivision."""
    if n < 4 or n % 2:
        raise SurfclassError(f"bench sizes must be even and >= 4, got {n}")
    spec = FamilySpec(family="orientable", genus=0, punctures=2,
                      mutations=(Subdivide(count=(n - 4) // 2, seed=1),))
    return generate(spec)


def cmd_bench_space(args):
    if args.engine != "metered":
        print("bench-space: forcing --engine metered", file=sys.stderr)
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else list(BENCH_SIZES)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in sizes:
        tri = _bench_input(n)
        assert tri.n == n
        engine = make_engine(engine="metered", oracle=args.oracle or "savitch",
                             tri=tri, budget_bits=args.budget_bits)
        result = classify(tri, engine)
        report = engine.workspace.space_report()
        path = out_dir / f"space-n{n}.json"
        path.write_text(json.dumps(report) + "\n", encoding="utf-8")
        print(f"n={n} symbols={report['input_symbols']} "
              f"peak_bits={report['peak_bits']} budget={report['budget_bits']} "
              f"triples={[tuple(t) for t in result]}", file=sys.stderr)
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="surfclass",
        description="Classify triangulated surfaces and decide homeomorphism.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--engine", choices=("baseline", "metered"), default="baseline")
        p.add_argument("--oracle", choices=("unionfind", "savitch", "derand"),
                       default=None)
        p.add_argument("--space-report", metavar="PATH", default=None)
        p.add_argument("--budget-bits", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("check", help="validate the gluing table")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="sorted invariant triples of all components")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="per-component invariants in component order")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("homeomorphic", help="decide homeomorphism of two surfaces")
    p.add_argument("file1")
    p.add_argument("file2")
    common(p)
    p.set_defaults(func=cmd_homeomorphic)

    p = sub.add_parser("double-cover", help="print the orientation double cover")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_double_cover)

    p = sub.add_parser("graph", help="print an auxiliary graph")
    p.add_argument("--kind", choices=("dual", "K", "Kprime"), required=True)
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("generate", help="emit a test surface in tape format")
    p.add_argument("--family", choices=("sphere", "orientable", "nonorientable",
                                        "disk", "moebius"), default="sphere")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument("--union", metavar="SPECS", default=None,
                   help="comma-separated family[:genus][:punctures] parts")
    p.add_argument("--subdivide", type=int, default=0, metavar="COUNT")
    p.add_argument("--subdivide-seed", type=int, default=None)
    p.add_argument("--relabel", action="store_true")
    p.add_argument("--relabel-seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench-space", help="metered classify over doubling sizes")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--sizes", default=None, help="comma-separated triangle counts")
    common(p)
    p.set_defaults(func=cmd_bench_space)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSurface as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SurfclassError, NotImplementedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
