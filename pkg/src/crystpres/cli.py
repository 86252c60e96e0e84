"""Command-line front end.

One subcommand per analysis: `present`, `verify`, `cseq`, `geodesics`,
`rings`, `quotient`, `catalog`.  Every command accepts `--report PATH`
to write a JSON report; the same JSON always goes to stdout, and a
short human-readable summary goes to stderr.  Reports echo all
effective option values so runs are reproducible, and their bytes are
stable for fixed inputs.

Exit codes: 0 success, 2 input error, 3 inconclusive verification,
4 verification failure or analysis error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bfs import (
    BallBoundExceeded,
    TargetUnreachable,
    coordination_sequence,
    geodesics,
)
from .cosets import DEFAULT_MAX_COSETS
from .netgraph import (
    CATALOG_ENV,
    DEFAULT_RING_CAP,
    GraphError,
    catalog_load,
    catalog_names,
    from_cayley,
    net_coordination_sequence,
    net_geodesics,
    quotient_by_sublattice,
    ring_size_counts,
    schlafli_symbol,
)
from .pipeline import (
    PipelineError,
    VerificationFailure,
    bounded_consequence_check,
    present,
)
from .symop import DocumentError, parse_generating_set
from .words import WordSyntaxError, parse_word

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_FAILURE = 4


class InputError(ValueError):
    pass


def _load_document(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_generating_set(text)
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_graph(args):
    if getattr(args, "net", None):
        try:
            return catalog_load(args.net)
        except GraphError as exc:
            raise InputError(str(exc)) from exc
    if getattr(args, "input", None):
        doc = _load_document(args.input)
        return from_cayley(doc)
    raise InputError("one of --net or --input is required")


def _parse_vector(text):
    try:
        return tuple(Fraction(x) for x in text.replace(" ", "").split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad vector {text!r}: {exc}") from exc


def _parse_m_list(text):
    try:
        ms = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad m list {text!r}") from exc
    if any(m < 2 for m in ms):
        raise InputError("m values must be >= 2")
    return ms


def _emit(report, args):
    payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(payload)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload)


def _summary(*lines):
    for line in lines:
        print(line, file=sys.stderr)


def _common_config(args, **extra):
    cfg = {"threads": args.threads}
    cfg.update(extra)
    return cfg


def cmd_present(args):
    doc = _load_document(args.input)
    ms = _parse_m_list(args.m)
    max_cosets = args.max if args.max else DEFAULT_MAX_COSETS
    orderings = [list(doc.generators)]
    if args.permute:
        from itertools import permutations
        orderings = [list(p) for p in permutations(doc.generators)]
    best = None
    for gens in orderings:
        report = present(gens, verify_orders=ms, max_cosets=max_cosets)
        total = sum(len(r) for r in report.presentation.relators)
        key = (total, report.to_dict()["relators"])
        if best is None or key < best[0]:
            best = (key, report)
    report = best[1]
    d = report.to_dict()
    d["config"] = _common_config(
        args, command="present", input=args.input, m=list(ms),
        max_cosets=max_cosets, permute=bool(args.permute),
    )
    _emit(d, args)
    _summary(
        f"group on {len(d['generators'])} generators, point group order "
        f"{d['point_group_order']}, lattice rank {d['lattice_rank']}",
        "relators: " + "; ".join(d["relators"]),
        f"verification: {d['verification']['verdict']}",
    )
    if d["verification"]["verdict"] == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args):
    doc = _load_document(args.input)
    ms = _parse_m_list(args.m)
    max_cosets = args.max if args.max else DEFAULT_MAX_COSETS
    report = present(doc, verify_orders=ms, max_cosets=max_cosets)
    d = report.to_dict()
    expectations = []
    exit_code = EXIT_OK
    if args.expect:
        names = report.presentation.generator_names
        for text in args.expect.split(";"):
            text = text.strip()
            if not text:
                continue
            try:
                word = parse_word(text, names=names)
            except WordSyntaxError as exc:
                raise InputError(f"bad relator {text!r}: {exc}") from exc
            verdict = bounded_consequence_check(
                report, word, ms=ms, max_cosets=max_cosets
            )
            expectations.append({"relator": text, "verdict": verdict})
    verdicts = [e["verdict"] for e in expectations]
    verdicts.append(d["verification"]["verdict"])
    if "fail" in verdicts:
        exit_code = EXIT_FAILURE
    elif "inconclusive" in verdicts:
        exit_code = EXIT_INCONCLUSIVE
    out = {
        "config": _common_config(
            args, command="verify", input=args.input, m=list(ms),
            max_cosets=max_cosets, expect=args.expect,
        ),
        "verification": d["verification"],
        "relators": d["relators"],
        "consequence_checks": expectations,
    }
    _emit(out, args)
    _summary(
        f"verification: {d['verification']['verdict']}",
        *(f"consequence {e['relator']}: {e['verdict']}" for e in expectations),
    )
    return exit_code


def cmd_cseq(args):
    radius = args.radius
    if args.net:
        g = _load_graph(args)
        seq = net_coordination_sequence(g, args.base, radius)
        source = {"net": args.net, "base": args.base}
    else:
        doc = _load_document(args.input)
        seq = coordination_sequence(doc.generators, radius)
        source = {"input": args.input}
    out = {
        "config": _common_config(args, command="cseq", radius=radius,
                                 **source),
        "coordination_sequence": seq,
        "cumulative": sum(seq),
    }
    _emit(out, args)
    _summary("coordination sequence: " + " ".join(map(str, seq)))
    return EXIT_OK


def cmd_geodesics(args):
    target = _parse_vector(args.target)
    cap = args.max if args.max else 200
    if args.net:
        g = _load_graph(args)
        length, count = net_geodesics(g, target, base=args.base, cap=cap)
    else:
        doc = _load_document(args.input)
        gs = geodesics(doc.generators, target, cap)
        length, count = gs.length, gs.count
    out = {
        "config": _common_config(
            args, command="geodesics", net=args.net, input=args.input,
            target=[str(x) for x in target], cap=cap, base=args.base,
        ),
        "length": length,
        "count": count,
    }
    _emit(out, args)
    _summary(f"{count} geodesics of length {length} to {args.target}")
    return EXIT_OK


def cmd_rings(args):
    g = _load_graph(args)
    max_size = args.max if args.max else DEFAULT_RING_CAP
    if args.all_vertices:
        symbol = schlafli_symbol(g, max_size=max_size, widen=args.widen)
        counts = dict(symbol.counts)
        sym_text = str(symbol)
    else:
        counts = ring_size_counts(g, args.base, max_size, widen=args.widen)
        sym_text = ".".join(
            f"{s}^{c}" if c > 1 else str(s) for s, c in sorted(counts.items())
        )
    out = {
        "config": _common_config(
            args, command="rings", net=args.net, input=args.input,
            max_size=max_size, widen=bool(args.widen), base=args.base,
            all_vertices=bool(args.all_vertices),
        ),
        "ring_counts": {str(k): v for k, v in sorted(counts.items())},
        "symbol": sym_text,
    }
    _emit(out, args)
    _summary(f"strong rings up to size {max_size}: {sym_text}")
    return EXIT_OK


def cmd_quotient(args):
    g = _load_graph(args)
    vectors = [_parse_vector(v) for v in args.target.split(";")]
    q = quotient_by_sublattice(g, vectors)
    seq = net_coordination_sequence(q, args.base, args.radius)
    out = {
        "config": _common_config(
            args, command="quotient", net=args.net, input=args.input,
            target=[[str(x) for x in v] for v in vectors],
            radius=args.radius, base=args.base, max_size=args.max,
        ),
        "rank": q.rank,
        "vertices": q.n,
        "coordination_sequence": seq,
        "topological_density": sum(seq),
    }
    lines = [
        f"quotient: rank {q.rank}, {q.n} vertices, "
        f"TD{args.radius} = {sum(seq)}",
    ]
    if args.max:
        symbol = schlafli_symbol(q, max_size=args.max, widen=args.widen)
        out["symbol"] = str(symbol)
        out["ring_counts"] = {str(k): v for k, v in symbol.counts}
        lines.append(f"ring symbol (cap {args.max}): {symbol}")
    _emit(out, args)
    _summary(*lines)
    return EXIT_OK


def cmd_catalog(args):
    if args.net:
        g = catalog_load(args.net)
        out = {
            "config": _common_config(args, command="catalog", net=args.net),
            "name": args.net,
            "rank": g.rank,
            "vertices": g.n,
            "degrees": sorted(g.degree(v) for v in range(g.n)),
            "edges": [[u, v, list(s)] for u, v, s in g.edges],
            "cell": [[str(x) for x in row] for row in g.cell]
            if g.cell is not None else None,
        }
        _emit(out, args)
        _summary(g.to_text().rstrip())
    else:
        names = catalog_names()
        entries = []
        for n in names:
            g = catalog_load(n)
            entries.append({
                "name": n, "rank": g.rank, "vertices": g.n,
                "degrees": sorted(set(g.degree(v) for v in range(g.n))),
            })
        out = {
            "config": _common_config(args, command="catalog", net=None),
            "nets": entries,
        }
        _emit(out, args)
        _summary(", ".join(names))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crystpres",
        description="Short presentations and periodic-graph analysis for "
                    "crystallographic groups.",
        epilog=f"Set {CATALOG_ENV} to override the bundled net catalog "
               "directory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        p.add_argument("--report", help="write the JSON report to this path")
        p.add_argument("--threads", type=int, default=1,
                       help="worker bound for parallel stages (output is "
                            "deterministic regardless)")
        return p

    p = add("present", cmd_present,
            help="compute a short presentation from a generator document")
    p.add_argument("--input", required=True)
    p.add_argument("--m", default="2,3",
                   help="comma-separated quotient orders for verification")
    p.add_argument("--max", type=int, help="coset enumeration bound")
    p.add_argument("--permute", action="store_true",
                   help="retry all generator orderings, keep the shortest")

    p = add("verify", cmd_verify,
            help="verify pipeline output and optional expected relators")
    p.add_argument("--input", required=True)
    p.add_argument("--m", default="2,3")
    p.add_argument("--max", type=int, help="coset enumeration bound")
    p.add_argument("--expect",
                   help="semicolon-separated relators to consequence-check")

    p = add("cseq", cmd_cseq, help="coordination sequence")
    p.add_argument("--input")
    p.add_argument("--net", help="bundled net name")
    p.add_argument("--radius", type=int, default=10)
    p.add_argument("--base", type=int, default=0)

    p = add("geodesics", cmd_geodesics,
            help="count shortest words/paths to a lattice translation")
    p.add_argument("--input")
    p.add_argument("--net")
    p.add_argument("--target", required=True,
                   help="translation vector, e.g. 4,12")
    p.add_argument("--max", type=int, help="search length cap")
    p.add_argument("--base", type=int, default=0)

    p = add("rings", cmd_rings, help="strong rings through a vertex")
    p.add_argument("--input")
    p.add_argument("--net")
    p.add_argument("--max", type=int, help="ring size cap")
    p.add_argument("--widen", action="store_true",
                   help="widen the decomposition locality ball by 2")
    p.add_argument("--base", type=int, default=0)
    p.add_argument("--all-vertices", action="store_true",
                   help="aggregate over all vertices (Schlafli symbol)")

    p = add("quotient", cmd_quotient,
            help="quotient a net by translation vectors")
    p.add_argument("--input")
    p.add_argument("--net")
    p.add_argument("--target", required=True,
                   help="semicolon-separated translation vectors in "
                        "conventional coordinates, e.g. '5/2,5/2,1/2'")
    p.add_argument("--radius", type=int, default=10,
                   help="coordination sequence radius for the quotient")
    p.add_argument("--max", type=int,
                   help="also compute the ring symbol up to this size")
    p.add_argument("--widen", action="store_true")
    p.add_argument("--base", type=int, default=0)

    p = add("catalog", cmd_catalog, help="list or show bundled nets")
    p.add_argument("--net", help="show one net in full")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (PipelineError, GraphError, BallBoundExceeded,
            TargetUnreachable, WordSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
