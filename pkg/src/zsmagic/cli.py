"""Command-line front end.

Verbs: ``info``, ``zsp``, ``bijection``, ``kotzig``, ``label``, ``verify``,
``search``, ``scan``.  Certificates are printed on stdout in the text
formats of the owning modules (lines starting with ``#`` are annotations
the parsers ignore), so output can be piped to a file and re-checked with
``verify``.

Exit codes: 0 success or accepted certificate, 1 rejected certificate or
scan counterexample, 2 invalid input, 3 proven nonexistence or
obstruction, 4 search budget exhausted.  ``--json`` switches to a single
machine-readable document per invocation; identical invocations produce
byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graphs, kotzig, oracle
from .errors import NonexistenceError, ParameterError, ZsmagicError
from .groups import (
    canonical_factors,
    format_element,
    in_class_g,
    involution_count,
    parse_group_spec,
    sum_all,
)
from .zsp import (
    bijection_from_text,
    bijection_to_text,
    partition_from_text,
    partition_to_text,
    triple_bijection,
    verify_triple_bijection,
    verify_zsp,
)
from .zsp import zsp as build_zsp

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_INVALID = 2
EXIT_NONEXISTENT = 3
EXIT_BUDGET = 4


def _canonical_string(spec) -> str:
    return "x".join(f"Z{f}" for f in canonical_factors(spec)) or "Z1"


def _handle_info(args):
    spec = parse_group_spec(args.group)
    doc = {
        "command": "info",
        "group": str(spec),
        "order": spec.order,
        "canonical": _canonical_string(spec),
        "involutions": involution_count(spec),
        "class_g": in_class_g(spec),
        "sum_all": format_element(sum_all(spec)),
    }
    text = [
        f"group: {spec}",
        f"order: {spec.order}",
        f"canonical: {doc['canonical']}",
        f"involutions: {doc['involutions']}",
        f"in class G: {'yes' if doc['class_g'] else 'no'}",
        f"sum of all elements: {doc['sum_all']}",
    ]
    return EXIT_OK, doc, text


def _handle_zsp(args):
    spec = parse_group_spec(args.group)
    partition = build_zsp(spec, args.m)
    check = verify_zsp(spec, partition, args.m)
    cert = partition_to_text(partition)
    doc = {
        "command": "zsp",
        "group": str(spec),
        "m": args.m,
        "blocks": len(partition.blocks),
        "certificate": cert,
        "verified": bool(check.ok),
    }
    text = cert.splitlines() + [f"# verified: {'accept' if check.ok else 'reject'}"]
    return EXIT_OK, doc, text


def _handle_bijection(args):
    spec = parse_group_spec(args.group)
    tb = triple_bijection(spec)
    check = verify_triple_bijection(tb)
    cert = bijection_to_text(tb)
    doc = {
        "command": "bijection",
        "group": str(spec),
        "certificate": cert,
        "verified": bool(check.ok),
    }
    text = cert.splitlines() + [f"# verified: {'accept' if check.ok else 'reject'}"]
    return EXIT_OK, doc, text


def _handle_kotzig(args):
    if args.int_mode:
        try:
            k = int(args.target)
        except ValueError:
            raise ParameterError(f"--int expects an integer column count, got {args.target!r}")
        array = kotzig.build_int_kotzig(args.j, k)
        column_sum = str(array.column_sum())
    else:
        spec = parse_group_spec(args.target)
        array = kotzig.build_group_kotzig(spec, args.j)
        column_sum = format_element(array.column_sum())
    check = kotzig.verify_kotzig(array)
    cert = kotzig.array_to_text(array)
    doc = {
        "command": "kotzig",
        "target": args.target,
        "j": args.j,
        "int_mode": args.int_mode,
        "column_sum": column_sum,
        "certificate": cert,
        "verified": bool(check.ok),
    }
    text = cert.splitlines() + [
        f"# column sum: {column_sum}",
        f"# verified: {'accept' if check.ok else 'reject'}",
    ]
    return EXIT_OK, doc, text


def _handle_label(args):
    base = graphs.graph_from_text(Path(args.graphfile).read_text())
    spec = parse_group_spec(args.group)
    if args.kind == "blowup":
        labeling = graphs.blowup_label(base, args.n, spec)
    elif args.kind == "even":
        labeling = graphs.blowup_even_label(base, args.n, spec)
    else:
        labeling = graphs.eulerian_bipartite_label(base, args.n, spec)
    product = graphs.lex_product(base, graphs.empty_graph(args.n))
    verdict = graphs.verify_labeling(product, labeling)
    if args.emit_graph:
        Path(args.emit_graph).write_text(graphs.graph_to_text(product))
    cert = graphs.labeling_to_text(labeling)
    doc = {
        "command": "label",
        "kind": args.kind,
        "group": str(spec),
        "n": args.n,
        "status": verdict.status,
        "magic_constant": format_element(verdict.mu) if verdict.mu is not None else None,
        "certificate": cert,
    }
    text = cert.splitlines() + [
        f"# status: {verdict.status}",
        f"# magic constant: {doc['magic_constant']}",
    ]
    return EXIT_OK, doc, text


def _verify_payload(text: str, graph_path: str | None):
    head = next(
        (ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")),
        "",
    )
    kind = head.split()[0] if head.split() else ""
    if kind == "partition":
        partition = partition_from_text(text)
        check = verify_zsp(partition.spec, partition, partition.m)
        return "partition", bool(check.ok), check.reason
    if kind == "bijection":
        tb = bijection_from_text(text)
        check = verify_triple_bijection(tb)
        return "bijection", bool(check.ok), check.reason
    if kind in ("kotzig", "kotzig-int"):
        array = kotzig.array_from_text(text)
        check = kotzig.verify_kotzig(array)
        return kind, bool(check.ok), check.reason
    if kind == "labeling":
        labeling = graphs.labeling_from_text(text)
        if graph_path is None:
            return "labeling", True, "bijection onto the group (no graph supplied)"
        g = graphs.graph_from_text(Path(graph_path).read_text())
        verdict = graphs.verify_labeling(g, labeling)
        reason = None if verdict.is_magic else f"weights differ at vertices {verdict.witness}"
        return "labeling", verdict.is_magic, reason
    if kind == "partition-sizes":
        spec, blocks, sizes = oracle.sized_partition_from_text(text)
        check = oracle.verify_sized_partition(spec, blocks, sizes)
        return "partition-sizes", bool(check.ok), check.reason
    if kind == "report":
        rkind, report = oracle.report_from_text(text)
        if not report.found or report.witness is None:
            return "report", True, "no witness to check"
        body = oracle.report_to_text(report, rkind).split("\n", 1)[1]
        return _verify_payload(body, graph_path)
    raise ParameterError(f"unrecognised certificate kind {kind!r}")


def _handle_verify(args):
    text = Path(args.certificate).read_text()
    kind, ok, reason = _verify_payload(text, args.graph)
    doc = {
        "command": "verify",
        "kind": kind,
        "accepted": ok,
        "reason": reason,
    }
    lines = [f"{'accept' if ok else 'reject'}: {kind}" + (f" ({reason})" if reason else "")]
    return (EXIT_OK if ok else EXIT_REJECT), doc, lines


def _report_exit(report) -> int:
    if report.found:
        return EXIT_OK
    return EXIT_NONEXISTENT if report.exhausted else EXIT_BUDGET


def _handle_search(args):
    kind = args.kind
    if args.kind == "zsp":
        spec = parse_group_spec(args.args[0])
        report = oracle.search_zsp(spec, int(args.args[1]), args.budget)
    elif args.kind == "bijection":
        spec = parse_group_spec(args.args[0])
        report = oracle.search_triple_bijection(spec, args.budget)
    elif args.kind == "kotzig":
        target = int(args.args[0]) if args.int_mode else parse_group_spec(args.args[0])
        report = oracle.search_kotzig(target, int(args.args[1]), args.budget)
        kind = "kotzig-int" if args.int_mode else "kotzig"
    elif args.kind == "labeling":
        g = graphs.graph_from_text(Path(args.args[0]).read_text())
        spec = parse_group_spec(args.args[1])
        report = oracle.search_labeling(g, spec, args.budget)
    else:
        raise ParameterError(f"unknown search kind {args.kind!r}")
    cert = oracle.report_to_text(report, kind)
    doc = {
        "command": "search",
        "kind": args.kind,
        "found": report.found,
        "exhausted": report.exhausted,
        "nodes": report.nodes,
        "certificate": cert,
    }
    return _report_exit(report), doc, cert.splitlines()


def _handle_scan(args):
    rows = []
    exit_code = EXIT_OK
    for spec, sizes, report in oracle.scan_conjecture(args.max_order, args.budget):
        rows.append(
            {
                "group": str(spec),
                "sizes": list(sizes),
                "found": report.found,
                "exhausted": report.exhausted,
                "nodes": report.nodes,
            }
        )
        if not report.exhausted:
            exit_code = max(exit_code, EXIT_BUDGET)
        elif not report.found:
            exit_code = EXIT_REJECT  # counterexample to the partition conjecture
    doc = {
        "command": "scan",
        "max_order": args.max_order,
        "instances": rows,
        "counterexamples": [r for r in rows if r["exhausted"] and not r["found"]],
    }
    text = [
        f"# {r['group']} sizes={','.join(str(s) for s in r['sizes'])}: "
        f"{'found' if r['found'] else 'NOT FOUND'} nodes={r['nodes']}"
        for r in rows
    ]
    text.append(
        f"scanned {len(rows)} instances up to order {args.max_order}; "
        f"counterexamples: {len(doc['counterexamples'])}"
    )
    return exit_code, doc, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsmagic",
        description="zero-sum partitions, Kotzig arrays and group distance magic labelings",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="order, canonical form, involutions, class membership")
    p.add_argument("group")
    p.set_defaults(handler=_handle_info)

    p = sub.add_parser("zsp", help="build an m-zero-sum partition")
    p.add_argument("group")
    p.add_argument("m", type=int)
    p.set_defaults(handler=_handle_zsp)

    p = sub.add_parser("bijection", help="build a triple bijection")
    p.add_argument("group")
    p.set_defaults(handler=_handle_bijection)

    p = sub.add_parser("kotzig", help="build a j x k Kotzig array")
    p.add_argument("target", help="group spec, or k with --int")
    p.add_argument("j", type=int)
    p.add_argument("--int", dest="int_mode", action="store_true", help="integer array on 0..k-1")
    p.set_defaults(handler=_handle_kotzig)

    p = sub.add_parser("label", help="build a magic labeling of a blow-up")
    p.add_argument("kind", choices=("blowup", "eulerian", "even"))
    p.add_argument("graphfile")
    p.add_argument("n", type=int)
    p.add_argument("group")
    p.add_argument("--emit-graph", help="also write the blown-up graph to this file")
    p.set_defaults(handler=_handle_label)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("certificate")
    p.add_argument("--graph", help="graph file for labeling certificates")
    p.set_defaults(handler=_handle_verify)

    p = sub.add_parser("search", help="exhaustive search oracles")
    p.add_argument("kind", choices=("zsp", "bijection", "kotzig", "labeling"))
    p.add_argument("args", nargs="+")
    p.add_argument("--int", dest="int_mode", action="store_true")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(handler=_handle_search)

    p = sub.add_parser("scan", help="zero-sum partition conjecture scan")
    p.add_argument("max_order", type=int)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(handler=_handle_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        code, doc, text = args.handler(args)
    except NonexistenceError as exc:
        return _emit_error(args, "nonexistence", exc, EXIT_NONEXISTENT)
    except (ZsmagicError, ValueError) as exc:
        return _emit_error(args, "invalid-input", exc, EXIT_INVALID)
    except OSError as exc:
        return _emit_error(args, "io", exc, EXIT_INVALID)
    if args.json:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for line in text:
            print(line)
    return code


def _emit_error(args, kind: str, exc: Exception, code: int) -> int:
    if getattr(args, "json", False):
        doc = {
            "command": getattr(args, "command", None),
            "status": "error",
            "error_kind": kind,
            "message": str(exc),
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
