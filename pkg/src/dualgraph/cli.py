"""Command line interface.

Exit status: 0 on success / positive verdict, 1 on a negative verdict or a
reported violation, 2 on usage or document errors. Commands that produce a
witness or graph document write it to stdout and their verdict line to
stderr, so they compose in pipelines.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import io, named
from .classify import DefinitelyNot, SandwichWitness, is_regular, is_sandwiched, verify_sandwich
from .corpus import roundtrip_suite
from .graph import GraphError, validate
from .matrix import determinant, intersection_matrix, is_negative_definite
from .modification import ModificationError, blowdown, blowup_edge, blowup_vertex
from .selfsim import (
    DEFAULT_K_MAX,
    BudgetExceeded,
    SelfSimWitness,
    extract_sandwich,
    is_self_similar,
    verify_witness,
)

OK, NO, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str):
    return io.parse_named(_read(path))


def _emit(
    args, payload: dict[str, Any], human: str, document: str | None = None, stderr: bool = False
) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
        return
    if document is None and not stderr:
        print(human)
        return
    print(human, file=sys.stderr)
    if document is not None:
        sys.stdout.write(document)


def cmd_validate(args) -> int:
    doc = io.loads(_read(args.file))
    verts, edges = io.raw_graph(doc)
    problem = validate(verts, edges)
    if problem is None:
        _emit(args, {"ok": True}, "ok")
        return OK
    _emit(args, {"ok": False, "kind": problem.kind, "message": problem.message}, problem.message)
    return NO


def cmd_blowup(args) -> int:
    g, name = _graph(args.file)
    new_id = g.fresh_id() if args.new_id is None else args.new_id
    try:
        if args.vertex is not None:
            h = blowup_vertex(g, args.vertex, new_id)
        else:
            try:
                u, w = (int(x) for x in args.edge.split(","))
            except ValueError:
                raise UsageError(f"--edge expects U,W, got {args.edge!r}") from None
            h = blowup_edge(g, (u, w), new_id)
    except ModificationError as exc:
        raise UsageError(str(exc)) from None
    text = io.serialize(h)
    if args.json:
        print(json.dumps({"ok": True, "graph": io.graph_data(h)}, sort_keys=True))
    else:
        sys.stdout.write(text)
    return OK


def cmd_blowdown(args) -> int:
    g, _ = _graph(args.file)
    try:
        h, undone = blowdown(g, args.vertex)
    except ModificationError as exc:
        _emit(args, {"ok": False, "message": str(exc)}, f"blowdown rejected: {exc}")
        return NO
    if args.json:
        payload = {"ok": True, "graph": io.graph_data(h), "undone": io.step_data(undone)}
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(io.serialize(h))
    return OK


def cmd_matrix(args) -> int:
    g, _ = _graph(args.file)
    m = intersection_matrix(g)
    human = "\n".join(" ".join(f"{x:3d}" for x in row) for row in m.entries)
    _emit(args, {"ordering": list(m.ordering), "entries": m.rows()}, human)
    return OK


def cmd_negdef(args) -> int:
    g, _ = _graph(args.file)
    verdict = is_negative_definite(intersection_matrix(g))
    _emit(args, {"negative_definite": verdict}, "yes" if verdict else "no")
    return OK if verdict else NO


def cmd_det(args) -> int:
    g, _ = _graph(args.file)
    d = determinant(intersection_matrix(g))
    _emit(args, {"determinant": d}, str(d))
    return OK


def cmd_is_regular(args) -> int:
    g, _ = _graph(args.file)
    w = is_regular(g)
    if w is None:
        _emit(args, {"verdict": "no"}, "no")
        return NO
    payload = {"verdict": "yes", "witness": io.regularity_data(w)}
    _emit(args, payload, f"yes\nblowdown order: {list(w.blowdown_order)}")
    return OK


def _connected_or_usage(g) -> None:
    if len(g.components()) != 1:
        raise UsageError("input graph is not connected")


def _negative(args, verdict) -> int:
    kind = "definitely-not" if isinstance(verdict, DefinitelyNot) else "no-within-budget"
    payload: dict[str, Any] = {"verdict": kind, "reason": verdict.reason}
    if kind == "no-within-budget":
        payload["budget"] = verdict.budget
    _emit(args, payload, f"{kind}: {verdict.reason}", stderr=True)
    return NO


def cmd_is_sandwiched(args) -> int:
    g, _ = _graph(args.file)
    _connected_or_usage(g)
    verdict = is_sandwiched(g, args.budget)
    if not isinstance(verdict, SandwichWitness):
        return _negative(args, verdict)
    doc = io.sandwich_data(g, verdict)
    leaves = sum(verdict.leaves.values())
    human = f"yes ({leaves} leaf)" if leaves == 1 else f"yes ({leaves} leaves)"
    _emit(args, {"verdict": "yes", "witness": doc}, human, io.dumps(doc))
    return OK


def cmd_is_self_similar(args) -> int:
    g, _ = _graph(args.file)
    _connected_or_usage(g)
    verdict = is_self_similar(g, args.budget, args.at)
    if not isinstance(verdict, SelfSimWitness):
        return _negative(args, verdict)
    doc = io.selfsim_data(verdict)
    human = f"yes ({len(verdict.seq.steps)} steps)"
    _emit(args, {"verdict": "yes", "witness": doc}, human, io.dumps(doc))
    return OK


def _witness_doc(path: str) -> dict[str, Any]:
    doc = json.loads(_read(path)) if path else {}
    if isinstance(doc, dict) and "witness" in doc and "kind" not in doc:
        doc = doc["witness"]
    return io.loads(json.dumps(doc))


def cmd_verify_witness(args) -> int:
    doc = _witness_doc(args.file)
    kind = doc.get("kind")
    if kind == "selfsim-witness":
        problem = verify_witness(io.selfsim_from_data(doc))
    elif kind == "sandwich-witness":
        g, w = io.sandwich_from_data(doc)
        problem = verify_sandwich(g, w)
    else:
        raise UsageError(f"not a witness document (kind {kind!r})")
    if problem is None:
        _emit(args, {"ok": True, "kind": kind}, "ok")
        return OK
    _emit(args, {"ok": False, "kind": kind, "message": problem.message}, problem.message)
    return NO


def cmd_extract(args) -> int:
    doc = _witness_doc(args.file)
    if doc.get("kind") != "selfsim-witness":
        raise UsageError("extract needs a selfsim-witness document")
    w = io.selfsim_from_data(doc)
    problem = verify_witness(w)
    if problem is not None:
        message = f"invalid witness: {problem}"
        _emit(args, {"ok": False, "message": problem.message}, message, stderr=True)
        return NO
    try:
        x = extract_sandwich(w, args.k_max)
    except BudgetExceeded as exc:
        _emit(args, {"ok": False, "message": str(exc)}, f"budget-exceeded: {exc}", stderr=True)
        return NO
    out = io.extraction_data(x)
    _emit(args, {"ok": True, "extraction": out}, f"regular graph found at k = {x.k}", io.dumps(out))
    return OK


def cmd_roundtrip(args) -> int:
    report = roundtrip_suite(args.seed, args.count, args.budget)
    payload = {
        "total": report.total,
        "passed": report.passed,
        "seconds": round(report.seconds, 3),
        "failures": report.failures,
    }
    lines = [f"{report.passed}/{report.total} passed in {report.seconds:.2f}s"]
    lines += report.failures
    _emit(args, payload, "\n".join(lines))
    return OK if report.ok else NO


def cmd_named(args) -> int:
    try:
        g = named.named(args.name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"name": args.name, "graph": io.graph_data(g)}, sort_keys=True))
    else:
        sys.stdout.write(io.serialize(g, args.name))
    return OK


def to_dot(g, name: str | None = None) -> str:
    lines = [f"graph {json.dumps(name or 'G')} {{"]
    for v in g:
        gv, ev = g.label(v)
        lines.append(f'  {v} [label="{v}:({gv},{ev})"];')
    for u, w in g.edges:
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    g, name = _graph(args.file)
    sys.stdout.write(to_dot(g, name))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="dualgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if file:
            p.add_argument("file", metavar="FILE", help="document path, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check graph invariants")
    p = add("blowup", cmd_blowup, "apply one simple modification")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--vertex", type=int)
    grp.add_argument("--edge", metavar="U,W")
    p.add_argument("--new-id", type=int, help="id of the created vertex (default max id + 1)")
    p = add("blowdown", cmd_blowdown, "contract a (0,1) vertex")
    p.add_argument("--vertex", type=int, required=True)
    add("matrix", cmd_matrix, "print the intersection matrix")
    add("negdef", cmd_negdef, "is the intersection matrix negative definite")
    add("det", cmd_det, "exact determinant of the intersection matrix")
    add("is-regular", cmd_is_regular, "is the graph a modification of the point graph")
    p = add("is-sandwiched", cmd_is_sandwiched, "leaf-augmentation search")
    p.add_argument("--budget", type=int, default=None, help="max total leaves (default 2*sum e)")
    p = add("is-self-similar", cmd_is_self_similar, "build a self-similarity witness")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--at", type=int, default=None, help="vertex to plant at (default smallest id)")
    add("verify-witness", cmd_verify_witness, "re-verify a witness document")
    p = add("extract", cmd_extract, "regular supergraph from a self-similarity witness")
    p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    p = add("roundtrip", cmd_roundtrip, "random sandwiched/self-similar round trip", file=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--budget", type=int, default=16)
    p = add("named", cmd_named, "emit a library graph", file=False)
    p.add_argument("name", help="point, A<n>, D<n>, E6, E7, E8, star-<c>-<k>")
    add("export-dot", cmd_export_dot, "Graphviz text, vertices labeled id:(g,e)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, io.DocumentError, GraphError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
