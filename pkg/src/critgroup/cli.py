"""Command-line front end.

Graph files are YAML (JSON works too)::

    vertices: [u, w]
    edges:
      - {tail: u, head: w}
      - [w, u]

Matrix files hold ``rows cols`` on the first line followed by the rows.

Exit status: 0 success, 1 a mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import yaml

from . import abelian, critical, fuzz
from .digraph import BasePoint, Multidigraph, line_graph
from .exactint import IntMatrix, smith_normal_form

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(ValueError):
    pass


@dataclass
class NamedGraph:
    graph: Multidigraph
    index: dict[str, int]

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise InputError(f"unknown vertex {name!r}") from None


def _where(node, path) -> str:
    return f"{path}:{node.start_mark.line + 1}"


def _scalar(node, path) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise InputError(f"{_where(node, path)}: expected a vertex name")
    return str(node.value)


def parse_graph_text(text: str, path: str = "<string>") -> NamedGraph:
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not isinstance(root, yaml.MappingNode):
        raise InputError(f"{path}: expected a mapping with 'vertices' and 'edges'")
    fields = {_scalar(k, path): v for k, v in root.value}
    vnode = fields.get("vertices")
    if vnode is None or not isinstance(vnode, yaml.SequenceNode) or not vnode.value:
        where = _where(vnode, path) if vnode is not None else path
        raise InputError(f"{where}: 'vertices' must be a non-empty list")
    names = [_scalar(n, path) for n in vnode.value]
    index: dict[str, int] = {}
    for n, node in zip(names, vnode.value):
        if n in index:
            raise InputError(f"{_where(node, path)}: duplicate vertex {n!r}")
        index[n] = len(index)

    enode = fields.get("edges")
    edges = []
    if enode is not None and not (isinstance(enode, yaml.ScalarNode) and enode.tag.endswith(":null")):
        if not isinstance(enode, yaml.SequenceNode):
            raise InputError(f"{_where(enode, path)}: 'edges' must be a list")
        for rec in enode.value:
            if isinstance(rec, yaml.MappingNode):
                m = {_scalar(k, path): v for k, v in rec.value}
                if set(m) != {"tail", "head"}:
                    raise InputError(f"{_where(rec, path)}: edge record needs exactly 'tail' and 'head'")
                tail, head = _scalar(m["tail"], path), _scalar(m["head"], path)
            elif isinstance(rec, yaml.SequenceNode) and len(rec.value) == 2:
                tail, head = (_scalar(x, path) for x in rec.value)
            else:
                raise InputError(f"{_where(rec, path)}: edge must be {{tail, head}} or [tail, head]")
            for name in (tail, head):
                if name not in index:
                    raise InputError(f"{_where(rec, path)}: edge uses undeclared vertex {name!r}")
            edges.append((index[tail], index[head]))
    return NamedGraph(Multidigraph(tuple(names), tuple(edges)), index)


def parse_graph_file(path: str) -> NamedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_graph_text(text, path)


def emit_graph(g: Multidigraph) -> str:
    names = [str(v) for v in g.vertices]
    doc = {
        "vertices": names,
        "edges": [{"tail": names[t], "head": names[h]} for t, h in g.edges],
    }
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)


def parse_matrix_text(text: str, path: str = "<string>") -> IntMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError(f"{path}: empty matrix file")
    try:
        rows, cols = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"{path}:1: expected 'rows cols'") from None
    if len(lines) - 1 != rows:
        raise InputError(f"{path}: header says {rows} rows, found {len(lines) - 1}")
    data = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            r = [int(x) for x in ln.split()]
        except ValueError:
            raise InputError(f"{path}:{lineno}: non-integer entry") from None
        if len(r) != cols:
            raise InputError(f"{path}:{lineno}: expected {cols} entries, found {len(r)}")
        data.append(r)
    return IntMatrix.from_rows(data, cols)


def format_matrix(m: IntMatrix) -> str:
    return "\n".join([f"{m.rows} {m.cols}"] + [" ".join(map(str, r)) for r in m.to_rows()])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="critgroup", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "record"), default="text")

    sp = sub.add_parser("critgroup", help="critical group K(G, sink)")
    sp.add_argument("graph")
    sp.add_argument("--sink", required=True)
    fmt(sp)

    sp = sub.add_parser("kappa", help="number of arborescences rooted at a vertex")
    sp.add_argument("graph")
    sp.add_argument("--root", required=True)
    fmt(sp)

    sp = sub.add_parser("linegraph", help="emit the directed line graph")
    sp.add_argument("graph")

    sp = sub.add_parser("verify", help="check the surjection theorem for a base edge")
    sp.add_argument("graph")
    sp.add_argument("--edge", type=int, required=True, help="base edge index in file order")
    sp.add_argument("--mutate", choices=fuzz.MUTATIONS, help=argparse.SUPPRESS)
    fmt(sp)

    sp = sub.add_parser("fuzz", help="run the theorem on random eligible instances")
    sp.add_argument("--n", type=int, help="vertex count (default: random in 2..8)")
    sp.add_argument("--k", type=int, help="out-degree (default: random in {2, 3})")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mutate", choices=fuzz.MUTATIONS,
                    help="inject a fault into the maps (negative control)")
    fmt(sp)

    sp = sub.add_parser("snf", help="Smith normal form U, S, V of a matrix file")
    sp.add_argument("matrix")
    fmt(sp)
    return p


def _emit(out, fmt: str, text: str, record: dict) -> None:
    if fmt == "record":
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        print(text, file=out)


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        return _dispatch(args, out)
    except (InputError, ValueError) as exc:
        print(f"critgroup: error: {exc}", file=err)
        return EXIT_INPUT_ERROR


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "snf":
        with open(args.matrix, encoding="utf-8") as fh:
            m = parse_matrix_text(fh.read(), args.matrix)
        d = smith_normal_form(m)
        _emit(out, args.format,
              "\n".join(f"{name}:\n{format_matrix(x)}" for name, x in (("U", d.U), ("S", d.S), ("V", d.V))),
              {"U": d.U.to_rows(), "S": d.S.to_rows(), "V": d.V.to_rows(), "diagonal": d.diagonal})
        return EXIT_OK

    if cmd == "fuzz":
        if args.trials < 0:
            raise InputError("--trials must be nonnegative")
        results = fuzz.run_fuzz(args.trials, args.seed, args.n, args.k, args.mutate)
        summary = fuzz.summarize(results, args.seed)
        failed = sum(1 for r in results if not r.passed)
        _emit(out, args.format, summary,
              {"seed": args.seed, "trials": len(results), "failed": failed,
               "failed_trials": [r.index for r in results if not r.passed]})
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    named = parse_graph_file(args.graph)
    g = named.graph

    if cmd == "critgroup":
        sink = named.vertex(args.sink)
        grp = critical.critical_group(g, sink)
        o = abelian.order(grp)
        o_text = "infinite" if not grp.is_finite else str(o)
        _emit(out, args.format, f"K(G, {args.sink}) = {grp}\norder: {o_text}",
              {"sink": args.sink, "group": str(grp), "invariant_factors": list(grp.invariant_factors),
               "free_rank": grp.free_rank, "order": o_text})
        return EXIT_OK

    if cmd == "kappa":
        root = named.vertex(args.root)
        kp = critical.kappa(g, root)
        _emit(out, args.format, str(kp), {"root": args.root, "kappa": kp})
        return EXIT_OK

    if cmd == "linegraph":
        out.write(emit_graph(line_graph(g)))
        return EXIT_OK

    if cmd == "verify":
        if not 0 <= args.edge < g.n_edges:
            raise InputError(f"--edge {args.edge} out of range 0..{g.n_edges - 1}")
        bp = BasePoint.from_edge(g, args.edge)
        maps = critical.structural_maps(g, bp)
        if args.mutate:
            maps = fuzz.mutate_maps(maps, bp, args.mutate)
        report = critical.verify_main_theorem(g, bp, maps=maps)
        print(report.to_records() if args.format == "record" else report.to_text(), file=out)
        return EXIT_OK if report.all_binding_passed else EXIT_CHECK_FAILED

    raise InputError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())
