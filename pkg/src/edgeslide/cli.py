"""Command-line surface.

Subcommands: transform, regularize, euler-transform, verify, replay,
oracle, stats.  Graphs travel as ``.elist`` files, certificates as
``.moves`` files, and vertex bijections as files of ``m <src> <dst>``
lines (identity when omitted).  Exit codes: 0 success, 1 verification
failure, 2 bad input or precondition.  Outputs are written atomically
and only after the produced certificate has been re-verified.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .euler import transform_euler
from .graph import (
    Graph,
    GraphError,
    ParseError,
    check_bijection,
    identity_bijection,
    is_isomorphic_under,
    parse_graph,
    serialize_graph,
    stats,
)
from .moves import MoveError, parse_script_lines, replay, serialize_script
from .oracle import format_census_table, reachability_census
from .prescribe import transform
from .regularize import regularize

__all__ = ["run", "main", "replay"]


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".edgeslide-")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        _write_atomic(out_path, text)


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except ParseError as err:
        raise GraphError(f"{path}: {err}") from None


def _load_bijection(path: str | None, n: int) -> tuple[int, ...]:
    if path is None:
        return identity_bijection(n)
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "m" or len(parts) != 3:
            raise GraphError(f"{path}: line {lineno}: expected 'm <src> <dst>'")
        try:
            src, dst = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphError(f"{path}: line {lineno}: expected integers") from None
        if src in mapping:
            raise GraphError(f"{path}: line {lineno}: duplicate source {src}")
        mapping[src] = dst
    forward = [mapping.get(i, -1) for i in range(n)]
    if -1 in forward:
        raise GraphError(f"{path}: bijection does not cover every vertex of 0..{n - 1}")
    return check_bijection(forward, n)


def _self_check(g: Graph, script, goal: Graph | None, psi) -> None:
    final = replay(g, script, check="full")
    if goal is not None and not is_isomorphic_under(final, goal, psi):
        raise MoveError("generated script does not verify against the goal graph")


def _cmd_transform(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.goal)
    psi = _load_bijection(args.bijection, g.n)
    plan = transform(g, h, psi)
    _self_check(g, plan.script, h, psi)
    _emit(serialize_script(plan.script), args.output)
    return 0


def _cmd_regularize(args) -> int:
    g = _load_graph(args.source)
    script = regularize(g)
    _self_check(g, script, None, None)
    _emit(serialize_script(script), args.output)
    return 0


def _cmd_euler_transform(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.goal)
    script, mapping = transform_euler(g, h)
    final = replay(g, script, check="full")
    if not is_isomorphic_under(final, h, mapping):
        raise MoveError("generated script does not verify against the goal graph")
    _emit(serialize_script(script), args.output)
    for i, t in enumerate(mapping):
        sys.stdout.write(f"m {i} {t}\n")
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.source)
    script, lines = parse_script_lines(_read(args.script))
    try:
        final = replay(g, script, check="full")
    except MoveError as err:
        line = lines[err.index] if err.index is not None and err.index < len(lines) else "?"
        print(f"verification failed at {args.script} line {line}: {err}", file=sys.stderr)
        return 1
    if args.expect is not None:
        goal = _load_graph(args.expect)
        psi = _load_bijection(args.bijection, final.n)
        if final.n != goal.n or not is_isomorphic_under(final, goal, psi):
            print("verification failed: replayed graph does not match the expected one", file=sys.stderr)
            return 1
    print(f"OK: {len(script)} moves verified")
    return 0


def _cmd_replay(args) -> int:
    g = _load_graph(args.source)
    script, lines = parse_script_lines(_read(args.script))
    try:
        final = replay(g, script, check=args.check)
    except MoveError as err:
        line = lines[err.index] if err.index is not None and err.index < len(lines) else "?"
        print(f"replay rejected at {args.script} line {line}: {err}", file=sys.stderr)
        return 1
    _emit(serialize_graph(final), args.output)
    return 0


def _cmd_oracle(args) -> int:
    n = args.n
    if args.e is not None:
        pairs = [(n, args.e)]
    else:
        pairs = [(n, e) for e in range(n - 1, n * (n - 1) // 2 + 1)]
    reports = [reachability_census(a, b, cap=args.cap) for a, b in pairs]
    sys.stdout.write(format_census_table(reports))
    return 0


def _cmd_stats(args) -> int:
    g = _load_graph(args.source)
    s = stats(g)
    degrees = ",".join(str(d) for d in s.degrees)
    print(
        f"n={g.n} e={g.e} chi={s.euler_characteristic} energy={s.energy} "
        f"degrees={degrees} curvature_sum={s.curvature_sum}"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeslide", description="certified edge-slide transformations of graphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="slide one graph onto another of equal size")
    p.add_argument("source")
    p.add_argument("goal")
    p.add_argument("--bijection", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("regularize", help="slide a graph to an almost regular one")
    p.add_argument("source")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_regularize)

    p = sub.add_parser("euler-transform", help="resize and slide within an Euler class")
    p.add_argument("source")
    p.add_argument("goal")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_euler_transform)

    p = sub.add_parser("verify", help="replay a certificate with full checks")
    p.add_argument("source")
    p.add_argument("script")
    p.add_argument("--expect", default=None)
    p.add_argument("--bijection", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("replay", help="replay a script and print the final graph")
    p.add_argument("source")
    p.add_argument("script")
    p.add_argument("--check", choices=("fast", "full"), default="fast")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("oracle", help="slide-reachability census over small graphs")
    p.add_argument("n", type=int)
    p.add_argument("e", type=int, nargs="?", default=None)
    p.add_argument("--cap", type=int, default=5)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("stats", help="print degree, energy, and curvature statistics")
    p.add_argument("source")
    p.set_defaults(func=_cmd_stats)
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MoveError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (GraphError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
