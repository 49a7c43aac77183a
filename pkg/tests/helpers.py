"""Shared test utilities: deterministic random graphs and slow oracles."""
from __future__ import annotations

import random
from itertools import combinations

from edgeslide import Graph


def random_connected_graph(n: int, e: int, rng: random.Random) -> Graph:
    """Random connected simple graph: random recursive tree plus extras."""
    assert n - 1 <= e <= n * (n - 1) // 2
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = perm[i], perm[j]
        edges.add((min(u, v), max(u, v)))
    rest = [p for p in combinations(range(n), 2) if p not in edges]
    rng.shuffle(rest)
    edges.update(rest[: e - (n - 1)])
    return Graph(n, edges)


def all_simple_paths(g: Graph, a: int, b: int, forbidden=None):
    """Exhaustive DFS over simple paths from a to b (slow oracle)."""
    ban = None
    if forbidden is not None:
        ban = (min(forbidden), max(forbidden))
    out = []

    def rec(path, seen):
        u = path[-1]
        if u == b:
            out.append(tuple(path))
            return
        for v in g.neighbors(u):
            if v in seen:
                continue
            if ban is not None and (min(u, v), max(u, v)) == ban:
                continue
            seen.add(v)
            path.append(v)
            rec(path, seen)
            path.pop()
            seen.remove(v)

    rec([a], {a})
    return out


def swap_neighborhoods(g: Graph, a: int, b: int) -> Graph:
    """Direct definition of the vertex interchange, no slides involved."""
    edges = set()
    for u, v in g.edges:
        uu = b if u == a else a if u == b else u
        vv = b if v == a else a if v == b else v
        edges.add((min(uu, vv), max(uu, vv)))
    return Graph(g.n, edges)


def legal_relocations(g: Graph):
    """All (uv, xy) with uv an edge, xy non-adjacent, result connected."""
    from edgeslide import is_connected

    nonadj = [
        (a, b)
        for a in range(g.n)
        for b in range(a + 1, g.n)
        if not g.adjacent(a, b)
    ]
    for uv in g.edges:
        for xy in nonadj:
            moved = Graph(g.n, set(g.edges) - {uv} | {xy})
            if is_connected(moved):
                yield uv, xy, moved


def transform_sweep_chunk(args):
    """Verify transform plans for a slice of the ordered-pair space of one
    (n, e) universe.  Returns (plans verified, slide moves full-checked);
    seeds depend only on (n, e, pair index), so the aggregate result is
    independent of scheduling.
    """
    from edgeslide import (
        enumerate_connected,
        identity_bijection,
        is_isomorphic_under,
        replay,
        transform,
    )

    n, e, lo, hi = args
    graphs = enumerate_connected(n, e)
    count = len(graphs)
    verified = 0
    moves_checked = 0
    for idx in range(lo, hi):
        i, j = divmod(idx, count)
        ga, gb = graphs[i], graphs[j]
        rng = random.Random((n * 131 + e) * 1_000_003 + idx)
        psis = [identity_bijection(n)]
        psis += [tuple(rng.sample(range(n), n)) for _ in range(3)]
        for psi in psis:
            plan = transform(ga, gb, psi)
            final = replay(ga, plan.script, check="full")
            assert is_isomorphic_under(final, gb, psi)
            verified += 1
            moves_checked += len(plan.script)
    return verified, moves_checked
