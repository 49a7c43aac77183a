"""Slide a connected graph into any prescribed configuration.

The driver is :func:`transform`: given two connected simple graphs with
equal vertex and edge counts and a vertex bijection ``psi``, it produces
a script of slides carrying the first graph onto a graph that ``psi``
maps isomorphically onto the second.

The construction peels off one vertex per level: pick a minimum-degree
vertex of the goal, pump the matching source vertex up to full degree by
co-evolving a spanning tree, prune it back down while keeping the rest
connected, match its neighborhood by interchanges, repair connectivity
of both complements, and recurse on the remainders.  Goal-side repair
slides are inverted, pulled back through ``psi``, and appended after the
recursive script.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._adj import Adj
from .graph import (
    Graph,
    GraphError,
    check_bijection,
    is_isomorphic_under,
    _check_vertex,
)
from .moves import MoveScript, Slide, apply_script
from .slides import _connected_after_move, _interchange, _move_edge

__all__ = [
    "raise_degree_in_tree",
    "raise_degree",
    "transform",
    "TransformPlan",
    "LevelTrace",
]


# ---------------------------------------------------------------------------
# Degree raising


def _raise_tree_engine(tree: Adj, x: int, on_slide) -> None:
    """Run the leaf-relocation loop on a tree until d(x) = n - 1.

    `on_slide(pivot, frm, to)` fires after each single tree slide.
    """
    n = tree.n
    while tree.degree(x) < n - 1:
        y = -1
        for v in range(n):
            if v != x and tree.degree(v) == 1 and not tree.has(v, x):
                y = v
                break
        assert y >= 0, "tree with d(x) < n-1 must have a leaf not adjacent to x"
        z = next(iter(tree.nbrs[y]))
        path = tree.bfs_path(z, x)
        for c in range(len(path) - 1):
            tree.slide(y, path[c], path[c + 1])
            on_slide(y, path[c], path[c + 1])


def raise_degree_in_tree(t: Graph, x: int) -> MoveScript:
    """Slides turning a tree into the star at x; every intermediate graph
    is again a tree."""
    _check_vertex(t, x)
    tree = Adj.from_graph(t)
    if t.e != t.n - 1 or not tree.connected():
        raise GraphError("raise_degree_in_tree requires a tree")
    out: list = []
    _raise_tree_engine(tree, x, lambda p, a, b: out.append(Slide(p, a, b)))
    return tuple(out)


def _bfs_tree_adj(adj: Adj, root: int) -> Adj:
    from collections import deque

    nbrs: list[set[int]] = [set() for _ in range(adj.n)]
    seen = [False] * adj.n
    seen[root] = True
    count = 1
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in sorted(adj.nbrs[u]):
            if not seen[v]:
                seen[v] = True
                count += 1
                nbrs[u].add(v)
                nbrs[v].add(u)
                queue.append(v)
    if count != adj.n:
        raise GraphError("graph must be connected")
    return Adj(adj.n, nbrs)


def _raise_degree_engine(adj: Adj, x: int, out: list) -> None:
    """Pump d(x) to n - 1 by evolving a BFS spanning tree rooted at x and
    mirroring each tree slide in the graph unless it would double an edge."""
    tree = _bfs_tree_adj(adj, x)

    def mirror(pivot: int, frm: int, to: int) -> None:
        if not adj.has(pivot, to):
            assert adj.has(pivot, frm) and adj.has(frm, to)
            adj.slide(pivot, frm, to)
            out.append(Slide(pivot, frm, to))

    _raise_tree_engine(tree, x, mirror)
    assert adj.degree(x) == adj.n - 1


def raise_degree(g: Graph, x: int) -> MoveScript:
    """Slides raising x to degree n - 1 while preserving (n, e) and
    connectivity."""
    _check_vertex(g, x)
    adj = Adj.from_graph(g)
    if not adj.connected():
        raise GraphError("raise_degree requires a connected graph")
    out: list = []
    _raise_degree_engine(adj, x, out)
    return tuple(out)


# ---------------------------------------------------------------------------
# Full transformation


@dataclass(frozen=True)
class LevelTrace:
    """Bookkeeping for one peeling level of :func:`transform`."""

    size: int
    target: int
    preimage: int
    goal_repair: MoveScript
    appended_inverse: MoveScript


@dataclass(frozen=True)
class TransformPlan:
    """A slide script plus the per-level trace that produced it."""

    script: MoveScript
    trace: tuple[LevelTrace, ...]


def _reduce_degree(adj: Adj, x_star: int, d1: int, out: list) -> None:
    while adj.degree(x_star) > d1:
        comps = adj.components(skip=x_star)
        if len(comps) >= 2:
            first = set(comps[0])
            w = min(v for v in adj.nbrs[x_star] if v in first)
            pair = (comps[0][0], comps[1][0])
        else:
            comp = comps[0]
            pair = None
            for ii in range(len(comp)):
                for jj in range(ii + 1, len(comp)):
                    if not adj.has(comp[ii], comp[jj]):
                        pair = (comp[ii], comp[jj])
                        break
                if pair is not None:
                    break
            if pair is None:
                raise AssertionError(
                    "complement is complete while degree reduction is still "
                    "needed; impossible for equal edge counts"
                )
            w = None
            for cand in sorted(adj.nbrs[x_star]):
                if _connected_after_move(adj, (x_star, cand), pair):
                    w = cand
                    break
            assert w is not None
        _move_edge(adj, out, (x_star, w), pair)


def _first_back_edge(adj: Adj, comp: list[int], cset: set[int]) -> tuple[int, int]:
    root = comp[0]
    parent = {root: -1}
    stack = [(root, iter(sorted(adj.nbrs[root])))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if v not in cset or v == parent[u]:
                continue
            if v in parent:
                return (min(u, v), max(u, v))
            parent[v] = u
            stack.append((v, iter(sorted(adj.nbrs[v]))))
            advanced = True
            break
        if not advanced:
            stack.pop()
    raise AssertionError("component declared cyclic has no back edge")


def _repair_components(adj: Adj, skip: int, out: list) -> None:
    """Merge the components of adj - skip by relocating cycle edges."""
    while True:
        comps = adj.components(skip=skip)
        if len(comps) <= 1:
            return
        moved = False
        for ci, comp in enumerate(comps):
            cset = set(comp)
            inner = sum(1 for v in comp for w in adj.nbrs[v] if w in cset) // 2
            if inner >= len(comp):
                edge = _first_back_edge(adj, comp, cset)
                other = comps[1] if ci == 0 else comps[0]
                pair = (min(comp[0], other[0]), max(comp[0], other[0]))
                _move_edge(adj, out, edge, pair)
                moved = True
                break
        if not moved:
            raise AssertionError(
                "complement has several components but no spare cycle edge; "
                "impossible when the goal graph has the same edge count"
            )


def _induced(adj: Adj, skip: int) -> Adj:
    nbrs = []
    for v in range(adj.n):
        if v == skip:
            continue
        nbrs.append({w if w < skip else w - 1 for w in adj.nbrs[v] if w != skip})
    return Adj(adj.n - 1, nbrs)


def _transform_level(
    gG: Adj,
    gS: Adj,
    psi: list[int],
    gmap: list[int],
    smap: list[int],
    out: list,
    traces: list,
) -> None:
    n = gG.n
    if n <= 1:
        return
    psi_inv = [0] * n
    for i, t in enumerate(psi):
        psi_inv[t] = i
    y_star = min(range(n), key=lambda v: (gS.degree(v), v))
    d1 = gS.degree(y_star)
    x_star = psi_inv[y_star]
    if n == 2:
        traces.append(LevelTrace(2, smap[y_star], gmap[x_star], (), ()))
        return

    local: list = []
    _raise_degree_engine(gG, x_star, local)
    _reduce_degree(gG, x_star, d1, local)
    wanted = {psi_inv[t] for t in gS.nbrs[y_star]}
    while gG.nbrs[x_star] != wanted:
        a = min(gG.nbrs[x_star] - wanted)
        b = min(wanted - gG.nbrs[x_star])
        _interchange(gG, local, a, b)
    assert gG.degree(x_star) == d1 and gG.nbrs[x_star] == wanted

    _repair_components(gG, x_star, local)
    goal_repair: list = []
    _repair_components(gS, y_star, goal_repair)
    assert len(gG.components(skip=x_star)) == 1
    assert len(gS.components(skip=y_star)) == 1

    out.extend(Slide(gmap[m.x], gmap[m.y], gmap[m.z]) for m in local)
    appended = tuple(
        Slide(gmap[psi_inv[m.x]], gmap[psi_inv[m.z]], gmap[psi_inv[m.y]])
        for m in reversed(goal_repair)
    )
    traces.append(
        LevelTrace(
            n,
            smap[y_star],
            gmap[x_star],
            tuple(Slide(smap[m.x], smap[m.y], smap[m.z]) for m in goal_repair),
            appended,
        )
    )

    keepG = [v for v in range(n) if v != x_star]
    keepS = [v for v in range(n) if v != y_star]
    sub_psi = []
    for v in keepG:
        t = psi[v]
        sub_psi.append(t if t < y_star else t - 1)
    _transform_level(
        _induced(gG, x_star),
        _induced(gS, y_star),
        sub_psi,
        [gmap[v] for v in keepG],
        [smap[v] for v in keepS],
        out,
        traces,
    )
    out.extend(appended)


def transform(g: Graph, h: Graph, psi: Sequence[int]) -> TransformPlan:
    """Slides carrying g onto a graph that psi maps isomorphically onto h.

    Both graphs must be connected with equal vertex and edge counts.  The
    returned plan's script contains only Slide moves; replaying it from g
    and checking the result against h under psi always succeeds (the plan
    is verified before it is returned).
    """
    if g.n != h.n:
        raise GraphError(f"vertex count mismatch: {g.n} != {h.n}")
    if g.e != h.e:
        raise GraphError(f"edge count mismatch: {g.e} != {h.e}")
    psi = check_bijection(psi, g.n)
    gG = Adj.from_graph(g)
    gS = Adj.from_graph(h)
    if not gG.connected() or not gS.connected():
        raise GraphError("transform requires connected graphs")
    out: list = []
    traces: list = []
    _transform_level(gG, gS, list(psi), list(range(g.n)), list(range(h.n)), out, traces)
    script = tuple(out)
    final = apply_script(g, script)
    if not is_isomorphic_under(final, h, psi):
        raise AssertionError("transform produced a non-verifying script")
    return TransformPlan(script, tuple(traces))
