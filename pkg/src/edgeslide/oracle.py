"""Brute-force ground truth at desk scale.

Enumerates all connected labeled graphs with given (n, e), expands the
one-step slide relation, and runs a full breadth-first census of the
slide-reachability graph.  Used to certify the constructive algorithms
exhaustively on small universes.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from ._adj import Adj
from .graph import Graph, GraphError

__all__ = [
    "enumerate_connected",
    "slide_neighbors",
    "reachability_census",
    "CensusReport",
    "format_census_table",
]

EdgeKey = tuple[tuple[int, int], ...]


def enumerate_connected(n: int, e: int, cap: int = 7) -> list[Graph]:
    """All connected simple labeled graphs with exactly (n, e), in
    lexicographic edge-set order."""
    if n > cap:
        raise GraphError(f"n={n} exceeds the enumeration cap {cap}")
    if n < 1 or e < 0:
        raise GraphError("need n >= 1 and e >= 0")
    all_pairs = list(combinations(range(n), 2))
    if e > len(all_pairs):
        return []
    out = []
    for chosen in combinations(all_pairs, e):
        nbrs = [set() for _ in range(n)]
        for u, v in chosen:
            nbrs[u].add(v)
            nbrs[v].add(u)
        if Adj(n, nbrs).connected():
            out.append(Graph(n, chosen))
    return out


def _slide_neighbor_keys(n: int, nbrs: list[set[int]], edges: EdgeKey) -> list[EdgeKey]:
    seen = set()
    out = []
    for x in range(n):
        for y in sorted(nbrs[x]):
            for z in sorted(nbrs[y] - nbrs[x]):
                if z == x:
                    continue
                old = (x, y) if x < y else (y, x)
                new = (x, z) if x < z else (z, x)
                key = tuple(sorted(set(edges) - {old} | {new}))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    out.sort()
    return out


def slide_neighbors(g: Graph) -> list[Graph]:
    """All graphs one legal slide away, deduplicated, in lexicographic
    edge-set order."""
    nbrs = [set(s) for s in g.neighbor_sets()]
    return [Graph(g.n, key) for key in _slide_neighbor_keys(g.n, nbrs, g.edges)]


@dataclass(frozen=True)
class CensusReport:
    n: int
    e: int
    members: int
    classes: int
    diameter: int


def reachability_census(n: int, e: int, cap: int = 5) -> CensusReport:
    """Full BFS census of the slide relation over all connected (n, e)
    graphs: equivalence class count and the largest pairwise slide
    distance within a class."""
    if n > cap:
        raise GraphError(f"n={n} exceeds the census cap {cap}")
    universe = enumerate_connected(n, e, cap=cap)
    keys = [g.edges for g in universe]
    index = {key: i for i, key in enumerate(keys)}
    neighbor_ids: list[list[int]] = []
    for g in universe:
        nbrs = [set(s) for s in g.neighbor_sets()]
        neighbor_ids.append(
            [index[k] for k in _slide_neighbor_keys(g.n, nbrs, g.edges)]
        )

    count = len(universe)
    classes = 0
    diameter = 0
    assigned = [-1] * count
    for start in range(count):
        if assigned[start] == -1:
            stack = [start]
            assigned[start] = classes
            while stack:
                u = stack.pop()
                for v in neighbor_ids[u]:
                    if assigned[v] == -1:
                        assigned[v] = classes
                        stack.append(v)
            classes += 1
    for start in range(count):
        dist = {start: 0}
        queue = deque([start])
        far = 0
        while queue:
            u = queue.popleft()
            for v in neighbor_ids[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    far = max(far, dist[v])
                    queue.append(v)
        diameter = max(diameter, far)
    return CensusReport(n, e, count, classes, diameter)


def format_census_table(reports: list[CensusReport]) -> str:
    rows = [("n", "e", "members", "classes", "diameter")]
    rows.extend(
        (str(r.n), str(r.e), str(r.members), str(r.classes), str(r.diameter))
        for r in reports
    )
    widths = [max(len(row[c]) for row in rows) for c in range(5)]
    lines = ["  ".join(cell.rjust(widths[c]) for c, cell in enumerate(row)) for row in rows]
    return "".join(line + "\n" for line in lines)
