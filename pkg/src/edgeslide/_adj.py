"""Mutable neighbor-set scratchpad used by the algorithm internals.

Not part of the public API.  All traversals visit neighbors in ascending
id order so that every derived script is reproducible.
"""
from __future__ import annotations

from collections import deque


class Adj:
    __slots__ = ("n", "nbrs")

    def __init__(self, n: int, nbrs: list[set[int]]):
        self.n = n
        self.nbrs = nbrs

    @classmethod
    def from_graph(cls, g) -> "Adj":
        return cls(g.n, [set(s) for s in g.neighbor_sets()])

    def copy(self) -> "Adj":
        return Adj(self.n, [set(s) for s in self.nbrs])

    def has(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def degree(self, u: int) -> int:
        return len(self.nbrs[u])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.nbrs]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.nbrs) // 2

    def add(self, u: int, v: int) -> None:
        self.nbrs[u].add(v)
        self.nbrs[v].add(u)

    def remove(self, u: int, v: int) -> None:
        self.nbrs[u].discard(v)
        self.nbrs[v].discard(u)

    def slide(self, x: int, y: int, z: int) -> None:
        # {x,y} -> {x,z}, preconditions already checked by the caller
        nx = self.nbrs[x]
        nx.discard(y)
        self.nbrs[y].discard(x)
        nx.add(z)
        self.nbrs[z].add(x)

    def add_vertex(self) -> int:
        self.nbrs.append(set())
        self.n += 1
        return self.n - 1

    def remove_vertex(self, y: int) -> None:
        # ids above y shift down by one
        old = self.nbrs
        for w in old[y]:
            old[w].discard(y)
        new = []
        for v in range(self.n):
            if v == y:
                continue
            new.append({w if w < y else w - 1 for w in old[v]})
        self.nbrs = new
        self.n -= 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in self.nbrs[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def to_graph(self):
        from .graph import Graph

        return Graph(self.n, self.sorted_edges())

    def bfs_path(self, a: int, b: int, banned: tuple[int, int] | None = None):
        """Shortest path a -> b avoiding the banned edge, or None."""
        if a == b:
            return [a]
        ba, bb = banned if banned is not None else (-1, -1)
        parent = [-2] * self.n
        parent[a] = -1
        queue = deque([a])
        while queue:
            u = queue.popleft()
            for v in sorted(self.nbrs[u]):
                if parent[v] != -2:
                    continue
                if (u == ba and v == bb) or (u == bb and v == ba):
                    continue
                parent[v] = u
                if v == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(v)
        return None

    def components(self, skip: int | None = None) -> list[list[int]]:
        """Connected components (excluding `skip`), ordered by smallest id."""
        seen = [False] * self.n
        if skip is not None:
            seen[skip] = True
        out = []
        for seed in range(self.n):
            if seen[seed]:
                continue
            seen[seed] = True
            comp = [seed]
            stack = [seed]
            while stack:
                u = stack.pop()
                for v in self.nbrs[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        stack.append(v)
            comp.sort()
            out.append(comp)
        return out

    def connected(self, skip: int | None = None) -> bool:
        total = self.n if skip is None else self.n - 1
        if total <= 0:
            return True
        seed = 0
        while seed == skip:
            seed += 1
        seen = [False] * self.n
        seen[seed] = True
        count = 1
        stack = [seed]
        while stack:
            u = stack.pop()
            for v in self.nbrs[u]:
                if not seen[v] and v != skip:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == total
