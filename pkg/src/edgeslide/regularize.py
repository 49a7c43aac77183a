"""Energy-driven regularization.

The energy of a degree sequence is the sum of its squared entries.  Among
all positive sequences with a fixed sum it is minimized exactly by the
almost-regular profile determined by Euclidean division, and a connected
simple graph can always be slid into that profile: each step moves one
edge end from a highest-degree vertex to a lowest-degree one, dropping
the energy by 2*(d(high) - d(low) - 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from ._adj import Adj
from .graph import Graph, GraphError
from .moves import MoveScript
from .slides import _shuffle, _slide_step

__all__ = [
    "DegreeTarget",
    "almost_regular_target",
    "minimal_energy_oracle",
    "RegularizeStep",
    "regularize_steps",
    "regularize",
]


@dataclass(frozen=True)
class DegreeTarget:
    """The almost-regular degree profile for n vertices and e edges:
    r vertices of degree k + 1 and n - r of degree k, with 2e = n*k + r."""

    k: int
    r: int
    n: int

    def multiset(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return (self.k + 1,) * self.r + (self.k,) * (self.n - self.r)

    def energy(self) -> int:
        return self.r * (self.k + 1) ** 2 + (self.n - self.r) * self.k**2


def almost_regular_target(n: int, e: int) -> DegreeTarget:
    """The unique (k, r) with 2e = n*k + r and 0 <= r <= n - 1."""
    if n < 1:
        raise GraphError("n must be positive")
    if not (n - 1 <= e <= n * (n - 1) // 2):
        raise GraphError(
            f"e={e} outside the connected simple range [{n - 1}, {n * (n - 1) // 2}] for n={n}"
        )
    k, r = divmod(2 * e, n)
    return DegreeTarget(k, r, n)


def minimal_energy_oracle(n: int, e: int) -> set[tuple[int, ...]]:
    """Brute force: all positive degree multisets of length n summing to 2e
    whose energy is minimal.  Multisets are non-increasing tuples.

    Enumeration cost grows quickly; intended for desk-scale n.
    """
    total = 2 * e
    best: list[tuple[int, ...]] = []
    best_energy = None

    def rec(remaining: int, parts_left: int, cap: int, prefix: list[int], acc: int):
        nonlocal best, best_energy
        if parts_left == 0:
            if remaining == 0:
                if best_energy is None or acc < best_energy:
                    best_energy = acc
                    best = [tuple(prefix)]
                elif acc == best_energy:
                    best.append(tuple(prefix))
            return
        # parts are at least 1 and at most cap (non-increasing order)
        hi = min(cap, remaining - (parts_left - 1))
        for part in range(hi, 0, -1):
            prefix.append(part)
            rec(remaining - part, parts_left - 1, part, prefix, acc + part * part)
            prefix.pop()

    if total >= n >= 1:
        rec(total, n, total, [], 0)
    return set(best)


@dataclass(frozen=True)
class RegularizeStep:
    """One degree exchange: the chosen high and low vertices, their
    degrees before the step, and the slides performing the exchange."""

    high: int
    low: int
    high_degree: int
    low_degree: int
    moves: MoveScript


def regularize_steps(g: Graph) -> tuple[RegularizeStep, ...]:
    """The per-step decomposition behind :func:`regularize`."""
    adj = Adj.from_graph(g)
    if not adj.connected():
        raise GraphError("regularize requires a connected graph")
    steps: list[RegularizeStep] = []
    n = adj.n
    while True:
        degs = adj.degrees()
        x = min(range(n), key=lambda v: (-degs[v], v))
        y = min(range(n), key=lambda v: (degs[v], v))
        if degs[x] - degs[y] < 2:
            break
        path = adj.bfs_path(x, y)
        moves: list = []
        if len(path) == 2:
            donor = min(a for a in adj.nbrs[x] if a != y and not adj.has(a, y))
            _slide_step(adj, moves, donor, x, y)
        else:
            on_path = set(path)
            donor = min(
                a for a in adj.nbrs[x] if a not in on_path and not adj.has(a, y)
            )
            _shuffle(adj, moves, donor, path)
        steps.append(RegularizeStep(x, y, degs[x], degs[y], tuple(moves)))
    return tuple(steps)


def regularize(g: Graph) -> MoveScript:
    """Slides carrying g to an almost regular graph realizing the
    (k, r) profile of :func:`almost_regular_target`."""
    script: list = []
    for step in regularize_steps(g):
        script.extend(step.moves)
    return tuple(script)
