"""Primitive graph rewrites and replayable move scripts.

Five move kinds:

* ``Slide(x, y, z)``   - replace edge {x,y} by {x,z}; needs x~y, y~z, x!~z
* ``AddPendant(x, y)`` - attach new vertex y = n to anchor x
* ``Subdivide(x, z, y)`` - split edge {x,z} with new vertex y = n
* ``RemoveLeaf(y, x)`` - delete degree-1 vertex y whose neighbor is x
* ``Smooth(y, x, z)``  - delete degree-2 vertex y (neighbors x, z, x!~z)
                         and add edge {x,z}

Vertex removals renumber: ids above the removed vertex shift down by one,
and later moves in a script use the renumbered ids.

The ``.moves`` text format has one move per line (``#`` comments allowed)::

    S x y z | AP x y | SD x z y | RL y x | SM y x z
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from ._adj import Adj
from .graph import Graph, GraphError, ParseError

__all__ = [
    "Slide",
    "AddPendant",
    "Subdivide",
    "RemoveLeaf",
    "Smooth",
    "Move",
    "MoveScript",
    "MoveError",
    "apply_move",
    "apply_script",
    "replay",
    "parse_script",
    "parse_script_lines",
    "serialize_script",
]


@dataclass(frozen=True, slots=True)
class Slide:
    x: int
    y: int
    z: int


@dataclass(frozen=True, slots=True)
class AddPendant:
    x: int
    y: int


@dataclass(frozen=True, slots=True)
class Subdivide:
    x: int
    z: int
    y: int


@dataclass(frozen=True, slots=True)
class RemoveLeaf:
    y: int
    x: int


@dataclass(frozen=True, slots=True)
class Smooth:
    y: int
    x: int
    z: int


Move = Union[Slide, AddPendant, Subdivide, RemoveLeaf, Smooth]
MoveScript = tuple[Move, ...]


class MoveError(GraphError):
    """A move was rejected; `index` is its position in the script, if any."""

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        if index is not None:
            message = f"move {index}: {message}"
        super().__init__(message)


def _in_range(adj: Adj, *vs: int) -> bool:
    return all(isinstance(v, int) and 0 <= v < adj.n for v in vs)


def check_move(adj: Adj, m: Move) -> str | None:
    """Return a rejection reason, or None when m applies to the state."""
    if isinstance(m, Slide):
        x, y, z = m.x, m.y, m.z
        if len({x, y, z}) != 3:
            return f"slide vertices must be distinct, got {m}"
        if not _in_range(adj, x, y, z):
            return f"vertex id out of range in {m}"
        if not adj.has(x, y):
            return f"missing edge ({x}, {y}) for {m}"
        if not adj.has(y, z):
            return f"missing edge ({y}, {z}) for {m}"
        if adj.has(x, z):
            return f"vertices {x} and {z} already adjacent in {m}"
    elif isinstance(m, AddPendant):
        if not _in_range(adj, m.x):
            return f"anchor {m.x} out of range in {m}"
        if m.y != adj.n:
            return f"new vertex must be {adj.n}, got {m.y}"
    elif isinstance(m, Subdivide):
        if m.x == m.z:
            return f"subdivide endpoints must differ in {m}"
        if not _in_range(adj, m.x, m.z):
            return f"vertex id out of range in {m}"
        if not adj.has(m.x, m.z):
            return f"missing edge ({m.x}, {m.z}) for {m}"
        if m.y != adj.n:
            return f"new vertex must be {adj.n}, got {m.y}"
    elif isinstance(m, RemoveLeaf):
        if not _in_range(adj, m.y, m.x):
            return f"vertex id out of range in {m}"
        if adj.degree(m.y) != 1:
            return f"vertex {m.y} has degree {adj.degree(m.y)}, not a leaf"
        if not adj.has(m.y, m.x):
            return f"anchor {m.x} is not the neighbor of leaf {m.y}"
    elif isinstance(m, Smooth):
        y, x, z = m.y, m.x, m.z
        if not _in_range(adj, y, x, z):
            return f"vertex id out of range in {m}"
        if adj.degree(y) != 2 or adj.nbrs[y] != {x, z}:
            return f"vertex {y} must have neighbors exactly {{{x}, {z}}}"
        if adj.has(x, z):
            return f"vertices {x} and {z} already adjacent, smoothing would double the edge"
    else:
        return f"unknown move {m!r}"
    return None


def apply_move_adj(adj: Adj, m: Move) -> None:
    """Check and apply one move, mutating adj.  Raises MoveError."""
    reason = check_move(adj, m)
    if reason is not None:
        raise MoveError(reason)
    if isinstance(m, Slide):
        adj.slide(m.x, m.y, m.z)
    elif isinstance(m, AddPendant):
        adj.add_vertex()
        adj.add(m.x, m.y)
    elif isinstance(m, Subdivide):
        adj.add_vertex()
        adj.remove(m.x, m.z)
        adj.add(m.x, m.y)
        adj.add(m.z, m.y)
    elif isinstance(m, RemoveLeaf):
        adj.remove_vertex(m.y)
    else:  # Smooth
        adj.remove_vertex(m.y)
        x = m.x if m.x < m.y else m.x - 1
        z = m.z if m.z < m.y else m.z - 1
        adj.add(x, z)


def apply_move(g: Graph, m: Move) -> Graph:
    adj = Adj.from_graph(g)
    apply_move_adj(adj, m)
    return adj.to_graph()


def apply_script(g: Graph, script: Sequence[Move]) -> Graph:
    """Left fold of apply_move; a rejected move reports its index."""
    adj = Adj.from_graph(g)
    for i, m in enumerate(script):
        try:
            apply_move_adj(adj, m)
        except MoveError as err:
            raise MoveError(str(err), index=i) from None
    return adj.to_graph()


def replay(g: Graph, script: Sequence[Move], check: str = "fast") -> Graph:
    """Replay a script with per-move validation.

    ``fast`` checks each move's precondition only.  ``full`` additionally
    asserts, after every move, that the state is a connected simple graph,
    that the Euler characteristic never changed, and that the curvature
    sum equals twice the Euler characteristic.
    """
    if check not in ("fast", "full"):
        raise ValueError(f"check must be 'fast' or 'full', got {check!r}")
    full = check == "full"
    adj = Adj.from_graph(g)
    chi0 = g.n - g.e
    if full and not adj.connected():
        raise GraphError("full replay requires a connected start graph")
    for i, m in enumerate(script):
        try:
            apply_move_adj(adj, m)
        except MoveError as err:
            raise MoveError(str(err), index=i) from None
        if full:
            _check_state(adj, chi0, i)
    return adj.to_graph()


def _check_state(adj: Adj, chi0: int, index: int) -> None:
    degs = adj.degrees()
    edge_count = sum(degs)
    if edge_count % 2:
        raise MoveError("inconsistent adjacency: odd degree sum", index=index)
    e = edge_count // 2
    chi = adj.n - e
    if chi != chi0:
        raise MoveError(f"Euler characteristic drifted from {chi0} to {chi}", index=index)
    if sum(2 - d for d in degs) != 2 * chi:
        raise MoveError("curvature sum does not equal 2*chi", index=index)
    for v in range(adj.n):
        if v in adj.nbrs[v]:
            raise MoveError(f"loop created at vertex {v}", index=index)
    if not adj.connected():
        raise MoveError("graph disconnected", index=index)


# ---------------------------------------------------------------------------
# .moves text format

_TAGS = {"S": (Slide, 3), "AP": (AddPendant, 2), "SD": (Subdivide, 3), "RL": (RemoveLeaf, 2), "SM": (Smooth, 3)}


def parse_script_lines(text: str) -> tuple[MoveScript, tuple[int, ...]]:
    """Parse a ``.moves`` document, also returning each move's line number."""
    moves: list[Move] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        entry = _TAGS.get(parts[0])
        if entry is None:
            raise ParseError(lineno, f"unknown move tag {parts[0]!r}")
        cls, arity = entry
        if len(parts) != arity + 1:
            raise ParseError(lineno, f"{parts[0]} takes {arity} integers")
        try:
            args = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError(lineno, "move arguments must be integers") from None
        moves.append(cls(*args))
        lines.append(lineno)
    return tuple(moves), tuple(lines)


def parse_script(text: str) -> MoveScript:
    return parse_script_lines(text)[0]


def serialize_script(script: Sequence[Move]) -> str:
    lines = []
    for m in script:
        if isinstance(m, Slide):
            lines.append(f"S {m.x} {m.y} {m.z}")
        elif isinstance(m, AddPendant):
            lines.append(f"AP {m.x} {m.y}")
        elif isinstance(m, Subdivide):
            lines.append(f"SD {m.x} {m.z} {m.y}")
        elif isinstance(m, RemoveLeaf):
            lines.append(f"RL {m.y} {m.x}")
        elif isinstance(m, Smooth):
            lines.append(f"SM {m.y} {m.x} {m.z}")
        else:
            raise GraphError(f"cannot serialize {m!r}")
    return "".join(line + "\n" for line in lines)
