"""Finite quivers: vertices plus directed, possibly parallel, arrows."""

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional


class QuiverError(ValueError):
    """Malformed quiver input."""


def id_key(x):
    """Deterministic ordering for ids that may mix ints and strings."""
    if isinstance(x, int):
        return (0, x, "")
    return (1, 0, str(x))


@dataclass(frozen=True)
class Arrow:
    id: Hashable
    source: Hashable
    target: Hashable


class Quiver:
    """A quiver with vertices and arrows kept in ascending id order.

    >>> q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    >>> q.oriented_cycle_type()
    2
    """

    def __init__(self, vertices: Iterable, arrows: Iterable = ()):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex id")
        self.vertices = tuple(sorted(verts, key=id_key))
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        arrs = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        if len({a.id for a in arrs}) != len(arrs):
            raise QuiverError("duplicate arrow id")
        for a in arrs:
            if a.source not in self.vindex or a.target not in self.vindex:
                raise QuiverError(f"arrow {a.id!r} has an undeclared endpoint")
        self.arrows = tuple(sorted(arrs, key=lambda a: id_key(a.id)))
        self.aindex = {a.id: i for i, a in enumerate(self.arrows)}

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrs = ", ".join(f"{a.id}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrs}])"

    def arrow(self, aid) -> Arrow:
        return self.arrows[self.aindex[aid]]

    def outgoing(self, v):
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v):
        return [a for a in self.arrows if a.target == v]

    def components(self):
        """Weakly connected components, each sorted, ordered by smallest vertex."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
        blocks = {}
        for v in self.vertices:
            blocks.setdefault(find(v), []).append(v)
        return sorted((tuple(b) for b in blocks.values()), key=lambda b: id_key(b[0]))

    def is_connected(self):
        return len(self.components()) <= 1

    def is_acyclic(self):
        # Kahn's algorithm; a loop keeps its vertex's in-degree positive forever.
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for a in self.outgoing(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return seen == len(self.vertices)

    def sources_and_sinks(self):
        has_in = {a.target for a in self.arrows}
        has_out = {a.source for a in self.arrows}
        sources = {v for v in self.vertices if v not in has_in}
        sinks = {v for v in self.vertices if v not in has_out}
        return sources, sinks

    def oriented_cycle_type(self) -> Optional[int]:
        """``n`` if this quiver is the oriented cycle on ``n`` vertices, else ``None``."""
        n = len(self.vertices)
        if n == 0 or len(self.arrows) != n:
            return None
        if any(len(self.outgoing(v)) != 1 or len(self.incoming(v)) != 1
               for v in self.vertices):
            return None
        if not self.is_connected():
            return None
        return n

    def full_subquiver(self, kept) -> "Quiver":
        kept = set(kept)
        unknown = kept - set(self.vertices)
        if unknown:
            raise QuiverError(f"unknown vertex ids: {sorted(unknown, key=id_key)}")
        return Quiver(kept, [a for a in self.arrows
                             if a.source in kept and a.target in kept])

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.id, a.target, a.source) for a in self.arrows])

    def identify_parallel_arrows(self):
        """Set of ``(source, target)`` pairs joined by at least one arrow."""
        return {(a.source, a.target) for a in self.arrows}
