"""Closed-form theory of Nakayama algebras.

A connected Nakayama algebra is determined by its Kupisch series: the walk
of vertices along the unique arrows and the lengths ``c_i = dim P_i``. Every
indecomposable is ``M(i, l) = P_i / rad^l P_i`` with ``1 <= l <= c_i``, and
``tau M(i, l) = M(succ(i), l)`` whenever ``M(i, l)`` is not projective.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .algebra import MonomialAlgebra
from .linalg import Subspace
from .quiver import Quiver, id_key
from .representation import projective, quotient, top_vector


class NakayamaError(ValueError):
    pass


@dataclass(frozen=True)
class KupischSeries:
    walk: Tuple  # vertex ids in arrow order, starting at the source (linear) or the smallest id (cyclic)
    lengths: Tuple  # lengths[k] = c_{walk[k]}
    cyclic: bool
    vertices: Tuple = ()  # vertex order of the algebra, for dimension vectors

    def __post_init__(self):
        if not self.vertices:
            object.__setattr__(self, "vertices", tuple(sorted(self.walk, key=id_key)))
        self.validate()

    @property
    def n(self):
        return len(self.walk)

    def c(self, v):
        return self.lengths[self.walk.index(v)]

    def successor(self, v):
        k = self.walk.index(v)
        if k + 1 < self.n:
            return self.walk[k + 1]
        return self.walk[0] if self.cyclic else None

    def predecessor(self, v):
        k = self.walk.index(v)
        if k > 0:
            return self.walk[k - 1]
        return self.walk[-1] if self.cyclic else None

    def validate(self):
        n, c = self.n, self.lengths
        if len(c) != n or n == 0:
            raise NakayamaError("Kupisch series length mismatch")
        if self.cyclic:
            if any(x < 2 for x in c):
                raise NakayamaError("cyclic Kupisch series needs every c_i >= 2")
            succ = range(n)
            pairs = [(k, (k + 1) % n) for k in succ]
        else:
            if c[-1] != 1 or any(x < 2 for x in c[:-1]):
                raise NakayamaError("linear Kupisch series needs c_i >= 2 and c_last = 1")
            pairs = [(k, k + 1) for k in range(n - 1)]
        for k, s in pairs:
            if c[s] < c[k] - 1:
                raise NakayamaError(f"Kupisch condition fails at position {k}")


@dataclass(frozen=True)
class NakayamaIndec:
    vertex: object
    length: int

    def __str__(self):
        return f"M({self.vertex},{self.length})"


@dataclass(frozen=True)
class IndecInfo:
    module: NakayamaIndec
    projective: bool
    injective: bool
    simple: bool


def kupisch_series(a: MonomialAlgebra) -> KupischSeries:
    q = a.quiver
    if not a.is_nakayama():
        raise NakayamaError("algebra is not Nakayama")
    if not q.is_connected():
        raise NakayamaError("algebra is not connected")
    cyclic = q.oriented_cycle_type() is not None
    if cyclic:
        start = q.vertices[0]
    else:
        sources, _ = q.sources_and_sinks()
        start = next(v for v in q.vertices if v in sources)
    walk = [start]
    while True:
        out = q.outgoing(walk[-1])
        if not out or out[0].target == start:
            break
        walk.append(out[0].target)
    lengths = tuple(len(a.from_vertex[q.vindex[v]]) for v in walk)
    return KupischSeries(tuple(walk), lengths, cyclic, q.vertices)


def nakayama_algebra(lengths, cyclic, vertices=None, name=None) -> MonomialAlgebra:
    """Build the Nakayama algebra with a given Kupisch series.

    Vertices default to ``1..n`` along the walk and arrows are ``a1..an``
    with ``a_k: k -> k+1``. The relation at ``i`` is the path of length
    ``c_i`` starting there, kept only when it is minimal.
    """
    lengths = tuple(lengths)
    n = len(lengths)
    walk = tuple(vertices) if vertices is not None else tuple(range(1, n + 1))
    KupischSeries(walk, lengths, cyclic)
    m = n if cyclic else n - 1
    arrows = [(f"a{k + 1}", walk[k], walk[(k + 1) % n]) for k in range(m)]
    rels = []
    for k in range(n):
        c = lengths[k]
        if not cyclic and k + c > n - 1:
            continue  # no path of length c from here
        nxt = lengths[(k + 1) % n]
        if nxt >= c:
            rels.append([f"a{(k + t) % n + 1}" for t in range(c)])
    return MonomialAlgebra(Quiver(walk, arrows), rels, name=name)


def is_injective_indec(k: KupischSeries, m: NakayamaIndec) -> bool:
    """``M(i, l)`` is injective iff it is not the radical of some ``M(j, l+1)``."""
    j = k.predecessor(m.vertex)
    return j is None or k.c(j) < m.length + 1


def enumerate_indecomposables(k: KupischSeries):
    out = []
    for v, c in zip(k.walk, k.lengths):
        for l in range(1, c + 1):
            m = NakayamaIndec(v, l)
            out.append(IndecInfo(m, l == c, is_injective_indec(k, m), l == 1))
    return out


def _check(k, m):
    if m.vertex not in k.walk or not 1 <= m.length <= k.c(m.vertex):
        raise NakayamaError(f"{m} is not an indecomposable of this algebra")


def nakayama_dim_vector(k: KupischSeries, m: NakayamaIndec):
    _check(k, m)
    counts: Dict = {v: 0 for v in k.vertices}
    v = m.vertex
    for _ in range(m.length):
        counts[v] += 1
        v = k.successor(v)
    return tuple(counts[v] for v in k.vertices)


def closed_form_translate(k: KupischSeries, m: NakayamaIndec, direction="tau") -> Optional[NakayamaIndec]:
    _check(k, m)
    if direction == "tau":
        if m.length == k.c(m.vertex):
            return None
        return NakayamaIndec(k.successor(m.vertex), m.length)
    if direction == "tau_inverse":
        if is_injective_indec(k, m):
            return None
        return NakayamaIndec(k.predecessor(m.vertex), m.length)
    raise ValueError(f"unknown direction {direction!r}")


def materialize(a: MonomialAlgebra, m: NakayamaIndec):
    """Explicit representation of ``P_i / rad^l P_i``: paths of length ``>= l`` span ``rad^l``."""
    P = projective(a, m.vertex)
    i = a.quiver.vindex[m.vertex]
    spaces = []
    for u in range(a.n):
        grp = a.group[i][u]
        basis, pos = [], []
        for b in grp:
            if len(a.basis[b]) >= m.length:
                v = [0] * len(grp)
                v[a.pos[b]] = 1
                basis.append(v)
                pos.append(a.pos[b])
        spaces.append(Subspace(len(grp), basis, pos))
    return quotient(P, spaces)[0]


def identify(k: KupischSeries, rep) -> Optional[NakayamaIndec]:
    """Name a module as ``M(i, l)`` when its top is simple (so it is a quotient of one ``P_i``)."""
    top = top_vector(rep)
    if sum(top) != 1:
        return None
    v = k.vertices[top.index(1)]
    l = rep.total_dim
    if l > k.c(v):
        return None
    return NakayamaIndec(v, l)
