"""Monomial bound quiver algebras ``kQ/I`` with ``I`` generated by paths.

Paths compose left to right: ``(a, b)`` means "a then b", and the product
``p*q`` of basis paths is their concatenation when ``target(p) ==
source(q)`` and it avoids every relation, zero otherwise. Modules are right
modules, so ``P_i = e_i A`` is spanned by the basis paths starting at ``i``.
"""

from dataclasses import dataclass
from typing import Hashable, Tuple

from .quiver import Quiver, id_key


class AlgebraError(ValueError):
    """Input that does not define an admissible finite-dimensional monomial algebra."""


class NotAdmissibleError(AlgebraError):
    pass


class InfiniteDimensionalError(AlgebraError):
    pass


@dataclass(frozen=True)
class Path:
    source: Hashable
    target: Hashable
    arrows: Tuple = ()

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.source}"
        return "".join(str(a) for a in self.arrows)


def _make_path(quiver, arrows):
    arrows = tuple(arrows)
    if not arrows:
        raise NotAdmissibleError("empty relation")
    for aid in arrows:
        if aid not in quiver.aindex:
            raise AlgebraError(f"relation uses unknown arrow {aid!r}")
    for x, y in zip(arrows, arrows[1:]):
        if quiver.arrow(x).target != quiver.arrow(y).source:
            raise AlgebraError(f"relation {arrows} is not a path: {x!r} then {y!r}")
    return Path(quiver.arrow(arrows[0]).source, quiver.arrow(arrows[-1]).target, arrows)


def _contains(word, sub):
    k = len(sub)
    return any(word[i:i + k] == sub for i in range(len(word) - k + 1))


class MonomialAlgebra:
    """``kQ/I`` with a minimal set of monomial relations and its path basis.

    Construction validates admissibility (relations of length at least two)
    and finite dimension, then enumerates the basis once.
    """

    def __init__(self, quiver: Quiver, relations=(), name=None):
        self.quiver = quiver
        self.name = name
        rels = {}
        for r in relations:
            p = _make_path(quiver, r.arrows if isinstance(r, Path) else r)
            if len(p) < 2:
                raise NotAdmissibleError(f"relation {p} has length < 2")
            rels[p.arrows] = p
        # keep a minimal generating set: no relation contains another
        minimal = [p for w, p in rels.items()
                   if not any(o != w and _contains(w, o) for o in rels)]
        self.relations = tuple(sorted(
            minimal, key=lambda p: (len(p), tuple(id_key(a) for a in p.arrows))))
        self._relwords = frozenset(p.arrows for p in self.relations)
        self._maxrel = max((len(p) for p in self.relations), default=1)
        self._check_finite()
        self._enumerate()
        self._opposite = None

    # -- construction -----------------------------------------------------

    def _avoids_at_end(self, word):
        for k in range(2, min(self._maxrel, len(word)) + 1):
            if word[-k:] in self._relwords:
                return False
        return True

    def _check_finite(self):
        q = self.quiver
        keep = self._maxrel - 1
        out = {v: [a.id for a in q.outgoing(v)] for v in q.vertices}

        def successors(state):
            v, tail = state
            for aid in out[v]:
                word = tail + (aid,)
                if self._avoids_at_end(word):
                    yield (q.arrow(aid).target, word[-keep:] if keep else ())

        color = {}
        for start in ((v, ()) for v in q.vertices):
            if start in color:
                continue
            color[start] = 1
            stack = [(start, successors(start))]
            while stack:
                state, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[state] = 2
                    stack.pop()
                elif color.get(nxt) == 1:
                    raise InfiniteDimensionalError(
                        "a directed cycle avoids every relation; the algebra is infinite-dimensional")
                elif nxt not in color:
                    color[nxt] = 1
                    stack.append((nxt, successors(nxt)))

    def _enumerate(self):
        q = self.quiver
        n = len(q.vertices)
        vi = q.vindex
        paths = [Path(v, v, ()) for v in q.vertices]
        frontier = list(paths)
        while frontier:
            nxt = []
            for p in frontier:
                for a in q.outgoing(p.target):
                    word = p.arrows + (a.id,)
                    if self._avoids_at_end(word):
                        nxt.append(Path(p.source, a.target, word))
            paths.extend(nxt)
            frontier = nxt
        paths.sort(key=lambda p: (len(p), id_key(p.source), tuple(id_key(a) for a in p.arrows)))
        self.basis = paths
        self.dim = len(paths)
        self.index = {(p.source, p.arrows): b for b, p in enumerate(paths)}
        self.src = [vi[p.source] for p in paths]
        self.tgt = [vi[p.target] for p in paths]
        self.group = [[[] for _ in range(n)] for _ in range(n)]
        for b, p in enumerate(paths):
            self.group[self.src[b]][self.tgt[b]].append(b)
        self.pos = [0] * len(paths)
        for i in range(n):
            for j in range(n):
                for k, b in enumerate(self.group[i][j]):
                    self.pos[b] = k
        # rmul[b][a] = basis index of (path b then arrow a), or -1
        self.rmul = []
        for p in paths:
            row = [-1] * len(q.arrows)
            for a in q.outgoing(p.target):
                row[q.aindex[a.id]] = self.index.get((p.source, p.arrows + (a.id,)), -1)
            self.rmul.append(row)
        self.constant = [self.index[(v, ())] for v in q.vertices]
        self.from_vertex = [[b for b in range(self.dim) if self.src[b] == i] for i in range(n)]
        # parent[b] = (b minus its last arrow, last arrow index);
        # lparent[b] = (first arrow index, b minus its first arrow)
        self.parent = [None] * self.dim
        self.lparent = [None] * self.dim
        for b, p in enumerate(paths):
            if p.arrows:
                self.parent[b] = (self.index[(p.source, p.arrows[:-1])], q.aindex[p.arrows[-1]])
                first = q.arrow(p.arrows[0])
                self.lparent[b] = (q.aindex[first.id], self.index[(first.target, p.arrows[1:])])
        self.arrow_st = [(vi[x.source], vi[x.target]) for x in q.arrows]
        self._modcache = {}

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def n(self):
        return len(self.quiver.vertices)

    def __eq__(self, other):
        return (isinstance(other, MonomialAlgebra) and self.quiver == other.quiver
                and self._relwords == other._relwords)

    def __hash__(self):
        return hash((self.quiver, self._relwords))

    def __repr__(self):
        rels = ", ".join(str(p) for p in self.relations)
        return f"MonomialAlgebra({self.quiver!r}, relations=[{rels}], dim={self.dim})"

    def concat(self, b1, b2):
        """Basis index of the product of basis paths ``b1`` then ``b2`` (or ``None``)."""
        if self.tgt[b1] != self.src[b2]:
            return None
        p1, p2 = self.basis[b1], self.basis[b2]
        return self.index.get((p1.source, p1.arrows + p2.arrows))

    def path_basis(self):
        """Basis paths grouped by ``(source, target)``; empty groups omitted."""
        out = {}
        for i, u in enumerate(self.vertices):
            for j, v in enumerate(self.vertices):
                if self.group[i][j]:
                    out[(u, v)] = [self.basis[b] for b in self.group[i][j]]
        return out

    def cartan_matrix(self):
        """Entry ``(j, i)`` counts basis paths from ``i`` to ``j``; column ``i`` is ``dim P_i``."""
        n = self.n
        return [[len(self.group[i][j]) for i in range(n)] for j in range(n)]

    def is_nakayama(self):
        q = self.quiver
        return all(len(q.outgoing(v)) <= 1 and len(q.incoming(v)) <= 1 for v in q.vertices)

    # -- derived algebras -------------------------------------------------

    def opposite(self) -> "MonomialAlgebra":
        if self._opposite is None:
            op = MonomialAlgebra(self.quiver.opposite(),
                                 [tuple(reversed(p.arrows)) for p in self.relations],
                                 name=f"{self.name}^op" if self.name else None)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def restrict(self, kept) -> "MonomialAlgebra":
        """Algebra on the full subquiver ``kept`` keeping relations supported there."""
        sub = self.quiver.full_subquiver(kept)
        rels = [p.arrows for p in self.relations if all(a in sub.aindex for a in p.arrows)]
        return MonomialAlgebra(sub, rels, name=self.name)

    def components(self):
        """Factor algebras on the weakly connected components of the quiver."""
        return [self.restrict(block) for block in self.quiver.components()]

    def delete_source_vertex(self, v) -> "MonomialAlgebra":
        """The idempotent subalgebra ``(1-e_v) A (1-e_v)`` for a source vertex ``v``.

        No surviving path can pass through a source, so this is the algebra of
        the full subquiver on the remaining vertices.
        """
        if v not in self.quiver.vindex:
            raise AlgebraError(f"unknown vertex {v!r}")
        if self.quiver.incoming(v):
            raise AlgebraError(f"vertex {v!r} is not a source; only source deletion is supported")
        return self.restrict([u for u in self.vertices if u != v])


def new_monomial_algebra(quiver: Quiver, relations=(), name=None) -> MonomialAlgebra:
    """Validate and build ``kQ/I``; raises :class:`AlgebraError` subclasses on bad input."""
    return MonomialAlgebra(quiver, relations, name=name)
