"""Representations of monomial algebras over the rationals.

A :class:`Representation` stores one vector space per vertex and one matrix
per arrow; the matrix of ``a: u -> v`` has shape ``dim(v) x dim(u)`` and
acts on column vectors. Maps between sums of indecomposable projectives (or
injectives) are carried symbolically by :class:`PathMatrix`, whose entries
are rational combinations of basis paths; the Nakayama functor sends the
projective realization of a path matrix to its injective realization.

Vertices and arrows are addressed by their position in the algebra's
(sorted) quiver internally; public constructors take vertex ids.
"""

import random
from dataclasses import dataclass, field
from typing import List

from . import linalg
from .linalg import Subspace


class RepresentationError(ValueError):
    pass


class Representation:
    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra, dims, maps, check=True):
        self.algebra = algebra
        self.dims = list(dims)
        self.maps = list(maps)
        if check:
            self.validate()

    def validate(self):
        a = self.algebra
        q = a.quiver
        if len(self.dims) != a.n or len(self.maps) != len(q.arrows):
            raise RepresentationError("shape does not match the quiver")
        for k, arr in enumerate(q.arrows):
            s, t = q.vindex[arr.source], q.vindex[arr.target]
            mat = self.maps[k]
            if len(mat) != self.dims[t] or any(len(r) != self.dims[s] for r in mat):
                raise RepresentationError(f"matrix of arrow {arr.id!r} has the wrong shape")
        for rel in a.relations:
            s = q.vindex[rel.source]
            for j in range(self.dims[s]):
                x = [1 if i == j else 0 for i in range(self.dims[s])]
                if any(self.apply_word(rel.arrows, x)):
                    raise RepresentationError(f"relation {rel} does not act as zero")

    @property
    def total_dim(self):
        return sum(self.dims)

    def dim_vector(self):
        return tuple(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def apply_word(self, arrows, x):
        q = self.algebra.quiver
        for aid in arrows:
            x = linalg.matvec(self.maps[q.aindex[aid]], x)
        return x

    def orbit(self, u, x):
        """``{b: x * p_b}`` for every basis path ``p_b`` starting at vertex index ``u``."""
        a = self.algebra
        out = {a.constant[u]: x}
        for b in a.from_vertex[u]:
            par = a.parent[b]
            if par is not None:
                prev, k = par
                out[b] = linalg.matvec(self.maps[k], out[prev])
        return out

    def dual(self, algebra=None):
        """``D M`` as a representation of the opposite algebra (or of ``algebra``)."""
        a = self.algebra
        target = algebra if algebra is not None else a.opposite()
        q, qo = a.quiver, target.quiver
        maps = [None] * len(qo.arrows)
        for k, arr in enumerate(q.arrows):
            s, t = q.vindex[arr.source], q.vindex[arr.target]
            maps[qo.aindex[arr.id]] = linalg.transpose(self.maps[k], self.dims[t], self.dims[s])
        return Representation(target, self.dims, maps, check=False)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.algebra == other.algebra
                and self.dims == other.dims
                and all(_mat_eq(x, y) for x, y in zip(self.maps, other.maps)))

    __hash__ = None

    def __repr__(self):
        return f"Representation(dim_vector={self.dim_vector()})"


def _mat_eq(x, y):
    return len(x) == len(y) and all(list(r) == list(s) for r, s in zip(x, y))


@dataclass
class ModuleMap:
    domain: Representation
    codomain: Representation
    mats: list  # per vertex index, codomain.dims[u] x domain.dims[u]

    def check(self):
        a = self.domain.algebra
        q = a.quiver
        for k, arr in enumerate(q.arrows):
            s, t = q.vindex[arr.source], q.vindex[arr.target]
            lhs = linalg.matmul(self.codomain.maps[k], self.mats[s],
                                self.codomain.dims[s], self.domain.dims[s])
            rhs = linalg.matmul(self.mats[t], self.domain.maps[k],
                                self.domain.dims[t], self.domain.dims[s])
            if not _mat_eq(lhs, rhs):
                raise RepresentationError(f"map does not commute with arrow {arr.id!r}")
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self after other``."""
        mats = [linalg.matmul(self.mats[u], other.mats[u], other.codomain.dims[u],
                              other.domain.dims[u]) for u in range(len(self.mats))]
        return ModuleMap(other.domain, self.codomain, mats)

    def ranks(self):
        return [linalg.rank(m, self.domain.dims[u]) for u, m in enumerate(self.mats)]

    def is_zero(self):
        return all(linalg.is_zero_matrix(m) for m in self.mats)

    def is_iso(self):
        return (self.domain.dims == self.codomain.dims
                and all(r == d for r, d in zip(self.ranks(), self.domain.dims)))


def identity_map(m):
    return ModuleMap(m, m, [linalg.identity(d) for d in m.dims])


def zero_map(m, n):
    return ModuleMap(m, n, [linalg.zeros(n.dims[u], m.dims[u]) for u in range(len(m.dims))])


# -- standard modules -------------------------------------------------------

def _vidx(a, v):
    try:
        return a.quiver.vindex[v]
    except KeyError:
        raise RepresentationError(f"unknown vertex {v!r}") from None


def simple(a, v):
    i = _vidx(a, v)
    dims = [1 if j == i else 0 for j in range(a.n)]
    maps = [linalg.zeros(dims[t], dims[s]) for s, t in a.arrow_st]
    return Representation(a, dims, maps, check=False)


def projective(a, v):
    """``P_v = e_v A``; the basis at vertex ``u`` is the group of paths ``v -> u``."""
    i = _vidx(a, v)
    key = ("P", i)
    cache = a._modcache
    if key not in cache:
        dims = [len(a.group[i][u]) for u in range(a.n)]
        maps = []
        for k, (s, t) in enumerate(a.arrow_st):
            mat = linalg.zeros(dims[t], dims[s])
            for b in a.group[i][s]:
                r = a.rmul[b][k]
                if r >= 0:
                    mat[a.pos[r]][a.pos[b]] = 1
            maps.append(mat)
        cache[key] = Representation(a, dims, maps, check=False)
    return cache[key]


def injective(a, v):
    """``I_v = D(A e_v)``; the basis at ``u`` is dual to the paths ``u -> v``."""
    i = _vidx(a, v)
    key = ("I", i)
    cache = a._modcache
    if key not in cache:
        dims = [len(a.group[u][i]) for u in range(a.n)]
        maps = []
        for k, (s, t) in enumerate(a.arrow_st):
            mat = linalg.zeros(dims[t], dims[s])
            for b in a.group[s][i]:
                lp = a.lparent[b]
                if lp is not None and lp[0] == k:
                    rest = lp[1]
                    mat[a.pos[rest]][a.pos[b]] = 1
            maps.append(mat)
        cache[key] = Representation(a, dims, maps, check=False)
    return cache[key]


def standard_module(a, kind, v):
    if kind == "simple":
        return simple(a, v)
    if kind == "projective":
        return projective(a, v)
    if kind == "injective":
        return injective(a, v)
    raise ValueError(f"unknown module kind {kind!r}")


def zero_module(a):
    return Representation(a, [0] * a.n, [[] for _ in a.arrow_st], check=False)


def direct_sum(a, mods):
    mods = list(mods)
    dims = [sum(m.dims[u] for m in mods) for u in range(a.n)]
    maps = []
    for k, (s, t) in enumerate(a.arrow_st):
        mat = linalg.zeros(dims[t], dims[s])
        ro = co = 0
        for m in mods:
            blk = m.maps[k]
            for r in range(m.dims[t]):
                row = blk[r]
                dst = mat[ro + r]
                for c in range(m.dims[s]):
                    if row[c]:
                        dst[co + c] = row[c]
            ro += m.dims[t]
            co += m.dims[s]
        maps.append(mat)
    return Representation(a, dims, maps, check=False)


# -- sub- and quotient modules ------------------------------------------------

def submodule(m, spaces):
    """Submodule spanned by per-vertex subspaces (assumed arrow-stable), with inclusion."""
    a = m.algebra
    dims = [len(sp) for sp in spaces]
    maps = []
    for k, (s, t) in enumerate(a.arrow_st):
        sc = linalg.sparse_columns(m.maps[k], m.dims[t], m.dims[s])
        cols = [spaces[t].coords(linalg.sparse_matvec(sc, b, m.dims[t])) for b in spaces[s].basis]
        maps.append([[cols[c][r] for c in range(dims[s])] for r in range(dims[t])])
    sub = Representation(a, dims, maps, check=False)
    inc = [[[b[r] for b in spaces[u].basis] for r in range(m.dims[u])] for u in range(a.n)]
    return sub, ModuleMap(sub, m, inc)


def quotient(m, spaces):
    """``M / U`` for arrow-stable subspaces ``U``, with the projection."""
    a = m.algebra
    comp = [sp.complement_positions() for sp in spaces]
    dims = [len(c) for c in comp]
    maps = []
    for k, (s, t) in enumerate(a.arrow_st):
        src = m.maps[k]
        cols = [spaces[t].quotient_coords([src[r][c] for r in range(m.dims[t])]) for c in comp[s]]
        maps.append([[cols[c][r] for c in range(dims[s])] for r in range(dims[t])])
    quo = Representation(a, dims, maps, check=False)
    proj = []
    for u in range(a.n):
        cols = []
        for j in range(m.dims[u]):
            e = [0] * m.dims[u]
            e[j] = 1
            cols.append(spaces[u].quotient_coords(e))
        proj.append([[cols[j][r] for j in range(m.dims[u])] for r in range(dims[u])])
    return quo, ModuleMap(m, quo, proj)


def kernel_spaces(f: ModuleMap):
    return [linalg.nullspace(f.mats[u], f.domain.dims[u]) for u in range(len(f.mats))]


def image_spaces(f: ModuleMap):
    out = []
    for u, mat in enumerate(f.mats):
        d = f.codomain.dims[u]
        cols = [[mat[r][c] for r in range(d)] for c in range(f.domain.dims[u])]
        out.append(Subspace.span(d, cols))
    return out


def kernel_cokernel(f: ModuleMap):
    """``(ker, ker -> dom, cok, cod -> cok)``."""
    ker, inc = submodule(f.domain, kernel_spaces(f))
    cok, proj = quotient(f.codomain, image_spaces(f))
    return ker, inc, cok, proj


def image(f: ModuleMap):
    return submodule(f.codomain, image_spaces(f))


def radical_spaces(m):
    a = m.algebra
    vecs = [[] for _ in range(a.n)]
    for k, (s, t) in enumerate(a.arrow_st):
        mat = m.maps[k]
        for c in range(m.dims[s]):
            col = [mat[r][c] for r in range(m.dims[t])]
            if any(col):
                vecs[t].append(col)
    return [Subspace.span(m.dims[u], vecs[u]) for u in range(a.n)]


def socle_spaces(m):
    a = m.algebra
    rows = [[] for _ in range(a.n)]
    for k, (s, t) in enumerate(a.arrow_st):
        rows[s].extend(m.maps[k])
    return [linalg.nullspace(rows[u], m.dims[u]) for u in range(a.n)]


@dataclass
class Series:
    top: Representation
    top_map: ModuleMap
    radical: Representation
    radical_inclusion: ModuleMap
    socle: Representation
    socle_inclusion: ModuleMap


def structural_series(m) -> Series:
    top, tmap = quotient(m, radical_spaces(m))
    rad, rinc = submodule(m, radical_spaces(m))
    soc, sinc = submodule(m, socle_spaces(m))
    return Series(top, tmap, rad, rinc, soc, sinc)


def top_vector(m):
    return tuple(m.dims[u] - len(sp) for u, sp in enumerate(radical_spaces(m)))


def socle_vector(m):
    return tuple(len(sp) for sp in socle_spaces(m))


# -- path matrices --------------------------------------------------------------

@dataclass
class PathMatrix:
    """Morphism between sums of indecomposable projectives, by path coefficients.

    ``dom`` and ``cod`` list vertex indices of the summands. ``entries[(k, j)]``
    maps basis-path indices (paths from ``cod[k]`` to ``dom[j]``) to
    coefficients; the path ``p`` acts on ``P_dom[j]`` as ``x -> p x``.
    """

    algebra: object
    dom: List[int]
    cod: List[int]
    entries: dict = field(default_factory=dict)

    def compose(self, other: "PathMatrix") -> "PathMatrix":
        """``self after other``."""
        a = self.algebra
        out = {}
        for (k, m), ge in self.entries.items():
            for (m2, j), fe in other.entries.items():
                if m2 != m:
                    continue
                acc = out.setdefault((k, j), {})
                for p, c in ge.items():
                    for q, d in fe.items():
                        r = a.concat(p, q)
                        if r is not None:
                            acc[r] = acc.get(r, 0) + c * d
        out = {key: {p: c for p, c in e.items() if c} for key, e in out.items()}
        return PathMatrix(a, list(other.dom), list(self.cod), {k: e for k, e in out.items() if e})

    def is_zero(self):
        return not any(c for e in self.entries.values() for c in e.values())

    def projective_map(self) -> ModuleMap:
        a = self.algebra
        P = direct_sum(a, [projective(a, a.vertices[v]) for v in self.dom])
        Q = direct_sum(a, [projective(a, a.vertices[v]) for v in self.cod])
        mats = [linalg.zeros(Q.dims[u], P.dims[u]) for u in range(a.n)]
        doff = _offsets(a, self.dom, lambda v, u: len(a.group[v][u]))
        coff = _offsets(a, self.cod, lambda v, u: len(a.group[v][u]))
        for (k, j), e in self.entries.items():
            for p, c in e.items():
                for u in range(a.n):
                    for qb in a.group[self.dom[j]][u]:
                        r = a.concat(p, qb)
                        if r is not None:
                            mats[u][coff[k][u] + a.pos[r]][doff[j][u] + a.pos[qb]] += c
        return ModuleMap(P, Q, mats)

    def injective_map(self) -> ModuleMap:
        """The Nakayama functor applied to :meth:`projective_map`."""
        a = self.algebra
        I = direct_sum(a, [injective(a, a.vertices[v]) for v in self.dom])
        J = direct_sum(a, [injective(a, a.vertices[v]) for v in self.cod])
        mats = [linalg.zeros(J.dims[u], I.dims[u]) for u in range(a.n)]
        doff = _offsets(a, self.dom, lambda v, u: len(a.group[u][v]))
        coff = _offsets(a, self.cod, lambda v, u: len(a.group[u][v]))
        for (k, j), e in self.entries.items():
            for p, c in e.items():
                for u in range(a.n):
                    for y in a.group[u][self.cod[k]]:
                        qb = a.concat(y, p)
                        if qb is not None:
                            mats[u][coff[k][u] + a.pos[y]][doff[j][u] + a.pos[qb]] += c
        return ModuleMap(I, J, mats)


def _offsets(a, summands, size):
    offs = []
    run = [0] * a.n
    for v in summands:
        offs.append(list(run))
        for u in range(a.n):
            run[u] += size(v, u)
    return offs


def projective_path_matrix(f: ModuleMap, dom, cod) -> PathMatrix:
    """Read path coefficients off a map between projective sums ``P(dom) -> P(cod)``."""
    a = f.domain.algebra
    doff = _offsets(a, dom, lambda v, u: len(a.group[v][u]))
    coff = _offsets(a, cod, lambda v, u: len(a.group[v][u]))
    entries = {}
    for j, w in enumerate(dom):
        col = doff[j][w]  # the generator e_w sits first in its group
        mat = f.mats[w]
        for k, v in enumerate(cod):
            e = {}
            for p in a.group[v][w]:
                c = mat[coff[k][w] + a.pos[p]][col]
                if c:
                    e[p] = c
            if e:
                entries[(k, j)] = e
    return PathMatrix(a, list(dom), list(cod), entries)


def injective_path_matrix(f: ModuleMap, dom, cod) -> PathMatrix:
    """Read path coefficients off a map between injective sums ``I(dom) -> I(cod)``.

    The coefficient of ``p: cod[k] -> dom[j]`` is the ``delta_e`` coordinate
    (at the socle of ``I_cod[k]``) of the image of ``delta_p``.
    """
    a = f.domain.algebra
    doff = _offsets(a, dom, lambda v, u: len(a.group[u][v]))
    coff = _offsets(a, cod, lambda v, u: len(a.group[u][v]))
    entries = {}
    for k, v in enumerate(cod):
        row = f.mats[v][coff[k][v]]  # delta of the constant path e_v
        for j, w in enumerate(dom):
            e = {}
            for p in a.group[v][w]:
                c = row[doff[j][v] + a.pos[p]]
                if c:
                    e[p] = c
            if e:
                entries[(k, j)] = e
    return PathMatrix(a, list(dom), list(cod), entries)


# -- covers, envelopes, presentations ------------------------------------------

def _top_generators(m):
    """``[(vertex index, vector)]`` lifting a basis of ``top M``."""
    gens = []
    for u, sp in enumerate(radical_spaces(m)):
        for c in sp.complement_positions():
            x = [0] * m.dims[u]
            x[c] = 1
            gens.append((u, x))
    return gens


def _cover_from_generators(m, gens):
    a = m.algebra
    P = direct_sum(a, [projective(a, a.vertices[u]) for u, _ in gens])
    cols = [[] for _ in range(a.n)]
    for u, x in gens:
        orb = m.orbit(u, x)
        for w in range(a.n):
            for b in a.group[u][w]:
                cols[w].append(orb[b])
    mats = [[[cols[w][c][r] for c in range(P.dims[w])] for r in range(m.dims[w])]
            for w in range(a.n)]
    return ModuleMap(P, m, mats)


def projective_cover(m) -> ModuleMap:
    if m.is_zero():
        raise RepresentationError("the zero module has no projective cover")
    return _cover_from_generators(m, _top_generators(m))


@dataclass
class Presentation:
    """``P1 --d--> P0 --cover--> M -> 0`` with ``d`` as a path matrix."""

    module: Representation
    cover: ModuleMap
    p0: List[int]
    p1: List[int]
    d: PathMatrix

    def map(self) -> ModuleMap:
        return self.d.projective_map()


def minimal_projective_presentation(m) -> Presentation:
    if m.is_zero():
        raise RepresentationError("the zero module has no presentation")
    a = m.algebra
    gens = _top_generators(m)
    cover = _cover_from_generators(m, gens)
    p0 = [u for u, _ in gens]
    P = cover.domain
    ker = kernel_spaces(cover)
    # radical of the kernel, computed inside P0 coordinates
    rad_vecs = [[] for _ in range(a.n)]
    for k, (s, t) in enumerate(a.arrow_st):
        for b in ker[s].basis:
            v = linalg.matvec(P.maps[k], b)
            if any(v):
                rad_vecs[t].append(v)
    coff = _offsets(a, p0, lambda v, u: len(a.group[v][u]))
    p1, entries = [], {}
    for w in range(a.n):
        if not ker[w].basis:
            continue
        span = Subspace.span(P.dims[w], rad_vecs[w])
        for b in ker[w].basis:
            if span.contains(b):
                continue
            span = span + Subspace.span(P.dims[w], [b])
            j = len(p1)
            p1.append(w)
            for k, v in enumerate(p0):
                e = {}
                for p in a.group[v][w]:
                    c = b[coff[k][w] + a.pos[p]]
                    if c:
                        e[p] = c
                if e:
                    entries[(k, j)] = e
    return Presentation(m, cover, p0, p1, PathMatrix(a, p1, p0, entries))


def _socle_functionals(m):
    """``[(vertex index, functional row)]`` dual to a basis of ``soc M``."""
    gens = []
    for u, sp in enumerate(socle_spaces(m)):
        for pos in sp.positions:
            phi = [0] * m.dims[u]
            phi[pos] = 1
            gens.append((u, phi))
    return gens


def _envelope_from_functionals(m, gens):
    a = m.algebra
    I = direct_sum(a, [injective(a, a.vertices[v]) for v, _ in gens])
    mats = [[] for _ in range(a.n)]
    for v, phi in gens:
        # psi[y] = phi . M_y for every basis path y ending at v
        psi = {a.constant[v]: phi}
        order = sorted((y for u in range(a.n) for y in a.group[u][v]),
                       key=lambda y: len(a.basis[y]))
        for y in order:
            lp = a.lparent[y]
            if lp is None:
                continue
            k, rest = lp
            s, t = a.arrow_st[k]
            mk = m.maps[k]
            r = psi[rest]
            psi[y] = [sum(r[i] * mk[i][c] for i in range(m.dims[t]) if r[i]) for c in range(m.dims[s])]
        for u in range(a.n):
            for y in a.group[u][v]:
                mats[u].append(psi[y])
    return ModuleMap(m, I, mats)


def injective_envelope(m) -> ModuleMap:
    if m.is_zero():
        raise RepresentationError("the zero module has no injective envelope")
    return _envelope_from_functionals(m, _socle_functionals(m))


@dataclass
class Copresentation:
    """``0 -> M --embed--> I0 --f--> I1`` with ``f`` as a path matrix."""

    module: Representation
    embed: ModuleMap
    i0: List[int]
    i1: List[int]
    f: PathMatrix

    def map(self) -> ModuleMap:
        return self.f.injective_map()


def minimal_injective_copresentation(m) -> Copresentation:
    if m.is_zero():
        raise RepresentationError("the zero module has no copresentation")
    a = m.algebra
    g0 = _socle_functionals(m)
    embed = _envelope_from_functionals(m, g0)
    i0 = [v for v, _ in g0]
    cok, proj = quotient(embed.codomain, image_spaces(embed))
    i1 = []
    if cok.is_zero():
        return Copresentation(m, embed, i0, i1, PathMatrix(a, i0, i1, {}))
    g1 = _socle_functionals(cok)
    env = _envelope_from_functionals(cok, g1)
    i1 = [v for v, _ in g1]
    f = env.compose(proj)
    return Copresentation(m, embed, i0, i1, injective_path_matrix(f, i0, i1))


# -- Hom, Ext, isomorphism ---------------------------------------------------------

def hom_basis(m, n) -> List[ModuleMap]:
    """A basis of ``Hom(M, N)`` solving the commuting squares exactly."""
    if m.algebra != n.algebra:
        raise RepresentationError("modules over different algebras")
    a = m.algebra
    off, tot = [], 0
    for u in range(a.n):
        off.append(tot)
        tot += n.dims[u] * m.dims[u]
    rows = []
    for k, (s, t) in enumerate(a.arrow_st):
        Na, Ma = n.maps[k], m.maps[k]
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                eq = [0] * tot
                for i in range(n.dims[s]):
                    if Na[r][i]:
                        eq[off[s] + i * m.dims[s] + c] += Na[r][i]
                for i in range(m.dims[t]):
                    if Ma[i][c]:
                        eq[off[t] + r * m.dims[t] + i] -= Ma[i][c]
                rows.append(eq)
    ker = linalg.nullspace(rows, tot)
    out = []
    for x in ker.basis:
        mats = [[[x[off[u] + r * m.dims[u] + c] for c in range(m.dims[u])]
                 for r in range(n.dims[u])] for u in range(a.n)]
        out.append(ModuleMap(m, n, mats))
    return out


def is_isomorphic(m, n) -> bool:
    """Exact isomorphism test.

    ``M`` and ``N`` are isomorphic iff the determinant of a generic element of
    ``Hom(M, N)`` is a nonzero polynomial in its coordinates. Random integer
    points settle the positive case quickly; otherwise the polynomial is
    expanded symbolically.
    """
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    basis = hom_basis(m, n)
    if not basis:
        return False
    rng = random.Random(0)
    for _ in range(8):
        coeffs = [rng.randint(-50, 50) for _ in basis]
        if all(linalg.determinant(_combine(basis, coeffs, u), m.dims[u]) != 0
               for u in range(len(m.dims)) if m.dims[u]):
            return True
    import sympy

    ts = sympy.symbols(f"t0:{len(basis)}")
    prod = sympy.Integer(1)
    for u, d in enumerate(m.dims):
        if d:
            mat = sympy.Matrix(d, d, lambda r, c: sum(t * sympy.Rational(g.mats[u][r][c])
                                                       for t, g in zip(ts, basis)))
            prod *= mat.det(method="berkowitz")
    return sympy.expand(prod) != 0


def _combine(basis, coeffs, u):
    d_out = len(basis[0].mats[u])
    d_in = len(basis[0].mats[u][0]) if d_out else 0
    acc = linalg.zeros(d_out, d_in)
    for g, c in zip(basis, coeffs):
        for r in range(d_out):
            for s in range(d_in):
                if g.mats[u][r][s]:
                    acc[r][s] += c * g.mats[u][r][s]
    return acc


def endomorphism_radical_codim(m) -> int:
    """``dim End(M) / rad End(M)``.

    In characteristic zero the radical of an algebra of matrices is the
    kernel of its trace form, so this is a rank computation.
    """
    basis = hom_basis(m, m)
    r = len(basis)
    gram = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            t = 0
            for u, d in enumerate(m.dims):
                x, y = basis[i].mats[u], basis[j].mats[u]
                for p in range(d):
                    for q in range(d):
                        if x[p][q] and y[q][p]:
                            t += x[p][q] * y[q][p]
            gram[i][j] = gram[j][i] = t
    return linalg.rank(gram, r)


def is_absolutely_indecomposable(m) -> bool:
    """``End(M)`` is local with residue field the rationals."""
    if m.is_zero():
        return False
    if sum(top_vector(m)) == 1 or sum(socle_vector(m)) == 1:
        return True
    return endomorphism_radical_codim(m) == 1


def ext1_dim(a, s, t) -> int:
    """``dim Ext^1(S_s, S_t)``: multiplicity of ``P_t`` in the second presentation term."""
    pres = minimal_projective_presentation(simple(a, s))
    ti = _vidx(a, t)
    return sum(1 for w in pres.p1 if w == ti)


def ext_quiver(a):
    """Quiver on the simples with one arrow ``s -> t`` iff ``Ext^1(S_s, S_t) != 0``."""
    from .quiver import Quiver

    arrows = []
    for s in a.vertices:
        pres = minimal_projective_presentation(simple(a, s))
        for ti in sorted(set(pres.p1)):
            t = a.vertices[ti]
            arrows.append((f"{s}->{t}", s, t))
    return Quiver(a.vertices, arrows)


def is_projective(m) -> bool:
    if m.is_zero():
        return True
    return not minimal_projective_presentation(m).p1


def is_injective(m) -> bool:
    if m.is_zero():
        return True
    return not minimal_injective_copresentation(m).i1


def extend_by_zero(m, algebra):
    """View a module over a full-subquiver algebra as a module over ``algebra``.

    For a source-vertex deletion this is the functor ``- (x) (1-e)A``.
    """
    sub = m.algebra.quiver
    q = algebra.quiver
    dims = [m.dims[sub.vindex[v]] if v in sub.vindex else 0 for v in q.vertices]
    maps = []
    for k, (s, t) in enumerate(algebra.arrow_st):
        aid = q.arrows[k].id
        if aid in sub.aindex:
            maps.append([list(r) for r in m.maps[sub.aindex[aid]]])
        else:
            maps.append(linalg.zeros(dims[t], dims[s]))
    return Representation(algebra, dims, maps, check=False)


def restrict_to(m, algebra):
    """Restriction ``Hom((1-e)A, -)`` to a full-subquiver algebra."""
    big = m.algebra.quiver
    q = algebra.quiver
    dims = [m.dims[big.vindex[v]] for v in q.vertices]
    maps = [[list(r) for r in m.maps[big.aindex[x.id]]] for x in q.arrows]
    return Representation(algebra, dims, maps, check=False)
