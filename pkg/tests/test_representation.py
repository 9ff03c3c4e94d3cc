import random

import pytest

from taumap import linalg
from taumap.algebra import MonomialAlgebra
from taumap.corpus import random_corpus
from taumap.quiver import Quiver
from taumap.representation import (
    ModuleMap,
    Representation,
    RepresentationError,
    direct_sum,
    endomorphism_radical_codim,
    ext1_dim,
    ext_quiver,
    hom_basis,
    identity_map,
    injective,
    is_absolutely_indecomposable,
    is_injective,
    is_isomorphic,
    is_projective,
    kernel_cokernel,
    kernel_spaces,
    minimal_injective_copresentation,
    minimal_projective_presentation,
    projective,
    projective_cover,
    radical_spaces,
    simple,
    standard_module,
    structural_series,
    submodule,
    zero_map,
)

CORPUS = random_corpus(30, seed=11)


def kronecker():
    return MonomialAlgebra(Quiver([1, 2], [("a", 1, 2), ("b", 1, 2)]))


def test_standard_modules(two_cycle, a2):
    assert projective(two_cycle, 1).dim_vector() == (1, 1)
    assert projective(two_cycle, 2).dim_vector() == (1, 2)
    assert simple(two_cycle, 1).dim_vector() == (1, 0)
    assert injective(a2, 1) == simple(a2, 1)
    assert injective(a2, 2).dim_vector() == (1, 1)
    assert standard_module(a2, "projective", 1) == projective(a2, 1)
    with pytest.raises(ValueError):
        standard_module(a2, "flat", 1)


def test_relation_violation_rejected(two_cycle):
    # a and b both identity on a (1,1) module: ab acts nonzero
    with pytest.raises(RepresentationError):
        Representation(two_cycle, [1, 1], [[[1]], [[1]]])


def test_hom_basis(two_cycle):
    s1, s2 = simple(two_cycle, 1), simple(two_cycle, 2)
    assert len(hom_basis(s1, s1)) == 1
    assert len(hom_basis(projective(two_cycle, 2), s2)) == 1
    assert hom_basis(s1, s2) == []


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_yoneda_dimensions(alg):
    # Hom(P_v, M) = M_v and Hom(M, I_v) = D M_v
    for v in alg.vertices:
        m = projective(alg, alg.vertices[0])
        u = alg.quiver.vindex[v]
        assert len(hom_basis(projective(alg, v), m)) == m.dims[u]
        assert len(hom_basis(m, injective(alg, v))) == m.dims[u]


def test_kernel_cokernel_examples(two_cycle):
    p1 = projective(two_cycle, 1)
    ker, _, cok, _ = kernel_cokernel(identity_map(p1))
    assert ker.is_zero() and cok.is_zero()
    ker, _, cok, _ = kernel_cokernel(zero_map(p1, p1))
    assert ker.dims == p1.dims and cok.dims == p1.dims
    rad, inc = submodule(p1, radical_spaces(p1))
    _, _, cok, _ = kernel_cokernel(inc)
    assert cok.dim_vector() == (1, 0)


def test_structural_series(two_cycle, semisimple):
    s = structural_series(simple(two_cycle, 1))
    assert s.top.dims == [1, 0] and s.radical.is_zero() and s.socle.dims == [1, 0]
    p2 = structural_series(projective(two_cycle, 2))
    assert p2.top.dim_vector() == (0, 1)
    assert p2.radical.dim_vector() == (1, 1)
    assert structural_series(simple(semisimple, 1)).radical.is_zero()


def test_projective_cover(two_cycle):
    p2 = projective(two_cycle, 2)
    assert projective_cover(p2).is_iso()
    assert projective_cover(simple(two_cycle, 1)).domain.dims == [1, 1]
    s2 = simple(two_cycle, 2)
    cov = projective_cover(direct_sum(two_cycle, [s2, s2]))
    assert cov.domain.dim_vector() == (2, 4)


def test_presentations(two_cycle, a2, star):
    assert minimal_projective_presentation(projective(two_cycle, 1)).p1 == []
    assert minimal_projective_presentation(simple(two_cycle, 1)).p1 == [1]  # index of vertex 2
    pres = minimal_projective_presentation(simple(a2, 1))
    assert (pres.p0, pres.p1) == ([0], [1])
    cop = minimal_injective_copresentation(simple(star, 1))
    assert cop.i0 == [0] and sorted(cop.i1) == [1, 2]
    assert injective(star, 1).dim_vector() == (1, 1, 1)
    assert minimal_injective_copresentation(simple(a2, 2)).i0 == [1]
    assert minimal_injective_copresentation(injective(a2, 2)).i1 == []


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_presentation_is_exact(alg):
    for v in alg.vertices:
        m = simple(alg, v)
        pres = minimal_projective_presentation(m)
        d = pres.map()
        assert pres.cover.compose(d).is_zero()
        # cover is onto, and d maps onto its kernel
        assert all(r == dd for r, dd in zip(pres.cover.ranks(), m.dims))
        ker_dims = [p - r for p, r in zip(pres.cover.domain.dims, pres.cover.ranks())]
        assert d.ranks() == ker_dims


def test_ext1(two_cycle, semisimple, a2):
    assert ext1_dim(two_cycle, 1, 2) == 1
    assert ext1_dim(two_cycle, 1, 1) == 0
    assert ext1_dim(semisimple, 1, 1) == 0
    assert ext1_dim(a2, 1, 2) == 1
    eq = ext_quiver(two_cycle)
    assert eq.oriented_cycle_type() == 2
    assert ext_quiver(semisimple).arrows == ()


def _mm(x, y, n, inner, m):
    return [[sum(x[i][k] * y[k][j] for k in range(inner)) for j in range(m)] for i in range(n)]


def _conjugate(m, rng):
    """``m`` written in a random basis at every vertex: ``g_t M_a g_s^-1``."""
    gs, ginvs = [], []
    for d in m.dims:
        while True:
            g = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
            if d == 0 or linalg.determinant(g, d) != 0:
                break
        gs.append(g)
        ginvs.append(linalg.inverse(g, d) if d else [])
    maps = []
    for k, (s, t) in enumerate(m.algebra.arrow_st):
        ds, dt = m.dims[s], m.dims[t]
        maps.append(_mm(_mm(gs[t], m.maps[k], dt, dt, ds), ginvs[s], dt, ds, ds))
    return Representation(m.algebra, m.dims, maps)


def test_isomorphism_under_base_change(two_cycle, star):
    rng = random.Random(5)
    for alg in (two_cycle, star):
        for v in alg.vertices:
            for m in (projective(alg, v), injective(alg, v)):
                assert is_isomorphic(m, _conjugate(m, rng))


def test_non_isomorphic_same_dims():
    k = kronecker()
    m1 = Representation(k, [1, 1], [[[1]], [[0]]])
    m2 = Representation(k, [1, 1], [[[0]], [[1]]])
    assert not is_isomorphic(m1, m2)
    assert is_isomorphic(m1, m1)


def test_indecomposability(two_cycle):
    s1 = simple(two_cycle, 1)
    assert is_absolutely_indecomposable(s1)
    assert not is_absolutely_indecomposable(direct_sum(two_cycle, [s1, s1]))
    assert endomorphism_radical_codim(direct_sum(two_cycle, [s1, simple(two_cycle, 2)])) == 2
    assert is_absolutely_indecomposable(projective(two_cycle, 2))


def test_projective_injective_flags(a2):
    assert is_projective(projective(a2, 1)) and not is_projective(simple(a2, 1))
    assert is_injective(simple(a2, 1)) and not is_injective(simple(a2, 2))


def test_module_map_composition_check(two_cycle):
    p1 = projective(two_cycle, 1)
    f = ModuleMap(p1, p1, [[[1]], [[0]]])
    with pytest.raises(RepresentationError):
        f.check()


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_cover_minimal_and_rank_nullity(alg):
    for v in alg.vertices:
        for m in (simple(alg, v), injective(alg, v)):
            cov = projective_cover(m)
            ker = kernel_spaces(cov)
            rad = radical_spaces(cov.domain)
            assert all(r.contains_subspace(k) for r, k in zip(rad, ker))
            assert [len(k) + r for k, r in zip(ker, cov.ranks())] == cov.domain.dims


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_radical_factors_reachable_in_ext_quiver(alg):
    eq = ext_quiver(alg)
    for v in alg.vertices:
        reach, frontier = set(), [v]
        while frontier:
            u = frontier.pop()
            for x in eq.outgoing(u):
                if x.target not in reach:
                    reach.add(x.target)
                    frontier.append(x.target)
        p = projective(alg, v)
        rad_dims = [len(sp) for sp in radical_spaces(p)]
        for w, d in zip(alg.vertices, rad_dims):
            if d:
                assert w in reach
