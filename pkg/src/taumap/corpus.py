"""Test corpora: exhaustive Nakayama families, seeded random monomial
algebras and a few hand-built quivers."""

import itertools
import random

from .algebra import InfiniteDimensionalError, MonomialAlgebra
from .nakayama import nakayama_algebra
from .quiver import Quiver


def cyclic_kupisch_series(max_n=5, max_c=6):
    """Every admissible cyclic series with ``n <= max_n`` and ``2 <= c_i <= max_c``."""
    out = []
    for n in range(1, max_n + 1):
        for c in itertools.product(range(2, max_c + 1), repeat=n):
            if all(c[(k + 1) % n] >= c[k] - 1 for k in range(n)):
                out.append(c)
    return out


def linear_kupisch_series(max_n=5, max_c=5):
    """Every admissible linear series with ``n <= max_n`` and ``c_i <= max_c``."""
    out = []
    for n in range(1, max_n + 1):
        ranges = [range(2, min(max_c, n - k) + 1) for k in range(n - 1)] + [range(1, 2)]
        for c in itertools.product(*ranges):
            if all(c[k + 1] >= c[k] - 1 for k in range(n - 1)):
                out.append(c)
    return out


def nakayama_corpus(max_n=5, max_c_cyclic=6, max_c_linear=5):
    algs = [nakayama_algebra(c, True, name=f"cyclic{c}") for c in cyclic_kupisch_series(max_n, max_c_cyclic)]
    algs += [nakayama_algebra(c, False, name=f"linear{c}") for c in linear_kupisch_series(max_n, max_c_linear)]
    return algs


def _try_random(rng, n, k, max_relations):
    verts = list(range(1, n + 1))
    q = Quiver(verts, [(f"x{j}", rng.choice(verts), rng.choice(verts)) for j in range(k)])
    rels = set()
    for _ in range(rng.randint(0, max_relations) if k else 0):
        word = [rng.choice(q.arrows).id]
        for _ in range(rng.randint(1, 2)):
            out = q.outgoing(q.arrow(word[-1]).target)
            if not out:
                break
            word.append(rng.choice(out).id)
        if len(word) >= 2:
            rels.add(tuple(word))
    try:
        return MonomialAlgebra(q, sorted(rels))
    except InfiniteDimensionalError:
        return None


def random_monomial_algebra(rng, max_n=4, max_arrows=6, max_relations=4, max_dim=40):
    """One admissible finite-dimensional monomial algebra.

    The arrow count is drawn first so that rejection of infinite-dimensional
    candidates does not bias the sample toward sparse quivers.
    """
    n = rng.randint(1, max_n)
    k = rng.randint(0, max_arrows)
    while True:
        for _ in range(300):
            alg = _try_random(rng, n, k, max_relations)
            if alg is not None and alg.dim <= max_dim:
                return alg
        k -= 1


def random_corpus(count=120, seed=20240607):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        a = random_monomial_algebra(rng)
        a.name = f"random{k}"
        out.append(a)
    return out


def star_quiver():
    """``a: 2 -> 1``, ``b: 3 -> 1``."""
    return MonomialAlgebra(Quiver([1, 2, 3], [("a", 2, 1), ("b", 3, 1)]), name="star")


def two_cycle():
    return MonomialAlgebra(Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)]), [("a", "b")], name="two-cycle")


def cycle_with_source(m):
    """Oriented ``m``-cycle on ``1..m`` plus ``c: m+1 -> 1``, every path of length 2 killed."""
    verts = list(range(1, m + 2))
    arrows = [(f"a{k}", k, k % m + 1) for k in range(1, m + 1)] + [("c", m + 1, 1)]
    q = Quiver(verts, arrows)
    rels = [(x.id, y.id) for x in q.arrows for y in q.outgoing(x.target)]
    return MonomialAlgebra(q, rels, name=f"cycle{m}-with-source")


def hereditary_corpus():
    """``A2`` and every orientation of ``A3`` (vertices ``1 - 2 - 3``)."""
    out = [MonomialAlgebra(Quiver([1, 2], [("a", 1, 2)]), name="A2")]
    for o1, o2 in itertools.product((0, 1), repeat=2):
        a = ("a", 1, 2) if o1 == 0 else ("a", 2, 1)
        b = ("b", 2, 3) if o2 == 0 else ("b", 3, 2)
        out.append(MonomialAlgebra(Quiver([1, 2, 3], [a, b]), name=f"A3-{o1}{o2}"))
    return out


def small_corpus():
    """Hand-built algebras plus the random corpus."""
    return ([two_cycle(), star_quiver()] + [cycle_with_source(m) for m in range(1, 5)]
            + hereditary_corpus() + random_corpus())
