"""Grothendieck group computations and the tau-map decision procedure.

Classes in ``K0`` are integer vectors over the simples (in algebra vertex
order); endomorphisms are integer matrices acting on columns, stored as
tuples of rows.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .algebra import MonomialAlgebra
from .artranslation import tau, tau_inverse
from .nakayama import KupischSeries, NakayamaIndec, kupisch_series, nakayama_dim_vector
from .representation import ext_quiver, is_projective, simple

EXISTS, NOT_EXISTS, UNDECIDED = "exists", "not_exists", "undecided"


class TauMapError(ValueError):
    pass


class PreconditionError(TauMapError):
    pass


class InconsistencyError(TauMapError):
    """A computed matrix contradicts what the theory guarantees on this instance."""


def dim_vector(m):
    return tuple(m.dims)


def as_k0map(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def apply(phi, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in phi)


def int_matmul(a, b):
    n, inner, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(m))
                 for i in range(n))


def int_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# -- Coxeter matrix --------------------------------------------------------------

@dataclass
class CoxeterResult:
    matrix: Optional[list]  # rows of Fractions; None when the Cartan matrix is singular
    integral: bool
    singular: bool = False

    def as_k0map(self):
        if self.matrix is None or not self.integral:
            return None
        return as_k0map(self.matrix)


def coxeter_matrix(a: MonomialAlgebra, sign="plus") -> CoxeterResult:
    """``C^T C^-1`` for ``sign='plus'``, its negative for ``sign='minus'``."""
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', not {sign!r}")
    n = a.n
    c = a.cartan_matrix()
    cinv = linalg.inverse(c, n)
    if cinv is None:
        return CoxeterResult(None, False, True)
    phi = linalg.matmul(linalg.transpose(c, n, n), cinv, n, n)
    if sign == "minus":
        phi = [[-x for x in row] for row in phi]
    phi = [[Fraction(x) for x in row] for row in phi]
    integral = all(x.denominator == 1 for row in phi for x in row)
    return CoxeterResult(phi, integral)


# -- permutation matrices ------------------------------------------------------------

@dataclass
class PermutationVerdict:
    is_permutation: bool
    permutation: Optional[tuple] = None  # M e_j = e_{permutation[j]}
    failure: Optional[str] = None


def permutation_check(m, m2) -> PermutationVerdict:
    """For non-negative ``m``, ``m2`` with ``m m2 = 1``, certify both are permutation matrices."""
    n = len(m)
    for name, mat in (("first", m), ("second", m2)):
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if x < 0:
                    return PermutationVerdict(False, failure=f"negative entry {x} at ({i}, {j}) of the {name} matrix")
    prod = int_matmul(m, m2)
    for i in range(n):
        for j in range(n):
            want = 1 if i == j else 0
            if prod[i][j] != want:
                return PermutationVerdict(False, failure=f"product entry ({i}, {j}) is {prod[i][j]}, expected {want}")
    perm = []
    for mat in (m, m2):
        cols = []
        for j in range(n):
            col = [mat[i][j] for i in range(n)]
            if sorted(col) != [0] * (n - 1) + [1]:
                raise InconsistencyError(f"column {j} is not a standard basis vector despite m m' = 1")
            cols.append(col.index(1))
        if sorted(cols) != list(range(n)):
            raise InconsistencyError("columns do not form a permutation")
        perm.append(tuple(cols))
    return PermutationVerdict(True, permutation=perm[0])


# -- explicit Nakayama tau-map ---------------------------------------------------------

def build_nakayama_tau_map(k: KupischSeries, x=None):
    """Matrix whose column ``i`` is ``[tau S_i]``, or ``x[i]`` when ``S_i`` is projective.

    ``x`` maps each projective simple (``c_i = 1``) to a class; ``None`` means
    the zero class for all of them.
    """
    n = len(k.vertices)
    proj_simples = {v for v, c in zip(k.walk, k.lengths) if c == 1}
    if x is None:
        x = {v: (0,) * n for v in proj_simples}
    extra = set(x) - proj_simples
    if extra:
        raise TauMapError(f"assignment given for non-projective simples {sorted(extra, key=str)}")
    missing = proj_simples - set(x)
    if missing:
        raise TauMapError(f"no assignment for projective simples {sorted(missing, key=str)}")
    cols = []
    for v in k.vertices:
        if v in proj_simples:
            cols.append(tuple(x[v]))
        else:
            cols.append(nakayama_dim_vector(k, NakayamaIndec(k.successor(v), 1)))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


# -- integer feasibility ------------------------------------------------------------------

def hermite_column_form(a, nrows, ncols):
    """Column-style Hermite normal form ``a U = H`` with ``U`` unimodular.

    Returns ``(H, U, pivots)`` where ``pivots[j]`` is the row of the leading
    (positive) entry of column ``j`` for the first ``len(pivots)`` columns;
    the remaining columns of ``H`` are zero.
    """
    h = [list(r) for r in a]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(dst, src, f):  # col[dst] += f * col[src]
        for r in h:
            r[dst] += f * r[src]
        for r in u:
            r[dst] += f * r[src]

    def swap(c1, c2):
        for r in h:
            r[c1], r[c2] = r[c2], r[c1]
        for r in u:
            r[c1], r[c2] = r[c2], r[c1]

    def negate(c):
        for r in h:
            r[c] = -r[c]
        for r in u:
            r[c] = -r[c]

    pivots = []
    k = 0
    for i in range(nrows):
        if k == ncols:
            break
        while True:
            nz = [c for c in range(k, ncols) if h[i][c] != 0]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(h[i][c]))
            if c0 != k:
                swap(k, c0)
            done = True
            for c in range(k + 1, ncols):
                if h[i][c] != 0:
                    colop(c, k, -(h[i][c] // h[i][k]))
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if h[i][k] == 0:
            continue
        if h[i][k] < 0:
            negate(k)
        for c in range(k):
            colop(c, k, -(h[i][c] // h[i][k]))
        pivots.append(i)
        k += 1
    return h, u, pivots


def solve_integer(a, b, nrows, ncols):
    """An integer solution of ``a x = b`` (free parameters zero), or ``None``."""
    h, u, pivots = hermite_column_form(a, nrows, ncols)
    y = [0] * ncols
    for j, p in enumerate(pivots):
        s = b[p] - sum(h[p][i] * y[i] for i in range(j))
        if s % h[p][j] != 0:
            return None
        y[j] = s // h[p][j]
    for r in range(nrows):
        if sum(h[r][i] * y[i] for i in range(len(pivots))) != b[r]:
            return None
    return [sum(u[i][j] * y[j] for j in range(ncols)) for i in range(ncols)]


def tau_map_feasible(constraints, n=None):
    """Integer matrix ``X`` with ``X d = t`` for every ``(d, t)``, or ``None``."""
    constraints = [(tuple(d), tuple(t)) for d, t in constraints]
    if n is None:
        if not constraints:
            raise ValueError("n is required when there are no constraints")
        n = len(constraints[0][0])
    a = [list(d) for d, _ in constraints]
    rows = []
    for r in range(n):
        x = solve_integer(a, [t[r] for _, t in constraints], len(a), n)
        if x is None:
            return None
        rows.append(tuple(x))
    return tuple(rows)


# -- decision procedure ---------------------------------------------------------------------

@dataclass
class TauMapVerdict:
    status: str
    witness: Optional[tuple] = None
    reason: list = field(default_factory=list)  # one dict per component


def _coxeter_witness(comp):
    """Coxeter matrix with the sign that reproduces ``tau`` on the non-projective simples."""
    n = comp.n
    targets = {}
    for j, v in enumerate(comp.vertices):
        s = simple(comp, v)
        if not is_projective(s):
            targets[j] = dim_vector(tau(s))
    for sign in ("minus", "plus"):
        cox = coxeter_matrix(comp, sign)
        phi = cox.as_k0map()
        if phi is None:
            continue
        if all(tuple(phi[i][j] for i in range(n)) == t for j, t in targets.items()):
            return phi, sign
    return None, None


def decide_tau_map(a: MonomialAlgebra) -> TauMapVerdict:
    """Decide whether ``a`` has a tau-map, component by component.

    Non-acyclic components have one iff they are Nakayama. Acyclic
    components without relations use the Coxeter matrix; acyclic Nakayama
    components with relations use the explicit Nakayama map; every other
    acyclic component is left undecided.
    """
    n = a.n
    witness = [[0] * n for _ in range(n)]
    reasons, statuses = [], []
    for comp in a.components():
        info = {"vertices": list(comp.vertices)}
        phi = None
        if not comp.quiver.is_acyclic():
            if comp.is_nakayama():
                phi = build_nakayama_tau_map(kupisch_series(comp))
                info.update(status=EXISTS, branch="non-acyclic Nakayama: explicit map")
            else:
                info.update(status=NOT_EXISTS, branch="non-acyclic and not Nakayama")
        elif not comp.relations:
            phi, sign = _coxeter_witness(comp)
            if phi is None:
                raise InconsistencyError("no Coxeter sign reproduces tau on simples of a hereditary algebra")
            info.update(status=EXISTS, branch=f"hereditary: Coxeter matrix, sign {sign}")
        elif comp.is_nakayama():
            phi = build_nakayama_tau_map(kupisch_series(comp))
            info.update(status=EXISTS, branch="acyclic Nakayama: explicit map")
        else:
            info.update(status=UNDECIDED, branch="acyclic with relations, not Nakayama")
        if phi is not None:
            idx = [a.quiver.vindex[v] for v in comp.vertices]
            for i, gi in enumerate(idx):
                for j, gj in enumerate(idx):
                    witness[gi][gj] = phi[i][j]
        statuses.append(info["status"])
        reasons.append(info)
    if NOT_EXISTS in statuses:
        return TauMapVerdict(NOT_EXISTS, None, reasons)
    if UNDECIDED in statuses:
        return TauMapVerdict(UNDECIDED, None, reasons)
    return TauMapVerdict(EXISTS, as_k0map(witness), reasons)


def invert_to_tau_inverse_map(phi, a: MonomialAlgebra):
    """The matrix with columns ``[tau^-1 S_i]``, checked to be a two-sided inverse of ``phi``."""
    sources, _ = ext_quiver(a).sources_and_sinks()
    if sources:
        raise PreconditionError(f"injective simple modules at {sorted(sources, key=str)}")
    n = a.n
    cols = [dim_vector(tau_inverse(simple(a, v))) for v in a.vertices]
    inv = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    eye = int_identity(n)
    if int_matmul(phi, inv) != eye or int_matmul(inv, phi) != eye:
        raise InconsistencyError("the tau^-1 classes of simples do not invert the tau-map")
    return inv
