"""Exact linear algebra over the rationals.

Matrices are plain lists of rows; vectors are plain lists. Entries are ints
or :class:`fractions.Fraction`, never floats. Shapes are passed explicitly
wherever a matrix may have zero rows.

A :class:`Subspace` keeps a basis in "echelon" form: for every basis vector
``b_i`` there is a position ``pos_i`` with ``b_i[pos_j] == (i == j)``. That
makes coordinates and quotient projections a matter of indexing.
"""

from fractions import Fraction

ONE = Fraction(1)


def zeros(nrows, ncols):
    return [[0] * ncols for _ in range(nrows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b, inner, ncols):
    """Product of an ``m x inner`` and an ``inner x ncols`` matrix."""
    out = []
    for row in a:
        acc = [0] * ncols
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(ncols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return out


def sparse_columns(a, nrows, ncols):
    """Nonzero ``(row, value)`` pairs of each column, for repeated sparse products."""
    return [[(r, a[r][c]) for r in range(nrows) if a[r][c]] for c in range(ncols)]


def sparse_matvec(cols, v, nrows):
    out = [0] * nrows
    for c, x in enumerate(v):
        if x:
            for r, y in cols[c]:
                out[r] += x * y
    return out


def transpose(a, nrows, ncols):
    return [[a[i][j] for i in range(nrows)] for j in range(ncols)]


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def rref(rows, ncols):
    """Reduced row echelon form. Returns ``(nonzero rows, pivot columns)``."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = ONE / prow[c]
        if inv != 1:
            prow = [x * inv for x in prow]
            m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(a, ncols):
    """Basis of ``{x : a x = 0}`` as a :class:`Subspace` of ``Q^ncols``."""
    red, pivots = rref(a, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return Subspace(ncols, basis, free)


def solve(a, b, nrows, ncols):
    """One solution ``x`` of ``a x = b`` (free variables zero), or ``None``."""
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [0] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse(a, n):
    aug = [list(a[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    red, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def determinant(a, n):
    m = [list(r) for r in a]
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = ONE / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


class Subspace:
    """Subspace of ``Q^dim`` with an echelon-positioned basis."""

    __slots__ = ("dim", "basis", "positions")

    def __init__(self, dim, basis, positions):
        self.dim = dim
        self.basis = basis
        self.positions = positions

    @classmethod
    def span(cls, dim, vectors):
        red, pivots = rref(vectors, dim)
        return cls(dim, red, pivots)

    @classmethod
    def whole(cls, dim):
        return cls(dim, identity(dim), list(range(dim)))

    @classmethod
    def zero(cls, dim):
        return cls(dim, [], [])

    def __len__(self):
        return len(self.basis)

    def coords(self, v):
        """Coordinates of ``v`` (assumed to lie in the subspace)."""
        return [v[p] for p in self.positions]

    def reduce(self, v):
        """``v`` minus its component along the basis at the echelon positions."""
        r = list(v)
        for b, p in zip(self.basis, self.positions):
            f = r[p]
            if f != 0:
                for j in range(self.dim):
                    if b[j]:
                        r[j] -= f * b[j]
        return r

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))

    def complement_positions(self):
        taken = set(self.positions)
        return [i for i in range(self.dim) if i not in taken]

    def quotient_coords(self, v):
        """Coordinates of the class of ``v`` in ``Q^dim / self``.

        The quotient basis is the classes of the standard vectors at
        :meth:`complement_positions`.
        """
        r = self.reduce(v)
        return [r[i] for i in self.complement_positions()]

    def contains_subspace(self, other):
        return all(self.contains(b) for b in other.basis)

    def intersect(self, other):
        """Intersection, computed from the kernel of ``[B_self | -B_other]``."""
        k1, k2 = len(self.basis), len(other.basis)
        if k1 == 0 or k2 == 0:
            return Subspace.zero(self.dim)
        rows = [[self.basis[i][r] for i in range(k1)] + [-other.basis[j][r] for j in range(k2)]
                for r in range(self.dim)]
        ker = nullspace(rows, k1 + k2)
        vecs = []
        for x in ker.basis:
            v = [0] * self.dim
            for i in range(k1):
                if x[i]:
                    for r in range(self.dim):
                        v[r] += x[i] * self.basis[i][r]
            vecs.append(v)
        return Subspace.span(self.dim, vecs)

    def __add__(self, other):
        return Subspace.span(self.dim, self.basis + other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.dim == other.dim
                and len(self) == len(other) and self.contains_subspace(other))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rank={len(self.basis)})"
