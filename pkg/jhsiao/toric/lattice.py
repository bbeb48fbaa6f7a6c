"""Exact integer lattice algebra.

Matrices are immutable tuples of python ints, so there is no overflow
and no floating point.  Smith and Hermite normal forms carry their
unimodular transforms.  Rational solving goes through sympy.
"""
__all__ = [
    'DimensionMismatch', 'IncompatibleCodomain',
    'IntMatrix', 'SmithForm', 'FgAbelianGroup', 'Presentation', 'GroupHom',
    'dot', 'primitive', 'rank', 'smith_normal_form', 'smith_decomposition',
    'hermite_normal_form', 'kernel_basis', 'cokernel', 'solve_integer',
    'solve_rational', 'in_span', 'lattice_quotient', 'hom_image',
    'is_surjective', 'images_equal']

import operator
from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd

import sympy


class DimensionMismatch(ValueError):
    pass

class IncompatibleCodomain(ValueError):
    pass


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(
            'cannot pair vectors of length {} and {}'.format(len(u), len(v)))
    return sum(a*b for a, b in zip(u, v))

def primitive(v):
    """Divide v by the gcd of its entries.  Zero vectors are returned as is."""
    g = reduce(gcd, v, 0)
    if g in (0, 1):
        return tuple(v)
    return tuple(x // g for x in v)


class IntMatrix(object):
    """Immutable integer matrix.

    Entries must support __index__ (python ints, sympy Integers...),
    floats and fractions are rejected.
    """
    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, data=(), cols=None):
        """Initialize IntMatrix.

        data: iterable of rows, each an iterable of integers.
        cols: column count.  Required when data has no rows,
            otherwise checked against every row.
        """
        data = tuple(tuple(operator.index(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise DimensionMismatch('column count needed for an empty matrix')
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch(
                    'ragged rows: expected {} columns, got {}'.format(
                        cols, len(row)))
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0]*cols for _ in range(rows)], cols)

    @classmethod
    def from_columns(cls, columns, rows):
        """Build from a sequence of column vectors of length rows."""
        columns = [tuple(c) for c in columns]
        return cls(
            [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def hstack(cls, *mats):
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise DimensionMismatch('hstack needs equal row counts')
        return cls(
            [sum((m._data[i] for m in mats), ()) for i in range(rows)],
            sum(m.cols for m in mats))

    @classmethod
    def vstack(cls, *mats):
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise DimensionMismatch('vstack needs equal column counts')
        return cls(sum((m._data for m in mats), ()), cols)

    @classmethod
    def block_diagonal(cls, mats):
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        data = []
        offset = 0
        for m in mats:
            for row in m._data:
                data.append(
                    (0,)*offset + row + (0,)*(cols - offset - m.cols))
            offset += m.cols
        return cls(data, cols)

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def T(self):
        return IntMatrix([self.col(j) for j in range(self.cols)], self.rows)

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(row[j] for row in self._data)

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def take(self, rows=None, cols=None):
        """Submatrix on the given row/column indices (all if None)."""
        rows = range(self.rows) if rows is None else rows
        if cols is None:
            return IntMatrix([self._data[i] for i in rows], self.cols)
        cols = list(cols)
        return IntMatrix(
            [[self._data[i][j] for j in cols] for i in rows], len(cols))

    def tolist(self):
        return [list(row) for row in self._data]

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatch(
                '{}x{} matrix applied to vector of length {}'.format(
                    self.rows, self.cols, len(vec)))
        return tuple(sum(a*b for a, b in zip(row, vec)) for row in self._data)

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                'cannot multiply {}x{} by {}x{}'.format(
                    self.rows, self.cols, other.rows, other.cols))
        ocols = other.columns()
        return IntMatrix(
            [[sum(a*b for a, b in zip(row, c)) for c in ocols]
                for row in self._data],
            other.cols)

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self._data], self.cols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return self.rows

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        return 'IntMatrix({!r}, cols={})'.format(self.tolist(), self.cols)

    def to_sympy(self):
        return sympy.Matrix(self.rows, self.cols, lambda i, j: self._data[i][j])

    def determinant(self):
        if self.rows != self.cols:
            raise DimensionMismatch('determinant of a non-square matrix')
        if not self.rows:
            return 1
        return int(self.to_sympy().det())

    def is_diagonal(self):
        return all(
            x == 0 for i, row in enumerate(self._data)
            for j, x in enumerate(row) if i != j)

    def diagonal(self):
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))


def rank(A):
    """Rank over the rationals."""
    if not A.rows or not A.cols:
        return 0
    return int(A.to_sympy().rank())


SmithForm = namedtuple('SmithForm', 'U S V Uinv')


class _Reducer(object):
    """Mutable state for the Smith reduction.

    Keeps U @ A @ V == S and U @ Uinv == I.
    """
    def __init__(self, A):
        self.m, self.n = A.rows, A.cols
        self.S = A.tolist()
        self.U = IntMatrix.identity(self.m).tolist()
        self.Uinv = IntMatrix.identity(self.m).tolist()
        self.V = IntMatrix.identity(self.n).tolist()

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.S, self.U):
            M[i], M[j] = M[j], M[i]
        for row in self.Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.S, self.V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(self, dst, src, q):
        """row dst += q * row src"""
        for M in (self.S, self.U):
            M[dst] = [a + q*b for a, b in zip(M[dst], M[src])]
        for row in self.Uinv:
            row[src] -= q*row[dst]

    def add_col(self, dst, src, q):
        """col dst += q * col src"""
        for M in (self.S, self.V):
            for row in M:
                row[dst] += q*row[src]

    def negate_row(self, i):
        for M in (self.S, self.U):
            M[i] = [-x for x in M[i]]
        for row in self.Uinv:
            row[i] = -row[i]

    def pivot(self, t):
        """Smallest nonzero |entry| in the trailing block, first by row then col."""
        best = None
        S = self.S
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = S[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    def run(self):
        S = self.S
        for t in range(min(self.m, self.n)):
            best = self.pivot(t)
            if best is None:
                break
            self.swap_rows(t, best[1])
            self.swap_cols(t, best[2])
            while True:
                p = S[t][t]
                for i in range(t+1, self.m):
                    q = S[i][t] // p
                    if q:
                        self.add_row(i, t, -q)
                for j in range(t+1, self.n):
                    q = S[t][j] // p
                    if q:
                        self.add_col(j, t, -q)
                rest = [
                    (abs(S[i][t]), 0, i) for i in range(t+1, self.m) if S[i][t]]
                rest.extend(
                    (abs(S[t][j]), 1, j) for j in range(t+1, self.n) if S[t][j])
                if rest:
                    _, kind, k = min(rest)
                    if kind:
                        self.swap_cols(t, k)
                    else:
                        self.swap_rows(t, k)
                    continue
                bad = next((
                    i for i in range(t+1, self.m)
                    for j in range(t+1, self.n) if S[i][j] % p), None)
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if S[t][t] < 0:
                self.negate_row(t)
        return SmithForm(
            IntMatrix(self.U, self.m), IntMatrix(S, self.n),
            IntMatrix(self.V, self.n), IntMatrix(self.Uinv, self.m))


def smith_decomposition(A):
    """Smith normal form with transforms and the inverse of U.

    Returns SmithForm(U, S, V, Uinv) with U*A*V == S, U and V unimodular,
    S diagonal with nonnegative entries d_1 | d_2 | ... followed by zeros.
    Pivots are chosen by smallest absolute value, ties by row then column.
    """
    return _Reducer(A).run()

def smith_normal_form(A):
    """Return (U, S, V) with U*A*V == S in Smith normal form."""
    U, S, V, _ = smith_decomposition(A)
    return U, S, V


def _invariants(S):
    return [d for d in S.diagonal() if d]


def hermite_normal_form(A):
    """Row-style Hermite normal form of the lattice spanned by A's rows.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero
    rows are dropped.  Two generator matrices span the same lattice iff
    their HNFs are equal.
    """
    H = [list(row) for row in A]
    m = len(H)
    r = 0
    for c in range(A.cols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[r], H[i] = H[i], H[r]
            clear = True
            for k in range(r+1, m):
                q = H[k][c] // H[r][c]
                if q:
                    H[k] = [a - q*b for a, b in zip(H[k], H[r])]
                if H[k][c]:
                    clear = False
            if clear:
                break
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
        p = H[r][c]
        for k in range(r):
            q = H[k][c] // p
            if q:
                H[k] = [a - q*b for a, b in zip(H[k], H[r])]
        r += 1
    return IntMatrix(H[:r], A.cols)


def kernel_basis(A):
    """HNF basis (as rows) of the integer kernel {x : A x = 0}."""
    U, S, V = smith_normal_form(A)
    r = len(_invariants(S))
    basis = [V.col(j) for j in range(r, A.cols)]
    return hermite_normal_form(IntMatrix(basis, A.cols))


class FgAbelianGroup(object):
    """Z^rank + Z/d_1 + ... + Z/d_t with d_1 | ... | d_t and every d_i >= 2."""
    __slots__ = ('rank', 'torsion')

    def __init__(self, rank=0, torsion=()):
        torsion = tuple(operator.index(d) for d in torsion)
        if rank < 0:
            raise ValueError('negative rank {}'.format(rank))
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(
                    'invariant factors {} do not form a divisibility chain'.format(
                        torsion))
        if any(d < 2 for d in torsion):
            raise ValueError('invariant factors must be >= 2: {}'.format(torsion))
        self.rank = rank
        self.torsion = torsion

    @classmethod
    def from_diagonal(cls, entries):
        """Group Z/e_1 + Z/e_2 + ..., with e_i == 0 meaning Z."""
        entries = list(entries)
        return cokernel(IntMatrix(
            [[e if i == j else 0 for j in range(len(entries))]
                for i, e in enumerate(entries)], len(entries)))

    def is_trivial(self):
        return not self.rank and not self.torsion

    def is_finite(self):
        return not self.rank

    def order(self):
        """Group order, None if infinite."""
        if self.rank:
            return None
        return reduce(operator.mul, self.torsion, 1)

    def exponent(self):
        """Least e with e*g == 0 for all g, None if infinite."""
        if self.rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def element_order(self, coords):
        """Order of an element in SNF coordinates (torsion then free)."""
        nt = len(self.torsion)
        if len(coords) != nt + self.rank:
            raise DimensionMismatch(
                '{} coordinates for group {}'.format(len(coords), self))
        if any(coords[nt:]):
            return None
        order = 1
        for c, d in zip(coords, self.torsion):
            k = d // gcd(c, d)
            order = order * k // gcd(order, k)
        return order

    def direct_sum(self, *others):
        entries = [0]*self.rank + list(self.torsion)
        for o in others:
            entries.extend([0]*o.rank)
            entries.extend(o.torsion)
        return FgAbelianGroup.from_diagonal(entries)

    def chain_bound(self):
        """1 + length of the longest strictly increasing subgroup chain.

        Only finite groups have such a bound; None otherwise.
        """
        if self.rank:
            return None
        return 1 + sum(
            sum(sympy.factorint(d).values()) for d in self.torsion)

    def __eq__(self, other):
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return (self.rank, self.torsion) == (other.rank, other.torsion)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __repr__(self):
        return 'FgAbelianGroup({}, {})'.format(self.rank, self.torsion)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append('Z')
        elif self.rank:
            parts.append('Z^{}'.format(self.rank))
        parts.extend('Z/{}'.format(d) for d in self.torsion)
        return ' + '.join(parts) if parts else '0'


def cokernel(A):
    """Z^rows / A Z^cols as an FgAbelianGroup."""
    U, S, V = smith_normal_form(A)
    inv = _invariants(S)
    return FgAbelianGroup(A.rows - len(inv), [d for d in inv if d > 1])


def solve_integer(A, b):
    """Some integer x with A x == b, or None.

    Back-substitution through the Smith form: free coordinates are 0.
    """
    if len(b) != A.rows:
        raise DimensionMismatch(
            'right-hand side of length {} for {} rows'.format(len(b), A.rows))
    U, S, V = smith_normal_form(A)
    c = U.apply(b)
    inv = _invariants(S)
    y = []
    for ci, d in zip(c, inv):
        if ci % d:
            return None
        y.append(ci // d)
    if any(c[len(inv):]):
        return None
    y.extend([0]*(A.cols - len(inv)))
    return V.apply(y)


def _to_fraction(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))

def solve_rational(A, b):
    """Some rational x with A x == b, or None.

    b may hold ints or Fractions.  Gauss-Jordan with leftmost pivots,
    free parameters set to 0, so the answer is deterministic.
    """
    if len(b) != A.rows:
        raise DimensionMismatch(
            'right-hand side of length {} for {} rows'.format(len(b), A.rows))
    if not A.cols:
        return () if not any(b) else None
    if not A.rows:
        return (Fraction(0),) * A.cols
    rhs = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, b)])
    try:
        sol, params = A.to_sympy().gauss_jordan_solve(rhs)
    except ValueError:
        return None
    sol = sol.xreplace({p: 0 for p in params})
    return tuple(_to_fraction(x) for x in sol)


def in_span(gens, vec):
    """Whether vec is an integer combination of the columns of gens."""
    if not gens.cols:
        return not any(vec)
    return solve_integer(gens, vec) is not None


def lattice_quotient(big, small, dim):
    """L1/L0 where L1, L0 are spanned by the vectors big, small in Z^dim.

    Requires L0 <= L1.
    """
    basis = hermite_normal_form(IntMatrix(big, dim))
    B = basis.T
    coords = []
    for v in small:
        x = solve_integer(B, v)
        if x is None:
            raise ValueError('{} is not in the ambient lattice'.format(v))
        coords.append(x)
    return cokernel(IntMatrix.from_columns(coords, basis.rows))


class Presentation(object):
    """Z^ngens / (column span of relations)."""
    def __init__(self, ngens, relations=None):
        """Initialize Presentation.

        ngens: number of generators.
        relations: IntMatrix with ngens rows whose columns are relations.
        """
        if relations is None:
            relations = IntMatrix.zeros(ngens, 0)
        if relations.rows != ngens:
            raise DimensionMismatch(
                'relations have {} rows for {} generators'.format(
                    relations.rows, ngens))
        self.ngens = ngens
        self.relations = relations
        self._smith = None
        self._canon = None

    @classmethod
    def direct_sum(cls, parts):
        parts = list(parts)
        return cls(
            sum(p.ngens for p in parts),
            IntMatrix.block_diagonal([p.relations for p in parts]))

    @property
    def smith(self):
        if self._smith is None:
            self._smith = smith_decomposition(self.relations)
        return self._smith

    def group(self):
        return cokernel(self.relations)

    def coordinates(self, vec):
        """Canonical coordinates of the class of vec.

        Torsion components reduced mod their invariant factors, followed
        by the free components.
        """
        U, S = self.smith.U, self.smith.S
        c = U.apply(vec)
        inv = _invariants(S)
        coords = [ci % d for ci, d in zip(c, inv) if d > 1]
        coords.extend(c[len(inv):])
        return tuple(coords)

    def is_zero(self, vec):
        return in_span(self.relations, vec)

    def relation_lattice(self):
        if self._canon is None:
            self._canon = hermite_normal_form(self.relations.T)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.ngens == other.ngens
            and self.relation_lattice() == other.relation_lattice())

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.ngens, self.relation_lattice()))

    def __repr__(self):
        return 'Presentation({}, {!r})'.format(self.ngens, self.relations)


class GroupHom(object):
    """Homomorphism between presented groups, acting on generators."""
    def __init__(self, domain, codomain, matrix):
        """Initialize GroupHom.

        domain, codomain: Presentation
        matrix: IntMatrix, codomain.ngens x domain.ngens.  Column j is
            the image of generator j.
        """
        if matrix.shape != (codomain.ngens, domain.ngens):
            raise DimensionMismatch(
                'matrix shape {} for a map from {} to {} generators'.format(
                    matrix.shape, domain.ngens, codomain.ngens))
        for rel in domain.relations.columns():
            if not codomain.is_zero(matrix.apply(rel)):
                raise ValueError(
                    'relation {} does not map into the codomain relations'.format(
                        rel))
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix

    def __call__(self, vec):
        return self.matrix.apply(vec)

    def _spanning(self):
        return IntMatrix.hstack(self.matrix, self.codomain.relations)

    def contains(self, vec):
        """Whether the class of vec lies in the image."""
        return in_span(self._spanning(), vec)

    def __repr__(self):
        return 'GroupHom({!r}, {!r}, {!r})'.format(
            self.domain, self.codomain, self.matrix)


def hom_image(h):
    """The image of h as an abstract group."""
    cod = h.codomain
    return lattice_quotient(
        h.matrix.columns() + cod.relations.columns(),
        cod.relations.columns(), cod.ngens)

def is_surjective(h):
    span = h._spanning()
    return all(
        in_span(span, e) for e in IntMatrix.identity(h.codomain.ngens))

def images_equal(h1, h2):
    """Whether h1 and h2 have the same image (mutual generator membership)."""
    if h1.codomain != h2.codomain:
        raise IncompatibleCodomain('homomorphisms have different codomains')
    return (
        all(h2.contains(c) for c in h1.matrix.columns())
        and all(h1.contains(c) for c in h2.matrix.columns()))
