"""Rational polyhedral cones and fans.

A cone lives in N = Z^n; its dual lives in M = Hom(N, Z).  The affine
chart U_sigma is Spec of the semigroup algebra of the dual of sigma.
"""
__all__ = [
    'ZeroVector', 'NotPointed', 'NonSimplicial', 'InvalidFan',
    'Cone', 'Fan', 'FanReport', 'cone_from_inequalities', 'make_cone',
    'dual_cone', 'validate_fan', 'sigma_n_fan']

import itertools
import logging
from functools import reduce
from math import gcd

from jhsiao.toric.lattice import (
    IntMatrix, DimensionMismatch, dot, primitive, rank, smith_normal_form,
    hermite_normal_form, kernel_basis)

logger = logging.getLogger(__name__)


class ZeroVector(ValueError):
    pass

class NotPointed(ValueError):
    pass

class NonSimplicial(ValueError):
    pass

class InvalidFan(ValueError):
    pass


def _combine(a, u, b, v):
    return primitive([a*x + b*y for x, y in zip(u, v)])

def _reduce_mod(vec, echelon):
    """Clear vec on the pivot columns of an echelon basis."""
    for row in echelon:
        c = next(i for i, x in enumerate(row) if x)
        if vec[c]:
            vec = _combine(row[c], vec, -vec[c], row)
    return vec

def _span_basis(vectors, dim):
    """HNF basis of the saturated lattice R<vectors> cap Z^dim."""
    if not vectors:
        return IntMatrix([], dim)
    return kernel_basis(kernel_basis(IntMatrix(vectors, dim)))

def cone_from_inequalities(inequalities, dim):
    """Generators of {x in Q^dim : <a, x> >= 0 for every a}.

    Double description: the inequalities are added one at a time and
    the generators updated, keeping only extreme rays (rank test on the
    tight inequalities).  Returns (rays, lineality): sorted primitive
    extreme rays, taken modulo the lineality space, and an HNF basis of
    the lineality space.
    """
    ineqs = []
    for a in inequalities:
        a = tuple(a)
        if len(a) != dim:
            raise DimensionMismatch(
                'inequality {} in dimension {}'.format(a, dim))
        if any(a):
            ineqs.append(a)
    lineality = [tuple(row) for row in IntMatrix.identity(dim)]
    rays = []
    seen = []
    for a in ineqs:
        seen.append(a)
        vals = [dot(a, l) for l in lineality]
        k = next((i for i, x in enumerate(vals) if x), None)
        if k is not None:
            l0 = lineality.pop(k)
            c0 = vals.pop(k)
            if c0 < 0:
                l0 = tuple(-x for x in l0)
                c0 = -c0
            lineality = [
                _combine(c0, l, -x, l0) for l, x in zip(lineality, vals)]
            rays = [_combine(c0, r, -dot(a, r), l0) for r in rays]
            rays.append(primitive(l0))
        else:
            pos = [r for r in rays if dot(a, r) > 0]
            neg = [r for r in rays if dot(a, r) < 0]
            rays = [r for r in rays if dot(a, r) >= 0]
            for p in pos:
                ap = dot(a, p)
                for q in neg:
                    rays.append(_combine(ap, q, -dot(a, q), p))
        lineality = [l for l in lineality if any(l)]
        echelon = hermite_normal_form(IntMatrix(lineality, dim))
        target = dim - echelon.rows - 1
        kept = set()
        for r in rays:
            r = _reduce_mod(r, echelon)
            if not any(r) or r in kept:
                continue
            tight = [b for b in seen if dot(b, r) == 0]
            if rank(IntMatrix(tight, dim)) == target:
                kept.add(r)
        rays = list(kept)
    return sorted(rays), _span_basis(lineality, dim)


class Cone(object):
    """Strongly convex rational polyhedral cone.

    Rays are primitive, sorted lexicographically and form the minimal
    generating set, so equal cones compare equal.
    """
    def __init__(self, vectors):
        """Initialize Cone.

        vectors: nonempty iterable of nonzero integer vectors of equal
            length.  They are primitivized, deduplicated and reduced to
            the extreme rays.
        """
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            raise ValueError('a cone needs at least one generator')
        dim = len(vectors[0])
        if any(len(v) != dim for v in vectors):
            raise DimensionMismatch('generators of different lengths')
        for v in vectors:
            if not any(v):
                raise ZeroVector('zero generator in {}'.format(vectors))
        gens = sorted(set(primitive(v) for v in vectors))
        self.rank = dim
        self._dual = None
        if rank(IntMatrix(gens, dim)) == len(gens):
            self.rays = tuple(gens)
            return
        dual = self._dual_of(gens)
        rays, lineality = cone_from_inequalities(dual, dim)
        if lineality.rows:
            raise NotPointed('{} contains a line'.format(vectors))
        self.rays = tuple(rays)
        self._dual = dual

    def _dual_of(self, gens):
        rays, lineality = cone_from_inequalities(gens, self.rank)
        dual = list(rays)
        for l in lineality:
            dual.append(tuple(l))
            dual.append(tuple(-x for x in l))
        return dual

    def dual(self):
        """Generators of the dual cone in M.

        Extreme rays first (sorted), then +/- an HNF basis of the
        orthogonal complement when the cone is not full dimensional.
        """
        if self._dual is None:
            self._dual = self._dual_of(self.rays)
        return list(self._dual)

    def dim(self):
        return rank(self.ray_matrix())

    def ray_matrix(self):
        return IntMatrix(self.rays, self.rank)

    def contains(self, v):
        if len(v) != self.rank:
            raise DimensionMismatch(
                'vector of length {} for a cone in rank {}'.format(
                    len(v), self.rank))
        return all(dot(u, v) >= 0 for u in self.dual())

    def face_rays(self, subset):
        """Rays of the smallest face containing the given rays."""
        dual = self.dual()
        u = [0]*self.rank
        for g in dual:
            if all(dot(g, r) == 0 for r in subset):
                u = [a + b for a, b in zip(u, g)]
        return frozenset(r for r in self.rays if dot(u, r) == 0)

    def is_face(self, subset):
        """Whether the given rays span a face of this cone."""
        subset = frozenset(tuple(r) for r in subset)
        return subset <= set(self.rays) and self.face_rays(subset) == subset

    def faces(self):
        """All nonempty faces, the cone itself included.

        Intersections of facets, ordered by ray count then rays.
        """
        top = frozenset(self.rays)
        facets = set()
        for g in self.dual():
            f = frozenset(r for r in self.rays if dot(g, r) == 0)
            if f != top:
                facets.add(f)
        found = set([top])
        frontier = set(facets)
        while frontier:
            found.update(frontier)
            frontier = set(
                a & b for a in frontier for b in facets) - found
        found.discard(frozenset())
        return [
            Cone(f) for f in sorted(found, key=lambda f: (len(f), sorted(f)))]

    def is_simplicial(self):
        return self.dim() == len(self.rays)

    def multiplicity(self):
        """Index of the lattice spanned by the rays in its saturation.

        The gcd of the maximal minors of the ray matrix.
        """
        if not self.is_simplicial():
            raise NonSimplicial('{} is not simplicial'.format(self))
        U, S, V = smith_normal_form(self.ray_matrix())
        return reduce(lambda a, b: a*b, S.diagonal(), 1)

    def is_smooth(self):
        return self.is_simplicial() and self.multiplicity() == 1

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.rays == other.rays

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.rays)

    def __repr__(self):
        return 'Cone({})'.format(list(self.rays))


def make_cone(vectors):
    """Cone generated by vectors; see Cone."""
    return Cone(vectors)

def dual_cone(c):
    return c.dual()


class Fan(object):
    """Fan given by a ray list and its maximal cones.

    Ray order is kept as given: it indexes the invariant prime divisors.
    Cones are stored as sorted ray-index tuples, in the given order.
    The constructor only checks shape; validate_fan checks geometry.
    """
    def __init__(self, rays, cones):
        """Initialize Fan.

        rays: list of primitive integer vectors, all of the same length.
        cones: list of ray-index lists, the maximal cones.
        """
        rays = [tuple(r) for r in rays]
        if not rays:
            raise InvalidFan('a fan needs at least one ray')
        self.rank = len(rays[0])
        for i, r in enumerate(rays):
            if len(r) != self.rank:
                raise InvalidFan('ray {} has length {}, expected {}'.format(
                    i, len(r), self.rank))
            if not any(r):
                raise InvalidFan('ray {} is zero'.format(i))
            if reduce(gcd, r, 0) != 1:
                raise InvalidFan('ray {} = {} is not primitive'.format(i, r))
        if len(set(rays)) != len(rays):
            raise InvalidFan('duplicate rays in {}'.format(rays))
        cones = [tuple(sorted(set(c))) for c in cones]
        for i, c in enumerate(cones):
            if not c:
                raise InvalidFan('cone {} is empty'.format(i))
            for j in c:
                if not 0 <= j < len(rays):
                    raise InvalidFan(
                        'cone {} uses ray index {} out of range'.format(i, j))
        unused = set(range(len(rays))).difference(*cones)
        if unused:
            raise InvalidFan('rays {} are not used by any cone'.format(
                sorted(unused)))
        self.rays = tuple(rays)
        self.cones = tuple(cones)
        self._cones = {}

    @property
    def nrays(self):
        return len(self.rays)

    @property
    def ncones(self):
        return len(self.cones)

    def cone_rays(self, i):
        """Ray vectors of maximal cone i, in fan ray order."""
        if not 0 <= i < len(self.cones):
            raise IndexError('no cone {} in a fan with {} cones'.format(
                i, len(self.cones)))
        return [self.rays[j] for j in self.cones[i]]

    def cone_matrix(self, i):
        return IntMatrix(self.cone_rays(i), self.rank)

    def ray_matrix(self):
        return IntMatrix(self.rays, self.rank)

    def cone(self, i):
        try:
            return self._cones[i]
        except KeyError:
            c = self._cones[i] = Cone(self.cone_rays(i))
            return c

    def faces(self):
        """Every cone of the fan as a sorted ray-index tuple.

        Faces shared by several maximal cones appear once; ordered by
        size then indices.
        """
        index = {r: j for j, r in enumerate(self.rays)}
        found = set()
        for i in range(self.ncones):
            for f in self.cone(i).faces():
                found.add(tuple(sorted(index[r] for r in f.rays)))
        return sorted(found, key=lambda f: (len(f), f))

    def singular_cones(self):
        return [i for i in range(self.ncones) if not self.cone(i).is_smooth()]

    def is_smooth(self):
        return not self.singular_cones()

    def containing_cones(self, v):
        return [i for i in range(self.ncones) if self.cone(i).contains(v)]

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return (self.rays, self.cones) == (other.rays, other.cones)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.rays, self.cones))

    def __repr__(self):
        return 'Fan({}, {})'.format(
            [list(r) for r in self.rays], [list(c) for c in self.cones])


class FanReport(object):
    """Outcome of validate_fan: truthy iff there are no violations."""
    def __init__(self, violations):
        self.violations = list(violations)

    def __bool__(self):
        return not self.violations
    __nonzero__ = __bool__

    def __str__(self):
        if not self.violations:
            return 'valid'
        return '\n'.join(
            'cones {}: {}'.format(','.join(map(str, idx)), msg)
            for idx, msg in self.violations)

    def __repr__(self):
        return 'FanReport({!r})'.format(self.violations)


def _meets_in_face(a, b, rank):
    inter, _ = cone_from_inequalities(a.dual() + b.dual(), rank)
    common = frozenset(inter)
    return a.is_face(common) and b.is_face(common)

def validate_fan(f):
    """Check every cone is pointed and minimal and every pair meets in a face."""
    violations = []
    cones = {}
    for i in range(f.ncones):
        try:
            c = f.cone(i)
        except NotPointed:
            violations.append(((i,), 'cone is not strongly convex'))
            continue
        if len(c.rays) != len(f.cones[i]):
            violations.append(((i,), 'cone lists redundant rays'))
        cones[i] = c
    for i, j in itertools.combinations(sorted(cones), 2):
        logger.debug('checking cones %d and %d', i, j)
        if not _meets_in_face(cones[i], cones[j], f.rank):
            violations.append(((i, j), 'intersection is not a common face'))
    return FanReport(violations)


def sigma_n_fan(n):
    """Star subdivision of the positive orthant at v = 2e_1 + e_2 + ... + e_n.

    Rays e_1, ..., e_n, v; maximal cones <e_1, ..., ^e_i, ..., e_n, v>.
    Only the cone omitting e_1 is singular.
    """
    if n < 2:
        raise ValueError('sigma_n_fan needs n >= 2, got {}'.format(n))
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append((2,) + (1,)*(n-1))
    cones = [[j for j in range(n) if j != i] + [n] for i in range(n)]
    return Fan(rays, cones)
