"""Torus-invariant divisors and class groups.

Sign convention: div(chi^m) = sum_rho <m, v_rho> D_rho, and the Cartier
data of D = sum a_rho D_rho on a chart sigma is an m_sigma with
<m_sigma, v_rho> = -a_rho for every ray of sigma.
"""
__all__ = [
    'IncompatibleFans', 'InvariantDivisor', 'DivisorSubgroup',
    'WeilModCartier', 'principal_divisor', 'prime_divisor',
    'class_presentation', 'class_group', 'class_of', 'local_presentation',
    'local_class_group', 'local_class', 'is_cartier', 'is_qcartier',
    'cartier_data', 'cartier_index', 'weil_mod_cartier',
    'linearly_equivalent']

import logging
from fractions import Fraction
from math import gcd

from jhsiao.toric.lattice import (
    IntMatrix, Presentation, GroupHom, DimensionMismatch, dot, cokernel,
    hermite_normal_form, kernel_basis, solve_integer, solve_rational,
    in_span, hom_image)

logger = logging.getLogger(__name__)


class IncompatibleFans(ValueError):
    pass


class InvariantDivisor(object):
    """sum_rho a_rho D_rho on a fan."""
    def __init__(self, fan, coeffs, rational=False):
        """Initialize InvariantDivisor.

        fan: the Fan.
        coeffs: one coefficient per ray, in fan ray order.
        rational: allow Fraction coefficients.  Integral otherwise.
        """
        if len(coeffs) != fan.nrays:
            raise DimensionMismatch(
                '{} coefficients for a fan with {} rays'.format(
                    len(coeffs), fan.nrays))
        if rational:
            coeffs = tuple(Fraction(c) for c in coeffs)
        else:
            for c in coeffs:
                if isinstance(c, (float, Fraction)) and int(c) != c:
                    raise ValueError(
                        'non-integral coefficient {}; pass rational=True'.format(c))
            coeffs = tuple(int(c) for c in coeffs)
        self.fan = fan
        self.coeffs = coeffs
        self.rational = rational

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def restrict(self, i):
        """Coefficients on the rays of maximal cone i."""
        return tuple(self.coeffs[j] for j in self.fan.cones[i])

    def _check(self, other):
        if not isinstance(other, InvariantDivisor):
            return False
        if other.fan != self.fan:
            raise IncompatibleFans('divisors live on different fans')
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return InvariantDivisor(
            self.fan, [a+b for a, b in zip(self.coeffs, other.coeffs)],
            self.rational or other.rational)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return InvariantDivisor(
            self.fan, [-a for a in self.coeffs], self.rational)

    def __rmul__(self, k):
        return InvariantDivisor(
            self.fan, [k*a for a in self.coeffs],
            self.rational or isinstance(k, Fraction))
    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, InvariantDivisor):
            return NotImplemented
        return self.fan == other.fan and self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return 'InvariantDivisor({})'.format(
            ', '.join(str(c) for c in self.coeffs))


def _integral(D):
    if not D.is_integral():
        raise ValueError('{} is not integral'.format(D))
    return tuple(int(c) for c in D.coeffs)

def prime_divisor(fan, j):
    """D_rho for ray index j."""
    return InvariantDivisor(fan, [int(i == j) for i in range(fan.nrays)])

def principal_divisor(fan, m):
    """div(chi^m) = sum <m, v_rho> D_rho."""
    if len(m) != fan.rank:
        raise DimensionMismatch(
            'character of length {} on a rank {} fan'.format(len(m), fan.rank))
    return InvariantDivisor(fan, [dot(m, v) for v in fan.rays])


def class_presentation(fan):
    """Cl(X) = Z^rays / M, with M acting through the ray matrix."""
    return Presentation(fan.nrays, fan.ray_matrix())

def class_group(fan):
    return cokernel(fan.ray_matrix())

def class_of(D):
    """Canonical coordinates of [D] in Cl(X): torsion parts reduced, then free."""
    return class_presentation(D.fan).coordinates(_integral(D))


def local_presentation(fan, i):
    """Cl(U_sigma) for maximal cone i, presented on the rays of sigma."""
    A = fan.cone_matrix(i)
    return Presentation(A.rows, A)

def local_class_group(fan, i):
    return cokernel(fan.cone_matrix(i))

def local_class(fan, i, D):
    """Coordinates of D restricted to U_sigma."""
    a = _integral(D)
    return local_presentation(fan, i).coordinates(
        tuple(a[j] for j in fan.cones[i]))


def cartier_data(D):
    """Per maximal cone, an integral m_sigma with <m_sigma, v_rho> = -a_rho.

    Returns a list with None for the charts where D is not Cartier.
    """
    fan = D.fan
    a = _integral(D)
    data = []
    for i in range(fan.ncones):
        rhs = [-a[j] for j in fan.cones[i]]
        data.append(solve_integer(fan.cone_matrix(i), rhs))
    return data

def is_cartier(D):
    return all(m is not None for m in cartier_data(D))

def is_qcartier(D):
    fan = D.fan
    for i in range(fan.ncones):
        rhs = [-c for c in D.restrict(i)]
        if solve_rational(fan.cone_matrix(i), rhs) is None:
            return False
    return True

def cartier_index(D):
    """Least k > 0 with kD Cartier, None if D is not Q-Cartier.

    The lcm over the charts of the order of D in Cl(U_sigma).
    """
    fan = D.fan
    a = _integral(D)
    index = 1
    for i in range(fan.ncones):
        pres = local_presentation(fan, i)
        order = pres.group().element_order(
            pres.coordinates(tuple(a[j] for j in fan.cones[i])))
        if order is None:
            return None
        index = index * order // gcd(index, order)
    return index


def linearly_equivalent(D, E):
    """m with D - E = div(chi^m), or None."""
    if D.fan != E.fan:
        raise IncompatibleFans('divisors live on different fans')
    return solve_integer(D.fan.ray_matrix(), _integral(D - E))


class WeilModCartier(object):
    """WDiv(X)/CaDiv(X) together with its restriction to the charts.

    group: image of Z^rays in the direct sum of the Cl(U_sigma) over
        maximal cones sigma.
    local_groups: the Cl(U_sigma).
    cartier: HNF basis (rows) of the lattice of Cartier divisors, the
        kernel of the restriction.
    """
    def __init__(self, fan):
        self.fan = fan
        self.local = [local_presentation(fan, i) for i in range(fan.ncones)]
        self.local_groups = [p.group() for p in self.local]
        self.target = Presentation.direct_sum(self.local)
        rows = []
        for i in range(fan.ncones):
            for j in fan.cones[i]:
                rows.append([int(k == j) for k in range(fan.nrays)])
        self.restriction = GroupHom(
            Presentation(fan.nrays), self.target,
            IntMatrix(rows, fan.nrays))
        self.group = hom_image(self.restriction)
        self.cartier = self._cartier_lattice()

    def _cartier_lattice(self):
        """Kernel of the restriction: a with a|sigma = A_sigma m_sigma for all sigma."""
        fan = self.fan
        n, r, s = fan.rank, fan.nrays, fan.ncones
        rows = []
        for i in range(s):
            for j in fan.cones[i]:
                row = [0]*(r + s*n)
                row[j] = 1
                v = fan.rays[j]
                for k in range(n):
                    row[r + i*n + k] = -v[k]
                rows.append(row)
        K = kernel_basis(IntMatrix(rows, r + s*n))
        return hermite_normal_form(IntMatrix([row[:r] for row in K], r))

    def restrict(self, D):
        """Tuple of local classes of D, one per maximal cone."""
        a = _integral(D)
        return tuple(
            p.coordinates(tuple(a[j] for j in self.fan.cones[i]))
            for i, p in enumerate(self.local))

    def subgroup_hom(self, subgroup):
        """N -> direct sum of the Cl(U_sigma), on the generators of N."""
        return GroupHom(
            Presentation(len(subgroup)), self.target,
            self.restriction.matrix * subgroup.matrix.T)

    def is_trivial_class(self, D):
        return all(not any(c) for c in self.restrict(D))

    def verify(self):
        """Check the restriction is injective on WDiv/CaDiv.

        Every kernel generator is Cartier and the quotient by the
        kernel is isomorphic to the image.
        """
        for row in self.cartier:
            if not is_cartier(InvariantDivisor(self.fan, row)):
                return False
        return cokernel(self.cartier.T) == self.group

    def __repr__(self):
        return 'WeilModCartier({})'.format(self.group)


def weil_mod_cartier(fan):
    wmc = WeilModCartier(fan)
    logger.debug('WDiv/CaDiv of %r is %s', fan, wmc.group)
    return wmc


class DivisorSubgroup(object):
    """Subgroup N of WDiv(X) spanned by invariant divisors.

    The generators are kept in the given order (they grade the relative
    Cox space); hnf is the canonical form of the spanned lattice.
    """
    def __init__(self, fan, generators):
        """Initialize DivisorSubgroup.

        fan: the Fan.
        generators: InvariantDivisors or coefficient sequences.
        """
        gens = []
        for g in generators:
            if not isinstance(g, InvariantDivisor):
                g = InvariantDivisor(fan, g)
            elif g.fan != fan:
                raise IncompatibleFans('generator on a different fan')
            gens.append(InvariantDivisor(fan, _integral(g)))
        self.fan = fan
        self.generators = tuple(gens)
        self.matrix = IntMatrix([g.coeffs for g in gens], fan.nrays)
        self.hnf = hermite_normal_form(self.matrix)

    @classmethod
    def full(cls, fan):
        """All invariant divisors: the prime divisors D_rho."""
        return cls(fan, [prime_divisor(fan, j) for j in range(fan.nrays)])

    def __len__(self):
        return len(self.generators)

    def rank(self):
        return self.hnf.rows

    def contains(self, D):
        return in_span(self.matrix.T, _integral(D))

    def is_subgroup_of(self, other):
        if other.fan != self.fan:
            raise IncompatibleFans('subgroups live on different fans')
        return all(other.contains(g) for g in self.generators)

    def join(self, other):
        if other.fan != self.fan:
            raise IncompatibleFans('subgroups live on different fans')
        return DivisorSubgroup(self.fan, self.generators + other.generators)

    def local_hom(self, i):
        """N -> Cl(U_sigma) for maximal cone i, on the given generators."""
        pres = local_presentation(self.fan, i)
        cols = [g.restrict(i) for g in self.generators]
        return GroupHom(
            Presentation(len(cols)), pres,
            IntMatrix.from_columns(cols, pres.ngens))

    def __eq__(self, other):
        if not isinstance(other, DivisorSubgroup):
            return NotImplemented
        return self.fan == other.fan and self.hnf == other.hnf

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.hnf)

    def __repr__(self):
        return 'DivisorSubgroup({})'.format(
            [list(g.coeffs) for g in self.generators])
