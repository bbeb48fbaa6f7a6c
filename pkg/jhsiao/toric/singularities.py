"""Log discrepancies and singularity classes of toric pairs.

For a toric pair (X, Delta) with Delta = sum b_rho D_rho the log
discrepancy of the divisor over X given by a lattice vector v is
phi(v), where phi is linear on each maximal cone and phi(v_rho) = 1 - b_rho.
"""
__all__ = [
    'NotQCartier', 'OutsideSupport', 'Check', 'ToricPair',
    'DiscrepancyFunction', 'canonical_divisor', 'gorenstein_index',
    'log_discrepancy', 'is_klt', 'is_lc', 'is_canonical', 'is_terminal',
    'smooth_iff_factorial_check']

import itertools
import logging
from fractions import Fraction

from jhsiao.toric.lattice import DimensionMismatch, cokernel, solve_rational
from jhsiao.toric.divisors import InvariantDivisor, cartier_index

logger = logging.getLogger(__name__)


class NotQCartier(ValueError):
    pass

class OutsideSupport(ValueError):
    pass


class Check(object):
    """Boolean verdict with the reason behind it."""
    __slots__ = ('ok', 'reason', 'note')

    def __init__(self, ok, reason, note=None):
        self.ok = bool(ok)
        self.reason = reason
        self.note = note

    def __bool__(self):
        return self.ok
    __nonzero__ = __bool__

    def __repr__(self):
        if self.note:
            return 'Check({}, {!r}, note={!r})'.format(
                self.ok, self.reason, self.note)
        return 'Check({}, {!r})'.format(self.ok, self.reason)


class ToricPair(object):
    """A fan with boundary Delta = sum b_rho D_rho, 0 <= b_rho <= 1."""
    def __init__(self, fan, boundary=None):
        """Initialize ToricPair.

        fan: the Fan.
        boundary: one coefficient per ray (ints, Fractions or 'p/q'
            strings).  Defaults to Delta = 0.
        """
        if boundary is None:
            boundary = [0]*fan.nrays
        if len(boundary) != fan.nrays:
            raise DimensionMismatch(
                '{} boundary coefficients for {} rays'.format(
                    len(boundary), fan.nrays))
        boundary = tuple(Fraction(b) for b in boundary)
        for j, b in enumerate(boundary):
            if not 0 <= b <= 1:
                raise ValueError(
                    'boundary coefficient {} on ray {} is outside [0, 1]'.format(
                        b, j))
        self.fan = fan
        self.boundary = boundary

    def log_canonical_divisor(self):
        """K_X + Delta = sum (b_rho - 1) D_rho."""
        return InvariantDivisor(
            self.fan, [b - 1 for b in self.boundary], rational=True)

    def is_zero_boundary(self):
        return not any(self.boundary)

    def discrepancy_function(self):
        """The piecewise linear phi; raises NotQCartier if K_X + Delta is not."""
        fan = self.fan
        slopes = []
        for i in range(fan.ncones):
            rhs = [1 - self.boundary[j] for j in fan.cones[i]]
            m = solve_rational(fan.cone_matrix(i), rhs)
            if m is None:
                raise NotQCartier(
                    'K + Delta is not Q-Cartier on cone {}'.format(i))
            slopes.append(m)
        return DiscrepancyFunction(self, slopes)

    def __repr__(self):
        return 'ToricPair({!r}, {})'.format(
            self.fan, [str(b) for b in self.boundary])


class DiscrepancyFunction(object):
    """phi with phi = <m_sigma, .> on each maximal cone sigma."""
    def __init__(self, pair, slopes):
        self.pair = pair
        self.slopes = tuple(tuple(m) for m in slopes)

    def on_cone(self, i, v):
        return sum(a*b for a, b in zip(self.slopes[i], v))

    def __call__(self, v):
        v = tuple(v)
        fan = self.pair.fan
        if len(v) != fan.rank:
            raise DimensionMismatch(
                'vector of length {} for a rank {} fan'.format(len(v), fan.rank))
        if not any(v):
            raise ValueError('log discrepancy of the zero vector')
        for i in range(fan.ncones):
            if fan.cone(i).contains(v):
                return Fraction(self.on_cone(i, v))
        raise OutsideSupport('{} is not in the support of the fan'.format(v))

    def is_consistent(self):
        """m_sigma and m_tau agree on every ray shared by sigma and tau."""
        fan = self.pair.fan
        for i, j in itertools.combinations(range(fan.ncones), 2):
            for k in set(fan.cones[i]) & set(fan.cones[j]):
                v = fan.rays[k]
                if self.on_cone(i, v) != self.on_cone(j, v):
                    return False
        return True


def canonical_divisor(fan):
    """K_X = -sum D_rho."""
    return InvariantDivisor(fan, [-1]*fan.nrays)

def gorenstein_index(fan):
    """Cartier index of K_X, None if X is not Q-Gorenstein."""
    return cartier_index(canonical_divisor(fan))


def log_discrepancy(pair, v):
    return pair.discrepancy_function()(v)


def _qcartier(pair):
    try:
        return pair.discrepancy_function()
    except NotQCartier:
        return None

def _not_qcartier(pair):
    note = None
    if pair.is_zero_boundary():
        note = 'klt type via toric standard boundary'
    return Check(False, 'not-qcartier', note)

def is_klt(pair):
    """Q-Cartier K + Delta and every b_rho < 1."""
    if _qcartier(pair) is None:
        return _not_qcartier(pair)
    for j, b in enumerate(pair.boundary):
        if b >= 1:
            return Check(False, 'coefficient 1 on ray {}'.format(j))
    return Check(True, 'klt')

def is_lc(pair):
    """Q-Cartier K + Delta and every b_rho <= 1."""
    if _qcartier(pair) is None:
        return _not_qcartier(pair)
    return Check(True, 'lc')


def _small_points(cone, phi_i):
    """Nonzero lattice points v of the cone with phi(v) <= 1.

    They lie in conv(0, rays), enumerated through its bounding box.
    """
    rays = cone.rays
    bounds = [
        range(min(0, min(r[k] for r in rays)), max(0, max(r[k] for r in rays)) + 1)
        for k in range(cone.rank)]
    for v in itertools.product(*bounds):
        if not any(v) or not cone.contains(v):
            continue
        value = phi_i(v)
        if value <= 1:
            yield v, value

def _points_below(fan, strict):
    phi = ToricPair(fan).discrepancy_function()
    for i in range(fan.ncones):
        cone = fan.cone(i)
        rays = set(cone.rays)
        for v, value in _small_points(cone, lambda v: phi.on_cone(i, v)):
            if value < 1 or (not strict and v not in rays):
                logger.debug('cone %d: phi%s = %s', i, v, value)
                yield v

def is_canonical(fan):
    """No nonzero lattice point v with phi(v) < 1 (Delta = 0)."""
    return next(_points_below(fan, True), None) is None

def is_terminal(fan):
    """phi(v) > 1 for every nonzero lattice point that is not a ray (Delta = 0)."""
    return next(_points_below(fan, False), None) is None


def smooth_iff_factorial_check(cone):
    """(is_smooth, is_factorial, agree) for U_sigma.

    Factorial means the local class group is trivial.
    """
    smooth = cone.is_smooth()
    factorial = cokernel(cone.ray_matrix()).is_trivial()
    return smooth, factorial, smooth == factorial
