"""Relative Cox spaces of toric varieties as lifted fans.

For a subgroup N = <W_1, ..., W_k> of invariant divisors, W_i = sum
a_{i,rho} D_rho, the relative spectrum of the algebra graded by the
classes m_1 W_1 + ... + m_k W_k is the toric variety of the fan with
rays (v_rho, a_{1,rho}, ..., a_{k,rho}) and the cones of the base.
The last k coordinates record the grading torus.
"""
__all__ = [
    'RankDeficientSubgroup', 'LiftNotFan', 'NotContained', 'Witness',
    'TorsorVerdict', 'RelativeCoxSpace', 'QuotientStep',
    'relative_cox_fan', 'is_torsor', 'relative_torsor_verdict',
    'compose_quasi_torsors', 'subgroup_containment',
    'intermediate_quotient', 'is_factorial_cover',
    'surjects_onto_weil_mod_cartier', 'smooth_full_cover', 'torsor_shear',
    'linear_equivalence_shear', 'is_chartwise_trivial', 'klt_shadow']

import logging
from collections import namedtuple

from jhsiao.toric.lattice import (
    IntMatrix, FgAbelianGroup, rank,
    smith_decomposition, solve_integer, images_equal, is_surjective)
from jhsiao.toric.fan import Fan, validate_fan
from jhsiao.toric.divisors import (
    DivisorSubgroup, IncompatibleFans, local_class, linearly_equivalent,
    weil_mod_cartier)
from jhsiao.toric.singularities import ToricPair, is_klt

logger = logging.getLogger(__name__)


class RankDeficientSubgroup(ValueError):
    pass

class LiftNotFan(RuntimeError):
    pass

class NotContained(ValueError):
    pass


Witness = namedtuple('Witness', 'cone generator local_class')


class TorsorVerdict(object):
    """Torsor or quasi-torsor-not-torsor, with the failing charts.

    witnesses: Witness(cone, generator, local_class) per maximal cone
        and generator whose local class is not accounted for.
    """
    def __init__(self, witnesses=()):
        self.witnesses = tuple(witnesses)

    @property
    def torsor(self):
        return not self.witnesses

    @property
    def verdict(self):
        return 'torsor' if self.torsor else 'quasi-torsor-not-torsor'

    def __bool__(self):
        return self.torsor
    __nonzero__ = __bool__

    def __str__(self):
        return self.verdict

    def __repr__(self):
        return 'TorsorVerdict({!r})'.format(list(self.witnesses))


class RelativeCoxSpace(object):
    """Total space of the quasi-torsor attached to (base, subgroup).

    fan: the lifted fan in rank n + k.  Cone i lies over base cone i and
        ray j over base ray j.
    grading: the k x (n + k) projection onto the torus coordinates.
    """
    def __init__(self, base, subgroup, validate=True):
        """Initialize RelativeCoxSpace.

        base: the base Fan.
        subgroup: DivisorSubgroup on base with independent generators.
        validate: run validate_fan on the lift.
        """
        if subgroup.fan != base:
            raise IncompatibleFans('subgroup lives on a different fan')
        k = len(subgroup)
        if rank(subgroup.matrix) != k:
            raise RankDeficientSubgroup(
                '{} generators span a rank {} subgroup'.format(
                    k, rank(subgroup.matrix)))
        n = base.rank
        lifted = [
            v + subgroup.matrix.col(j) for j, v in enumerate(base.rays)]
        self.base = base
        self.subgroup = subgroup
        self.fan = Fan(lifted, base.cones)
        self.grading = IntMatrix(
            [[int(c == n + i) for c in range(n + k)] for i in range(k)], n + k)
        if validate:
            report = validate_fan(self.fan)
            if not report:
                raise LiftNotFan(str(report))
        logger.debug('lifted %r to %r', base, self.fan)

    @property
    def rank(self):
        return self.fan.rank

    def lifted_cone(self, i):
        return self.fan.cone(i)

    def project(self, v):
        """Image of a lattice vector of the lift in the base lattice."""
        return tuple(v[:self.base.rank])

    def __repr__(self):
        return 'RelativeCoxSpace({!r}, {!r})'.format(self.base, self.subgroup)


def relative_cox_fan(fan, subgroup, validate=True):
    return RelativeCoxSpace(fan, subgroup, validate)

def smooth_full_cover(fan):
    """Relative Cox space of all invariant divisors; always smooth."""
    return RelativeCoxSpace(fan, DivisorSubgroup.full(fan))


def is_torsor(fan, subgroup):
    """Torsor iff every generator is Cartier on every maximal cone."""
    witnesses = []
    for i in range(fan.ncones):
        for g, W in enumerate(subgroup.generators):
            c = local_class(fan, i, W)
            if any(c):
                witnesses.append(Witness(i, g, c))
    return TorsorVerdict(witnesses)


def subgroup_containment(inner, outer):
    return inner.is_subgroup_of(outer)

def compose_quasi_torsors(inner, outer):
    """Subgroup of the composite, recorded on the base: the join."""
    return inner.join(outer)


def relative_torsor_verdict(fan, inner, outer):
    """Verdict for the step induced by inner <= outer.

    It is a torsor iff inner and outer have the same image in every
    local class group.  Witnesses name the generators of outer whose
    local class is missing from the image of inner.
    """
    if not inner.is_subgroup_of(outer):
        raise NotContained('{} is not contained in {}'.format(inner, outer))
    witnesses = []
    for i in range(fan.ncones):
        h_in = inner.local_hom(i)
        h_out = outer.local_hom(i)
        if images_equal(h_in, h_out):
            continue
        for g, col in enumerate(h_out.matrix.columns()):
            if not h_in.contains(col):
                witnesses.append(Witness(
                    i, g, h_out.codomain.coordinates(col)))
    return TorsorVerdict(witnesses)


QuotientStep = namedtuple('QuotientStep', 'split complement torsion verdict')
QuotientStep.__doc__ = """Outcome of intermediate_quotient.

split: whether outer/inner is torsion free.
complement: DivisorSubgroup N' with outer = inner + N' (direct), or None.
torsion: torsion subgroup of outer/inner.
verdict: TorsorVerdict of the induced step, or None.
"""

def intermediate_quotient(outer, inner):
    """Split outer = inner + N' when outer/inner is torsion free."""
    if not inner.is_subgroup_of(outer):
        raise NotContained('{} is not contained in {}'.format(inner, outer))
    fan = outer.fan
    B = outer.hnf
    coords = [solve_integer(B.T, g.coeffs) for g in inner.generators]
    C = IntMatrix.from_columns(coords, B.rows)
    U, S, V, Uinv = smith_decomposition(C)
    inv = [d for d in S.diagonal() if d]
    torsion = FgAbelianGroup(0, [d for d in inv if d > 1])
    if torsion.torsion:
        logger.debug('quotient has torsion %s', torsion)
        return QuotientStep(False, None, torsion, None)
    complement = []
    for j in range(len(inv), B.rows):
        u = Uinv.col(j)
        complement.append([
            sum(u[k]*B[k, c] for k in range(B.rows)) for c in range(B.cols)])
    complement = DivisorSubgroup(fan, complement)
    return QuotientStep(
        True, complement, torsion, relative_torsor_verdict(fan, inner, outer))


def is_factorial_cover(fan, subgroup):
    """N -> Cl(U_sigma) surjective for every maximal cone sigma.

    For independent generators this is checked against smoothness of the
    lifted cones.
    """
    surjective = [
        is_surjective(subgroup.local_hom(i)) for i in range(fan.ncones)]
    if rank(subgroup.matrix) == len(subgroup):
        space = RelativeCoxSpace(fan, subgroup, validate=False)
        for i, s in enumerate(surjective):
            if space.lifted_cone(i).is_smooth() != s:
                raise RuntimeError(
                    'factoriality of cone {} disagrees with its lift'.format(i))
    return all(surjective)

def surjects_onto_weil_mod_cartier(fan, subgroup):
    """Whether N -> WDiv/CaDiv is onto; this makes the cover factorial."""
    wmc = weil_mod_cartier(fan)
    return images_equal(wmc.subgroup_hom(subgroup), wmc.restriction)


def _shear(n, M):
    """[[I, 0], [M, I]] for the k x n matrix M."""
    k = len(M)
    rows = []
    for i in range(n):
        rows.append([int(c == i) for c in range(n + k)])
    for i in range(k):
        rows.append(list(M[i]) + [int(c == i) for c in range(k)])
    return IntMatrix(rows, n + k)

def torsor_shear(space, i):
    """Unimodular shear taking the lift of cone i to (cone i) x 0.

    Built from the Cartier data of the generators on cone i; None if some
    generator is not Cartier there.
    """
    base = space.base
    A = base.cone_matrix(i)
    M = []
    for W in space.subgroup.generators:
        m = solve_integer(A, [-a for a in W.restrict(i)])
        if m is None:
            return None
        M.append(m)
    return _shear(base.rank, M)

def is_chartwise_trivial(space):
    """Every lifted cone is unimodularly (cone) x 0."""
    n = space.base.rank
    for i in range(space.fan.ncones):
        S = torsor_shear(space, i)
        if S is None:
            return False
        for j in space.fan.cones[i]:
            if any(S.apply(space.fan.rays[j])[n:]):
                return False
    return True

def linear_equivalence_shear(space, other):
    """Shear fixing base coordinates that maps space's lift onto other's.

    other must use generators W_i' linearly equivalent to space's W_i.
    Returns None otherwise.
    """
    if other.base != space.base or len(other.subgroup) != len(space.subgroup):
        return None
    M = []
    for W, W2 in zip(space.subgroup.generators, other.subgroup.generators):
        m = linearly_equivalent(W2, W)
        if m is None:
            return None
        M.append(m)
    S = _shear(space.base.rank, M)
    for r, r2 in zip(space.fan.rays, other.fan.rays):
        if S.apply(r) != r2:
            raise RuntimeError('shear does not map {} to {}'.format(r, r2))
    return S


def klt_shadow(fan, subgroup):
    """is_klt of the lifted fan with zero boundary."""
    return is_klt(ToricPair(RelativeCoxSpace(fan, subgroup, validate=False).fan))
