"""Towers of quasi-torsors.

run_tower follows an increasing chain N_1 <= N_2 <= ... of divisor
subgroups on one base and finds where their images in WDiv/CaDiv stop
growing.  The abstract cover model keeps the class group bookkeeping of
alternating finite covers and Cox steps over isolated Z/2 points.
"""
__all__ = [
    'ChainNotIncreasing', 'TowerRecord', 'TowerState', 'AbstractCoverLevel',
    'DemoTranscript', 'run_tower', 'finite_cover_pullback',
    'weil_mod_cartier_abstract', 'pullback_is_injective', 'demo_iteration2',
    'demo_iteration3', 'format_transcript']

import itertools
import logging
from collections import namedtuple

from jhsiao.toric.lattice import (
    FgAbelianGroup, IntMatrix, Presentation, hom_image, images_equal,
    in_span, kernel_basis)
from jhsiao.toric.fan import sigma_n_fan
from jhsiao.toric.divisors import local_class_group, weil_mod_cartier
from jhsiao.toric.cox import is_torsor, relative_torsor_verdict

logger = logging.getLogger(__name__)


class ChainNotIncreasing(ValueError):
    pass


TowerRecord = namedtuple('TowerRecord', 'step kind verdict witness')

def _verdict_word(v):
    return 'torsor' if v else 'not-torsor'


class TowerState(object):
    """An increasing chain of subgroups on one base and its verdicts.

    images: image of each N_i in WDiv/CaDiv.
    verdicts: TorsorVerdict of N_1 over the base, then of N_i over N_{i-1}.
    stabilization: least (1-based) j with the image of N_j equal to the
        image of the last N_i; 0 for an empty chain.
    changes: number of steps where the image grows.
    bound: 1 + longest subgroup chain of WDiv/CaDiv when it is finite,
        the chain length otherwise.  It bounds the number of distinct
        images, 1 + changes.
    """
    def __init__(self, fan, chain):
        """Initialize TowerState.

        fan: the base Fan.
        chain: DivisorSubgroups on fan, each contained in the next.
        """
        chain = tuple(chain)
        for i, (a, b) in enumerate(zip(chain, chain[1:])):
            if not a.is_subgroup_of(b):
                raise ChainNotIncreasing(
                    'step {} is not contained in step {}'.format(i+1, i+2))
        self.fan = fan
        self.chain = chain
        self.wmc = weil_mod_cartier(fan)
        homs = [self.wmc.subgroup_hom(N) for N in chain]
        self.images = [hom_image(h) for h in homs]
        self.verdicts = []
        for i, N in enumerate(chain):
            if i:
                v = relative_torsor_verdict(fan, chain[i-1], N)
            else:
                v = is_torsor(fan, N)
            logger.debug('tower step %d: image %s, %s', i+1, self.images[i], v)
            self.verdicts.append(v)
        self.stabilization = 0
        self.changes = sum(
            not images_equal(a, b) for a, b in zip(homs, homs[1:]))
        if homs:
            self.stabilization = 1 + next(
                j for j, h in enumerate(homs) if images_equal(h, homs[-1]))
        bound = self.wmc.group.chain_bound()
        self.bound = len(chain) if bound is None else bound
        for i in range(self.stabilization, len(chain)):
            if not self.verdicts[i]:
                raise RuntimeError(
                    'step {} after stabilization is not a torsor'.format(i+1))
        if chain and 1 + self.changes > max(self.bound, 1):
            raise RuntimeError('{} distinct images exceed bound {}'.format(
                1 + self.changes, self.bound))

    def __len__(self):
        return len(self.chain)

    def records(self, labels=None):
        """TowerRecords, one Cox step per subgroup.

        labels: per step, the generator labels used to name witnesses.
            Witnesses are 'generator@cone' with generator indices by default.
        """
        out = []
        for i, v in enumerate(self.verdicts):
            witness = '-'
            if v.witnesses:
                w = v.witnesses[0]
                g = labels[i][w.generator] if labels else w.generator
                witness = '{}@{}'.format(g, w.cone)
            out.append(TowerRecord(i+1, 'cox', _verdict_word(v), witness))
        return out

    def __repr__(self):
        return 'TowerState({} steps, stabilization {})'.format(
            len(self.chain), self.stabilization)


def run_tower(fan, steps):
    return TowerState(fan, steps)


class AbstractCoverLevel(object):
    """Singular points of the i-th finite cover, each with local group Z/2.

    Points are multi-indices (m_0, ..., m_{i-1}) with 1 <= m_j <= k_j in
    lexicographic order.  Point p carries the divisor label T_p.
    generators: divisor classes generating N_i, as integer vectors over
        the points (the coefficient of T_p).
    """
    def __init__(self, degrees=(), generators=()):
        self.degrees = tuple(degrees)
        self.points = list(itertools.product(
            *[range(1, k+1) for k in self.degrees]))
        self.index = {p: i for i, p in enumerate(self.points)}
        self.generators = tuple(tuple(g) for g in generators)

    @property
    def level(self):
        return len(self.degrees)

    def __len__(self):
        return len(self.points)

    @staticmethod
    def label(p):
        if not p:
            return 'T'
        return 'T_({})'.format(','.join(map(str, p)))

    def labels(self):
        return [self.label(p) for p in self.points]

    def divisor(self, p):
        """The class T_p as a vector over the points."""
        i = self.index[tuple(p)]
        return tuple(int(j == i) for j in range(len(self.points)))

    def with_generators(self, generators):
        return AbstractCoverLevel(self.degrees, generators)

    def presentation(self):
        """WDiv/CaDiv = direct sum of Z/2 over the points."""
        n = len(self.points)
        return Presentation(n, IntMatrix(
            [[2*int(i == j) for j in range(n)] for i in range(n)], n))

    def image_at(self, p):
        """Whether N_i has nonzero image in the local group at p."""
        i = self.index[tuple(p)]
        return any(g[i] % 2 for g in self.generators)

    def __repr__(self):
        return 'AbstractCoverLevel({}, {} generators)'.format(
            self.degrees, len(self.generators))


def finite_cover_pullback(level, k):
    """Pull the level back along a finite cover of degree k.

    Each point splits into k points and each class T_p pulls back to the
    sum of the k classes above it.
    """
    if k < 1:
        raise ValueError('cover degree must be positive, got {}'.format(k))
    if k == 1:
        return level
    gens = [
        [g[i] for i in range(len(level.points)) for _ in range(k)]
        for g in level.generators]
    return AbstractCoverLevel(level.degrees + (k,), gens)

def weil_mod_cartier_abstract(level):
    return level.presentation().group()

def _pullback_matrix(level, k):
    n = len(level.points)
    return IntMatrix(
        [[int(j == i // k) for j in range(n)] for i in range(n*k)], n)

def pullback_is_injective(level, k):
    """Whether the pullback of WDiv/CaDiv along a degree k cover is injective."""
    src = level.presentation()
    dst = finite_cover_pullback(AbstractCoverLevel(level.degrees), k).presentation()
    P = _pullback_matrix(level, k)
    K = kernel_basis(IntMatrix.hstack(P, dst.relations))
    return all(in_span(src.relations, row[:src.ngens]) for row in K)


DemoTranscript = namedtuple('DemoTranscript', 'records levels groups factorial')
DemoTranscript.__doc__ = """Outcome of demo_iteration2 / demo_iteration3.

records: TowerRecords, finite and Cox steps alternating.
levels: AbstractCoverLevel after each Cox step (level 0 first).
groups: WDiv/CaDiv of each level.
factorial: per Cox step, whether N maps onto every local group.
"""

def _check_degrees(n, degrees):
    if n < 2:
        raise ValueError('n must be >= 2, got {}'.format(n))
    degrees = tuple(degrees)
    for k in degrees:
        if k < 2:
            raise ValueError('cover degrees must be >= 2, got {}'.format(k))
    return degrees

def _singular_point_group(n):
    fan = sigma_n_fan(n)
    singular = fan.singular_cones()
    if len(singular) != 1:
        raise RuntimeError('sigma_{} has {} singular cones'.format(
            n, len(singular)))
    group = local_class_group(fan, singular[0])
    if group != FgAbelianGroup(0, (2,)):
        raise RuntimeError('local class group {} is not Z/2'.format(group))
    return group

def demo_iteration2(n, degrees, full=False):
    """Alternate finite covers of the given degrees with Cox steps.

    The Cox step after the cover of degree k_i adds the classes T_p with
    last index m_i <= k_i - 1 (all classes when full) to the pulled back
    subgroup.  Its witness point is (k_0, ..., k_{i-1}, 1).
    """
    degrees = _check_degrees(n, degrees)
    _singular_point_group(n)
    level = AbstractCoverLevel()
    levels = [level]
    groups = [weil_mod_cartier_abstract(level)]
    records = []
    factorial = []
    for i, k in enumerate(degrees):
        records.append(TowerRecord(
            len(records)+1, 'finite', 'etale-by-construction', '-'))
        pulled = finite_cover_pullback(level, k)
        added = [
            pulled.divisor(p) for p in pulled.points if full or p[-1] <= k-1]
        level = pulled.with_generators(pulled.generators + tuple(added))
        differ = [
            p for p in level.points if level.image_at(p) != pulled.image_at(p)]
        witness = '-'
        if differ:
            fixed = tuple(degrees[:i]) + (1,)
            if fixed not in differ:
                raise RuntimeError('{} is not a witness point'.format(
                    AbstractCoverLevel.label(fixed)))
            witness = AbstractCoverLevel.label(fixed)
        logger.debug('cox step %d: %d points differ', i+1, len(differ))
        records.append(TowerRecord(
            len(records)+1, 'cox', _verdict_word(not differ), witness))
        factorial.append(all(level.image_at(p) for p in level.points))
        levels.append(level)
        groups.append(weil_mod_cartier_abstract(level))
    return DemoTranscript(records, levels, groups, factorial)

def demo_iteration3(n, degrees):
    """demo_iteration2 with every Cox step using all classes."""
    return demo_iteration2(n, degrees, full=True)


def format_transcript(records):
    """One line per record: step, kind, verdict, witness."""
    return ''.join(
        '{} {} {} {}\n'.format(r.step, r.kind, r.verdict, r.witness)
        for r in records)
