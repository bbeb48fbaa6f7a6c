"""FanDocument: the json text format for fans, boundaries and divisors.

    {"version": 1, "rank": 2,
     "rays": [[1, 0], [1, 2]], "cones": [[0, 1]],
     "boundary": [[1, 2], 0],
     "divisors": {"W": [1, 0]},
     "subgroups": {"N": ["W"]}}

boundary, divisors and subgroups are optional.  Only integers are
accepted; boundary entries are integers or [numerator, denominator].
"""
__all__ = [
    'VERSION', 'DocumentError', 'UnknownLabel', 'FanDocument', 'parse',
    'load', 'from_fan']

import json
import logging
from fractions import Fraction

from jhsiao.toric.fan import Fan
from jhsiao.toric.divisors import InvariantDivisor, DivisorSubgroup
from jhsiao.toric.singularities import ToricPair

logger = logging.getLogger(__name__)

VERSION = 1


class DocumentError(ValueError):
    """Malformed document, with 1-based line and column when known."""
    def __init__(self, msg, line=None, col=None):
        self.msg = msg
        self.line = line
        self.col = col
        if line is None:
            super(DocumentError, self).__init__(msg)
        else:
            super(DocumentError, self).__init__(
                '{}:{}: {}'.format(line, col, msg))

class UnknownLabel(LookupError):
    pass


def _locate(text, key):
    """Line and column of the first occurrence of "key" in text."""
    idx = text.find('"{}"'.format(key))
    if idx < 0:
        return 1, 1
    line = text.count('\n', 0, idx) + 1
    return line, idx - (text.rfind('\n', 0, idx) + 1) + 1

def _isint(x):
    return isinstance(x, int) and not isinstance(x, bool)


class FanDocument(object):
    def __init__(
            self, rank, rays, cones, boundary=None, divisors=None,
            subgroups=None):
        """Initialize FanDocument.

        rank: ambient lattice rank.
        rays: list of integer vectors.
        cones: list of ray index lists.
        boundary: list of Fractions, one per ray, or None.
        divisors: dict label -> coefficient list.
        subgroups: dict label -> list of divisor labels.
        """
        self.rank = rank
        self.rays = [list(r) for r in rays]
        self.cones = [list(c) for c in cones]
        self.boundary = None if boundary is None else [
            Fraction(b) for b in boundary]
        self.divisors = dict(divisors or {})
        self.subgroups = dict(subgroups or {})
        self._fan = None

    def fan(self):
        """The Fan; raises InvalidFan for structural problems."""
        if self._fan is None:
            self._fan = Fan(self.rays, self.cones)
        return self._fan

    def divisor(self, label):
        try:
            coeffs = self.divisors[label]
        except KeyError:
            raise UnknownLabel('no divisor labelled {!r}'.format(label))
        return InvariantDivisor(self.fan(), coeffs)

    def subgroup(self, label):
        try:
            names = self.subgroups[label]
        except KeyError:
            raise UnknownLabel('no subgroup labelled {!r}'.format(label))
        return DivisorSubgroup(self.fan(), [self.divisor(n) for n in names])

    def labels(self, label):
        """Divisor labels generating a subgroup."""
        if label not in self.subgroups:
            raise UnknownLabel('no subgroup labelled {!r}'.format(label))
        return list(self.subgroups[label])

    def pair(self):
        return ToricPair(self.fan(), self.boundary)

    def to_dict(self):
        d = dict(
            version=VERSION, rank=self.rank, rays=self.rays, cones=self.cones)
        if self.boundary is not None:
            d['boundary'] = [
                b.numerator if b.denominator == 1
                else [b.numerator, b.denominator]
                for b in self.boundary]
        if self.divisors:
            d['divisors'] = {k: list(v) for k, v in self.divisors.items()}
        if self.subgroups:
            d['subgroups'] = {k: list(v) for k, v in self.subgroups.items()}
        return d

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'

    def __eq__(self, other):
        if not isinstance(other, FanDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self):
        return 'FanDocument({} rays, {} cones)'.format(
            len(self.rays), len(self.cones))


class _Parser(object):
    def __init__(self, text):
        self.text = text

    def fail(self, key, msg):
        line, col = _locate(self.text, key)
        raise DocumentError(msg, line, col)

    def intvec(self, key, vec, length, what):
        if not isinstance(vec, list) or not all(_isint(x) for x in vec):
            self.fail(key, '{} must be a list of integers'.format(what))
        if length is not None and len(vec) != length:
            self.fail(key, '{} has length {}, expected {}'.format(
                what, len(vec), length))
        return vec

    def parse(self):
        try:
            d = json.loads(self.text)
        except ValueError as e:
            raise DocumentError(
                getattr(e, 'msg', str(e)), getattr(e, 'lineno', None),
                getattr(e, 'colno', None))
        if not isinstance(d, dict):
            raise DocumentError('document must be a json object', 1, 1)
        for key in ('version', 'rank', 'rays', 'cones'):
            if key not in d:
                raise DocumentError('missing key {!r}'.format(key), 1, 1)
        unknown = set(d) - {
            'version', 'rank', 'rays', 'cones', 'boundary', 'divisors',
            'subgroups'}
        if unknown:
            self.fail(sorted(unknown)[0], 'unknown key {!r}'.format(
                sorted(unknown)[0]))
        if d['version'] != VERSION:
            self.fail('version', 'unsupported version {!r}'.format(
                d['version']))
        rank = d['rank']
        if not _isint(rank) or rank < 1:
            self.fail('rank', 'rank must be a positive integer')
        rays = d['rays']
        if not isinstance(rays, list) or not rays:
            self.fail('rays', 'rays must be a nonempty list')
        for i, r in enumerate(rays):
            self.intvec('rays', r, rank, 'ray {}'.format(i))
        cones = d['cones']
        if not isinstance(cones, list):
            self.fail('cones', 'cones must be a list')
        for i, c in enumerate(cones):
            self.intvec('cones', c, None, 'cone {}'.format(i))
            for j in c:
                if not 0 <= j < len(rays):
                    self.fail('cones', 'cone {} uses ray index {} out of range'.format(
                        i, j))
        boundary = d.get('boundary')
        if boundary is not None:
            boundary = self.boundary(boundary, len(rays))
        divisors = d.get('divisors', {})
        if not isinstance(divisors, dict):
            self.fail('divisors', 'divisors must be an object')
        for label, coeffs in divisors.items():
            self.intvec(label, coeffs, len(rays), 'divisor {!r}'.format(label))
        subgroups = d.get('subgroups', {})
        if not isinstance(subgroups, dict):
            self.fail('subgroups', 'subgroups must be an object')
        for label, names in subgroups.items():
            if not isinstance(names, list):
                self.fail(label, 'subgroup {!r} must list divisor labels'.format(
                    label))
            for name in names:
                if name not in divisors:
                    self.fail(label, 'subgroup {!r} names unknown divisor {!r}'.format(
                        label, name))
        logger.debug('parsed document with %d rays and %d cones',
            len(rays), len(cones))
        return FanDocument(rank, rays, cones, boundary, divisors, subgroups)

    def boundary(self, boundary, nrays):
        if not isinstance(boundary, list) or len(boundary) != nrays:
            self.fail('boundary', 'boundary needs one entry per ray')
        out = []
        for b in boundary:
            if _isint(b):
                out.append(Fraction(b))
            elif (isinstance(b, list) and len(b) == 2
                    and all(_isint(x) for x in b) and b[1]):
                out.append(Fraction(b[0], b[1]))
            else:
                self.fail('boundary', 'bad boundary coefficient {!r}'.format(b))
        return out


def parse(text):
    """Parse document text.  Raises DocumentError."""
    return _Parser(text).parse()

def load(path):
    with open(path) as f:
        return parse(f.read())

def from_fan(fan, boundary=None, divisors=None, subgroups=None):
    return FanDocument(
        fan.rank, fan.rays, fan.cones, boundary, divisors, subgroups)
