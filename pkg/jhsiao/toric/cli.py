"""Command line reports on fan documents.

Exit codes: 0 success, 2 parse error, 3 invalid fan, 4 unknown label,
5 bad subgroup, 6 bad chain.
"""
from __future__ import print_function
__all__ = ['main', 'make_parser']

import logging
import sys

from jhsiao.toric.argparse import ArgumentParser, verbosity
from jhsiao.toric.strutils import longest_fmt, wrap_report
from jhsiao.toric.numsort import sorted_labels
from jhsiao.toric.fan import InvalidFan, validate_fan
from jhsiao.toric.divisors import (
    class_group, class_of, cartier_index, is_cartier, linearly_equivalent,
    local_class_group, weil_mod_cartier, InvariantDivisor)
from jhsiao.toric.singularities import gorenstein_index, is_klt, is_lc
from jhsiao.toric.cox import (
    RankDeficientSubgroup, NotContained, relative_cox_fan, smooth_full_cover,
    is_torsor, is_factorial_cover, klt_shadow)
from jhsiao.toric.tower import (
    ChainNotIncreasing, run_tower, demo_iteration2, format_transcript)
from jhsiao.toric.document import (
    DocumentError, UnknownLabel, load, from_fan)

logger = logging.getLogger(__name__)

EXIT_PARSE = 2
EXIT_FAN = 3
EXIT_LABEL = 4
EXIT_SUBGROUP = 5
EXIT_CHAIN = 6


class CommandError(Exception):
    def __init__(self, msg, code):
        super(CommandError, self).__init__(msg)
        self.code = code


def _load(path):
    """Load and validate a document."""
    try:
        doc = load(path)
    except DocumentError as e:
        if e.line is None:
            raise CommandError('{}: {}'.format(path, e), EXIT_PARSE)
        raise CommandError('{}:{}'.format(path, e), EXIT_PARSE)
    except (IOError, OSError) as e:
        raise CommandError('{}: {}'.format(path, e), EXIT_PARSE)
    try:
        fan = doc.fan()
    except InvalidFan as e:
        raise CommandError('{}: invalid fan: {}'.format(path, e), EXIT_FAN)
    report = validate_fan(fan)
    if not report:
        raise CommandError(
            '{}: invalid fan: {}'.format(path, report), EXIT_FAN)
    return doc


def _fmt_vec(v):
    return '({})'.format(', '.join(map(str, v)))

def _yes(b):
    return 'yes' if b else 'no'


def cmd_analyze(args):
    doc = _load(args.file)
    fan = doc.fan()
    wmc = weil_mod_cartier(fan)
    lines = ['rank {}; {} rays; {} maximal cone{}'.format(
        fan.rank, fan.nrays, fan.ncones, '' if fan.ncones == 1 else 's')]
    names = ['cone {}'.format(i) for i in range(fan.ncones)]
    pad = longest_fmt(names)
    for i, name in enumerate(names):
        cone = fan.cone(i)
        if cone.is_simplicial():
            mult = 'multiplicity {}'.format(cone.multiplicity())
        else:
            mult = 'not simplicial'
        lines.append('{}: rays {}; {}; local Cl = {}'.format(
            pad(name), list(fan.cones[i]), mult, wmc.local_groups[i]))
    pad = longest_fmt(['D_{}'.format(j) for j in range(fan.nrays)])
    for j in range(fan.nrays):
        D = InvariantDivisor(fan, [int(k == j) for k in range(fan.nrays)])
        lines.append('{} -> {}'.format(
            pad('D_{}'.format(j)),
            ' '.join(_fmt_vec(c) for c in wmc.restrict(D))))
    index = gorenstein_index(fan)
    lines.append('Gorenstein index: {}'.format(
        'not Q-Gorenstein' if index is None else index))
    if doc.boundary is not None:
        pair = doc.pair()
        lines.append('pair: klt {}; lc {}'.format(
            _yes(is_klt(pair)), _yes(is_lc(pair))))
    singular = fan.singular_cones()
    summary = 'Cl = {}; WDiv/CaDiv = {}; '.format(class_group(fan), wmc.group)
    if singular:
        summary += '{} singular cone{}; local Cl = {}'.format(
            len(singular), '' if len(singular) == 1 else 's',
            ', '.join(str(local_class_group(fan, i)) for i in singular))
    else:
        summary += 'all cones smooth'
    lines.append(summary)
    return lines


def cmd_divisor(args):
    doc = _load(args.file)
    D = doc.divisor(args.label)
    if args.check == 'cartier':
        if is_cartier(D):
            return ['yes']
        index = cartier_index(D)
        if index is None:
            return ['no; not Q-Cartier']
        return ['no; index {}'.format(index)]
    if args.check == 'qcartier':
        index = cartier_index(D)
        if index is None:
            return ['no']
        return ['yes; index {}'.format(index)]
    if args.check == 'principal':
        m = linearly_equivalent(D, InvariantDivisor(D.fan, [0]*D.fan.nrays))
        if m is None:
            return ['not principal']
        return ['principal; m = {}'.format(_fmt_vec(m))]
    return ['class = {} in Cl = {}'.format(
        _fmt_vec(class_of(D)), class_group(D.fan))]


def _cox_space(doc, args):
    fan = doc.fan()
    if args.full:
        return smooth_full_cover(fan), ['D_{}'.format(j) for j in range(fan.nrays)]
    if args.label is None:
        raise CommandError('a subgroup label or --full is required', EXIT_PARSE)
    try:
        space = relative_cox_fan(fan, doc.subgroup(args.label))
    except RankDeficientSubgroup as e:
        raise CommandError(
            'subgroup {!r}: {}'.format(args.label, e), EXIT_SUBGROUP)
    return space, doc.labels(args.label)

def cmd_cox(args):
    doc = _load(args.file)
    space, names = _cox_space(doc, args)
    if args.emit == 'fan':
        return from_fan(space.fan).dumps()
    fan = doc.fan()
    verdict = is_torsor(fan, space.subgroup)
    lines = ['verdict: {}'.format(verdict.verdict)]
    for w in verdict.witnesses:
        lines.append('witness: cone {} generator {} local class {}'.format(
            w.cone, names[w.generator], _fmt_vec(w.local_class)))
    smooth = sum(
        space.lifted_cone(i).is_smooth() for i in range(space.fan.ncones))
    lines.append('factorial: {}'.format(
        _yes(is_factorial_cover(fan, space.subgroup))))
    lines.append('smooth lifted cones: {}/{}'.format(smooth, space.fan.ncones))
    return lines


def _degrees(text):
    try:
        return [int(k) for k in text.split(',')]
    except ValueError:
        raise CommandError('bad degree list {!r}'.format(text), EXIT_PARSE)

def _klt_lines(doc, labels):
    lines = []
    fan = doc.fan()
    for label in labels:
        try:
            check = klt_shadow(fan, doc.subgroup(label))
        except RankDeficientSubgroup as e:
            raise CommandError(
                'subgroup {!r}: {}'.format(label, e), EXIT_SUBGROUP)
        lines.append('klt shadow {}: {}'.format(
            label, 'klt' if check else check.reason))
    return lines

def cmd_tower(args):
    if args.demo_iteration2 is not None:
        n, degrees = args.demo_iteration2
        try:
            n = int(n)
        except ValueError:
            raise CommandError('bad n {!r}'.format(n), EXIT_PARSE)
        try:
            demo = demo_iteration2(n, _degrees(degrees), full=args.factorial)
        except ValueError as e:
            raise CommandError(str(e), EXIT_PARSE)
        lines = format_transcript(demo.records).splitlines()
        for i, group in enumerate(demo.groups):
            lines.append('level {}: WDiv/CaDiv = {}'.format(i, group))
        for i, f in enumerate(demo.factorial):
            lines.append('cox step {}: factorial {}'.format(i+1, _yes(f)))
        return lines
    if args.file is None:
        raise CommandError('a fan document is required', EXIT_PARSE)
    doc = _load(args.file)
    labels = args.chain or []
    chain = [doc.subgroup(label) for label in labels]
    try:
        state = run_tower(doc.fan(), chain)
    except (ChainNotIncreasing, NotContained) as e:
        raise CommandError(str(e), EXIT_CHAIN)
    lines = format_transcript(
        state.records([doc.labels(label) for label in labels])).splitlines()
    lines.append('stabilization index: {}'.format(state.stabilization))
    lines.append('bound: {}'.format(state.bound))
    if args.klt_shadow:
        lines.extend(_klt_lines(
            doc, labels or sorted_labels(doc.subgroups)))
    return lines


def make_parser():
    p = ArgumentParser(
        prog='jhsiao-toric', description='Exact reports on toric fans.')
    p.add_verbose()
    sub = p.add_subparsers(dest='command')
    sub.required = True

    a = p.add_command(sub, 'analyze', cmd_analyze,
        help='class groups, charts and WDiv/CaDiv of a fan')
    a.add_argument('file', help='fan document')

    d = p.add_command(sub, 'divisor', cmd_divisor,
        help='Cartier, Q-Cartier, principal and class checks')
    d.add_argument('file', help='fan document')
    d.add_argument('label', help='divisor label')
    d.add_argument(
        '--check', choices=('cartier', 'qcartier', 'principal', 'class'),
        default='cartier', help='what to report')

    c = p.add_command(sub, 'cox', cmd_cox,
        help='relative Cox space of a subgroup')
    c.add_argument('file', help='fan document')
    c.add_argument('label', nargs='?', help='subgroup label')
    c.add_argument(
        '--emit', choices=('fan', 'verdicts'), default='verdicts',
        help='print the lifted fan document or the verdict report')
    c.add_argument(
        '--full', action='store_true',
        help='use all invariant divisors instead of a subgroup')

    t = p.add_command(sub, 'tower', cmd_tower,
        help='quasi-torsor towers and the iteration demo')
    t.add_argument('file', nargs='?', help='fan document')
    g = t.add_mutually_exclusive_group()
    g.add_argument(
        '--chain', nargs='*', metavar='LABEL',
        help='increasing chain of subgroup labels')
    g.add_argument(
        '--demo-iteration2', nargs=2, metavar=('N', 'DEGREES'),
        help='abstract cover tower over sigma_N with degrees k0,k1,...')
    t.add_argument(
        '--factorial', action='store_true',
        help='demo Cox steps use every divisor label')
    t.add_argument(
        '--klt-shadow', action='store_true',
        help='check every lifted chart is klt')
    return p


def main(argv=None):
    args = make_parser().parse_args(argv)
    logging.basicConfig(
        level=verbosity(args.verbose), stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        lines = args.func(args)
    except CommandError as e:
        print(e, file=sys.stderr)
        return e.code
    except UnknownLabel as e:
        print(e.args[0], file=sys.stderr)
        return EXIT_LABEL
    if isinstance(lines, str):
        sys.stdout.write(lines)
    else:
        sys.stdout.write(wrap_report(lines))
    return 0
