from __future__ import print_function
import logging

from jhsiao.toric.argparse import ArgumentParser, verbosity
from jhsiao.toric.numsort import numsortkey, sorted_labels
from jhsiao.toric.strutils import (
    DEFAULT_WIDTH, splitlines, wrap_report, longest_fmt, report_width)


def test_splitlines():
    assert splitlines('aaa bbb', 10) == ['aaa bbb']
    assert splitlines('aaa bbb ccc', 7) == ['aaa bbb', 'ccc']
    assert splitlines('abcdefghij k', 5) == ['abcdefghij', 'k']
    assert splitlines('abcdefghij', 5) == ['abcdefghij']
    assert splitlines('a,b,c', 3, ',') == ['a,b', 'c']

def test_wrap_report():
    assert wrap_report([]) == ''
    assert wrap_report(['x', 'y'], 10) == 'x\ny\n'
    assert wrap_report(['aaa bbb ccc'], 7) == 'aaa bbb\n  ccc\n'
    assert wrap_report(['aaa bbb ccc'], 7, '-') == 'aaa bbb\n-ccc\n'

def test_report_width():
    assert report_width({}) == DEFAULT_WIDTH
    assert report_width({'JHSIAO_TORIC_WIDTH': '40'}) == 40
    assert report_width({'JHSIAO_TORIC_WIDTH': 'wide'}) == DEFAULT_WIDTH
    assert report_width({'JHSIAO_TORIC_WIDTH': '-3'}) == DEFAULT_WIDTH

def test_longest_fmt():
    fmt = longest_fmt(['a', 'abc'])
    assert fmt('a') == 'a  '
    assert fmt('abc') == 'abc'

def test_numsort():
    assert sorted_labels(['W10', 'W2', 'N', 'W1']) == ['N', 'W1', 'W2', 'W10']
    key = numsortkey()
    assert key('T_3') < key('T_12')
    assert sorted(['b', 'a10', 'a9'], key=key) == ['a9', 'a10', 'b']

def test_verbosity():
    assert verbosity(0) == logging.WARNING
    assert verbosity(1) == logging.INFO
    assert verbosity(4) == logging.DEBUG

def test_add_command():
    p = ArgumentParser(prog='x').add_verbose()
    sub = p.add_subparsers(dest='command')
    seen = []
    c = p.add_command(sub, 'go', seen.append)
    c.add_argument('thing')
    args = p.parse_args(['-v', 'go', 'it'])
    assert args.verbose == 1
    args.func(args)
    assert seen[0].thing == 'it'
    assert p.parse_args(['go', '-vv', 'it']).verbose == 2


if __name__ == '__main__':
    import sys
    from runner import run
    sys.exit(run({k: v for k, v in locals().items() if k.startswith('test_')}))
