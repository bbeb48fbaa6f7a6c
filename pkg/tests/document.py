from __future__ import print_function
from fractions import Fraction

import pytest

from jhsiao.toric.fan import sigma_n_fan
from jhsiao.toric.document import (
    DocumentError, UnknownLabel, FanDocument, parse, load, from_fan)

import corpus

A1_TEXT = '''{
  "version": 1,
  "rank": 2,
  "rays": [[0, 1], [2, 1]],
  "cones": [[0, 1]],
  "boundary": [[1, 2], 0],
  "divisors": {"W": [1, 0], "W2": [2, 0]},
  "subgroups": {"N": ["W"], "NN": ["W", "W2"]}
}
'''

def _text(**kw):
    d = dict(version='1', rank='2', rays='[[1, 0], [0, 1]]', cones='[[0, 1]]')
    d.update(kw)
    return '{\n' + ',\n'.join(
        '  "{}": {}'.format(k, v) for k, v in sorted(d.items())
        if v is not None) + '\n}\n'

def _error(text):
    with pytest.raises(DocumentError) as info:
        parse(text)
    return info.value


def test_parse():
    doc = parse(A1_TEXT)
    assert doc.rank == 2
    assert doc.fan() == corpus.A1()
    assert doc.boundary == [Fraction(1, 2), 0]
    assert doc.divisor('W2').coeffs == (2, 0)
    assert len(doc.subgroup('NN')) == 2
    assert doc.labels('NN') == ['W', 'W2']
    assert doc.pair().boundary == (Fraction(1, 2), 0)
    with pytest.raises(UnknownLabel):
        doc.divisor('V')
    with pytest.raises(UnknownLabel):
        doc.subgroup('M')
    with pytest.raises(UnknownLabel):
        doc.labels('M')

def test_load(tmp_path):
    path = tmp_path / 'a1.json'
    path.write_text(A1_TEXT)
    assert load(str(path)) == parse(A1_TEXT)

def test_round_trip():
    doc = parse(A1_TEXT)
    text = doc.dumps()
    assert text.endswith('}\n')
    assert parse(text) == doc
    assert doc.to_dict()['boundary'] == [[1, 2], 0]
    for fan in corpus.corpus() + [sigma_n_fan(4)]:
        again = parse(from_fan(fan).dumps())
        assert again.fan() == fan
        assert again.boundary is None
        assert 'divisors' not in again.to_dict()

def test_minimal():
    doc = parse(_text())
    assert doc.boundary is None
    assert doc.divisors == {} and doc.subgroups == {}
    assert doc.fan().is_smooth()

def test_json_errors():
    e = _error('{\n  "rank": 2,\n  "rays": [1,\n}\n')
    assert e.line is not None and e.col is not None
    assert str(e).startswith('{}:{}: '.format(e.line, e.col))
    e = _error('[1, 2]')
    assert (e.line, e.col) == (1, 1)

def test_structure_errors():
    e = _error(_text(rank=None))
    assert "missing key 'rank'" in str(e)
    e = _error(_text(rays='[[1, 0], [0, 1, 3]]'))
    assert (e.line, e.col) == (4, 3)
    assert 'ray 1 has length 3' in e.msg
    e = _error(_text(cones='[[0, 2]]'))
    assert e.line == 2
    assert 'out of range' in e.msg
    e = _error(_text(colour='"red"'))
    assert e.line == 2
    assert "unknown key 'colour'" in e.msg
    assert 'unsupported version' in _error(_text(version='2')).msg
    assert _error(_text(rank='0')).line == 3
    assert _error(_text(rays='[[true, 0], [0, 1]]')).line == 4
    assert _error(_text(rays='[]')).line == 4

def test_labels_and_boundary_errors():
    e = _error(_text(
        divisors='{"W": [1, 0]}', subgroups='{"N": ["W", "V"]}'))
    assert "unknown divisor 'V'" in e.msg
    e = _error(_text(divisors='{"W": [1, 0, 0]}'))
    assert "divisor 'W' has length 3" in e.msg
    assert _error(_text(boundary='[0]')).msg == 'boundary needs one entry per ray'
    assert 'bad boundary' in _error(_text(boundary='[[1, 0], 0]')).msg
    assert 'bad boundary' in _error(_text(boundary='[0.5, 0]')).msg

def test_document_error_str():
    assert str(DocumentError('oops')) == 'oops'
    assert str(DocumentError('oops', 3, 7)) == '3:7: oops'

def test_from_fan():
    f = corpus.A1()
    doc = from_fan(f, [Fraction(1, 3), 1], {'W': [1, 0]}, {'N': ['W']})
    assert isinstance(doc, FanDocument)
    assert doc.to_dict()['boundary'] == [[1, 3], 1]
    assert parse(doc.dumps()).subgroup('N') == doc.subgroup('N')

