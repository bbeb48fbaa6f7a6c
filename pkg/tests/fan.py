from __future__ import print_function
import itertools
import random

import pytest

from jhsiao.toric.lattice import IntMatrix, solve_rational
from jhsiao.toric.fan import (
    Cone, Fan, ZeroVector, NotPointed, NonSimplicial, InvalidFan,
    make_cone, dual_cone, cone_from_inequalities, validate_fan, sigma_n_fan)

import corpus


def test_make_cone():
    assert make_cone([(2, 0), (0, 3)]).rays == ((0, 1), (1, 0))
    assert make_cone([(1, 0), (1, 2), (1, 1)]).rays == ((1, 0), (1, 2))
    assert make_cone([(1, 0), (1, 0), (3, 0)]).rays == ((1, 0),)
    with pytest.raises(NotPointed):
        make_cone([(1, 0), (-1, 0)])
    with pytest.raises(NotPointed):
        make_cone([(1, 0), (0, 1), (-1, -1)])
    with pytest.raises(ZeroVector):
        make_cone([(1, 0), (0, 0)])
    c = make_cone([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert c.rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

def test_dual_cone():
    assert sorted(dual_cone(make_cone([(1, 0), (0, 1)]))) == [(0, 1), (1, 0)]
    assert dual_cone(make_cone([(1, 0), (1, 2)])) == [(0, 1), (2, -1)]
    e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    assert sorted(dual_cone(make_cone(e))) == sorted(e)
    d = dual_cone(make_cone([(1, 0, 0)]))
    assert (1, 0, 0) in d
    assert (0, 1, 0) in d and (0, -1, 0) in d

def test_double_dual():
    rng = random.Random(0)
    done = 0
    while done < 30:
        dim = rng.randint(2, 3)
        vecs = [
            tuple(rng.randint(-3, 3) for _ in range(dim))
            for _ in range(rng.randint(dim, dim+2))]
        try:
            c = make_cone([v for v in vecs if any(v)])
        except (NotPointed, ValueError):
            continue
        if c.dim() != dim:
            continue
        assert Cone(Cone(c.dual()).dual()) == c
        for v in itertools.product(range(-2, 3), repeat=dim):
            assert c.contains(v) == all(
                sum(a*b for a, b in zip(u, v)) >= 0 for u in c.dual())
        done += 1

def test_cone_from_inequalities():
    rays, lin = cone_from_inequalities([(1, 0), (0, 1)], 2)
    assert rays == [(0, 1), (1, 0)]
    assert lin.rows == 0
    rays, lin = cone_from_inequalities([(1, 0)], 2)
    assert rays == [(1, 0)]
    assert lin.rows == 1
    rays, lin = cone_from_inequalities([(1, 0), (-1, 0), (0, 1), (0, -1)], 2)
    assert rays == []
    assert lin.rows == 0

def test_faces():
    c = make_cone([(1, 0), (1, 2)])
    faces = c.faces()
    assert len(faces) == 3
    assert faces[-1] == c
    sq = make_cone([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    faces = sq.faces()
    assert len(faces) == 4 + 4 + 1
    assert sq.is_face([(1, 0, 1), (0, 1, 1)])
    assert not sq.is_face([(1, 0, 1), (-1, 0, 1)])
    assert not sq.is_simplicial()
    with pytest.raises(NonSimplicial):
        sq.multiplicity()
    assert not sq.is_smooth()

def test_multiplicity():
    a1 = make_cone([(0, 1), (2, 1)])
    assert a1.multiplicity() == 2
    assert not a1.is_smooth()
    e = [tuple(int(i == j) for j in range(5)) for i in range(5)]
    assert make_cone(e).multiplicity() == 1
    assert make_cone(e).is_smooth()
    assert make_cone([(1, 0, 1), (1, 2, 0)]).is_smooth()
    assert make_cone([(0, 1), (3, 1)]).multiplicity() == 3

def _parallelepiped_points(c):
    A = IntMatrix.from_columns(c.rays, c.rank)
    lo = [sum(min(0, r[k]) for r in c.rays) for k in range(c.rank)]
    hi = [sum(max(0, r[k]) for r in c.rays) for k in range(c.rank)]
    count = 0
    for p in itertools.product(*[range(a, b+1) for a, b in zip(lo, hi)]):
        lam = solve_rational(A, p)
        if all(0 <= x < 1 for x in lam):
            count += 1
    return count

def test_multiplicity_counts_points():
    rng = random.Random(1)
    done = 0
    while done < 25:
        dim = rng.randint(2, 3)
        vecs = [tuple(rng.randint(0, 3) for _ in range(dim)) for _ in range(dim)]
        if not all(any(v) for v in vecs):
            continue
        c = make_cone(vecs)
        if len(c.rays) != dim or c.dim() != dim:
            continue
        assert c.multiplicity() == _parallelepiped_points(c)
        assert (c.multiplicity() == 1) == c.is_smooth()
        done += 1

def test_fan_structure():
    with pytest.raises(InvalidFan):
        Fan([], [])
    with pytest.raises(InvalidFan):
        Fan([(2, 0), (0, 1)], [[0, 1]])
    with pytest.raises(InvalidFan):
        Fan([(1, 0), (0, 1)], [[0, 2]])
    with pytest.raises(InvalidFan):
        Fan([(1, 0), (0, 1), (1, 1)], [[0, 1]])
    with pytest.raises(InvalidFan):
        Fan([(1, 0), (1, 0)], [[0, 1]])
    with pytest.raises(IndexError):
        corpus.P2().cone_rays(3)
    f = corpus.P2()
    assert f.nrays == 3 and f.ncones == 3
    assert f.cones[2] == (0, 2)
    assert f.containing_cones((1, 1)) == [0]
    assert sorted(f.containing_cones((1, 0))) == [0, 2]
    assert f.faces() == [
        (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert len(sigma_n_fan(3).faces()) == 4 + 6 + 3

def test_validate_fan():
    assert validate_fan(corpus.P2())
    assert str(validate_fan(corpus.P2())) == 'valid'
    overlap = Fan([(1, 0), (0, 1), (1, 1)], [[0, 1], [1, 2]])
    report = validate_fan(overlap)
    assert not report
    assert report.violations[0][0] == (0, 1)
    assert 'cones 0,1' in str(report)
    assert validate_fan(Fan([(0, 1), (2, 1), (1, 0)], [[0, 1], [2, 1]]))
    flat = Fan([(1, 0), (-1, 0)], [[0, 1]])
    assert not validate_fan(flat)
    redundant = Fan([(1, 0), (1, 1), (0, 1)], [[0, 1, 2]])
    assert not validate_fan(redundant)
    for fan in corpus.corpus():
        assert validate_fan(fan), fan

def test_sigma_n():
    f = sigma_n_fan(2)
    assert f.rays == ((1, 0), (0, 1), (2, 1))
    assert [f.cone_rays(i) for i in range(2)] == [
        [(0, 1), (2, 1)], [(1, 0), (2, 1)]]
    assert f.singular_cones() == [0]
    for n in range(2, 7):
        f = sigma_n_fan(n)
        assert f.ncones == n
        assert validate_fan(f)
        assert f.singular_cones() == [0]
        assert f.cone(0).multiplicity() == 2
    with pytest.raises(ValueError):
        sigma_n_fan(1)


if __name__ == '__main__':
    import sys
    from runner import run
    sys.exit(run({k: v for k, v in locals().items() if k.startswith('test_')}))
