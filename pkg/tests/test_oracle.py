from fractions import Fraction as F
from math import isqrt

import pytest

from equimetric.affine import IDENTITY, System, TransformMatrix, apply, residuals, build_tuple
from equimetric.exactq import rat_sqrt
from equimetric.families import f321_base
from equimetric.geometry import SideTriple, Triangle, similarity_key, sides
from equimetric.oracle import (
    Kind, PairRecord, SearchConfig, choudhry_obstruction, conjecture27_experiment, enumerate_heron,
    find_pairs, grid_solution_search,
)


def _direct_heron(max_p):
    out = []
    for a in range(1, max_p + 1):
        for b in range(a, max_p + 1):
            for c in range(b, a + b):
                if a + b + c > max_p:
                    break
                h = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
                r = isqrt(h)
                if h > 0 and r * r == h:
                    out.append(SideTriple(a, b, c))
    return out


def test_heron_small():
    assert SideTriple(3, 4, 5) in list(enumerate_heron(12))
    got = list(enumerate_heron(36))
    for t in [(5, 12, 13), (9, 12, 15), (10, 13, 13)]:
        assert SideTriple(*t) in got
    with pytest.raises(ValueError):
        list(enumerate_heron(2))


def test_heron_matches_direct_filter():
    for n in (36, 120, 200):
        assert list(enumerate_heron(n)) == _direct_heron(n)


def test_heron_lexicographic():
    got = [tuple(t) for t in enumerate_heron(300)]
    assert got == sorted(got)


def test_pairs_known():
    recs = find_pairs(SearchConfig(154))
    keys = {(tuple(r.sides1), tuple(r.sides2)) for r in recs}
    assert ((33, 56, 65), (35, 53, 66)) in keys
    r = next(r for r in recs if r.perimeter == 154)
    assert r.area16sq == 16 * 924 ** 2 and r.similarity_class_distinct
    assert find_pairs(SearchConfig(20)) == find_pairs(SearchConfig(20)) == []


def test_pairs_864():
    recs = find_pairs(SearchConfig(864))
    assert any(tuple(r.sides1) == (132, 366, 366) and tuple(r.sides2) == (135, 352, 377) for r in recs)


def test_dedup_removes_multiples():
    full = find_pairs(SearchConfig(320, dedup=False))
    primitive = find_pairs(SearchConfig(320))
    assert len(primitive) < len(full)
    assert any(tuple(r.sides1) == (66, 112, 130) for r in full)
    assert not any(tuple(r.sides1) == (66, 112, 130) for r in primitive)


def test_parallel_is_identical(tmp_path):
    a, b = tmp_path / "one.jsonl", tmp_path / "many.jsonl"
    find_pairs(SearchConfig(400, out=str(a)))
    find_pairs(SearchConfig(400, out=str(b), threads=3))
    assert a.read_bytes() == b.read_bytes()
    summary = (tmp_path / "one.jsonl.summary").read_text()
    assert '"pairs"' in summary
    first = a.read_text().splitlines()[0]
    assert first.startswith("{") and '"kind": "TriangleTriangle"' in first


def test_unwritable_output():
    with pytest.raises(OSError):
        find_pairs(SearchConfig(30, out="/nonexistent-dir/x.jsonl"))


def test_parallelogram_pairs():
    recs = find_pairs(SearchConfig(60, kind=Kind.TRIANGLE_PARALLELOGRAM))
    assert recs
    for r in recs:
        u, v, h = r.sides2
        assert 2 * (u + v) == r.perimeter
        assert 16 * (u * h) ** 2 == r.area16sq
        assert rat_sqrt(v * v - h * h) is not None


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(2)
    with pytest.raises(ValueError):
        SearchConfig(10, threads=0)


def test_conjecture27():
    out = f321_base(2)
    found = conjecture27_experiment(out.tuple.transform, 12)
    assert similarity_key(out.pair[0]) in {similarity_key(sides(T)) for T in found}
    with pytest.raises(ValueError):
        conjecture27_experiment(IDENTITY, 5)
    assert conjecture27_experiment(TransformMatrix(F(7, 3), F(1, 97)), 5) == []


def _independent_filter(system, T, height):
    # one equation at a time, no shared helpers
    from equimetric.exactq import rationals_of_height
    w1, w2 = rat_sqrt(T.s ** 2 + T.t ** 2), rat_sqrt((T.s - T.r) ** 2 + T.t ** 2)
    hits = []
    for a in rationals_of_height(height, positive=True):
        for b in rationals_of_height(height):
            x3 = T.s / a + b * T.t
            w3 = rat_sqrt(x3 ** 2 + (a * T.t) ** 2)
            if w3 is None:
                continue
            w4 = rat_sqrt((x3 - T.r / a) ** 2 + (a * T.t) ** 2)
            if w4 is None:
                continue
            if T.r / a + w3 + w4 == T.r + w1 + w2:
                hits.append((a, b))
    return hits


def test_grid_search_trivial_pair():
    T = Triangle(3, 0, 4)
    sols = grid_solution_search(System.EQ2, T, 20)
    ab = sorted((s.a, s.b) for s in sols)
    assert (1, 0) in ab and (1, (T.r - 2 * T.s) / T.t) in ab
    assert ab == sorted(_independent_filter(System.EQ2, T, 20))
    for s in sols:
        assert residuals(s) == [0] * 5


def test_grid_search_requires_rational_sides():
    with pytest.raises(ValueError):
        grid_solution_search(System.EQ2, Triangle(1, 0, 1), 3)


def test_choudhry_obstruction():
    assert not choudhry_obstruction((3, 4, 5))
    # x = y = z is a zero of the quartic
    assert choudhry_obstruction((1, 1, 1))


def test_record_json():
    r = PairRecord(SideTriple(33, 56, 65), (F(35), F(53), F(66)), F(154), F(16 * 924 ** 2),
                   Kind.TRIANGLE_TRIANGLE, True)
    js = r.to_json()
    assert js["sides1"] == ["33/1", "56/1", "65/1"] and js["perimeter"] == "154/1"
