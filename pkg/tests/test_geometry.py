from fractions import Fraction as F
from math import gcd

import pytest

from equimetric.geometry import (
    Parallelogram, SideTriple, Triangle, area, half_angle_triangles, heron_area_sq16, perimeter,
    similar, similarity_key, sides, weakly_equivalent,
)


def test_triangle_validation():
    with pytest.raises(ValueError):
        Triangle(0, 1, 1)
    with pytest.raises(ValueError):
        Triangle(1, 1, 0)
    assert not Triangle(1, -1, 1).in_canonical_region


def test_sides_and_area_345():
    T = Triangle(3, 0, 4)
    assert sides(T) == SideTriple(3, 4, 5)
    assert perimeter(T) == 12
    assert area(T) == 6 == area(SideTriple(3, 4, 5))
    assert sides(Triangle(1, 0, 1)) is None


def test_side_triple_rules():
    assert tuple(SideTriple(5, 3, 4)) == (3, 4, 5)
    with pytest.raises(ValueError):
        SideTriple(1, 2, 3)
    with pytest.raises(ValueError):
        SideTriple(0, 1, 1)


def test_from_sides():
    T = Triangle.from_sides(14, 13, 15)
    assert T == Triangle(14, 5, 12)
    assert Triangle.from_sides(2, 2, 2) is None  # height sqrt(3)
    with pytest.raises(ValueError):
        Triangle.from_sides(1, 1, 3)


def test_placements_keep_sides():
    T = Triangle(14, 5, 12)
    ps = T.placements()
    assert len(ps) == 6
    assert all(sides(P) == sides(T) for P in ps)
    assert len(Triangle(6, 3, 4).placements()) == 3  # isosceles


def test_heron_values():
    assert heron_area_sq16((132, 366, 366)) == heron_area_sq16((135, 352, 377)) == 16 * 23760 ** 2
    assert heron_area_sq16((33, 56, 65)) == heron_area_sq16((35, 53, 66)) == 16 * 924 ** 2
    assert heron_area_sq16((1, 2, 3)) == 0


def test_weak_equivalence_and_similarity():
    a, b = SideTriple(33, 56, 65), SideTriple(35, 53, 66)
    assert weakly_equivalent(a, b)
    assert not similar(a, b)
    assert similar(SideTriple(3, 4, 5), SideTriple(6, 8, 10))
    assert similarity_key(SideTriple(3, 4, 5)) == similarity_key(SideTriple(F(3, 2), 2, F(5, 2)))
    assert not weakly_equivalent(SideTriple(3, 4, 5), SideTriple(6, 8, 10))


def test_parallelogram_measures():
    P = Parallelogram((F(0), F(0)), (F(4), F(0)), (F(3), F(4)))
    assert P.v4 == (7, 4)
    assert P.side_lengths() == (4, 5)
    assert P.perimeter() == 18
    assert P.area() == 16
    assert P.height() == 4


def test_half_angle_grid():
    tris = list(half_angle_triangles(6))
    assert tris
    for T in tris:
        assert T.r == 1 and T.s >= 0 and sides(T) is not None
    keys = {similarity_key(sides(T)) for T in half_angle_triangles(11)}
    # the (33, 56, 65) right triangle: tangents 1 and 3/11
    assert similarity_key(SideTriple(33, 56, 65)) in keys


def test_half_angle_grid_covers_small_heron():
    # every integer Heron triangle with perimeter <= 60 lies in some grid similarity class
    keys = {similarity_key(sides(T)) for T in half_angle_triangles(12)}
    from equimetric.oracle import enumerate_heron
    missing = []
    for st in enumerate_heron(60):
        if gcd(gcd(int(st.a), int(st.b)), int(st.c)) == 1 and similarity_key(st) not in keys:
            missing.append(st)
    # primitive ones up to perimeter 60 have half-angle tangents of height <= 12
    assert missing == []
