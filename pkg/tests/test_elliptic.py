from fractions import Fraction as F

import pytest

from equimetric.elliptic import (
    DEGENERATE_421, INFINITY, Curve, CurveDomainError, ExcludedPointError, Point, QPoly, add,
    curve, curve_321, curve_322, curve_421, curve_431, curve_432, delta_321, double, double_p_321,
    double_p_432, fermat_candidates, fermat_square_point, genus2_membership, marked_points, multiply,
    naive_point_search, neg, on_curve, phi, phi_inv, phi_inv_421_w, point, quartic_model,
)
from equimetric.exactq import rat_sqrt, rationals_of_height
from tests.conftest import rand_rat

E421 = curve_421()


def _random_params(rng, case):
    while True:
        params = {"p": rand_rat(rng, 1, 10)}
        if case in ("C322", "C432"):
            params["m"] = rand_rat(rng, 1, 10)
        try:
            return params, curve(case, params)
        except CurveDomainError:
            continue


def test_curve_validation():
    with pytest.raises(CurveDomainError):
        Curve(0, 0)
    with pytest.raises(CurveDomainError):
        Curve(-3, 2)   # (X-1)^2 (X+2)
    assert Curve.from_json(E421.to_json()) == E421
    assert E421.to_json() == {"A": "-675/1", "B": "13662/1"}


def test_on_curve():
    assert on_curve(E421, point(-33, 0))
    assert on_curve(E421, point(39, 216))
    assert not on_curve(E421, point(0, 0))
    assert on_curve(E421, INFINITY)


def test_point_json():
    assert point(-33, 0).to_json() == {"X": "-33/1", "Y": "0/1"}
    assert INFINITY.to_json() == {"inf": True}
    assert Point.from_json({"inf": True}) is INFINITY
    assert Point.from_json(point(3, 108).to_json()) == point(3, 108)


def test_group_law_basics():
    P = point(3, 108)
    assert double(E421, point(-33, 0)) == INFINITY
    assert add(E421, P, INFINITY) == P
    assert add(E421, P, neg(E421, P)) == INFINITY
    with pytest.raises(CurveDomainError):
        add(E421, point(0, 0), P)


def test_421_torsion_closed():
    pts = set(DEGENERATE_421) | {INFINITY}
    for P in pts:
        for Q in pts:
            assert add(E421, P, Q) in pts
    assert multiply(E421, 6, point(3, 108)) == INFINITY


def test_group_axioms_on_found_points():
    c = curve_321(2)
    _, P = marked_points("C321", {"p": 2})
    pts = [P, multiply(c, 2, P), multiply(c, 3, P), *naive_point_search(c, 30)[:4]]
    for A in pts:
        for B in pts:
            assert add(c, A, B) == add(c, B, A)
            for C in pts[:3]:
                assert add(c, add(c, A, B), C) == add(c, A, add(c, B, C))


def test_reference_curves():
    c = curve_321(2)
    assert (c.A, c.B) == (-21168, 494208)
    assert on_curve(c, point(-84, 1296))
    assert E421.discriminant == -3809369088
    c = curve_431(2)
    assert (c.A, c.B) == (-19872, 1403136)


def test_doubling_at_p2():
    c = curve_321(2)
    P = point(-84, 1296)
    assert double(c, P) == point(168, -1296)
    assert double_p_321(2) == point(168, 1296)


def test_321_doubling_sign(rng):
    # the closed form for [2]P agrees with the group law up to the sign of Y
    for _ in range(20):
        p = rand_rat(rng, 1, 10)
        c = curve_321(p)
        _, P = marked_points("C321", {"p": p})
        D = double(c, P)
        assert D == neg(c, double_p_321(p))
        assert phi_inv("C321", {"p": p}, double_p_321(p)) == p * (p + 1) / (p * p - p + 1)


def test_432_doubling_matches_display(rng):
    for _ in range(10):
        params, c = _random_params(rng, "C432")
        _, P = marked_points("C432", params)
        D = double(c, P)
        assert D == double_p_432(params["m"], params["p"])
        assert phi_inv("C432", params, D) == 4 * params["p"] / (params["m"] ** 2 - 1)


def test_431_doubling_parameter(rng):
    for _ in range(10):
        p = rand_rat(rng, 1, 10)
        c = curve_431(p)
        _, P = marked_points("C431", {"p": p})
        m = phi_inv("C431", {"p": p}, neg(c, double(c, P)))
        assert m == (p * p - 4 * p + 1) ** 2 / ((p * p - 2 * p - 1) * (p * p + 2 * p - 1))


def test_322_doubling_parameter(rng):
    for _ in range(10):
        params, c = _random_params(rng, "C322")
        m, p = params["m"], params["p"]
        _, P = marked_points("C322", params)
        try:
            k = phi_inv("C322", params, double(c, P))
        except ExcludedPointError:
            continue
        assert k == 2 * (p * p + 1) * p * ((m - 1) * p + m + 1) / ((m - 1) * (2 * (m * m + 1) * p * p + (m + 1) ** 2))


@pytest.mark.parametrize("case", ["C321", "C322", "C431", "C432"])
def test_marked_points_on_curve(rng, case):
    for _ in range(50):
        params, c = _random_params(rng, case)
        Qp, Pp = marked_points(case, params)
        assert Qp.Y == 0
        assert on_curve(c, Qp) and on_curve(c, Pp)


def test_322_singular_locus():
    with pytest.raises(CurveDomainError, match=r"\(p\+1\)/\(p-1\)"):
        curve_322(3, 2)
    with pytest.raises(CurveDomainError):
        curve_432(1, 2)


def test_421_inverse_examples():
    assert phi_inv("C421", {}, point(3, 108)) == 1
    assert phi_inv("C421", {}, point(3, -108)) == -1
    for pt in (point(-33, 0), point(39, 216), point(39, -216)):
        with pytest.raises(ExcludedPointError):
            phi_inv("C421", {}, pt)


def test_421_quartic_points_are_degenerate():
    # every rational point of small height maps to one of the degenerate cubic points
    q = quartic_model("C421").quartic
    for m, w in _quartic_points("C421", {}, rationals_of_height(12)):
        if m == 1:
            continue
        pt = phi("C421", {}, m, w)
        assert pt in DEGENERATE_421
        if pt.X not in (-33, 39):
            assert phi_inv("C421", {}, pt) == m and phi_inv_421_w(pt.X, pt.Y) == w
    assert q(F(-1)) == 0


def _quartic_points(case, params, xs):
    q = quartic_model(case, params).quartic
    for x in xs:
        w = rat_sqrt(q(x)) if q(x) >= 0 else None
        if w is not None:
            yield x, w
            yield x, -w


@pytest.mark.parametrize("case", ["C321", "C421", "C431", "C432"])
def test_phi_round_trip(rng, case):
    checked = 0
    for _ in range(15):
        params, c = ({}, E421) if case == "C421" else _random_params(rng, case)
        xs = fermat_square_point(quartic_model(case, params).quartic, enumerate=True)
        if case == "C421":
            xs = rationals_of_height(6)
        for x, w in _quartic_points(case, params, xs):
            try:
                pt = phi(case, params, x, w)
                assert on_curve(c, pt)
                assert phi_inv(case, params, pt) == x
                checked += 1
            except ExcludedPointError:
                pass
    assert checked


def test_322_inverse_needs_negated_point(rng):
    checked = 0
    for _ in range(15):
        params, c = _random_params(rng, "C322")
        xs = fermat_square_point(quartic_model("C322", params).quartic, enumerate=True)
        for x, w in _quartic_points("C322", params, xs):
            try:
                pt = phi("C322", params, x, w)
                assert on_curve(c, pt)
                assert phi_inv("C322", params, neg(c, pt)) == x
                checked += 1
            except ExcludedPointError:
                pass
    assert checked


def test_phi_rejects_off_quartic():
    with pytest.raises(ValueError):
        phi("C321", {"p": 2}, F(7, 4), 1)


def test_432_round_trip_example():
    pt = phi("C432", {"m": 2, "p": 2}, 1, 11)
    assert pt == point(1728, -241920)
    assert phi_inv("C432", {"m": 2, "p": 2}, pt) == 1


def test_fermat_321_p2():
    q = delta_321(2)
    xs = fermat_square_point(q, enumerate=True)
    assert F(7, 4) in xs
    for x in xs:
        assert rat_sqrt(q(x)) is not None
    # the leading-coefficient branch divides by p(p-2) and is skipped at p = 2
    assert "lead" not in {lbl for lbl, _ in fermat_candidates(q)}


def test_fermat_trivial_square():
    q = QPoly([1, 0, 2, 0, 1])   # (x^2 + 1)^2
    x = fermat_square_point(q)
    assert x is not None and rat_sqrt(q(x)) is not None


def test_fermat_no_branch():
    assert fermat_square_point(QPoly([2, 0, 0, 0, 3])) is None


def test_fermat_recovers_family_parameters(rng):
    for _ in range(10):
        p = rand_rat(rng, 1, 10)
        assert (p * p + p + 1) / (p * p) in fermat_square_point(delta_321(p), enumerate=True)
        params, _ = _random_params(rng, "C432")
        q = quartic_model("C432", params).quartic
        m, p = params["m"], params["p"]
        assert (p * p + 1) / (m * m + 1) in fermat_square_point(q, enumerate=True)


def test_naive_search():
    pts = naive_point_search(E421, 50)
    assert set(pts) == set(DEGENERATE_421)
    assert set(naive_point_search(E421, 1)) <= set(naive_point_search(E421, 2))
    found = naive_point_search(curve_321(2), 100)
    assert point(-84, 1296) in found and point(-84, -1296) in found
    assert found == sorted(found, key=lambda P: (P.X, P.Y))
    with pytest.raises(ValueError):
        naive_point_search(E421, 0)


def test_naive_search_finds_rational_x():
    c = Curve(-2, 1)  # X = 0 and X = 1/4 give squares
    pts = naive_point_search(c, 3)
    assert point(0, 1) in pts
    for P in pts:
        assert on_curve(c, P)


def test_genus2():
    for w in (1, -1):
        assert genus2_membership(1, 0, w)
    for w in (8, -8):
        assert genus2_membership(1, 1, w)
    for m in (1, -1):
        for w in (1, -1):
            assert genus2_membership(2, m, w)
    assert not genus2_membership(2, 2, 5)


def test_genus2_rejects_random(rng):
    for _ in range(1000):
        m, w = rand_rat(rng, -20, 20), rand_rat(rng, -50, 50)
        if (m, abs(w)) in ((0, 1), (1, 8)):
            continue
        assert not genus2_membership(1, m, w)
