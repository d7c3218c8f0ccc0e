import math

import pytest

from gl2aut.curves import (INFINITY, AffinePoint, LPoly, class_data, cs_order,
                           curve_from_json, curve_from_text, curve_to_json,
                           ell_count, enumerate_points, group_structure,
                           lpoly_from_count, point_add, point_mul, point_neg,
                           point_order, two_torsion_count)

SUPERSINGULAR_F2 = "q=2;y2+y=x3"
ANISOTROPIC_F2 = "q=2;y2+y=x3+x+1"


def brute_points(curve):
    pts = [INFINITY]
    for x in curve.field.elements():
        for y in curve.field.elements():
            lhs = y * y + curve.a1 * x * y + curve.a3 * y
            rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6
            if lhs == rhs:
                pts.append(AffinePoint(x, y))
    return pts


@pytest.mark.parametrize("spec,count", [
    (SUPERSINGULAR_F2, 3),
    (ANISOTROPIC_F2, 1),
    ("q=2;y2+y=x3+x", 5),
    ("q=3;y2=x3+2x+1", 7),
    ("q=4;y2+y=x3", 9),
])
def test_point_enumeration_matches_brute_force(spec, count):
    curve = curve_from_text(spec)
    pts = enumerate_points(curve)
    assert len(pts) == count
    brute = brute_points(curve)
    assert len(brute) == count
    assert set(pts[1:]) == set(brute[1:])
    assert pts[0] is INFINITY


def test_singular_curves_are_rejected():
    for bad in ("q=2;y2=x3", "q=3;y2=x3", "q=5;y2=x3+x2"):
        with pytest.raises(ValueError):
            curve_from_text(bad)


def test_curve_text_parsing_errors():
    for bad in ("y2=x3+1", "q=6;y2=x3+1", "q=2;y2=x4", "q=2;nonsense"):
        with pytest.raises(ValueError):
            curve_from_text(bad)


def test_curve_json_roundtrip():
    curve = curve_from_text("q=3;y2=x3+2x+1")
    again = curve_from_json(curve_to_json(curve))
    assert enumerate_points(again) == enumerate_points(curve)
    assert again.field.q == 3


def test_group_law_basics():
    curve = curve_from_text("q=3;y2=x3+2x+1")
    pts = enumerate_points(curve)
    for p in pts:
        assert point_add(curve, p, INFINITY) == p
        assert point_add(curve, p, point_neg(curve, p)) is INFINITY
    # commutativity and associativity on all triples of this small group
    for p in pts:
        for r in pts:
            assert point_add(curve, p, r) == point_add(curve, r, p)
            for s in pts:
                left = point_add(curve, point_add(curve, p, r), s)
                right = point_add(curve, p, point_add(curve, r, s))
                assert left == right


def test_point_orders_divide_group_order():
    curve = curve_from_text("q=5;y2=x3+x+1")
    pts = enumerate_points(curve)
    n = len(pts)
    for p in pts:
        k = point_order(curve, p)
        assert n % k == 0
        assert point_mul(curve, k, p) is INFINITY
    assert math.prod(group_structure(curve, pts)) == n


def test_two_torsion_counts():
    # number of solutions of 2P = infinity, identity included
    assert two_torsion_count(curve_from_text(SUPERSINGULAR_F2)) == 1
    assert two_torsion_count(curve_from_text(ANISOTROPIC_F2)) == 1
    # y^2 = x^3 + x over F_5 has full two-torsion: x^3 + x splits
    assert two_torsion_count(curve_from_text("q=5;y2=x3+x")) == 4
    assert group_structure(curve_from_text("q=5;y2=x3+x")) == [2, 2]


def test_lpoly_construction_and_hasse_bound():
    lp = lpoly_from_count(3, 2)
    assert lp.coeffs == (1, 0, 2)
    assert lp.genus == 1
    assert lp(1) == 3 and lp(-1) == 3
    with pytest.raises(ValueError):
        lpoly_from_count(9, 2)  # too many points for q = 2
    with pytest.raises(ValueError):
        LPoly((2, 0, 1))  # constant coefficient must be 1


def test_ell_count_is_l_at_minus_one():
    assert ell_count(lpoly_from_count(3, 2)) == 3
    assert ell_count(lpoly_from_count(1, 2)) == 5
    assert ell_count(lpoly_from_count(5, 2)) == 1


def test_class_data_for_the_two_benchmark_curves():
    c1 = curve_from_text(SUPERSINGULAR_F2)
    pts1 = enumerate_points(c1)
    cd1 = class_data(lpoly_from_count(len(pts1), 2), c1, pts1)
    assert (cd1.h, cd1.cl2, cd1.r) == (3, 1, 1)
    assert cd1.ell_eq == 1 and cd1.ell_neq == 2

    c2 = curve_from_text(ANISOTROPIC_F2)
    pts2 = enumerate_points(c2)
    cd2 = class_data(lpoly_from_count(len(pts2), 2), c2, pts2)
    assert (cd2.h, cd2.cl2, cd2.r) == (1, 1, 2)
    assert cd2.ell_eq == 1 and cd2.ell_neq == 4


def test_class_data_identity_on_a_sweep():
    # cl2 + 2 r = L(-1) across assorted nonsingular curves
    specs = ["q=2;y2+y=x3", "q=2;y2+y=x3+x", "q=2;y2+y=x3+x+1",
             "q=3;y2=x3+2x+1", "q=3;y2=x3+x+2", "q=5;y2=x3+x+1",
             "q=4;y2+y=x3", "q=5;y2=x3+x"]
    for spec in specs:
        curve = curve_from_text(spec)
        pts = enumerate_points(curve)
        lp = lpoly_from_count(len(pts), curve.field.q)
        cd = class_data(lp, curve, pts)
        assert cd.cl2 + 2 * cd.r == lp(-1)
        assert cd.h == len(pts)
        assert cd.ell_eq + cd.ell_neq == lp(-1)


def test_class_data_genus_zero():
    cd = class_data(LPoly((1,)))
    assert (cd.h, cd.cl2, cd.r) == (1, 1, 0)


def test_class_data_rejects_mismatched_count():
    curve = curve_from_text(SUPERSINGULAR_F2)
    with pytest.raises(ValueError):
        class_data(lpoly_from_count(5, 2), curve)


def test_cs_order_values():
    assert cs_order(0, 2) == 1
    assert cs_order(1, 2) == 2
    assert cs_order(2, 2) == 8
    assert cs_order(3, 2) == 48
    assert cs_order(1, 3) == 4
    assert cs_order(2, 3) == 32
    with pytest.raises(ValueError):
        cs_order(-1, 2)
