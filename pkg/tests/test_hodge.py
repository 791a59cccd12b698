"""Hodge-number elimination for the hyperkaehler genus ansatz."""

from fractions import Fraction

import pytest

from genera import hodge
from genera.hodge import AffineExpr


# ---------------------------------------------------------------- AffineExpr


def test_affine_construction():
    e = AffineExpr.build(3, {"x": 2, "y": 0})
    assert e.constant == 3
    assert e.terms == (("x", Fraction(2)),)  # zero coefficients pruned
    assert e.names == ("x",)
    assert e.coeff("x") == 2
    assert e.coeff("missing") == 0
    assert AffineExpr.const(0).is_zero
    assert not AffineExpr.var("x").is_zero


def test_affine_arithmetic():
    x, y = AffineExpr.var("x"), AffineExpr.var("y")
    e = x.scale(2) + y - AffineExpr.const(5)
    assert e == AffineExpr.build(-5, {"x": 2, "y": 1})
    assert (e - e).is_zero
    assert -e == e.scale(-1)
    assert e.evaluate({"x": 4, "y": 1}) == 4
    with pytest.raises(hodge.HodgeError):
        e.evaluate({"x": 4})


def test_affine_normalized():
    e = AffineExpr.build(Fraction(1, 2), {"x": Fraction(-3, 2), "y": 3})
    n = e.normalized()
    # primitive integer coefficients, positive leading term
    assert n == AffineExpr.build(-1, {"x": 3, "y": -6})
    assert AffineExpr.const(0).normalized().is_zero
    assert AffineExpr.const(-6).normalized() == AffineExpr.const(1)


def test_affine_str():
    assert str(AffineExpr.const(0)) == "0"
    assert str(AffineExpr.var("h11")) == "h11"
    assert str(AffineExpr.var("h11", -1)) == "-h11"
    assert str(AffineExpr.build(64, {"h11": 8, "h12": -2, "h22": -1})) == (
        "8*h11 - 2*h12 - h22 + 64"
    )
    assert str(AffineExpr.build(-4, {"x": 1})) == "x - 4"


# ---------------------------------------------------------------- entries


def test_hodge_entry_edges():
    # p = 0 edge: 1 in even columns, 0 in odd ones
    assert [hodge.hodge_entry(2, 0, q) for q in range(5)] == [1, 0, 1, 0, 1]
    assert hodge.hodge_entry(2, 4, 0) == 1
    assert hodge.hodge_entry(2, 3, 4) == 0


def test_hodge_entry_orbit_collapse():
    assert hodge.hodge_entry(2, 1, 1) == "h11"
    assert hodge.hodge_entry(2, 1, 3) == "h11"
    assert hodge.hodge_entry(2, 3, 3) == "h11"
    assert hodge.hodge_entry(2, 2, 1) == "h12"
    assert hodge.hodge_entry(2, 3, 2) == "h12"
    assert hodge.hodge_entry(2, 2, 2) == "h22"
    for p in range(5):
        for q in range(5):
            assert hodge.hodge_entry(2, p, q) == hodge.hodge_entry(2, q, p)
            assert hodge.hodge_entry(2, p, q) == hodge.hodge_entry(2, 4 - p, 4 - q)


def test_hodge_entry_range():
    with pytest.raises(hodge.HodgeError):
        hodge.hodge_entry(2, 5, 0)
    with pytest.raises(hodge.HodgeError):
        hodge.hodge_entry(2, 0, -1)


def test_cp_expr():
    assert hodge.cp_expr(2, 0) == AffineExpr.const(3)
    assert hodge.cp_expr(2, 1) == AffineExpr.build(0, {"h11": 2, "h12": -1})
    assert hodge.cp_expr(2, 2) == AffineExpr.build(2, {"h12": -2, "h22": 1})
    assert hodge.cp_expr(2, 3) == hodge.cp_expr(2, 1)
    assert hodge.cp_expr(2, 4) == hodge.cp_expr(2, 0)


# ---------------------------------------------------------------- ansatz


def test_ansatz_pins_leading_coefficient():
    assert hodge.hk_ansatz(2).q0_coeff(4) == AffineExpr.const(3)
    assert hodge.hk_ansatz(3).q0_coeff(6) == AffineExpr.const(4)


def test_ansatz_ev_is_euler():
    # y = 1 evaluation of the ansatz collapses to the Euler unknown alone
    assert hodge.hk_ansatz(2).ev_expr() == AffineExpr.var("Euler")
    assert hodge.hk_ansatz(3).ev_expr() == AffineExpr.var("Euler")


def test_ansatz_only_known_cases():
    with pytest.raises(hodge.HodgeError):
        hodge.hk_ansatz(4)
    with pytest.raises(hodge.HodgeError):
        hodge.hk_ansatz(1)


# ---------------------------------------------------------------- systems


def test_k2_equations():
    sys2 = hodge.hk_match(2)
    assert sys2.unknowns == ("h11", "h12", "h22", "Euler")
    assert [str(e.normalized()) for e in sys2.equations] == [
        "Euler - 12*h11 + 6*h12 - 72",
        "2*Euler + 6*h12 - 3*h22 + 48",
        "Euler - 4*h11 + 4*h12 - h22 - 8",
    ]
    # the total-Euler equation is dependent on the two coefficient matches
    dep = sys2.equations[2] - sys2.equations[0].scale(2) - sys2.equations[1]
    assert dep.is_zero
    assert sys2.parities == ((AffineExpr.var("h12"), 2),)


def test_k2_euler_elimination():
    rels = hodge.hk_match(2).eliminate("Euler")
    assert len(rels) == 1
    assert str(rels[0]) == "8*h11 - 2*h12 - h22 + 64"
    assert rels[0] == AffineExpr.build(64, {"h11": 8, "h12": -2, "h22": -1}).normalized()


def test_k3_equations():
    sys3 = hodge.hk_match(3)
    assert sys3.unknowns == ("h11", "h12", "h13", "h22", "h23", "h33", "Euler", "A")
    assert len(sys3.equations) == 4
    assert str(sys3.equations[0].normalized()) == "A - 2*h11 + 2*h12 - h13 + 120"
    assert sys3.parities[1] == (AffineExpr.var("h12") + AffineExpr.var("h23"), 2)


def test_k3_middle_elimination():
    rels = hodge.hk_match(3).eliminate("A", indices=(1, 2))
    assert [str(r) for r in rels] == [
        "7*Euler + 24*h12 - 16*h13 - 24*h22 + 28*h23 - 8*h33 + 56"
    ]


def test_eliminate_absent_name_returns_input():
    sys2 = hodge.hk_match(2)
    assert sys2.eliminate("h13") == sys2.equations


# ---------------------------------------------------------------- solutions


def _k2_point(h11, h12):
    # two-parameter solution family of the k = 2 equations
    return {
        "h11": h11,
        "h12": h12,
        "h22": 8 * h11 - 2 * h12 + 64,
        "Euler": 72 + 12 * h11 - 6 * h12,
    }


def test_witness_accepted():
    sys2 = hodge.hk_match(2)
    assert sys2.check({"h11": 21, "h12": 0, "h22": 232, "Euler": 324})
    assert _k2_point(21, 0)["h22"] == 232


def test_perturbed_witnesses_rejected():
    sys2 = hodge.hk_match(2)
    assert not sys2.check({"h11": 21, "h12": 0, "h22": 233, "Euler": 324})
    assert not sys2.check({"h11": 21, "h12": 0, "h22": 232, "Euler": 336})
    assert not sys2.check({"h11": 23, "h12": 0, "h22": 276, "Euler": 324})


def test_parity_rejects_separately():
    sys2 = hodge.hk_match(2)
    odd = _k2_point(21, 1)
    # every equation holds, only the parity constraint fails
    assert all(eq.evaluate(odd) == 0 for eq in sys2.equations)
    assert not sys2.check(odd)


def test_family_euler_divisibility():
    sys2 = hodge.hk_match(2)
    for h11 in range(-3, 9):
        for h12 in range(-4, 5, 2):
            point = _k2_point(h11, h12)
            assert sys2.check(point)
            assert point["Euler"] % 12 == 0


def test_divisibility_constants():
    assert hodge.hk_divisibility(2) == 12
    assert hodge.hk_divisibility(2, use_parity=False) == 6
    assert hodge.hk_divisibility(3) == 8
    assert hodge.hk_divisibility(3, use_parity=False) == 4


def test_hk_match_unsupported():
    with pytest.raises(hodge.HodgeError):
        hodge.hk_match(5)
