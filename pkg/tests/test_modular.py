"""Eisenstein series, the discriminant, and the weight-graded ring relation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genera import modular


def test_e4_expansion():
    e = modular.e4(4)
    assert [e.coeff(n) for n in range(5)] == [1, 240, 2160, 6720, 17520]
    assert e.weight2 == 8


def test_e6_expansion():
    e = modular.e6(4)
    assert [e.coeff(n) for n in range(5)] == [1, -504, -16632, -122976, -532728]
    assert e.weight2 == 12


def test_delta_expansion():
    d = modular.delta(6)
    # tau(n): 1, -24, 252, -1472, 4830, -6048
    assert [d.coeff(n) for n in range(7)] == [0, 1, -24, 252, -1472, 4830, -6048]
    assert d.weight2 == 24
    assert modular.eta24(6).series == d.series


def test_ring_relation():
    assert modular.verify_ring_relation(10)


def test_weight_bookkeeping():
    e4 = modular.e4(3)
    e6 = modular.e6(3)
    assert (e4 * e6).weight2 == 20
    assert (e4**3).weight2 == 24
    with pytest.raises(ValueError):
        e4 + e6  # mismatched weights do not add


@given(st.integers(min_value=1, max_value=30))
def test_eisenstein_divisor_sums(n):
    def sigma(k):
        return sum(d**k for d in range(1, n + 1) if n % d == 0)

    assert modular.e4(n).coeff(n) == 240 * sigma(3)
    assert modular.e6(n).coeff(n) == -504 * sigma(5)


def test_scalar_multiplication():
    d = modular.delta(4)
    t = 1728 * d
    assert t.coeff(1) == 1728
    assert t.weight2 == 24
