import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from jordanorder.errors import DescriptorMismatch, NoOrder, NotInvertible
from jordanorder.reports import SampleSpec
from jordanorder.rings import (
    Dual, DualQ, Gauss, GaussQ, Q, TrivialNOrder, ZInt, check_por_axioms, format_rational,
    rational, ring_add, ring_from_json, ring_invert, ring_is_positive, ring_mul, ring_neg,
    ring_to_json,
)

from conftest import r

rationals = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 50)).map(rational)


def test_rational_parsing_and_format():
    assert rational("-3/6") == rational(-1) / 2
    assert format_rational(rational("4/2")) == "2"
    assert format_rational(rational("-1/2")) == "-1/2"
    with pytest.raises(ValueError):
        rational("1/0")
    with pytest.raises(TypeError):
        rational(True)


def test_dual_product_example():
    # (2+3ε)(1/2−3/4ε) = 1 + (−3/2 + 3/2)ε
    p = ring_mul(DualQ, Dual(r(2), r(3)), Dual(r("1/2"), r("-3/4")))
    assert DualQ.equal(p, DualQ.one)


def test_gauss_i_squared():
    i = Gauss(r(0), r(1))
    assert GaussQ.equal(ring_mul(GaussQ, i, i), ring_neg(GaussQ, GaussQ.one))


def test_additive_identity():
    for R, a in ((Q, r("7/3")), (DualQ, Dual(r(1), r(-2))), (GaussQ, Gauss(r(2), r(5)))):
        assert R.equal(ring_add(R, R.zero, a), a)


def test_positivity_examples():
    assert ring_is_positive(Q, r("3/2"))
    assert ring_is_positive(DualQ, Dual(r(1), r(-5)))
    assert not ring_is_positive(TrivialNOrder, r("1/2"))
    assert ring_is_positive(TrivialNOrder, r(3))
    with pytest.raises(NoOrder):
        ring_is_positive(GaussQ, GaussQ.one)


def test_inverse_examples():
    inv = ring_invert(DualQ, Dual(r(2), r(3)))
    assert DualQ.equal(inv, Dual(r("1/2"), r("-3/4")))
    with pytest.raises(NotInvertible):
        ring_invert(DualQ, Dual(r(0), r(1)))
    with pytest.raises(NotInvertible):
        ring_invert(ZInt, r(2))
    assert ring_invert(ZInt, r(-1)) == -1


def test_gauss_inverse_against_sympy():
    z = Gauss(r(3), r(-4))
    w = ring_invert(GaussQ, z)
    expect = 1 / (sympy.Integer(3) - 4 * sympy.I)
    assert sympy.Rational(str(w.re)) == sympy.re(expect)
    assert sympy.Rational(str(w.im)) == sympy.im(expect)


def test_por_suite_on_q():
    rep = check_por_axioms(Q, SampleSpec(0, 1000, 10))
    assert rep.ok, rep.to_text()


def test_por_suite_on_dual():
    assert check_por_axioms(DualQ, SampleSpec(1, 300, 10)).ok


def test_negative_controls_have_witnesses():
    t = check_por_axioms(TrivialNOrder)
    assert not t["square-order"].passed and t["square-order"].witness
    assert [c.name for c in t.failures] == ["square-order"]
    z = check_por_axioms(ZInt)
    assert not z["inverse-por"].passed
    assert z["inverse-por"].witness == {"a": "2"}


def test_ring_json_round_trip():
    for R in (Q, ZInt, TrivialNOrder, DualQ, GaussQ):
        assert ring_from_json(ring_to_json(R)) == R
    assert DualQ.from_json({"re": "1/2", "eps": "-3"}) == Dual(r("1/2"), r(-3))
    assert GaussQ.from_json({"re": "0", "im": "1"}) == Gauss(r(0), r(1))
    with pytest.raises(DescriptorMismatch):
        ring_from_json("R")


def test_ring_mixing_rejected():
    with pytest.raises(DescriptorMismatch):
        ring_add(Q, Dual(r(1), r(0)), r(1))


@given(rationals, rationals, rationals, rationals)
def test_dual_ring_laws(a, b, c, d):
    x, y = Dual(a, b), Dual(c, d)
    assert DualQ.equal(x * y, y * x)
    assert DualQ.equal(x * (x + y), x * x + x * y)
    if a != 0:
        assert DualQ.equal(x * ring_invert(DualQ, x), DualQ.one)


@given(rationals, rationals, rationals, rationals)
def test_dual_order_is_lexicographic_on_leading_part(a, b, c, d):
    # positivity only reads the ε-free coordinate
    assert ring_is_positive(DualQ, Dual(a, b)) == (a > 0)
    assert ring_is_positive(DualQ, Dual(a, b)) == ring_is_positive(DualQ, Dual(a, d))


def test_sampling_is_deterministic():
    a = [Q.sample(random.Random(5), 10) for _ in range(20)]
    b = [Q.sample(random.Random(5), 10) for _ in range(20)]
    assert a == b
