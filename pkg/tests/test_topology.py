import random

import pytest
import sympy
from hypothesis import given, strategies as st

from jordanorder.chart import Finite, Infinity
from jordanorder.cyclic import Interval, in_R
from jordanorder.errors import EqualPoints, UnsupportedSize
from jordanorder.jordan import Scalar, Sym, dual_ext, tangent_join
from jordanorder.reports import SampleSpec
from jordanorder.rings import Q, rational
from jordanorder.topology import (
    charpoly, interval_catalog, sample_spectral, separating_intervals, spectral_ball_check,
    spectrum_in_unit_interval, sturm_count, tangent_fiber_inseparability,
)

S = Scalar(Q)


def F(v, alg=S):
    return Finite(alg.elem([rational(v)]))


def test_separation_examples():
    cat = interval_catalog([F(-1), F(1), F(4), F(6)])
    found = separating_intervals(F(0), F(5), cat)
    assert (Interval(F(-1), F(1)), Interval(F(4), F(6))) in found
    inf = Infinity(S)
    assert in_R(F(1), inf, F(-1))
    found = separating_intervals(F(0), inf, interval_catalog([F(-1), F(1)]))
    assert found == [(Interval(F(-1), F(1)), Interval(F(1), F(-1)))]
    with pytest.raises(EqualPoints):
        separating_intervals(F(0), F(0), cat)


def test_tangent_fibre_examples():
    alg = dual_ext(S)
    o, inf = Finite(alg.zero()), Infinity(alg)
    p = Finite(tangent_join(alg, S.elem([1]), S.elem([3])))
    q = Finite(tangent_join(alg, S.elem([1]), S.elem([-7])))
    assert in_R(o, p, inf) and in_R(o, q, inf)
    pts = [Finite(alg.elem([v])) for v in (-2, -1, 0, 2, 3)] + [inf]
    assert separating_intervals(p, q, interval_catalog(pts), pts) == []


@pytest.mark.parametrize("base", [S, Sym(2)], ids=str)
def test_fibre_inseparability(base):
    rep = tangent_fiber_inseparability(base, SampleSpec(0, 300, 8))
    assert rep.ok, rep.to_text()


def test_spectral_examples():
    alg = Sym(2)
    assert spectrum_in_unit_interval(alg.matrix(alg.zero()))
    assert spectrum_in_unit_interval(alg.matrix(alg.elem(["1/2", 0, "-3/4"])))
    x = alg.elem([0, 1, 0])
    assert not spectrum_in_unit_interval(alg.matrix(x))
    e = alg.unit()
    assert not in_R(Finite(-1 * e), Finite(x), Finite(e))
    p = charpoly(alg.matrix(x))
    assert sturm_count(p, rational(-1), rational(1)) == 1  # the root 1 lies in (−1, 1]
    assert sturm_count(p) == 2


def _sympy_poly(coeffs):
    t = sympy.Symbol("t")
    return sympy.Poly(sum(sympy.Rational(str(c)) * t ** k for k, c in enumerate(coeffs)), t), t


def test_charpoly_and_sturm_against_sympy():
    rng = random.Random(4)
    for n in (2, 3):
        alg = Sym(n)
        for _ in range(40):
            x = sample_spectral(alg, rng, 6)
            M = alg.matrix(x)
            sp = sympy.Matrix([[sympy.Rational(str(c)) for c in row] for row in M])
            poly, t = _sympy_poly(charpoly(M))
            assert poly == sp.charpoly(t)
            roots = set(sympy.real_roots(poly))
            assert sturm_count(charpoly(M)) == len(roots)
            inside = sum(1 for z in roots if -1 < z < 1)
            assert spectrum_in_unit_interval(M) == (len(roots) == inside and all(
                -1 < z < 1 for z in sympy.real_roots(poly)))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(-4, 4), st.integers(1, 5))
def test_sturm_counts_match_sympy_intervals(roots, lo, width):
    t = sympy.Symbol("t")
    poly = sympy.Poly(sympy.prod([t - z for z in roots]), t)
    coeffs = [rational(str(c)) for c in reversed(poly.all_coeffs())]
    hi = lo + width
    expect = len({z for z in roots if lo < z <= hi})
    assert sturm_count(coeffs, rational(lo), rational(hi)) == expect


@pytest.mark.parametrize("n", [1, 2, 3])
def test_spectral_ball(n):
    rep = spectral_ball_check(n, SampleSpec(0, 200, 8))
    assert rep.ok, rep.to_text()
    assert rep.checks[0].nontrivial > 10


def test_spectral_size_limit():
    with pytest.raises(UnsupportedSize):
        spectral_ball_check(4)


def test_sturm_with_repeated_root_at_endpoint():
    # t (t + 1)^2, endpoint −1 is a double root
    p = [rational(c) for c in (0, 1, 2, 1)]
    assert sturm_count(p, rational(-1), rational(0)) == 1
    assert sturm_count(p, rational(-2), rational(-1)) == 1
    assert sturm_count(p) == 2
