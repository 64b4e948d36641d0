import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from jordanorder.chart import Finite, GroupWord, Infinity, Jinv, Neg, Quad, Trans, apply_word
from jordanorder.cyclic import (
    ChartModel, Interval, check_compression, check_interval_convexity,
    check_invariance_and_reversal, check_pco_axioms, check_quadruple_lemma, closed_interval_contains,
    in_R, induced_less, interval_contains, is_cyclic_quadruple, quadruple_conditions,
)
from jordanorder.errors import DescriptorMismatch
from jordanorder.jordan import Product, Scalar, Spin, Sym, dual_ext
from jordanorder.reports import SampleSpec
from jordanorder.rings import Q, rational

from conftest import r

S = Scalar(Q)
INF = Infinity(S)


def F(*cs, alg=S):
    return Finite(alg.elem(list(cs)))


def circle_oracle(a, x, b):
    """Counter-clockwise betweenness on Q ∪ {∞}, with ∞ read as the top of the line."""
    key = lambda p: (1, 0) if isinstance(p, Infinity) else (0, p.v.coords[0])
    ka, kx, kb = key(a), key(x), key(b)
    if len({ka, kx, kb}) < 3:
        return False
    return ka < kx < kb or kx < kb < ka or kb < ka < kx


def sympy_oracle(a, x, b, n):
    """Sym(n) relation by explicit matrix normalization in sympy."""
    M = lambda p: sympy.Matrix(n, n, lambda i, j: sympy.Rational(str(Sym(n).matrix(p.v)[i][j])))
    pts = [a, x, b]
    for p, q in ((a, x), (x, b), (a, b)):
        if isinstance(p, Infinity) and isinstance(q, Infinity):
            return False
        if not isinstance(p, Infinity) and not isinstance(q, Infinity) and (M(p) - M(q)).det() == 0:
            return False
    if isinstance(b, Infinity):
        d = M(x) - M(a)
    elif isinstance(a, Infinity):
        d = M(b) - M(x)
    elif isinstance(x, Infinity):
        d = M(a) - M(b)
    else:
        phi = lambda p: -(M(p) - M(b)).inv()
        d = phi(x) - phi(a)
    return d.is_positive_definite


def test_relation_examples():
    for alg in (S, Sym(2), Spin(3), Product((S, S))):
        assert in_R(Finite(alg.zero()), Finite(alg.unit()), Infinity(alg))
    assert in_R(F(1), F(2), F(-1))
    assert not in_R(F(1), F(0), F(-1))
    assert in_R(F(0), F(2), F(-1))


def test_normalizer_values():
    # φ(v) = −(v+1)⁻¹ for b = −1
    phi = GroupWord((Trans(S.elem([1])), Neg(), Jinv()))
    assert apply_word(phi, F(1)) == F(r("-1/2"))
    assert apply_word(phi, F(2)) == F(r("-1/3"))
    assert apply_word(phi, F(0)) == F(-1)


def test_interval_examples():
    o, e = F(0), F(1)
    assert interval_contains(Interval(o, INF), e)
    assert closed_interval_contains(Interval(o, INF), o)
    assert not interval_contains(Interval(o, INF), o)
    I = Sym(2).unit()
    assert interval_contains(Interval(Finite(Sym(2).zero()), Finite(2 * I)), Finite(I))


def test_quadruple_examples():
    assert is_cyclic_quadruple(F(0), F(1), F(2), INF)
    assert not is_cyclic_quadruple(F(0), F(2), F(1), INF)
    assert is_cyclic_quadruple(F(0), F(1), INF, F(-1), verify=True)
    assert quadruple_conditions(F(0), F(1), INF, F(-1)) == (True, True, True)


def test_induced_order_examples():
    assert induced_less(INF, F(1), F(2))
    assert in_R(F(0), F(2), F(-1))
    for p in (F(0), F(3), INF):
        assert not induced_less(F(7), p, p)


def test_mixed_algebras_rejected():
    with pytest.raises(DescriptorMismatch):
        in_R(F(0), Finite(Sym(2).unit()), INF)


points = st.one_of(st.just(None), st.builds(Fraction, st.integers(-40, 40), st.integers(1, 8)))


def mk(v):
    return INF if v is None else F(rational(v))


@given(points, points, points)
def test_scalar_relation_is_the_circle_order(a, x, b):
    a, x, b = mk(a), mk(x), mk(b)
    assert in_R(a, x, b) == circle_oracle(a, x, b)


def test_sym_relation_matches_sympy_normalization():
    rng = random.Random(8)
    for n in (2, 3):
        alg = Sym(n)
        m = ChartModel(alg)
        for _ in range(60):
            t = [m.random_point(rng, 4) for _ in range(3)]
            assert in_R(*t) == sympy_oracle(*t, n)


def test_product_relation_is_componentwise():
    P = Product((S, S))
    rng = random.Random(4)
    for _ in range(200):
        cs = [[Q.sample(rng, 5) for _ in range(2)] for _ in range(3)]
        pts = [Finite(P.elem(c)) for c in cs]
        comp = all(in_R(*(F(c[i]) for c in cs)) for i in range(2))
        assert in_R(*pts) == comp


@given(points, points, points)
def test_cyclicity_and_asymmetry_property(a, x, b):
    a, x, b = mk(a), mk(x), mk(b)
    r_ = in_R(a, x, b)
    assert r_ == in_R(x, b, a)
    assert not (r_ and in_R(b, x, a))


INSTANCES = [S, Sym(2), Spin(3), Product((S, S)), dual_ext(S)]


@pytest.mark.parametrize("alg", INSTANCES, ids=str)
def test_order_suites_small(alg):
    spec = SampleSpec(3, 300, 8)
    for check in (check_pco_axioms, check_invariance_and_reversal, check_interval_convexity,
                  check_compression, check_quadruple_lemma):
        rep = check(alg, spec)
        assert rep.ok, rep.to_text()


def test_suites_are_nonvacuous():
    rep = check_pco_axioms(Sym(2), SampleSpec(0, 500, 8))
    assert rep["transitivity"].nontrivial > 100
    assert rep["cyclicity"].nontrivial > 100


def test_invariance_examples():
    a, x, b = F(0), F(1), INF
    assert in_R(a, x, b)
    t = GroupWord((Trans(S.elem([5])),))
    assert in_R(*(apply_word(t, p) for p in (a, x, b)))
    n = GroupWord((Neg(),))
    ia, ix, ib = (apply_word(n, p) for p in (a, x, b))
    assert ix == F(-1)
    assert in_R(ib, ix, ia) and not in_R(ia, ix, ib)
    alg = Sym(2)
    y = alg.elem([1, 2, 1])
    q = GroupWord((Quad(y),))
    o, e = Finite(alg.zero()), Finite(alg.unit())
    assert in_R(*(apply_word(q, p) for p in (o, e, Infinity(alg))))


def test_convexity_and_compression_examples():
    assert interval_contains(Interval(F(0), INF), F(2))
    assert interval_contains(Interval(F(1), F(3)), F(2))
    g = GroupWord((Trans(S.unit()),))
    for v in (r("1/3"), 2, 100):
        assert in_R(F(0), apply_word(g, F(v)), INF)
    alg = Sym(2)
    g2 = GroupWord((Trans(alg.unit()),))
    rng = random.Random(0)
    for _ in range(50):
        x = Finite(alg.sample_cone(rng, 8))
        assert in_R(Finite(alg.zero()), apply_word(g2, x), Infinity(alg))
