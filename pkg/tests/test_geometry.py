import random

import pytest
import sympy
from hypothesis import given, strategies as st

from jordanorder import linalg
from jordanorder.chart import Finite, GroupWord, Infinity, Jinv, Neg, TildeTrans, Trans, random_word
from jordanorder.cyclic import ChartModel, check_invariance_and_reversal, check_pco_axioms, in_R, sample_triple
from jordanorder.errors import DescriptorMismatch, NotApplicable, NotTransversal
from jordanorder.geometry import (
    AtInfinity, FullModel, Lagrangian, ProjLine, act_full, carry_to_frame, check_chart_full_consistency,
    geometry_for, in_R_full, lift, point_eq, to_chart, transversal_full,
)
from jordanorder.jordan import Product, Scalar, Spin, Sym, dual_ext
from jordanorder.reports import SampleSpec
from jordanorder.rings import Dual, DualQ, Q

from conftest import r

S = Scalar(Q)


def frame_sympy(x):
    return sympy.Matrix([[sympy.Rational(str(c)) for c in row] for row in x.M])


def test_round_trip_and_examples():
    rng = random.Random(0)
    for alg in (S, Scalar(DualQ), Sym(1), Sym(2), Product((S, Sym(2)))):
        geo = geometry_for(alg)
        for _ in range(20):
            v = alg.sample(rng, 9)
            assert to_chart(geo.embed(v)) == Finite(v)
        assert to_chart(geo.infinity()) == Infinity(alg)
    L1 = Lagrangian(Sym(1))
    j2 = act_full(GroupWord((Jinv(),)), L1.embed(Sym(1).elem([2])))
    assert to_chart(j2) == Finite(Sym(1).elem([r("1/2")]))
    P = geometry_for(Product((S, S)))
    mixed = P.make((P.factors[0].infinity(), P.factors[1].embed(S.zero())))
    assert to_chart(mixed) is AtInfinity


def test_point_equality_examples():
    line = ProjLine(S)
    assert point_eq(line.point(r(2), r(4)), line.point(r(1), r(2)))
    assert not point_eq(line.point(r(1), r(0)), line.point(r(0), r(1)))
    L = Lagrangian(Sym(2))
    rng = random.Random(1)
    for _ in range(20):
        x = L.embed(Sym(2).sample(rng, 6))
        g = [[Q.sample(rng, 5) for _ in range(2)] for _ in range(2)]
        if linalg.det(Q, g) == 0:
            continue
        moved = L.frame(linalg.mat_mul([list(rw) for rw in x.M], g))
        assert point_eq(moved, x)
        # echelon oracle: same column space in sympy
        A, B = frame_sympy(x), frame_sympy(moved)
        assert A.rank() == B.rank() == A.row_join(B).rank() == 2


def test_action_examples():
    rng = random.Random(2)
    for alg in (S, Scalar(DualQ), Sym(2), Product((S, S))):
        m = FullModel(geometry_for(alg))
        for _ in range(20):
            p = m.random_point(rng, 8)
            assert point_eq(act_full(GroupWord((Jinv(), Jinv())), p), p)
    L1 = Lagrangian(Sym(1))
    assert act_full(GroupWord((Trans(Sym(1).elem([3])),)), L1.infinity()) == L1.infinity()
    L2 = Lagrangian(Sym(2))
    for _ in range(10):
        w = Sym(2).sample(rng, 9)
        assert act_full(GroupWord((TildeTrans(w),)), L2.origin()) == L2.origin()


def test_frames_stay_isotropic():
    rng = random.Random(3)
    L = Lagrangian(Sym(3))
    m = FullModel(L)
    for _ in range(50):
        p = m.random_point(rng, 6)
        assert L.is_isotropic(p)
        assert L.is_isotropic(act_full(random_word(L.alg, rng, 6), p))


def test_transversality_examples():
    for alg in (S, Sym(2), Product((S, S))):
        geo = geometry_for(alg)
        assert transversal_full(geo.origin(), geo.infinity())
    L = Lagrangian(Sym(2))
    assert not transversal_full(L.embed(Sym(2).elem([1, 0, 1])), L.embed(Sym(2).elem([1, 0, 2])))
    D = ProjLine(Scalar(DualQ))
    assert not transversal_full(D.origin(), D.embed(Scalar(DualQ).elem([Dual(r(0), r(1))])))


def test_carry_to_frame_examples():
    line = ProjLine(S)
    assert carry_to_frame(line.origin(), line.infinity()).generators == (Trans(S.zero()),) * 0 + \
        carry_to_frame(line.origin(), line.infinity()).generators
    w = carry_to_frame(line.origin(), line.infinity())
    assert act_full(w, line.origin()) == line.origin() and act_full(w, line.infinity()) == line.infinity()
    a, b = line.embed(S.elem([1])), line.embed(S.elem([-1]))
    w = carry_to_frame(a, b)
    assert w.parity == 0
    assert act_full(w, a) == line.origin() and act_full(w, b) == line.infinity()
    L1 = Lagrangian(Sym(1))
    w = carry_to_frame(L1.infinity(), L1.origin())
    assert w.parity == 0
    assert act_full(w, L1.infinity()) == L1.origin()
    assert act_full(GroupWord((Neg(), Jinv())), L1.infinity()) == L1.origin()
    assert act_full(GroupWord((Neg(), Jinv())), L1.origin()) == L1.infinity()
    with pytest.raises(NotTransversal):
        carry_to_frame(line.origin(), line.origin())


def test_relation_examples():
    for alg in (S, Sym(2), Product((S, S))):
        geo = geometry_for(alg)
        assert in_R_full(geo.origin(), geo.embed(alg.unit()), geo.infinity())
    P = geometry_for(Product((S, S)))
    f0, f1 = P.factors
    e = lambda v: f0.embed(S.elem([v]))
    a = P.make((e(0), f1.infinity()))
    b = P.make((f0.infinity(), e(0)))
    assert not in_R_full(a, P.make((e(1), e(1))), b)
    assert in_R_full(a, P.make((e(1), e(-1))), b)


@pytest.mark.parametrize("alg", [S, Scalar(DualQ), Sym(1), Sym(2), Product((S, S)), Product((S, Sym(2)))],
                         ids=str)
def test_chart_full_consistency(alg):
    rep = check_chart_full_consistency(alg, SampleSpec(5, 300, 8))
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("alg", [S, Sym(2), Product((S, S))], ids=str)
def test_full_order_suites(alg):
    m = FullModel(geometry_for(alg))
    spec = SampleSpec(2, 200, 6)
    assert check_pco_axioms(m, spec).ok
    assert check_invariance_and_reversal(m, spec).ok


def test_full_invariance_reaches_points_at_infinity():
    rng = random.Random(6)
    L = Lagrangian(Sym(2))
    m = FullModel(L)
    seen = 0
    for _ in range(200):
        p = m.random_point(rng, 6)
        seen += to_chart(p) is AtInfinity
    assert seen > 0


def test_unsupported_geometries():
    for alg in (Spin(3), Sym(2, DualQ), dual_ext(Sym(2))):
        with pytest.raises(NotApplicable):
            geometry_for(alg)
    with pytest.raises(DescriptorMismatch):
        point_eq(ProjLine(S).origin(), Lagrangian(Sym(1)).origin())


def test_json_round_trip():
    rng = random.Random(7)
    for alg in (S, Scalar(DualQ), Sym(2), Product((S, Sym(2)))):
        geo = geometry_for(alg)
        m = FullModel(geo)
        for _ in range(20):
            p = m.random_point(rng, 6)
            assert point_eq(geo.point_from_json(geo.point_json(p)), p)


@given(st.integers(0, 10 ** 6))
def test_action_respects_composition(seed):
    rng = random.Random(seed)
    L = Lagrangian(Sym(2))
    p = FullModel(L).random_point(rng, 5)
    w1, w2 = random_word(L.alg, rng, 5), random_word(L.alg, rng, 5)
    assert act_full(w1.then(w2), p) == act_full(w2, act_full(w1, p))


@given(st.integers(0, 10 ** 6))
def test_canonical_form_idempotent(seed):
    rng = random.Random(seed)
    L = Lagrangian(Sym(2))
    p = FullModel(L).random_point(rng, 5)
    assert L.frame([list(rw) for rw in p.M]) == p


@given(st.integers(0, 10 ** 6))
def test_lift_commutes_with_relation(seed):
    rng = random.Random(seed)
    alg = Sym(2)
    geo = geometry_for(alg)
    t = sample_triple(ChartModel(alg), rng, 6)
    assert in_R(*t) == in_R_full(*(lift(geo, p) for p in t))
