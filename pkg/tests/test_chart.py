import random

import pytest
from hypothesis import given, strategies as st

from jordanorder.chart import (
    NEG_INV, Finite, GroupWord, Infinity, Jinv, Neg, Quad, TildeTrans, Trans, apply_generator,
    apply_word, chart_eq, neg_inv, point_from_json, point_to_json, random_word, transversal,
    word_from_json, word_to_json,
)
from jordanorder.errors import DescriptorMismatch, LeavesChart, NotInvertible
from jordanorder.jordan import Product, Scalar, Spin, Sym, dual_ext, jinverse
from jordanorder.rings import Dual, Q

from conftest import r

S = Scalar(Q)


def F(alg, *cs):
    return Finite(alg.elem(list(cs)))


def diag(a, b):
    return Finite(Sym(2).elem([a, 0, b]))


def test_transversality_examples():
    assert transversal(F(S, 0), Infinity(S))
    assert not transversal(F(S, 1), F(S, 1))
    assert not transversal(diag(1, 1), diag(1, 2))
    assert not transversal(Infinity(S), Infinity(S))
    assert transversal(diag(1, 1), diag(2, 3))


def test_inversion_examples():
    assert apply_generator(Jinv(), F(S, 0)) == Infinity(S)
    assert apply_generator(Jinv(), F(S, 2)) == F(S, r("1/2"))
    with pytest.raises(LeavesChart):
        apply_generator(Jinv(), diag(1, 0))


def test_word_examples():
    rng = random.Random(0)
    for alg in (S, Sym(2), Spin(3)):
        for _ in range(10):
            v = alg.sample_invertible(rng, 9)
            assert apply_word(NEG_INV, Finite(v)) == Finite(-jinverse(v))
        p = Finite(alg.sample(rng, 9))
        assert apply_word(GroupWord(), p) == p
        assert apply_word(GroupWord((Trans(alg.sample(rng, 9)),)), Infinity(alg)) == Infinity(alg)


def test_neg_inv_examples():
    assert neg_inv(F(S, 2)) == F(S, r("-1/2"))
    assert neg_inv(Infinity(S)) == F(S, 0)
    eps = Finite(dual_ext(S).elem([Dual(r(0), r(1))]))
    with pytest.raises(LeavesChart):
        neg_inv(eps)


def test_tilde_translation_fixes_origin():
    rng = random.Random(1)
    for alg in (S, Sym(2), Spin(2)):
        o = Finite(alg.zero())
        for _ in range(10):
            w = alg.sample(rng, 9)
            assert apply_generator(TildeTrans(w), o) == o


def test_quad_needs_invertible():
    with pytest.raises(NotInvertible):
        Quad(Sym(2).elem([1, 0, 0]))


def test_words_do_not_mix_algebras():
    with pytest.raises(DescriptorMismatch):
        apply_word(GroupWord((Trans(Sym(2).unit()),)), F(S, 1))


def test_parity_and_inverse():
    w = GroupWord((Trans(S.unit()), Neg(), Jinv(), Quad(S.elem([2]))))
    assert w.parity == 0 and GroupWord((Neg(),)).parity == 1
    p = F(S, 5)
    assert apply_word(w.then(w.inverse()), p) == p


def test_json_round_trip():
    rng = random.Random(2)
    for alg in (S, Sym(2), Product((S, S)), dual_ext(S)):
        for _ in range(10):
            w = random_word(alg, rng, 9)
            assert word_from_json(alg, word_to_json(w)) == w
        for p in (Infinity(alg), Finite(alg.sample(rng, 9))):
            assert chart_eq(point_from_json(alg, point_to_json(p)), p)


@given(st.integers(-20, 20), st.integers(1, 9), st.integers(0, 1))
def test_random_words_have_requested_parity(seed, bound, parity):
    w = random_word(Sym(2), random.Random(seed), bound, parity=parity)
    assert w.parity == parity and 1 <= len(w) <= 6


@given(st.integers(0, 10 ** 6))
def test_word_inverse_undoes_action(seed):
    rng = random.Random(seed)
    alg = Sym(2)
    w = random_word(alg, rng, 6)
    p = Finite(alg.sample(rng, 6))
    try:
        q = apply_word(w, p)
        back = apply_word(w.inverse(), q)
    except LeavesChart:
        return
    assert chart_eq(back, p)
