import pytest
import sympy

from jordanorder.errors import DescriptorMismatch, NotInvertible
from jordanorder.jordan import JElem, Scalar, Spin, Sym, dual_ext
from jordanorder.reports import SampleSpec
from jordanorder.rings import Dual, Q, rational
from jordanorder.tube import ComplexJElem, complex_inverse, inversion_at_i, tube_contains, tube_experiment


def test_tube_membership_examples():
    for alg in (Scalar(Q), Sym(2), Spin(3)):
        e, o = alg.unit(), alg.zero()
        assert tube_contains(ComplexJElem(o, e))
        assert not tube_contains(ComplexJElem(e, o))
    alg = Sym(2)
    assert tube_contains(ComplexJElem(alg.elem([0, 1, 0]), alg.unit()))


def test_inverse_examples():
    for alg in (Scalar(Q), Sym(2), Spin(3)):
        e, o = alg.unit(), alg.zero()
        assert complex_inverse(ComplexJElem(o, e)) == ComplexJElem(o, -1 * e)
    alg = Sym(2)
    z = ComplexJElem(alg.elem([0, 1, 0]), alg.unit())
    w = complex_inverse(z)
    I = sympy.I
    Z = sympy.Matrix([[I, 1], [1, I]])
    W = sympy.Matrix(2, 2, lambda i, j: sympy.Rational(str(alg.matrix(w.re)[i][j]))
                     + I * sympy.Rational(str(alg.matrix(w.im)[i][j])))
    assert sympy.simplify(Z * W) == sympy.eye(2)
    assert Z.det() == -2
    T = dual_ext(Scalar(Q))
    eps = JElem(T, (Dual(rational(0), rational(1)),))
    with pytest.raises(NotInvertible):
        complex_inverse(ComplexJElem(eps, T.zero()))


def test_inversion_is_an_involution():
    alg = Sym(2)
    z = ComplexJElem(alg.elem([1, 2, 3]), alg.elem([2, 1, 1]))
    assert inversion_at_i(inversion_at_i(z)) == z


def test_mismatched_parts():
    with pytest.raises(DescriptorMismatch):
        ComplexJElem(Sym(2).unit(), Sym(3).unit())


@pytest.mark.parametrize("alg", [Sym(2), Sym(3)], ids=str)
def test_asserted_experiment(alg):
    rep = tube_experiment(alg, SampleSpec(0, 200, 8))
    assert not rep.exploratory and rep.ok, rep.to_text()


def test_spin_is_exploratory():
    rep = tube_experiment(Spin(3), SampleSpec(0, 200, 8))
    assert rep.exploratory and rep.ok
