"""The cyclic order on the projective line and on Sym(2, Q).

On the scalar line R(a, x, b) is the usual circular betweenness with
infinity glued in.  On Sym(2) the same formula gives a partial cyclic order.
"""

from jordanorder import Finite, Infinity, Scalar, Sym, in_R, rational
from jordanorder.cyclic import check_pco_axioms
from jordanorder.instances import BUILTIN, model_for
from jordanorder.reports import SampleSpec
from jordanorder.rings import Q

S = Scalar(Q)


def pt(x):
    return Infinity(S) if x == "inf" else Finite(S.elem([rational(x)]))


for triple in [("1", "2", "-1"), ("1", "0", "-1"), ("1", "inf", "-1"), ("-1", "0", "1")]:
    print("R" + str(triple), "=", in_R(*map(pt, triple)))

alg = Sym(2)
e = alg.unit()
x = alg.from_full([[rational("1/2"), rational(0)], [rational(0), rational("-1/3")]])
print("Sym(2): x in ]-e, e[ :", in_R(Finite(-1 * e), Finite(x), Finite(e)))

rep = check_pco_axioms(model_for(BUILTIN["sym2q"]), SampleSpec(0, 300, 10))
print(rep.to_text())
