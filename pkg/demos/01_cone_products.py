"""Two positive definite matrices whose Jordan product is not positive.

The cone of Sym(2, Q) is closed under sums and under x -> Q_a(x), yet not
under the symmetrized product.  This script checks a concrete pair exactly.
"""

from jordanorder import Sym, rational
from jordanorder.jordan import cone_contains, jbullet, jsquare, quad_apply

alg = Sym(2)
A = alg.from_full([[rational(2), rational(1)], [rational(1), rational(1)]])
B = alg.from_full([[rational(1), rational(0)], [rational(0), rational(9)]])

print("A in cone:", cone_contains(A))
print("B in cone:", cone_contains(B))

twice = 2 * jbullet(A, B)
print("AB + BA =", alg.format(twice), " in cone:", cone_contains(twice))

# Squares and quadratic images stay in the closed cone.
print("A^2 in cone:", cone_contains(jsquare(A)))
print("Q_A(B) in cone:", cone_contains(quad_apply(A, B)))
