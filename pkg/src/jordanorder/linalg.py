"""Exact dense linear algebra over the package's rings.

Matrices are lists of row lists.  Elimination always pivots on a *unit* of
the ring, which is correct for local rings (ℚ, ℚ[ε], ℚ[i], ℚ[ε][i]); a
matrix over a local ring is invertible iff such pivots exist at every step.
Product rings are handled factor by factor.
"""

from __future__ import annotations

from itertools import permutations

from .errors import NotInvertible
from .rings import ProductRing, Ring, Tup


def identity(R: Ring, n: int):
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def zeros(R: Ring, n: int, m: int | None = None):
    return [[R.zero] * (n if m is None else m) for _ in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def mat_mul(A, B):
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            s = row[0] * col[0]
            for k in range(1, len(row)):
                s = s + row[k] * col[k]
            out_row.append(s)
        out.append(out_row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        s = row[0] * v[0]
        for k in range(1, len(row)):
            s = s + row[k] * v[k]
        out.append(s)
    return out


def mat_add(A, B):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_sub(A, B):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_neg(A):
    return [[-x for x in r] for r in A]


def mat_scale(c, A):
    return [[c * x for x in r] for r in A]


def mat_equal(R: Ring, A, B) -> bool:
    return all(R.equal(x, y) for r, s in zip(A, B) for x, y in zip(r, s))


def _split(R: ProductRing, A):
    return [[[x.items[f] for x in row] for row in A] for f in range(len(R.factors))]


def _join(parts):
    n, m = len(parts[0]), len(parts[0][0])
    return [[Tup(tuple(p[i][j] for p in parts)) for j in range(m)] for i in range(n)]


def _gauss_jordan(R: Ring, A, B):
    """Reduce ``[A | B]`` so that A becomes the identity; returns the new B."""
    n = len(A)
    M = [list(A[i]) + list(B[i]) for i in range(n)]
    width = len(M[0])
    for c in range(n):
        piv = next((r for r in range(c, n) if R.is_unit(M[r][c])), None)
        if piv is None:
            raise NotInvertible("matrix is not invertible over " + str(R))
        M[c], M[piv] = M[piv], M[c]
        inv = R.invert(M[c][c])
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and not R.is_zero(M[r][c]):
                f = M[r][c]
                rowc = M[c]
                M[r] = [M[r][k] - f * rowc[k] for k in range(width)]
    return [row[n:] for row in M]


def inverse(R: Ring, A):
    if isinstance(R, ProductRing):
        return _join([inverse(F, P) for F, P in zip(R.factors, _split(R, A))])
    return _gauss_jordan(R, A, identity(R, len(A)))


def solve(R: Ring, A, b):
    """Solve ``A x = b`` for a vector ``b``; raises NotInvertible if A is singular."""
    if isinstance(R, ProductRing):
        parts = _split(R, A)
        bs = [[x.items[f] for x in b] for f in range(len(R.factors))]
        xs = [solve(F, P, bb) for F, P, bb in zip(R.factors, parts, bs)]
        return [Tup(tuple(x[i] for x in xs)) for i in range(len(b))]
    out = _gauss_jordan(R, A, [[x] for x in b])
    return [row[0] for row in out]


def is_invertible(R: Ring, A) -> bool:
    try:
        inverse(R, A)
    except NotInvertible:
        return False
    return True


def det_laplace(R: Ring, A):
    """Division-free determinant by the Leibniz formula (small n only)."""
    n = len(A)
    total = R.zero
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = R.one
        for i in range(n):
            term = term * A[i][perm[i]]
        total = total + term if sign > 0 else total - term
    return total


def det(R: Ring, A):
    """Exact determinant.

    Uses unit-pivot elimination; if a column has no unit pivot the matrix is
    singular modulo the maximal ideal, and the exact value is recovered with
    the division-free formula (only happens for non-field rings).
    """
    n = len(A)
    if n == 0:
        return R.one
    if isinstance(R, ProductRing):
        return Tup(tuple(det(F, P) for F, P in zip(R.factors, _split(R, A))))
    M = [list(r) for r in A]
    d = R.one
    for c in range(n):
        piv = next((r for r in range(c, n) if R.is_unit(M[r][c])), None)
        if piv is None:
            if all(R.is_zero(M[r][c]) for r in range(c, n)) or R.is_field:
                return R.zero
            return det_laplace(R, A)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d = d * M[c][c]
        inv = R.invert(M[c][c])
        for r in range(c + 1, n):
            if not R.is_zero(M[r][c]):
                f = M[r][c] * inv
                M[r] = [M[r][k] - f * M[c][k] for k in range(n)]
    return d


def leading_minors_positive(R: Ring, A) -> bool:
    """Sylvester's test: are all leading principal minors of ``A`` positive?

    The minors are accumulated exactly as products of the no-pivoting
    elimination pivots, ``D_k = D_{k-1} * d_k``.  A non-unit pivot means a
    non-unit (hence non-positive) minor.
    """
    n = len(A)
    M = [list(r) for r in A]
    D = R.one
    for c in range(n):
        p = M[c][c]
        if not R.is_unit(p):
            return False
        D = D * p
        if not R.is_positive(D):
            return False
        inv = R.invert(p)
        for r in range(c + 1, n):
            if not R.is_zero(M[r][c]):
                f = M[r][c] * inv
                M[r] = [M[r][k] - f * M[c][k] for k in range(n)]
    return True


def leading_minors(R: Ring, A) -> list:
    return [det(R, [row[:k] for row in A[:k]]) for k in range(1, len(A) + 1)]


def rref(A):
    """Reduced row echelon form over ℚ (entries must support exact division)."""
    M = [list(r) for r in A]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [M[i][k] - f * M[r][k] for k in range(cols)]
        r += 1
        if r == rows:
            break
    return M


def rank(A) -> int:
    return sum(1 for row in rref(A) if any(x != 0 for x in row))
