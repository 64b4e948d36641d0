"""Desk-scale probes of the interval topology.

Nothing here proves a topological statement.  The probes test sampled
characterizations: separation by catalogued intervals, the ε-blindness of
intervals in tangent geometries, and three descriptions of ]−e, e[ in
Sym(n, ℚ).
"""

from __future__ import annotations

from .chart import Finite, Infinity
from .cyclic import ChartModel, Interval, in_R, points_equal, sample_chain
from .errors import EqualPoints, UnsupportedSize
from .jordan import Algebra, Sym, dual_ext, tangent_join, tangent_split
from .reports import AxiomReport, SampleSpec
from .rings import ONE, Q, ZERO, rational

# -- separation --------------------------------------------------------------


def separating_intervals(p, q, catalog, samples=()) -> list[tuple[Interval, Interval]]:
    """Pairs (I1, I2) of catalog intervals with p ∈ I1, q ∈ I2, sampled-disjoint.

    Disjointness is only certified on the sample set, which always
    includes ``p`` and ``q`` themselves.
    """
    if points_equal(p, q):
        raise EqualPoints("p and q coincide")
    probe = [p, q, *samples]
    around_p = [I for I in catalog if in_R(I.a, p, I.b)]
    around_q = [I for I in catalog if in_R(I.a, q, I.b)]
    out = []
    for I1 in around_p:
        for I2 in around_q:
            if not any(in_R(I1.a, s, I1.b) and in_R(I2.a, s, I2.b) for s in probe):
                out.append((I1, I2))
    return out


def interval_catalog(points) -> list[Interval]:
    """All intervals ]a,b[ with distinct endpoints from ``points``."""
    return [Interval(a, b) for a in points for b in points if not points_equal(a, b)]


def tangent_fiber_inseparability(base: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Over the tangent algebra, interval membership ignores the ε-part."""
    alg = dual_ext(base)
    model = ChartModel(alg)
    rng = spec.rng(f"fiber:{base}")
    rep = AxiomReport("tangent fibres are not separated by intervals", str(alg), spec.seed, spec.cases)
    chk = rep.check("membership independent of the ε-part")
    sep = rep.check("separation search between fibre points is empty")
    for k in range(spec.cases):
        A, X0, B = sample_chain(model, rng, spec.bound, 3)
        if rng.random() < 0.3:
            X0 = model.random_point(rng, spec.bound)
        if isinstance(X0, Infinity):
            X0 = Finite(alg.sample(rng, spec.bound))
        x, _ = tangent_split(X0.v)
        u = base.sample(rng, spec.bound)
        u2 = u + base.sample_invertible(rng, spec.bound)
        p, q = Finite(tangent_join(alg, x, u)), Finite(tangent_join(alg, x, u2))
        r = in_R(A, p, B)
        chk.record(r == in_R(A, q, B),
                   lambda: {"A": model.point_json(A), "B": model.point_json(B),
                            "p": model.point_json(p), "q": model.point_json(q)}, premise=r)
        if k % 20 == 0:
            extra = [model.random_point(rng, spec.bound) for _ in range(3)]
            cat = interval_catalog([A, B, *extra])
            found = separating_intervals(p, q, cat)
            sep.record(not found, lambda: {"p": model.point_json(p), "q": model.point_json(q),
                                           "pair": [[model.point_json(I.a), model.point_json(I.b)]
                                                    for I in found[0]]})
    chk.note = f"members={chk.nontrivial}"
    return rep


# -- polynomials and Sturm sequences ----------------------------------------
# Polynomials are coefficient lists, lowest degree first, over ℚ.


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p):
    return _trim([c * k for k, c in enumerate(p)][1:])


def poly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    quo = [ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        quo[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _trim(a)
    return _trim(quo), a


def poly_rem(a, b):
    return poly_divmod(a, b)[1]


def poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_rem(a, b)
    return a


def squarefree_part(p):
    p = _trim(p)
    g = poly_gcd(p, poly_deriv(p))
    return poly_divmod(p, g)[0] if len(g) > 1 else p


def sturm_sequence(p):
    """Sturm sequence of the square-free part, so endpoints that are
    multiple roots are handled like simple ones."""
    p = squarefree_part(p)
    seq = [p, poly_deriv(p)]
    while seq[-1]:
        r = poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))


def _at_infinity(p, negative: bool):
    lead = p[-1]
    deg = len(p) - 1
    return -lead if (negative and deg % 2) else lead


def sturm_count(p, lo=None, hi=None) -> int:
    """Distinct real roots of ``p`` in (lo, hi]; ``None`` means ∓∞."""
    seq = sturm_sequence(p)
    at = lambda x, neg: [(_at_infinity(s, neg) if x is None else poly_eval(s, x)) for s in seq]
    return _sign_changes(at(lo, True)) - _sign_changes(at(hi, False))


def charpoly(M):
    """Characteristic polynomial ``det(tI − M)`` by Faddeev–LeVerrier."""
    from . import linalg
    n = len(M)
    coeffs = [ZERO] * n + [ONE]
    N = linalg.identity(Q, n)
    for k in range(1, n + 1):
        AM = linalg.mat_mul(M, N)
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        N = [[AM[i][j] + (c if i == j else ZERO) for j in range(n)] for i in range(n)]
    return coeffs


def spectrum_in_unit_interval(M) -> bool:
    """All eigenvalues in (−1, 1), certified by exact Sturm counting."""
    p = charpoly(M)
    if poly_eval(p, ONE) == 0 or poly_eval(p, -ONE) == 0:
        return False
    return sturm_count(p, -ONE, ONE) == sturm_count(p)


def _rational_rotation(rng, n, bound):
    """A rational orthogonal matrix, the Cayley transform of a random skew matrix."""
    from . import linalg
    S = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            S[i][j] = Q.sample(rng, bound)
            S[j][i] = -S[i][j]
    I = linalg.identity(Q, n)
    return linalg.mat_mul(linalg.mat_sub(I, S), linalg.inverse(Q, linalg.mat_add(I, S)))


def sample_spectral(alg: Sym, rng, bound):
    """Symmetric matrices near the spectral unit ball, some exactly on its boundary."""
    from . import linalg
    n = alg.n
    k = rng.randrange(3)
    if k == 0:
        return alg.elem([Q.sample(rng, 2) for _ in range(alg.dim)])
    O = _rational_rotation(rng, n, bound)
    eig = []
    for _ in range(n):
        if k == 2 and rng.random() < 0.5:
            eig.append(rng.choice([ONE, -ONE]))
        else:
            den = rng.randint(1, bound)
            eig.append(rational(f"{rng.randint(-den - 1, den + 1)}/{den}"))
    D = [[eig[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    return alg.from_full(linalg.mat_mul(linalg.mat_mul(O, D), linalg.transpose(O)))


def spectral_ball_check(n: int, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    if not 1 <= n <= 3:
        raise UnsupportedSize("spectral_ball_check supports Sym(n, Q) with n <= 3")
    alg = Sym(n)
    rng = spec.rng(f"spectral:{n}")
    e = alg.unit()
    a, b = Finite(-1 * e), Finite(e)
    rep = AxiomReport("]−e,e[ is the spectral unit ball", str(alg), spec.seed, spec.cases)
    chk = rep.check("interval = cone tests = Sturm spectrum test")
    for _ in range(spec.cases):
        x = sample_spectral(alg, rng, spec.bound)
        r1 = in_R(a, Finite(x), b)
        r2 = alg.in_cone(e - x) and alg.in_cone(e + x)
        r3 = spectrum_in_unit_interval(alg.matrix(x))
        chk.record(r1 == r2 == r3, lambda: {"x": alg.elem_to_json(x), "in_R": r1, "cones": r2, "sturm": r3},
                   premise=r1)
    chk.note = f"inside={chk.nontrivial}"
    return rep
