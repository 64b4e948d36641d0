"""Homogeneous coordinates for the full Jordan geometry X(V).

Three families are modelled:

``ProjLine``    the projective line over a local ring (Scalar algebras over
                ℚ or ℚ[ε]); points are unimodular pairs ``(p, q)`` standing
                for the chart value ``p q⁻¹``.
``Lagrangian``  Lagrangian frames ``[X; Y]`` in ℚ^{2n} for Sym(n, ℚ); the
                chart value is ``Y X⁻¹``.
``ProductGeo``  products of the above (the torus geometries).

Group words act totally here, so the cyclic order can be evaluated at
every point, including points at infinity other than ∞.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .chart import (
    Finite, GroupWord, INVERSIONS, Infinity, Jinv, Neg, Quad, TildeTrans, Trans,
    word_to_json,
)
from .errors import (
    DescriptorMismatch, InternalInvariantViolation, NormalizationFailed, NotApplicable,
    NotTransversal,
)
from .jordan import Algebra, JElem, Product, Scalar, Sym
from .rings import Q, DualQ


class _AtInfinity:
    """Returned by ``to_chart`` for points outside ``V ∪ {∞}``."""

    def __repr__(self):
        return "AtInfinity"


AtInfinity = _AtInfinity()


# -- points ------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPair:
    geo: "ProjLine"
    p: object
    q: object

    @property
    def alg(self):
        return self.geo.alg


@dataclass(frozen=True)
class LagFrame:
    geo: "Lagrangian"
    M: tuple

    @property
    def alg(self):
        return self.geo.alg


@dataclass(frozen=True)
class ProductPoint:
    geo: "ProductGeo"
    parts: tuple

    @property
    def alg(self):
        return self.geo.alg


@dataclass(frozen=True)
class FactorWord:
    """A tuple of words, one per factor of a product geometry."""

    words: tuple

    @property
    def parity(self):
        ps = {w.parity for w in self.words}
        return ps.pop() if len(ps) == 1 else None

    def then(self, other: "FactorWord") -> "FactorWord":
        return FactorWord(tuple(a.then(b) for a, b in zip(self.words, other.words)))

    def inverse(self) -> "FactorWord":
        return FactorWord(tuple(w.inverse() for w in self.words))

    def __len__(self):
        return max((len(w) for w in self.words), default=0)


# -- geometries --------------------------------------------------------------


class Geometry:
    alg: Algebra

    def _own(self, *ps):
        for p in ps:
            if getattr(p, "geo", None) != self:
                raise DescriptorMismatch(f"{p!r} is not a point of {self}")

    def origin(self):
        return self.embed(self.alg.zero())

    def __eq__(self, o):
        return type(self) is type(o) and self.alg == o.alg

    def __hash__(self):
        return hash((type(self).__name__, self.alg))


class ProjLine(Geometry):
    """Projective line over the (local) ring of a Scalar algebra."""

    def __init__(self, alg: Scalar):
        if not isinstance(alg, Scalar) or not alg.ring.is_local:
            raise DescriptorMismatch(f"ProjLine needs a Scalar algebra over a local ring, got {alg}")
        self.alg = alg
        self.R = alg.ring

    def __repr__(self):
        return f"ProjLine({self.R})"

    def point(self, p, q) -> ProjPair:
        R = self.R
        if R.is_unit(q):
            return ProjPair(self, p * R.invert(q), R.one)
        if R.is_unit(p):
            return ProjPair(self, R.one, q * R.invert(p))
        raise DescriptorMismatch(f"({p}, {q}) is not unimodular over {R}")

    def embed(self, v: JElem) -> ProjPair:
        self.alg.check(v)
        return ProjPair(self, v.coords[0], self.R.one)

    def infinity(self) -> ProjPair:
        return ProjPair(self, self.R.one, self.R.zero)

    def to_chart(self, x: ProjPair):
        R = self.R
        if R.is_unit(x.q):
            return Finite(self.alg.elem([x.p]))
        if R.is_zero(x.q):
            return Infinity(self.alg)
        return AtInfinity

    def act_generator(self, g, x: ProjPair) -> ProjPair:
        p, q = x.p, x.q
        if isinstance(g, Trans):
            return self.point(p + g.v.coords[0] * q, q)
        if isinstance(g, TildeTrans):
            return self.point(p, q + g.v.coords[0] * p)
        if isinstance(g, Jinv):
            return self.point(q, p)
        if isinstance(g, Neg):
            return self.point(-p, q)
        if isinstance(g, Quad):
            y = g.y.coords[0]
            return self.point(y * p, self.R.invert(y) * q)
        raise TypeError(f"unknown generator {g!r}")

    def transversal(self, a: ProjPair, b: ProjPair) -> bool:
        return self.R.is_unit(a.p * b.q - a.q * b.p)

    def size(self):
        return 1

    def point_json(self, x: ProjPair):
        return [self.R.to_json(x.p), self.R.to_json(x.q)]

    def point_from_json(self, obj) -> ProjPair:
        return self.point(self.R.from_json(obj[0]), self.R.from_json(obj[1]))


class Lagrangian(Geometry):
    """Lagrangian subspaces of ℚ^{2n}, the completion of Sym(n, ℚ)."""

    def __init__(self, alg: Sym):
        if not isinstance(alg, Sym) or alg.ring != Q:
            raise DescriptorMismatch(f"Lagrangian geometry needs Sym(n, Q), got {alg}")
        self.alg = alg
        self.n = alg.n

    def __repr__(self):
        return f"Lagrangian({self.n})"

    def frame(self, M) -> LagFrame:
        """Canonical form: reduced echelon form of the column space."""
        n = self.n
        if len(M) != 2 * n or any(len(r) != n for r in M):
            raise DescriptorMismatch(f"a Lagrangian frame of Sym({n}) is a {2 * n}x{n} array")
        R = linalg.rref(linalg.transpose(M))
        if any(all(x == 0 for x in row) for row in R):
            raise DescriptorMismatch("frame does not have full column rank")
        return LagFrame(self, tuple(tuple(r) for r in linalg.transpose(R)))

    def blocks(self, x: LagFrame):
        n = self.n
        return [list(r) for r in x.M[:n]], [list(r) for r in x.M[n:]]

    def embed(self, v: JElem) -> LagFrame:
        self.alg.check(v)
        M = linalg.identity(Q, self.n) + self.alg.matrix(v)
        return LagFrame(self, tuple(tuple(r) for r in M))

    def infinity(self) -> LagFrame:
        n = self.n
        return LagFrame(self, tuple(tuple(r) for r in linalg.zeros(Q, n) + linalg.identity(Q, n)))

    def to_chart(self, x: LagFrame):
        X, Y = self.blocks(x)
        if all(c == 0 for r in X for c in r):
            return Infinity(self.alg)
        if not linalg.is_invertible(Q, X):
            return AtInfinity
        return Finite(self.alg.from_full(linalg.mat_mul(Y, linalg.inverse(Q, X))))

    def act_generator(self, g, x: LagFrame) -> LagFrame:
        X, Y = self.blocks(x)
        if isinstance(g, Trans):
            M = X + linalg.mat_add(Y, linalg.mat_mul(self.alg.matrix(g.v), X))
        elif isinstance(g, TildeTrans):
            M = linalg.mat_add(X, linalg.mat_mul(self.alg.matrix(g.v), Y)) + Y
        elif isinstance(g, Jinv):
            M = Y + X
        elif isinstance(g, Neg):
            M = X + linalg.mat_neg(Y)
        elif isinstance(g, Quad):
            y = self.alg.matrix(g.y)
            M = linalg.mat_mul(linalg.inverse(Q, y), X) + linalg.mat_mul(y, Y)
        else:
            raise TypeError(f"unknown generator {g!r}")
        return self.frame(M)

    def transversal(self, a: LagFrame, b: LagFrame) -> bool:
        M = [list(r1) + list(r2) for r1, r2 in zip(a.M, b.M)]
        return linalg.det(Q, M) != 0

    def is_isotropic(self, x: LagFrame) -> bool:
        X, Y = self.blocks(x)
        S = linalg.mat_mul(linalg.transpose(X), Y)
        return linalg.mat_equal(Q, S, linalg.transpose(S))

    def size(self):
        return self.n

    def point_json(self, x: LagFrame):
        return [[Q.to_json(c) for c in row] for row in x.M]

    def point_from_json(self, obj) -> LagFrame:
        return self.frame([[Q.from_json(c) for c in row] for row in obj])


class ProductGeo(Geometry):
    """Direct product of geometries; the algebra is the Product of the factors."""

    def __init__(self, alg: Product):
        if not isinstance(alg, Product):
            raise DescriptorMismatch(f"ProductGeo needs a Product algebra, got {alg}")
        self.alg = alg
        self.factors = tuple(geometry_for(f) for f in alg.factors)

    def __repr__(self):
        return "ProductGeo(" + ", ".join(map(repr, self.factors)) + ")"

    def embed(self, v: JElem) -> ProductPoint:
        self.alg.check(v)
        return ProductPoint(self, tuple(g.embed(c) for g, c in zip(self.factors, self.alg.components(v))))

    def infinity(self) -> ProductPoint:
        return ProductPoint(self, tuple(g.infinity() for g in self.factors))

    def make(self, parts) -> ProductPoint:
        parts = tuple(parts)
        for g, p in zip(self.factors, parts):
            g._own(p)
        return ProductPoint(self, parts)

    def to_chart(self, x: ProductPoint):
        cs = [g.to_chart(p) for g, p in zip(self.factors, x.parts)]
        if all(isinstance(c, Finite) for c in cs):
            return Finite(self.alg.join([c.v for c in cs]))
        if all(isinstance(c, Infinity) for c in cs):
            return Infinity(self.alg)
        return AtInfinity

    def split_word(self, w: GroupWord) -> FactorWord:
        """A diagonal word, written factor by factor."""
        per = [[] for _ in self.factors]
        for g in w.generators:
            if isinstance(g, INVERSIONS):
                for lst in per:
                    lst.append(g)
                continue
            elem = g.y if isinstance(g, Quad) else g.v
            for lst, c in zip(per, self.alg.components(elem)):
                lst.append(type(g)(c))
        return FactorWord(tuple(GroupWord(tuple(l)) for l in per))

    def transversal(self, a, b) -> bool:
        return all(g.transversal(p, q) for g, p, q in zip(self.factors, a.parts, b.parts))

    def size(self):
        return sum(g.size() for g in self.factors)

    def point_json(self, x: ProductPoint):
        return [g.point_json(p) for g, p in zip(self.factors, x.parts)]

    def point_from_json(self, obj) -> ProductPoint:
        return ProductPoint(self, tuple(g.point_from_json(o) for g, o in zip(self.factors, obj)))


def geometry_for(alg: Algebra) -> Geometry:
    if isinstance(alg, Product):
        return ProductGeo(alg)
    if isinstance(alg, Scalar) and alg.ring in (Q, DualQ):
        return ProjLine(alg)
    if isinstance(alg, Sym) and alg.ring == Q:
        return Lagrangian(alg)
    raise NotApplicable(f"no full-geometry model for {alg}")


# -- the operations ----------------------------------------------------------


def embed(geo: Geometry, v: JElem):
    return geo.embed(v)


def infinity_point(geo: Geometry):
    return geo.infinity()


def to_chart(x):
    return x.geo.to_chart(x)


def _same_geo(*ps):
    geo = ps[0].geo
    for p in ps[1:]:
        if p.geo != geo:
            raise DescriptorMismatch(f"points of {geo} and {p.geo} mixed")
    return geo


def point_eq(x, y) -> bool:
    _same_geo(x, y)
    if isinstance(x, ProductPoint):
        return all(point_eq(a, b) for a, b in zip(x.parts, y.parts))
    return x == y


def act_full(word, x):
    """Total action of a GroupWord or FactorWord on a homogeneous point."""
    geo = x.geo
    if isinstance(geo, ProductGeo):
        if isinstance(word, GroupWord):
            word = geo.split_word(word)
        return ProductPoint(geo, tuple(act_full(w, p) for w, p in zip(word.words, x.parts)))
    if isinstance(word, FactorWord):
        raise DescriptorMismatch("factor words act only on product geometries")
    for g in word.generators:
        elem = g.y if isinstance(g, Quad) else getattr(g, "v", None)
        if elem is not None and elem.alg != geo.alg:
            raise DescriptorMismatch(f"generator over {elem.alg} acting on {geo}")
        x = geo.act_generator(g, x)
    return x


def transversal_full(x, y) -> bool:
    return _same_geo(x, y).transversal(x, y)


def _catalog(geo: Geometry):
    """Pre-words tried, in order, to move a point off the divisor at infinity."""
    alg = geo.alg
    e = alg.unit()
    yield GroupWord((Neg(), Jinv()))
    for k in range(1, 2 * geo.size() + 2):
        for t in (k, -k):
            yield GroupWord((Trans(t * e), Neg(), Jinv()))


def carry_to_frame(a, b):
    """A parity-0 word sending ``a`` to o and ``b`` to ∞ (verified on return)."""
    geo = _same_geo(a, b)
    if not transversal_full(a, b):
        raise NotTransversal(f"{a!r} and {b!r} are not transversal")
    if isinstance(geo, ProductGeo):
        return FactorWord(tuple(carry_to_frame(p, q) for p, q in zip(a.parts, b.parts)))
    inf = geo.infinity()
    pre = GroupWord()
    if not geo.transversal(b, inf):
        for u in _catalog(geo):
            if geo.transversal(act_full(u, b), inf):
                pre = u
                break
        else:
            raise NormalizationFailed(f"catalog exhausted for {b!r}")
    b1 = geo.to_chart(act_full(pre, b))
    if not isinstance(b1, Finite):
        raise InternalInvariantViolation("pre-word did not bring b into the chart")
    w = pre.then(GroupWord((Trans(-b1.v), Neg(), Jinv())))
    a1 = geo.to_chart(act_full(w, a))
    if not isinstance(a1, Finite):
        raise InternalInvariantViolation("a left the chart although transversal to b")
    w = w.then(GroupWord((Trans(-a1.v),)))
    if w.parity != 0 or not (act_full(w, a) == geo.origin() and act_full(w, b) == inf):
        raise InternalInvariantViolation(f"carry_to_frame postcondition failed for {a!r}, {b!r}")
    return w


def in_R_full(a, x, b) -> bool:
    geo = _same_geo(a, x, b)
    if isinstance(geo, ProductGeo):
        return all(in_R_full(p, y, q) for p, y, q in zip(a.parts, x.parts, b.parts))
    if not (geo.transversal(a, x) and geo.transversal(x, b) and geo.transversal(a, b)):
        return False
    w = carry_to_frame(a, b)
    c = geo.to_chart(act_full(w, x))
    if not isinstance(c, Finite):
        raise InternalInvariantViolation("x left the chart although transversal to b")
    return geo.alg.in_cone(c.v)


def point_json(x):
    return x.geo.point_json(x)


def word_json(w):
    if isinstance(w, FactorWord):
        return {"factors": [word_to_json(u) for u in w.words]}
    return word_to_json(w)


# -- the model interface used by the checkers ---------------------------------


class FullModel:
    """A full geometry seen through the checkers' model interface."""

    partial = False

    def __init__(self, geo: Geometry, name: str | None = None, factor_words: bool = True):
        self.geo = geo
        self.alg = geo.alg
        self.name = name or repr(geo)
        self.factor_words = factor_words and isinstance(geo, ProductGeo)

    def in_R(self, a, x, b):
        return in_R_full(a, x, b)

    def transversal(self, p, q):
        return transversal_full(p, q)

    def act(self, word, p):
        return act_full(word, p)

    def eq(self, p, q):
        return point_eq(p, q)

    def embed(self, v):
        return self.geo.embed(v)

    def infinity(self):
        return self.geo.infinity()

    def origin(self):
        return self.geo.origin()

    def finite(self, p):
        c = self.geo.to_chart(p)
        return c.v if isinstance(c, Finite) else None

    def _singular(self, rng):
        """A nonzero non-invertible element, if small samples find one."""
        for _ in range(30):
            w = self.alg.sample(rng, 2)
            if not w.is_zero() and not self.alg.is_invertible(w):
                return w
        return None

    def random_point(self, rng, bound):
        u = rng.random()
        if u < 0.1:
            return self.infinity()
        if u < 0.25:
            # j of a singular element lies at infinity but is not ∞
            w = self._singular(rng)
            if w is not None:
                p = act_full(GroupWord((Jinv(),)), self.embed(w))
                if rng.random() < 0.5:
                    p = act_full(self.random_word(rng, bound, parity=0), p)
                return p
        p = self.embed(self.alg.sample(rng, bound))
        if u < 0.4:
            p = act_full(self.random_word(rng, bound), p)
        return p

    def random_word(self, rng, bound, parity=None, max_len=6):
        from .chart import random_word
        if self.factor_words and rng.random() < 0.5:
            if parity is None:
                parity = rng.randrange(2)
            return FactorWord(tuple(random_word(f.alg, rng, bound, parity, max_len)
                                    for f in self.geo.factors))
        return random_word(self.alg, rng, bound, parity, max_len)

    def compose(self, *words):
        if self.factor_words and any(isinstance(w, FactorWord) for w in words):
            words = [w if isinstance(w, FactorWord) else self.geo.split_word(w) for w in words]
            out = FactorWord(tuple(GroupWord() for _ in self.geo.factors))
        else:
            out = GroupWord()
        for w in words:
            out = out.then(w)
        return out

    def point_json(self, p):
        return {"hom": point_json(p)}

    def word_json(self, w):
        return word_json(w)


def full_model(alg: Algebra, name: str | None = None) -> FullModel:
    return FullModel(geometry_for(alg), name)


def lift(geo: Geometry, p):
    """The homogeneous point of a chart point."""
    return geo.infinity() if isinstance(p, Infinity) else geo.embed(p.v)


def check_chart_full_consistency(alg: Algebra, spec=None):
    """Chart ``in_R`` against ``in_R_full`` on sampled chart triples."""
    from .cyclic import ChartModel, chart_in_R, sample_triple
    from .reports import AxiomReport, SampleSpec
    spec = spec or SampleSpec()
    geo = geometry_for(alg)
    chart = ChartModel(alg)
    rng = spec.rng(f"consistency:{alg}")
    rep = AxiomReport("chart and full geometry agree", f"{alg} in {geo!r}", spec.seed, spec.cases)
    chk = rep.check("in_R = in_R_full")
    for _ in range(spec.cases):
        t = sample_triple(chart, rng, spec.bound)
        r = chart_in_R(*t)
        chk.record(r == in_R_full(*(lift(geo, p) for p in t)),
                   lambda: {"triple": [chart.point_json(p) for p in t], "chart": r}, premise=r)
    chk.note = f"members={chk.nontrivial}"
    return rep


__all__ = [
    "AtInfinity", "FactorWord", "FullModel", "LagFrame", "Lagrangian", "ProductGeo",
    "ProductPoint", "ProjLine", "ProjPair", "act_full", "carry_to_frame", "embed",
    "check_chart_full_consistency", "full_model", "geometry_for", "lift", "in_R_full", "infinity_point", "point_eq", "to_chart",
    "transversal_full",
]
