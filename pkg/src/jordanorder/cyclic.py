"""The partial cyclic order R of a poJa geometry and its property checks.

``in_R`` works on chart points and on homogeneous points alike.  The
sampler-driven checks take either an algebra (run in the chart model) or a
model object such as :class:`ChartModel` or ``geometry.FullModel``, which
bundles points, words, actions and the relation into one interface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chart import (
    Finite, GroupWord, Infinity, Jinv, Neg, Quad, Trans, apply_word, chart_eq,
    point_to_json, random_word, same_alg, transversal, word_to_json,
)
from .errors import InternalInvariantViolation, LeavesChart
from .jordan import Algebra
from .reports import AxiomReport, SampleSpec

# -- the relation ------------------------------------------------------------


def _is_chart(p) -> bool:
    return isinstance(p, (Finite, Infinity))


def chart_in_R(a, x, b) -> bool:
    alg = same_alg(a, x, b)
    if not (transversal(a, x) and transversal(x, b) and transversal(a, b)):
        return False
    if isinstance(b, Infinity):
        d = x.v - a.v
    elif isinstance(a, Infinity):
        d = b.v - x.v
    elif isinstance(x, Infinity):
        d = a.v - b.v
    else:
        phi = GroupWord((Trans(-b.v), Neg(), Jinv()))
        try:
            pa, px = apply_word(phi, a), apply_word(phi, x)
        except LeavesChart as e:
            raise InternalInvariantViolation(f"normalizer left the chart on a transversal triple: {e}") from e
        if isinstance(pa, Infinity) or isinstance(px, Infinity):
            raise InternalInvariantViolation("normalizer sent a point other than b to infinity")
        d = px.v - pa.v
    return alg.in_cone(d)


def in_R(a, x, b) -> bool:
    """Is ``(a, x, b)`` in the cyclic order, i.e. ``x ∈ ]a, b[``?"""
    if _is_chart(a) and _is_chart(x) and _is_chart(b):
        return chart_in_R(a, x, b)
    from .geometry import in_R_full
    return in_R_full(a, x, b)


def points_equal(p, q) -> bool:
    if _is_chart(p) and _is_chart(q):
        same_alg(p, q)
        return chart_eq(p, q)
    from .geometry import point_eq
    return point_eq(p, q)


@dataclass(frozen=True)
class Interval:
    a: object
    b: object


def interval_contains(iv: Interval, x) -> bool:
    return in_R(iv.a, x, iv.b)


def closed_interval_contains(iv: Interval, x) -> bool:
    return interval_contains(iv, x) or points_equal(x, iv.a) or points_equal(x, iv.b)


def induced_less(base, x, y) -> bool:
    """The linear-order-like relation ``x <_base y``."""
    return in_R(base, x, y)


def quadruple_conditions(a, b, c, d) -> tuple[bool, bool, bool]:
    c1 = in_R(a, b, c) and in_R(a, c, d)
    c2 = in_R(a, b, d) and in_R(b, c, d)
    c3 = in_R(b, c, d) and in_R(a, c, d) and in_R(a, b, d) and in_R(a, b, c)
    return c1, c2, c3


def is_cyclic_quadruple(a, b, c, d, verify: bool = False) -> bool:
    if not verify:
        return in_R(a, b, c) and in_R(a, c, d)
    c1, c2, c3 = quadruple_conditions(a, b, c, d)
    if not (c1 == c2 == c3):
        raise InternalInvariantViolation(f"quadruple conditions disagree: {(c1, c2, c3)}")
    return c1


# -- models ------------------------------------------------------------------


class ChartModel:
    """The chart ``V ∪ {∞}`` of an algebra, seen through the model interface."""

    partial = True

    def __init__(self, alg: Algebra, name: str | None = None):
        self.alg = alg
        self.name = name or str(alg)

    def in_R(self, a, x, b):
        return chart_in_R(a, x, b)

    def transversal(self, p, q):
        return transversal(p, q)

    def act(self, word, p):
        return apply_word(word, p)

    def eq(self, p, q):
        return chart_eq(p, q)

    def embed(self, v):
        return Finite(v)

    def infinity(self):
        return Infinity(self.alg)

    def origin(self):
        return Finite(self.alg.zero())

    def finite(self, p):
        return p.v if isinstance(p, Finite) else None

    def random_point(self, rng, bound):
        if rng.random() < 0.1:
            return self.infinity()
        return Finite(self.alg.sample(rng, bound))

    def random_word(self, rng, bound, parity=None, max_len=6):
        return random_word(self.alg, rng, bound, parity, max_len)

    def compose(self, *words):
        """The word applying ``words`` in the given order."""
        out = GroupWord()
        for w in words:
            out = out.then(w)
        return out

    def point_json(self, p):
        return point_to_json(p)

    def word_json(self, w):
        return word_to_json(w)


def as_model(obj):
    if isinstance(obj, Algebra):
        return ChartModel(obj)
    return obj


def _try_act(model, word, points):
    try:
        return [model.act(word, p) for p in points]
    except LeavesChart:
        return None


def sample_chain(model, rng, bound, k: int, tries: int = 20):
    """``k`` points, any three of which (in order) lie in R.

    Built from ``∞ < v_1 < ... < v_{k-1}`` in V, moved by a random
    parity-0 word and cyclically rotated.
    """
    alg = model.alg
    v = alg.sample(rng, bound)
    pts = [model.infinity(), model.embed(v)]
    for _ in range(k - 2):
        v = v + alg.sample_cone(rng, bound)
        pts.append(model.embed(v))
    for _ in range(tries):
        w = model.random_word(rng, bound, parity=0)
        moved = _try_act(model, w, pts)
        if moved is not None:
            pts = moved
            break
    r = rng.randrange(k)
    return pts[r:] + pts[:r]


def sample_triple(model, rng, bound):
    if rng.random() < 0.5:
        return tuple(sample_chain(model, rng, bound, 3))
    return tuple(model.random_point(rng, bound) for _ in range(3))


def _pairwise_transversal(model, pts) -> bool:
    return all(model.transversal(pts[i], pts[j])
               for i in range(len(pts)) for j in range(i + 1, len(pts)))


def _pts_json(model, pts):
    return [model.point_json(p) for p in pts]


def _run(check, spec: SampleSpec, body):
    """Call ``body`` until ``check`` has ``spec.cases`` evaluated cases."""
    attempts = 0
    while check.cases < spec.cases and attempts < 4 * spec.cases + 100:
        attempts += 1
        body()


# -- theorem-level checks ----------------------------------------------------


def check_pco_axioms(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    model = as_model(obj)
    rng = spec.rng("pco:" + model.name)
    rep = AxiomReport("partial cyclic order axioms", model.name, spec.seed, spec.cases)
    cyc, asym, trans = rep.check("cyclicity"), rep.check("asymmetry"), rep.check("transitivity")
    sub = rep.check("R within transversal triples")

    def body():
        a, x, b = sample_triple(model, rng, spec.bound)
        if not _pairwise_transversal(model, (a, x, b)):
            cyc.skip()
            sub.record(not model.in_R(a, x, b), lambda: {"triple": _pts_json(model, (a, x, b))})
            return
        r = model.in_R(a, x, b)
        wit = lambda: {"triple": _pts_json(model, (a, x, b))}
        cyc.record(r == model.in_R(x, b, a), wit, premise=r)
        asym.record(not (r and model.in_R(b, x, a)), wit, premise=r)
        sub.record(not model.in_R(a, a, b) and not model.in_R(a, x, x), wit, premise=False)
        if rng.random() < 0.5:
            q = sample_chain(model, rng, spec.bound, 4)
        else:
            q = sample_chain(model, rng, spec.bound, 3)
            q.insert(rng.randrange(4), model.random_point(rng, spec.bound))
        p, s, c, d = q
        prem = model.in_R(p, s, c) and model.in_R(p, c, d)
        trans.record(not prem or model.in_R(p, s, d),
                     lambda: {"quadruple": _pts_json(model, q)}, premise=prem)

    _run(cyc, spec, body)
    for c in (cyc, asym, trans):
        c.note = f"non-vacuous={c.nontrivial}"
    return rep


def check_totality(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Sampled totality: (a,b,c) ∈ R or (a,c,b) ∈ R for transversal triples."""
    model = as_model(obj)
    rng = spec.rng("total:" + model.name)
    rep = AxiomReport("totality of the cyclic order", model.name, spec.seed, spec.cases)
    tot = rep.check("totality")

    def body():
        a, b, c = (model.random_point(rng, spec.bound) for _ in range(3))
        if not _pairwise_transversal(model, (a, b, c)):
            tot.skip()
            return
        tot.record(model.in_R(a, b, c) or model.in_R(a, c, b),
                   lambda: {"triple": _pts_json(model, (a, b, c))})

    _run(tot, spec, body)
    return rep


def check_invariance_and_reversal(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    model = as_model(obj)
    rng = spec.rng("inv:" + model.name)
    rep = AxiomReport("G0-invariance and reversal by inversions", model.name, spec.seed, spec.cases)
    inv, rev = rep.check("G0-invariance"), rep.check("reversal by parity-1 words")
    nrm = rep.check("normalization independence")

    def body():
        t = sample_triple(model, rng, spec.bound)
        parity = 0 if inv.cases <= rev.cases else 1
        w = model.random_word(rng, spec.bound, parity=parity)
        img = _try_act(model, w, t)
        target = inv if parity == 0 else rev
        if img is None:
            target.skip()
            return
        a, x, b = t
        r = model.in_R(a, x, b)
        wit = lambda: {"triple": _pts_json(model, t), "word": model.word_json(w)}
        if parity == 0:
            inv.record(r == model.in_R(*img), wit, premise=r)
            w2 = model.random_word(rng, spec.bound, parity=0)
            img2 = _try_act(model, w2, img)
            if img2 is None:
                nrm.skip()
            else:
                nrm.record(model.in_R(*img) == model.in_R(*img2),
                           lambda: {"triple": _pts_json(model, img), "word": model.word_json(w2)})
        else:
            rev.record(r == model.in_R(img[2], img[1], img[0]), wit, premise=r)

    attempts = 0
    while (inv.cases < spec.cases or rev.cases < spec.cases) and attempts < 8 * spec.cases + 100:
        attempts += 1
        body()
    return rep


def check_interval_convexity(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    model = as_model(obj)
    rng = spec.rng("convex:" + model.name)
    rep = AxiomReport("interval convexity", model.name, spec.seed, spec.cases)
    sub, order = rep.check("]u,v[ within ]a,b[ "), rep.check("u <_a v implies u <_b v")

    def body():
        if rng.random() < 0.6:
            a, u, x, v, b = sample_chain(model, rng, spec.bound, 5)
        else:
            a, u, v, b = sample_chain(model, rng, spec.bound, 4)
            x = model.random_point(rng, spec.bound)
        wit = lambda: {"a": model.point_json(a), "b": model.point_json(b), "u": model.point_json(u),
                       "v": model.point_json(v), "x": model.point_json(x)}
        base = model.in_R(a, u, b) and model.in_R(a, v, b) and model.in_R(a, u, v)
        order.record(not base or model.in_R(u, v, b), wit, premise=base)
        prem = base and model.in_R(u, x, v)
        sub.record(not prem or model.in_R(a, x, b), wit, premise=prem)

    _run(sub, spec, body)
    for c in (sub, order):
        c.note = f"non-vacuous={c.nontrivial}"
    return rep


def check_compression(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Words g with g(b) = b and g(a) ∈ ]a,b[ map ]a,b[ into itself.

    g is a translation by a cone element (b = ∞), conjugated by a random
    parity-0 word h to move the configuration around.
    """
    model = as_model(obj)
    alg = model.alg
    rng = spec.rng("compress:" + model.name)
    rep = AxiomReport("compression of intervals", model.name, spec.seed, spec.cases)
    comp, pre = rep.check("g(]a,b[) within ]a,b[ "), rep.check("premise g(b)=b, g(a) in ]a,b[")

    def body():
        a0 = model.embed(alg.sample(rng, spec.bound))
        g0 = GroupWord((Trans(alg.sample_cone(rng, spec.bound)),))
        if rng.random() < 0.5:
            x0 = model.embed(model.finite(a0) + alg.sample_cone(rng, spec.bound))
        else:
            x0 = model.random_point(rng, spec.bound)
        h = model.random_word(rng, spec.bound, parity=0) if rng.random() < 0.7 else GroupWord()
        pts = _try_act(model, h, [a0, model.infinity(), x0])
        if pts is None:
            comp.skip()
            return
        a, b, x = pts
        g = model.compose(h.inverse(), g0, h)
        imgs = _try_act(model, g, [a, b, x])
        if imgs is None:
            comp.skip()
            return
        ga, gb, gx = imgs
        wit = lambda: {"a": model.point_json(a), "b": model.point_json(b), "x": model.point_json(x),
                       "g": model.word_json(g)}
        pre.record(model.eq(gb, b) and model.in_R(a, ga, b), wit)
        inside = model.in_R(a, x, b)
        comp.record(not inside or model.in_R(a, gx, b), wit, premise=inside)

    _run(comp, spec, body)
    comp.note = f"non-vacuous={comp.nontrivial}"
    return rep


def check_quadruple_lemma(obj, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    model = as_model(obj)
    rng = spec.rng("quad:" + model.name)
    rep = AxiomReport("equivalent forms of cyclic quadruples", model.name, spec.seed, spec.cases)
    chk = rep.check("conditions (1), (2), (3) agree")

    def body():
        if rng.random() < 0.5:
            q = sample_chain(model, rng, spec.bound, 4)
        else:
            q = sample_chain(model, rng, spec.bound, 3)
            q.insert(rng.randrange(4), model.random_point(rng, spec.bound))
        a, b, c, d = q
        c1 = model.in_R(a, b, c) and model.in_R(a, c, d)
        c2 = model.in_R(a, b, d) and model.in_R(b, c, d)
        c3 = c1 and c2
        chk.record(c1 == c2 == c3, lambda: {"quadruple": _pts_json(model, q)}, premise=c1)

    _run(chk, spec, body)
    chk.note = f"cyclic={chk.nontrivial}"
    return rep


def check_interval_symmetry(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """``s_y = Q_y ∘ j`` maps ]o,∞[ into itself, fixes y and squares to the identity."""
    rng = spec.rng(f"symm:{alg}")
    rep = AxiomReport("interval symmetries of ]o,∞[", str(alg), spec.seed, spec.cases)
    into, fix, invol = rep.check("s_y(Ω) within Ω"), rep.check("s_y(y) = y"), rep.check("s_y∘s_y = id")
    o, inf = Finite(alg.zero()), Infinity(alg)
    for _ in range(spec.cases):
        y = alg.sample_cone(rng, spec.bound)
        s = GroupWord((Jinv(), Quad(y)))
        x = Finite(alg.sample_cone(rng, spec.bound))
        sx = apply_word(s, x)
        wit = lambda: {"y": alg.elem_to_json(y), "x": alg.elem_to_json(x.v)}
        into.record(in_R(o, sx, inf), wit)
        fix.record(chart_eq(apply_word(s, Finite(y)), Finite(y)), wit)
        invol.record(chart_eq(apply_word(s, sx), x), wit)
    return rep


def check_base_interval(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """]o,∞[ equals the cone: membership of Finite(v) matches the cone test."""
    rng = spec.rng(f"base:{alg}")
    rep = AxiomReport("]o,∞[ equals the symmetric cone", str(alg), spec.seed, spec.cases)
    chk = rep.check("]o,∞[ = Ω")
    o, inf = Finite(alg.zero()), Infinity(alg)
    for _ in range(spec.cases):
        v = alg.sample_cone(rng, spec.bound) if rng.random() < 0.5 else alg.sample(rng, spec.bound)
        r = in_R(o, Finite(v), inf)
        chk.record(r == alg.in_cone(v), lambda: {"v": alg.elem_to_json(v)}, premise=r)
    return rep
