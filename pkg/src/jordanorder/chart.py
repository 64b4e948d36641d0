"""The two-point chart ``V ∪ {∞}`` of a Jordan geometry.

Points are :class:`Finite` (an element of the algebra) or :class:`Infinity`.
Group elements are :class:`GroupWord` s: sequences of generators applied
left to right.  Actions are partial; an image outside the chart raises
:class:`~jordanorder.errors.LeavesChart`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorMismatch, LeavesChart, NotInvertible
from .jordan import Algebra, JElem

# -- points ------------------------------------------------------------------


@dataclass(frozen=True)
class Finite:
    v: JElem

    @property
    def alg(self):
        return self.v.alg

    def __repr__(self):
        return f"Finite({self.v.alg.format(self.v)})"


@dataclass(frozen=True)
class Infinity:
    alg: Algebra

    def __repr__(self):
        return "Infinity"


ChartPoint = Finite | Infinity


def origin(alg: Algebra) -> Finite:
    return Finite(alg.zero())


def point_alg(p) -> Algebra:
    return p.alg


def same_alg(*ps):
    alg = ps[0].alg
    for p in ps[1:]:
        if p.alg is not alg and p.alg != alg:
            raise DescriptorMismatch(f"{p.alg} vs {alg}")
    return alg


def chart_eq(p, q) -> bool:
    if isinstance(p, Infinity) or isinstance(q, Infinity):
        return isinstance(p, Infinity) and isinstance(q, Infinity)
    return p.v == q.v


# -- generators and words ----------------------------------------------------


@dataclass(frozen=True)
class Trans:
    """Translation ``x -> x + v``."""
    v: JElem


@dataclass(frozen=True)
class TildeTrans:
    """``j ∘ t_v ∘ j``."""
    v: JElem


@dataclass(frozen=True)
class Quad:
    """The quadratic operator ``Q_y`` for invertible ``y``."""
    y: JElem

    def __post_init__(self):
        if not self.y.alg.is_invertible(self.y):
            raise NotInvertible(f"Quad generator needs an invertible element, got {self.y!r}")


@dataclass(frozen=True)
class Neg:
    """The inversion ``x -> -x`` fixing o and ∞."""


@dataclass(frozen=True)
class Jinv:
    """Jordan inversion ``x -> x⁻¹``, swapping o and ∞."""


INVERSIONS = (Neg, Jinv)


def generator_inverse(g):
    if isinstance(g, Trans):
        return Trans(-g.v)
    if isinstance(g, TildeTrans):
        return TildeTrans(-g.v)
    if isinstance(g, Quad):
        return Quad(g.y.alg.inverse(g.y))
    return g


@dataclass(frozen=True)
class GroupWord:
    """Generators applied left to right.

    Parity 0 words lie in the elementary group; parity 1 words are an
    inversion composed with such an element.
    """

    generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @property
    def parity(self) -> int:
        return sum(isinstance(g, INVERSIONS) for g in self.generators) % 2

    def then(self, other: "GroupWord") -> "GroupWord":
        """First ``self``, then ``other``."""
        return GroupWord(self.generators + other.generators)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(generator_inverse(g) for g in reversed(self.generators)))

    def __len__(self):
        return len(self.generators)


def _inv_point(p):
    if isinstance(p, Infinity):
        return Finite(p.alg.zero())
    v = p.v
    if v.is_zero():
        return Infinity(v.alg)
    try:
        return Finite(v.alg.inverse(v))
    except NotInvertible:
        raise LeavesChart(f"j({v.alg.format(v)}) is not in the chart") from None


def apply_generator(g, p):
    if isinstance(g, Trans):
        if isinstance(p, Infinity):
            return p
        return Finite(p.v + g.v)
    if isinstance(g, Neg):
        if isinstance(p, Infinity):
            return p
        return Finite(-p.v)
    if isinstance(g, Jinv):
        return _inv_point(p)
    if isinstance(g, Quad):
        if isinstance(p, Infinity):
            return p
        return Finite(p.v.alg.quad(g.y, p.v))
    if isinstance(g, TildeTrans):
        return _inv_point(apply_generator(Trans(g.v), _inv_point(p)))
    raise TypeError(f"unknown generator {g!r}")


def apply_word(word: GroupWord, p):
    for g in word.generators:
        v = getattr(g, "v", None) or getattr(g, "y", None)
        if v is not None and v.alg is not p.alg and v.alg != p.alg:
            raise DescriptorMismatch(f"generator over {v.alg} applied to a point of {p.alg}")
        p = apply_generator(g, p)
    return p


NEG_INV = GroupWord((Neg(), Jinv()))


def neg_inv(p):
    """``x -> -x⁻¹``: a composition of two inversions."""
    return apply_word(NEG_INV, p)


def transversal(p, q) -> bool:
    same_alg(p, q)
    pinf, qinf = isinstance(p, Infinity), isinstance(q, Infinity)
    if pinf and qinf:
        return False
    if pinf or qinf:
        return True
    return p.alg.is_invertible(p.v - q.v)


# -- sampling ----------------------------------------------------------------


def random_generator(alg: Algebra, rng, bound, inversion: bool | None = None):
    """A random generator; ``inversion`` forces (True) or forbids (False) Neg/Jinv."""
    if inversion is None:
        inversion = rng.random() < 0.3
    if inversion:
        return Neg() if rng.random() < 0.5 else Jinv()
    k = rng.randrange(3)
    if k == 0:
        return Trans(alg.sample(rng, bound))
    if k == 1:
        return TildeTrans(alg.sample(rng, bound))
    return Quad(alg.sample_invertible(rng, bound))


def random_word(alg: Algebra, rng, bound, parity: int | None = None, max_len: int = 6) -> GroupWord:
    n = rng.randint(1, max_len)
    gens = [random_generator(alg, rng, bound) for _ in range(n - 1)]
    current = sum(isinstance(g, INVERSIONS) for g in gens) % 2
    if parity is None:
        gens.append(random_generator(alg, rng, bound))
    else:
        gens.append(random_generator(alg, rng, bound, inversion=(current != parity)))
    return GroupWord(tuple(gens))


def point_to_json(p):
    if isinstance(p, Infinity):
        return {"inf": True}
    return {"v": p.v.alg.elem_to_json(p.v)}


def generator_to_json(g):
    if isinstance(g, Trans):
        return {"trans": g.v.alg.elem_to_json(g.v)["coordinates"]}
    if isinstance(g, TildeTrans):
        return {"tilde_trans": g.v.alg.elem_to_json(g.v)["coordinates"]}
    if isinstance(g, Quad):
        return {"quad": g.y.alg.elem_to_json(g.y)["coordinates"]}
    if isinstance(g, Neg):
        return {"neg": True}
    return {"jinv": True}


def word_to_json(w: GroupWord):
    return [generator_to_json(g) for g in w.generators]


def generator_from_json(alg: Algebra, obj):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise DescriptorMismatch(f"bad generator record {obj!r}")
    (k, v), = obj.items()
    if k == "trans":
        return Trans(alg.parse_coords(v))
    if k == "tilde_trans":
        return TildeTrans(alg.parse_coords(v))
    if k == "quad":
        return Quad(alg.parse_coords(v))
    if k == "neg":
        return Neg()
    if k == "jinv":
        return Jinv()
    raise DescriptorMismatch(f"unknown generator {k!r}")


def word_from_json(alg: Algebra, obj) -> GroupWord:
    return GroupWord(tuple(generator_from_json(alg, g) for g in obj))


def point_from_json(alg: Algebra, obj):
    if isinstance(obj, dict) and obj.get("inf"):
        return Infinity(alg)
    if isinstance(obj, dict) and "v" in obj:
        v = obj["v"]
        if isinstance(v, dict):
            from .jordan import elem_from_json
            return Finite(elem_from_json(v, alg))
        return Finite(alg.parse_coords(v))
    raise DescriptorMismatch(f"bad chart point {obj!r}")
