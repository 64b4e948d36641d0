"""Exact base rings with partial orders.

Elements are plain values: ``mpq`` for the rational-based rings, and small
immutable wrappers (:class:`Dual`, :class:`Gauss`, :class:`Tup`) for the
extensions.  A ring *descriptor* knows how to validate, order, invert,
sample and serialize its elements; the elements themselves only know
arithmetic, so generic algebra code can write ``a * b + c``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

from .errors import DescriptorMismatch, NoOrder, NotInvertible
from .reports import AxiomReport, SampleSpec

Rational = type(mpq())

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


def rational(x) -> "Rational":
    """Coerce ``x`` (int, ``"p/q"`` string, Fraction, mpq) to a canonical mpq."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                if int(q) == 0:
                    raise ValueError
                return mpq(int(p), int(q))
            return mpq(int(s))
        except ValueError:
            raise ValueError(f"not a rational literal: {x!r}") from None
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def format_rational(q) -> str:
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def random_rational(rng, bound: int):
    return mpq(rng.randint(-bound, bound), rng.randint(1, bound))


def random_positive_rational(rng, bound: int):
    return mpq(rng.randint(1, bound), rng.randint(1, bound))


# -- element types ---------------------------------------------------------

# scalars every wrapper accepts on the other side of + and *
_BASIC = (Rational, int)


@dataclass(frozen=True, slots=True)
class Dual:
    """``re + eps*ε`` with ``ε² = 0``."""

    re: object
    eps: object

    def __add__(self, o):
        if isinstance(o, Dual):
            return Dual(self.re + o.re, self.eps + o.eps)
        if isinstance(o, _BASIC):
            return Dual(self.re + o, self.eps)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.re, -self.eps)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Dual):
            return Dual(self.re * o.re, self.re * o.eps + self.eps * o.re)
        if isinstance(o, _BASIC):
            return Dual(self.re * o, self.eps * o)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"({self.re} + {self.eps}ε)"


@dataclass(frozen=True, slots=True)
class Gauss:
    """``re + im*i`` with ``i² = -1``."""

    re: object
    im: object

    def __add__(self, o):
        if isinstance(o, Gauss):
            return Gauss(self.re + o.re, self.im + o.im)
        if isinstance(o, (Dual,) + _BASIC):
            return Gauss(self.re + o, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Gauss):
            return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
        if isinstance(o, (Dual,) + _BASIC):
            return Gauss(self.re * o, self.im * o)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"({self.re} + {self.im}i)"


@dataclass(frozen=True, slots=True)
class Tup:
    """Element of a direct product of rings."""

    items: tuple

    def __add__(self, o):
        if isinstance(o, Tup):
            return Tup(tuple(x + y for x, y in zip(self.items, o.items)))
        if isinstance(o, _BASIC):
            return Tup(tuple(x + o for x in self.items))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Tup(tuple(-x for x in self.items))

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Tup):
            return Tup(tuple(x * y for x, y in zip(self.items, o.items)))
        if isinstance(o, _BASIC):
            return Tup(tuple(x * o for x in self.items))
        return NotImplemented

    __rmul__ = __mul__


# -- descriptors -------------------------------------------------------------


class OrderFlavor(enum.Enum):
    SQUARE_ORDERED_INVERSE_POR = "SquareOrderedInversePor"
    POR = "Por"
    UNORDERED = "Unordered"


class Ring:
    """Base class of ring descriptors.  Subclasses are frozen dataclasses."""

    name = "?"
    arity = 1
    flavor = OrderFlavor.SQUARE_ORDERED_INVERSE_POR
    is_local = True
    is_field = False
    has_half = True

    @property
    def ordered(self) -> bool:
        return self.flavor is not OrderFlavor.UNORDERED

    def _require_order(self):
        if not self.ordered:
            raise NoOrder(f"{self} carries no order")

    def __str__(self):
        return self.name

    # subclasses provide: zero, one, from_rational, coords, from_coords,
    # contains, is_unit, _invert, _is_positive, sample, sample_positive, probes

    def is_zero(self, x) -> bool:
        return all(c == 0 for c in self.coords(x))

    def equal(self, x, y) -> bool:
        return self.coords(x) == self.coords(y)

    def invert(self, x):
        if not self.is_unit(x):
            raise NotInvertible(f"{self.format(x)} is not invertible in {self}")
        return self._invert(x)

    def is_positive(self, x) -> bool:
        self._require_order()
        return self._is_positive(x)

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise DescriptorMismatch(f"{x!r} is not an element of {self}")

    def format(self, x) -> str:
        return str(self.to_json(x))


@dataclass(frozen=True)
class QQ(Ring):
    name = "Q"
    is_field = True

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    def from_rational(self, q):
        return rational(q)

    def coords(self, x):
        return (x,)

    def from_coords(self, cs):
        (c,) = cs
        return rational(c)

    def contains(self, x):
        return isinstance(x, Rational)

    def is_zero(self, x):
        return x == 0

    def equal(self, x, y):
        return x == y

    def is_unit(self, x):
        return x != 0

    def _invert(self, x):
        return 1 / x

    def _is_positive(self, x):
        return x > 0

    def sample(self, rng, bound):
        return random_rational(rng, bound)

    def sample_positive(self, rng, bound):
        return random_positive_rational(rng, bound)

    def probes(self):
        return [mpq(v) for v in ("0", "1", "-1", "2", "1/2", "-1/2", "3")]

    def to_json(self, x):
        return format_rational(x)

    def from_json(self, obj):
        return rational(obj)


@dataclass(frozen=True)
class ZZ(QQ):
    """The integers; squares ordered but not an inverse por."""

    name = "ZInt"
    flavor = OrderFlavor.POR
    is_field = False
    has_half = False

    def from_rational(self, q):
        q = rational(q)
        if q.denominator != 1:
            raise DescriptorMismatch(f"{q} is not an integer")
        return q

    def contains(self, x):
        return isinstance(x, Rational) and x.denominator == 1

    def is_unit(self, x):
        return x == 1 or x == -1

    def sample(self, rng, bound):
        return mpq(rng.randint(-bound, bound))

    def sample_positive(self, rng, bound):
        return mpq(rng.randint(1, bound))

    def probes(self):
        return [mpq(v) for v in (0, 1, -1, 2, -2, 3)]

    def from_json(self, obj):
        return self.from_rational(obj)


@dataclass(frozen=True)
class TrivialN(QQ):
    """ℚ with the trivial partial order: ``x > 0`` iff ``x`` is a positive integer."""

    name = "TrivialN"
    flavor = OrderFlavor.POR

    def _is_positive(self, x):
        return x.denominator == 1 and x > 0

    def sample_positive(self, rng, bound):
        return mpq(rng.randint(1, bound))


@dataclass(frozen=True)
class DualRing(Ring):
    """``A[ε]`` ordered by the ε-free part."""

    base: Ring

    @property
    def name(self):
        return "DualQ" if type(self.base) is QQ else f"Dual({self.base})"

    @property
    def arity(self):
        return 2 * self.base.arity

    @property
    def flavor(self):
        return self.base.flavor

    @property
    def is_local(self):
        return self.base.is_local

    @property
    def has_half(self):
        return self.base.has_half

    @property
    def zero(self):
        return Dual(self.base.zero, self.base.zero)

    @property
    def one(self):
        return Dual(self.base.one, self.base.zero)

    def from_rational(self, q):
        return Dual(self.base.from_rational(q), self.base.zero)

    def coords(self, x):
        return self.base.coords(x.re) + self.base.coords(x.eps)

    def from_coords(self, cs):
        k = self.base.arity
        cs = tuple(cs)
        return Dual(self.base.from_coords(cs[:k]), self.base.from_coords(cs[k:]))

    def contains(self, x):
        return isinstance(x, Dual) and self.base.contains(x.re) and self.base.contains(x.eps)

    def is_zero(self, x):
        return self.base.is_zero(x.re) and self.base.is_zero(x.eps)

    def equal(self, x, y):
        return self.base.equal(x.re, y.re) and self.base.equal(x.eps, y.eps)

    def is_unit(self, x):
        return self.base.is_unit(x.re)

    def _invert(self, x):
        r = self.base.invert(x.re)
        return Dual(r, -(x.eps * r * r))

    def _is_positive(self, x):
        return self.base.is_positive(x.re)

    def sample(self, rng, bound):
        return Dual(self.base.sample(rng, bound), self.base.sample(rng, bound))

    def sample_positive(self, rng, bound):
        return Dual(self.base.sample_positive(rng, bound), self.base.sample(rng, bound))

    def probes(self):
        b = self.base.probes()
        z = self.base.zero
        return [Dual(v, z) for v in b] + [Dual(z, self.base.one), Dual(self.base.one, -self.base.one)]

    def to_json(self, x):
        return {"re": self.base.to_json(x.re), "eps": self.base.to_json(x.eps)}

    def from_json(self, obj):
        if not isinstance(obj, dict) or set(obj) - {"re", "eps"}:
            raise DescriptorMismatch(f"{self} element must be a record {{re, eps}}: {obj!r}")
        return Dual(self.base.from_json(obj.get("re", "0")), self.base.from_json(obj.get("eps", "0")))


@dataclass(frozen=True)
class GaussRing(Ring):
    """``A[i]``; carries no order."""

    base: Ring

    @property
    def name(self):
        if type(self.base) is QQ:
            return "GaussQ"
        if isinstance(self.base, DualRing) and type(self.base.base) is QQ:
            return "DualGaussQ"
        return f"Gauss({self.base})"

    flavor = OrderFlavor.UNORDERED

    @property
    def arity(self):
        return 2 * self.base.arity

    @property
    def is_local(self):
        return self.base.is_local

    @property
    def is_field(self):
        # ℚ[i] is a field since -1 is not a rational square
        return self.base.is_field

    @property
    def has_half(self):
        return self.base.has_half

    @property
    def zero(self):
        return Gauss(self.base.zero, self.base.zero)

    @property
    def one(self):
        return Gauss(self.base.one, self.base.zero)

    @property
    def i(self):
        return Gauss(self.base.zero, self.base.one)

    def from_rational(self, q):
        return Gauss(self.base.from_rational(q), self.base.zero)

    def coords(self, x):
        return self.base.coords(x.re) + self.base.coords(x.im)

    def from_coords(self, cs):
        k = self.base.arity
        cs = tuple(cs)
        return Gauss(self.base.from_coords(cs[:k]), self.base.from_coords(cs[k:]))

    def contains(self, x):
        return isinstance(x, Gauss) and self.base.contains(x.re) and self.base.contains(x.im)

    def is_zero(self, x):
        return self.base.is_zero(x.re) and self.base.is_zero(x.im)

    def equal(self, x, y):
        return self.base.equal(x.re, y.re) and self.base.equal(x.im, y.im)

    def norm(self, x):
        return x.re * x.re + x.im * x.im

    def is_unit(self, x):
        return self.base.is_unit(self.norm(x))

    def _invert(self, x):
        r = self.base.invert(self.norm(x))
        return Gauss(x.re * r, -(x.im * r))

    def sample(self, rng, bound):
        return Gauss(self.base.sample(rng, bound), self.base.sample(rng, bound))

    def sample_positive(self, rng, bound):
        raise NoOrder(f"{self} carries no order")

    def probes(self):
        z = self.base.zero
        return [Gauss(v, z) for v in self.base.probes()] + [self.i]

    def to_json(self, x):
        return {"re": self.base.to_json(x.re), "im": self.base.to_json(x.im)}

    def from_json(self, obj):
        if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
            raise DescriptorMismatch(f"{self} element must be a record {{re, im}}: {obj!r}")
        return Gauss(self.base.from_json(obj.get("re", "0")), self.base.from_json(obj.get("im", "0")))


@dataclass(frozen=True)
class ProductRing(Ring):
    """Direct product; strictly positive iff every component is."""

    factors: tuple

    def __post_init__(self):
        if len(self.factors) < 1:
            raise ValueError("ProductRing needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def name(self):
        return "Product(" + ",".join(str(f) for f in self.factors) + ")"

    @property
    def arity(self):
        return sum(f.arity for f in self.factors)

    @property
    def flavor(self):
        flavors = {f.flavor for f in self.factors}
        if OrderFlavor.UNORDERED in flavors:
            return OrderFlavor.UNORDERED
        if OrderFlavor.POR in flavors:
            return OrderFlavor.POR
        return OrderFlavor.SQUARE_ORDERED_INVERSE_POR

    is_local = False

    @property
    def has_half(self):
        return all(f.has_half for f in self.factors)

    @property
    def zero(self):
        return Tup(tuple(f.zero for f in self.factors))

    @property
    def one(self):
        return Tup(tuple(f.one for f in self.factors))

    def from_rational(self, q):
        return Tup(tuple(f.from_rational(q) for f in self.factors))

    def coords(self, x):
        out = ()
        for f, c in zip(self.factors, x.items):
            out += f.coords(c)
        return out

    def from_coords(self, cs):
        cs = tuple(cs)
        items, i = [], 0
        for f in self.factors:
            items.append(f.from_coords(cs[i:i + f.arity]))
            i += f.arity
        return Tup(tuple(items))

    def contains(self, x):
        return (isinstance(x, Tup) and len(x.items) == len(self.factors)
                and all(f.contains(c) for f, c in zip(self.factors, x.items)))

    def is_unit(self, x):
        return all(f.is_unit(c) for f, c in zip(self.factors, x.items))

    def _invert(self, x):
        return Tup(tuple(f.invert(c) for f, c in zip(self.factors, x.items)))

    def _is_positive(self, x):
        return all(f.is_positive(c) for f, c in zip(self.factors, x.items))

    def sample(self, rng, bound):
        return Tup(tuple(f.sample(rng, bound) for f in self.factors))

    def sample_positive(self, rng, bound):
        return Tup(tuple(f.sample_positive(rng, bound) for f in self.factors))

    def probes(self):
        first = self.factors[0].probes()
        out = [self.from_rational(v) for v in QQ().probes()]
        out += [Tup((v,) + tuple(f.one for f in self.factors[1:])) for v in first]
        return out

    def to_json(self, x):
        return [f.to_json(c) for f, c in zip(self.factors, x.items)]

    def from_json(self, obj):
        if not isinstance(obj, list) or len(obj) != len(self.factors):
            raise DescriptorMismatch(f"{self} element must be an array of {len(self.factors)}")
        return Tup(tuple(f.from_json(o) for f, o in zip(self.factors, obj)))


Q = QQ()
ZInt = ZZ()
TrivialNOrder = TrivialN()
DualQ = DualRing(Q)
GaussQ = GaussRing(Q)
DualGaussQ = GaussRing(DualQ)


def ring_from_json(obj) -> Ring:
    named = {"Q": Q, "ZInt": ZInt, "TrivialN": TrivialNOrder, "TrivialNOrder": TrivialNOrder,
             "DualQ": DualQ, "GaussQ": GaussQ, "DualGaussQ": DualGaussQ}
    if isinstance(obj, str):
        if obj in named:
            return named[obj]
        raise DescriptorMismatch(f"unknown ring {obj!r}")
    if isinstance(obj, dict) and len(obj) == 1:
        (k, v), = obj.items()
        if k == "dual":
            return DualRing(ring_from_json(v))
        if k == "gauss":
            return GaussRing(ring_from_json(v))
        if k == "product":
            return ProductRing(tuple(ring_from_json(f) for f in v))
    raise DescriptorMismatch(f"bad ring descriptor {obj!r}")


def ring_to_json(R: Ring):
    if isinstance(R, ProductRing):
        return {"product": [ring_to_json(f) for f in R.factors]}
    if R.name in ("Q", "ZInt", "TrivialN", "DualQ", "GaussQ", "DualGaussQ"):
        return R.name
    if isinstance(R, DualRing):
        return {"dual": ring_to_json(R.base)}
    if isinstance(R, GaussRing):
        return {"gauss": ring_to_json(R.base)}
    raise DescriptorMismatch(f"cannot serialize {R}")


# -- public operations ------------------------------------------------------


def ring_add(R: Ring, a, b):
    R.check(a, b)
    return a + b


def ring_mul(R: Ring, a, b):
    R.check(a, b)
    return a * b


def ring_neg(R: Ring, a):
    R.check(a)
    return -a


def ring_is_positive(R: Ring, a) -> bool:
    R.check(a)
    return R.is_positive(a)


def ring_invert(R: Ring, a):
    R.check(a)
    return R.invert(a)


def check_por_axioms(R: Ring, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Sample the partially-ordered-ring axioms and report counterexamples.

    Deterministic probe values are tried before random ones, so the
    witnesses for the textbook counterexamples are the small ones.
    """
    R._require_order()
    rng = spec.rng(f"por:{R}")
    report = AxiomReport("partially ordered ring axioms", str(R), spec.seed, spec.cases)
    trans = report.check("translation-invariance")
    mult = report.check("multiplicativity")
    square = report.check("square-order")
    inverse = report.check("inverse-por")
    unit = report.check("0<1")
    unit.record(R.is_positive(R.one), lambda: {"a": R.to_json(R.one)})

    probes = R.probes()
    pos = lambda x: R.is_positive(x)
    js = R.to_json
    for k in range(spec.cases):
        if k < len(probes):
            a = probes[k]
            c = probes[(k + 1) % len(probes)]
        else:
            a, c = R.sample(rng, spec.bound), R.sample(rng, spec.bound)
        b = a + R.sample_positive(rng, spec.bound)  # a < b by construction
        p = R.sample_positive(rng, spec.bound)
        hi = a + R.sample_positive(rng, spec.bound)

        if pos(b - a):
            trans.record(pos((b + c) - (a + c)),
                         lambda: {"a": js(a), "b": js(b), "c": js(c)})
        if pos(p) and pos(hi - a):
            mult.record(pos(p * hi - p * a) and pos(hi * p - a * p),
                        lambda: {"a": js(a), "b": js(p), "c": js(hi)})
        if R.is_unit(a):
            square.record(pos(a * a), lambda: {"a": js(a), "a^2": js(a * a)})
        else:
            square.skip()
        if pos(a):
            inverse.record(R.is_unit(a), lambda: {"a": js(a)})
        else:
            inverse.skip()
        if k >= len(probes):
            for x in (p, b - a):
                inverse.record(R.is_unit(x), lambda x=x: {"a": js(x)})
    return report
