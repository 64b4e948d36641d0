"""Concrete partially ordered Jordan algebras.

Four families are implemented, each over any ring descriptor from
:mod:`jordanorder.rings` that contains 1/2:

* :class:`Scalar` -- the ring itself, ``a • b = ab``;
* :class:`Sym` -- symmetric ``n x n`` matrices, ``A • B = (AB + BA)/2``;
* :class:`Spin` -- spin factors ``(λ, w)``, with the Lorentz cone;
* :class:`Product` -- direct products (the torus algebras).

The tangent algebra ``V ⊕ εV`` is *not* a separate family: ``dual_ext(V)``
returns the same family over the dual-number ring, which is exactly the
scalar extension, and :func:`tangent_split` / :func:`tangent_join` expose
the identification ``x + εu <-> (x, u)``.  The complexification used for
tube domains is built the same way (:func:`complexify`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import DescriptorMismatch, InternalInvariantViolation, NotInvertible
from .reports import AxiomReport, SampleSpec
from .rings import (
    HALF, ZERO, DualRing, GaussRing, Q, Ring, ring_from_json, ring_to_json,
)


# -- elements ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class JElem:
    """An element of a concrete Jordan algebra, stored by its coordinates."""

    alg: "Algebra"
    coords: tuple

    def _same(self, o):
        if not isinstance(o, JElem):
            return NotImplemented
        if o.alg is not self.alg and o.alg != self.alg:
            raise DescriptorMismatch(f"{self.alg} vs {o.alg}")
        return True

    def __add__(self, o):
        if self._same(o) is NotImplemented:
            return NotImplemented
        return JElem(self.alg, tuple(x + y for x, y in zip(self.coords, o.coords)))

    def __sub__(self, o):
        if self._same(o) is NotImplemented:
            return NotImplemented
        return JElem(self.alg, tuple(x - y for x, y in zip(self.coords, o.coords)))

    def __neg__(self):
        return JElem(self.alg, tuple(-x for x in self.coords))

    def __rmul__(self, c):
        """Scalar multiple ``c * x`` with ``c`` a ring element (or rational)."""
        return JElem(self.alg, tuple(c * x for x in self.coords))

    def __mul__(self, o):
        if isinstance(o, JElem):
            return jbullet(self, o)
        return self.__rmul__(o)

    def __eq__(self, o):
        if not isinstance(o, JElem):
            return NotImplemented
        return (self.alg == o.alg and len(self.coords) == len(o.coords)
                and all(self.alg.ring.equal(x, y) for x, y in zip(self.coords, o.coords)))

    def __hash__(self):
        return hash((self.alg, tuple(self.alg.ring.coords(c) for c in self.coords)))

    def __repr__(self):
        return f"JElem({self.alg}, {self.alg.format(self)})"

    def is_zero(self) -> bool:
        return all(self.alg.ring.is_zero(c) for c in self.coords)


@dataclass(frozen=True)
class LinOp:
    """A linear operator on an algebra, as a matrix acting on coordinate columns."""

    alg: "Algebra"
    matrix: tuple

    @classmethod
    def from_rows(cls, alg, rows):
        return cls(alg, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, alg, cols):
        return cls(alg, tuple(zip(*cols)))

    @classmethod
    def identity(cls, alg):
        return cls.from_rows(alg, linalg.identity(alg.ring, alg.dim))

    def __call__(self, x: JElem) -> JElem:
        return JElem(self.alg, tuple(linalg.mat_vec(self.matrix, x.coords)))

    def __matmul__(self, o: "LinOp") -> "LinOp":
        return LinOp.from_rows(self.alg, linalg.mat_mul(self.matrix, o.matrix))

    def __add__(self, o):
        return LinOp.from_rows(self.alg, linalg.mat_add(self.matrix, o.matrix))

    def __sub__(self, o):
        return LinOp.from_rows(self.alg, linalg.mat_sub(self.matrix, o.matrix))

    def __rmul__(self, c):
        return LinOp.from_rows(self.alg, linalg.mat_scale(c, self.matrix))

    def __eq__(self, o):
        if not isinstance(o, LinOp):
            return NotImplemented
        return self.alg == o.alg and linalg.mat_equal(self.alg.ring, self.matrix, o.matrix)

    __hash__ = None

    def det(self):
        return linalg.det(self.alg.ring, self.matrix)

    def is_zero(self):
        return all(self.alg.ring.is_zero(x) for r in self.matrix for x in r)


# -- algebra descriptors ----------------------------------------------------


class Algebra:
    """Common machinery; subclasses define the product, cone and fast inverse."""

    ring: Ring
    dim: int

    def _check_ring(self):
        if not self.ring.has_half:
            raise ValueError(f"{self.ring} does not contain 1/2; no linear Jordan algebra over it")

    # construction
    def elem(self, coords: Sequence) -> JElem:
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise DescriptorMismatch(f"{self} needs {self.dim} coordinates, got {len(coords)}")
        R = self.ring
        out = []
        for c in coords:
            if not R.contains(c):
                c = R.from_rational(c)
            out.append(c)
        return JElem(self, tuple(out))

    def zero(self) -> JElem:
        return JElem(self, (self.ring.zero,) * self.dim)

    def basis(self) -> list[JElem]:
        R = self.ring
        return [JElem(self, tuple(R.one if i == k else R.zero for i in range(self.dim)))
                for k in range(self.dim)]

    def check(self, *xs: JElem):
        for x in xs:
            if not isinstance(x, JElem) or (x.alg is not self and x.alg != self):
                raise DescriptorMismatch(f"{x!r} is not an element of {self}")

    # family hooks, on coordinate tuples
    def _bullet(self, x, y):
        raise NotImplementedError

    def _unit(self):
        raise NotImplementedError

    def _quad(self, a, x):
        """Closed-form Q_a(x); families override with their own formula."""
        return self._quad_L(a, x)

    def _quad_L(self, a, x):
        ax = self._bullet(a, x)
        aax = self._bullet(a, ax)
        a2x = self._bullet(self._bullet(a, a), x)
        return tuple(2 * u - v for u, v in zip(aax, a2x))

    def _inverse(self, a):
        raise NotImplementedError

    def _cone(self, a) -> bool:
        raise NotImplementedError

    def unit(self) -> JElem:
        return JElem(self, self._unit())

    def inverse(self, a: JElem) -> JElem:
        """Jordan inverse by the family's closed formula (the fast path)."""
        return JElem(self, self._inverse(a.coords))

    def is_invertible(self, a: JElem) -> bool:
        try:
            self._inverse(a.coords)
        except NotInvertible:
            return False
        return True

    def quad(self, a: JElem, x: JElem) -> JElem:
        return JElem(self, self._quad(a.coords, x.coords))

    def in_cone(self, a: JElem) -> bool:
        self.ring._require_order()
        return self._cone(a.coords)

    # sampling
    def sample(self, rng, bound) -> JElem:
        R = self.ring
        return JElem(self, tuple(R.sample(rng, bound) for _ in range(self.dim)))

    def sample_cone(self, rng, bound) -> JElem:
        raise NotImplementedError

    def sample_invertible(self, rng, bound, tries=1000) -> JElem:
        for _ in range(tries):
            a = self.sample(rng, bound)
            if self.is_invertible(a):
                return a
        raise InternalInvariantViolation(f"could not sample an invertible element of {self}")

    # serialization
    def elem_to_json(self, x: JElem):
        return {"descriptor": self.to_json(), "coordinates": [self.ring.to_json(c) for c in x.coords]}

    def format(self, x: JElem) -> str:
        return "[" + ", ".join(str(self.ring.to_json(c)) for c in x.coords) + "]"

    def parse_coords(self, coords) -> JElem:
        return self.elem([self.ring.from_json(c) for c in coords])

    @property
    def is_sym(self):
        return False


@dataclass(frozen=True)
class Scalar(Algebra):
    ring: Ring = Q

    def __post_init__(self):
        self._check_ring()

    @property
    def dim(self):
        return 1

    def __str__(self):
        return f"Scalar({self.ring})"

    def over(self, ring):
        return Scalar(ring)

    def _unit(self):
        return (self.ring.one,)

    def _bullet(self, x, y):
        return (x[0] * y[0],)

    def _quad(self, a, x):
        return (a[0] * a[0] * x[0],)

    def _inverse(self, a):
        return (self.ring.invert(a[0]),)

    def _cone(self, a):
        return self.ring.is_positive(a[0])

    def sample_cone(self, rng, bound):
        return JElem(self, (self.ring.sample_positive(rng, bound),))

    def to_json(self):
        return {"scalar": ring_to_json(self.ring)}


@dataclass(frozen=True)
class Sym(Algebra):
    """Symmetric matrices; coordinates are the upper triangle, row-major."""

    n: int
    ring: Ring = Q

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Sym needs n >= 1")
        self._check_ring()

    @property
    def dim(self):
        return self.n * (self.n + 1) // 2

    @property
    def is_sym(self):
        return True

    def __str__(self):
        return f"Sym({self.n},{self.ring})"

    def over(self, ring):
        return Sym(self.n, ring)

    def to_matrix(self, c):
        n = self.n
        M = [[None] * n for _ in range(n)]
        k = 0
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = c[k]
                k += 1
        return M

    def from_matrix(self, M):
        n = self.n
        return tuple(M[i][j] for i in range(n) for j in range(i, n))

    def matrix(self, x: JElem):
        return self.to_matrix(x.coords)

    def from_full(self, rows) -> JElem:
        """Build an element from a full ``n x n`` array, validating symmetry."""
        R = self.ring
        rows = [[c if R.contains(c) else R.from_rational(c) for c in r] for r in rows]
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DescriptorMismatch(f"expected a {self.n}x{self.n} array")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not R.equal(rows[i][j], rows[j][i]):
                    raise DescriptorMismatch("matrix is not symmetric")
        return JElem(self, self.from_matrix(rows))

    def _unit(self):
        return self.from_matrix(linalg.identity(self.ring, self.n))

    def _bullet(self, x, y):
        X, Y = self.to_matrix(x), self.to_matrix(y)
        XY = linalg.mat_mul(X, Y)
        n = self.n
        return tuple((XY[i][j] + XY[j][i]) * HALF for i in range(n) for j in range(i, n))

    def _quad(self, a, x):
        A = self.to_matrix(a)
        return self.from_matrix(linalg.mat_mul(linalg.mat_mul(A, self.to_matrix(x)), A))

    def _inverse(self, a):
        return self.from_matrix(linalg.inverse(self.ring, self.to_matrix(a)))

    def _cone(self, a):
        return linalg.leading_minors_positive(self.ring, self.to_matrix(a))

    def sample_cone(self, rng, bound):
        # L D L^T with L unit lower triangular and D positive diagonal
        R, n = self.ring, self.n
        L = linalg.identity(R, n)
        for i in range(n):
            for j in range(i):
                L[i][j] = R.sample(rng, bound)
        D = [[R.sample_positive(rng, bound) if i == j else R.zero for j in range(n)] for i in range(n)]
        M = linalg.mat_mul(linalg.mat_mul(L, D), linalg.transpose(L))
        return JElem(self, self.from_matrix(M))

    def to_json(self):
        return {"sym": self.n, "ring": ring_to_json(self.ring)}


@dataclass(frozen=True)
class Spin(Algebra):
    """Spin factor ``K ⊕ K^m`` with the standard form ``Σ w_i²``."""

    m: int
    ring: Ring = Q

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("Spin needs m >= 1")
        self._check_ring()

    @property
    def dim(self):
        return self.m + 1

    def __str__(self):
        return f"Spin({self.m},{self.ring})"

    def over(self, ring):
        return Spin(self.m, ring)

    def _unit(self):
        R = self.ring
        return (R.one,) + (R.zero,) * self.m

    def _dot(self, w, v):
        s = self.ring.zero
        for a, b in zip(w, v):
            s = s + a * b
        return s

    def norm(self, a):
        """The quadratic norm ``λ² - Σ w_i²``."""
        return a[0] * a[0] - self._dot(a[1:], a[1:])

    def _bullet(self, x, y):
        lam, w = x[0], x[1:]
        mu, v = y[0], y[1:]
        return (lam * mu + self._dot(w, v),) + tuple(lam * b + mu * a for a, b in zip(w, v))

    def _quad(self, a, x):
        # Q_a x = 2 <a, x> a - N(a) x*, with x* = (μ, -v)
        t = 2 * (a[0] * x[0] + self._dot(a[1:], x[1:]))
        N = self.norm(a)
        return (t * a[0] - N * x[0],) + tuple(t * ai + N * xi for ai, xi in zip(a[1:], x[1:]))

    def _inverse(self, a):
        r = self.ring.invert(self.norm(a))
        return (a[0] * r,) + tuple(-(w * r) for w in a[1:])

    def _cone(self, a):
        R = self.ring
        return R.is_positive(a[0]) and R.is_positive(self.norm(a))

    def sample_cone(self, rng, bound):
        R = self.ring
        w = tuple(R.sample(rng, bound) for _ in range(self.m))
        l1 = sum((abs(c) for x in w for c in R.coords(x)), ZERO)
        lam = R.from_rational(l1) + R.sample_positive(rng, bound)
        return JElem(self, (lam,) + w)

    def to_json(self):
        return {"spin": self.m, "ring": ring_to_json(self.ring)}


@dataclass(frozen=True)
class Product(Algebra):
    """Direct product of algebras over a common ring; cone = product of cones."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("Product needs at least one factor")
        rings = {f.ring for f in self.factors}
        if len(rings) != 1:
            raise DescriptorMismatch("Product factors must share one ring")

    @property
    def ring(self):
        return self.factors[0].ring

    @property
    def dim(self):
        return sum(f.dim for f in self.factors)

    def __str__(self):
        return "Product(" + ",".join(str(f) for f in self.factors) + ")"

    def over(self, ring):
        return Product(tuple(f.over(ring) for f in self.factors))

    def split(self, c):
        out, i = [], 0
        for f in self.factors:
            out.append(tuple(c[i:i + f.dim]))
            i += f.dim
        return out

    def components(self, x: JElem) -> list[JElem]:
        return [JElem(f, c) for f, c in zip(self.factors, self.split(x.coords))]

    def join(self, parts: Sequence[JElem]) -> JElem:
        out = ()
        for f, p in zip(self.factors, parts):
            f.check(p)
            out += p.coords
        return JElem(self, out)

    def _map(self, fn, *cs):
        parts = [self.split(c) for c in cs]
        out = ()
        for k, f in enumerate(self.factors):
            out += tuple(fn(f, *(p[k] for p in parts)))
        return out

    def _unit(self):
        out = ()
        for f in self.factors:
            out += f._unit()
        return out

    def _bullet(self, x, y):
        return self._map(lambda f, a, b: f._bullet(a, b), x, y)

    def _quad(self, a, x):
        return self._map(lambda f, u, v: f._quad(u, v), a, x)

    def _inverse(self, a):
        return self._map(lambda f, u: f._inverse(u), a)

    def _cone(self, a):
        return all(f._cone(p) for f, p in zip(self.factors, self.split(a)))

    def sample(self, rng, bound):
        return self.join([f.sample(rng, bound) for f in self.factors])

    def sample_cone(self, rng, bound):
        return self.join([f.sample_cone(rng, bound) for f in self.factors])

    def to_json(self):
        return {"product": [f.to_json() for f in self.factors]}


def dual_ext(base: Algebra) -> Algebra:
    """The tangent algebra ``TV = V ⊕ εV``, realized as ``V`` over ``R[ε]``."""
    return base.over(DualRing(base.ring))


def tangent_base(alg: Algebra) -> Algebra:
    if not isinstance(alg.ring, DualRing):
        raise DescriptorMismatch(f"{alg} is not a tangent algebra")
    return alg.over(alg.ring.base)


def tangent_split(x: JElem) -> tuple[JElem, JElem]:
    """``x + εu  ->  (x, u)`` for an element of a tangent algebra."""
    base = tangent_base(x.alg)
    return (JElem(base, tuple(c.re for c in x.coords)), JElem(base, tuple(c.eps for c in x.coords)))


def tangent_join(alg: Algebra, x: JElem, u: JElem) -> JElem:
    from .rings import Dual
    base = tangent_base(alg)
    base.check(x, u)
    return JElem(alg, tuple(Dual(a, b) for a, b in zip(x.coords, u.coords)))


def complexify(alg: Algebra) -> Algebra:
    """``V[i]``: scalar extension by ``R[i]``."""
    return alg.over(GaussRing(alg.ring))


def algebra_from_json(obj) -> Algebra:
    if isinstance(obj, dict) and len(obj) >= 1:
        if "scalar" in obj:
            return Scalar(ring_from_json(obj["scalar"]))
        if "sym" in obj:
            return Sym(int(obj["sym"]), ring_from_json(obj.get("ring", "Q")))
        if "spin" in obj:
            return Spin(int(obj["spin"]), ring_from_json(obj.get("ring", "Q")))
        if "product" in obj:
            return Product(tuple(algebra_from_json(f) for f in obj["product"]))
        if "dual_ext" in obj:
            return dual_ext(algebra_from_json(obj["dual_ext"]))
    raise DescriptorMismatch(f"bad algebra descriptor {obj!r}")


def elem_from_json(obj, alg: Algebra | None = None) -> JElem:
    """Parse ``{descriptor, coordinates}`` (or ``{descriptor, matrix}`` for Sym)."""
    if alg is None:
        alg = algebra_from_json(obj["descriptor"])
    if "matrix" in obj:
        if not isinstance(alg, Sym):
            raise DescriptorMismatch("'matrix' is only valid for Sym algebras")
        return alg.from_full([[alg.ring.from_json(c) for c in r] for r in obj["matrix"]])
    return alg.parse_coords(obj["coordinates"])


# -- public operations -------------------------------------------------------


def jbullet(a: JElem, b: JElem) -> JElem:
    a.alg.check(b)
    return JElem(a.alg, a.alg._bullet(a.coords, b.coords))


def jsquare(a: JElem) -> JElem:
    return jbullet(a, a)


def left_mult(a: JElem) -> LinOp:
    """The operator ``L_a: x -> a • x``."""
    alg = a.alg
    return LinOp.from_columns(alg, [alg._bullet(a.coords, e.coords) for e in alg.basis()])


def jquad(a: JElem) -> LinOp:
    """``Q_a = 2 L_a² - L_{a²}`` as an explicit matrix."""
    La = left_mult(a)
    La2 = left_mult(jsquare(a))
    return 2 * (La @ La) - La2


def quad_apply(a: JElem, x: JElem) -> JElem:
    """``Q_a(x)`` by the family's closed formula (``axa`` for matrices)."""
    a.alg.check(x)
    return a.alg.quad(a, x)


def jdop(a: JElem, x: JElem) -> LinOp:
    """The operator ``b -> D_{a,x}(b) = Q_{a+b}(x) - Q_a(x) - Q_b(x)``."""
    alg = a.alg
    alg.check(x)
    qa = alg._quad_L(a.coords, x.coords)
    cols = []
    for e in alg.basis():
        ab = tuple(u + v for u, v in zip(a.coords, e.coords))
        q_ab = alg._quad_L(ab, x.coords)
        q_b = alg._quad_L(e.coords, x.coords)
        cols.append(tuple(s - t - u for s, t, u in zip(q_ab, qa, q_b)))
    return LinOp.from_columns(alg, cols)


def triple_product(a: JElem, x: JElem, b: JElem) -> JElem:
    """``{a x b} = 2(a(bx) + b(ax) - (ab)x)``, the bilinearization of Q."""
    return 2 * (a * (b * x) + b * (a * x) - (a * b) * x)


def jinverse(a: JElem) -> JElem:
    """``a⁻¹ = Q_a⁻¹(a)`` by an exact linear solve, post-verified."""
    alg = a.alg
    Qa = jquad(a)
    if not alg.ring.is_unit(Qa.det()):
        raise NotInvertible(f"Q_a is singular for a = {alg.format(a)}")
    z = JElem(alg, tuple(linalg.solve(alg.ring, [list(r) for r in Qa.matrix], list(a.coords))))
    if Qa(z) != a:
        raise InternalInvariantViolation("Q_a(a⁻¹) != a after solve")
    return z


def cone_contains(a: JElem) -> bool:
    """Membership ``a > 0`` in the symmetric cone."""
    return a.alg.in_cone(a)


def jsym(x: JElem, y: JElem) -> JElem:
    """The point symmetry ``s_x(y) = Q_x(y⁻¹)``."""
    x.alg.check(y)
    x.alg.inverse(x)  # x must be invertible too
    return quad_apply(x, x.alg.inverse(y))


# -- axiom checkers ----------------------------------------------------------


def _fmt(x: JElem):
    return x.alg.format(x)


def check_jordan_axioms(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Exact checks of (J1) (J2) (U) (FF) (CF) and the operator identities."""
    rng = spec.rng(f"jordan:{alg}")
    b_ = spec.bound
    rep = AxiomReport("Jordan algebra identities", str(alg), spec.seed, spec.cases)
    J1, J2, U, FF, CF = (rep.check(n) for n in ("J1", "J2", "U", "FF", "CF"))
    QL = rep.check("Q=2L_a^2-L_{a^2}")
    DP = rep.check("D-polarization")
    SYM = rep.check("Sym: Q_a(x)=axa") if alg.is_sym else None
    SS1, SS2, SS3 = (rep.check(n) for n in ("s_x^2=id", "s_x(x)=x", "s_x s_y s_x=s_{s_x(y)}"))
    INV = rep.check("inverse-involution")

    e = alg.unit()
    U.record(jquad(e) == LinOp.identity(alg), lambda: {})
    for _ in range(spec.cases):
        a, b, x = alg.sample(rng, b_), alg.sample(rng, b_), alg.sample(rng, b_)
        wit = lambda: {"a": _fmt(a), "b": _fmt(b), "x": _fmt(x)}
        J1.record(a * b == b * a, wit)
        a2 = a * a
        J2.record(a * (a2 * b) == a2 * (a * b), wit)
        U.record(quad_apply(e, x) == x, wit)
        Qa, Qb = jquad(a), jquad(b)
        FF.record(jquad(Qa(b)) == Qa @ Qb @ Qa, wit)
        CF.record(Qa @ jdop(b, a) == jdop(a, b) @ Qa, wit)
        QL.record(Qa(x) == alg.quad(a, x), wit)
        DP.record(jdop(a, x)(b) == triple_product(a, x, b), wit)
        if SYM is not None:
            A, X = alg.matrix(a), alg.matrix(x)
            axa = linalg.mat_mul(linalg.mat_mul(A, X), A)
            SYM.record(Qa(x) == JElem(alg, alg.from_matrix(axa)), wit)
        # symmetric-space law on invertible samples
        if alg.is_invertible(a) and alg.is_invertible(b):
            sa_b = jsym(a, b)
            SS1.record(jsym(a, sa_b) == b, wit)
            SS2.record(jsym(a, a) == a, wit)
            y = alg.sample(rng, b_)
            if alg.is_invertible(y) and alg.is_invertible(jsym(b, y)) and alg.is_invertible(jsym(a, y)):
                lhs = jsym(a, jsym(b, jsym(a, y)))
                SS3.record(lhs == jsym(sa_b, y), wit)
            else:
                SS3.skip()
            INV.record(jinverse(jinverse(a)) == a and jinverse(a) == alg.inverse(a), wit)
        else:
            SS1.skip(), SS2.skip(), SS3.skip(), INV.skip()
    return rep


def check_poja_axioms(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """(OJ0)-(OJ2), the symmetric-cone lemma, and the cone axioms, by sampling."""
    alg.ring._require_order()
    rng = spec.rng(f"poja:{alg}")
    bd = spec.bound
    rep = AxiomReport("partially ordered Jordan algebra axioms", str(alg), spec.seed, spec.cases)
    OJ0, OJ1, OJ2 = rep.check("OJ0: e>0"), rep.check("OJ1: Ω ⊂ V^×"), rep.check("OJ2: Q_b(Ω) ⊂ Ω")
    OJ2i = rep.check("Q_{b^-1}(Ω) ⊂ Ω")
    STAB = rep.check("s_x(Ω) ⊂ Ω")
    SQ = rep.check("x^2 ∈ Ω for x ∈ V^×")
    ADD = rep.check("Ω + Ω ⊂ Ω")
    SAL = rep.check("Ω ∩ -Ω = ∅")
    POS = rep.check("positive multiples")
    e = alg.unit()
    OJ0.record(cone_contains(e), lambda: {})
    for k in range(spec.cases):
        a = alg.sample_cone(rng, bd)
        c = alg.sample_cone(rng, bd)
        b = alg.sample_invertible(rng, bd)
        wit = lambda: {"a": _fmt(a), "b": _fmt(b), "c": _fmt(c)}
        if not cone_contains(a):
            raise InternalInvariantViolation(f"cone sampler produced {a!r}")
        try:
            jinverse(a)
            ok = True
        except NotInvertible:
            ok = False
        OJ1.record(ok, wit)
        OJ2.record(cone_contains(quad_apply(b, a)), wit)
        OJ2i.record(cone_contains(quad_apply(alg.inverse(b), a)), wit)
        STAB.record(cone_contains(jsym(b, a)) and cone_contains(jsym(c, a)), wit)
        SQ.record(cone_contains(b * b), wit)
        ADD.record(cone_contains(a + c), wit)
        SAL.record(not cone_contains(-a), wit)
        t = alg.ring.sample_positive(rng, bd)
        POS.record(cone_contains(t * a), wit)
        # also test random (non-constructed) elements that happen to be positive
        r = alg.sample(rng, bd)
        if cone_contains(r):
            OJ2.record(cone_contains(quad_apply(b, r)), lambda: {"a": _fmt(r), "b": _fmt(b)})
            SAL.record(not cone_contains(-r), lambda: {"a": _fmt(r)})
    return rep


def check_formally_real(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """``a² + b² ∈ Ω`` for sampled ``a ∈ V`` and invertible ``b``."""
    alg.ring._require_order()
    rng = spec.rng(f"freal:{alg}")
    rep = AxiomReport("formal reality", str(alg), spec.seed, spec.cases)
    FR = rep.check("a^2+b^2 > 0")
    for _ in range(spec.cases):
        a = alg.sample(rng, spec.bound)
        b = alg.sample_invertible(rng, spec.bound)
        FR.record(cone_contains(a * a + b * b), lambda: {"a": _fmt(a), "b": _fmt(b)})
    return rep
