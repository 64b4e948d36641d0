"""Complexification V[i] and the tube domain ``T_Ω = V + iΩ``.

Elements of V[i] are pairs (re, im) of base elements.  Arithmetic happens
in the scalar extension of the base algebra by i, so the Jordan inverse is
the same Q-operator solve used for V itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorMismatch
from .jordan import Algebra, JElem, Sym, complexify, jinverse
from .reports import AxiomReport, SampleSpec
from .rings import Gauss, Q


@dataclass(frozen=True)
class ComplexJElem:
    re: JElem
    im: JElem

    def __post_init__(self):
        if self.re.alg != self.im.alg:
            raise DescriptorMismatch("real and imaginary parts live in different algebras")

    @property
    def alg(self) -> Algebra:
        return self.re.alg

    def __neg__(self):
        return ComplexJElem(-self.re, -self.im)

    def to_ext(self) -> JElem:
        ext = complexify(self.alg)
        return JElem(ext, tuple(Gauss(r, i) for r, i in zip(self.re.coords, self.im.coords)))

    @classmethod
    def from_ext(cls, base: Algebra, z: JElem) -> "ComplexJElem":
        return cls(JElem(base, tuple(c.re for c in z.coords)), JElem(base, tuple(c.im for c in z.coords)))

    def to_json(self):
        return {"re": self.alg.elem_to_json(self.re), "im": self.alg.elem_to_json(self.im)}


def tube_contains(z: ComplexJElem) -> bool:
    return z.alg.in_cone(z.im)


def complex_inverse(z: ComplexJElem) -> ComplexJElem:
    """Jordan inverse in V[i]; raises NotInvertible."""
    return ComplexJElem.from_ext(z.alg, jinverse(z.to_ext()))


def inversion_at_i(z: ComplexJElem) -> ComplexJElem:
    """``z ↦ −z⁻¹``."""
    return -complex_inverse(z)


def tube_experiment(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Is every tube point invertible, and does ``z ↦ −z⁻¹`` preserve the tube?

    Asserted for Sym(n, ℚ); exploratory (findings only) elsewhere.
    """
    from .errors import NotInvertible
    exploratory = not (isinstance(alg, Sym) and alg.ring == Q)
    rng = spec.rng(f"tube:{alg}")
    rep = AxiomReport("inversion at i on the tube domain", str(alg), spec.seed, spec.cases,
                      exploratory=exploratory)
    inv, stay, invol = rep.check("invertible"), rep.check("-z^-1 in the tube"), rep.check("involution")
    for _ in range(spec.cases):
        z = ComplexJElem(alg.sample(rng, spec.bound), alg.sample_cone(rng, spec.bound))
        try:
            w = inversion_at_i(z)
        except NotInvertible:
            inv.record(False, lambda: {"z": z.to_json()})
            if exploratory:
                rep.findings.append({"kind": "not-invertible", "z": z.to_json()})
            continue
        inv.record(True)
        ok = tube_contains(w)
        stay.record(ok, lambda: {"z": z.to_json(), "w": w.to_json()})
        if not ok and exploratory:
            rep.findings.append({"kind": "leaves-tube", "z": z.to_json(), "w": w.to_json()})
        try:
            back = inversion_at_i(w)
            invol.record(back == z, lambda: {"z": z.to_json(), "w": w.to_json()})
        except NotInvertible:
            invol.skip()
    return rep
