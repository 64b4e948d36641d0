"""Named instances: built-in aliases plus those declared in a config file."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, DescriptorMismatch
from .geometry import FullModel, geometry_for
from .images import cube_point, cube_grid, torus_algebra
from .jordan import Algebra, Scalar, Spin, Sym, algebra_from_json, dual_ext
from .reports import DEFAULT_BOUND, DEFAULT_CASES, DEFAULT_SEED, SampleSpec
from .rings import Q, Ring, TrivialNOrder, ZInt, ring_from_json


@dataclass(frozen=True)
class Instance:
    name: str
    obj: Algebra | Ring
    torus: int = 0
    description: str = ""

    @property
    def is_ring(self) -> bool:
        return isinstance(self.obj, Ring)

    @property
    def alg(self) -> Algebra:
        if self.is_ring:
            raise ConfigError(f"instance {self.name!r} is a ring, not an algebra")
        return self.obj


def _builtin():
    S = Scalar(Q)
    return {
        "q": Instance("q", S, description="Scalar(Q), the rational line"),
        "qq": Instance("qq", torus_algebra(2), description="Product(Q, Q)"),
        "torus2": Instance("torus2", torus_algebra(2), torus=2, description="2-torus, product geometry on cube grids"),
        "torus3": Instance("torus3", torus_algebra(3), torus=3, description="3-torus, product geometry on cube grids"),
        "sym2q": Instance("sym2q", Sym(2), description="Sym(2, Q)"),
        "sym3q": Instance("sym3q", Sym(3), description="Sym(3, Q)"),
        "spin3q": Instance("spin3q", Spin(3), description="Spin(3, Q), Lorentz cone"),
        "dual-q": Instance("dual-q", dual_ext(S), description="tangent algebra of Scalar(Q)"),
        "dual-sym2q": Instance("dual-sym2q", dual_ext(Sym(2)), description="tangent algebra of Sym(2, Q)"),
        "zint": Instance("zint", ZInt, description="the integers (not an inverse por)"),
        "trivial-n": Instance("trivial-n", TrivialNOrder, description="Q ordered by x>0 iff x in N"),
    }


BUILTIN = _builtin()


class TorusGridModel(FullModel):
    """Product geometry whose random points come from the cube grid."""

    def __init__(self, n: int, steps: int = 20, name: str | None = None):
        super().__init__(geometry_for(torus_algebra(n)), name or f"torus{n}")
        self.grid = cube_grid(n, steps)

    def random_point(self, rng, bound):
        u = rng.random()
        if u < 0.1:
            return self.infinity()
        p = cube_point(self.geo, rng.choice(self.grid))
        if u < 0.3:
            p = self.act(self.random_word(rng, bound), p)
        return p


def model_for(inst: Instance, full: bool = False):
    """Chart model by default; torus instances always use the grid product model."""
    from .cyclic import ChartModel
    if inst.torus:
        return TorusGridModel(inst.torus)
    if full:
        return FullModel(geometry_for(inst.alg), inst.name + " (full)")
    return ChartModel(inst.alg, inst.name)


# -- config ------------------------------------------------------------------


@dataclass
class Config:
    instances: dict
    seed: int = DEFAULT_SEED
    cases: int = DEFAULT_CASES
    bound: int = DEFAULT_BOUND
    catalog: tuple = ()

    def spec(self, seed=None, cases=None) -> SampleSpec:
        return SampleSpec(self.seed if seed is None else seed, self.cases if cases is None else cases, self.bound)

    def instance(self, name: str) -> Instance:
        if name not in self.instances:
            raise ConfigError(f"unknown instance {name!r}; known: {', '.join(sorted(self.instances))}",
                              field="instance")
        return self.instances[name]


def _line_of(text: str, key: str):
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return None


def load_config(path: str | Path | None) -> Config:
    """Read a JSON config; built-in aliases are always available."""
    cfg = Config(dict(BUILTIN))
    if path is None:
        return cfg
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigError(f"cannot read config: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, line=e.lineno) from e
    if not isinstance(data, dict):
        raise ConfigError("top level must be an object", line=1)
    known = {"instances", "defaults", "catalog"}
    for k in data:
        if k not in known:
            raise ConfigError(f"unknown key; expected one of {sorted(known)}", field=k, line=_line_of(text, k))
    for name, desc in data.get("instances", {}).items():
        try:
            if isinstance(desc, dict) and "ring" in desc and len(desc) == 1:
                obj = ring_from_json(desc["ring"])
            else:
                obj = algebra_from_json(desc)
        except (DescriptorMismatch, ValueError, TypeError) as e:
            raise ConfigError(str(e), field=f"instances.{name}", line=_line_of(text, name)) from e
        cfg.instances[name] = Instance(name, obj, description="declared in config")
    defaults = data.get("defaults", {})
    for key in ("seed", "cases", "bound"):
        if key in defaults:
            v = defaults[key]
            if not isinstance(v, int) or isinstance(v, bool) or v < (0 if key == "seed" else 1):
                raise ConfigError("must be a positive integer", field=f"defaults.{key}", line=_line_of(text, key))
            setattr(cfg, key, v)
    cfg.catalog = tuple(data.get("catalog", ()))
    return cfg
