"""Affine images ``]a,b[ ∩ V`` of intervals, torus boxes and figure output."""

from __future__ import annotations

import csv
import enum
import io
import itertools
from dataclasses import dataclass
from pathlib import Path

from .chart import Finite, Infinity, point_to_json, transversal
from .cyclic import as_model, in_R
from .errors import (
    DegenerateEndpoint, NotApplicable, NotTransversal, PreconditionViolation, UnsupportedProjection,
)
from .jordan import Algebra, JElem, Product, Scalar
from .reports import AxiomReport, SampleSpec
from .rings import HALF, ONE, Q, ZERO, format_rational, rational


class ImageClass(enum.Enum):
    PARABOLIC = "P"
    ELLIPTIC = "E"
    HYPERBOLIC = "H"


def classify_pair(a, b) -> ImageClass:
    if not transversal(a, b):
        raise NotTransversal(f"{a!r} and {b!r} are not transversal")
    if isinstance(a, Infinity) or isinstance(b, Infinity):
        return ImageClass.PARABOLIC
    if a.alg.in_cone(b.v - a.v):
        return ImageClass.ELLIPTIC
    return ImageClass.HYPERBOLIC


def member_by_cones(a, b, x: JElem) -> bool:
    """Membership of ``x`` in ]a,b[ from cone tests alone (no group words)."""
    cls = classify_pair(a, b)
    alg = x.alg
    if cls is ImageClass.HYPERBOLIC:
        raise NotApplicable("hyperbolic images have no cone description")
    if isinstance(b, Infinity):
        return alg.in_cone(x - a.v)
    if isinstance(a, Infinity):
        return alg.in_cone(b.v - x)
    return alg.in_cone(x - a.v) and alg.in_cone(b.v - x)


def check_two_paths(alg: Algebra, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """Normalization-path and cone-path membership agree for P and E pairs."""
    rng = spec.rng(f"twopath:{alg}")
    rep = AxiomReport("affine images: two-path agreement", str(alg), spec.seed, spec.cases)
    fam = {
        "parabolic a+Ω": rep.check("parabolic ]a,∞["),
        "parabolic b-Ω": rep.check("parabolic ]∞,b["),
        "elliptic": rep.check("elliptic ]a,b["),
    }
    conv = rep.check("elliptic convexity")
    inf = Infinity(alg)
    for _ in range(spec.cases):
        a = alg.sample(rng, spec.bound)
        b = a + alg.sample_cone(rng, spec.bound)
        pairs = {
            "parabolic a+Ω": (Finite(a), inf),
            "parabolic b-Ω": (inf, Finite(b)),
            "elliptic": (Finite(a), Finite(b)),
        }
        for key, (p, q) in pairs.items():
            x = _near_sample(alg, rng, spec.bound, p, q)
            via_R = in_R(p, Finite(x), q)
            fam[key].record(via_R == member_by_cones(p, q, x),
                            lambda: {"a": point_to_json(p), "b": point_to_json(q), "x": alg.elem_to_json(x)},
                            premise=via_R)
        # convexity of the elliptic image, on two members
        p, q = pairs["elliptic"]
        x, y = _inside_elliptic(alg, rng, spec.bound, a, b), _inside_elliptic(alg, rng, spec.bound, a, b)
        t = rational(f"{rng.randint(1, 9)}/10")
        z = (ONE - t) * x + t * y
        conv.record(in_R(p, Finite(z), q),
                    lambda: {"a": alg.elem_to_json(a), "b": alg.elem_to_json(b), "x": alg.elem_to_json(x),
                             "y": alg.elem_to_json(y), "t": format_rational(t)})
    for c in fam.values():
        c.note = f"members={c.nontrivial}"
    return rep


def _near_sample(alg, rng, bound, p, q):
    """A test point: half the time built to lie in the image."""
    if rng.random() < 0.5:
        return alg.sample(rng, bound)
    if isinstance(q, Infinity):
        return p.v + alg.sample_cone(rng, bound)
    if isinstance(p, Infinity):
        return q.v - alg.sample_cone(rng, bound)
    return _inside_elliptic(alg, rng, bound, p.v, q.v)


def _inside_elliptic(alg, rng, bound, a, b):
    """A member of (a+Ω) ∩ (b−Ω): a perturbed point of the segment, by rejection."""
    t = rational(f"{rng.randint(1, 9)}/10")
    mid = a + t * (b - a)
    scale = rational(f"1/{10 * bound * bound}")
    for _ in range(20):
        x = mid + scale * alg.sample(rng, bound)
        if alg.in_cone(x - a) and alg.in_cone(b - x):
            return x
    return mid


def hyperbolic_superset_check(a, b, spec: SampleSpec = SampleSpec()) -> AxiomReport:
    """(a+Ω) ∪ (b−Ω) lies in ]a,b[ for b < a; also hunts for non-convexity.

    The deterministic witness is ``x = a + (a-b)/2``, ``y = b - (a-b)/2``,
    whose midpoint ``(a+b)/2`` is never in ]a,b[.
    """
    if not (isinstance(a, Finite) and isinstance(b, Finite)):
        raise PreconditionViolation("hyperbolic images need a, b in V")
    alg = a.alg
    d = a.v - b.v
    if not alg.in_cone(d):
        raise PreconditionViolation("need b < a, i.e. a - b in the cone")
    rng = spec.rng(f"hyper:{alg}:{alg.format(a.v)}:{alg.format(b.v)}")
    rep = AxiomReport("hyperbolic images contain (a+Ω) ∪ (b−Ω)", str(alg), spec.seed, spec.cases)
    up, down = rep.check("a+Ω within ]a,b["), rep.check("b-Ω within ]a,b[")
    for _ in range(spec.cases):
        x = a.v + alg.sample_cone(rng, spec.bound)
        up.record(in_R(a, Finite(x), b), lambda: {"x": alg.elem_to_json(x)})
        y = b.v - alg.sample_cone(rng, spec.bound)
        down.record(in_R(a, Finite(y), b), lambda: {"y": alg.elem_to_json(y)})

    x, y = a.v + HALF * d, b.v - HALF * d
    mid = HALF * (x + y)
    if in_R(a, Finite(x), b) and in_R(a, Finite(y), b) and not in_R(a, Finite(mid), b):
        rep.findings.append({"kind": "non-convex", "x": alg.format(x), "y": alg.format(y),
                             "midpoint": alg.format(mid)})
    # sampled members outside (a+Ω) ∪ (b−Ω): the inclusion is strict there
    for _ in range(spec.cases):
        z = alg.sample(rng, spec.bound)
        if (in_R(a, Finite(z), b) and not alg.in_cone(z - a.v) and not alg.in_cone(b.v - z)):
            rep.findings.append({"kind": "strict-inclusion", "z": alg.format(z)})
            break
    return rep


# -- torus -------------------------------------------------------------------


@dataclass(frozen=True)
class Box:
    """Open box ``∏ (lo_i, hi_i)`` in the cube chart (−1,1)^n."""

    sides: tuple

    def contains(self, t) -> bool:
        return all(lo < x < hi for (lo, hi), x in zip(self.sides, t))

    def to_json(self):
        return [[format_rational(lo), format_rational(hi)] for lo, hi in self.sides]


def torus_boxes(a, b) -> list[Box]:
    a, b = [rational(x) for x in a], [rational(x) for x in b]
    if len(a) != len(b):
        raise PreconditionViolation("a and b need the same length")
    per = []
    for ai, bi in zip(a, b):
        if not (-1 < ai < 1 and -1 < bi < 1):
            raise PreconditionViolation("endpoints must lie in the open cube (-1, 1)")
        if ai == bi:
            raise DegenerateEndpoint(f"a_i = b_i = {format_rational(ai)}")
        per.append([(ai, bi)] if ai < bi else [(ai, ONE), (-ONE, bi)])
    return [Box(tuple(sides)) for sides in itertools.product(*per)]


def cube_to_line(t):
    """Order isomorphism (−1,1) → ℚ, ``t ↦ t/(1−|t|)``."""
    t = rational(t)
    if not -1 < t < 1:
        raise PreconditionViolation("cube coordinates must lie in (-1, 1)")
    return t / (ONE - abs(t))


def torus_algebra(n: int) -> Product:
    return Product(tuple(Scalar(Q) for _ in range(n)))


def cube_point(geo, t):
    """The point of the product geometry with cube coordinates ``t``."""
    return geo.embed(geo.alg.elem([cube_to_line(c) for c in t]))


def cube_grid(n: int, steps: int = 20):
    axis = [-ONE + rational(f"{2 * k + 1}/{steps}") for k in range(steps)]
    return list(itertools.product(axis, repeat=n))


def torus_grid_check(a, b, steps: int = 20) -> AxiomReport:
    """Box membership versus ``in_R_full`` on the whole ``steps^n`` grid."""
    from .geometry import geometry_for, in_R_full
    n = len(a)
    boxes = torus_boxes(a, b)
    geo = geometry_for(torus_algebra(n))
    pa, pb = cube_point(geo, a), cube_point(geo, b)
    label = "a=" + ",".join(map(format_rational, map(rational, a))) + " b=" + ",".join(
        map(format_rational, map(rational, b)))
    rep = AxiomReport("torus boxes versus the product cyclic order", f"torus{n} {label}", 0, steps ** n)
    k = sum(1 for ai, bi in zip(map(rational, a), map(rational, b)) if bi < ai)
    card = rep.check("2^k boxes")
    card.record(len(boxes) == 2 ** k, lambda: {"boxes": len(boxes), "k": k})
    agree = rep.check("grid agreement")
    for t in cube_grid(n, steps):
        in_box = any(bx.contains(t) for bx in boxes)
        agree.record(in_box == in_R_full(pa, cube_point(geo, t), pb),
                     lambda: {"t": [format_rational(c) for c in t]}, premise=in_box)
    agree.note = f"members={agree.nontrivial}"
    return rep


# -- rendering ---------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Per-axis ``(lo, hi, steps)``; samples sit at cell centres."""

    axes: tuple

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """``"lo:hi:steps[,lo:hi:steps]"``, numbers as ``p/q``."""
        axes = []
        for part in text.split(","):
            lo, hi, steps = part.split(":")
            lo, hi, steps = rational(lo), rational(hi), int(steps)
            if not lo < hi or steps < 1:
                raise ValueError(f"bad grid axis {part!r}")
            axes.append((lo, hi, steps))
        return cls(tuple(axes))

    def centres(self, k):
        lo, hi, steps = self.axes[k]
        return [lo + (hi - lo) * rational(f"{2 * i + 1}/{2 * steps}") for i in range(steps)]


SVG_SIZE = 512
FILL = "#3b6ea5"


def _fmt(x) -> str:
    return f"{float(x):.3f}"


def image_grid(obj, a, b, grid: GridSpec, coords=(0, 1), base: JElem | None = None, cube: bool = False):
    """Grid rows ``(coordinates, member)``; ``cube`` maps coordinates by t ↦ t/(1−|t|)."""
    model = as_model(obj)
    alg = model.alg
    dims = len(grid.axes)
    if dims not in (1, 2) or len(coords) < dims:
        raise UnsupportedProjection("only 1- or 2-dimensional projections are supported")
    coords = tuple(coords[:dims])
    if any(not 0 <= c < alg.dim for c in coords):
        raise UnsupportedProjection(f"coordinate index out of range for {alg}")
    base = base if base is not None else alg.zero()
    axes = [grid.centres(k) for k in range(dims)]
    rows = []
    for pt in itertools.product(*axes):
        cs = list(base.coords)
        for c, val in zip(coords, pt):
            cs[c] = cube_to_line(val) if cube else val
        x = model.embed(alg.elem(cs))
        rows.append((pt, model.in_R(a, x, b)))
    return rows


def render_image(obj, a, b, grid: GridSpec, svg: str | Path | None = None, csv_path: str | Path | None = None,
                 coords=(0, 1), base: JElem | None = None, cube: bool = False, boxes=()):
    """Shade grid cells in ]a,b[; write SVG and/or CSV; return (svg_text, csv_text)."""
    rows = image_grid(obj, a, b, grid, coords, base, cube)
    try:
        cls = classify_pair(a, b).value
    except (NotTransversal, AttributeError, TypeError):
        cls = ""
    svg_text = _svg(rows, grid, boxes)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{c}" for c in range(len(grid.axes))] + ["member", "class"])
    for pt, m in rows:
        w.writerow([format_rational(v) for v in pt] + [int(m), cls])
    csv_text = buf.getvalue()
    if svg is not None:
        Path(svg).write_text(svg_text)
    if csv_path is not None:
        Path(csv_path).write_text(csv_text)
    return svg_text, csv_text


def _svg(rows, grid: GridSpec, boxes=()):
    dims = len(grid.axes)
    (lo0, hi0, n0) = grid.axes[0]
    (lo1, hi1, n1) = grid.axes[1] if dims == 2 else (ZERO, ONE, 1)
    cw, ch = rational(SVG_SIZE) / n0, rational(SVG_SIZE) / n1
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
           f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
           f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white" stroke="black"/>']
    for idx, (_, member) in enumerate(rows):
        if not member:
            continue
        i, j = (idx // n1, idx % n1) if dims == 2 else (idx, 0)
        x, y = i * cw, SVG_SIZE - (j + 1) * ch
        out.append(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cw)}" height="{_fmt(ch)}" fill="{FILL}"/>')
    for bx in boxes:
        (xlo, xhi) = bx.sides[0]
        (ylo, yhi) = bx.sides[1] if len(bx.sides) > 1 else (lo1, hi1)
        sx = lambda v: (v - lo0) / (hi0 - lo0) * SVG_SIZE
        sy = lambda v: SVG_SIZE - (v - lo1) / (hi1 - lo1) * SVG_SIZE
        out.append(f'<rect x="{_fmt(sx(xlo))}" y="{_fmt(sy(yhi))}" width="{_fmt(sx(xhi) - sx(xlo))}" '
                   f'height="{_fmt(sy(ylo) - sy(yhi))}" fill="none" stroke="black" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
