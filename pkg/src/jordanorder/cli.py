"""Command-line front end (``jordanorder``).

Exit codes: 0 when every asserted check passes, 1 when one fails (witness
files are written next to the report), 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import cyclic, geometry, images, jordan, rings, topology, tube
from .chart import Finite, Infinity, point_from_json, transversal
from .errors import ConfigError, InternalInvariantViolation, JordanOrderError, NotApplicable
from .instances import Instance, load_config, model_for
from .reports import AxiomReport
from .rings import format_rational, rational

OUT_ENV = "JORDANORDER_OUT"

# -- parsing helpers ----------------------------------------------------------


def parse_point(alg, text: str):
    """Chart point from text: ``inf``, ``2``, ``-1/2``, ``3e`` (a multiple of
    the unit), a JSON coordinate list, or a JSON point record."""
    t = text.strip()
    if t in ("inf", "∞", "infinity"):
        return Infinity(alg)
    m = re.fullmatch(r"(-?[0-9/]*)e", t)
    if m:
        c = m.group(1)
        c = {"": "1", "-": "-1"}.get(c, c)
        return Finite(rational(c) * alg.unit())
    if t.startswith("{") or t.startswith("["):
        try:
            obj = json.loads(t)
        except json.JSONDecodeError as e:
            raise ConfigError(f"bad point {text!r}: {e.msg}", field="point") from e
        if isinstance(obj, list):
            return Finite(alg.parse_coords(obj))
        if isinstance(obj, dict) and "matrix" in obj:
            return Finite(jordan.elem_from_json(obj, alg))
        return point_from_json(alg, obj)
    if alg.dim == 1 and alg.ring == rings.Q:
        return Finite(alg.elem([rational(t)]))
    if t == "0":
        return Finite(alg.zero())
    raise ConfigError(f"cannot parse point {text!r} for {alg}", field="point")


def parse_hom(geo, alg, text: str):
    t = text.strip()
    if t.startswith("{") and '"hom"' in t:
        return geo.point_from_json(json.loads(t)["hom"])
    p = parse_point(alg, t)
    return geo.infinity() if isinstance(p, Infinity) else geo.embed(p.v)


def split_points(alg, text: str, k: int):
    """Split a list of ``k`` points; ``;`` separates, or ``,`` for scalar lines."""
    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        try:
            obj = json.loads(t)
            if isinstance(obj, list) and len(obj) == k and all(isinstance(o, (dict, list, str)) for o in obj):
                return [json.dumps(o) if not isinstance(o, str) else o for o in obj]
        except json.JSONDecodeError:
            pass
    parts = t.split(";") if ";" in t else t.split(",")
    if len(parts) != k:
        raise ConfigError(f"expected {k} points, got {len(parts)} in {text!r}", field="points")
    return parts


def parse_rationals(text: str):
    try:
        return [rational(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"bad rational list {text!r}", field="rationals") from e


def out_dir(args) -> Path:
    d = Path(args.out or os.environ.get(OUT_ENV) or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _slug(s: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "-", s).strip("-").lower()


# -- check-axioms -------------------------------------------------------------

ALGEBRA_SUITES = ("por", "jordan", "poja", "formal-reality", "pco", "invariance", "convexity",
                  "compression", "quadruple", "symmetry", "base-interval", "images", "consistency",
                  "totality")
INFORMATIONAL = {"totality"}


def _consistency(alg, spec):
    try:
        geometry.geometry_for(alg)
    except NotApplicable:
        return None
    return geometry.check_chart_full_consistency(alg, spec)


def _suite(name: str, inst: Instance, spec, full: bool = False):
    if inst.is_ring:
        if name != "por":
            return None
        return rings.check_por_axioms(inst.obj, spec)
    alg = inst.alg
    model = model_for(inst, full)
    ordered = alg.ring.ordered
    table = {
        "por": lambda: rings.check_por_axioms(alg.ring, spec) if ordered else None,
        "jordan": lambda: jordan.check_jordan_axioms(alg, spec),
        "poja": lambda: jordan.check_poja_axioms(alg, spec) if ordered else None,
        "formal-reality": lambda: jordan.check_formally_real(alg, spec) if ordered else None,
        "pco": lambda: cyclic.check_pco_axioms(model, spec),
        "invariance": lambda: cyclic.check_invariance_and_reversal(model, spec),
        "convexity": lambda: cyclic.check_interval_convexity(model, spec),
        "compression": lambda: cyclic.check_compression(model, spec),
        "quadruple": lambda: cyclic.check_quadruple_lemma(model, spec),
        "symmetry": lambda: cyclic.check_interval_symmetry(alg, spec),
        "base-interval": lambda: cyclic.check_base_interval(alg, spec),
        "images": lambda: images.check_two_paths(alg, spec),
        "consistency": lambda: _consistency(alg, spec),
        "totality": lambda: cyclic.check_totality(model, spec),
    }
    if name in table and not ordered and name not in ("jordan",):
        return None
    rep = table[name]()
    if rep is not None and name in INFORMATIONAL:
        rep.exploratory = True
    return rep


def _replay(args, inst: Instance, witness):
    """A command reproducing the failure: a query when the witness is a triple,
    otherwise the same run again."""
    pts = witness.get("triple") if isinstance(witness, dict) else None
    if pts and len(pts) == 3:
        full = any(isinstance(p, dict) and "hom" in p for p in pts)
        return ("jordanorder query-cyclic --instance " + inst.name + (" --full" if full else "")
                + " --triple '" + json.dumps(pts, sort_keys=True) + "'")
    argv = getattr(args, "argv", None)
    return "jordanorder " + " ".join(argv) if argv else None


def write_reports(args, stem: str, inst: Instance, reps: list[AxiomReport]) -> int:
    d = out_dir(args)
    text = "".join(r.to_text() + "\n" for r in reps)
    (d / f"{stem}.txt").write_text(text)
    (d / f"{stem}.json").write_text(json.dumps([r.to_dict() for r in reps], sort_keys=True, indent=2) + "\n")
    failed = False
    for r in reps:
        if r.ok:
            continue
        failed = True
        for c in r.failures:
            w = {"instance": inst.name, "report": r.title, "check": c.name, "seed": r.seed,
                 "witness": c.witness, "replay": _replay(args, inst, c.witness)}
            (d / f"witness-{_slug(inst.name)}-{_slug(r.title)}-{_slug(c.name)}.json").write_text(
                json.dumps(w, sort_keys=True, indent=2) + "\n")
    sys.stdout.write(text)
    return 1 if failed else 0


def cmd_check_axioms(args, cfg):
    inst = cfg.instance(args.instance)
    spec = cfg.spec(args.seed, args.cases)
    names = args.suites.split(",") if args.suites else (["por"] if inst.is_ring else list(ALGEBRA_SUITES))
    for n in names:
        if n not in ALGEBRA_SUITES:
            raise ConfigError(f"unknown suite {n!r}; choose from {', '.join(ALGEBRA_SUITES)}", field="suites")
    if args.full:
        try:
            geometry.geometry_for(inst.alg)
        except NotApplicable as e:
            raise ConfigError(str(e), field="full") from e
    reps = [r for r in (_suite(n, inst, spec, args.full) for n in names) if r is not None]
    return write_reports(args, f"check-axioms-{_slug(inst.name)}-seed{spec.seed}", inst, reps)


# -- queries -----------------------------------------------------------------


def cmd_query_cyclic(args, cfg):
    inst = cfg.instance(args.instance)
    alg = inst.alg
    parts = split_points(alg, args.triple, 3)
    if args.full:
        geo = geometry.geometry_for(alg)
        pts = [parse_hom(geo, alg, p) for p in parts]
    else:
        pts = [parse_point(alg, p) for p in parts]
    print("true" if cyclic.in_R(*pts) else "false")
    return 0


def cmd_query_transversal(args, cfg):
    inst = cfg.instance(args.instance)
    alg = inst.alg
    parts = split_points(alg, args.pair, 2)
    if args.full:
        geo = geometry.geometry_for(alg)
        a, b = (parse_hom(geo, alg, p) for p in parts)
        print("true" if geometry.transversal_full(a, b) else "false")
    else:
        a, b = (parse_point(alg, p) for p in parts)
        print("true" if transversal(a, b) else "false")
    return 0


def cmd_interval_image(args, cfg):
    inst = cfg.instance(args.instance)
    alg = inst.alg
    a, b = (parse_point(alg, p) for p in split_points(alg, args.pair, 2))
    default = "-3:3:60" if alg.dim == 1 else "-3:3:48,-3:3:48"
    grid = images.GridSpec.parse(args.grid or default)
    coords = tuple(int(c) for c in args.coords.split(",")) if args.coords else tuple(range(len(grid.axes)))
    svg_text, csv_text = images.render_image(alg, a, b, grid, args.svg, args.csv, coords)
    members = sum(1 for line in csv_text.splitlines()[1:] if line.split(",")[-2] == "1")
    try:
        cls = images.classify_pair(a, b).name.lower()
    except JordanOrderError:
        cls = "non-transversal"
    print(f"class: {cls}")
    print(f"grid points: {len(csv_text.splitlines()) - 1}  members: {members}")
    return 0


def cmd_torus_boxes(args, cfg):
    a, b = parse_rationals(args.a), parse_rationals(args.b)
    if args.n is not None and not (len(a) == len(b) == args.n):
        raise ConfigError(f"--a and --b need {args.n} coordinates", field="n")
    boxes = images.torus_boxes(a, b)
    for bx in boxes:
        print(" x ".join(f"({format_rational(lo)}, {format_rational(hi)})" for lo, hi in bx.sides))
    print(f"boxes: {len(boxes)}")
    rep = images.torus_grid_check(a, b, args.steps)
    print(f"grid agreement: {rep['grid agreement'].status}  evaluated={rep['grid agreement'].cases}")
    if args.svg or args.csv:
        if len(a) != 2:
            raise ConfigError("figures are only drawn for n = 2", field="n")
        geo_model = geometry.full_model(images.torus_algebra(2))
        pa, pb = images.cube_point(geo_model.geo, a), images.cube_point(geo_model.geo, b)
        grid = images.GridSpec.parse(f"-1:1:{args.steps},-1:1:{args.steps}")
        images.render_image(geo_model, pa, pb, grid, args.svg, args.csv, (0, 1), cube=True, boxes=boxes)
    if not rep.ok:
        return write_reports(args, "torus-boxes", Instance(f"torus{len(a)}", images.torus_algebra(len(a))), [rep])
    return 0


def cmd_topology_probe(args, cfg):
    inst = cfg.instance(args.instance)
    spec = cfg.spec(args.seed, args.cases)
    alg = inst.alg
    probe = args.probe
    if probe is None:
        probe = "fiber" if isinstance(alg.ring, rings.DualRing) else "spectral"
    if probe == "fiber":
        base = jordan.tangent_base(alg) if isinstance(alg.ring, rings.DualRing) else alg
        rep = topology.tangent_fiber_inseparability(base, spec)
    elif probe == "spectral":
        if not isinstance(alg, jordan.Sym):
            raise ConfigError("the spectral probe needs a Sym instance", field="probe")
        rep = topology.spectral_ball_check(alg.n, spec)
    elif probe == "separate":
        if not args.pair:
            raise ConfigError("--pair is required for the separation probe", field="pair")
        p, q = (parse_point(alg, s) for s in split_points(alg, args.pair, 2))
        pts = [parse_point(alg, s) for s in cfg.catalog] if cfg.catalog else []
        if args.catalog:
            pts += [parse_point(alg, s) for s in args.catalog.split(";")]
        found = topology.separating_intervals(p, q, topology.interval_catalog(pts), pts)
        for I1, I2 in found:
            print("separated (sampled-disjoint): ]{},{}[ and ]{},{}[".format(
                *(alg.format(x.v) if isinstance(x, Finite) else "inf" for x in (I1.a, I1.b, I2.a, I2.b))))
        print(f"separating pairs: {len(found)}")
        return 0
    else:
        raise ConfigError(f"unknown probe {probe!r}", field="probe")
    return write_reports(args, f"topology-{probe}-{_slug(inst.name)}-seed{spec.seed}", inst, [rep])


def cmd_tube_experiment(args, cfg):
    inst = cfg.instance(args.instance)
    spec = cfg.spec(args.seed, args.cases)
    rep = tube.tube_experiment(inst.alg, spec)
    return write_reports(args, f"tube-{_slug(inst.name)}-seed{spec.seed}", inst, [rep])


def cmd_list_instances(args, cfg):
    for name in sorted(cfg.instances):
        inst = cfg.instances[name]
        print(f"{name:12s} {inst.obj}  {inst.description}")
    return 0


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordanorder", description="Cyclic orders of ordered Jordan algebras.")
    p.add_argument("--config", help="JSON config declaring instances, defaults and catalogs")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, instance=True, sampling=True):
        if instance:
            sp.add_argument("--instance", required=True)
        if sampling:
            sp.add_argument("--seed", type=int)
            sp.add_argument("--cases", type=int)
        sp.add_argument("--out", help=f"output directory (default ${OUT_ENV} or .)")

    sp = sub.add_parser("check-axioms", help="run property suites on an instance")
    common(sp)
    sp.add_argument("--suites", help="comma-separated subset of: " + ",".join(ALGEBRA_SUITES))
    sp.add_argument("--full", action="store_true", help="run the order checks in the full geometry")
    sp.set_defaults(func=cmd_check_axioms)

    sp = sub.add_parser("query-cyclic", help="is (a, x, b) in R?")
    common(sp, sampling=False)
    sp.add_argument("--triple", required=True)
    sp.add_argument("--full", action="store_true", help="evaluate in the full geometry")
    sp.set_defaults(func=cmd_query_cyclic)

    sp = sub.add_parser("query-transversal", help="are a and b transversal?")
    common(sp, sampling=False)
    sp.add_argument("--pair", required=True)
    sp.add_argument("--full", action="store_true")
    sp.set_defaults(func=cmd_query_transversal)

    sp = sub.add_parser("interval-image", help="shade ]a,b[ over a grid")
    common(sp, sampling=False)
    sp.add_argument("--pair", required=True)
    sp.add_argument("--grid", help='per axis "lo:hi:steps", comma separated')
    sp.add_argument("--coords", help="coordinate indices to vary, e.g. 0,2")
    sp.add_argument("--svg")
    sp.add_argument("--csv")
    sp.set_defaults(func=cmd_interval_image)

    sp = sub.add_parser("torus-boxes", help="boxes of a torus interval and the grid cross-check")
    common(sp, instance=False, sampling=False)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--steps", type=int, default=20)
    sp.add_argument("--svg")
    sp.add_argument("--csv")
    sp.set_defaults(func=cmd_torus_boxes)

    sp = sub.add_parser("topology-probe", help="interval-topology probes")
    common(sp)
    sp.add_argument("--probe", choices=["fiber", "spectral", "separate"])
    sp.add_argument("--pair")
    sp.add_argument("--catalog", help="endpoint points separated by ';'")
    sp.set_defaults(func=cmd_topology_probe)

    sp = sub.add_parser("tube-experiment", help="inversion at i on the tube domain")
    common(sp)
    sp.set_defaults(func=cmd_tube_experiment)

    sp = sub.add_parser("list-instances", help="print known instances")
    common(sp, instance=False, sampling=False)
    sp.set_defaults(func=cmd_list_instances)
    return p


_VALUE_FLAGS = {"--a", "--b", "--triple", "--pair", "--grid", "--catalog"}


def _glue_negative_values(argv):
    """``--b -1/2,0`` would read as a flag; rewrite it as ``--b=-1/2,0``."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and re.match(r"-[0-9./]", nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        cfg = load_config(args.config)
        if getattr(args, "cases", None) is not None and args.cases < 1:
            raise ConfigError("must be positive", field="cases")
        return args.func(args, cfg)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalInvariantViolation:
        raise
    except (JordanOrderError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
