"""Command line front end: generate, analyze, bundle, export.

One executable drives the whole workbench: `generate` builds a minimal
surface from polynomial data and checks its null identities and circle
properties, `analyze` sweeps a surface chart and reports flags, ellipses
and isotropy orders per grid point, `bundle` builds a unit tangent or unit
normal chart and verifies mean curvature, relative nullity and the
splitting tensor equations, `export` writes an OBJ mesh.

Configuration is a single JSON document; command line flags override its
fields. Runs are deterministic: the same config produces byte-identical
reports and meshes. Exit codes: 0 all checks pass, 1 bad input, 2 a
verification failed, 3 structural degeneracy (flag collapse).
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
import warnings
from typing import Sequence

import numpy as np

from . import bundles as B
from . import catalog
from . import geometry as geo
from . import weierstrass as W
from .errors import FlagCollapse, InvalidData, IsominError, NotElliptic, \
    DegeneratePoint, NullityJump, OrderOutOfRange, OrientationFailure

DEFAULT_TOLS = {
    "eps_deg": geo.EPS_DEG,        # metric admissibility floor
    "eps_rank": geo.EPS_RANK,      # relative rank threshold for flags
    "circle": geo.CIRCLE_TOL,      # circularity residual bound
    "null": 1e-12,                 # relative null-identity residual bound
    "mean_curvature": 1e-8,        # |H| bound for minimality verdicts
    "nullity": 1e-8,               # smallest singular value bound for nu >= 1
    "span": 1e-6,                  # splitting tensor span residual bound
    "ode": 1e-5,                   # splitting scalar ODE residual bound
}

CONFIG_KEYS = {"fixture", "params", "surface", "grid", "jet_order",
               "tolerances", "out", "seed", "final_integration", "kind",
               "projection", "splitting_points"}

SPOT_POINTS = ((0.17, 0.11), (-0.23, 0.31), (0.05, -0.37))


def _pyify(x):
    if isinstance(x, dict):
        return {str(k): _pyify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_pyify(v) for v in x]
    if isinstance(x, np.ndarray):
        return _pyify(x.tolist())
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def report_text(doc: dict) -> str:
    return json.dumps(_pyify(doc), sort_keys=True, indent=2) + "\n"


def _emit(doc: dict, out: str | None):
    text = report_text(doc)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_grid(raw) -> list[tuple[float, float, int]]:
    """Accept 'lo:hi:n,lo:hi:n[,lo:hi:n]' or a list of [lo, hi, n] triples."""
    if isinstance(raw, str):
        groups = [g.split(":") for g in raw.split(",")]
    else:
        groups = list(raw)
    axes = []
    for g in groups:
        if len(g) != 3:
            raise InvalidData(f"grid axis needs lo:hi:count, got {g!r}")
        try:
            lo, hi, n = float(g[0]), float(g[1]), int(g[2])
        except (TypeError, ValueError):
            raise InvalidData(f"malformed grid axis {g!r}")
        if n < 1:
            raise InvalidData(f"grid count must be positive, got {n}")
        if not hi > lo:
            raise InvalidData(f"grid range must be increasing, got {g!r}")
        axes.append((lo, hi, n))
    if not 2 <= len(axes) <= 3:
        raise InvalidData(f"grids have 2 or 3 axes, got {len(axes)}")
    return axes


def parse_tols(entries, base: dict) -> dict:
    tols = dict(base)
    for entry in entries or ():
        if isinstance(entry, str):
            if "=" not in entry:
                raise InvalidData(f"tolerance needs name=value, got {entry!r}")
            name, _, val = entry.partition("=")
            pairs = [(name.strip(), val)]
        else:
            pairs = list(entry.items())
        for name, val in pairs:
            if name not in DEFAULT_TOLS:
                raise InvalidData(
                    f"unknown tolerance {name!r}; known: "
                    f"{', '.join(sorted(DEFAULT_TOLS))}")
            try:
                fval = float(val)
            except (TypeError, ValueError):
                raise InvalidData(f"tolerance {name} needs a number, got {val!r}")
            if not fval > 0:
                raise InvalidData(f"tolerance {name} must be positive")
            tols[name] = fval
    return tols


def load_config(args) -> dict:
    cfg = {"fixture": None, "params": {}, "surface": None, "grid": None,
           "jet_order": None, "tolerances": {}, "out": None, "seed": 0,
           "final_integration": True, "kind": None, "projection": None,
           "splitting_points": 4}
    if args.config:
        with open(args.config) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InvalidData(f"config is not valid JSON: {exc}")
        if not isinstance(doc, dict):
            raise InvalidData("config must be a JSON object")
        unknown = set(doc) - CONFIG_KEYS
        if unknown:
            raise InvalidData(f"unknown config keys: {sorted(unknown)}")
        cfg.update(doc)
    # flags override config fields
    if args.fixture is not None:
        cfg["fixture"] = args.fixture
    if args.grid is not None:
        cfg["grid"] = args.grid
    if args.jet_order is not None:
        cfg["jet_order"] = args.jet_order
    if args.out is not None:
        cfg["out"] = args.out
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.no_final_integration:
        cfg["final_integration"] = False
    if getattr(args, "kind", None) is not None:
        cfg["kind"] = args.kind
    if getattr(args, "projection", None) is not None:
        cfg["projection"] = args.projection
    cfg["tolerances"] = parse_tols(args.tol,
                                   parse_tols([cfg["tolerances"]], DEFAULT_TOLS)
                                   if cfg["tolerances"] else DEFAULT_TOLS)
    if cfg["jet_order"] is not None:
        k = cfg["jet_order"]
        if not (isinstance(k, int) and 2 <= k <= 6):
            raise InvalidData(f"jet order must be an integer in 2..6, got {k}")
    if cfg["grid"] is not None:
        cfg["grid"] = parse_grid(cfg["grid"])
    if not isinstance(cfg["splitting_points"], int) or cfg["splitting_points"] < 0:
        raise InvalidData("splitting_points must be a nonnegative integer")
    return cfg


def _data_fixture(name: str | None) -> tuple[str, int] | None:
    """Fixture names that denote polynomial surface data, not charts."""
    if not name:
        return None
    m = re.fullmatch(r"n(\d+)", name)
    if m:
        return "demo", int(m.group(1))
    m = re.fullmatch(r"random-n(\d+)", name)
    if m:
        return "random", int(m.group(1))
    return None


def _with_integration(data: W.WeierstrassData, flag: bool) -> W.WeierstrassData:
    if data.final_integration == flag:
        return data
    return W.WeierstrassData(n=data.n, alpha0=data.alpha0, beta1=data.beta1,
                             beta2=data.beta2,
                             int_constants=data.int_constants,
                             final_integration=flag)


def resolve_surface_data(cfg) -> W.WeierstrassData:
    if cfg["surface"] is not None:
        data = W.WeierstrassData.from_json(cfg["surface"])
        return _with_integration(data, cfg["final_integration"])
    kindn = _data_fixture(cfg["fixture"])
    if kindn is not None:
        which, n = kindn
        if which == "demo":
            data = catalog.demo_weierstrass_data(n)
        else:
            rng = np.random.default_rng(cfg["seed"])
            data = catalog.random_weierstrass_data(rng, n)
        return _with_integration(data, cfg["final_integration"])
    raise InvalidData("need a surface in the config or a data fixture "
                      "(n4..n8, random-nN)")


def resolve_chart(cfg) -> geo.ImmersionChart:
    """Surface chart from a fixture name or generated from polynomial data."""
    name = cfg["fixture"]
    if name is not None and _data_fixture(name) is None:
        return catalog.make_fixture(name, **(cfg["params"] or {}))
    return W.generate_surface(resolve_surface_data(cfg)).chart


def _axes_for(chart, cfg, default3=(5, 5, 8), default2=(9, 9)):
    grid = cfg["grid"]
    if grid is None:
        counts = default2 if chart.domain_dim == 2 else default3
        return geo.grid_axes(chart, counts), \
            [[lo, hi, n] for (lo, hi), n in zip(chart.domain, counts)]
    if len(grid) != chart.domain_dim:
        raise InvalidData(f"grid has {len(grid)} axes for a "
                          f"{chart.domain_dim}-dimensional chart")
    counts = [n for _, _, n in grid]
    ranges = [(lo, hi) for lo, hi, _ in grid]
    return geo.grid_axes(chart, counts, ranges), [list(g) for g in grid]


def _verdict_line(name: str, ok: bool, detail: str) -> str:
    return f"{name}: {'PASS' if ok else 'FAIL'} ({detail})"


def cmd_generate(cfg) -> int:
    tols = cfg["tolerances"]
    data = resolve_surface_data(cfg)
    rep = W.generate_surface(data)
    ident_max = max(rep.residuals.values())
    ident_ok = ident_max <= tols["null"]

    spots = []
    for p in SPOT_POINTS:
        row = {"point": list(p), "e0_residual": None, "e1_residual": None,
               "singular": False}
        try:
            forms = geo.fundamental_forms(
                rep.chart, p, max_s=2, eps_rank=tols["eps_rank"])
            e0 = geo.curvature_ellipse(rep.chart, p, 0,
                                       eps_rank=tols["eps_rank"], forms=forms)
            row["e0_residual"] = e0.residual
            try:
                e1 = geo.curvature_ellipse(rep.chart, p, 1,
                                           eps_rank=tols["eps_rank"])
                row["e1_residual"] = e1.residual
            except OrderOutOfRange:
                pass  # no first normal space; nothing to check
        except DegeneratePoint:
            row["singular"] = True
        except NotElliptic:
            row["e0_residual"] = 1.0
        spots.append(row)

    checked = [r for r in spots if not r["singular"]]
    e0_ok = all(r["e0_residual"] <= tols["circle"] for r in checked)
    e1_vals = [r["e1_residual"] for r in checked if r["e1_residual"] is not None]
    e1_ok = all(v <= tols["circle"] for v in e1_vals)
    passed = ident_ok and e0_ok and e1_ok

    doc = rep.to_json()
    doc.update({"command": "generate", "seed": cfg["seed"],
                "tolerances": tols, "spot_checks": spots,
                "verdicts": {"identities": ident_ok, "minimal": e0_ok,
                             "first_ellipse_circular": e1_ok},
                "pass": passed})
    print(f"surface {rep.chart.name}: ambient R^{rep.chart.ambient_dim}")
    print(_verdict_line("null identities", ident_ok,
                        f"max residual {ident_max:.3g} vs {tols['null']:g}"))
    print(_verdict_line("minimality (order-0 circles)", e0_ok,
                        f"{len(checked)} spot points"))
    if e1_vals:
        print(_verdict_line("first ellipse circular", e1_ok,
                            f"max residual {max(e1_vals):.3g} vs "
                            f"{tols['circle']:g}"))
    else:
        print("first ellipse circular: VACUOUS (no first normal space)")
    _emit(doc, cfg["out"])
    return 0 if passed else 2


def cmd_analyze(cfg) -> int:
    tols = cfg["tolerances"]
    chart = resolve_chart(cfg)
    if chart.domain_dim != 2:
        raise InvalidData("analyze sweeps surface charts; use bundle for "
                          "3-dimensional charts")
    axes, grid_doc = _axes_for(chart, cfg)
    max_order = None if cfg["jet_order"] is None else cfg["jet_order"] - 1
    rows = [geo.point_report(chart, p, tol=tols["circle"],
                             eps_rank=tols["eps_rank"], max_order=max_order)
            for p in geo.grid_points(axes)]
    counts = tuple(len(a) for a in axes)
    cert = geo.nicely_curved_certificate(chart, counts=counts,
                                         max_order=max_order,
                                         eps_rank=tols["eps_rank"])
    singular = sum(1 for r in rows if r["singular"])
    orders = [r["order"] for r in rows if r["order"] is not None]
    doc = {"command": "analyze", "chart": chart.name, "grid": grid_doc,
           "jet_order": cfg["jet_order"], "seed": cfg["seed"],
           "tolerances": tols, "rows": rows, "certificate": cert,
           "summary": {"points": len(rows), "singular": singular,
                       "order_min": min(orders) if orders else None,
                       "order_max": max(orders) if orders else None}}
    print(f"analyzed {chart.name}: {len(rows)} points, {singular} singular")
    print(f"nicely curved: {cert['nicely_curved']} (dims {cert['dims']})")
    if orders:
        print(f"isotropy order: min {min(orders)}, max {max(orders)}")
    _emit(doc, cfg["out"])
    return 0


def _splitting_points(chart, axes, count: int):
    """Deterministic interior sample: walk the grid box diagonally."""
    lo = [float(a[0]) for a in axes]
    hi = [float(a[-1]) for a in axes]
    pts = []
    for i in range(count):
        t = (i + 1.0) / (count + 1.0)
        pts.append(tuple(l + (h - l) * (t if k != 1 else 1.0 - t)
                         for k, (l, h) in enumerate(zip(lo, hi))))
    return pts


def cmd_bundle(cfg) -> int:
    tols = cfg["tolerances"]
    kind = cfg["kind"]
    if kind not in ("bipolar", "polar"):
        raise InvalidData("bundle needs kind bipolar or polar")
    base = resolve_chart(cfg)
    notes = []
    if kind == "bipolar":
        bc = B.unit_tangent_chart(base)
        center = tuple((l + h) / 2.0 for l, h in base.domain)
        try:
            iso = geo.isotropy_order(base, center, tol=tols["circle"],
                                     eps_rank=tols["eps_rank"])
            if iso < 1:
                notes.append(f"base isotropy order {iso} < 1 at the domain "
                             "center; the unit tangent chart need not be "
                             "minimal")
        except (DegeneratePoint, NotElliptic) as exc:
            notes.append(f"could not verify base isotropy: {exc}")
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            bc = B.unit_normal_chart(base, eps_rank=tols["eps_rank"],
                                     circle_tol=tols["circle"])
        notes.extend(str(w.message) for w in caught)
    for note in notes:
        print(f"warning: {note}")

    axes, grid_doc = _axes_for(bc.chart, cfg)
    rows = [B.bundle_point_report(bc, p, eps_rank=tols["eps_rank"])
            for p in geo.grid_points(axes)]
    live = [r for r in rows if not r["singular"]]
    singular = len(rows) - len(live)

    h_max = max((r["H"] for r in live), default=0.0)
    h_ok = h_max <= tols["mean_curvature"]
    sv_max = max((r["sv"][-1] for r in live), default=0.0)
    nu_ok = sv_max <= tols["nullity"]
    nus = sorted({r["nu"] for r in live})

    split_rows = []
    for p in _splitting_points(bc.chart, axes, cfg["splitting_points"]):
        row = {"point": list(p), "skipped": None, "error": None}
        try:
            nrep = B.relative_nullity(bc, p, eps_rank=tols["eps_rank"])
            if nrep.nu != 1:
                row["skipped"] = f"nullity {nrep.nu} != 1"
            else:
                sp = B.splitting_tensor(bc, p, eps_rank=tols["eps_rank"])
                row.update({"C": sp.C, "u": sp.u, "v": sp.v,
                            "span_residual": sp.span_residual,
                            "ode_residuals": sp.ode_residuals,
                            "fiber_alignment": sp.fiber_alignment})
        except DegeneratePoint:
            row["skipped"] = "singular"
        except (NullityJump, OrientationFailure) as exc:
            row["error"] = str(exc)
        split_rows.append(row)
    attempted = [r for r in split_rows if r["skipped"] is None]
    span_ok = all(r["error"] is None and r["span_residual"] <= tols["span"]
                  for r in attempted)
    ode_ok = all(r["error"] is None
                 and max(r["ode_residuals"].values()) <= tols["ode"]
                 for r in attempted)

    passed = h_ok and nu_ok and span_ok and ode_ok
    doc = {"command": "bundle", "kind": kind, "chart": bc.chart.name,
           "base": base.name, "tau": bc.tau, "grid": grid_doc,
           "seed": cfg["seed"], "tolerances": tols, "notes": notes,
           "rows": rows, "splitting": split_rows,
           "summary": {"points": len(rows), "singular": singular,
                       "H_max": h_max, "sv_min_max": sv_max,
                       "nullity_values": nus},
           "verdicts": {"mean_curvature": h_ok, "nullity": nu_ok,
                        "splitting_span": span_ok, "splitting_ode": ode_ok},
           "pass": passed}
    print(f"bundle {bc.chart.name}: {len(rows)} points, {singular} singular")
    print(_verdict_line("mean curvature", h_ok,
                        f"max |H| {h_max:.3g} vs {tols['mean_curvature']:g}"))
    print(_verdict_line("relative nullity >= 1", nu_ok,
                        f"max smallest singular value {sv_max:.3g} vs "
                        f"{tols['nullity']:g}; values {nus}"))
    print(_verdict_line("splitting span", span_ok,
                        f"{len(attempted)} points"))
    print(_verdict_line("splitting equations", ode_ok,
                        f"{len(attempted)} points"))
    _emit(doc, cfg["out"])
    return 0 if passed else 2


def _principal_projection(verts: np.ndarray) -> np.ndarray:
    mu = verts.mean(axis=0)
    Y = verts - mu
    _, V = np.linalg.eigh(Y.T @ Y)
    Wp = V[:, ::-1][:, :3].copy()
    for k in range(Wp.shape[1]):
        col = Wp[:, k]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            Wp[:, k] = -col
    return Y @ Wp


def cmd_export(cfg) -> int:
    if not cfg["out"]:
        raise InvalidData("export needs an output path (--out)")
    if cfg["kind"] is not None:
        if cfg["kind"] not in ("bipolar", "polar"):
            raise InvalidData("kind must be bipolar or polar")
        base = resolve_chart(cfg)
        bc = (B.unit_tangent_chart(base) if cfg["kind"] == "bipolar"
              else B.unit_normal_chart(base))
        chart = bc.chart
    else:
        chart = resolve_chart(cfg)
    axes, grid_doc = _axes_for(chart, cfg)
    pts = geo.grid_points(axes)
    verts = np.array([chart.value(p) for p in pts])

    proj = cfg["projection"]
    if proj is None:
        proj = "principal" if chart.ambient_dim > 3 else [1, 2, 3]
    if isinstance(proj, str) and proj != "principal":
        try:
            proj = [int(x) for x in proj.split(",")]
        except ValueError:
            raise InvalidData(f"projection must be 'principal' or three "
                              f"comma-separated indices, got {proj!r}")
    if proj == "principal":
        xyz = _principal_projection(verts)
        proj_doc = "principal"
    else:
        if (len(proj) != 3
                or any(not isinstance(i, int) or not 1 <= i <= chart.ambient_dim
                       for i in proj)):
            raise InvalidData(f"projection indices must be three coordinates "
                              f"in 1..{chart.ambient_dim}, got {proj}")
        xyz = verts[:, [i - 1 for i in proj]]
        proj_doc = "coords " + " ".join(str(i) for i in proj)

    counts = tuple(len(a) for a in axes)
    faces = []
    if chart.domain_dim == 2:
        nu, nv = counts
        for i in range(nu - 1):
            for j in range(nv - 1):
                a = i * nv + j
                faces.append((a, a + nv, a + nv + 1, a + 1))
    else:
        nu, nv, nt = counts
        span = grid_doc[2][1] - grid_doc[2][0]
        wrap = chart.periodic[2] and abs(span - 2.0 * math.pi) < 1e-9 and nt > 2
        for j in range(nv):
            for i in range(nu - 1):
                for k in range(nt if wrap else nt - 1):
                    k2 = (k + 1) % nt
                    a = (i * nv + j) * nt
                    b = ((i + 1) * nv + j) * nt
                    faces.append((a + k, b + k, b + k2, a + k2))

    lines = ["# isomin mesh",
             f"# chart: {chart.name}",
             "# grid: " + ", ".join(f"{lo:g}:{hi:g}:{n}"
                                    for lo, hi, n in grid_doc),
             f"# projection: {proj_doc}",
             f"# vertices: {len(xyz)} faces: {len(faces)}"]
    lines += [f"v {x:.9g} {y:.9g} {z:.9g}" for x, y, z in xyz]
    lines += ["f " + " ".join(str(i + 1) for i in q) for q in faces]
    with open(cfg["out"], "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(xyz)} vertices, {len(faces)} faces to {cfg['out']}")
    print(f"projection: {proj_doc}")
    return 0


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze,
            "bundle": cmd_bundle, "export": cmd_export}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isomin",
        description="generate and verify isotropic minimal surfaces and "
                    "their sphere bundles")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, info in (("generate", "build a surface from polynomial data "
                                    "and check its identities"),
                       ("analyze", "sweep a surface chart: flags, ellipses, "
                                   "isotropy orders"),
                       ("bundle", "build a unit tangent or unit normal chart "
                                  "and verify it"),
                       ("export", "write an OBJ mesh of a chart")):
        p = sub.add_parser(name, help=info)
        p.add_argument("--config", help="JSON config document")
        p.add_argument("--fixture",
                       help="fixture name (veronese, plane, great-sphere, "
                            "geodesic-sphere, curve-P1-P2..., n4..n8, "
                            "random-nN)")
        p.add_argument("--grid", help="u0:u1:nu,v0:v1:nv[,t0:t1:nt]")
        p.add_argument("--jet-order", type=int, dest="jet_order",
                       help="flag depth control, 2..6")
        p.add_argument("--tol", action="append", metavar="NAME=VALUE",
                       help="override a tolerance: " +
                            ", ".join(sorted(DEFAULT_TOLS)))
        p.add_argument("--out", help="output path for the report or mesh")
        p.add_argument("--seed", type=int, help="recorded rng seed")
        p.add_argument("--no-final-integration", action="store_true",
                       help="take the real part of the second null vector "
                            "without the final integration")
        if name in ("bundle", "export"):
            p.add_argument("--kind", choices=("bipolar", "polar"),
                           help="bipolar = unit tangent, polar = unit normal")
        if name == "export":
            p.add_argument("--projection",
                           help="'principal' or three 1-based coordinates "
                                "like 1,2,3")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg)
    except FlagCollapse as exc:
        print(f"flag collapse: {exc}", file=sys.stderr)
        return 3
    except IsominError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
