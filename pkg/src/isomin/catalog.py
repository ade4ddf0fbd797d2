"""Reference charts with known geometry, plus demo recursion data.

Fixtures double as test oracles: each constructor documents the frozen
properties the rest of the package asserts against (flag dimensions,
isotropy orders, mean curvature values).
"""
from __future__ import annotations

import math

import numpy as np

from . import cpoly as cp
from . import jet as J
from .errors import InvalidData
from .geometry import ImmersionChart
from .weierstrass import WeierstrassData, isotropic_step


def make_holomorphic_curve(powers: tuple[int, ...], pad: int = 0,
                           domain=((-1.0, 1.0), (-1.0, 1.0))) -> ImmersionChart:
    """Real chart of z -> (z^p1, ..., z^pk), C^k = R^(2k), zero-padded to
    R^(2k + pad). Holomorphic curves are minimal and fully isotropic; with
    distinct positive powers the flag is nicely curved away from z = 0."""
    powers = tuple(int(p) for p in powers)
    if not powers or any(p < 1 for p in powers):
        raise InvalidData(f"powers must be positive integers, got {powers}")
    if pad < 0:
        raise InvalidData("pad must be nonnegative")

    def jet_fn(point, space):
        z = J.CJet(J.jet_variable(space, 0, point[0]),
                   J.jet_variable(space, 1, point[1]))
        out = []
        for p in powers:
            w = J.CJet(J.jet_constant(space, 1.0), J.jet_constant(space, 0.0))
            for _ in range(p):
                w = w * z
            out.extend([w.re, w.im])
        zero = J.jet_constant(space, 0.0)
        out.extend([zero] * pad)
        return out

    name = "curve-" + "-".join(str(p) for p in powers)
    if pad:
        name += f"-pad{pad}"
    return ImmersionChart(domain_dim=2, ambient_dim=2 * len(powers) + pad,
                          ambient="euclidean", jet_fn=jet_fn,
                          domain=tuple(domain), name=name)


def make_plane(pad: int = 3) -> ImmersionChart:
    """Affine plane (u, v, 0, ...) in R^(2 + pad): totally geodesic, N_1 = 0.

    The default pad keeps the ambient dimension at 5 so the plane remains a
    legal (if everywhere degenerate) unit tangent bundle base."""
    if pad < 1:
        raise InvalidData("pad must be at least 1")

    def jet_fn(point, space):
        zero = J.jet_constant(space, 0.0)
        return [J.jet_variable(space, 0, point[0]),
                J.jet_variable(space, 1, point[1])] + [zero] * pad

    return ImmersionChart(domain_dim=2, ambient_dim=2 + pad,
                          ambient="euclidean", jet_fn=jet_fn,
                          domain=((-1.0, 1.0), (-1.0, 1.0)),
                          name=f"plane-pad{pad}")


def make_veronese(domain=((-0.85, 0.85), (-0.85, 0.85))) -> ImmersionChart:
    """Veronese minimal surface in S^4, over a stereographic chart of S^2
    that excludes a cap around the far pole. Substantial with flag (2, 2),
    tau = 1, minimal (isotropy order 1)."""

    def jet_fn(point, space):
        u = J.jet_variable(space, 0, point[0])
        v = J.jet_variable(space, 1, point[1])
        u2 = J.jet_mul(u, u)
        v2 = J.jet_mul(v, v)
        inv = J.jet_recip(u2 + v2 + 1.0)
        x = 2.0 * J.jet_mul(u, inv)
        y = 2.0 * J.jet_mul(v, inv)
        zc = J.jet_mul(1.0 - u2 - v2, inv)
        r3 = math.sqrt(3.0)
        return [r3 * J.jet_mul(x, y),
                r3 * J.jet_mul(x, zc),
                r3 * J.jet_mul(y, zc),
                (r3 / 2.0) * (J.jet_mul(x, x) - J.jet_mul(y, y)),
                0.5 * (J.jet_mul(x, x) + J.jet_mul(y, y)
                       - 2.0 * J.jet_mul(zc, zc))]

    return ImmersionChart(domain_dim=2, ambient_dim=5, ambient="sphere",
                          jet_fn=jet_fn, domain=tuple(domain),
                          name="veronese")


def make_great_sphere() -> ImmersionChart:
    """Totally geodesic S^2 inside S^4 (stereographic chart): tau = 0."""

    def jet_fn(point, space):
        u = J.jet_variable(space, 0, point[0])
        v = J.jet_variable(space, 1, point[1])
        u2 = J.jet_mul(u, u)
        v2 = J.jet_mul(v, v)
        inv = J.jet_recip(u2 + v2 + 1.0)
        zero = J.jet_constant(space, 0.0)
        return [2.0 * J.jet_mul(u, inv),
                2.0 * J.jet_mul(v, inv),
                J.jet_mul(1.0 - u2 - v2, inv),
                zero, zero]

    return ImmersionChart(domain_dim=2, ambient_dim=5, ambient="sphere",
                          jet_fn=jet_fn, domain=((-0.85, 0.85), (-0.85, 0.85)),
                          name="great-sphere")


def make_geodesic_sphere(radius: float = math.pi / 4) -> ImmersionChart:
    """Geodesic distance sphere of the given radius in S^4, as a 3-chart.

    Nowhere minimal: the mean curvature norm is 3 cot(radius) and the
    relative nullity is 0. The chart stays away from the coordinate poles
    of the S^3 fiber parametrization."""
    if not 0.0 < radius < math.pi:
        raise InvalidData("radius must lie in (0, pi)")
    cr, sr = math.cos(radius), math.sin(radius)

    def jet_fn(point, space):
        t1 = J.jet_variable(space, 0, point[0])
        t2 = J.jet_variable(space, 1, point[1])
        t3 = J.jet_variable(space, 2, point[2])
        c1, s1 = J.jet_cos(t1), J.jet_sin(t1)
        c2, s2 = J.jet_cos(t2), J.jet_sin(t2)
        c3, s3 = J.jet_cos(t3), J.jet_sin(t3)
        return [J.jet_constant(space, cr),
                sr * c1,
                sr * J.jet_mul(s1, c2),
                sr * J.jet_mul(s1, J.jet_mul(s2, c3)),
                sr * J.jet_mul(s1, J.jet_mul(s2, s3))]

    return ImmersionChart(domain_dim=3, ambient_dim=5, ambient="sphere",
                          jet_fn=jet_fn,
                          domain=((0.5, math.pi - 0.5),
                                  (0.5, math.pi - 0.5),
                                  (0.0, 2.0 * math.pi)),
                          periodic=(False, False, True),
                          name=f"geodesic-sphere-r{radius:.4g}")


def make_graph(coeff_uu: float, coeff_uv: float, coeff_vv: float,
               extra: tuple[float, float, float] | None = None) -> ImmersionChart:
    """Graph chart (u, v, q1(u, v)[, q2(u, v)]) for quadratic heights;
    handy for frozen ellipticity cases."""

    def jet_fn(point, space):
        u = J.jet_variable(space, 0, point[0])
        v = J.jet_variable(space, 1, point[1])
        out = [u, v,
               coeff_uu * J.jet_mul(u, u) + coeff_uv * J.jet_mul(u, v)
               + coeff_vv * J.jet_mul(v, v)]
        if extra is not None:
            a, b, c = extra
            out.append(a * J.jet_mul(u, u) + b * J.jet_mul(u, v)
                       + c * J.jet_mul(v, v))
        return out

    return ImmersionChart(domain_dim=2, ambient_dim=3 + (extra is not None),
                          ambient="euclidean", jet_fn=jet_fn,
                          domain=((-1.0, 1.0), (-1.0, 1.0)), name="graph")


def demo_weierstrass_data(n: int, final_integration: bool = True) -> WeierstrassData:
    """Frozen demo data sets for n in {4, 5, 6, 7, 8}.

    n = 4 integrates to a chart congruent to the (z, z^2) curve; n = 5 and
    n = 6 are generic (alpha0 . alpha0 != 0), n = 7 uses alpha0 produced by
    one recursion step, so the result is 2-isotropic."""
    one = cp.ONE
    zp = cp.poly(0, 1)
    if n == 4:
        alpha0: cp.PolyVec = ()
    elif n == 5:
        alpha0 = (one,)
    elif n == 6:
        alpha0 = (one, zp)
    elif n == 7:
        alpha0 = isotropic_step((one,), one)
    elif n == 8:
        alpha0 = (one, zp, cp.poly(1, 0, -1), cp.poly(0.5, 0.25))
    else:
        raise InvalidData(f"no demo data for n = {n}")
    return WeierstrassData(n=n, alpha0=alpha0, beta1=one, beta2=one,
                           final_integration=final_integration)


def random_weierstrass_data(rng: np.random.Generator, n: int,
                            max_degree: int = 4) -> WeierstrassData:
    """Seeded random data: coefficients uniform in the unit square, betas
    with constant term bounded away from zero."""
    if n < 4:
        raise InvalidData(f"need n >= 4, got n = {n}")

    def rand_poly(deg: int, floor: float = 0.0) -> cp.ComplexPoly:
        c = rng.uniform(-1.0, 1.0, size=(deg + 1, 2))
        coeffs = [complex(a, b) for a, b in c]
        if floor:
            head = coeffs[0]
            mag = max(abs(head), 1e-3)
            coeffs[0] = head / mag * (floor + abs(head))
        return cp.ComplexPoly(tuple(coeffs))

    alpha0 = tuple(rand_poly(int(rng.integers(0, max_degree + 1)))
                   for _ in range(n - 4))
    if alpha0 and all(p.is_zero() for p in alpha0):
        alpha0 = (cp.ONE,) + alpha0[1:]
    beta1 = rand_poly(int(rng.integers(0, max_degree + 1)), floor=0.5)
    beta2 = rand_poly(int(rng.integers(0, max_degree + 1)), floor=0.5)
    return WeierstrassData(n=n, alpha0=alpha0, beta1=beta1, beta2=beta2)


def make_fixture(name: str, **params) -> ImmersionChart:
    """Registry addressed by the CLI: 'veronese', 'plane', 'great-sphere',
    'geodesic-sphere', or 'curve-<p1>-<p2>-...' (pad via params)."""
    if name == "veronese":
        return make_veronese()
    if name == "plane":
        return make_plane(int(params["pad"])) if "pad" in params else make_plane()
    if name == "great-sphere":
        return make_great_sphere()
    if name == "geodesic-sphere":
        return make_geodesic_sphere(float(params.get("radius", math.pi / 4)))
    if name.startswith("curve-"):
        tokens = name.split("-")[1:]
        pad = int(params.get("pad", 0))
        if tokens and tokens[-1].startswith("pad"):
            tail, tokens = tokens[-1], tokens[:-1]
            try:
                pad = int(tail[3:])
            except ValueError:
                raise InvalidData(f"bad curve fixture name {name!r}")
        try:
            powers = tuple(int(p) for p in tokens)
        except ValueError:
            raise InvalidData(f"bad curve fixture name {name!r}")
        return make_holomorphic_curve(powers, pad=pad)
    raise InvalidData(f"unknown fixture {name!r}")
