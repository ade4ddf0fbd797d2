"""Bundle charts over surface charts, and their 3-manifold geometry.

The unit tangent bundle chart sends (u, v, theta) to cos(theta) E1 +
sin(theta) E2, where (E1, E2) is the Gram-Schmidt frame of the coordinate
tangent vectors of a surface in R^(n+1); the image lies in S^n. The unit
normal bundle chart does the same with a frame of the LAST normal space of
a surface in a sphere. Both are honest immersion charts evaluated through
jets, so every per-point quantity (mean curvature, relative nullity,
splitting tensor of the nullity distribution) comes from the same geometry
code path as any other chart.

Frame fields are built by pivoted orthogonalization in a fixed candidate
order, which keeps the frame deterministic and continuous on chart domains
whose flag has constant dimensions; points where a pivot degenerates
surface as DegeneratePoint.
"""
from __future__ import annotations

import dataclasses
import math
import warnings
from typing import Callable, Sequence

import numpy as np

from . import jet as J
from .errors import (DegeneratePoint, DegenerateValue, FlagCollapse,
                     InvalidData, NullityJump, OrientationFailure,
                     ShapeMismatch)
from . import geometry as geo
from .geometry import ImmersionChart

SPLIT_STEP = 1e-3
SPAN_TOL = 1e-6
ODE_TOL = 1e-5


def _jet_dot(a: Sequence[J.Jet], b: Sequence[J.Jet]) -> J.Jet:
    acc = None
    for x, y in zip(a, b):
        t = J.jet_mul(x, y)
        acc = t if acc is None else acc + t
    return acc


def _jet_orthonormalize(cand: Sequence[J.Jet],
                        basis: list[list[J.Jet]],
                        eps_rank: float) -> list[J.Jet] | None:
    """Orthogonalize a jet vector against accepted unit jet vectors; return
    the normalized residual, or None when the residual is below the rank
    threshold (relative to the candidate's own value scale)."""
    scale2 = _jet_dot(cand, cand).value
    v = list(cand)
    for b in basis:
        coef = _jet_dot(v, b)
        v = [x - J.jet_mul(coef, y) for x, y in zip(v, b)]
    n2 = _jet_dot(v, v)
    if eps_rank > 0.0:
        thr = eps_rank * max(1.0, math.sqrt(max(scale2, 0.0)))
        if n2.value <= thr * thr:
            return None
        # already vetted against the rank threshold; bypass the sqrt guard
        inv = J.jet_recip(J.jet_sqrt(n2, eps=0.0), eps=0.0)
    else:
        inv = J.jet_recip(J.jet_sqrt(n2))
    return [J.jet_mul(x, inv) for x in v]


def _derive(jet: J.Jet, du: int, dv: int) -> J.Jet:
    for _ in range(du):
        jet = jet.derivative(0)
    for _ in range(dv):
        jet = jet.derivative(1)
    return jet


@dataclasses.dataclass
class BundleChart:
    """A 3-chart (u, v, theta) into a sphere, remembering its base."""

    kind: str  # "unit_tangent" or "unit_normal"
    base: ImmersionChart
    chart: ImmersionChart
    tau: int | None = None


def as_chart(obj) -> ImmersionChart:
    return obj.chart if isinstance(obj, BundleChart) else obj


def unit_tangent_chart(base: ImmersionChart,
                       pivot_order: tuple[int, int] = (0, 1)) -> BundleChart:
    """Chart of the unit tangent bundle of a surface in R^(n+1), n + 1 >= 5.

    pivot_order picks which coordinate tangent vector seeds the frame; the
    resulting chart differs by a fiber rotation only, which gauge-invariance
    tests exploit."""
    if base.domain_dim != 2:
        raise ShapeMismatch("unit tangent charts need a surface base")
    if base.ambient != "euclidean":
        raise InvalidData("unit tangent charts take a Euclidean base")
    if base.ambient_dim < 5:
        raise InvalidData(
            f"base must be substantial in R^5 or higher, got R^{base.ambient_dim}"
            " (zero-pad the base to raise the ambient dimension)")
    if sorted(pivot_order) != [0, 1]:
        raise InvalidData("pivot_order must be a permutation of (0, 1)")

    def jet_fn(point, space):
        if space.nvars != 3:
            raise ShapeMismatch("bundle charts evaluate in 3-variable spaces")
        hi = J.get_space(3, space.order + 1)
        bjets = base.jet_fn(point[:2], hi)
        first = [b.derivative(pivot_order[0]) for b in bjets]
        second = [b.derivative(pivot_order[1]) for b in bjets]
        try:
            e1 = _jet_orthonormalize(first, [], eps_rank=0.0)
            e2 = _jet_orthonormalize(second, [e1], eps_rank=0.0)
        except DegenerateValue:
            raise DegeneratePoint(
                f"base not immersed under the frame at {tuple(point[:2])}")
        th = J.jet_variable(space, 2, point[2])
        c, s = J.jet_cos(th), J.jet_sin(th)
        return [J.jet_mul(c, a) + J.jet_mul(s, b) for a, b in zip(e1, e2)]

    chart = ImmersionChart(domain_dim=3, ambient_dim=base.ambient_dim,
                           ambient="sphere", jet_fn=jet_fn,
                           domain=base.domain + ((0.0, 2.0 * math.pi),),
                           periodic=(False, False, True),
                           name=f"unit-tangent({base.name})")
    return BundleChart(kind="unit_tangent", base=base, chart=chart)


def unit_normal_chart(base: ImmersionChart,
                      counts: Sequence[int] = (9, 9),
                      circle_tol: float = geo.CIRCLE_TOL,
                      eps_rank: float = geo.EPS_RANK) -> BundleChart:
    """Chart of the unit sphere bundle of the LAST normal space of a surface
    in a sphere. Requires the flag to be nicely curved over the domain with
    a rank-2 last normal space (FlagCollapse otherwise); the top curvature
    ellipse below the last space should be a circle (warning otherwise)."""
    if base.domain_dim != 2:
        raise ShapeMismatch("unit normal charts need a surface base")
    if base.ambient != "sphere":
        raise InvalidData("unit normal charts take a spherical base")
    center = tuple((lo + hi) / 2.0 for lo, hi in base.domain)
    probe = geo.osculating_flag(base, center, eps_rank=eps_rank)
    tau = probe.tau
    if tau < 1:
        raise FlagCollapse("base has no first normal space (totally geodesic)")
    if probe.dims[-1] != 2:
        raise FlagCollapse(
            f"last normal space has rank {probe.dims[-1]}, need a plane")
    cert = geo.nicely_curved_certificate(base, counts=counts, max_order=tau,
                                         eps_rank=eps_rank)
    if not cert["nicely_curved"]:
        raise FlagCollapse(f"flag dimensions vary over the domain: {cert}")
    top = geo.curvature_ellipse(base, center, tau - 1, eps_rank=eps_rank)
    if top.residual > circle_tol:
        warnings.warn(
            f"curvature ellipse of order {tau - 1} is not a circle "
            f"(residual {top.residual:.3g}); the normal bundle chart need "
            "not be minimal", stacklevel=2)

    def jet_fn(point, space):
        if space.nvars != 3:
            raise ShapeMismatch("bundle charts evaluate in 3-variable spaces")
        hi = J.get_space(3, space.order + tau + 1)
        bjets = base.jet_fn(point[:2], hi)
        tgt = space.order

        def trunc(vec):
            return [J.jet_truncate(x, tgt) for x in vec]

        try:
            basis = [_jet_orthonormalize(trunc(bjets), [], eps_rank=0.0)]
            groups: list[list[list[J.Jet]]] = []
            for s in range(1, tau + 2):
                accepted = []
                for k in range(s + 1):
                    cand = trunc([_derive(b, s - k, k) for b in bjets])
                    got = _jet_orthonormalize(cand, basis, eps_rank=eps_rank)
                    if got is not None:
                        basis.append(got)
                        accepted.append(got)
                groups.append(accepted)
        except DegenerateValue:
            raise DegeneratePoint(
                f"normal frame degenerates at {tuple(point[:2])}")
        frame = groups[-1]
        if len(frame) != 2:
            raise DegeneratePoint(
                f"last normal space has rank {len(frame)} at {tuple(point[:2])}")
        th = J.jet_variable(space, 2, point[2])
        c, s = J.jet_cos(th), J.jet_sin(th)
        return [J.jet_mul(c, a) + J.jet_mul(s, b)
                for a, b in zip(frame[0], frame[1])]

    chart = ImmersionChart(domain_dim=3, ambient_dim=base.ambient_dim,
                           ambient="sphere", jet_fn=jet_fn,
                           domain=base.domain + ((0.0, 2.0 * math.pi),),
                           periodic=(False, False, True),
                           name=f"unit-normal({base.name})")
    return BundleChart(kind="unit_normal", base=base, chart=chart, tau=tau)


@dataclasses.dataclass
class NullityReport:
    """Relative nullity data of a 3-chart at a point: the singular values of
    X -> alpha(X, .) in a metric-orthonormal frame, the kernel (coordinate
    components), and the mean curvature norm."""

    point: tuple[float, ...]
    nu: int
    singular_values: tuple[float, ...]
    kernel: np.ndarray
    mean_curvature_norm: float
    totally_geodesic: bool


def mean_curvature(chart, point: Sequence[float]) -> float:
    """Norm of the metric trace of the second fundamental form."""
    c = as_chart(chart)
    return float(np.linalg.norm(geo.mean_curvature_vector(c, point)))


def relative_nullity(chart, point: Sequence[float],
                     eps_rank: float = geo.EPS_RANK) -> NullityReport:
    c = as_chart(chart)
    forms = geo.fundamental_forms(c, point, max_s=2, eps_rank=eps_rank)
    m = c.domain_dim
    lam, V = np.linalg.eigh(forms.metric)
    W = V @ np.diag(1.0 / np.sqrt(lam)) @ V.T  # columns of W = orthonormal frame
    aorth = np.einsum("ki,lj,kla->ija", W, W, forms.tables[2])
    M = aorth.reshape(m, -1)
    U, sv, _ = np.linalg.svd(M, full_matrices=True)
    thr = eps_rank * max(1.0, float(sv[0]) if sv.size else 0.0)
    nu = int(np.sum(sv < thr)) + (m - sv.size)
    kernel_orth = U[:, m - nu:] if nu else np.zeros((m, 0))
    kernel = W @ kernel_orth
    H = aorth.trace(axis1=0, axis2=1)
    return NullityReport(point=tuple(float(x) for x in point), nu=nu,
                         singular_values=tuple(float(s) for s in sv),
                         kernel=kernel,
                         mean_curvature_norm=float(np.linalg.norm(H)),
                         totally_geodesic=bool(nu == m))


def totally_geodesic_classify(base: ImmersionChart, point: Sequence[float],
                              eps_rank: float = geo.EPS_RANK) -> bool:
    """Flag-based test: the unit tangent chart over a neighborhood is
    totally geodesic exactly when the base has no second normal space."""
    flag = geo.osculating_flag(base, point, max_order=2, eps_rank=eps_rank)
    return flag.tau < 2


@dataclasses.dataclass
class SplittingReport:
    """Splitting tensor of the nullity line at a point of a 3-chart.

    C is the matrix of X -> -(nabla_X T)^h on the horizontal plane in an
    oriented orthonormal frame; the fitted scalars satisfy
    C = v I - u J with J the quarter turn, and the residuals are
    |e3(v) - (v^2 - u^2 + 1)|, |e3(u) - 2 u v|, |e1(u) - e2(v)|,
    |e2(u) + e1(v)| for the frame (e1, e2, e3 = T)."""

    point: tuple[float, ...]
    C: np.ndarray
    u: float
    v: float
    span_residual: float
    ode_residuals: dict[str, float]
    fiber_alignment: float


_FD_OFFSETS = (-2.0, -1.0, 1.0, 2.0)
_FD_WEIGHTS = (1.0, -8.0, 8.0, -1.0)


def _fd_grad(fn: Callable[[np.ndarray], np.ndarray], p: np.ndarray,
             h: float) -> np.ndarray:
    """4th-order 5-point gradient of a vector function, shape (3,) + out."""
    rows = []
    for k in range(3):
        acc = None
        for off, wgt in zip(_FD_OFFSETS, _FD_WEIGHTS):
            q = p.copy()
            q[k] += off * h
            val = wgt * np.asarray(fn(q))
            acc = val if acc is None else acc + val
        rows.append(acc / (12.0 * h))
    return np.stack(rows, axis=0)


def splitting_tensor(chart, point: Sequence[float],
                     step: float = SPLIT_STEP,
                     eps_rank: float = geo.EPS_RANK) -> SplittingReport:
    """Measure the splitting tensor of the nullity distribution at a point
    where the relative nullity is 1, by finite differences of the oriented
    unit kernel field (5-point stencils of width `step`)."""
    c = as_chart(chart)
    if c.domain_dim != 3:
        raise ShapeMismatch("splitting tensor applies to 3-charts")
    p0 = np.array([float(x) for x in point])

    def unit_kernel(q, ref=None):
        rep = relative_nullity(c, q, eps_rank=eps_rank)
        if rep.nu != 1:
            raise NullityJump(f"nullity {rep.nu} != 1 at {tuple(q)}")
        G = geo.first_fundamental_form(c, q)
        T = rep.kernel[:, 0]
        T = T / math.sqrt(float(T @ G @ T))
        if ref is not None:
            d = float(T @ ref)
            if abs(d) < 0.2:
                raise OrientationFailure(
                    f"kernel field direction ambiguous at {tuple(q)}")
            if d < 0:
                T = -T
        return T

    T0 = unit_kernel(p0)

    def horizontal_frame(G, T, hand):
        # two metric-orthonormal vectors spanning the complement of T, with
        # fixed coordinate handedness times `hand`
        scores = [abs(float(G[k] @ T)) / math.sqrt(float(G[k, k]))
                  for k in range(3)]
        order = np.argsort(scores)
        frame = []
        for k in order[:2]:
            v = np.zeros(3)
            v[k] = 1.0
            v = v - float(v @ G @ T) * T
            for w in frame:
                v = v - float(v @ G @ w) * w
            n2 = float(v @ G @ v)
            if n2 <= 0:
                raise DegeneratePoint("horizontal frame degenerates")
            frame.append(v / math.sqrt(n2))
        X1, X2 = frame
        if float(np.linalg.det(np.stack([X1, X2, T], axis=1))) * hand < 0:
            X2 = -X2
        return X1, X2

    def uv_at(q, ref, hand):
        T = unit_kernel(q, ref)
        G = geo.first_fundamental_form(c, q)
        Gam = geo.christoffels(c, q)
        dT = _fd_grad(lambda r: unit_kernel(r, T), q, step)  # dT[k, j]
        covD = dT + np.einsum("jkl,l->kj", Gam, T)
        X1, X2 = horizontal_frame(G, T, hand)
        C = np.zeros((2, 2))
        for a, Xa in enumerate((X1, X2)):
            W = Xa @ covD                      # (nabla_Xa T)^j
            W = W - float(W @ G @ T) * T       # horizontal part
            for b, Xb in enumerate((X1, X2)):
                C[b, a] = -float(Xb @ G @ W)
        u = 0.5 * (C[0, 1] - C[1, 0])
        v = 0.5 * (C[0, 0] + C[1, 1])
        return u, v, C, X1, X2, T, G

    u0, v0, C0, X1, X2, Tc, G0 = uv_at(p0, T0, +1.0)
    hand = +1.0
    if u0 < 0:
        hand = -1.0
        u0, v0, C0, X1, X2, Tc, G0 = uv_at(p0, T0, hand)

    Jq = np.array([[0.0, -1.0], [1.0, 0.0]])
    span_residual = float(np.linalg.norm(
        C0 - (v0 * np.eye(2) - u0 * Jq)))

    grad_uv = _fd_grad(lambda r: np.array(uv_at(r, T0, hand)[:2]), p0, step)
    frame_vecs = (X1, X2, Tc)
    d_u = [float(X @ grad_uv[:, 0]) for X in frame_vecs]
    d_v = [float(X @ grad_uv[:, 1]) for X in frame_vecs]
    ode_residuals = {
        "e3_v": abs(d_v[2] - (v0 * v0 - u0 * u0 + 1.0)),
        "e3_u": abs(d_u[2] - 2.0 * u0 * v0),
        "e1_u_minus_e2_v": abs(d_u[0] - d_v[1]),
        "e2_u_plus_e1_v": abs(d_u[1] + d_v[0]),
    }
    e_th = np.zeros(3)
    e_th[2] = 1.0
    fiber_alignment = abs(float(Tc @ G0 @ e_th)) / math.sqrt(float(G0[2, 2]))
    return SplittingReport(point=tuple(float(x) for x in point), C=C0,
                           u=float(u0), v=float(v0),
                           span_residual=span_residual,
                           ode_residuals=ode_residuals,
                           fiber_alignment=fiber_alignment)


def bundle_point_report(chart, point: Sequence[float],
                        eps_rank: float = geo.EPS_RANK,
                        splitting: bool = False) -> dict:
    """Per-point JSON row for bundle sweeps."""
    c = as_chart(chart)
    pt = [float(x) for x in point]
    try:
        rep = relative_nullity(c, point, eps_rank=eps_rank)
    except DegeneratePoint:
        return {"point": pt, "singular": True, "H": None, "nu": None,
                "sv": None, "tg": None, "C": None, "uv": None,
                "residuals": None}
    row = {"point": pt, "singular": False,
           "H": rep.mean_curvature_norm, "nu": int(rep.nu),
           "sv": [float(s) for s in rep.singular_values],
           "tg": bool(rep.totally_geodesic),
           "C": None, "uv": None, "residuals": None}
    if splitting and rep.nu == 1:
        sp = splitting_tensor(chart, point, eps_rank=eps_rank)
        row["C"] = [[float(x) for x in r] for r in sp.C]
        row["uv"] = [sp.u, sp.v]
        row["residuals"] = {k: float(val)
                            for k, val in sp.ode_residuals.items()}
        row["residuals"]["span"] = sp.span_residual
        row["residuals"]["fiber_alignment"] = sp.fiber_alignment
    return row
