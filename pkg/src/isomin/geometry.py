"""Per-point differential geometry of immersion charts.

A chart is a smooth map from a box in R^m (m = 2 or 3) into R^N, optionally
constrained to the unit sphere S^(N-1). Everything here is computed from
jets at a single point: the first fundamental form, the osculating flag of
higher normal spaces, higher fundamental forms (projected higher partials),
ellipticity of the second form, sampled curvature ellipses, and the isotropy
order. Conventions that the rest of the package relies on:

* The osculating flag at a point is built by successive orthogonal
  complements: the span of the s-th partial derivatives, projected
  orthogonally to the position vector (sphere charts), the tangent space,
  and all lower normal spaces, is the (s-1)-th normal space. A direction is
  accepted when its projected singular value exceeds eps_rank relative to
  the raw derivative scale.
* The s-th fundamental form on coordinate directions equals the s-th
  partial derivative projected orthogonally to the flag through order s-2;
  its values span the (s-1)-th normal space.
* Curvature ellipses are sampled: Z_theta = cos(theta) Z + sin(theta) J Z
  with Z unit and <Z, JZ> = 0, theta over a full period, and the semiaxes
  come from the SVD of the centered sample matrix (normalized so that they
  are actual lengths). Circularity residual = 1 - sigma_2 / sigma_1.
"""
from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Callable, Sequence

import numpy as np

from . import jet as J
from .errors import (DegeneratePoint, AmbiguousKernel, InvalidData,
                     NotElliptic, OrderOutOfRange, ShapeMismatch)

EPS_DEG = J.EPS_DEG           # admissibility floor for metric eigenvalues
EPS_RANK = 1e-8               # relative rank threshold for flag decisions
CIRCLE_TOL = 1e-8             # default circularity residual tolerance
SPHERE_NORM_TOL = 1e-10       # |f| - 1 bound for sphere charts
DEFAULT_JET_ORDER = 4
ELLIPSE_SAMPLES = 64


@dataclasses.dataclass
class ImmersionChart:
    """A parametrized piece of submanifold, evaluated through jets.

    jet_fn(point, space) returns one jet per ambient component, expanded at
    the point, in the given jet space. The first domain_dim variables of the
    space are the chart coordinates; charts may be evaluated inside larger
    spaces (the bundle constructions do this) as long as the extra variables
    are left untouched.
    """

    domain_dim: int
    ambient_dim: int
    ambient: str  # "euclidean" or "sphere"
    jet_fn: Callable[[Sequence[float], J.JetSpace], list[J.Jet]]
    domain: tuple[tuple[float, float], ...]
    periodic: tuple[bool, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.ambient not in ("euclidean", "sphere"):
            raise InvalidData(f"unknown ambient {self.ambient!r}")
        if self.domain_dim not in (2, 3):
            raise ShapeMismatch(
                f"charts have 2- or 3-dimensional domains, got {self.domain_dim}")
        if len(self.domain) != self.domain_dim:
            raise ShapeMismatch("domain box does not match domain_dim")
        if not self.periodic:
            self.periodic = (False,) * self.domain_dim

    def eval_jets(self, point: Sequence[float], order: int) -> list[J.Jet]:
        if len(point) != self.domain_dim:
            raise ShapeMismatch(
                f"point has {len(point)} coordinates, chart needs {self.domain_dim}")
        space = J.get_space(self.domain_dim, order)
        out = self.jet_fn(tuple(float(x) for x in point), space)
        if len(out) != self.ambient_dim:
            raise ShapeMismatch("chart evaluator returned wrong component count")
        return out

    def value(self, point: Sequence[float]) -> np.ndarray:
        return np.array([j.value for j in self.eval_jets(point, 0)])


def grid_axes(chart: ImmersionChart,
              counts: Sequence[int],
              ranges: Sequence[tuple[float, float]] | None = None) -> list[np.ndarray]:
    """Sample axes over the chart domain. Periodic axes (the fiber circle of
    bundle charts) are sampled endpoint-exclusive so a full-circle range does
    not duplicate the seam point."""
    if len(counts) != chart.domain_dim:
        raise ShapeMismatch("one sample count per domain coordinate")
    if ranges is None:
        ranges = chart.domain
    axes = []
    for (lo, hi), n, per in zip(ranges, counts, chart.periodic):
        n = int(n)
        if n < 1:
            raise InvalidData("grid counts must be positive")
        if per:
            axes.append(lo + (hi - lo) * np.arange(n) / n)
        else:
            axes.append(np.linspace(lo, hi, n))
    return axes


def grid_points(axes: Sequence[np.ndarray]) -> np.ndarray:
    """All grid points in row-major order, shape (prod(counts), m)."""
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.reshape(-1) for g in mesh], axis=1)


def _multi_index(combo: Sequence[int], m: int) -> tuple[int, ...]:
    return tuple(sum(1 for c in combo if c == i) for i in range(m))


def _partial_vectors(jets: list[J.Jet], s: int) -> dict[tuple[int, ...], np.ndarray]:
    """Vectors of s-th partial derivatives keyed by multi-index."""
    space = jets[0].space
    out = {}
    for beta in space.indices:
        if sum(beta) == s:
            out[beta] = np.array([J.jet_extract(j, beta) for j in jets])
    return out


def _partial_table(jets: list[J.Jet], s: int, m: int) -> np.ndarray:
    """Symmetric table of s-th partials, shape (m,)*s + (N,)."""
    vecs = _partial_vectors(jets, s)
    N = len(jets)
    table = np.zeros((m,) * s + (N,))
    for combo in itertools.product(range(m), repeat=s):
        table[combo] = vecs[_multi_index(combo, m)]
    return table


def _project_out(Q: np.ndarray | None, V: np.ndarray) -> np.ndarray:
    """Columns of V minus their components along the orthonormal columns of Q
    (applied twice for numerical orthogonality)."""
    if Q is None or Q.shape[1] == 0:
        return V
    for _ in range(2):
        V = V - Q @ (Q.T @ V)
    return V


def _position_unit(jets: list[J.Jet]) -> np.ndarray:
    f = np.array([j.value for j in jets])
    norm = float(np.linalg.norm(f))
    if abs(norm - 1.0) > SPHERE_NORM_TOL:
        raise InvalidData(
            f"sphere chart value has norm {norm!r}, not 1 within {SPHERE_NORM_TOL}")
    return f / norm


def first_fundamental_form(chart: ImmersionChart, point: Sequence[float],
                           eps_deg: float = EPS_DEG) -> np.ndarray:
    """Induced metric (Gram matrix of the coordinate tangent vectors)."""
    jets = chart.eval_jets(point, 1)
    P1 = np.array([[J.jet_extract(j, tuple(int(i == k) for k in range(chart.domain_dim)))
                    for j in jets] for i in range(chart.domain_dim)])
    G = P1 @ P1.T
    if float(np.linalg.eigvalsh(G)[0]) < eps_deg:
        raise DegeneratePoint(f"metric degenerate at {tuple(point)}")
    return G


@dataclasses.dataclass
class OsculatingFlag:
    """Tangent space plus the chain of higher normal spaces at one point.

    bases[0] spans the tangent space, bases[ell] the (ell)-th normal space;
    dims are their dimensions; tau is the number of nonvanishing normal
    spaces. tau_o is the top order with a full curvature circle structure:
    tau when the codimension (inside the sphere, for sphere charts) is even,
    tau - 1 when odd. Position (for sphere charts) is kept separate.
    """

    point: tuple[float, ...]
    dims: tuple[int, ...]
    tau: int
    tau_o: int
    bases: list[np.ndarray]
    position: np.ndarray | None
    complete: bool  # flag spans the full ambient (no censoring at max_order)

    def stack(self, through: int | None = None) -> np.ndarray:
        """Orthonormal columns of position + tangent + N_1..N_through."""
        upto = self.tau if through is None else through
        cols = [] if self.position is None else [self.position[:, None]]
        cols += [self.bases[i] for i in range(0, upto + 1)]
        return np.concatenate(cols, axis=1)


def _flag_from_jets(chart: ImmersionChart, point, jets: list[J.Jet],
                    max_order: int, eps_rank: float, eps_deg: float) -> OsculatingFlag:
    m, N = chart.domain_dim, chart.ambient_dim
    position = _position_unit(jets) if chart.ambient == "sphere" else None
    Q = None if position is None else position[:, None]

    P1 = np.stack([v for _, v in sorted(_partial_vectors(jets, 1).items())], axis=1)
    G = P1.T @ P1
    if float(np.linalg.eigvalsh(G)[0]) < eps_deg:
        raise DegeneratePoint(f"metric degenerate at {tuple(point)}")
    R = _project_out(Q, P1)
    U, sv, _ = np.linalg.svd(R, full_matrices=False)
    tangent = U[:, :m]
    bases = [tangent]
    dims = [m]
    Q = tangent if Q is None else np.concatenate([Q, tangent], axis=1)

    for s in range(2, max_order + 2):
        C = np.stack([v for _, v in sorted(_partial_vectors(jets, s).items())],
                     axis=1)
        scale = float(np.linalg.norm(C, axis=0).max()) if C.size else 0.0
        Rk = _project_out(Q, C)
        U, sv, _ = np.linalg.svd(Rk, full_matrices=False)
        rank = int(np.sum(sv > eps_rank * max(scale, 1.0)))
        if rank == 0:
            break
        bases.append(U[:, :rank])
        dims.append(rank)
        Q = np.concatenate([Q, U[:, :rank]], axis=1)
        if Q.shape[1] >= N:
            break

    tau = len(dims) - 1
    codim = N - m - (1 if chart.ambient == "sphere" else 0)
    tau_o = tau - (1 if codim % 2 else 0)
    complete = Q.shape[1] >= N or (tau < max_order)
    return OsculatingFlag(point=tuple(float(x) for x in point),
                          dims=tuple(dims), tau=tau, tau_o=tau_o,
                          bases=bases, position=position, complete=complete)


def osculating_flag(chart: ImmersionChart, point: Sequence[float],
                    max_order: int | None = None,
                    eps_rank: float = EPS_RANK,
                    eps_deg: float = EPS_DEG) -> OsculatingFlag:
    """Flag of normal spaces at a point, from partials up to max_order + 1."""
    if max_order is None:
        max_order = DEFAULT_JET_ORDER - 1
    if max_order < 1:
        raise OrderOutOfRange("flag depth must be at least 1")
    jets = chart.eval_jets(point, max_order + 1)
    return _flag_from_jets(chart, point, jets, max_order, eps_rank, eps_deg)


@dataclasses.dataclass
class FundamentalForms:
    """Metric plus the fundamental forms of orders 2..max_s at one point.

    tables[s] has shape (m,)*s + (N,): the value of the s-th fundamental
    form on coordinate directions, i.e. the s-th partial projected
    orthogonally to the flag through the (s-2)-th normal space.
    """

    point: tuple[float, ...]
    metric: np.ndarray
    tables: dict[int, np.ndarray]
    flag: OsculatingFlag


def fundamental_forms(chart: ImmersionChart, point: Sequence[float],
                      max_s: int = 2,
                      eps_rank: float = EPS_RANK,
                      eps_deg: float = EPS_DEG) -> FundamentalForms:
    if max_s < 2:
        raise OrderOutOfRange("fundamental forms start at order 2")
    m = chart.domain_dim
    jets = chart.eval_jets(point, max_s)
    flag = _flag_from_jets(chart, point, jets, max_s - 1, eps_rank, eps_deg)
    P1 = np.array([[J.jet_extract(j, tuple(int(i == k) for k in range(m)))
                    for j in jets] for i in range(m)])
    metric = P1 @ P1.T
    tables = {}
    for s in range(2, max_s + 1):
        T = _partial_table(jets, s, m)
        flat = T.reshape(-1, chart.ambient_dim)
        Q = flag.stack(through=min(s - 2, flag.tau))
        flat = _project_out(Q, flat.T).T
        tables[s] = flat.reshape(T.shape)
    return FundamentalForms(point=tuple(float(x) for x in point),
                            metric=metric, tables=tables, flag=flag)


def higher_fundamental_form(chart: ImmersionChart, point: Sequence[float],
                            s: int, **kw) -> np.ndarray:
    """Component table of the s-th fundamental form (s >= 2)."""
    return fundamental_forms(chart, point, max_s=s, **kw).tables[s]


def mean_curvature_vector(chart: ImmersionChart, point: Sequence[float],
                          forms: FundamentalForms | None = None) -> np.ndarray:
    """Metric trace of the second fundamental form (not divided by m)."""
    if forms is None:
        forms = fundamental_forms(chart, point, max_s=2)
    ginv = np.linalg.inv(forms.metric)
    return np.einsum("ij,ija->a", ginv, forms.tables[2])


@dataclasses.dataclass
class EllipticityReport:
    """Solution of a alpha(X,X) + 2b alpha(X,Y) + c alpha(Y,Y) = 0 with
    ac - b^2 > 0, for the orthonormal tangent frame {X, Y} stored in
    `frame` (columns = coordinate components). J is the induced complex
    structure in that frame, normalized so J^2 = -I. Totally geodesic
    points take the (1, 0, 1) convention with the quarter-turn J."""

    exists: bool
    coeffs: tuple[float, float, float] | None
    J_matrix: np.ndarray | None
    frame: np.ndarray
    totally_geodesic: bool
    kernel_dim: int


def _orthonormal_frame(metric: np.ndarray) -> np.ndarray:
    """Columns = coordinate components of a metric-orthonormal frame, built
    by Gram-Schmidt from the coordinate basis."""
    m = metric.shape[0]
    cols = []
    for i in range(m):
        v = np.zeros(m)
        v[i] = 1.0
        for w in cols:
            v = v - (w @ metric @ v) * w
        n2 = float(v @ metric @ v)
        if n2 <= 0:
            raise DegeneratePoint("metric not positive definite")
        cols.append(v / math.sqrt(n2))
    return np.stack(cols, axis=1)


def _disc_pair(p: np.ndarray, q: np.ndarray) -> float:
    # polarization of (a, b, c) -> ac - b^2
    return 0.5 * (p[0] * q[2] + q[0] * p[2]) - p[1] * q[1]


def ellipticity(chart: ImmersionChart, point: Sequence[float],
                eps_rank: float = EPS_RANK,
                geodesic_convention: bool = True,
                forms: FundamentalForms | None = None) -> EllipticityReport:
    """Find the elliptic direction of the second fundamental form.

    The kernel of (a, b, c) -> a alpha(X,X) + 2b alpha(X,Y) + c alpha(Y,Y)
    is computed by SVD; a kernel element with positive discriminant makes
    the point elliptic. Coefficients are scaled so the largest entry is 1
    with a >= 0 (minimal points then report exactly (1, 0, 1))."""
    if chart.domain_dim != 2:
        raise ShapeMismatch("ellipticity is defined for surface charts")
    if forms is None:
        forms = fundamental_forms(chart, point, max_s=2)
    E = _orthonormal_frame(forms.metric)
    A = np.einsum("ia,jb,ijn->abn", E, E, forms.tables[2])
    M = np.stack([A[0, 0], 2.0 * A[0, 1], A[1, 1]], axis=1)  # (N, 3)
    U, sv, Vt = np.linalg.svd(M, full_matrices=True)
    smax = float(sv[0]) if sv.size else 0.0

    if smax <= eps_rank:
        # alpha^2 = 0: every (a, b, c) annihilates it
        if not geodesic_convention:
            raise AmbiguousKernel("vanishing second fundamental form")
        Jm = np.array([[0.0, -1.0], [1.0, 0.0]])
        return EllipticityReport(True, (1.0, 0.0, 1.0), Jm, E, True, 3)

    thr = eps_rank * max(smax, 1.0)
    kernel = [Vt[i] for i in range(3) if (i >= sv.size or sv[i] < thr)]
    kdim = len(kernel)
    coeffs = None
    if kdim == 1:
        v = kernel[0]
        if _disc_pair(v, v) > eps_rank:
            coeffs = v
    elif kdim == 2:
        k1, k2 = kernel
        S = np.array([[_disc_pair(k1, k1), _disc_pair(k1, k2)],
                      [_disc_pair(k1, k2), _disc_pair(k2, k2)]])
        w, vecs = np.linalg.eigh(S)
        if w[-1] > eps_rank:
            x, y = vecs[:, -1]
            coeffs = x * k1 + y * k2

    if coeffs is None:
        return EllipticityReport(False, None, None, E, False, kdim)

    coeffs = coeffs / np.abs(coeffs).max()
    if coeffs[0] < 0:
        coeffs = -coeffs
    disc = _disc_pair(coeffs, coeffs)
    a, b, c = (float(x) for x in coeffs)
    Jm = np.array([[b, -a], [c, -b]]) / math.sqrt(disc)
    return EllipticityReport(True, (a, b, c), Jm, E, False, kdim)


@dataclasses.dataclass
class EllipseReport:
    order: int
    center: np.ndarray
    semiaxes: tuple[float, float]
    residual: float


def _ellipse_directions(rep: EllipticityReport) -> tuple[np.ndarray, np.ndarray]:
    """Unit Z with <Z, JZ> = 0, and JZ, in coordinate components."""
    Jm = rep.J_matrix
    Asym = float(Jm[0, 0])
    Csym = float(Jm[1, 1])
    B = float(Jm[0, 1] + Jm[1, 0])
    phi = math.atan2(B / 2.0, (Asym - Csym) / 2.0)
    t = (phi + math.pi / 2.0) / 2.0
    zf = np.array([math.cos(t), math.sin(t)])
    return rep.frame @ zf, rep.frame @ (Jm @ zf)


def curvature_ellipse(chart: ImmersionChart, point: Sequence[float], ell: int,
                      samples: int = ELLIPSE_SAMPLES,
                      eps_rank: float = EPS_RANK,
                      forms: FundamentalForms | None = None,
                      ellip: EllipticityReport | None = None) -> EllipseReport:
    """Sampled curvature ellipse of order ell (0 = tangent circle of Z_theta,
    ell >= 1 = values of the (ell+1)-th fundamental form on Z_theta). The
    order must not exceed the flag's tau; the ellipse in a rank-1 last
    normal space degenerates to a segment and reports residual near 1."""
    if ell < 0:
        raise OrderOutOfRange("ellipse order must be nonnegative")
    s = ell + 1
    if forms is None or (ell >= 1 and s not in forms.tables):
        forms = fundamental_forms(chart, point, max_s=max(s, 2),
                                  eps_rank=eps_rank)
    if ell >= 1 and forms.flag.tau < ell:
        raise OrderOutOfRange(
            f"ellipse order {ell} exceeds flag tau {forms.flag.tau}")
    if ellip is None:
        ellip = ellipticity(chart, point, eps_rank=eps_rank, forms=forms)
    if not ellip.exists:
        raise NotElliptic(f"no elliptic direction at {tuple(point)}")

    Z, JZ = _ellipse_directions(ellip)
    if ell == 0:
        jets = chart.eval_jets(point, 1)
        m = chart.domain_dim
        P1 = np.array([[J.jet_extract(j, tuple(int(i == k) for k in range(m)))
                        for j in jets] for i in range(m)])
        basis = [P1.T @ Z, P1.T @ JZ]
    else:
        basis = []
        for k in range(s + 1):
            T = forms.tables[s]
            for _ in range(s - k):
                T = np.tensordot(Z, T, axes=(0, 0))
            for _ in range(k):
                T = np.tensordot(JZ, T, axes=(0, 0))
            basis.append(T)

    theta = 2.0 * math.pi * np.arange(samples) / samples
    W = np.stack([math.comb(s, k)
                  * np.cos(theta) ** (s - k) * np.sin(theta) ** k
                  for k in range(s + 1)], axis=1)
    P = W @ np.stack(basis, axis=0)
    center = P.mean(axis=0)
    sv = np.linalg.svd(P - center, compute_uv=False)
    scale = math.sqrt(samples / 2.0)
    s1 = float(sv[0]) / scale
    s2 = float(sv[1]) / scale if sv.size > 1 else 0.0
    residual = 1.0 if s1 == 0.0 else 1.0 - s2 / s1
    return EllipseReport(order=ell, center=center,
                         semiaxes=(s1, s2), residual=residual)


def isotropy_order(chart: ImmersionChart, point: Sequence[float],
                   tol: float = CIRCLE_TOL,
                   eps_rank: float = EPS_RANK,
                   max_order: int | None = None) -> int:
    """Largest ell <= tau_o with circular ellipses at every order 0..ell.

    Order 0 passing means the chart is minimal at the point. Returns -1 when
    even the order-0 ellipse fails (elliptic but not minimal)."""
    if max_order is None:
        max_order = DEFAULT_JET_ORDER - 1
    flag = osculating_flag(chart, point, max_order=max_order, eps_rank=eps_rank)
    forms = fundamental_forms(chart, point, max_s=max(flag.tau + 1, 2),
                              eps_rank=eps_rank)
    ellip = ellipticity(chart, point, eps_rank=eps_rank, forms=forms)
    if not ellip.exists:
        raise NotElliptic(f"no elliptic direction at {tuple(point)}")
    cap = min(max(0, flag.tau_o), flag.tau)
    order = -1
    for ell in range(cap + 1):
        rep = curvature_ellipse(chart, point, ell, eps_rank=eps_rank,
                                forms=forms, ellip=ellip)
        if rep.residual < tol:
            order = ell
        else:
            break
    return order


def christoffels(chart: ImmersionChart, point: Sequence[float],
                 jets: list[J.Jet] | None = None) -> np.ndarray:
    """Christoffel symbols Gamma[k, i, j] of the induced metric, from the
    exact metric derivatives carried by order-2 jets."""
    m = chart.domain_dim
    if jets is None:
        jets = chart.eval_jets(point, 2)
    P1 = _partial_table(jets, 1, m)            # (m, N)
    P2 = _partial_table(jets, 2, m)            # (m, m, N)
    G = P1 @ P1.T
    # dG[k, i, j] = d_k g_ij, exact from the second-order jet coefficients
    dG = np.einsum("kia,ja->kij", P2, P1) + np.einsum("ia,kja->kij", P1, P2)
    ginv = np.linalg.inv(G)
    # T[i, j, l] = d_i g_jl + d_j g_il - d_l g_ij
    T = dG + dG.transpose(1, 0, 2) - dG.transpose(1, 2, 0)
    return 0.5 * np.einsum("kl,ijl->kij", ginv, T)


def point_report(chart: ImmersionChart, point: Sequence[float],
                 tol: float = CIRCLE_TOL,
                 eps_rank: float = EPS_RANK,
                 max_order: int | None = None) -> dict:
    """Per-point JSON row: flag dims, sampled ellipses, ellipticity, order."""
    pt = [float(x) for x in point]
    try:
        flag = osculating_flag(chart, point, max_order=max_order,
                               eps_rank=eps_rank)
    except DegeneratePoint:
        return {"point": pt, "singular": True, "dims": None, "tau": None,
                "ellipses": [], "elliptic": None, "coeffs": None,
                "order": None}
    forms = fundamental_forms(chart, point, max_s=max(flag.tau + 1, 2),
                              eps_rank=eps_rank)
    ellip = ellipticity(chart, point, eps_rank=eps_rank, forms=forms)
    row = {"point": pt, "singular": False,
           "dims": [int(d) for d in flag.dims], "tau": int(flag.tau),
           "elliptic": bool(ellip.exists),
           "coeffs": None if ellip.coeffs is None
           else [float(c) for c in ellip.coeffs],
           "ellipses": [], "order": None}
    if ellip.exists:
        for ell in range(flag.tau + 1):
            rep = curvature_ellipse(chart, point, ell, eps_rank=eps_rank,
                                    forms=forms, ellip=ellip)
            row["ellipses"].append({"order": ell,
                                    "semiaxes": [rep.semiaxes[0], rep.semiaxes[1]],
                                    "residual": rep.residual})
        order = -1
        for ell in range(min(max(0, flag.tau_o), flag.tau) + 1):
            if row["ellipses"][ell]["residual"] < tol:
                order = ell
            else:
                break
        row["order"] = order
    return row


def nicely_curved_certificate(chart: ImmersionChart,
                              counts: Sequence[int] | None = None,
                              max_order: int | None = None,
                              eps_rank: float = EPS_RANK) -> dict:
    """Check that flag dimensions are constant across a sample grid."""
    if counts is None:
        counts = (9,) * chart.domain_dim
    pts = grid_points(grid_axes(chart, counts))
    dims_seen: dict[tuple[int, ...], int] = {}
    singular = 0
    for p in pts:
        try:
            flag = osculating_flag(chart, p, max_order=max_order,
                                   eps_rank=eps_rank)
            dims_seen[flag.dims] = dims_seen.get(flag.dims, 0) + 1
        except DegeneratePoint:
            singular += 1
    ok = len(dims_seen) == 1 and singular == 0
    dims = next(iter(dims_seen)) if len(dims_seen) == 1 else None
    return {"nicely_curved": ok,
            "dims": None if dims is None else [int(d) for d in dims],
            "variants": sorted([list(map(int, k)) for k in dims_seen]),
            "singular_points": singular,
            "points_checked": int(len(pts))}
