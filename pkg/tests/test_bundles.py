"""Bipolar and polar charts, nullity, splitting tensor."""
import math

import numpy as np
import pytest

import isomin.geometry as geo
import isomin.jet as J
from isomin.bundles import (bundle_point_report, mean_curvature,
                            relative_nullity, splitting_tensor,
                            totally_geodesic_classify, unit_normal_chart,
                            unit_tangent_chart)
from isomin.catalog import (demo_weierstrass_data, make_fixture,
                            make_geodesic_sphere, make_great_sphere,
                            make_plane, make_veronese)
from isomin.errors import (DegeneratePoint, FlagCollapse, InvalidData,
                           NullityJump, ShapeMismatch)
from isomin.geometry import ImmersionChart
from isomin.weierstrass import generate_surface


@pytest.fixture(scope="module")
def n5base():
    return generate_surface(demo_weierstrass_data(5)).chart


@pytest.fixture(scope="module")
def bipolar_n5(n5base):
    return unit_tangent_chart(n5base)


@pytest.fixture(scope="module")
def polar_ver():
    return unit_normal_chart(make_veronese())


def test_unit_tangent_frozen_value(bipolar_n5):
    # over the origin the frame is constant along the fiber
    for th in (0.0, 0.3, 2.0):
        val = bipolar_n5.chart.value((0.0, 0.0, th))
        want = [math.cos(th), -math.sin(th), 0.0, 0.0, 0.0]
        assert np.allclose(val, want, atol=1e-12)


def test_unit_tangent_values_on_sphere(bipolar_n5):
    c = bipolar_n5.chart
    assert c.ambient == "sphere"
    assert c.periodic == (False, False, True)
    assert c.domain[2] == (0.0, 2.0 * math.pi)
    pts = geo.grid_points(geo.grid_axes(c, (3, 3, 5)))
    vals = np.array([c.value(p) for p in pts])
    assert np.allclose(np.linalg.norm(vals, axis=1), 1.0, atol=1e-12)


def test_pivot_order_is_a_gauge_choice(n5base, bipolar_n5):
    """Swapping the pivot rotates each fiber circle but keeps its image."""
    other = unit_tangent_chart(n5base, pivot_order=(1, 0))
    p = (0.2, -0.1)
    e1 = bipolar_n5.chart.value((*p, 0.0))
    e2 = bipolar_n5.chart.value((*p, math.pi / 2.0))
    w = other.chart.value((*p, 0.7))
    assert np.linalg.norm(w) == pytest.approx(1.0, abs=1e-12)
    resid = w - (w @ e1) * e1 - (w @ e2) * e2
    assert np.linalg.norm(resid) < 1e-10
    with pytest.raises(InvalidData):
        unit_tangent_chart(n5base, pivot_order=(0, 0))


def test_unit_tangent_base_validation(n5base):
    with pytest.raises(InvalidData, match="zero-pad"):
        unit_tangent_chart(make_fixture("curve-1-2"))
    with pytest.raises(InvalidData):
        unit_tangent_chart(make_veronese())
    with pytest.raises(ShapeMismatch):
        unit_tangent_chart(make_geodesic_sphere())


def test_bipolar_minimal_with_nullity_one(bipolar_n5):
    for p in ((0.1, 0.2, 0.7), (-0.3, 0.15, 3.9)):
        assert mean_curvature(bipolar_n5, p) < 1e-8
        rep = relative_nullity(bipolar_n5, p)
        assert rep.nu == 1 and not rep.totally_geodesic
        assert rep.singular_values[-1] < 1e-8
        assert rep.singular_values[1] > 1e-3
        assert rep.kernel.shape == (3, 1)


def test_nullity_direction_not_the_fiber(bipolar_n5):
    """The nullity line of the bipolar chart is horizontal-ish but never
    checked to be the fiber; what is frozen is its metric alignment."""
    p = (0.1, 0.2, 0.7)
    rep = relative_nullity(bipolar_n5, p)
    G = geo.first_fundamental_form(bipolar_n5.chart, p)
    T = rep.kernel[:, 0]
    T = T / math.sqrt(float(T @ G @ T))
    align = abs(float(T @ G @ np.array([0.0, 0.0, 1.0]))) / math.sqrt(G[2, 2])
    assert align == pytest.approx(1.0, abs=1e-8)


def test_totally_geodesic_bundle_agreement():
    """Flag test on the base and nullity test on the bundle agree."""
    tg_base = make_fixture("curve-1-2-pad1")
    curved_base = make_fixture("curve-1-2-3")
    rng = np.random.default_rng(7)
    for _ in range(6):
        u, v = rng.uniform(0.1, 0.8, size=2)
        th = rng.uniform(0.0, 2.0 * math.pi)
        flag_says = totally_geodesic_classify(tg_base, (u, v))
        rep = relative_nullity(unit_tangent_chart(tg_base), (u, v, th))
        assert flag_says and rep.totally_geodesic and rep.nu == 3
        flag_says = totally_geodesic_classify(curved_base, (u, v))
        rep = relative_nullity(unit_tangent_chart(curved_base), (u, v, th))
        assert not flag_says and not rep.totally_geodesic and rep.nu == 1


def test_plane_bundle_everywhere_singular():
    bc = unit_tangent_chart(make_plane())
    with pytest.raises(DegeneratePoint):
        relative_nullity(bc, (0.1, 0.2, 0.5))
    row = bundle_point_report(bc, (0.1, 0.2, 0.5))
    assert row["singular"] and row["H"] is None


def test_unit_normal_chart_veronese(polar_ver):
    c = polar_ver.chart
    assert polar_ver.tau == 1
    assert c.ambient == "sphere" and c.domain_dim == 3
    pts = geo.grid_points(geo.grid_axes(c, (3, 3, 4)))
    vals = np.array([c.value(p) for p in pts])
    assert np.allclose(np.linalg.norm(vals, axis=1), 1.0, atol=1e-10)
    # fiber vectors are normal to the base surface
    p = (0.2, 0.1)
    jets = make_veronese().eval_jets(p, 1)
    pos = np.array([j.value for j in jets])
    du = np.array([J.jet_extract(j, (1, 0)) for j in jets])
    dv = np.array([J.jet_extract(j, (0, 1)) for j in jets])
    for th in (0.0, 1.1, 4.4):
        w = c.value((*p, th))
        for other in (pos, du, dv):
            assert abs(w @ other) < 1e-10


def test_polar_veronese_minimal_nullity_one(polar_ver):
    for p in ((0.2, 0.1, 0.4), (-0.3, 0.25, 2.2)):
        assert mean_curvature(polar_ver, p) < 1e-8
        rep = relative_nullity(polar_ver, p)
        assert rep.nu == 1
        assert rep.singular_values[-1] < 1e-8


def test_unit_normal_rejections():
    with pytest.raises(FlagCollapse, match="no first normal space"):
        unit_normal_chart(make_great_sphere())
    with pytest.raises(ShapeMismatch):
        unit_normal_chart(make_geodesic_sphere())
    with pytest.raises(InvalidData):
        unit_normal_chart(make_plane())


def _small_sphere_surface() -> ImmersionChart:
    """Umbilic 2-sphere of radius pi/4 in S^4: rank-1 first normal space."""
    cr = sr = math.sqrt(0.5)

    def jet_fn(point, space):
        u = J.jet_variable(space, 0, point[0])
        v = J.jet_variable(space, 1, point[1])
        u2, v2 = J.jet_mul(u, u), J.jet_mul(v, v)
        inv = J.jet_recip(u2 + v2 + 1.0)
        return [J.jet_constant(space, cr),
                sr * 2.0 * J.jet_mul(u, inv),
                sr * 2.0 * J.jet_mul(v, inv),
                sr * J.jet_mul(1.0 - u2 - v2, inv),
                J.jet_constant(space, 0.0)]

    return ImmersionChart(domain_dim=2, ambient_dim=5, ambient="sphere",
                          jet_fn=jet_fn, domain=((-0.5, 0.5), (-0.5, 0.5)),
                          name="small-sphere")


def _bent_sphere_surface() -> ImmersionChart:
    """Normalized graph over a sphere chart: substantial first normal plane
    but a visibly non-circular first curvature ellipse."""

    def jet_fn(point, space):
        u = J.jet_variable(space, 0, point[0])
        v = J.jet_variable(space, 1, point[1])
        comps = [u, v,
                 J.jet_mul(u, u) - 0.25 * J.jet_mul(v, v),
                 J.jet_mul(u, v),
                 J.jet_constant(space, 1.0)]
        norm2 = comps[0] * comps[0]
        for c in comps[1:]:
            norm2 = norm2 + J.jet_mul(c, c)
        scale = J.jet_recip(J.jet_sqrt(norm2))
        return [J.jet_mul(c, scale) for c in comps]

    return ImmersionChart(domain_dim=2, ambient_dim=5, ambient="sphere",
                          jet_fn=jet_fn, domain=((-0.3, 0.3), (-0.3, 0.3)),
                          name="bent-sphere")


def test_unit_normal_umbilic_collapse():
    with pytest.raises(FlagCollapse, match="need a plane"):
        unit_normal_chart(_small_sphere_surface())


def test_unit_normal_noncircular_warns():
    with pytest.warns(UserWarning, match="not a circle"):
        bc = unit_normal_chart(_bent_sphere_surface(), counts=(5, 5))
    val = bc.chart.value((0.05, -0.04, 1.3))
    assert np.linalg.norm(val) == pytest.approx(1.0, abs=1e-12)


def test_splitting_tensor_frozen(bipolar_n5):
    sp = splitting_tensor(bipolar_n5, (0.1, 0.2, 0.7))
    assert sp.u == pytest.approx(1.0, abs=1e-6)
    assert sp.v == pytest.approx(0.0, abs=1e-6)
    # C = -J in the oriented horizontal frame
    assert np.allclose(sp.C, [[0.0, 1.0], [-1.0, 0.0]], atol=1e-6)
    assert sp.span_residual < 1e-6
    assert max(sp.ode_residuals.values()) < 1e-5
    assert sp.fiber_alignment == pytest.approx(1.0, abs=1e-8)


def test_splitting_tensor_polar(polar_ver):
    sp = splitting_tensor(polar_ver, (0.15, -0.1, 0.9))
    assert sp.span_residual < 1e-6
    assert max(sp.ode_residuals.values()) < 1e-5


def test_splitting_rejects_wrong_nullity():
    bc = unit_tangent_chart(make_fixture("curve-1-2-pad1"))
    with pytest.raises(NullityJump):
        splitting_tensor(bc, (0.3, 0.2, 1.0))


def test_bundle_point_report_rows(bipolar_n5):
    row = bundle_point_report(bipolar_n5, (0.1, 0.2, 0.7), splitting=True)
    assert not row["singular"]
    assert row["H"] < 1e-8 and row["nu"] == 1 and not row["tg"]
    assert row["uv"][0] == pytest.approx(1.0, abs=1e-6)
    assert row["residuals"]["span"] < 1e-6
    plain = bundle_point_report(bipolar_n5, (0.1, 0.2, 0.7))
    assert plain["C"] is None and plain["uv"] is None
