import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import circumcone as cc
from circumcone.errors import DimensionMismatch, ZeroVector

from conftest import well_conditioned_base


@pytest.fixture
def orthant2():
    base = cc.build_base(np.eye(2))
    cd = cc.circum_via_gram(base)
    return base, cd


def test_margin_sign_characterizes_membership(orthant2):
    base, cd = orthant2
    # d + v in polar iff margin >= 0
    assert cc.admissible_margin(base, cd.norm_sq, [0.1, 0.1]) > 0.0
    assert cc.admissible_margin(base, cd.norm_sq, [0.6, 0.0]) < 0.0


def test_depth_orthant_diagonal(orthant2):
    base, cd = orthant2
    w = np.array([1.0, 1.0]) / math.sqrt(2.0)
    res = cc.directional_depth(base, cd.norm_sq, w)
    assert res.value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-12)
    assert res.binding_index == 0  # tie between both generators breaks low


def test_depth_infinite_in_polar(orthant2):
    base, cd = orthant2
    res = cc.directional_depth(base, cd.norm_sq, [-1.0, -1.0])
    assert math.isinf(res.value)
    assert res.binding_index is None
    assert not res.is_finite


def test_depth_rejects_zero_direction(orthant2):
    base, cd = orthant2
    with pytest.raises(ZeroVector):
        cc.directional_depth(base, cd.norm_sq, [0.0, 0.0])


def test_depth_rejects_wrong_dimension(orthant2):
    base, cd = orthant2
    with pytest.raises(DimensionMismatch):
        cc.directional_depth(base, cd.norm_sq, [1.0, 0.0, 0.0])


def test_depth_point_on_boundary(rng):
    # d + depth*w sits exactly on the polar boundary
    for _ in range(20):
        base = well_conditioned_base(rng, 3, 5)
        cd = cc.circum_via_gram(base)
        w = rng.normal(size=5)
        res = cc.directional_depth(base, cd.norm_sq, w)
        if not res.is_finite:
            continue
        z = cd.d + res.value * w
        assert np.max(base.matrix @ z) == pytest.approx(0.0, abs=1e-10)


def test_contact_points_have_zero_margin(orthant2):
    base, cd = orthant2
    pts = cc.contact_points(base, cd.norm_sq)
    assert np.allclose(pts[0], [0.5, 0.0], atol=1e-15)
    assert np.allclose(pts[1], [0.0, 0.5], atol=1e-15)
    for c in pts:
        assert cc.admissible_margin(base, cd.norm_sq, c) == pytest.approx(
            0.0, abs=1e-12)


def test_angular_bound_values():
    # orthant in the plane: theta = pi/4, norm_sq = 1/2
    norm_sq = 0.5
    theta = math.acos(math.sqrt(norm_sq))
    assert cc.angular_depth_bound(norm_sq, 0.0) == pytest.approx(
        math.sqrt(norm_sq), abs=1e-12)
    assert cc.angular_depth_bound(norm_sq, theta) == pytest.approx(
        norm_sq, abs=1e-12)
    assert math.isinf(cc.angular_depth_bound(norm_sq, theta + math.pi / 2))


def test_angular_bound_validates_inputs():
    with pytest.raises(ValueError):
        cc.angular_depth_bound(0.0, 0.5)
    with pytest.raises(ValueError):
        cc.angular_depth_bound(0.5, -0.1)
    with pytest.raises(ValueError):
        cc.angular_depth_bound(1.5, 0.5)


def test_angular_bound_below_depth(rng):
    # the bound never exceeds the exact depth
    for _ in range(100):
        p = int(rng.integers(2, 6))
        base = well_conditioned_base(rng, p, int(rng.integers(p, 8)))
        cd = cc.circum_via_gram(base)
        axis, _ = cc.aperture_axis(cd)
        w = rng.normal(size=base.n)
        w /= np.linalg.norm(w)
        phi = math.acos(float(np.clip(w @ axis, -1.0, 1.0)))
        bound = cc.angular_depth_bound(cd.norm_sq, phi)
        depth = cc.directional_depth(base, cd.norm_sq, w).value
        assert bound <= depth + 1e-10


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(0, 10_000), scale=st.floats(0.1, 10.0))
def test_depth_scales_inversely(seed, scale):
    rng = np.random.default_rng(seed)
    base = well_conditioned_base(rng, 3, 4)
    cd = cc.circum_via_gram(base)
    w = rng.normal(size=4)
    r1 = cc.directional_depth(base, cd.norm_sq, w)
    r2 = cc.directional_depth(base, cd.norm_sq, scale * w)
    if r1.is_finite:
        assert r2.value * scale == pytest.approx(r1.value, rel=1e-12)
    else:
        assert not r2.is_finite
