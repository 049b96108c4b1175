import math

import numpy as np
import pytest

import circumcone as cc
from circumcone import cones
from circumcone.errors import HypothesisFails, UnsupportedExact, ZeroVector


# ---------------------------------------------------------------------------
# embedding


def test_sym_embed_is_isometric(rng):
    for n in (2, 3, 5):
        A = rng.normal(size=(n, n))
        A = A + A.T
        B = rng.normal(size=(n, n))
        B = B + B.T
        frob = float(np.sum(A * B))
        assert cc.sym_embed(A) @ cc.sym_embed(B) == pytest.approx(frob, rel=1e-12)
        assert np.allclose(cc.sym_restore(cc.sym_embed(A), n), A, atol=1e-12)


def test_matrix_order_roundtrip():
    assert cones.matrix_order(6) == 3
    with pytest.raises(ValueError):
        cones.matrix_order(5)


# ---------------------------------------------------------------------------
# closed-form directions


def test_orthant_direction():
    for n in (1, 2, 5):
        cd = cc.circum_direction(cc.Orthant(n))
        assert np.allclose(cd.d, -np.ones(n) / n, atol=1e-15)
        assert cd.norm_sq == pytest.approx(1.0 / n, abs=1e-15)


def test_soc_direction():
    for n in (3, 5, 10):
        cd = cc.circum_direction(cc.SOC(n))
        expect = np.zeros(n)
        expect[-1] = -1.0 / math.sqrt(2.0)
        assert np.allclose(cd.d, expect, atol=1e-15)
        assert cd.norm_sq == pytest.approx(0.5, abs=1e-15)


def test_psd_direction_is_scaled_identity():
    for n in (2, 3, 5):
        cd = cc.circum_direction(cc.PSD(n))
        assert np.allclose(cc.sym_restore(cd.d, n), -np.eye(n) / n, atol=1e-15)
        assert cd.norm_sq == pytest.approx(1.0 / n, abs=1e-15)


def test_dnn_shares_psd_direction():
    a = cc.circum_direction(cc.DNN(4))
    b = cc.circum_direction(cc.PSD(4))
    assert np.allclose(a.d, b.d, atol=1e-15)


def test_pcone_direction_refused_off_two():
    with pytest.raises(HypothesisFails):
        cc.circum_direction(cc.PCone(3, 3.0))
    cd = cc.circum_direction(cc.PCone(3, 2.0))
    assert cd.norm_sq == pytest.approx(0.5, abs=1e-15)


def test_product_parallel_resistance():
    prod = cc.Product((cc.Orthant(1), cc.Orthant(2)))
    cd = cc.circum_direction(prod)
    assert cd.norm_sq == pytest.approx(1.0 / 3.0, abs=1e-15)
    # identical to the plain three-dimensional orthant
    assert np.allclose(cd.d, cc.circum_direction(cc.Orthant(3)).d, atol=1e-14)


def test_product_block_structure(rng):
    prod = cc.Product((cc.SOC(3), cc.PSD(2), cc.Orthant(2)))
    cd = cc.circum_direction(prod)
    inv = sum(1.0 / cc.circum_direction(b).norm_sq for b in prod.blocks)
    assert 1.0 / cd.norm_sq == pytest.approx(inv, abs=1e-12)
    # the constant-inner-product identity holds against embedded extremals
    for u in cc.sample_extremal(prod, 60, seed=5):
        assert u @ cd.d == pytest.approx(-cd.norm_sq, abs=1e-10)


def test_polyhedral_direction_matches_gram(rng):
    from conftest import well_conditioned_base
    base = well_conditioned_base(rng, 3, 4)
    cd = cc.circum_direction(cc.Polyhedral(base))
    ref = cc.circum_via_gram(base)
    assert np.allclose(cd.d, ref.d, atol=1e-12)


def test_polyhedral_degenerate_raises():
    base = cc.build_base([
        [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0],
        [1.0, 1.0, -1.0],
    ])
    with pytest.raises(HypothesisFails):
        cc.circum_direction(cc.Polyhedral(base))


# ---------------------------------------------------------------------------
# sampling and the hypothesis check


@pytest.mark.parametrize("cone", [
    cc.Orthant(4), cc.SOC(4), cc.PSD(3), cc.DNN(3), cc.PCone(3, 1.5),
    cc.Product((cc.Orthant(2), cc.SOC(3))),
])
def test_samples_are_unit_vectors(cone):
    for u in cc.sample_extremal(cone, 40, seed=11):
        assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-10)


def test_sampling_is_seed_deterministic():
    a = cc.sample_extremal(cc.SOC(5), 20, seed=3)
    b = cc.sample_extremal(cc.SOC(5), 20, seed=3)
    c = cc.sample_extremal(cc.SOC(5), 20, seed=4)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    assert not all(np.array_equal(x, y) for x, y in zip(a, c))


def test_hypothesis_soc_distance():
    samples = cc.sample_extremal(cc.SOC(3), 200, seed=0)
    rep = cc.hypothesis_check(samples)
    assert rep.holds
    assert rep.distance == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-8)
    assert rep.witness is not None


def test_hypothesis_pcone_fails():
    for p in (1.5, 3.0, 4.0):
        samples = cc.sample_extremal(cc.PCone(3, p), 200, seed=0)
        rep = cc.hypothesis_check(samples)
        assert not rep.holds
        assert rep.distance < 1e-8
        assert rep.witness is None


def test_hypothesis_degenerate_tetrahedron():
    base = cc.build_base([
        [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0],
        [1.0, 1.0, -1.0],
    ])
    rep = cc.hypothesis_check(cc.sample_extremal(cc.Polyhedral(base), 4, seed=0))
    assert not rep.holds
    assert rep.distance < 1e-10


# ---------------------------------------------------------------------------
# support, depth, membership


def test_support_closed_forms(rng):
    w = rng.normal(size=4)
    assert cc.support_on_extremal(cc.Orthant(4), w) == pytest.approx(
        float(np.max(w)), abs=1e-15)
    s = cc.support_on_extremal(cc.SOC(4), w)
    assert s == pytest.approx(
        (np.linalg.norm(w[:-1]) + w[-1]) / math.sqrt(2.0), abs=1e-12)
    W = rng.normal(size=(3, 3))
    W = W + W.T
    assert cc.support_on_extremal(cc.PSD(3), cc.sym_embed(W)) == pytest.approx(
        float(np.linalg.eigvalsh(W)[-1]), abs=1e-10)


def test_support_sampled_is_lower_bound(rng):
    for cone in (cc.Orthant(5), cc.SOC(4), cc.PSD(3)):
        for _ in range(10):
            w = rng.normal(size=cone.dim)
            exact = cc.support_on_extremal(cone, w)
            sampled = cc.support_sampled(cone, w, 300, seed=9)
            assert sampled <= exact + 1e-10


def test_dnn_exact_paths_refused(rng):
    w = rng.normal(size=cc.DNN(3).dim)
    with pytest.raises(UnsupportedExact):
        cc.support_on_extremal(cc.DNN(3), w)
    with pytest.raises(UnsupportedExact):
        cc.polar_membership(cc.DNN(3), w)
    # the sampled path still works
    assert math.isfinite(cc.support_sampled(cc.DNN(3), w, 100, seed=2))


def test_support_rejects_zero_direction():
    with pytest.raises(ZeroVector):
        cc.support_on_extremal(cc.Orthant(3), np.zeros(3))


def test_depth_np_matches_ratio(rng):
    for cone in (cc.Orthant(4), cc.SOC(4), cc.PSD(3)):
        cd = cc.circum_direction(cone)
        w = rng.normal(size=cone.dim)
        s = cc.support_on_extremal(cone, w)
        res = cc.directional_depth_np(cone, w)
        if s <= 0.0:
            assert not res.is_finite
        else:
            assert res.value == pytest.approx(cd.norm_sq / s, rel=1e-12)


def test_depth_np_polyhedral_reports_binding(rng):
    from conftest import well_conditioned_base
    base = well_conditioned_base(rng, 3, 4)
    cone = cc.Polyhedral(base)
    w = base.matrix[1] + 0.01 * rng.normal(size=4)
    res = cc.directional_depth_np(cone, w)
    assert res.is_finite
    assert res.binding_index is not None


def test_polar_membership_families(rng):
    # d is always strictly inside its own polar cone
    for cone in (cc.Orthant(4), cc.SOC(4), cc.PSD(3), cc.PCone(3, 1.5),
                 cc.Product((cc.Orthant(2), cc.SOC(3)))):
        if isinstance(cone, cc.PCone):
            z = np.array([0.0, 0.0, -1.0])
            assert cc.polar_membership(cone, z)
            assert not cc.polar_membership(cone, -z)
            continue
        cd = cc.circum_direction(cone)
        assert cc.polar_membership(cone, cd.d)
        assert not cc.polar_membership(cone, -cd.d)


def test_pcone_polar_uses_dual_norm():
    cone = cc.PCone(3, 3.0)
    # z = (x, t) in polar iff ||x||_{3/2} <= -t
    assert cc.polar_membership(cone, np.array([0.3, 0.4, -1.0]))
    assert not cc.polar_membership(cone, np.array([0.9, 0.9, -1.0]))


def test_jordan_values():
    assert cc.jordan_value(cc.Orthant(5)) == pytest.approx(0.2)
    assert cc.jordan_value(cc.SOC(7)) == pytest.approx(0.5)
    assert cc.jordan_value(cc.PSD(4)) == pytest.approx(0.25)
    assert cc.jordan_value(cc.DNN(4)) is None
    assert cc.jordan_value(cc.PCone(3, 2.0)) is None


def test_jordan_matches_euclidean_norm_sq():
    for cone in (cc.Orthant(3), cc.SOC(6), cc.PSD(4)):
        assert cc.jordan_value(cone) == pytest.approx(
            cc.circum_direction(cone).norm_sq, abs=1e-15)
