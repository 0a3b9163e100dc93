import random

import pytest

from wavetile.catalog import build
from wavetile.exactfield import Scalar, rational
from wavetile.geom2d import ConvexPolygon, Region, Sector, Vec2, Wedge
from wavetile.groups import HEX, Z2, group, named_sector, orbit
from wavetile.tiling import (
    UNBOUNDED,
    sector_contains,
    verify_dilation_tiling,
    verify_pairwise_disjoint,
    verify_translation_tiling,
)


def rat(p, q=1):
    return rational(p, q)


def v(x, y):
    return Vec2(x, y)


def total_area(pairs):
    out = Scalar(0)
    for r, _ in pairs:
        out = out + r.area()
    return out


class TestTranslationTiling:
    def test_unit_square(self):
        rep = verify_translation_tiling(Region.box(0, 0, 1, 1), Z2, 1)
        assert rep.passed
        assert rep.defect_regions == ()

    def test_w_pm(self):
        assert verify_translation_tiling(build("W_pm").region, Z2, 1).passed

    def test_diamond_annulus_twofold(self):
        annulus = build("fig2_diamond").region
        assert verify_translation_tiling(annulus, Z2, 2).passed
        assert not verify_translation_tiling(annulus, Z2, 1).passed

    def test_failure_reports_defects(self):
        r = Region.box(0, 0, 1, rat(1, 2))
        rep = verify_translation_tiling(r, Z2, 1)
        assert not rep.passed
        assert {m for _, m in rep.defect_regions} == {0}
        assert total_area(rep.defect_regions) == Scalar(rat(1, 2))

    def test_overlap_reports_multiplicity_two(self):
        r = Region(
            Region.box(0, 0, 1, 1).pieces
            + Region.box(rat(1, 2), 0, rat(3, 2), 1).pieces
        )
        rep = verify_translation_tiling(r, Z2, 1)
        assert not rep.passed
        assert {m for _, m in rep.defect_regions} == {2}

    def test_classes_partition_domain(self):
        r = Region.box(0, 0, rat(3, 4), rat(5, 3))
        rep = verify_translation_tiling(r, Z2, 1)
        total = Scalar(0)
        for _, reg in rep.classes.items():
            total = total + reg.area()
        assert total == rep.checked_domain.area() == Z2.covolume()

    def test_hex_lattice_domain(self):
        rep = verify_translation_tiling(build("W_p6").region, HEX, 1)
        assert rep.passed
        assert rep.checked_domain.area() == HEX.covolume()

    def test_piecewise_lattice_translation_invariance(self):
        rng = random.Random(3)
        base = build("W_pm").region
        for _ in range(5):
            moved = Region(
                tuple(
                    p.translate(v(rng.randint(-3, 3), rng.randint(-3, 3)))
                    for p in base.pieces
                )
            )
            assert verify_translation_tiling(moved, Z2, 1).passed

    def test_area_equals_k_covolume_when_passing(self):
        for key, k in (("W_pm", 1), ("fig2_diamond", 2), ("C", None)):
            r = build(key).region
            if k is None:
                continue
            rep = verify_translation_tiling(r, Z2, k)
            assert rep.passed
            assert r.area() == Scalar(k) * Z2.covolume()

    def test_multiplicity_validation(self):
        with pytest.raises(ValueError):
            verify_translation_tiling(Region.box(0, 0, 1, 1), Z2, 0)


def q2_region():
    h = rat(1, 2)
    inner = Region.box(-h, -h, h, h)
    return inner.dilate(2).subtract(inner)


class TestDilationTiling:
    def test_fundamental_domain_tiles(self):
        assert verify_dilation_tiling(q2_region(), 2, 1).passed

    def test_p4_orbit_of_w_pmm(self):
        union = Region(
            tuple(
                piece
                for img in orbit(group("p4"), build("W_pmm").region)
                for piece in img.pieces
            )
        )
        assert verify_dilation_tiling(union, 2, 1).passed

    def test_unit_square_fails_with_origin_cone(self):
        rep = verify_dilation_tiling(Region.box(0, 0, 1, 1), 2, 1)
        assert not rep.passed
        assert rep.defect_regions[0][1] == UNBOUNDED
        assert rep.defect_regions[0][0].area().sign() > 0

    def test_origin_interior_rejected(self):
        with pytest.raises(ValueError):
            verify_dilation_tiling(Region.box(-1, -1, 1, 1), 2, 1)

    def test_origin_surrounded_by_corners_rejected(self):
        quads = Region(
            Region.box(0, 0, 1, 1).pieces
            + Region.box(-1, 0, 0, 1).pieces
            + Region.box(-1, -1, 0, 0).pieces
            + Region.box(0, -1, 1, 0).pieces
        )
        with pytest.raises(ValueError):
            verify_dilation_tiling(quads, 2, 1)

    def test_gap_fails(self):
        rep = verify_dilation_tiling(Region.box(1, 1, 2, 2), 2, 1)
        assert not rep.passed

    def test_alternate_inner_cell_same_verdicts(self):
        # any H with the origin interior and H inside dH gives the same answer
        alt = ConvexPolygon(
            [
                v(rat(-1, 4), rat(-1, 4)),
                v(rat(3, 4), rat(-1, 4)),
                v(rat(3, 4), rat(3, 4)),
                v(rat(-1, 4), rat(3, 4)),
            ]
        )
        cases = [
            (q2_region(), True),
            (Region.box(1, 1, 2, 2), False),
        ]
        for key in ("W_pmm", "W_p6"):
            entry = build(key)
            union = Region(
                tuple(
                    piece
                    for img in orbit(group(entry.claimed_group_names[-1]), entry.region)
                    for piece in img.pieces
                )
            )
            cases.append((union, True))
        for region, expected in cases:
            assert verify_dilation_tiling(region, 2, 1).passed == expected
            assert (
                verify_dilation_tiling(region, 2, 1, inner_cell=alt).passed == expected
            )

    def test_bad_inner_cell_rejected(self):
        shifted = ConvexPolygon([v(1, 1), v(2, 1), v(2, 2), v(1, 2)])
        with pytest.raises(ValueError):
            verify_dilation_tiling(q2_region(), 2, 1, inner_cell=shifted)

    def test_scaling_consistency(self):
        for region in (q2_region(),):
            assert verify_dilation_tiling(region, 2, 1).passed
            assert verify_dilation_tiling(region.dilate(2), 2, 1).passed
            assert verify_dilation_tiling(region.dilate(rat(1, 2)), 2, 1).passed

    def test_sector_restricted(self):
        quadrant = named_sector("first_quadrant")
        w_p4 = build("W_p4").region
        assert verify_dilation_tiling(w_p4, 2, 1, sector=quadrant).passed

    def test_sector_membership_precondition(self):
        quadrant = named_sector("first_quadrant")
        with pytest.raises(ValueError):
            verify_dilation_tiling(Region.box(-2, 1, -1, 2), 2, 1, sector=quadrant)

    def test_dilation_validation(self):
        with pytest.raises(ValueError):
            verify_dilation_tiling(q2_region(), 1, 1)


class TestPairwiseDisjoint:
    def test_orbit_of_w_pmm(self):
        assert verify_pairwise_disjoint(orbit(group("pmm"), build("W_pmm").region)).passed

    def test_duplicate_fails(self):
        r = Region.box(0, 0, 1, 1)
        rep = verify_pairwise_disjoint([r, r])
        assert not rep.passed
        assert rep.defect_regions[0][1] == 2
        assert rep.defect_regions[0][0].area() == Scalar(1)

    def test_shared_edge_passes(self):
        assert verify_pairwise_disjoint(
            [Region.box(0, 0, 1, 1), Region.box(1, 0, 2, 1)]
        ).passed

    def test_empty_list_passes(self):
        assert verify_pairwise_disjoint([]).passed


class TestSectorContains:
    def test_quadrant_contains_w_p4(self):
        assert sector_contains(named_sector("first_quadrant"), build("W_p4").region)

    def test_octant_does_not_contain_w_p4(self):
        octant = named_sector("first_octant")
        w_p4 = build("W_p4").region
        assert not sector_contains(octant, w_p4)
        # oracle: the part strictly above the diagonal has positive area
        above = Sector([Wedge(v(1, 1), v(-1, -1))]).clip_region(w_p4)
        assert above.area().sign() > 0

    def test_empty_region_contained_everywhere(self):
        for name in ("first_quadrant", "first_octant", "right_half_plane"):
            assert sector_contains(named_sector(name), Region.empty())
