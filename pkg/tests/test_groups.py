import random

import pytest

from wavetile.exactfield import Scalar, rational
from wavetile.geom2d import Isometry, Mat2, Region, Vec2
from wavetile.groups import (
    GROUP_NAMES,
    HEX,
    Z2,
    Lattice,
    build_group,
    canonical_sector,
    compatible,
    dual_lattice,
    group,
    member,
    named_sector,
    orbit,
    reflection,
    rotation,
)


def rat(p, q=1):
    return rational(p, q)


def v(x, y):
    return Vec2(x, y)


EXPECTED_ORDERS = {
    "p1": 1, "p2": 2, "pm": 2, "pg": 2, "pmm": 4, "pmg": 4, "pgg": 4,
    "p4": 4, "p4m": 8, "p4g": 8, "cm": 2, "cmm": 4,
    "p3": 3, "p31m": 6, "p3m1": 6, "p6": 6, "p6m": 12,
}

NON_SYMMORPHIC = {"pg", "pmg", "pgg", "p4g"}


class TestBuildGroup:
    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_point_group_order(self, name):
        assert len(group(name).point_group) == EXPECTED_ORDERS[name]

    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_point_group_closed(self, name):
        g = group(name)
        mats = set(g.point_group)
        for s in mats:
            assert s.is_orthogonal()
            assert s.inverse() in mats
            for t in mats:
                assert s @ t in mats

    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_identity_coset_is_zero(self, name):
        g = group(name)
        assert g.coset_table[Mat2.identity()].is_zero()

    def test_p4m_order_by_brute_force(self):
        # oracle: brute-force closure of the two generator matrices
        gens = [rotation(4), reflection(v(1, 1))]
        seen = {Mat2.identity()}
        frontier = [Mat2.identity()]
        while frontier:
            nxt = []
            for m in frontier:
                for h in gens:
                    p = m @ h
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        assert len(seen) == 8
        assert set(group("p4m").point_group) == seen

    def test_pg_coset_vector(self):
        g = group("pg")
        assert g.coset_table[reflection(v(0, 1))] == v(0, rat(1, 2))

    def test_p1_trivial(self):
        g = group("p1")
        assert g.point_group == (Mat2.identity(),)
        assert list(g.coset_table.values()) == [v(0, 0)]

    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_symmorphic_iff_no_coset_vectors(self, name):
        assert group(name).is_symmorphic == (name not in NON_SYMMORPHIC)

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            build_group("p5")

    def test_case_insensitive(self):
        assert build_group("P6M").name == "p6m"


class TestMember:
    def test_glide_generator_is_member(self):
        assert member(group("pg"), Isometry(v(0, rat(1, 2)), reflection(v(0, 1))))

    def test_pure_reflection_not_in_pg(self):
        # pg has only essential glides: the pure reflection is absent
        assert not member(group("pg"), Isometry.linear(reflection(v(0, 1))))

    def test_pure_reflection_in_pm(self):
        assert member(group("pm"), Isometry.linear(reflection(v(0, 1))))

    def test_lattice_translation_member(self):
        for name in ("p1", "pg", "p4m", "cm"):
            assert member(group(name), Isometry.translation(v(3, -2)))

    def test_non_lattice_translation(self):
        assert not member(group("p1"), Isometry.translation(v(rat(1, 2), 0)))

    def test_hex_translation(self):
        assert member(group("p6"), Isometry.translation(HEX.v2))
        assert not member(group("p6"), Isometry.translation(v(0, 1)))

    def test_foreign_matrix(self):
        assert not member(group("p2"), Isometry.linear(rotation(4)))

    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_closure_under_composition(self, name):
        g = group(name)
        rng = random.Random(7)
        members = []
        for s, c in g.coset_table.items():
            ell = g.lattice.from_coords(v(rng.randint(-2, 2), rng.randint(-2, 2)))
            members.append(Isometry(ell + c, s))
        for a in members[:4]:
            for b in members[:4]:
                assert member(g, a * b)

    def test_compose_associative_on_members(self):
        g = group("p4g")
        rng = random.Random(11)
        ms = []
        for s, c in g.coset_table.items():
            ell = v(rng.randint(-2, 2), rng.randint(-2, 2))
            ms.append(Isometry(ell + c, s))
        for a in ms[:3]:
            for b in ms[:3]:
                for c3 in ms[:3]:
                    assert (a * b) * c3 == a * (b * c3)


class TestCompatible:
    def test_examples(self):
        assert compatible(group("pm"), 2)
        assert not compatible(group("pg"), 2)
        assert compatible(group("pg"), 3)

    @pytest.mark.parametrize("name", GROUP_NAMES)
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_full_table(self, name, d):
        expected = True if name not in NON_SYMMORPHIC else (d % 2 == 1)
        assert compatible(group(name), d) == expected

    def test_requires_d_at_least_2(self):
        with pytest.raises(ValueError):
            compatible(group("p1"), 1)


class TestLattice:
    def test_z2_self_dual(self):
        assert dual_lattice(Z2).same_lattice(Z2)

    def test_hex_dual(self):
        dual = dual_lattice(HEX)
        # oracle: solve <u_i, v_j> = delta_ij exactly
        for u, deltas in ((dual.v1, (1, 0)), (dual.v2, (0, 1))):
            assert u.dot(HEX.v1) == Scalar(deltas[0])
            assert u.dot(HEX.v2) == Scalar(deltas[1])
        expected = Lattice(
            v(1, Scalar(0, rat(-1, 3))), v(0, Scalar(0, rat(2, 3)))
        )
        assert dual.same_lattice(expected)

    def test_diagonal_dual(self):
        lat = Lattice(v(1, 0), v(0, 2))
        dual = dual_lattice(lat)
        assert dual.same_lattice(Lattice(v(1, 0), v(0, rat(1, 2))))

    @pytest.mark.parametrize("lat", [Z2, HEX, Lattice(v(2, 1), v(rat(1, 2), 3))])
    def test_double_dual(self, lat):
        dd = dual_lattice(dual_lattice(lat))
        assert dd.same_lattice(lat)
        assert (dd.covolume() - lat.covolume()).sign() == 0

    def test_reduce(self):
        p = v(rat(7, 2), rat(-5, 3))
        r = Z2.reduce(p)
        assert r == v(rat(1, 2), rat(1, 3))
        assert Z2.contains(p - r)

    def test_singular_basis_rejected(self):
        with pytest.raises(ValueError):
            Lattice(v(1, 1), v(2, 2))


class TestOrbit:
    def test_p1_orbit_is_identity(self):
        r = Region.box(0, 0, 1, 1)
        images = orbit(group("p1"), r)
        assert len(images) == 1
        assert images[0].equals_ae(r)

    def test_p4m_orbit_equal_areas(self):
        r = Region.box(rat(1, 3), 0, 1, rat(1, 2))
        images = orbit(group("p4m"), r)
        assert len(images) == 8
        for img in images:
            assert img.area() == r.area()


class TestSectors:
    def test_pmm_first_quadrant(self):
        s = canonical_sector("pmm")
        (w,) = s.wedges
        assert w.d1 == v(1, 0)
        assert w.d2 == v(0, 1)

    def test_p4m_first_octant(self):
        s = canonical_sector("p4m")
        (w,) = s.wedges
        assert w.d1 == v(1, 0)
        assert w.d2 == v(1, 1)

    def test_p1_whole_plane(self):
        assert canonical_sector("p1").is_whole_plane

    def test_p3m1_two_octants(self):
        assert len(canonical_sector("p3m1").wedges) == 2

    @pytest.mark.parametrize("name", GROUP_NAMES)
    def test_every_group_has_sector(self, name):
        canonical_sector(name)

    def test_named_sector_unknown(self):
        with pytest.raises(KeyError):
            named_sector("second_octant")
