"""Bristle machinery: canonical sets, enumeration, bristle vectors, the
variety of bristle lines, maximal bristled submodules, saturation.
"""

from __future__ import annotations

import itertools
import random

import pytest

from kronbrist.bristles import (
    BristlePoint,
    bristle,
    bristle_count,
    bristle_point,
    bristle_type_of,
    bristle_variety,
    canonical_set,
    enumerate_bristles,
    is_bristle_vector,
    is_bristled,
    is_saturated,
    maximal_bristled_submodule,
    pair_point,
    unit_point,
)
from kronbrist.families import dim32_bristled, dim32_not_bristled, n2_preinjective
from kronbrist.linalg import GF, QQ
from kronbrist.modules import (
    ar_translate,
    direct_sum,
    ext1_dim,
    hom_dim,
    projective_module,
    simple_module,
)

F2, F3, F5 = GF(2), GF(3), GF(5)


class TestPointsAndModules:
    def test_unit_point_module(self):
        b = bristle(unit_point(3, F5, 1))
        assert b.alphas[0].data == ((1,),)
        assert b.alphas[1].is_zero() and b.alphas[2].is_zero()

    def test_pair_point_module(self):
        b = bristle(pair_point(3, F5, 2, 3))
        assert b.alphas[0].is_zero()
        assert b.alphas[1].data == ((1,),) and b.alphas[2].data == ((1,),)

    def test_scalar_multiples_normalize(self):
        assert bristle_point(3, F5, [2, 4, 0]) == bristle_point(3, F5, [1, 2, 0])
        assert bristle_point(3, F5, [0, 3, 3]) == bristle_point(3, F5, [0, 1, 1])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            bristle_point(3, F5, [0, 0, 0])

    def test_unnormalized_constructor_rejected(self):
        with pytest.raises(ValueError):
            BristlePoint(3, F5, (2, 0, 0))


class TestCanonicalSets:
    def test_b0_n3(self):
        pts = canonical_set("B0", 3, F5)
        expected = [unit_point(3, F5, 2), unit_point(3, F5, 3),
                    pair_point(3, F5, 1, 2), pair_point(3, F5, 2, 3),
                    pair_point(3, F5, 3, 1)]
        assert pts == expected and len(pts) == 5

    def test_b0prime_n3(self):
        pts = canonical_set("B0prime", 3, F5)
        assert len(pts) == 4
        assert pair_point(3, F5, 2, 3) not in pts

    def test_b1prime_n3(self):
        pts = canonical_set("B1prime", 3, F5)
        assert pts == [unit_point(3, F5, 1), pair_point(3, F5, 1, 2),
                       pair_point(3, F5, 2, 3), pair_point(3, F5, 3, 1)]

    def test_cardinalities_general(self):
        for n in (3, 4, 5, 6):
            assert len(canonical_set("B0", n, F2)) == n + 2
            assert len(canonical_set("B0prime", n, F2)) == n + 1
            assert len(canonical_set("B1prime", n, F2)) == n + 1

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            canonical_set("B0", 2, F5)


class TestEnumeration:
    @pytest.mark.parametrize("n,q,count", [(2, 2, 3), (3, 2, 7), (2, 3, 4), (3, 5, 31)])
    def test_counts(self, n, q, count):
        assert len(enumerate_bristles(n, GF(q))) == count == bristle_count(n, q)

    def test_matches_brute_force_gf2_cubed(self):
        # oracle: all nonzero vectors of GF(2)^3 modulo scaling (trivial for q=2)
        brute = {v for v in itertools.product((0, 1), repeat=3) if any(v)}
        pts = enumerate_bristles(3, F2)
        assert {p.coords for p in pts} == brute

    def test_lexicographic_order(self):
        pts = enumerate_bristles(3, F3)
        coords = [p.coords for p in pts]
        assert coords == sorted(coords)

    def test_rationals_rejected(self):
        with pytest.raises(ValueError):
            enumerate_bristles(3, QQ)


class TestBristleVectors:
    def test_any_vector_of_a_bristle(self):
        b = bristle(bristle_point(3, F5, [1, 2, 0]))
        assert is_bristle_vector(b, (1,))
        assert is_bristle_vector(b, (3,))

    def test_geometric_series_vector(self):
        It = n2_preinjective(2, F5)
        m_c = (1, 2, 4)  # powers of 2
        assert is_bristle_vector(It, m_c)
        assert bristle_type_of(It, m_c) == bristle_point(2, F5, [1, 2])

    def test_generic_vector_of_projective_fails(self):
        P1 = projective_module(3, F5, 1)
        assert not is_bristle_vector(P1, (1,))

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            is_bristle_vector(bristle(unit_point(3, F5, 1)), (0,))


class TestVariety:
    def test_single_bristle(self):
        p = bristle_point(3, F5, [1, 2, 3])
        var = bristle_variety(bristle(p))
        assert var == [((1,), p)]

    def test_sink_simple_empty(self):
        assert bristle_variety(simple_module(3, F5, 2)) == []

    def test_source_simple_reduces_away(self):
        # the vertex-1 socle is split off before enumerating lines
        assert bristle_variety(simple_module(3, F5, 1)) == []

    def test_direct_sum_coordinate_lines(self):
        M = direct_sum(bristle(unit_point(3, F5, 1)), bristle(unit_point(3, F5, 2)))
        var = bristle_variety(M)
        assert [(u, p.coords) for u, p in var] == [
            ((0, 1), (0, 1, 0)), ((1, 0), (1, 0, 0))]

    def test_disjoint_union_against_oracle_gf2(self):
        rng = random.Random(31)
        for _ in range(10):
            p1 = rng.choice(enumerate_bristles(3, F2))
            p2 = rng.choice([p for p in enumerate_bristles(3, F2) if p != p1])
            M = direct_sum(bristle(p1), bristle(p2))
            types = sorted(pt.coords for _, pt in bristle_variety(M))
            assert types == sorted([p1.coords, p2.coords])

    def test_direct_sum_variety_of_random_modules_gf2(self):
        # whenever the two summands share no bristle type, the variety of the
        # sum is exactly the two coordinatewise-embedded varieties
        from kronbrist.modules import random_module
        rng = random.Random(37)
        checked = 0
        while checked < 8:
            M = random_module(3, F2, rng, 2, 2)
            N = random_module(3, F2, rng, 2, 2)
            if M.dim1 == 0 or N.dim1 == 0:
                continue
            var_m = bristle_variety(M)
            var_n = bristle_variety(N)
            types_m = {p.coords for _, p in var_m}
            types_n = {p.coords for _, p in var_n}
            if types_m & types_n:
                continue
            S = direct_sum(M, N)
            expected = set()
            # the reduced sum is the sum of the reduced parts, coordinatewise
            from kronbrist.bristles import s1_generated_submodule
            dm = M.dim1 - s1_generated_submodule(M).U1.dim
            dn = N.dim1 - s1_generated_submodule(N).U1.dim
            for u, p in var_m:
                expected.add((u + (0,) * dn, p.coords))
            for u, p in var_n:
                expected.add(((0,) * dm + u, p.coords))
            got = {(u, p.coords) for u, p in bristle_variety(S)}
            assert got == expected
            checked += 1

    def test_rationals_rejected(self):
        with pytest.raises(ValueError):
            bristle_variety(bristle(bristle_point(3, QQ, [1, 0, 0])))


class TestBristledAndSaturated:
    def test_source_simple_bristled(self):
        S1 = simple_module(3, F2, 1)
        assert maximal_bristled_submodule(S1).is_full()

    def test_projective_not_bristled(self):
        P1 = projective_module(3, F2, 1)
        pair = maximal_bristled_submodule(P1)
        assert pair.U1.is_zero() and pair.U2.is_full()
        assert not is_bristled(P1)

    def test_two_arrow_family_cutoff(self):
        # over GF(2): bristled up to index 2, not from 3 on
        from kronbrist.families import preinjective
        assert is_bristled(preinjective(2, 2, F2))
        assert not is_bristled(preinjective(2, 3, F2))

    def test_saturation_basics(self):
        from kronbrist.families import preinjective
        assert is_saturated(preinjective(3, 2, F2))
        assert not is_saturated(simple_module(3, F2, 2))
        b = bristle(unit_point(3, F2, 1))
        T = ar_translate(b, "tau")
        assert not is_saturated(T)
        assert is_saturated(ar_translate(T, "tau"))

    def test_saturation_rationals_rejected(self):
        with pytest.raises(ValueError):
            is_saturated(bristle(bristle_point(3, QQ, [1, 0, 0])))


class TestOrthogonality:
    @pytest.mark.parametrize("field", [F2, F3])
    def test_pairwise_hom_orthogonal(self, field):
        pts = enumerate_bristles(3, field)
        mods = [bristle(p) for p in pts]
        for i, Mi in enumerate(mods):
            for j, Mj in enumerate(mods):
                assert hom_dim(Mi, Mj) == (1 if i == j else 0)

    @pytest.mark.parametrize("field", [F2, F3])
    def test_self_extension_dimension(self, field):
        for p in enumerate_bristles(3, field):
            assert ext1_dim(bristle(p), bristle(p)) == 2


class TestDim32Fixtures:
    @pytest.mark.parametrize("field", [F2, F5])
    def test_left_is_bristled_right_is_not(self, field):
        left = dim32_bristled(field)
        right = dim32_not_bristled(field)
        assert left.dims == right.dims == (3, 2)
        assert is_bristled(left)
        assert not is_bristled(right)

    @pytest.mark.parametrize("field", [F2, F5])
    def test_both_faithful(self, field):
        from kronbrist.modules import is_faithful
        assert is_faithful(dim32_bristled(field))
        assert is_faithful(dim32_not_bristled(field))

    def test_left_variety_is_three_coordinate_lines(self):
        var = bristle_variety(dim32_bristled(F2))
        assert [u for u, _ in var] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
