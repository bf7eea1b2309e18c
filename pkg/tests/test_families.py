"""Family constructors: the preinjective/preprojective series and the
explicit two-arrow family with its geometric-series generators.
"""

from __future__ import annotations

import pytest

from kronbrist.bristles import bristle, enumerate_bristles
from kronbrist.families import (
    INF,
    n2_bristle_generator,
    n2_bristle_index_to_point,
    n2_preinjective,
    preinjective,
    preprojective,
)
from kronbrist.linalg import GF, Matrix, rank
from kronbrist.modules import (
    ISO,
    Morphism,
    coxeter_apply,
    dual,
    end_dim,
    find_isomorphism,
    hom_dim,
    is_generated_by,
    simple_module,
)

F2, F3, F5 = GF(2), GF(3), GF(5)


class TestPreinjectives:
    def test_base_cases(self):
        assert preinjective(3, 0, F5) == simple_module(3, F5, 1)
        I1 = preinjective(3, 1, F5)
        assert I1.dims == (3, 1)
        assert preinjective(3, 2, F5).dims == (8, 3)
        assert preinjective(3, 3, F5).dims == (21, 8)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dims_follow_lattice_recursion(self, n):
        field = F5
        start = {0: (1, 0), 1: (n, 1)}
        for t in range(7):
            expected = coxeter_apply(start[t % 2], n, t // 2)
            assert preinjective(n, t, field).dims == expected

    def test_end_dims_are_one(self):
        for n, tmax in ((2, 4), (3, 3), (4, 2)):
            for t in range(tmax + 1):
                assert end_dim(preinjective(n, t, F5)) == 1

    def test_hom_vanishing_order(self):
        # maps go only towards smaller indices: hom is zero exactly when t < t'
        mods = {t: preinjective(3, t, F5) for t in range(5)}
        for t in range(5):
            for tp in range(5):
                if t < tp:
                    assert hom_dim(mods[t], mods[tp]) == 0
                elif t > tp:
                    assert hom_dim(mods[t], mods[tp]) > 0
        for t in range(4):
            assert end_dim(mods[t]) >= 1
        # identity is an explicit nonzero endomorphism of the largest fixture
        I4 = mods[4]
        Morphism(I4, I4, Matrix.identity(F5, I4.dim1), Matrix.identity(F5, I4.dim2))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            preinjective(3, -1, F5)

    def test_four_arrow_hom_count_into_third(self):
        # n = 4: maps from a unit bristle into the third preinjective span
        # n^2 - n - 1 = 11 dimensions
        from kronbrist.bristles import bristle, unit_point
        I3 = preinjective(4, 3, F2)
        assert I3.dims == (4 ** 3 - 2 * 4, 4 ** 2 - 1)
        assert hom_dim(bristle(unit_point(4, F2, 1)), I3) == 11


class TestPreprojectives:
    def test_base_cases(self):
        assert preprojective(3, 0, F5) == simple_module(3, F5, 2)
        assert preprojective(3, 1, F5).dims == (1, 3)

    def test_dual_round_trip_identical(self):
        for t in range(4):
            assert dual(preprojective(3, t, F5)) == preinjective(3, t, F5)

    def test_dims_reverse(self):
        for n, t in ((2, 3), (3, 2), (4, 2)):
            a, b = preinjective(n, t, F5).dims
            assert preprojective(n, t, F5).dims == (b, a)


class TestTwoArrowFamily:
    def test_index_zero_is_source_simple(self):
        assert n2_preinjective(0, F5) == simple_module(2, F5, 1)

    def test_explicit_matrices_t2(self):
        M = n2_preinjective(2, F5)
        assert M.dims == (3, 2)
        assert M.alphas[0].data == ((1, 0, 0), (0, 1, 0))  # shift down
        assert M.alphas[1].data == ((0, 1, 0), (0, 0, 1))  # truncate

    def test_t3_dims_gf3(self):
        assert n2_preinjective(3, F3).dims == (4, 3)

    @pytest.mark.parametrize("t", [0, 1, 2, 3, 4])
    def test_isomorphic_to_translate_construction(self, t):
        assert find_isomorphism(n2_preinjective(t, F5), preinjective(2, t, F5)).status == ISO

    def test_generator_endpoints(self):
        f = F5
        assert n2_bristle_generator(2, 0, f) == (1, 0, 0)
        assert n2_bristle_generator(2, INF, f) == (0, 0, 1)
        assert n2_bristle_generator(3, 2, f) == (1, 2, 4, 3)

    def test_vandermonde_independence(self):
        f = F3
        t = 2
        vecs = [n2_bristle_generator(t, c, f) for c in (0, 1, 2, INF)]
        for triple in ((0, 1, 2), (0, 1, 3), (1, 2, 3)):
            M = Matrix.from_rows(f, [list(vecs[i]) for i in triple], cols=t + 1)
            assert rank(M) == t + 1

    def test_generation_cutoff_gf2(self):
        f = F2
        pts = enumerate_bristles(2, f)
        mods = [bristle(p) for p in pts]  # all three bristles over GF(2)
        assert is_generated_by(mods, n2_preinjective(2, f))
        assert not is_generated_by(mods, n2_preinjective(3, f))

    def test_index_points(self):
        f = F3
        assert n2_bristle_index_to_point(2, f).coords == (1, 2)
        assert n2_bristle_index_to_point(INF, f).coords == (0, 1)
