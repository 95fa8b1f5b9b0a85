import random

import pytest

from excalg import jordan as jd
from excalg.linalg import unit_vec
from excalg.scalar import ONE, sc

ALL_A = (0, 1, 2, 4, 8)


class TestAlgebraStructure:
    def test_dimensions(self):
        for a in ALL_A:
            assert jd.jordan_algebra(a).dim == 3 + 3 * a

    def test_identity_element(self):
        for a in (0, 2, 8):
            alg = jd.jordan_algebra(a)
            rng = random.Random(a)
            x = alg.random_element(rng)
            assert jd.jordan_product(alg.identity(), x) == x

    def test_orthogonal_idempotents(self):
        alg = jd.jordan_algebra(8)
        e1 = alg.from_parts([1, 0, 0])
        e2 = alg.from_parts([0, 1, 0])
        assert jd.jordan_product(e1, e2).is_zero()
        assert jd.jordan_product(e1, e1) == e1

    def test_commutative(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(1)
        x, y = alg.random_element(rng), alg.random_element(rng)
        assert jd.jordan_product(x, y) == jd.jordan_product(y, x)

    def test_jordan_identity_octonion_entries(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(2)
        for _ in range(30):
            x, y = alg.random_element(rng), alg.random_element(rng)
            xx = jd.jordan_product(x, x)
            lhs = jd.jordan_product(jd.jordan_product(x, y), xx)
            rhs = jd.jordan_product(x, jd.jordan_product(y, xx))
            assert lhs == rhs

    def test_power_associativity_degree_four(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(3)
        for _ in range(10):
            x = alg.random_element(rng)
            x2 = jd.jordan_product(x, x)
            x3 = jd.jordan_product(x, x2)
            assert jd.jordan_product(x, x3) == jd.jordan_product(x2, x2)

    def test_trace_form_associative(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(4)
        for _ in range(20):
            x, y, z = (alg.random_element(rng) for _ in range(3))
            lhs = jd.trace_pairing(jd.jordan_product(x, y), z)
            rhs = jd.trace_pairing(x, jd.jordan_product(y, z))
            assert lhs == rhs


class TestDeterminant:
    def test_diagonal(self):
        alg = jd.jordan_algebra(0)
        assert jd.det_cubic(alg.from_parts([2, 3, 5])) == sc(30)

    def test_identity(self):
        for a in ALL_A:
            assert jd.det_cubic(jd.jordan_algebra(a).identity()) == ONE

    def test_homogeneous_cubic(self):
        alg = jd.jordan_algebra(4)
        rng = random.Random(5)
        x = alg.random_element(rng)
        assert jd.det_cubic(x.scale(3)) == sc(27) * jd.det_cubic(x)

    def test_rank_one_determinant_vanishes(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(6)
        u = [sc(rng.randint(-2, 2)) for _ in range(8)]
        v = [sc(rng.randint(-2, 2)) for _ in range(8)]
        assert jd.det_cubic(jd.rank_one_from_pair(alg, u, v)).is_zero()


class TestAdjugate:
    def test_cremona(self):
        alg = jd.jordan_algebra(0)
        m = alg.from_parts([2, 3, 5])
        assert list(jd.adjugate(m).coords) == [sc(15), sc(10), sc(6)]

    def test_identity(self):
        for a in ALL_A:
            alg = jd.jordan_algebra(a)
            assert jd.adjugate(alg.identity()) == alg.identity()

    def test_interpolation_matches_closed_form(self):
        rng = random.Random(7)
        for a in ALL_A:
            alg = jd.jordan_algebra(a)
            for _ in range(10):
                x = alg.random_element(rng)
                assert jd.adjugate(x) == jd.adjugate_closed_form(x)

    def test_double_adjugate(self):
        rng = random.Random(8)
        for a in ALL_A:
            alg = jd.jordan_algebra(a)
            for _ in range(10):
                x = alg.random_element(rng)
                assert jd.adjugate(jd.adjugate(x)) == x.scale(jd.det_cubic(x))

    def test_cross_is_adjugate_polarization(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(9)
        x = alg.random_element(rng)
        for e in (0, 5, 20):
            direct = (
                jd.adjugate(x + alg.element(unit_vec(alg.dim, e)))
                - jd.adjugate(x)
                - alg.element(alg.basis_adjugates()[e])
            )
            assert jd.freudenthal_cross(x, e) == direct


class TestCayleyHamilton:
    def test_identity_case(self):
        assert jd.cayley_hamilton_check(jd.jordan_algebra(8).identity()).passed

    def test_random(self):
        rng = random.Random(10)
        for a in ALL_A:
            alg = jd.jordan_algebra(a)
            for _ in range(15):
                assert jd.cayley_hamilton_check(alg.random_element(rng)).passed


class TestRank:
    def test_rank_chain(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(11)
        u = [sc(rng.randint(-2, 2)) for _ in range(8)]
        v = [sc(rng.randint(-2, 2)) for _ in range(8)]
        r1 = jd.rank_one_from_pair(alg, u, v)
        r2 = r1 + jd.rank_one_from_pair(alg, v, u)
        assert jd.jordan_rank(r1) == 1
        assert jd.jordan_rank(r2) == 2
        assert jd.jordan_rank(alg.identity()) == 3
        assert jd.jordan_rank(alg.element([sc(0)] * 27)) == 0

    def test_projector_criterion_both_ways(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(12)
        for _ in range(15):
            u = [sc(rng.randint(-1, 1)) for _ in range(8)]
            v = [sc(rng.randint(-1, 1)) for _ in range(8)]
            m = jd.rank_one_from_pair(alg, u, v)
            assert jd.jordan_product(m, m) == m.scale(jd.trace(m))
        # diagonal idempotents
        for diag in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
            m = alg.from_parts(diag)
            assert jd.jordan_product(m, m) == m.scale(jd.trace(m))
            assert jd.jordan_rank(m) <= 1
        # converse sampled: random elements of rank > 1 fail the projector law
        for _ in range(15):
            x = alg.random_element(rng)
            if jd.jordan_rank(x) > 1:
                assert jd.jordan_product(x, x) != x.scale(jd.trace(x))


class TestFreudenthal:
    def test_cubic_map_base_point(self):
        alg = jd.jordan_algebra(8)
        fv = jd.cubic_map(alg.element([sc(0)] * 27))
        assert fv.alpha == ONE and fv.beta.is_zero()
        assert all(c.is_zero() for c in fv.m) and all(c.is_zero() for c in fv.n)

    def test_cubic_map_twisted_cubic_pattern(self):
        alg = jd.jordan_algebra(0)
        fv = jd.cubic_map(alg.from_parts([2, 3, 5]))
        assert list(fv.m) == [sc(2), sc(3), sc(5)]
        assert list(fv.n) == [sc(15), sc(10), sc(6)]
        assert fv.beta == sc(30)

    def test_cubic_map_identity(self):
        alg = jd.jordan_algebra(4)
        fv = jd.cubic_map(alg.identity())
        assert fv.alpha == ONE and fv.beta == ONE
        assert list(fv.m) == list(alg.identity().coords)
        assert list(fv.n) == list(alg.identity().coords)

    def test_pairing_antisymmetry_and_duality(self):
        alg = jd.jordan_algebra(1)
        rng = random.Random(13)
        p = jd.cubic_map(alg.random_element(rng))
        assert jd.symplectic_pairing(p, p).is_zero()
        zero = [sc(0)] * alg.dim
        e = jd.freudenthal_vector(alg, 1, zero, zero, 0)
        f = jd.freudenthal_vector(alg, 0, zero, zero, 1)
        assert jd.symplectic_pairing(e, f) in (ONE, -ONE)

    def test_gram_ranks(self):
        for a in (0, 1, 2):
            assert jd.symplectic_gram_rank(a) == 6 * a + 8

    def test_legendrian_small(self):
        for a in (0, 1):
            rep = jd.legendrian_check(a, samples=5, seed=0)
            assert rep.passed and rep.tangent_dim == 3 * a + 4


class TestSerialization:
    def test_json_roundtrip(self):
        alg = jd.jordan_algebra(8)
        rng = random.Random(14)
        x = alg.random_element(rng)
        assert jd.JordanElement.from_json(x.to_json()) == x

    def test_a0_roundtrip(self):
        alg = jd.jordan_algebra(0)
        x = alg.from_parts([1, -2, sc("3/2")])
        assert jd.JordanElement.from_json(x.to_json()) == x
