import random

import pytest
from hypothesis import given, settings, strategies as st

from excalg import intlin
from excalg import linalg as la
from excalg.scalar import I, ONE, Scalar, ZERO, sc

rationals = st.builds(
    lambda n, d: Scalar.rational(n, d),
    st.integers(-30, 30),
    st.integers(1, 30),
)
scalars = st.builds(
    lambda a, b: Scalar(a.re, b.re), rationals, rationals
)


class TestScalar:
    def test_parse_format_roundtrip(self):
        for text in ("3/4", "-7/2", "0/1", "(1/2)+(-2/3)i", "(0/1)+(1/1)i"):
            s = Scalar.parse(text)
            assert Scalar.parse(str(s)) == s

    def test_parse_shorthand(self):
        assert Scalar.parse("i") == I
        assert Scalar.parse("-i") == -I
        assert Scalar.parse("2") == sc(2)
        assert Scalar.parse("1-i") == ONE - I
        assert Scalar.parse("3/2i") == Scalar.rational(3, 2) * I

    def test_field_tags(self):
        assert sc(3).field == "RATIONAL"
        assert (sc(3) + I).field == "GAUSSIAN"

    def test_i_squared(self):
        assert I * I == sc(-1)

    @given(scalars, scalars, scalars)
    @settings(max_examples=60, deadline=None)
    def test_field_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a

    @given(scalars)
    @settings(max_examples=40, deadline=None)
    def test_inverse(self, a):
        if not a.is_zero():
            assert a * a.inverse() == ONE
        assert a.conjugate().conjugate() == a

    def test_pow(self):
        assert sc(2) ** 5 == sc(32)
        assert (ONE + I) ** 2 == sc(2) * I


class TestMatrix:
    def test_rank_identity(self):
        assert la.rank(la.Matrix.identity(3)) == 3

    def test_rank_zero(self):
        assert la.rank(la.Matrix.zero(4, 7)) == 0

    def test_kernel_identity(self):
        assert la.kernel(la.Matrix.identity(5)).dim == 0

    def test_solve_identity(self):
        v = [sc(3), sc(-2), I]
        assert la.solve(la.Matrix.identity(3), v) == v

    def test_solve_inconsistent(self):
        m = la.Matrix([[1, 1], [1, 1]])
        assert la.solve(m, [sc(0), sc(1)]) is None

    def test_vandermonde_nodes_invertible(self):
        # the interpolation nodes used for cubic coefficient extraction
        nodes = la.Matrix(
            [[ONE, sc(t), sc(t) ** 2, sc(t) ** 3] for t in (-1, 0, 1, 2)]
        )
        assert not nodes.det().is_zero()

    def test_random_invertible_deterministic(self):
        a = la.random_invertible(5, seed=42)
        b = la.random_invertible(5, seed=42)
        assert a == b

    def test_random_invertible_rank_100_seeds(self):
        for seed in range(100):
            assert la.rank(la.random_invertible(7, seed=seed, height=3)) == 7

    @given(st.integers(0, 10_000))
    @settings(max_examples=25, deadline=None)
    def test_rank_nullity(self, seed):
        rng = random.Random(seed)
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = la.Matrix(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        )
        assert la.rank(m) + la.kernel(m).dim == cols

    def test_kernel_canonical_idempotent(self):
        m = la.Matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        k = la.kernel(m)
        again = la.Subspace(3, [list(v) for v in k.basis])
        assert k == again


class TestSubspace:
    def test_equality_is_syntactic_on_echelon(self):
        s1 = la.Subspace(3, [[1, 0, 1], [0, 1, 1]])
        s2 = la.Subspace(3, [[1, 1, 2], [1, -1, 0]])
        assert s1 == s2

    def test_intersection_and_sum(self):
        a = la.Subspace(3, [[1, 0, 0], [0, 1, 0]])
        b = la.Subspace(3, [[0, 1, 0], [0, 0, 1]])
        assert a.intersect(b).dim == 1
        assert a.add(b).dim == 3

    def test_coordinates_of(self):
        s = la.Subspace(3, [[1, 0, 2], [0, 1, 3]])
        coords = s.coordinates_of([2, 1, 7])
        assert coords == [sc(2), sc(1)]
        assert s.coordinates_of([0, 0, 1]) is None

    def test_span_coordinate_map(self):
        vs = [[1, 1, 0], [0, 1, 1]]
        coords = la.span_coordinate_map(vs)
        assert coords([1, 2, 1]) == [sc(1), sc(1)]
        assert coords([1, 0, 0]) is None


class TestIntKernel:
    def test_matches_pure_solver(self):
        rng = random.Random(5)
        rows = [[rng.randint(-4, 4) for _ in range(30)] for _ in range(80)]
        fast = intlin.int_kernel(rows, 30)
        pure = la.kernel(la.Matrix(rows))
        assert la.Subspace(30, fast) == pure

    def test_rank_certificate(self):
        rows = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
        assert intlin.int_rank_lower_bound(rows, 3) == 2
        assert not intlin.has_full_rank(rows, 3)
        assert intlin.has_full_rank([[1, 0], [1, 1]], 2)
