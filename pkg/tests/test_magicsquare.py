import pytest

from excalg import magicsquare as ms
from excalg.liealg import (
    jacobi_check,
    killing_nondegenerate,
)
from excalg.linalg import unit_vec
from excalg.scalar import sc


class TestTriality:
    def test_dimensions(self):
        assert [ms.triality_algebra(k).dim for k in ("r", "c", "h", "o")] == [0, 2, 9, 28]

    def test_defining_identity_on_octonion_kernel(self):
        tri = ms.triality_algebra("o")
        alg = tri.base
        for (u1, u2, u3) in tri.triples[:6]:
            for i in range(8):
                for j in range(8):
                    xy = alg.mul_coords(unit_vec(8, i), unit_vec(8, j))
                    lhs = u1.apply(xy)
                    rhs_a = alg.mul_coords(u2.apply(unit_vec(8, i)), unit_vec(8, j))
                    rhs_b = alg.mul_coords(unit_vec(8, i), u3.apply(unit_vec(8, j)))
                    assert lhs == [a + b for a, b in zip(rhs_a, rhs_b)]

    def test_components_are_skew(self):
        tri = ms.triality_algebra("h")
        g = tri.base.gram
        for triple in tri.triples:
            for m in triple:
                assert (m.transpose() @ g + g @ m).is_zero()

    def test_projection_injective_for_octonions(self):
        assert ms.triality_algebra("o").projection_rank(1) == 28

    def test_quaternion_ideal_split(self):
        parts = ms.tri_ideal_split("h")
        assert [p.dim for p in parts] == [3, 3, 3]
        tri = ms.triality_algebra("h")
        for a in range(3):
            for b in range(a + 1, 3):
                for u in parts[a].basis:
                    for v in parts[b].basis:
                        br = tri.algebra.bracket_coords(list(u), list(v))
                        assert all(x.is_zero() for x in br)

    def test_jacobi(self):
        for key in ("c", "h", "o"):
            assert jacobi_check(ms.triality_algebra(key).algebra, "full").passed


class TestEquivariantMaps:
    def test_hom_dimensions(self):
        expected = {"r": 0, "c": 2, "h": 2, "o": 1}
        for key, dim in expected.items():
            for slot in (1, 2, 3):
                assert len(ms.equivariant_pair_maps(key, slot)) == dim


class TestTitsTable:
    def test_dimensions(self):
        table = ms.tits_dimension_table()
        dims = tuple(tuple(d for (_, d) in row) for row in table)
        assert dims == ms.SQUARE_DIMS

    def test_names(self):
        table = ms.tits_dimension_table()
        assert table[0][0][0] == "sl2"
        assert table[3][3][0] == "e8"
        assert table[1][2][0] == "sl6"


class TestVinberg:
    def test_small_entries(self):
        for (a, b, dim) in (("r", "r", 3), ("c", "r", 8), ("c", "c", 16), ("h", "r", 21)):
            entry = ms.vinberg_build(a, b, verify="full")
            assert entry.dim == dim
            assert killing_nondegenerate(entry.algebra)

    def test_symmetry_pairs(self):
        rep = ms.square_symmetry_check("c", "h")
        assert rep.symmetric and rep.dims == (35, 35)
        rep = ms.square_symmetry_check("r", "r")
        assert rep.symmetric

    def test_rank_one_entry_is_simple_rank_one(self):
        entry = ms.vinberg_build("r", "r", verify="full")
        g = entry.algebra
        from excalg.liealg import (
            SCAlgebra,
            adjoint_module,
            cartan_matrix_from_roots,
            weight_decomposition,
        )

        with_cartan = SCAlgebra(
            3, g.bracket, skew=True, cartan=[unit_vec(3, 0)]
        )
        wd = weight_decomposition(with_cartan, adjoint_module(with_cartan))
        roots = [w for w, mult in wd if any(not x.is_zero() for x in w)]
        assert len(roots) == 2
        cm = cartan_matrix_from_roots(roots)
        assert cm.entries == [[sc(2)]]

    def test_calibration_failure_reported(self):
        # an algebra pair outside the allowed list fails loudly, not quietly
        with pytest.raises(Exception):
            ms.vinberg_build("x", "r")


class TestVectorModel:
    def test_report(self):
        rep = ms.g2_models_crosscheck()
        assert rep.passed
        assert rep.dims == (14, 14, 14)
        assert rep.root_count == 12
        assert rep.short_long_split == (6, 6)

    def test_couplings_recorded(self):
        model = ms.vector_model_g2()
        c1, c2, c3 = model.couplings
        assert c1 == sc(1) and c3 == sc(1)
        assert c2 == sc(-4) / sc(3)

    def test_invariant_form_is_generic(self):
        from excalg import threeform as tf

        model = ms.vector_model_g2()
        assert tf.classify(model.invariant_form).label == tf.W5
