import pytest
from hypothesis import given, settings, strategies as st

from excalg import rootdata as rd

TYPES = [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


class TestGeneration:
    def test_root_counts(self):
        expected = {
            ("G", 2): 12,
            ("F", 4): 48,
            ("E", 6): 72,
            ("E", 7): 126,
            ("E", 8): 240,
            ("A", 1): 2,
            ("D", 4): 24,
        }
        for (fam, rank), count in expected.items():
            assert len(rd.build_root_system(fam, rank).roots) == count

    def test_closed_under_negation(self):
        for fam, rank in TYPES:
            rs = rd.build_root_system(fam, rank)
            for r in rs.roots:
                assert tuple(-c for c in r) in rs.roots

    def test_highest_root_marks(self):
        assert rd.build_root_system("G", 2).marks == (3, 2)
        assert rd.build_root_system("F", 4).marks == (2, 3, 4, 2)
        assert rd.build_root_system("E", 8).marks == (2, 3, 4, 6, 5, 4, 3, 2)
        assert rd.build_root_system("D", 4).marks == (1, 2, 1, 1)

    def test_invalid_type(self):
        with pytest.raises(ValueError):
            rd.build_root_system("G", 3)

    def test_consistency_with_built_algebras(self):
        # dimensions of the square entries match the generated root data
        dims = {
            ("A", 2): 8,
            ("C", 3): 21,
            ("F", 4): 52,
            ("E", 6): 78,
            ("E", 7): 133,
            ("E", 8): 248,
            ("D", 6): 66,
            ("A", 5): 35,
        }
        for (fam, rank), dim in dims.items():
            assert rd.build_root_system(fam, rank).dimension == dim


class TestZGradings:
    def test_acceptance_profiles(self):
        f4 = rd.build_root_system("F", 4)
        assert rd.z_grading(f4, 4).dims_list() == [(-2, 7), (-1, 8), (0, 22), (1, 8), (2, 7)]
        e6 = rd.build_root_system("E", 6)
        assert rd.z_grading(e6, 2).dims[1] == 20
        assert rd.z_grading(e6, 1).dims_list() == [(-1, 16), (0, 46), (1, 16)]

    def test_zero_part_types(self):
        f4 = rd.build_root_system("F", 4)
        assert rd.z_grading(f4, 4).zero_part_type == "B3"
        e6 = rd.build_root_system("E", 6)
        assert rd.z_grading(e6, 2).zero_part_type == "A5"
        assert rd.z_grading(e6, 1).zero_part_type == "D5"

    @given(st.sampled_from(TYPES), st.integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_symmetry_and_total(self, typ, node):
        fam, rank = typ
        if node > rank:
            node = 1 + (node - 1) % rank
        rs = rd.build_root_system(fam, rank)
        rep = rd.z_grading(rs, node)
        assert sum(rep.dims.values()) == rs.dimension
        for deg, dim in rep.dims.items():
            assert rep.dims.get(-deg, 0) == dim or deg == 0

    def test_mark_one_nodes_give_three_terms(self):
        for fam, rank, node in (("E", 6, 1), ("E", 7, 7), ("A", 4, 2), ("D", 5, 1)):
            rs = rd.build_root_system(fam, rank)
            assert rs.marks[node - 1] == 1
            rep = rd.z_grading(rs, node)
            assert sorted(rep.dims) == [-1, 0, 1]


class TestZmGradings:
    def test_acceptance_profiles(self):
        g2 = rd.build_root_system("G", 2)
        assert rd.zm_grading(g2, 2).dims_list() == [(0, 6), (1, 8)]
        d4 = rd.build_root_system("D", 4)
        assert rd.zm_grading(d4, 2).dims_list() == [(0, 12), (1, 16)]
        e8 = rd.build_root_system("E", 8)
        assert rd.zm_grading(e8, 1).dims_list() == [(0, 120), (1, 128)]

    def test_order_three_node(self):
        g2 = rd.build_root_system("G", 2)
        assert rd.zm_grading(g2, 1).dims_list() == [(0, 8), (1, 3), (2, 3)]

    def test_extended_node_trivial(self):
        g2 = rd.build_root_system("G", 2)
        assert rd.zm_grading(g2, 0).dims_list() == [(0, 14)]

    def test_order_two_balance(self):
        # negation pairs the odd part: degree-0 plus twice the positive
        # odd-coefficient roots accounts for the whole algebra
        for fam, rank, node in (("G", 2, 2), ("D", 4, 2), ("E", 8, 1), ("E", 7, 1)):
            rs = rd.build_root_system(fam, rank)
            rep = rd.zm_grading(rs, node)
            if rep.modulus != 2:
                continue
            positive_odd = sum(
                1 for r in rs.roots if r[node - 1] % 2 == 1 and r[node - 1] > 0
            )
            assert rep.dims[0] + 2 * positive_odd == rs.dimension


class TestDimensionFormulas:
    def test_series(self):
        assert [rd.magic_dimension_formulas(a).v4 for a in (1, 2, 4, 8)] == [52, 78, 133, 248]

    def test_third_row(self):
        rec = rd.magic_dimension_formulas(4)
        assert (rec.x3, rec.v3) == (15, 32)

    def test_half_column(self):
        assert rd.magic_dimension_formulas(6).v4 == 190

    def test_invalid(self):
        with pytest.raises(ValueError):
            rd.magic_dimension_formulas(3)


class TestShadows:
    def test_grassmannian_lines(self):
        a7 = rd.build_root_system("A", 7)
        rep = rd.shadow_lines(a7, 3)
        assert rep.incidence_nodes == (2, 4) and rep.homogeneous

    def test_short_root_not_homogeneous(self):
        g2 = rd.build_root_system("G", 2)
        rep = rd.shadow_lines(g2, 1)
        assert rep.incidence_nodes == (2,) and not rep.homogeneous

    def test_projective_line_itself(self):
        a1 = rd.build_root_system("A", 1)
        rep = rd.shadow_lines(a1, 1)
        assert rep.incidence_nodes == () and rep.homogeneous
