import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polystrata.homology import BoundarySquareError, HomologyResult, sphere_homology
from polystrata.strata import (
    StratumCell,
    StratumError,
    _runs_of_twos,
    _total_cell_count,
    boundary,
    boundary_of_chain,
    closure_cells,
    closure_poset,
    complement_cohomology,
    pol_chain_complex,
    pol_homology,
    stabilization_report,
)

partitions = st.lists(st.integers(1, 4), min_size=0, max_size=4).map(
    lambda p: tuple(sorted(p))
)


def cells_strategy():
    def build(parts):
        m = sum(parts)
        return st.integers(0, 3).map(lambda k: StratumCell(parts, m + 2 * k))

    return st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple).flatmap(build)


class TestStratumCell:
    def test_dimension(self):
        assert StratumCell((2, 1), 3).dimension == 2
        assert StratumCell((2, 1), 5).dimension == 4
        assert StratumCell((), 4).dimension == 4

    def test_parity_enforced(self):
        with pytest.raises(StratumError):
            StratumCell((2,), 3)
        with pytest.raises(StratumError):
            StratumCell((2, 2), 2)

    def test_str(self):
        assert str(StratumCell((1, 2), 5)) == "(1,2)@5"


class TestClosure:
    def test_single_cell_closure(self):
        assert closure_cells((3,), 3) == frozenset({StratumCell((3,), 3)})

    def test_two_part_closure(self):
        cells = {c.parts for c in closure_cells((1, 2), 3)}
        assert cells == {(1, 2), (2, 1), (3,)}

    def test_insertion_move(self):
        cells = {c.parts for c in closure_cells((3,), 5)}
        assert cells == {(3,), (2, 3), (3, 2), (5,)}

    def test_empty_partition(self):
        # only conjugate-pair collisions and their merges are reachable
        cells = {c.parts for c in closure_cells((), 4)}
        assert cells == {(), (2,), (2, 2), (4,)}

    def test_total_cell_count(self):
        # compositions of every weight of the right parity, plus the empty cell
        assert _total_cell_count(2) == 3
        assert _total_cell_count(3) == 5
        assert _total_cell_count(4) == 11

    @given(partitions, st.integers(0, 2))
    @settings(max_examples=60, deadline=None)
    def test_dimensions_bounded(self, partition, k):
        n = sum(partition) + 2 * k
        if n == 0:
            return
        top = len(partition) + 2 * k
        for cell in closure_cells(partition, n):
            assert 0 <= cell.dimension <= top
            assert cell.ambient == n


class TestRuns:
    def test_runs_of_twos(self):
        assert _runs_of_twos((2, 2, 1, 2)) == [(1, 2), (4, 4)]
        assert _runs_of_twos((1, 3)) == []
        assert _runs_of_twos((2,)) == [(1, 1)]


class TestBoundary:
    def test_merge_signs(self):
        result = boundary(StratumCell((1, 2, 3), 6))
        assert result == {
            StratumCell((3, 3), 6): -1,
            StratumCell((1, 5), 6): 1,
        }

    def test_insertion_into_empty(self):
        result = boundary(StratumCell((), 4))
        assert result == {StratumCell((2,), 4): 1}

    def test_even_run_vanishes(self):
        # inserting next to an existing 2 creates a run of length 2
        result = boundary(StratumCell((2,), 4))
        assert StratumCell((2, 2), 4) not in result

    def test_odd_run_sign(self):
        # a run of one 2 starting at part j1 contributes (-1)^(j1-1)
        result = boundary(StratumCell((1,), 3))
        assert result == {StratumCell((2, 1), 3): 1, StratumCell((1, 2), 3): -1}

    def test_boundary_terms_drop_dimension_by_one(self):
        cell = StratumCell((1, 2), 5)
        for target, coeff in boundary(cell).items():
            assert coeff != 0
            assert target.dimension == cell.dimension - 1

    @given(cells_strategy())
    @settings(max_examples=100, deadline=None)
    def test_d_squared_zero(self, cell):
        assert boundary_of_chain(boundary(cell)) == {}

    def test_literal_parity_fails_d_squared(self):
        cell = StratumCell((1, 1), 4)
        square = boundary_of_chain(
            boundary(cell, literal_parity=True), literal_parity=True
        )
        assert square == {StratumCell((2, 2), 4): -1}


class TestHomology:
    def test_point_stratum(self):
        # the unique degree-n cell of its own type compactifies to a circle
        assert pol_homology((3,), 3) == sphere_homology(1)

    def test_full_space(self):
        assert pol_homology((), 2) == HomologyResult.of({})

    def test_closed_disk_bundle_case(self):
        assert pol_homology((2,), 4) == sphere_homology(3)

    def test_chain_complex_validates(self):
        complex_ = pol_chain_complex((1, 2), 5)
        assert sum(len(g) for g in complex_.generators.values()) == len(
            closure_cells((1, 2), 5)
        )

    def test_weight_exceeds_ambient(self):
        with pytest.raises(StratumError):
            closure_cells((3, 3), 4)


class TestClosurePoset:
    def test_covers_drop_dimension(self):
        poset = closure_poset((1, 2), 5)
        for a, b in poset.covers:
            assert poset.elements[a].dimension == poset.elements[b].dimension - 1

    def test_maximal_elements_are_type_cells(self):
        poset = closure_poset((1, 2), 3)
        assert {c.parts for c in poset.maximal_elements()} == {(1, 2), (2, 1)}


class TestComplement:
    def test_smallest_discriminant_complement(self):
        result = complement_cohomology((2,), 2)
        assert result == HomologyResult.of({0: (1, ())})

    def test_full_closure_rejected(self):
        # every degree-1 polynomial has a real root: the complement is empty
        with pytest.raises(StratumError):
            complement_cohomology((1,), 1)

    def test_elliptic_region_complement_is_contractible(self):
        assert complement_cohomology((), 2).is_zero

    def test_linking_a_curve_in_three_space(self):
        result = complement_cohomology((3,), 3)
        assert result == HomologyResult.of({1: (1, ())})

    def test_duality_degrees_in_range(self):
        result = complement_cohomology((2,), 6)
        assert all(0 <= q < 6 for q, _, _ in result.groups)


class TestStabilization:
    def test_report_shape(self):
        report = stabilization_report((2,), 2, 8)
        assert report.ambients == (2, 4, 6, 8)
        assert len(report.tables) == 4
        assert len(report.first_unstable) == 3

    def test_constant_table_for_the_discriminant(self):
        report = stabilization_report((2,), 2, 8)
        assert all(u is None for u in report.first_unstable)
        assert all(t == HomologyResult.of({0: (1, ())}) for t in report.tables)

    def test_unstable_degree_detected(self):
        report = stabilization_report((3,), 3, 7)
        assert report.first_unstable[0] == 1
        assert report.first_unstable[1] is None

    def test_csv_export(self):
        report = stabilization_report((2,), 2, 4)
        lines = report.to_csv().strip().splitlines()
        assert lines[0] == "n,degree,betti,torsion"
        assert len(lines) == 3

    def test_bad_ranges(self):
        with pytest.raises(StratumError):
            stabilization_report((2,), 3, 7)
        with pytest.raises(StratumError):
            stabilization_report((2,), 4, 2)

    def test_union_poset_uses_largest_ambient(self):
        report = stabilization_report((3,), 3, 7)
        assert all(c.ambient == 7 for c in report.union_poset.elements)
