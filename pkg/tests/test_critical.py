import pytest

from conftest import base_points, random_digraphs
from critgroup.abelian import is_surjective, order
from critgroup.critical import (
    HypothesisError,
    SizeError,
    critical_group,
    enumerate_arborescences,
    kappa,
    laplacian_matrix,
    phi_matrix,
    rho_bar,
    structural_maps,
    verify_divisibility,
    verify_main_theorem,
)
from critgroup.digraph import BasePoint, Multidigraph, line_graph, reachable_to
from critgroup.exactint import IntMatrix


class TestLaplacian:
    def test_two_cycle(self, g1):
        lap = laplacian_matrix(g1)
        assert lap.column(0) == [-1, 1] and lap.column(1) == [1, -1]

    def test_loop(self, g3):
        assert laplacian_matrix(g3) == IntMatrix.zeros(1, 1)

    def test_triangle(self, g2):
        assert laplacian_matrix(g2).to_rows() == [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]

    @pytest.mark.parametrize("g", list(random_digraphs(40, 5, 10, seed=2)))
    def test_column_sums_zero(self, g):
        lap = laplacian_matrix(g)
        assert all(sum(c) == 0 for c in lap.columns())
        for sink in range(g.n_vertices):
            phi = phi_matrix(g, sink)
            differing = [j for j in range(g.n_vertices) if phi.column(j) != lap.column(j)]
            assert differing in ([sink], []) # equal only if Delta(sink) is already the unit vector
            assert phi.column(sink) == [int(i == sink) for i in range(g.n_vertices)]


def test_phi_examples(g1, g2, g3):
    assert phi_matrix(g1, 1).columns() == [[-1, 1], [0, 1]]
    assert phi_matrix(g3, 0).to_rows() == [[1]]
    phi = phi_matrix(g2, 0)
    assert phi.column(0) == [1, 0, 0]
    assert phi.column(1) == [1, -2, 1]
    with pytest.raises(ValueError):
        phi_matrix(g1, 3)


def test_critical_group_examples(g1, g2, g3):
    assert order(critical_group(g1, 1)) == 1
    assert critical_group(g2, 0).invariant_factors == (3,)
    assert order(critical_group(g3, 0)) == 1


class TestKappa:
    def test_examples(self, g1, g2, g3):
        assert kappa(g1, 1) == 1
        assert [kappa(g2, r) for r in range(3)] == [3, 3, 3]
        assert kappa(g3, 0) == 1

    def test_enumeration_examples(self, g1, g2):
        assert enumerate_arborescences(g1, 1) == 1
        assert enumerate_arborescences(g2, 0) == 3
        dead_end = Multidigraph.from_edges(3, [(1, 0), (0, 1)])
        assert enumerate_arborescences(dead_end, 0) == 0
        assert kappa(dead_end, 0) == 0

    def test_parallel_edges_count_separately(self):
        g = Multidigraph.from_edges(2, [(1, 0), (1, 0), (0, 1)])
        assert enumerate_arborescences(g, 0) == 2 == kappa(g, 0)

    def test_size_guard(self):
        big = Multidigraph.from_edges(11, [(i, (i + 1) % 11) for i in range(11)])
        with pytest.raises(SizeError):
            enumerate_arborescences(big, 0)

    @pytest.mark.parametrize("g", list(random_digraphs(60, 5, 10, seed=8)))
    def test_sandpile_order(self, g):
        for sink in range(g.n_vertices):
            kp = kappa(g, sink)
            assert kp == enumerate_arborescences(g, sink)
            if reachable_to(g, sink) == set(range(g.n_vertices)) and kp > 0:
                assert order(critical_group(g, sink)) == kp


class TestStructuralMaps:
    def test_two_cycle(self, g1):
        maps = structural_maps(g1, BasePoint.from_edge(g1, 1))
        # rho0(u) = u - 2w, rho0(w) = -w in basis (u, w)
        assert maps.rho0.columns() == [[1, -2], [0, -1]]
        assert maps.rho0 @ maps.rho0 == IntMatrix.identity(2)
        assert maps.tau.columns() == [[0, 1], [0, 0]]

    def test_sigma_triangle(self, g2):
        maps = structural_maps(g2, BasePoint.from_edge(g2, 0))
        for col in maps.sigma.columns():
            assert sorted(col) == [0, 0, 0, 0, 1, 1]

    def test_inconsistent_base_point(self, g1):
        with pytest.raises(ValueError):
            structural_maps(g1, BasePoint(sink=1, base_edge=0, target=0))

    def test_loop_base_edge(self):
        g = Multidigraph.from_edges(2, [(0, 0), (0, 1), (1, 0), (1, 0)])
        bp = BasePoint.from_edge(g, 0)
        assert bp.sink == bp.target == 0
        report = verify_main_theorem(g, bp)
        assert report.hypotheses_ok and report.all_binding_passed

    @pytest.mark.parametrize("g", [g for g in random_digraphs(60, 5, 9, seed=4) if g.n_edges])
    def test_diagram_needs_no_hypotheses(self, g):
        lg = line_graph(g)
        for bp in base_points(g):
            maps = structural_maps(g, bp)
            assert maps.rho0 @ maps.rho0 == IntMatrix.identity(g.n_vertices)
            assert maps.rho == maps.rho0 @ maps.tau
            assert maps.tau @ phi_matrix(lg, bp.base_edge) == maps.psi @ maps.tau
            assert maps.rho0 @ maps.psi == phi_matrix(g, bp.sink)
            # The commuting diagram makes rho_bar well defined unconditionally.
            rho_bar(g, bp, maps)


class TestRhoBar:
    def test_triangle(self, g2):
        h = rho_bar(g2, BasePoint.from_edge(g2, 0))
        assert h.dst.invariant_factors == (3,)
        assert is_surjective(h)

    def test_two_cycle(self, g1):
        h = rho_bar(g1, BasePoint.from_edge(g1, 1))
        assert order(h.dst) == 1 and is_surjective(h)


class TestVerify:
    def test_triangle(self, g2):
        report = verify_main_theorem(g2, BasePoint.from_edge(g2, 0))
        assert report.hypotheses_ok and report.k == 2
        assert report.all_binding_passed
        assert report.kernel_equals_ktorsion and report.order_factorization_ok
        assert report.divisibility_ok
        assert report.line_group == "Z/2 x Z/6" and report.base_group == "Z/3"
        assert report.kernel_structure == report.ktorsion_structure == "Z/2 x Z/2"

    def test_hypothesis_failure_is_non_binding(self, g1):
        report = verify_main_theorem(g1, BasePoint.from_edge(g1, 1))
        assert not report.hypotheses_ok
        assert report.diagram_top_ok and report.diagram_bottom_ok
        surj = next(c for c in report.checks if c.name == "rho_bar_surjective")
        assert not surj.binding
        assert report.divisibility_ok is None

    def test_not_regular(self):
        g = Multidigraph.from_edges(3, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)])
        report = verify_main_theorem(g, BasePoint.from_edge(g, 0))
        assert report.k is None and report.kernel_equals_ktorsion is None
        assert report.all_binding_passed

    def test_infinite_groups(self, g2):
        g = g2.disjoint_union(g2)
        report = verify_main_theorem(g, BasePoint.from_edge(g, 0))
        assert report.infinite and report.order_factorization_ok is None
        assert report.kernel_equals_ktorsion
        assert report.all_binding_passed

    def test_report_serialization(self, g2):
        report = verify_main_theorem(g2, BasePoint.from_edge(g2, 0))
        text = report.to_text()
        assert "PASS  diagram_top" in text
        records = report.to_records().splitlines()
        assert len(records) == len(report.checks)
        assert '"line_group": "Z/2 x Z/6"' in records[0]


class TestDivisibility:
    def test_triangle(self, g2):
        assert verify_divisibility(g2, BasePoint.from_edge(g2, 0))

    def test_precondition(self, g1):
        with pytest.raises(HypothesisError):
            verify_divisibility(g1, BasePoint.from_edge(g1, 1))
