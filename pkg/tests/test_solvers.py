import itertools

import pytest

from ccwidth import (
    LinearOrdering,
    bandwidth_exact,
    build_graph,
    ccw_exact,
    check_inequality_chain,
    clique_number,
    clique_sum,
    complete_graph,
    cover_graph,
    cover_width,
    format_bandwidth_result,
    format_ccw_result,
    iter_clique_partitions,
    ordering_width,
    path_graph,
    star_graph,
    star_number,
    validate_cover,
)
from conftest import (
    all_labeled_graphs,
    brute_bandwidth,
    brute_ccw,
    random_graph_corpus,
)


class TestBandwidthExact:
    def test_paths_are_width_one_with_identity_witness(self):
        for n in range(2, 8):
            r = bandwidth_exact(path_graph(n))
            assert r.value == 1
            assert r.witness == LinearOrdering.identity(n)

    def test_complete(self):
        for n in range(1, 7):
            assert bandwidth_exact(complete_graph(n)).value == n - 1

    def test_three_leaf_star(self):
        g = star_graph(3)
        assert brute_bandwidth(g) == 2  # oracle over all 24 orderings
        assert bandwidth_exact(g).value == 2

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            bandwidth_exact(build_graph(0, []))

    def test_limit(self):
        g = build_graph(13, [(i, i + 1) for i in range(12)])
        with pytest.raises(ValueError, match="limit"):
            bandwidth_exact(g)
        assert bandwidth_exact(g, limit=13).value == 1

    def test_matches_brute_force(self):
        for g in random_graph_corpus("bw-oracle", 150, 1, 6):
            r = bandwidth_exact(g)
            assert r.value == brute_bandwidth(g)
            assert ordering_width(g, r.witness) == r.value

    def test_witness_is_lex_smallest_optimum(self):
        for g in random_graph_corpus("bw-lex", 40, 1, 5):
            r = bandwidth_exact(g)
            optimal = [
                perm
                for perm in itertools.permutations(range(g.n))
                if ordering_width(g, perm) == r.value
            ]
            assert r.witness.order == min(optimal)

    def test_deterministic(self):
        for g in random_graph_corpus("bw-det", 30, 1, 6):
            assert bandwidth_exact(g) == bandwidth_exact(g)


class TestIterCliquePartitions:
    def test_path3(self):
        parts = list(iter_clique_partitions(path_graph(3)))
        assert parts == [[[0, 1], [2]], [[0], [1, 2]], [[0], [1], [2]]]

    def test_counts_match_independent_enumeration(self):
        from conftest import _all_clique_partitions

        for g in random_graph_corpus("parts", 40, 1, 6):
            ours = {
                tuple(tuple(p) for p in parts)
                for parts in iter_clique_partitions(g)
            }
            theirs = {
                tuple(tuple(sorted(p)) for p in sorted(parts, key=min))
                for parts in _all_clique_partitions(g)
            }
            assert ours == theirs


class TestCcwExact:
    def test_complete_is_zero_with_single_clique(self):
        for n in range(1, 7):
            r = ccw_exact(complete_graph(n))
            assert r.value == 0
            assert r.witness.cliques == (frozenset(range(n)),)

    def test_odd_paths_are_one(self):
        for t in (1, 2, 3):
            assert ccw_exact(path_graph(2 * t + 1)).value == 1

    def test_path_sums_are_two(self):
        for t in (1, 2):
            g = path_graph(2 * t + 1)
            s = clique_sum(g, g, {t: t})
            assert ccw_exact(s).value == 2

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            ccw_exact(build_graph(0, []))

    def test_limit(self):
        g = build_graph(10, [])
        with pytest.raises(ValueError, match="limit"):
            ccw_exact(g)
        assert ccw_exact(g, limit=10).value == 0

    def test_matches_brute_force(self):
        for g in random_graph_corpus("ccw-oracle", 120, 1, 5):
            r = ccw_exact(g)
            assert r.value == brute_ccw(g)
            assert cover_width(r.witness) == r.value

    def test_witness_validates_and_reproduces_value(self):
        for g in random_graph_corpus("ccw-wit", 60, 1, 6):
            r = ccw_exact(g)
            assert validate_cover(g, r.witness.cliques).ok
            assert cover_width(r.witness) == r.value
            quotient = cover_graph(r.witness)
            assert (
                ordering_width(quotient, LinearOrdering.identity(quotient.n))
                == r.value
            )

    def test_deterministic(self):
        for g in random_graph_corpus("ccw-det", 30, 1, 6):
            assert ccw_exact(g) == ccw_exact(g)


class TestInequalityCorpus:
    """ccw <= bw, ccw >= ceil(s/2)-1, and bw <= omega*ccw when ccw >= 1."""

    def _check(self, g):
        ccw = ccw_exact(g).value
        bw = bandwidth_exact(g).value
        assert ccw <= bw
        if g.edge_count:
            s = star_number(g)
            assert ccw >= -(-s // 2) - 1
        if ccw >= 1:
            assert bw <= clique_number(g) * ccw

    def test_exhaustive_up_to_four(self):
        for n in range(1, 5):
            for g in all_labeled_graphs(n):
                self._check(g)

    @pytest.mark.parametrize("n", [5, 6])
    def test_random_five_hundred(self, n):
        for g in random_graph_corpus(f"chain-{n}", 500, n, n):
            self._check(g)


class TestCheckInequalityChain:
    def test_four_leaf_star(self):
        report = check_inequality_chain(star_graph(4))
        assert report.ccw == 2  # exact oracle value
        assert report.star == 4
        assert report.bw == 2
        assert report.omega == 2
        assert report.all_pass
        assert report.bw_le_omega_ccw is True

    def test_complete_graph_product_not_applicable(self):
        report = check_inequality_chain(complete_graph(4))
        assert report.ccw == 0
        assert report.bw == 3
        assert report.omega == 4
        assert report.bw_le_omega_ccw is None
        assert report.all_pass

    def test_path_sum_graph(self):
        g = clique_sum(path_graph(3), path_graph(3), {1: 1})
        report = check_inequality_chain(g)
        assert report.ccw == 2
        assert report.star == 4
        assert report.star_lower_bound == 1
        assert report.all_pass

    def test_lines_format(self):
        lines = check_inequality_chain(path_graph(3)).lines()
        assert len(lines) == 4
        assert lines[0].startswith("n=3")


class TestResultFormats:
    def test_bandwidth_result(self):
        text = format_bandwidth_result(bandwidth_exact(path_graph(3)))
        assert text == "value 1\nordering 3\n0 1 2\n"

    def test_ccw_result(self):
        text = format_ccw_result(ccw_exact(complete_graph(3)))
        assert text == "value 0\ncover 1\n0 1 2\n"
