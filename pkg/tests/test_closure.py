import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from arcschemes.closure import RelationSet, closure_of_graph, coherent_closure
from arcschemes.graphs import (
    complete,
    cycle,
    edge_level_partition,
    elementary_caw,
    empty_graph,
    from_edges,
)
from arcschemes.schemes import (
    dihedral_scheme,
    is_association,
    is_fusion_of,
    rank2_scheme,
    schemes_isomorphic,
    verify,
)


class TestClosureExamples:
    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_complete_graph_gives_rank2(self, n):
        assert closure_of_graph(complete(n)) == rank2_scheme(n)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_empty_graph_gives_rank2(self, n):
        assert closure_of_graph(empty_graph(n)) == rank2_scheme(n)

    def test_cycle5_is_dihedral(self):
        cc = closure_of_graph(cycle(5))
        assert cc.rank == 3
        assert cc == dihedral_scheme(5)

    def test_path3_rank5_matrix(self):
        # hand refinement: leaf/center diagonals split, directed edge colors
        cc = closure_of_graph(oracles.path(3))
        assert cc.rank == 5
        assert not is_association(cc)
        expected = np.array([[0, 1, 2], [3, 4, 3], [2, 1, 0]])
        assert np.array_equal(cc.colors, expected)

    def test_single_vertex(self):
        assert closure_of_graph(complete(1)).rank == 1

    def test_c72(self):
        cc = closure_of_graph(elementary_caw(7, 2))
        assert cc.rank == 4 and is_association(cc)
        assert schemes_isomorphic(cc, dihedral_scheme(7)).kind == "iso"

    def test_c62(self):
        cc = closure_of_graph(elementary_caw(6, 2))
        assert cc.rank == 3 and is_association(cc)


class TestClosureProperties:
    def test_output_is_coherent_on_corpus(self, corpus):
        for g in corpus:
            if g.n <= 12:
                assert verify(closure_of_graph(g)).ok

    def test_edge_relation_is_union_of_colors(self, corpus):
        for g in corpus:
            cc = closure_of_graph(g)
            edge_colors = {int(cc.colors[u, v]) for u, v in g.edges()}
            edge_colors |= {int(cc.colors[v, u]) for u, v in g.edges()}
            count = sum(cc.sizes[c] for c in edge_colors)
            assert count == 2 * g.edge_count()

    def test_idempotent(self, corpus):
        for g in corpus:
            if g.n > 10:
                continue
            cc = closure_of_graph(g)
            classes = [
                {(u, v) for u in range(cc.n) for v in range(cc.n) if cc.colors[u, v] == c}
                for c in range(cc.rank)
            ]
            again = coherent_closure(RelationSet.from_relations(cc.n, classes))
            assert again.rank == cc.rank
            assert np.array_equal(again.colors, cc.colors)

    def test_monotone_in_generators(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(2, 7)
            rel1 = {(rng.randrange(n), rng.randrange(n)) for _ in range(n)}
            rel2 = {(rng.randrange(n), rng.randrange(n)) for _ in range(n)}
            base = coherent_closure(RelationSet.from_relations(n, [rel1]))
            bigger = coherent_closure(RelationSet.from_relations(n, [rel1, rel2]))
            assert bigger.rank >= base.rank

    @pytest.mark.parametrize("n", range(4, 17))
    def test_cycle_closure_equals_dihedral(self, n):
        verdict = schemes_isomorphic(
            closure_of_graph(cycle(n)), dihedral_scheme(n), point_limit=16
        )
        assert verdict.kind == "iso"

    def test_minimality_against_dihedral_orbits(self):
        for n in range(5, 15):
            for k in range(1, n):
                if 2 * k + 2 >= n:
                    continue
                cc = closure_of_graph(elementary_caw(n, k))
                assert is_fusion_of(cc, dihedral_scheme(n))

    def test_edge_levels_are_unions_of_colors(self, corpus):
        cases = [elementary_caw(n, k) for n in range(4, 15) for k in range(1, n) if 2 * k + 1 < n]
        cases += [g for g in corpus if g.n <= 10]
        for g in cases:
            cc = closure_of_graph(g)
            for pairs in edge_level_partition(g).values():
                level_colors = {int(cc.colors[u, v]) for u, v in pairs}
                assert sum(cc.sizes[c] for c in level_colors) == len(pairs)

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(2, 7).flatmap(
            lambda n: st.builds(
                lambda edges: from_edges(n, edges),
                st.lists(
                    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                    .filter(lambda e: e[0] < e[1]),
                    unique=True,
                    max_size=n * (n - 1) // 2,
                ),
            )
        )
    )
    def test_random_graph_closure_is_coherent(self, g):
        assert verify(closure_of_graph(g)).ok


class TestRelationSet:
    def test_asymmetric_generator(self):
        rel = {(0, 1), (1, 2)}
        cc = coherent_closure(RelationSet.from_relations(3, [rel]))
        assert verify(cc).ok
        gen_colors = {int(cc.colors[u, v]) for u, v in rel}
        assert sum(cc.sizes[c] for c in gen_colors) == len(rel)

    def test_out_of_range_pair(self):
        with pytest.raises(ValueError):
            RelationSet.from_relations(2, [{(0, 2)}])

    def test_needs_a_point(self):
        with pytest.raises(ValueError):
            RelationSet.from_relations(0, [])
