import pytest
from hypothesis import given, settings

import oracles
from conftest import a
from cyclicgraph.cyclic import (
    adjacent,
    adjacent_by_definition,
    build_cyclic_graph,
    classify,
    components_are_groups,
    dominance_equals_idempotents,
    isolated_characterization,
    isolated_vertices,
    regular_condition,
)
from cyclicgraph.errors import OutOfRange, SameVertex
from cyclicgraph.graph import connected_components, min_dominating_set
from cyclicgraph.green import is_completely_regular
from cyclicgraph.semigroup import (
    cyclic_group,
    direct_product,
    idempotents,
    is_band,
    left_zero_band,
    monogenic,
    pi_set,
    s_f_partition,
)
from strategies import semigroups


class TestAdjacency:
    def test_examples(self, m56):
        s = monogenic(3, 2)
        assert not adjacent(s, a(2), a(3))
        assert adjacent(m56, a(2), a(4))
        assert not adjacent(m56, a(3), a(7))

    def test_errors(self, m56):
        with pytest.raises(SameVertex):
            adjacent(m56, 1, 1)
        with pytest.raises(OutOfRange):
            adjacent(m56, 0, 10)

    @settings(max_examples=80, deadline=None)
    @given(semigroups)
    def test_fast_path_matches_definition(self, s):
        table = [list(r) for r in s.table]
        g = build_cyclic_graph(s)
        assert set(g.edges()) == oracles.cyclic_graph_edges(table)
        for x in range(min(s.n, 6)):
            for y in range(x + 1, min(s.n, 6)):
                assert adjacent_by_definition(s, x, y) == g.has_edge(x, y)

    @settings(max_examples=80, deadline=None)
    @given(semigroups)
    def test_x_adjacent_to_square(self, s):
        g = build_cyclic_graph(s)
        for x in range(s.n):
            x2 = s.mul(x, x)
            if x2 != x:
                assert g.has_edge(x, x2)


class TestGraphs:
    @pytest.mark.parametrize("n", [1, 2, 5, 6])
    def test_cyclic_group_is_complete(self, n):
        assert classify(cyclic_group(n)).is_complete

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_band_is_edgeless(self, n):
        assert classify(left_zero_band(n)).is_null

    def test_klein_star(self):
        k = direct_product(cyclic_group(2), cyclic_group(2))
        c = classify(k)
        assert c.is_star and c.is_tree and sorted(c.degrees) == [1, 1, 1, 3]
        assert c.degrees[0] == 3

    def test_components(self, m56, rees5):
        assert len(connected_components(build_cyclic_graph(m56))) == 1
        g = build_cyclic_graph(rees5)
        assert g.edges() == [(1, 4), (2, 4)]
        assert set(connected_components(g)) == {frozenset({1, 2, 4}), frozenset({0}), frozenset({3})}

    def test_completeness_examples(self):
        assert classify(monogenic(3, 5)).is_complete
        assert not classify(monogenic(3, 2)).is_complete

    def test_bipartite_product(self):
        s = direct_product(left_zero_band(2), cyclic_group(2))
        assert pi_set(s) <= {1, 2} and classify(s).is_bipartite

    def test_odd_cycle_reported(self):
        c = classify(cyclic_group(3))
        assert not c.is_bipartite and len(c.odd_cycle) == 3


class TestIsolated:
    def test_rees_examples(self, rees5):
        iso = isolated_vertices(build_cyclic_graph(rees5))
        assert 0 in iso and isolated_characterization(rees5, 0)
        assert 4 not in iso and not isolated_characterization(rees5, 4)

    def test_group_identity(self):
        z2 = cyclic_group(2)
        assert not isolated_characterization(z2, 0)
        assert isolated_vertices(build_cyclic_graph(z2)) == set()


class TestDominance:
    def test_examples(self, m56, rees5):
        assert len(min_dominating_set(build_cyclic_graph(m56))) == 1
        assert len(min_dominating_set(build_cyclic_graph(rees5))) == 3
        assert len(min_dominating_set(build_cyclic_graph(left_zero_band(4)))) == 4


@settings(max_examples=100, deadline=None)
@given(semigroups)
def test_section_three_properties(s):
    g = build_cyclic_graph(s)
    c = classify(s, g)
    pi2 = pi_set(s) <= {1, 2}
    assert {frozenset(b) for b in s_f_partition(s).values()} == set(connected_components(g))
    assert c.is_bipartite == c.is_acyclic == pi2
    assert c.is_null == is_band(s)
    assert c.is_tree == (len(idempotents(s)) == 1 and pi2)
    assert dominance_equals_idempotents(s, g)
    assert c.is_regular == regular_condition(s)
    assert is_completely_regular(s) == components_are_groups(s)
    assert isolated_vertices(g) == {x for x in range(s.n) if isolated_characterization(s, x)}
    if c.is_tree:
        assert c.is_acyclic
    if c.is_complete and s.n >= 3:
        assert not c.is_bipartite


def test_completeness_small_sweep():
    for m in range(1, 7):
        for r in range(1, 7):
            expected = m in (1, 2) or (m == 3 and r % 2 == 1)
            assert classify(monogenic(m, r)).is_complete == expected, (m, r)
