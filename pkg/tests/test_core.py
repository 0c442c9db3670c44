import json

import pytest
from hypothesis import given, strategies as st

from ncflips.core import (
    ConvexInstance,
    Edge,
    HasCrossing,
    HasCycle,
    Hole,
    InstanceMismatch,
    NotSpanning,
    Tree,
    WrongEdgeCount,
    crossing,
    delta,
    holes,
    hull_path,
    symmetric_difference,
    validate_tree,
)
from ncflips.families import flip_family, nc_family
from ncflips.oracle import enumerate_trees

from conftest import tree_pairs, trees
from figures import SIDE_TREE
from oracles import all_pairs, brute_trees, segments_cross


class TestEdge:
    def test_canonical(self):
        assert Edge.of(3, 1) == Edge(1, 3)
        with pytest.raises(ValueError):
            Edge.of(2, 2)

    def test_border_and_chord(self):
        assert Edge(0, 1).is_border(5)
        assert Edge(0, 4).is_border(5)
        assert Edge(1, 3).is_chord(5)
        assert Edge(0, 3).is_chord(5)

    def test_instance_requires_a_point(self):
        with pytest.raises(ValueError):
            ConvexInstance(0)


class TestCrossing:
    def test_quadrilateral_diagonals(self):
        assert crossing(4, Edge(0, 2), Edge(1, 3))

    def test_shared_endpoint(self):
        assert not crossing(4, Edge(0, 2), Edge(0, 1))

    def test_nc_gadget_pair_crosses(self):
        # order v1, v3, v4, v2: v1v4 = (0, 2) and v2v3 = (1, 3)
        assert crossing(4, Edge.of(0, 2), Edge.of(3, 1))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            crossing(4, Edge(0, 4), Edge(1, 2))

    @pytest.mark.parametrize("n", range(2, 13))
    def test_matches_geometry(self, n):
        pairs = all_pairs(n)
        for e in pairs:
            for f in pairs:
                assert crossing(n, Edge(*e), Edge(*f)) == segments_cross(n, e, f), (n, e, f)

    @given(st.integers(4, 30), st.data())
    def test_symmetric(self, n, data):
        pick = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
        e, f = Edge.of(*data.draw(pick)), Edge.of(*data.draw(pick))
        assert crossing(n, e, f) == crossing(n, f, e)


class TestValidateTree:
    def test_nc_gadget_tree(self):
        t = validate_tree(4, [(0, 3), (1, 2), (0, 2)])
        assert t.chords == (Edge(0, 2),)

    def test_crossing_diagonals(self):
        with pytest.raises(HasCrossing) as info:
            validate_tree(4, [(0, 2), (1, 3), (0, 1)])
        assert {info.value.e1, info.value.e2} == {Edge(0, 2), Edge(1, 3)}

    def test_triangle_path(self):
        assert len(validate_tree(3, [(0, 1), (1, 2)])) == 2

    def test_wrong_count(self):
        with pytest.raises(WrongEdgeCount):
            validate_tree(4, [(0, 1), (1, 2)])

    def test_cycle_reports_witnesses(self):
        with pytest.raises(HasCycle) as info:
            validate_tree(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
        assert sorted(info.value.cycle) == [0, 1, 2]
        assert info.value.component == [3, 4]
        assert isinstance(info.value, NotSpanning)

    def test_duplicates_collapse(self):
        with pytest.raises(WrongEdgeCount):
            validate_tree(3, [(0, 1), (1, 0)])

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            validate_tree(3, [(0, 1), (1, 3)])

    def test_degenerate_sizes(self):
        assert len(validate_tree(1, [])) == 0
        assert validate_tree(2, [(0, 1)]).edges == {Edge(0, 1)}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_accepts_exactly_brute_force_trees(self, n):
        from itertools import combinations
        from ncflips.core import TreeError

        accepted = set()
        for subset in combinations(all_pairs(n), n - 1):
            try:
                accepted.add(validate_tree(n, subset).edges)
            except TreeError:
                pass
        assert accepted == {frozenset(Edge(*e) for e in t) for t in brute_trees(n)}

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_enumerated_trees_validate(self, n):
        for t in enumerate_trees(n):
            assert validate_tree(n, t.edges) == t


class TestHoles:
    def test_side_figure(self):
        # holes (v1, v6), (v2, v3), (v4, v5)
        assert {h.pair(6) for h in holes(SIDE_TREE)} == {Edge(0, 5), Edge(1, 2), Edge(3, 4)}

    def test_hull_path_has_one(self):
        for n in range(3, 12):
            for m in range(n):
                assert holes(hull_path(n, m)) == [Hole(m)]

    def test_nc_gadget(self):
        t = validate_tree(4, [(0, 3), (1, 2), (0, 2)])
        assert holes(t) == [Hole(0), Hole(2)]

    def test_hole_high_wraps(self):
        assert Hole(4).high(5) == 0
        assert Hole(4).pair(5) == Edge(0, 4)

    @given(trees())
    def test_count_is_chords_plus_one(self, t):
        assert len(holes(t)) == len(t.chords) + 1


class TestSymmetricDifference:
    def test_nc_gadget(self):
        assert delta(*nc_family(1)) == 1

    def test_flip_gadget(self):
        assert delta(*flip_family(1)) == 3

    def test_identical(self):
        t = hull_path(6)
        assert delta(t, t) == 0

    def test_mismatch(self):
        with pytest.raises(InstanceMismatch):
            symmetric_difference(hull_path(4), hull_path(5))

    @given(tree_pairs())
    def test_symmetric_and_balanced(self, pair):
        t1, t2 = pair
        d = symmetric_difference(t1, t2)
        assert len(d.only_in_first) == len(d.only_in_second) == d.delta
        assert d.delta == delta(t2, t1)
        assert (d.delta == 0) == (t1 == t2)


class TestJson:
    def test_format(self):
        t = validate_tree(4, [(2, 1), (0, 3), (0, 2)])
        assert json.loads(t.dumps()) == {"n": 4, "edges": [[0, 2], [0, 3], [1, 2]]}

    @given(trees())
    def test_round_trip(self, t):
        assert Tree.loads(t.dumps()) == t

    @pytest.mark.parametrize("text", ['{"n": 4}', '{"n": "4", "edges": []}', '{"n": 3, "edges": [[0]]}', "[]"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            Tree.loads(text)

    def test_invalid_tree_rejected(self):
        with pytest.raises(HasCrossing):
            Tree.loads('{"n": 4, "edges": [[0, 2], [1, 3], [0, 1]]}')


class TestTreeHelpers:
    def test_path(self):
        t = hull_path(6)
        assert t.path(1, 4) == [1, 2, 3, 4]
        assert t.path_edges(2, 0) == [Edge(1, 2), Edge(0, 1)]

    def test_replace_is_unchecked_copy(self):
        t = hull_path(4)
        u = t.replace(Edge(0, 1), Edge(0, 3))
        assert Edge(0, 3) in u and Edge(0, 1) not in u
        assert Edge(0, 1) in t
