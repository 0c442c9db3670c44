import random

import pytest
from hypothesis import given, strategies as st

from ncflips.core import Edge, InstanceMismatch, hull_path, delta
from ncflips.families import (
    FLIP_GADGET,
    ROTATION_GADGET,
    flip_family,
    flip_family_sequence,
    nc_family,
    published_rotation_sequence,
    rotation_family,
    rotation_family_sequence,
)
from ncflips.flipmodel import (
    EdgeAlreadyPresent,
    EdgeNotPresent,
    FlipModel,
    FlipSequence,
    FlipStep,
    ModelViolation,
    ResultDisconnected,
    ResultHasCrossing,
    apply_step,
    invert_sequence,
    is_valid_step,
    step,
    verify_sequence,
)
from ncflips.oracle import enumerate_trees
from ncflips.sampling import random_flip
from ncflips.transform import transform_border_projection

from conftest import trees
from oracles import brute_neighbors

MODELS = list(FlipModel)


def _gadget_step(spec, i):
    index = {lab: j for j, lab in enumerate(spec.base_order)}
    (r1, r2), (a1, a2) = spec.moves[i]
    return step((index[r1], index[r2]), (index[a1], index[a2]))


class TestApplyStep:
    def test_first_flip_gadget_move(self):
        t1, _ = flip_family(1)
        s = _gadget_step(FLIP_GADGET, 0)  # v6v1 ~> v2v5
        out = apply_step(t1, s, FlipModel.FLIP)
        assert s.add in out and s.remove not in out

    def test_first_rotation_gadget_move(self):
        t1, _ = rotation_family(1)
        s = _gadget_step(ROTATION_GADGET, 0)  # v1v6 ~> v1v5 around v1
        assert s.remove.shares_endpoint(s.add)
        apply_step(t1, s, FlipModel.ROTATION)

    def test_same_edge(self):
        t = hull_path(5)
        with pytest.raises(EdgeAlreadyPresent):
            apply_step(t, step((0, 1), (0, 1)))

    def test_missing_edge(self):
        with pytest.raises(EdgeNotPresent):
            apply_step(hull_path(5), step((0, 2), (0, 4)))

    def test_disconnecting(self):
        # removing 1-2 and adding 2-4 leaves {0, 1} cut off
        with pytest.raises(ResultDisconnected):
            apply_step(hull_path(5), step((1, 2), (2, 4)))

    def test_crossing_result(self):
        t = hull_path(5).replace(Edge(3, 4), Edge(1, 4))
        with pytest.raises(ResultHasCrossing):
            apply_step(t, step((0, 1), (0, 2)))

    def test_flip_may_cross_removed_edge(self):
        t1, t2 = nc_family(1)
        (e,) = t1.edges - t2.edges
        (f,) = t2.edges - t1.edges
        assert apply_step(t1, FlipStep(e, f), FlipModel.FLIP) == t2
        with pytest.raises(ModelViolation):
            apply_step(t1, FlipStep(e, f), FlipModel.NCFLIP)

    def test_rotation_needs_shared_endpoint(self):
        t = hull_path(5)
        s = step((1, 2), (0, 2))
        assert is_valid_step(t, s, FlipModel.ROTATION)
        s = step((2, 3), (1, 4))
        assert is_valid_step(t, s, FlipModel.FLIP)
        with pytest.raises(ModelViolation):
            apply_step(t, s, FlipModel.ROTATION)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("model", MODELS)
    def test_matches_brute_force(self, n, model):
        for t in enumerate_trees(n):
            got = set()
            for e in t.sorted_edges:
                for a in range(n):
                    for b in range(a + 1, n):
                        s = FlipStep(e, Edge(a, b))
                        if Edge(a, b) not in t.edges and is_valid_step(t, s, model):
                            got.add(apply_step(t, s, model).edges)
            want = brute_neighbors(n, frozenset(tuple(e) for e in t.edges), model.value)
            assert got == {frozenset(Edge(*e) for e in w) for w in want}

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_model_refinement(self, n):
        for t in enumerate_trees(n):
            for e in t.sorted_edges:
                for a in range(n):
                    for b in range(a + 1, n):
                        s = FlipStep(e, Edge(a, b))
                        if is_valid_step(t, s, FlipModel.ROTATION) or is_valid_step(t, s, FlipModel.NCFLIP):
                            assert is_valid_step(t, s, FlipModel.FLIP)

    @given(trees(), st.integers(0, 2**32 - 1))
    def test_flip_then_inverse(self, t, seed):
        rng = random.Random(seed)
        s = random_flip(t, rng)
        if s is not None:
            assert apply_step(apply_step(t, s), s.inverse()) == t


class TestVerify:
    def test_flip_gadget_sequence(self):
        _, t2 = flip_family(1)
        assert verify_sequence(flip_family_sequence(1), t2)

    def test_rotation_gadget_sequence(self):
        _, t2 = rotation_family(1)
        seq = rotation_family_sequence(1)
        assert len(seq) == 7
        assert verify_sequence(seq, t2)

    def test_published_rotation_list_fails(self):
        # as listed, the fourth rotation adds v5v7 while v3v8 is still present
        _, t2 = rotation_family(1)
        check = verify_sequence(published_rotation_sequence(1), t2)
        assert not check
        assert check.failed_index == 3
        assert "ResultHasCrossing" in check.reason

    def test_empty(self):
        t = hull_path(5)
        assert verify_sequence(FlipSequence(FlipModel.FLIP, t, ()), t)

    def test_wrong_target(self):
        t = hull_path(5)
        check = verify_sequence(FlipSequence(FlipModel.FLIP, t, ()), hull_path(5, 2))
        assert not check and check.failed_index == 0
        assert check.tree_at_failure == t

    def test_reports_first_failure(self):
        t = hull_path(5)
        seq = FlipSequence(FlipModel.FLIP, t, (step((0, 1), (0, 4)), step((0, 1), (1, 2))))
        check = verify_sequence(seq)
        assert check.failed_index == 1
        assert "EdgeNotPresent" in check.reason

    def test_instance_mismatch(self):
        with pytest.raises(InstanceMismatch):
            verify_sequence(FlipSequence(FlipModel.FLIP, hull_path(4), ()), hull_path(5))

    @given(trees(), st.integers(0, 2**32 - 1))
    def test_length_at_least_delta(self, t, seed):
        rng = random.Random(seed)
        steps, cur = [], t
        for _ in range(6):
            s = random_flip(cur, rng)
            if s is not None:
                steps.append(s)
                cur = apply_step(cur, s)
        seq = FlipSequence(FlipModel.FLIP, t, tuple(steps))
        assert verify_sequence(seq, cur)
        assert len(seq) >= delta(t, cur)


class TestInvert:
    def test_single_step(self):
        t = hull_path(5)
        s = step((2, 3), (1, 4))
        inv = invert_sequence(FlipSequence(FlipModel.FLIP, t, (s,)))
        assert inv.start == apply_step(t, s)
        assert inv.steps == (FlipStep(Edge(1, 4), Edge(2, 3)),)

    def test_flip_gadget_sequence(self):
        t1, t2 = flip_family(1)
        inv = invert_sequence(flip_family_sequence(1))
        assert inv.start == t2 and len(inv) == 5
        assert verify_sequence(inv, t1)

    def test_rotation_sequence(self):
        t1, _ = rotation_family(2)
        assert verify_sequence(invert_sequence(rotation_family_sequence(2)), t1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_non_crossing_sequences_invert(self, k):
        # the non-crossing relation is symmetric, so inversion stays valid
        t1, t2 = nc_family(k)
        seq = transform_border_projection(t1, t2)
        inv = invert_sequence(seq)
        assert inv.model is FlipModel.NCFLIP
        assert verify_sequence(inv, t1)


class TestSequenceJson:
    def test_round_trip(self):
        seq = flip_family_sequence(2)
        assert FlipSequence.loads(seq.dumps()) == seq

    def test_format(self):
        seq = FlipSequence(FlipModel.ROTATION, hull_path(3), (step((1, 2), (0, 2)),))
        assert seq.to_json() == {
            "model": "rotation",
            "start": {"n": 3, "edges": [[0, 1], [1, 2]]},
            "steps": [{"remove": [1, 2], "add": [0, 2]}],
        }

    def test_missing_keys(self):
        with pytest.raises(ValueError):
            FlipSequence.loads('{"model": "flip"}')


def test_random_flip_is_valid():
    rng = random.Random(7)
    for n in range(3, 20):
        t = hull_path(n)
        for _ in range(50):
            s = random_flip(t, rng)
            if s is not None:
                t = apply_step(t, s)
