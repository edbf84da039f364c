import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxkcut.coloring import (
    ColorRelation,
    closure,
    clr_balanced,
    clr_less_than_k,
    decode,
    labels_of_indices,
    num_qubits_per_vertex,
    relation_for,
)
from maxkcut.exceptions import InvalidArgumentError, InvalidAssignmentError


@pytest.mark.parametrize("k, n_k", [(2, 1), (3, 2), (4, 2), (5, 3), (7, 3), (8, 3), (9, 4)])
def test_num_qubits(k, n_k):
    assert num_qubits_per_vertex(k) == n_k


class TestClosure:
    def test_single_pair(self):
        assert closure({(2, 3)}, 4) == ((0,), (1,), (2, 3))

    def test_empty(self):
        assert closure(set(), 4) == ((0,), (1,), (2,), (3,))

    def test_chain(self):
        assert closure({(4, 5), (5, 6), (6, 7)}, 8)[-1] == (4, 5, 6, 7)

    def test_out_of_domain(self):
        with pytest.raises(InvalidArgumentError):
            closure({(0, 4)}, 4)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=10))
    def test_idempotent(self, pairs):
        parts = closure(pairs, 8)
        induced = [(i, j) for c in parts for i in c for j in c]
        assert closure(induced, 8) == parts


class TestRelations:
    @pytest.mark.parametrize(
        "k, classes",
        [
            (3, ((0,), (1,), (2, 3))),
            (4, ((0,), (1,), (2,), (3,))),
            (6, ((0,), (1,), (2,), (3,), (4,), (5, 6, 7))),
        ],
    )
    def test_less_than(self, k, classes):
        assert clr_less_than_k(k).classes == classes

    @pytest.mark.parametrize(
        "k, classes",
        [
            (5, ((0, 1), (2,), (3,), (4, 5), (6, 7))),
            (6, ((0, 1), (2,), (3,), (4, 5), (6,), (7,))),
            (7, ((0,), (1,), (2,), (3,), (4,), (5,), (6, 7))),
        ],
    )
    def test_balanced(self, k, classes):
        assert clr_balanced(k).classes == classes

    @pytest.mark.parametrize("k", range(2, 17))
    def test_class_counts(self, k):
        for rel in (clr_less_than_k(k), clr_balanced(k)):
            assert len(rel.classes) == k
            assert sorted(x for c in rel.classes for x in c) == list(range(rel.num_labels))
        assert max(len(c) for c in clr_balanced(k).classes) <= 2

    def test_wrong_class_count(self):
        with pytest.raises(InvalidArgumentError):
            ColorRelation(3, ((0,), (1,), (2,), (3,)))

    def test_serialization(self):
        rel = clr_balanced(5)
        assert ColorRelation.from_dict(rel.to_dict()) == rel
        assert rel.to_dict() == {"k": 5, "classes": [[0, 1], [2], [3], [4, 5], [6, 7]]}

    def test_relation_for_trivial_requires_power_of_two(self):
        with pytest.raises(InvalidArgumentError):
            relation_for(3, "trivial")


class TestDecode:
    @pytest.mark.parametrize("bits, color", [("10", 2), ("11", 2), ("00", 0), ("01", 1)])
    def test_k3(self, bits, color):
        assert decode(bits, clr_less_than_k(3), 1) == (color,)

    def test_k4_identity(self):
        assert decode("01", clr_less_than_k(4), 1) == (1,)

    def test_multi_vertex_block_order(self):
        assert decode("011100", clr_less_than_k(5), 2) == (3, 4)

    def test_length_mismatch(self):
        with pytest.raises(InvalidAssignmentError):
            decode("101", clr_less_than_k(3), 1)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(3, 8), st.data())
    def test_constant_on_classes(self, k, data):
        rel = data.draw(st.sampled_from([clr_less_than_k(k), clr_balanced(k)]))
        n_k = rel.n_k
        cls = data.draw(st.sampled_from(rel.classes))
        a, b = data.draw(st.sampled_from(cls)), data.draw(st.sampled_from(cls))
        assert decode(format(a, f"0{n_k}b"), rel, 1) == decode(format(b, f"0{n_k}b"), rel, 1)

    def test_labels_of_indices_msb_first(self):
        labels = labels_of_indices(np.array([0b011100]), 3, 2)
        assert labels.tolist() == [[3, 4]]
