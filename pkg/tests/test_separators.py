import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxkcut.ansatz.separators import (
    phase_separator,
    phase_separator_2l_plus1,
    phase_separator_k,
    phase_separator_oracle,
    phase_separator_power2,
    supported_separators,
)
from maxkcut.circuit import census, cx_equivalent_cost, unitary
from maxkcut.coloring import clr_balanced, clr_less_than_k, relation_for, trivial_relation
from maxkcut.exceptions import UnsupportedError

ALL = supported_separators(range(2, 10))


def same_color_states(rel):
    n = rel.n_k
    return sorted(format(i, f"0{n}b") + format(j, f"0{n}b") for i, j in rel.pairs())


class TestOracle:
    def test_k2_pi(self):
        assert np.allclose(phase_separator_oracle(trivial_relation(1), np.pi), [-1, 1, 1, -1])

    def test_k3_support(self):
        phases = phase_separator_oracle(clr_less_than_k(3), 0.4)
        hit = {format(i, "04b") for i in np.flatnonzero(~np.isclose(phases, 1))}
        assert hit == {"0000", "0101", "1010", "1111", "1011", "1110"}

    @pytest.mark.parametrize("k, variant", ALL)
    def test_zero_angle(self, k, variant):
        assert np.all(phase_separator_oracle(relation_for(k, variant), 0.0) == 1)


@pytest.mark.parametrize("k, variant", ALL)
@settings(max_examples=10, deadline=None)
@given(t=st.floats(-10, 10))
def test_matches_oracle(k, variant, t):
    u = unitary(phase_separator(k, variant, t))
    target = phase_separator_oracle(relation_for(k, variant), t)
    assert np.abs(np.diag(u) - target).max() < 1e-9
    assert np.abs(u - np.diag(np.diag(u))).max() < 1e-10


class TestPowerOfTwo:
    def test_n1_gate_list(self):
        names = [(g.name, len(g.controls)) for g in phase_separator_power2(1, 0.3).gates]
        assert names == [("X", 1), ("X", 0), ("Ph", 0), ("X", 0), ("X", 1)]

    @pytest.mark.parametrize(
        "n_k, expected",
        [(1, {"CX": 2, "Ph": 1}), (2, {"CX": 4, "CPh": 1}), (3, {"CX": 6, "C2Ph": 1}),
         (4, {"CX": 8, "C3Ph": 1})],
    )
    def test_census(self, n_k, expected):
        assert census(phase_separator_power2(n_k, 0.3)) == expected

    def test_zero_angle_identity(self):
        assert np.allclose(unitary(phase_separator_power2(3, 0.0)), np.eye(64))


class TestGoldenCensus:
    @pytest.mark.parametrize(
        "k, variant, expected",
        [
            (3, "less_than", {"CPh": 1, "C2Ph": 1, "CX": 2}),
            (5, "less_than", {"CPh": 1, "C3Ph": 1, "CX": 4}),
            (6, "balanced", {"C2Ph": 1, "C3Ph": 1, "CX": 8}),
        ],
    )
    def test_reproduced_rows(self, k, variant, expected):
        assert census(phase_separator_k(k, variant, 0.5)) == expected

    @pytest.mark.parametrize(
        "k, variant, expected",
        [
            (6, "less_than", {"C2Ph": 1, "C3Ph": 1, "CX": 8}),
            (7, "less_than", {"C2Ph": 1, "C3Ph": 1, "C2X": 2, "CX": 6}),
        ],
    )
    def test_golden_rows(self, k, variant, expected):
        # Not attainable by any exact circuit of this gate set: the C2Ph and
        # C3Ph in these rows can mark at most 12 basis states while the
        # relations need 14 (k=6) and 10 (k=7). See the decisions ledger.
        assert census(phase_separator_k(k, variant, 0.5)) == expected

    @pytest.mark.parametrize(
        "k, variant, expected",
        [
            (5, "balanced", {"C2Ph": 1, "C3Ph": 1, "C4Ph": 1, "CX": 10}),
            (6, "less_than", {"C2Ph": 1, "C3Ph": 1, "C4Ph": 1, "C2X": 2, "CX": 6}),
            (7, "less_than", {"C2Ph": 1, "C4Ph": 1, "CX": 6}),
        ],
    )
    def test_built_census(self, k, variant, expected):
        assert census(phase_separator_k(k, variant, 0.5)) == expected

    @pytest.mark.parametrize(
        "k, variant, cx",
        [(3, "less_than", 12), (5, "less_than", 26), (6, "less_than", 90),
         (7, "less_than", 58), (5, "balanced", 82), (6, "balanced", 36)],
    )
    def test_cx_cost_per_edge(self, k, variant, cx):
        assert cx_equivalent_cost(phase_separator_k(k, variant, 0.5)) == cx


class TestTwoLPlusOne:
    @pytest.mark.parametrize("l, k", [(1, 3), (2, 5)])
    def test_matches_named_circuits(self, l, k):
        assert phase_separator_2l_plus1(l, 0.7) == phase_separator_k(k, "less_than", 0.7)

    def test_l3_oracle(self):
        u = unitary(phase_separator_2l_plus1(3, 1.1))
        assert np.allclose(np.diag(u), phase_separator_oracle(clr_less_than_k(9), 1.1))


def test_k3_and_k7_relations_coincide():
    assert clr_less_than_k(3) == clr_balanced(3)
    assert clr_less_than_k(7) == clr_balanced(7)


@pytest.mark.parametrize("k, variant", [(9, "balanced"), (11, "less_than"), (6, "bogus")])
def test_unsupported(k, variant):
    with pytest.raises(Exception) as err:
        phase_separator(k, variant, 0.1)
    assert isinstance(err.value, (UnsupportedError, ValueError))


def test_edge_order_irrelevant():
    from maxkcut.graph import generate_erdos_renyi
    from maxkcut.qaoa import AnsatzConfig, build_circuit
    from maxkcut.circuit import Circuit

    g = generate_erdos_renyi(3, 1.0, 0)
    c = build_circuit(AnsatzConfig(g, 3, "full_lt", "x"), [0.4], [0.0])
    n_prep = 6
    body = c.gates[n_prep:-6]
    per_edge = len(body) // 3
    blocks = [body[i * per_edge:(i + 1) * per_edge] for i in range(3)]
    shuffled = Circuit(6, tuple(g for b in (blocks[2], blocks[0], blocks[1]) for g in b))
    assert np.allclose(unitary(Circuit(6, tuple(body))), unitary(shuffled))
