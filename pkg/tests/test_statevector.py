import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxkcut.ansatz.preps import prepare_subspace
from maxkcut.ansatz.separators import phase_separator_power2
from maxkcut.circuit import Circuit, h, mcph, unitary
from maxkcut.coloring import clr_less_than_k, trivial_relation
from maxkcut.exceptions import InvalidArgumentError, SizeLimitError
from maxkcut.graph import Graph, brute_force_max_kcut
from maxkcut.statevector import (
    apply,
    basis_state,
    cost_diagonal,
    dump,
    expectation,
    load_dump,
    run,
    sample,
    zero_state,
)

from test_circuit import random_circuit


def test_hadamard():
    assert np.allclose(run(Circuit(1, (h(0),))), [2**-0.5, 2**-0.5])


def test_open_control_phase():
    psi = np.full(4, 0.5, dtype=complex)
    out = apply(psi, mcph([0], 1, 0.3, "0"))
    assert np.allclose(out, 0.5 * np.array([1, np.exp(0.3j), 1, 1]))


def test_power2_leaves_different_colors():
    psi = basis_state(0b01, 2)
    assert np.allclose(run(phase_separator_power2(1, 1.3), psi), psi)


def test_index_out_of_range():
    with pytest.raises(InvalidArgumentError):
        apply(zero_state(2), h(2))


def test_size_cap():
    with pytest.raises(SizeLimitError, match="30 qubits"):
        zero_state(30)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_matches_dense_unitary(seed):
    rng = np.random.default_rng(seed)
    c = random_circuit(rng, 6, 15)
    psi = rng.normal(size=64) + 1j * rng.normal(size=64)
    psi /= np.linalg.norm(psi)
    assert np.abs(run(c, psi) - unitary(c) @ psi).max() < 1e-10


def test_norm_long_sequence():
    c = random_circuit(np.random.default_rng(5), 5, 10_000)
    assert abs(np.linalg.norm(run(c)) - 1) < 1e-10


class TestCostDiagonal:
    def test_single_edge_k2(self, single_edge):
        assert cost_diagonal(single_edge, trivial_relation(1)).tolist() == [0, 1, 1, 0]

    def test_merged_labels(self, single_edge):
        diag = cost_diagonal(single_edge, clr_less_than_k(3))
        assert diag[0b1011] == 0

    def test_triangle_max(self, triangle):
        assert cost_diagonal(triangle, clr_less_than_k(3)).max() == 3

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_max_is_optimum(self, five_cycle, k):
        diag = cost_diagonal(five_cycle, clr_less_than_k(k))
        assert diag.max() == brute_force_max_kcut(five_cycle, k)[0]


class TestExpectation:
    def test_uniform(self):
        assert expectation(np.full(4, 0.5), np.array([0, 1, 1, 0])) == pytest.approx(0.5)

    def test_basis_argmax(self, triangle):
        diag = cost_diagonal(triangle, clr_less_than_k(3))
        i = int(np.argmax(diag))
        assert expectation(basis_state(i, 6), diag) == 3

    def test_subspace_product_state(self, single_edge):
        phi = run(prepare_subspace(3))
        psi = np.kron(phi, phi)
        diag = cost_diagonal(single_edge, trivial_relation(2))
        assert expectation(psi, diag) == pytest.approx(2 / 3, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            expectation(np.ones(4) / 2, np.ones(8))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_within_bounds(self, seed):
        rng = np.random.default_rng(seed)
        g = Graph(3, ((0, 1, 1.5), (1, 2, 0.5), (0, 2, 2.0)))
        psi = rng.normal(size=512) + 1j * rng.normal(size=512)
        psi /= np.linalg.norm(psi)
        e = expectation(psi, cost_diagonal(g, clr_less_than_k(5)))
        assert 0 <= e <= g.total_weight + 1e-12


class TestSample:
    def test_basis_state(self):
        assert sample(basis_state(5, 3), 100, seed=1) == {"101": 100}

    def test_statistics(self):
        counts = sample(np.array([1, 1]) / np.sqrt(2), 100_000, seed=3)
        sigma = np.sqrt(100_000 * 0.25)
        assert abs(counts["0"] - 50_000) < 5 * sigma

    def test_deterministic(self):
        psi = run(prepare_subspace(5))
        assert sample(psi, 500, seed=9) == sample(psi, 500, seed=9)

    def test_bad_shots(self):
        with pytest.raises(InvalidArgumentError):
            sample(zero_state(1), 0)


def test_dump_round_trip(tmp_path):
    psi = run(prepare_subspace(7))
    dump(psi, tmp_path / "psi.bin")
    assert (tmp_path / "psi.bin").stat().st_size == 16 * 8
    assert np.array_equal(load_dump(tmp_path / "psi.bin"), psi)
