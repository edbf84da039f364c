import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from maxkcut.ansatz.mixers import (
    MixerSpec,
    box_product,
    generated_group,
    grover_block,
    lx_hamiltonian,
    lx_term_strings,
    mixer_grover,
    mixer_lx,
    mixer_x,
    pauli_product,
)
from maxkcut.ansatz.preps import prepare_plus, prepare_subspace
from maxkcut.ansatz.separators import phase_separator_oracle, phase_separator_power2
from maxkcut.ansatz.validation import validate_mixer
from maxkcut.circuit import census, cx_equivalent_cost, pauli_matrix, unitary
from maxkcut.coloring import trivial_relation
from maxkcut.exceptions import IncompatibleConfigError, InvalidArgumentError, UnsupportedError
from maxkcut.statevector import run

SUB_K = (3, 5, 6, 7)


class TestPreps:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_plus(self, n):
        psi = run(prepare_plus(n)) if n else np.ones(1)
        assert np.allclose(psi, 2 ** (-n / 2))

    @pytest.mark.parametrize("k", SUB_K)
    def test_subspace_amplitudes(self, k):
        psi = run(prepare_subspace(k))
        assert np.abs(psi[:k] - 1 / np.sqrt(k)).max() < 1e-10
        assert np.abs(psi[k:]).max(initial=0) < 1e-10

    def test_k3_gate_angles(self):
        gates = prepare_subspace(3).gates
        assert gates[0].name == "Ry" and gates[0].param == pytest.approx(2 * np.arccos(3**-0.5))
        assert gates[1].name == "RXY" and gates[1].param == pytest.approx(np.pi / 2)

    def test_k3_phase_before_correction(self):
        # without the trailing phase gate label 1 carries -i
        psi = run(prepare_subspace(3).gates and type(prepare_subspace(3))(
            2, prepare_subspace(3).gates[:2]))
        assert np.allclose(psi[:3], np.array([1, -1j, 1]) / np.sqrt(3))

    def test_k5_open_controls(self):
        ch = [g for g in prepare_subspace(5).gates if g.name == "H"]
        assert len(ch) == 2 and all(g.pattern == "0" for g in ch)

    def test_k7_angles(self):
        params = sorted(round(g.param, 12) for g in prepare_subspace(7).gates
                        if g.name in ("Ry", "RXY"))
        expected = sorted(round(x, 12) for x in (2 * np.arcsin(7**-0.5), np.pi / 2, np.pi / 2,
                                                  2 * np.arccos(3**-0.5)))
        assert params == expected

    def test_unsupported(self):
        with pytest.raises(UnsupportedError):
            prepare_subspace(9)


class TestPauliAlgebra:
    @pytest.mark.parametrize(
        "a, b, expected",
        [("X", "Z", (-1j, "Y")), ("Z", "X", (1j, "Y")), ("XZ", "ZX", (1, "YY")), ("I", "Y", (1, "Y"))],
    )
    def test_product(self, a, b, expected):
        assert pauli_product((1, a), (1, b)) == expected

    @pytest.mark.parametrize("a, b", [("X", "Z"), ("XY", "ZZ"), ("YXZ", "ZZX")])
    def test_product_matches_matrices(self, a, b):
        phase, s = pauli_product((1, a), (1, b))
        assert np.allclose(pauli_matrix(a) @ pauli_matrix(b), phase * pauli_matrix(s))

    def test_group(self):
        assert sorted(s for _, s in generated_group(["+IZI", "+IIZ"])) == ["III", "IIZ", "IZI", "IZZ"]

    def test_identity_generator(self):
        assert lx_term_strings("IIX", ["+III"]) == [(1.0, "IIX")]

    def test_negative_generator(self):
        assert sorted(lx_term_strings("IX", ["-ZI"])) == [(-0.5, "ZX"), (0.5, "IX")]

    def test_non_hermitian_rejected(self):
        with pytest.raises(InvalidArgumentError):
            lx_term_strings("XI", ["+ZI"])


class TestMixers:
    def test_x_identity(self):
        assert np.allclose(unitary(mixer_x(2, 0.0)), np.eye(4))

    def test_x_half_pi(self):
        u = unitary(mixer_x(1, np.pi / 2))
        assert np.allclose(u, -1j * pauli_matrix("X"))

    def test_x_census(self):
        assert census(mixer_x(3, 0.2)) == {"Rx": 3}

    @pytest.mark.parametrize("k, cost", [(3, 4), (5, 12), (6, 4), (7, 6)])
    def test_lx_cost(self, k, cost):
        assert cx_equivalent_cost(mixer_lx(k, 0.3)) == cost

    @pytest.mark.parametrize("k", SUB_K)
    def test_lx_terms_exact(self, k):
        # product of per-term exponentials; each term is exact
        from maxkcut.ansatz.mixers import LX_TERMS

        n = len(LX_TERMS[k][0][0])
        beta = 0.83
        expected = np.eye(2**n, dtype=complex)
        for xs, gens in LX_TERMS[k]:
            h = sum(c * pauli_matrix(s) for c, s in lx_term_strings(xs, gens))
            expected = expm(-1j * beta * h) @ expected
        assert np.allclose(unitary(mixer_lx(k, beta)), expected)

    @pytest.mark.parametrize("k", SUB_K)
    def test_lx_hamiltonian_preserves(self, k):
        h = lx_hamiltonian(k)
        assert np.abs(h[k:, :k]).max() < 1e-12

    @pytest.mark.parametrize("k", SUB_K)
    @pytest.mark.parametrize("build", ["lx", "grover"])
    def test_valid(self, k, build):
        if build == "lx":
            rep = validate_mixer(lambda b: mixer_lx(k, b), range(k))
        else:
            rep = validate_mixer(lambda b: grover_block(prepare_subspace(k), b), range(k))
        assert rep.preserves and rep.connected

    def test_lx_k7_pairs(self):
        rep = validate_mixer(lambda b: mixer_lx(7, b), range(7))
        pairs = {(format(a, "03b"), format(b, "03b")) for a, b in rep.generator_pairs}
        assert pairs == {("000", "001"), ("010", "011"), ("000", "010"), ("100", "110"),
                         ("000", "100"), ("001", "101")}

    def test_lx_k3_pairs(self):
        rep = validate_mixer(lambda b: mixer_lx(3, b), range(3))
        assert set(rep.generator_pairs) == {(0, 1), (0, 2)}

    def test_x_leaves_subspace(self):
        rep = validate_mixer(lambda b: mixer_x(2, b), range(3))
        assert not rep.preserves

    def test_grover_zero_angle(self):
        assert np.allclose(unitary(mixer_grover(prepare_subspace(5), 0.0)), np.eye(8))

    @pytest.mark.parametrize("k", SUB_K + (4,))
    @pytest.mark.parametrize("beta", [0.4, 2.9])
    def test_grover_spectrum(self, k, beta):
        u = unitary(grover_block(prepare_subspace(k), beta))
        f = run(prepare_subspace(k))
        assert np.allclose(u @ f, np.exp(-1j * beta) * f)
        eig = np.linalg.eigvals(u)
        assert np.sum(np.isclose(eig, np.exp(-1j * beta))) == 1
        assert np.sum(np.isclose(eig, 1)) == len(eig) - 1

    def test_grover_global_eigenvector(self):
        prep = prepare_subspace(3)
        u = unitary(mixer_grover(prep, 1.2, "global", 2))
        f = np.kron(run(prep), run(prep))
        assert np.allclose(u @ f, np.exp(-1.2j) * f)

    @pytest.mark.parametrize("num_vertices", [1, 2, 3])
    def test_grover_box_gate_count(self, num_vertices):
        c = mixer_grover(prepare_subspace(5), 0.3, "per_vertex", num_vertices)
        assert census(c)["C2Ph"] == num_vertices

    def test_grover_box_is_tensor_product(self):
        b = unitary(grover_block(prepare_subspace(3), 0.7))
        u = unitary(mixer_grover(prepare_subspace(3), 0.7, "per_vertex", 2))
        assert np.allclose(u, np.kron(b, b))

    def test_bad_scope(self):
        with pytest.raises(InvalidArgumentError):
            mixer_grover(prepare_subspace(3), 0.1, "sideways")


class TestMixerSpec:
    def test_lx_needs_subspace(self):
        with pytest.raises(IncompatibleConfigError):
            MixerSpec("lx", 3, "full")

    def test_x_needs_full(self):
        with pytest.raises(IncompatibleConfigError):
            MixerSpec("x", 3, "subspace")

    def test_dash_name(self):
        assert MixerSpec("grover-box", 3, "subspace").kind == "grover_box"


class TestBoxProduct:
    def test_zero(self):
        assert np.allclose(box_product(np.zeros((2, 2)), np.zeros((2, 2))), 0)

    def test_xx_eigenvalues(self):
        x = pauli_matrix("X")
        assert np.allclose(np.sort(np.linalg.eigvalsh(box_product(x, x))), [-2, 0, 0, 2])

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.floats(-3, 3))
    def test_exponential_factorizes(self, seed, beta):
        rng = np.random.default_rng(seed)
        a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        g = a + a.conj().T
        lhs = expm(-1j * beta * box_product(g, g))
        rhs = np.kron(expm(-1j * beta * g), expm(-1j * beta * g))
        assert np.allclose(lhs, rhs)

    def test_dimension_error(self):
        with pytest.raises(InvalidArgumentError):
            box_product(np.zeros((2, 3)), np.eye(2))


@pytest.mark.parametrize("k", SUB_K)
def test_restriction_identity(k):
    n_k = (k - 1).bit_length()
    t = 0.77
    diag = np.diag(unitary(phase_separator_power2(n_k, t)))
    labels = np.arange(k)
    idx = (labels[:, None] * 2**n_k + labels[None, :]).reshape(-1)
    oracle = phase_separator_oracle(trivial_relation(n_k), t).reshape(2**n_k, 2**n_k)[:k, :k]
    expected = np.where(labels[:, None] == labels[None, :], np.exp(1j * t), 1).reshape(-1)
    assert np.abs(diag[idx] - expected).max() < 1e-9
    assert np.allclose(oracle.reshape(-1), expected)
