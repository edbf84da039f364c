"""Mixer circuits: X, LX (stabilizer-projected X strings) and Grover.

Mixers are written as ``exp(-i beta H_M)``. Per-vertex circuits act on one
color register of ``n_k`` qubits; :func:`per_vertex` tiles such a block over
all vertices, which realizes the box product of the per-vertex Hamiltonians.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..circuit import Circuit, Gate, mcph, pauli_rot, rx, x
from ..coloring import num_qubits_per_vertex
from ..exceptions import IncompatibleConfigError, InvalidArgumentError, UnsupportedError
from .preps import prepare_subspace

# Terms X<S_1, ...> per k; character 0 of each string is the first qubit of
# the color register.
LX_TERMS: dict[int, list[tuple[str, tuple[str, ...]]]] = {
    3: [("IX", ("+ZI",)), ("XI", ("+IZ",))],
    5: [("XII", ("+IZI", "+IIZ")), ("IXI", ("+ZII",)), ("IIX", ("+ZII",))],
    6: [("XII", ("+IZI",)), ("IXI", ("+ZII",)), ("IIX", ("+III",))],
    7: [("XII", ("+IZI",)), ("IXI", ("+IIZ",)), ("IIX", ("+ZII",))],
}

# single-qubit products: (a, b) -> (phase, a*b)
_MUL = {
    ("I", "I"): (1, "I"), ("I", "X"): (1, "X"), ("I", "Y"): (1, "Y"), ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"), ("X", "X"): (1, "I"), ("X", "Y"): (1j, "Z"), ("X", "Z"): (-1j, "Y"),
    ("Y", "I"): (1, "Y"), ("Y", "X"): (-1j, "Z"), ("Y", "Y"): (1, "I"), ("Y", "Z"): (1j, "X"),
    ("Z", "I"): (1, "Z"), ("Z", "X"): (1j, "Y"), ("Z", "Y"): (-1j, "X"), ("Z", "Z"): (1, "I"),
}


def parse_pauli(text: str) -> tuple[complex, str]:
    """``"+IZI"`` -> ``(1, "IZI")``; a leading ``-`` gives phase -1."""
    text = text.strip()
    phase: complex = 1
    if text[:1] in "+-":
        phase = -1 if text[0] == "-" else 1
        text = text[1:]
    text = text.upper()
    if not text or set(text) - set("IXYZ"):
        raise InvalidArgumentError(f"not a Pauli string: {text!r}")
    return phase, text


def pauli_product(a: tuple[complex, str], b: tuple[complex, str]) -> tuple[complex, str]:
    (pa, sa), (pb, sb) = a, b
    if len(sa) != len(sb):
        raise InvalidArgumentError(f"Pauli strings {sa!r} and {sb!r} differ in length")
    phase = pa * pb
    out = []
    for ca, cb in zip(sa, sb):
        f, c = _MUL[(ca, cb)]
        phase *= f
        out.append(c)
    return phase, "".join(out)


def generated_group(generators: Sequence[str]) -> list[tuple[complex, str]]:
    """Distinct elements of the group generated by commuting Pauli strings."""
    gens = [parse_pauli(g) for g in generators]
    if not gens:
        raise InvalidArgumentError("need at least one generator")
    n = len(gens[0][1])
    seen: dict[str, complex] = {}
    for bits in itertools.product((0, 1), repeat=len(gens)):
        el: tuple[complex, str] = (1, "I" * n)
        for b, g in zip(bits, gens):
            if b:
                el = pauli_product(el, g)
        if el[1] in seen and not np.isclose(seen[el[1]], el[0]):
            raise InvalidArgumentError(f"generators {generators} contain -I")
        seen.setdefault(el[1], el[0])
    return [(p, s) for s, p in seen.items()]


def lx_term_strings(xstring: str, generators: Sequence[str]) -> list[tuple[float, str]]:
    """Expand ``X<S_1, ...>`` into ``[(coefficient, pauli), ...]``.

    The projector normalisation is the inverse group size, so identity
    generators contribute nothing.
    """
    _, xs = parse_pauli(xstring)
    group = generated_group(generators)
    out = []
    for el in group:
        phase, s = pauli_product((1, xs), el)
        if abs(phase.imag) > 1e-12:
            raise InvalidArgumentError(f"{xstring} * {el[1]} is not Hermitian")
        out.append((float(phase.real) / len(group), s))
    return out


def lx_hamiltonian(k: int) -> np.ndarray:
    """Dense per-vertex LX Hamiltonian (sum of the terms)."""
    from ..circuit import pauli_matrix

    n_k = num_qubits_per_vertex(k)
    hmat = np.zeros((2**n_k, 2**n_k), dtype=complex)
    for xs, gens in _lx_terms(k):
        for coef, s in lx_term_strings(xs, gens):
            hmat += coef * pauli_matrix(s)
    return hmat


def _lx_terms(k: int):
    if k not in LX_TERMS:
        raise UnsupportedError(f"no LX mixer for k={k}; supported: {sorted(LX_TERMS)}")
    return LX_TERMS[k]


def mixer_x(n: int, beta: float) -> Circuit:
    """``exp(-i beta X)`` on every qubit."""
    return Circuit(n, tuple(rx(q, 2 * beta) for q in range(n)))


def mixer_lx(k: int, beta: float) -> Circuit:
    """Per-vertex LX mixer on ``n_k`` qubits, terms applied in table order.

    The strings inside one term commute, so each term is exact; distinct terms
    are applied one after another.
    """
    n_k = num_qubits_per_vertex(k)
    gates: list[Gate] = []
    for xs, gens in _lx_terms(k):
        for coef, s in lx_term_strings(xs, gens):
            support = [i for i, c in enumerate(s) if c != "I"]
            gates.append(pauli_rot(support, "".join(s[i] for i in support), 2 * beta * coef))
    return Circuit(n_k, tuple(gates))


def tensor_power(block: Circuit, copies: int) -> Circuit:
    """``copies`` side-by-side copies of ``block`` on consecutive registers."""
    if copies < 1:
        raise InvalidArgumentError(f"copies must be >= 1, got {copies}")
    n = block.num_qubits
    gates: list[Gate] = []
    for v in range(copies):
        mapping = list(range(v * n, (v + 1) * n))
        gates.extend(g.shifted(mapping) for g in block.gates)
    return Circuit(n * copies, tuple(gates))


per_vertex = tensor_power


def _zero_phase(qubits: Sequence[int], t: float) -> list[Gate]:
    """Phase ``t`` on the all-zero string of ``qubits``."""
    qubits = list(qubits)
    flips = [x(q) for q in qubits]
    return flips + [mcph(qubits[:-1], qubits[-1], t)] + flips


def grover_block(prep: Circuit, beta: float) -> Circuit:
    """``U_S Ph_0(-beta) U_S^dagger`` on the qubits of ``prep``."""
    n = prep.num_qubits
    if n < 1:
        raise InvalidArgumentError("Grover mixer needs at least one qubit")
    middle = Circuit(n, tuple(_zero_phase(range(n), -beta)))
    return prep.inverse() + middle + prep


def mixer_grover(prep: Circuit, beta: float, scope: str = "global",
                 num_vertices: int = 1) -> Circuit:
    """Grover mixer built from a per-vertex state preparation.

    ``scope="global"`` reflects about the product of ``num_vertices`` copies
    of the prepared state; ``scope="per_vertex"`` applies an independent
    Grover mixer to each vertex register.
    """
    if scope == "global":
        return grover_block(tensor_power(prep, num_vertices), beta)
    if scope == "per_vertex":
        return tensor_power(grover_block(prep, beta), num_vertices)
    raise InvalidArgumentError(f"scope must be 'global' or 'per_vertex', got {scope!r}")


def box_product(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Kronecker sum ``g (x) I + I (x) h``."""
    g = np.asarray(g)
    h = np.asarray(h)
    for name, m in (("first", g), ("second", h)):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidArgumentError(f"{name} operand must be square, got shape {m.shape}")
    return np.kron(g, np.eye(h.shape[0])) + np.kron(np.eye(g.shape[0]), h)


MIXER_KINDS = ("x", "lx", "grover", "grover_box")


@dataclass(frozen=True)
class MixerSpec:
    """Which mixer to build; ``space`` is ``full`` or ``subspace``."""

    kind: str
    k: int
    space: str = "full"

    def __post_init__(self):
        kind = self.kind.replace("-", "_").lower()
        if kind not in MIXER_KINDS:
            raise InvalidArgumentError(f"unknown mixer {self.kind!r}")
        if self.space not in ("full", "subspace"):
            raise InvalidArgumentError(f"space must be 'full' or 'subspace', got {self.space!r}")
        if kind == "lx" and self.space != "subspace":
            raise IncompatibleConfigError("the LX mixer needs the subspace encoding")
        if kind == "x" and self.space != "full":
            raise IncompatibleConfigError("the X mixer leaves the subspace; use a full encoding")
        object.__setattr__(self, "kind", kind)

    def prep(self) -> Circuit:
        """Per-vertex initial-state circuit matching this mixer."""
        n_k = num_qubits_per_vertex(self.k)
        if self.space == "full":
            from .preps import prepare_plus

            return prepare_plus(n_k)
        return prepare_subspace(self.k)

    def block(self, beta: float) -> Circuit:
        """Per-vertex mixer circuit (not defined for the global Grover mixer)."""
        n_k = num_qubits_per_vertex(self.k)
        if self.kind == "x":
            return mixer_x(n_k, beta)
        if self.kind == "lx":
            return mixer_lx(self.k, beta)
        if self.kind == "grover_box":
            return grover_block(self.prep(), beta)
        raise InvalidArgumentError("the global Grover mixer has no per-vertex block")

    def circuit(self, beta: float, num_vertices: int) -> Circuit:
        if self.kind == "grover":
            return mixer_grover(self.prep(), beta, "global", num_vertices)
        return tensor_power(self.block(beta), num_vertices)
