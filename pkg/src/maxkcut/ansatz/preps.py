"""Initial-state circuits.

``prepare_subspace(k)`` builds ``(1/sqrt(k)) sum_{i<k} |i>`` on ``n_k`` qubits
with real positive amplitudes. The rotation part follows the usual
``Ry`` / ``RXY`` pattern; ``RXY`` leaves a relative ``-i`` on the state it
rotates into, which the trailing ``Ph`` gates remove.
"""

from __future__ import annotations

import numpy as np

from ..circuit import Circuit, Gate, cx, h, ph, rxy, ry
from ..coloring import num_qubits_per_vertex
from ..exceptions import InvalidArgumentError, UnsupportedError

SUBSPACE_K = (3, 5, 6, 7)


def prepare_plus(n: int) -> Circuit:
    """Hadamard on every qubit."""
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    return Circuit(n, tuple(h(q) for q in range(n)))


def _k3() -> list[Gate]:
    return [
        ry(0, 2 * np.arccos(1 / np.sqrt(3))),
        rxy(0, 1, np.pi / 2),
        ph(1, np.pi / 2),
    ]


def _k5() -> list[Gate]:
    # open controls: with q0 = 0 spread over labels 0..3, q0 = 1 keeps label 4
    return [
        ry(0, 2 * np.arcsin(1 / np.sqrt(5))),
        Gate("H", (1,), (0,), "0"),
        Gate("H", (2,), (0,), "0"),
    ]


def _k6() -> list[Gate]:
    return [
        ry(1, 2 * np.arccos(1 / np.sqrt(3))),
        ry(2, np.pi / 2),
        rxy(0, 1, np.pi / 2),
        ph(0, np.pi / 2),
    ]


def _k7() -> list[Gate]:
    # The phase gates bracket RXY: the -i it adds lands on |10x>, while
    # |01x> must stay real, so a single trailing correction is not enough.
    return [
        ry(0, 2 * np.arcsin(1 / np.sqrt(7))),
        cx(0, 1),
        Gate("Ry", (2,), (0,), "0", np.pi / 2),
        Gate("Ry", (1,), (0,), "0", 2 * np.arccos(1 / np.sqrt(3))),
        ph(1, np.pi / 2),
        rxy(0, 1, np.pi / 2),
        ph(1, -np.pi / 2),
    ]


_BUILDERS = {3: _k3, 5: _k5, 6: _k6, 7: _k7}


def prepare_subspace(k: int) -> Circuit:
    """Uniform superposition of labels ``0 .. k-1`` on ``n_k`` qubits.

    Power-of-two ``k`` reduces to :func:`prepare_plus`.
    """
    n_k = num_qubits_per_vertex(k)
    if 2**n_k == k:
        return prepare_plus(n_k)
    if k not in _BUILDERS:
        raise UnsupportedError(f"no subspace preparation for k={k}; supported: {SUBSPACE_K}")
    return Circuit(n_k, tuple(_BUILDERS[k]()))


def uniform_subspace_state(k: int) -> np.ndarray:
    """Target vector of :func:`prepare_subspace`."""
    n_k = num_qubits_per_vertex(k)
    out = np.zeros(2**n_k, dtype=complex)
    out[:k] = 1 / np.sqrt(k)
    return out
