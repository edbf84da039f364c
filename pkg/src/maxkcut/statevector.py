"""Dense statevector simulation in double precision.

Amplitude index ``x`` has qubit 0 as its most significant bit, matching the
vertex-block layout used by :mod:`maxkcut.coloring`.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Iterable

import numpy as np

from .circuit import Circuit, Gate
from .coloring import ColorRelation, labels_of_indices
from .exceptions import InvalidArgumentError, SizeLimitError
from .graph import Graph

DEFAULT_MAX_QUBITS = 26


def check_size(num_qubits: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> None:
    if num_qubits > max_qubits:
        raise SizeLimitError(
            f"statevector needs {num_qubits} qubits, above the cap of {max_qubits} "
            f"({2**num_qubits * 16 / 2**30:.3g} GiB of amplitudes)"
        )


def zero_state(num_qubits: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    check_size(num_qubits, max_qubits)
    psi = np.zeros(2**num_qubits, dtype=complex)
    psi[0] = 1.0
    return psi


def basis_state(index: int, num_qubits: int) -> np.ndarray:
    psi = np.zeros(2**num_qubits, dtype=complex)
    psi[index] = 1.0
    return psi


def num_qubits_of(psi: np.ndarray) -> int:
    n = int(psi.size).bit_length() - 1
    if psi.ndim != 1 or 2**n != psi.size:
        raise InvalidArgumentError(f"statevector length {psi.size} is not a power of two")
    return n


def apply(psi: np.ndarray, gate: Gate) -> np.ndarray:
    """Return ``gate`` applied to ``psi`` (the input is left untouched)."""
    n = num_qubits_of(psi)
    if max(gate.qubits) >= n:
        raise InvalidArgumentError(f"{gate.gate_class} on {gate.qubits} exceeds {n} qubits")
    out = psi.reshape((2,) * n).copy()
    sel: list = [slice(None)] * n
    for q, b in zip(gate.controls, gate.pattern):
        sel[q] = int(b)
    sel = tuple(sel)
    sub = out[sel]
    # axes of the targets once the control axes are sliced away
    axes = [t - sum(c < t for c in gate.controls) for t in gate.targets]
    m = len(axes)
    mat = gate.target_matrix().reshape((2,) * (2 * m))
    moved = np.tensordot(mat, sub, axes=(list(range(m, 2 * m)), axes))
    out[sel] = np.moveaxis(moved, list(range(m)), axes)
    return out.reshape(-1)


def run(circuit: Circuit, psi: np.ndarray | None = None,
        max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    if psi is None:
        psi = zero_state(circuit.num_qubits, max_qubits)
    elif num_qubits_of(psi) != circuit.num_qubits:
        raise InvalidArgumentError(
            f"circuit has {circuit.num_qubits} qubits, state has {num_qubits_of(psi)}"
        )
    for g in circuit.gates:
        psi = apply(psi, g)
    return psi


def probabilities(psi: np.ndarray) -> np.ndarray:
    return np.abs(psi) ** 2


def expectation(psi: np.ndarray, diag: np.ndarray) -> float:
    """``sum_x |psi_x|^2 diag_x`` for a real diagonal observable."""
    diag = np.asarray(diag)
    if diag.shape != psi.shape:
        raise InvalidArgumentError(
            f"observable has {diag.size} entries, state has {psi.size}"
        )
    return float(np.dot(probabilities(psi), diag))


def cost_diagonal(g: Graph, rel: ColorRelation) -> np.ndarray:
    """Cut value of every computational basis state of ``|V| * n_k`` qubits."""
    n = g.num_vertices * rel.n_k
    check_size(n)
    labels = labels_of_indices(np.arange(2**n), rel.n_k, g.num_vertices)
    colors = rel.class_index[labels]
    diag = np.zeros(2**n)
    for u, v, w in g.edges:
        diag += w * (colors[:, u] != colors[:, v])
    return diag


def sample(psi: np.ndarray, shots: int, seed: int | None = None) -> Counter:
    """Draw ``shots`` bitstrings i.i.d. from ``|psi|^2``."""
    if shots < 1:
        raise InvalidArgumentError(f"shots must be >= 1, got {shots}")
    n = num_qubits_of(psi)
    p = probabilities(psi)
    p = p / p.sum()
    rng = np.random.Generator(np.random.PCG64(seed))
    counts = np.bincount(rng.choice(p.size, size=shots, p=p), minlength=p.size)
    return Counter({format(i, f"0{n}b"): int(c) for i, c in enumerate(counts) if c})


def dump(psi: np.ndarray, path: str | os.PathLike) -> None:
    """Write amplitudes as little-endian float64 (re, im) pairs."""
    np.asarray(psi, dtype="<c16").tofile(path)


def load_dump(path: str | os.PathLike) -> np.ndarray:
    return np.fromfile(path, dtype="<c16").astype(complex)


def norm(psi: np.ndarray) -> float:
    return float(np.linalg.norm(psi))


def apply_all(psi: np.ndarray, gates: Iterable[Gate]) -> np.ndarray:
    for g in gates:
        psi = apply(psi, g)
    return psi
