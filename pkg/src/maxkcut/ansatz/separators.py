"""Per-edge phase-separation circuits.

Each builder returns a circuit on ``2 * n_k`` qubits: the first register
(qubits ``0 .. n_k-1``) holds the color label of one endpoint, the second
register the other. The circuit applies ``exp(i t)`` to every basis state
``|i>|j>`` whose labels denote the same color and leaves all other basis
states untouched. :func:`phase_separator_oracle` is the same operator as a
phase vector and serves as ground truth for every circuit here.

The constructions split the set of equal-color pairs into pieces that are
orbits of X-type Pauli groups (or can be permuted into one): a CX ladder
maps each piece to a register pattern where a single (possibly
X-conjugated) multi-controlled phase marks it.
"""

from __future__ import annotations

import numpy as np

from ..circuit import Circuit, Gate, cx, mcph, mcx, x
from ..coloring import ColorRelation, clr_balanced, clr_less_than_k, num_qubits_per_vertex
from ..exceptions import InvalidArgumentError, UnsupportedError


def phase_separator_oracle(rel: ColorRelation, t: float) -> np.ndarray:
    """Length ``4**n_k`` phase vector; index ``i * 2**n_k + j`` for labels i, j."""
    idx = rel.class_index
    same = idx[:, None] == idx[None, :]
    return np.where(same, np.exp(1j * t), 1.0 + 0j).reshape(-1)


def _xs(qubits) -> list[Gate]:
    return [x(q) for q in qubits]


def phase_separator_power2(n_k: int, t: float) -> Circuit:
    """Equal labels in both registers, for ``k = 2**n_k``.

    A CX ladder maps ``|j>|j>`` to ``|j>|0>``; an X-conjugated
    ``C^{n_k-1}Ph`` marks the all-zero second register. Uses ``2 n_k`` CX
    gates and one ``C^{n_k-1}Ph``.
    """
    if n_k < 1:
        raise InvalidArgumentError(f"n_k must be >= 1, got {n_k}")
    second = list(range(n_k, 2 * n_k))
    ladder = [cx(i, i + n_k) for i in range(n_k)]
    body = _xs(second) + [mcph(second[:-1], second[-1], t)] + _xs(second)
    return Circuit(2 * n_k, tuple(ladder + body + ladder[::-1]))


def phase_separator_2l_plus1(l: int, t: float) -> Circuit:
    """The ``<k`` relation for ``k = 2**l + 1`` on ``n_k = l + 1`` qubits.

    Two pieces: labels below ``2**l`` matched exactly (first bit 0 in both
    registers, remaining bits equal), and the merged top color (first bit 1
    in both registers), which is a single ``CPh`` between the leading bits.
    """
    if l < 1:
        raise InvalidArgumentError(f"l must be >= 1, got {l}")
    n_k = l + 1
    ladder = [cx(i, i + n_k) for i in range(1, n_k)]
    marked = [0] + list(range(n_k, 2 * n_k))
    low = _xs(marked) + [mcph(marked[:-1], marked[-1], t)] + _xs(marked)
    high = [mcph([0], n_k, t)]
    return Circuit(2 * n_k, tuple(ladder + low + ladder[::-1] + high))


# Building blocks on 6 qubits (n_k = 3) ---------------------------------------


def _equal_labels_n3(t: float) -> list[Gate]:
    """All eight ``|i>|i>`` states."""
    return (
        [cx(0, 3), cx(1, 4), cx(2, 5)]
        + _xs([3, 4, 5]) + [mcph([3, 4], 5, t)] + _xs([3, 4, 5])
        + [cx(2, 5), cx(1, 4), cx(0, 3)]
    )


def _pairs_01_45(t: float) -> list[Gate]:
    """The off-diagonal states of the classes {0,1} and {4,5}:
    (0,1), (1,0), (4,5), (5,4)."""
    oc = mcx([5], 2, "0")
    return (
        [cx(0, 3), oc]
        + _xs([1, 2, 3, 4]) + [mcph([1, 2, 3], 4, t)] + _xs([1, 2, 3, 4])
        + [oc, cx(0, 3)]
    )


def _pair_67(t: float) -> list[Gate]:
    """(6,7) and (7,6)."""
    return [cx(2, 5), mcph([0, 1, 3, 4], 5, t), cx(2, 5)]


def _cancel_adjacent(gates: list[Gate]) -> list[Gate]:
    """Drop neighbouring identical self-inverse gates (CX pairs between blocks)."""
    out: list[Gate] = []
    for g in gates:
        if out and out[-1] == g and g.name == "X":
            out.pop()
        else:
            out.append(g)
    return out


def _k5_balanced(t: float) -> list[Gate]:
    return _cancel_adjacent(_equal_labels_n3(t) + _pairs_01_45(t) + _pair_67(t))


def _k6_balanced(t: float) -> list[Gate]:
    return _cancel_adjacent(_equal_labels_n3(t) + _pairs_01_45(t))


def _k7(t: float) -> list[Gate]:
    # uncompute the ladder with CX(2,5) last so it meets the opening CX(2,5)
    # of the (6,7) block and both drop out
    eq = _equal_labels_n3(t)
    eq = eq[:-3] + [cx(0, 3), cx(1, 4), cx(2, 5)]
    return _cancel_adjacent(eq + _pair_67(t))


def _k6_less_than(t: float) -> list[Gate]:
    # (5,6), (5,7)
    from_five = _xs([1]) + [mcph([0, 1, 2, 3], 4, t)] + _xs([1])
    # (6,5), (6,7), (7,5), (7,6): a Toffoli swaps |111110> and |111111>-type
    # states so the set becomes an X-orbit marked by one C3Ph
    rest = [mcx([2, 4], 5), mcph([0, 1, 3], 5, t), mcx([2, 4], 5)]
    return _equal_labels_n3(t) + from_five + rest


_VARIANTS = {
    "less_than": {3: None, 5: None, 6: _k6_less_than, 7: _k7},
    "balanced": {3: None, 5: _k5_balanced, 6: _k6_balanced, 7: _k7},
}


def _variant_name(variant: str) -> str:
    if variant in ("less_than", "lt", "<k"):
        return "less_than"
    if variant in ("balanced", "bal"):
        return "balanced"
    raise InvalidArgumentError(f"unknown relation variant {variant!r}")


def phase_separator_k(k: int, variant: str, t: float) -> Circuit:
    """Circuits for k in {3, 5, 6, 7} and both the ``<k`` and balanced relations.

    For k = 3 the two relations coincide, as they do for k = 7.
    """
    name = _variant_name(variant)
    if k not in _VARIANTS[name]:
        raise UnsupportedError(f"no {name} phase separator circuit for k={k}")
    if k == 3:
        return phase_separator_2l_plus1(1, t)
    if k == 5 and name == "less_than":
        return phase_separator_2l_plus1(2, t)
    return Circuit(6, tuple(_VARIANTS[name][k](t)))


def relation_of(k: int, variant: str) -> ColorRelation:
    name = _variant_name(variant)
    return clr_less_than_k(k) if name == "less_than" else clr_balanced(k)


def has_circuit(k: int, variant: str) -> bool:
    n_k = num_qubits_per_vertex(k)
    if 2**n_k == k:
        return True
    name = _variant_name(variant)
    if k in _VARIANTS[name]:
        return True
    if name == "less_than" and k == 2 ** (n_k - 1) + 1:
        return True
    return k == 3


def phase_separator(k: int, variant: str, t: float) -> Circuit:
    """Dispatch to the cheapest available circuit for ``(k, variant)``."""
    n_k = num_qubits_per_vertex(k)
    if 2**n_k == k:
        return phase_separator_power2(n_k, t)
    name = _variant_name(variant)
    if k in _VARIANTS[name]:
        return phase_separator_k(k, name, t)
    if name == "less_than" and k == 2 ** (n_k - 1) + 1:
        return phase_separator_2l_plus1(n_k - 1, t)
    raise UnsupportedError(f"no {name} phase separator circuit for k={k}")


def supported_separators(k_values=range(2, 10)) -> list[tuple[int, str]]:
    """Every ``(k, variant)`` with a circuit; power-of-two k listed once as ``trivial``."""
    out = []
    for k in k_values:
        n_k = num_qubits_per_vertex(k)
        if 2**n_k == k:
            out.append((k, "trivial"))
            continue
        for variant in ("less_than", "balanced"):
            if has_circuit(k, variant):
                out.append((k, variant))
    return out
