"""Equivalence relations on color labels.

A vertex color is stored in ``n_k = ceil(log2 k)`` qubits, i.e. as a label in
``0 .. 2**n_k - 1``. When ``k`` is not a power of two several labels must
denote the same color; a :class:`ColorRelation` is the partition of labels
into exactly ``k`` classes. Classes are ordered by their smallest member and
the class position is the color index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidArgumentError, InvalidAssignmentError


def num_qubits_per_vertex(k: int) -> int:
    if int(k) != k or k < 2:
        raise InvalidArgumentError(f"k must be an integer >= 2, got {k!r}")
    return (int(k) - 1).bit_length()


def closure(pairs: Iterable[tuple[int, int]], domain_size: int) -> tuple[tuple[int, ...], ...]:
    """Partition of ``0 .. domain_size-1`` induced by the smallest
    equivalence relation containing ``pairs``."""
    parent = list(range(domain_size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        if not (0 <= i < domain_size and 0 <= j < domain_size):
            raise InvalidArgumentError(f"pair ({i}, {j}) outside domain 0..{domain_size - 1}")
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for x in range(domain_size):
        groups.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


@dataclass(frozen=True)
class ColorRelation:
    k: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n_k = num_qubits_per_vertex(self.k)
        classes = tuple(sorted(tuple(sorted(c)) for c in self.classes))
        if len(classes) != self.k:
            raise InvalidArgumentError(f"expected {self.k} classes, got {len(classes)}")
        if any(len(c) == 0 for c in classes):
            raise InvalidArgumentError("empty color class")
        members = sorted(x for c in classes for x in c)
        if members != list(range(2**n_k)):
            raise InvalidArgumentError(
                f"classes must partition 0..{2**n_k - 1} exactly once"
            )
        object.__setattr__(self, "classes", classes)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], k: int) -> "ColorRelation":
        return cls(k, closure(pairs, 2 ** num_qubits_per_vertex(k)))

    @property
    def n_k(self) -> int:
        return num_qubits_per_vertex(self.k)

    @property
    def num_labels(self) -> int:
        return 2**self.n_k

    @cached_property
    def class_index(self) -> np.ndarray:
        """``class_index[label]`` is the color index of ``label``."""
        out = np.empty(self.num_labels, dtype=np.int64)
        for idx, members in enumerate(self.classes):
            out[list(members)] = idx
        return out

    @cached_property
    def representative(self) -> dict[int, int]:
        return {x: c[0] for c in self.classes for x in c}

    def equivalent(self, i: int, j: int) -> bool:
        return bool(self.class_index[i] == self.class_index[j])

    def pairs(self) -> list[tuple[int, int]]:
        """All ordered pairs ``(i, j)`` with ``i ~ j``, diagonal included."""
        return [(i, j) for c in self.classes for i in c for j in c]

    def to_dict(self) -> dict:
        return {"k": self.k, "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_dict(cls, data: dict) -> "ColorRelation":
        return cls(int(data["k"]), tuple(tuple(c) for c in data["classes"]))


def trivial_relation(n_k: int) -> ColorRelation:
    """Every label its own color (the power-of-two case)."""
    return ColorRelation(2**n_k, tuple((i,) for i in range(2**n_k)))


def clr_less_than_k(k: int) -> ColorRelation:
    """Labels ``k-1 .. 2**n_k - 1`` all encode the last color."""
    top = 2 ** num_qubits_per_vertex(k)
    return ColorRelation.from_pairs(((i, i + 1) for i in range(k - 1, top - 1)), k)


# Explicit choices for k = 5, 6, 7; other k use the generic pairing rule.
_BALANCED_PAIRS = {
    5: [(0, 1), (4, 5), (6, 7)],
    6: [(0, 1), (4, 5)],
    7: [(6, 7)],
}


def clr_balanced(k: int) -> ColorRelation:
    """A relation with every class of size at most two.

    For k outside {5, 6, 7} the highest ``2*(2**n_k - k)`` labels are paired
    as ``{2i, 2i+1}``. That rule is one valid choice among many.
    """
    if k in _BALANCED_PAIRS:
        return ColorRelation.from_pairs(_BALANCED_PAIRS[k], k)
    top = 2 ** num_qubits_per_vertex(k)
    surplus = top - k
    return ColorRelation.from_pairs(((x, x + 1) for x in range(top - 2 * surplus, top, 2)), k)


def relation_for(k: int, variant: str) -> ColorRelation:
    """Look up a relation by name: ``less_than``, ``balanced`` or ``trivial``."""
    if variant in ("less_than", "lt", "<k"):
        return clr_less_than_k(k)
    if variant in ("balanced", "bal"):
        return clr_balanced(k)
    if variant == "trivial":
        n_k = num_qubits_per_vertex(k)
        if 2**n_k != k:
            raise InvalidArgumentError(f"trivial relation needs k a power of two, got {k}")
        return trivial_relation(n_k)
    raise InvalidArgumentError(f"unknown relation variant {variant!r}")


def decode(bits: str | Sequence[int], rel: ColorRelation, num_vertices: int) -> tuple[int, ...]:
    """Map a measured bitstring to a color assignment.

    Vertex ``v`` owns bits ``v*n_k .. (v+1)*n_k - 1``; the first bit of each
    block is the most significant bit of the label.
    """
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise InvalidAssignmentError(f"bitstring may contain only 0/1, got {bits!r}")
        digits = [int(b) for b in bits]
    else:
        digits = [int(b) for b in bits]
    n_k = rel.n_k
    if len(digits) != num_vertices * n_k:
        raise InvalidAssignmentError(
            f"expected {num_vertices * n_k} bits for {num_vertices} vertices, got {len(digits)}"
        )
    colors = []
    for v in range(num_vertices):
        label = 0
        for b in digits[v * n_k:(v + 1) * n_k]:
            label = 2 * label + b
        colors.append(int(rel.class_index[label]))
    return tuple(colors)


def labels_of_indices(indices: np.ndarray, n_k: int, num_vertices: int) -> np.ndarray:
    """Per-vertex labels of computational basis indices, shape ``(len, |V|)``."""
    indices = np.asarray(indices, dtype=np.int64)
    shifts = n_k * np.arange(num_vertices - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] >> shifts[None, :]) & ((1 << n_k) - 1)
