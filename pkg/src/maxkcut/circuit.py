"""Gate-level circuit representation, gate census and CX-equivalent costs.

Conventions used throughout the package:

* Qubit 0 is the most significant bit of a basis-state index.
* ``Ph(t) = diag(1, exp(i t))``.
* ``Rx/Ry/Rz(t) = exp(-i t/2 P)``, ``RXY(t) = exp(-i t/4 (XX + YY))`` and
  ``PauliRot(P, t) = exp(-i t/2 P)`` for a Pauli string ``P``.
* A gate with controls ``c`` and pattern ``b`` acts as
  ``(I - |b><b|_c) (x) I + |b><b|_c (x) U``; pattern ``"1"*len(c)`` is the
  ordinary filled-control gate.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exceptions import InvalidArgumentError, MissingTableEntryError, SizeLimitError

DEFAULT_UNITARY_MAX_QUBITS = 12

SINGLE_QUBIT = {"X", "H", "Ph", "Rx", "Ry", "Rz"}
PARAMETRIC = {"Ph", "Rx", "Ry", "Rz", "RXY", "PauliRot"}
KINDS = SINGLE_QUBIT | {"RXY", "PauliRot"}

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class Gate:
    name: str
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    pattern: str = ""
    param: float | None = None
    pauli: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "name", str(self.name))
        if self.name not in KINDS:
            raise InvalidArgumentError(f"unknown gate kind {self.name!r}")
        targets = tuple(int(q) for q in self.targets)
        controls = tuple(int(q) for q in self.controls)
        pattern = self.pattern or "1" * len(controls)
        if len(pattern) != len(controls) or set(pattern) - {"0", "1"}:
            raise InvalidArgumentError(
                f"control pattern {pattern!r} does not match {len(controls)} controls"
            )
        qubits = targets + controls
        if len(set(qubits)) != len(qubits) or min(qubits, default=0) < 0:
            raise InvalidArgumentError(f"gate qubits must be distinct and >= 0: {qubits}")
        if self.name in SINGLE_QUBIT and len(targets) != 1:
            raise InvalidArgumentError(f"{self.name} acts on exactly one target")
        if self.name == "RXY" and len(targets) != 2:
            raise InvalidArgumentError("RXY acts on exactly two targets")
        if self.name in PARAMETRIC and self.param is None:
            raise InvalidArgumentError(f"{self.name} needs a parameter")
        if self.name == "PauliRot":
            p = (self.pauli or "").upper()
            if len(p) != len(targets) or set(p) - set("IXYZ") or set(p) <= {"I"}:
                raise InvalidArgumentError(
                    f"Pauli string {self.pauli!r} must cover the {len(targets)} targets "
                    "with at least one non-identity"
                )
            object.__setattr__(self, "pauli", p)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "pattern", pattern)
        if self.param is not None:
            object.__setattr__(self, "param", float(self.param))

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + self.targets

    @property
    def gate_class(self) -> str:
        """Census key: ``CX``, ``C2Ph``, ``PauliRot2`` (by Pauli weight), ..."""
        base = self.name
        if self.name == "PauliRot":
            base = f"PauliRot{sum(ch != 'I' for ch in self.pauli)}"
        m = len(self.controls)
        if m == 0:
            return base
        return ("C" if m == 1 else f"C{m}") + base

    def target_matrix(self) -> np.ndarray:
        """Unitary on the target qubits, first target most significant."""
        t = self.param
        if self.name == "X":
            return np.array([[0, 1], [1, 0]], dtype=complex)
        if self.name == "H":
            return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
        if self.name == "Ph":
            return np.diag([1, np.exp(1j * t)])
        c, s = np.cos(t / 2), np.sin(t / 2)
        if self.name == "Rx":
            return np.array([[c, -1j * s], [-1j * s, c]])
        if self.name == "Ry":
            return np.array([[c, -s], [s, c]], dtype=complex)
        if self.name == "Rz":
            return np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
        if self.name == "RXY":
            # (XX + YY)/2 swaps |01> and |10>, so exp(-i t/4 (XX+YY)) rotates that pair by t/2.
            out = np.eye(4, dtype=complex)
            out[1, 1] = out[2, 2] = c
            out[1, 2] = out[2, 1] = -1j * s
            return out
        p = pauli_matrix(self.pauli)
        return c * np.eye(p.shape[0]) - 1j * s * p

    def inverse(self) -> "Gate":
        if self.name in ("X", "H"):
            return self
        return replace(self, param=-self.param)

    def shifted(self, mapping: Sequence[int] | Mapping[int, int]) -> "Gate":
        """Relabel qubit ``q`` as ``mapping[q]``."""
        return replace(
            self,
            targets=tuple(mapping[q] for q in self.targets),
            controls=tuple(mapping[q] for q in self.controls),
        )

    def to_dict(self) -> dict:
        out = {"gate": self.name, "qubits": list(self.targets), "controls": list(self.controls),
               "pattern": self.pattern}
        if self.param is not None:
            out["param"] = self.param
        if self.pauli is not None:
            out["pauli"] = self.pauli
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Gate":
        return cls(
            data["gate"],
            tuple(data["qubits"]),
            tuple(data.get("controls", ())),
            data.get("pattern", ""),
            data.get("param"),
            data.get("pauli"),
        )


_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1.0 + 0j, -1.0]),
}


def pauli_matrix(string: str) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for ch in string:
        out = np.kron(out, _PAULI[ch])
    return out


# Convenience constructors -------------------------------------------------


def x(q: int) -> Gate:
    return Gate("X", (q,))


def h(q: int) -> Gate:
    return Gate("H", (q,))


def ph(q: int, t: float) -> Gate:
    return Gate("Ph", (q,), param=t)


def rx(q: int, t: float) -> Gate:
    return Gate("Rx", (q,), param=t)


def ry(q: int, t: float) -> Gate:
    return Gate("Ry", (q,), param=t)


def rz(q: int, t: float) -> Gate:
    return Gate("Rz", (q,), param=t)


def rxy(a: int, b: int, t: float) -> Gate:
    return Gate("RXY", (a, b), param=t)


def cx(control: int, target: int, pattern: str = "1") -> Gate:
    return Gate("X", (target,), (control,), pattern)


def mcx(controls: Sequence[int], target: int, pattern: str = "") -> Gate:
    return Gate("X", (target,), tuple(controls), pattern)


def mcph(controls: Sequence[int], target: int, t: float, pattern: str = "") -> Gate:
    return Gate("Ph", (target,), tuple(controls), pattern, t)


def pauli_rot(qubits: Sequence[int], string: str, t: float) -> Gate:
    return Gate("PauliRot", tuple(qubits), param=t, pauli=string)


# Circuits -----------------------------------------------------------------


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        gates = tuple(self.gates)
        for g in gates:
            if max(g.qubits) >= self.num_qubits:
                raise InvalidArgumentError(
                    f"{g.gate_class} on qubits {g.qubits} exceeds {self.num_qubits} qubits"
                )
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        return Circuit(max(self.num_qubits, other.num_qubits), self.gates + other.gates)

    def then(self, *gates: Gate | Iterable[Gate]) -> "Circuit":
        flat: list[Gate] = []
        for g in gates:
            flat.extend([g] if isinstance(g, Gate) else g)
        return Circuit(self.num_qubits, self.gates + tuple(flat))

    def inverse(self) -> "Circuit":
        return Circuit(self.num_qubits, tuple(g.inverse() for g in reversed(self.gates)))

    def embed(self, mapping: Sequence[int], num_qubits: int) -> "Circuit":
        """Place this circuit on a larger register; qubit ``q`` goes to ``mapping[q]``."""
        return Circuit(num_qubits, tuple(g.shifted(mapping) for g in self.gates))

    def census(self, include_x: bool = False) -> dict[str, int]:
        return census(self, include_x)

    def to_json(self) -> str:
        return json.dumps({"num_qubits": self.num_qubits,
                           "gates": [g.to_dict() for g in self.gates]})

    @classmethod
    def from_json(cls, text: str) -> "Circuit":
        data = json.loads(text)
        return cls(int(data["num_qubits"]), tuple(Gate.from_dict(g) for g in data["gates"]))


def census(c: Circuit | Iterable[Gate], include_x: bool = False) -> dict[str, int]:
    """Count gates by class (kind plus number of controls).

    Uncontrolled X gates only relabel basis states and are left out unless
    ``include_x`` is set.
    """
    counts: Counter[str] = Counter()
    for g in c:
        if g.name == "X" and not g.controls and not include_x:
            continue
        counts[g.gate_class] += 1
    return dict(counts)


def _class_sort_key(cls: str) -> tuple:
    m = 0
    base = cls
    if cls.startswith("C") and len(cls) > 1 and cls[1:2].isdigit():
        i = 1
        while cls[i].isdigit():
            i += 1
        m, base = int(cls[1:i]), cls[i:]
    elif cls.startswith("C") and cls not in KINDS:
        m, base = 1, cls[1:]
    if base == "Ph":
        return (0, m, base)
    if base == "X":
        return (1, -m, base)
    return (2, base, m)


def pretty_class(cls: str) -> str:
    """``C3Ph`` -> ``C³Ph``."""
    if cls.startswith("C") and cls[1:2].isdigit():
        i = 1
        while cls[i].isdigit():
            i += 1
        return "C" + cls[1:i].translate(_SUPERSCRIPT) + cls[i:]
    return cls


def format_census(counts: Mapping[str, int]) -> str:
    """Render a census the way resource tables list it, e.g. ``1CPh, 1C²Ph, 2CX``."""
    items = sorted(counts.items(), key=lambda kv: _class_sort_key(kv[0]))
    return ", ".join(f"{n}{pretty_class(cls)}" for cls, n in items)


# CX-equivalent cost ---------------------------------------------------------

# Ancilla-free decompositions; see README for the full table. Multi-controlled
# phases follow C^n Ph = 3 * 2**n - 4.
DEFAULT_CX_TABLE: dict[str, int] = {
    "X": 0, "H": 0, "Ph": 0, "Rx": 0, "Ry": 0, "Rz": 0,
    "CX": 1, "C2X": 6, "C3X": 14,
    "CPh": 2, "C2Ph": 8, "C3Ph": 20, "C4Ph": 44, "C5Ph": 92,
    "CH": 1, "CRy": 2, "CRz": 2, "CRx": 2,
    "RXY": 2,
    "PauliRot1": 0, "PauliRot2": 2, "PauliRot3": 4, "PauliRot4": 6,
}


def load_cx_table(path) -> dict[str, int]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or not all(
        isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in data.values()
    ):
        raise InvalidArgumentError("CX table must map gate classes to non-negative integers")
    return dict(data)


def cx_equivalent_cost(
    c: Circuit | Mapping[str, int], table: Mapping[str, int] | None = None
) -> int:
    """Sum of per-class CX costs over the circuit's full gate census."""
    table = DEFAULT_CX_TABLE if table is None else table
    counts = c if isinstance(c, Mapping) else census(c, include_x=True)
    total = 0
    for cls, n in counts.items():
        if cls not in table:
            raise MissingTableEntryError(cls)
        total += n * table[cls]
    return total


# Dense unitary ------------------------------------------------------------


def embedded_matrix(g: Gate, n: int) -> np.ndarray:
    """The full ``2**n x 2**n`` matrix of one gate, built entry-wise from its
    local action. Independent of the statevector kernel on purpose."""
    local_qubits = g.controls + g.targets
    m = len(local_qubits)
    local = np.eye(2**m, dtype=complex)
    nt = len(g.targets)
    ctrl_index = int(g.pattern, 2) if g.controls else 0
    block = slice(ctrl_index * 2**nt, (ctrl_index + 1) * 2**nt)
    local[block, block] = g.target_matrix()

    idx = np.arange(2**n)
    loc = np.zeros(2**n, dtype=np.int64)
    rest = idx.copy()
    for pos, q in enumerate(local_qubits):
        bit = (idx >> (n - 1 - q)) & 1
        loc |= bit << (m - 1 - pos)
        rest &= ~(1 << (n - 1 - q))
    same_rest = rest[:, None] == rest[None, :]
    return np.where(same_rest, local[loc[:, None], loc[None, :]], 0)


def unitary(c: Circuit, max_qubits: int = DEFAULT_UNITARY_MAX_QUBITS) -> np.ndarray:
    """Dense unitary of the circuit; gates act in list order."""
    n = c.num_qubits
    if n > max_qubits:
        raise SizeLimitError(f"unitary of {n} qubits exceeds the cap of {max_qubits}")
    u = np.eye(2**n, dtype=complex)
    for g in c.gates:
        u = embedded_matrix(g, n) @ u
    return u
