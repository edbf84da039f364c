"""Per-layer gate counts and CX-equivalent cost formulas in |V| and |E|."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .ansatz.mixers import MixerSpec, grover_block, mixer_grover
from .ansatz.separators import phase_separator, phase_separator_power2
from .circuit import (
    DEFAULT_CX_TABLE,
    census,
    cx_equivalent_cost,
    format_census,
    pretty_class,
)
from .coloring import num_qubits_per_vertex
from .exceptions import InvalidArgumentError

ENCODING_VARIANT = {"full_lt": "less_than", "full_bal": "balanced"}


def _space(encoding: str) -> str:
    return "subspace" if encoding == "subspace" else "full"


def separator_circuit(k: int, encoding: str, t: float = 0.5):
    """Per-edge separator circuit used by ``encoding``."""
    n_k = num_qubits_per_vertex(k)
    if encoding == "subspace":
        return phase_separator_power2(n_k, t)
    if encoding not in ENCODING_VARIANT:
        raise InvalidArgumentError(f"unknown encoding {encoding!r}")
    return phase_separator(k, ENCODING_VARIANT[encoding], t)


@dataclass
class ResourceReport:
    k: int
    encoding: str
    mixer: str
    separator_census: dict[str, int]
    separator_cx: int
    mixer_census: dict[str, int]
    mixer_cx: int
    prep_census: dict[str, int]
    prep_cx: int
    mixer_per_vertex: bool
    num_vertices: int | None = None
    num_edges: int | None = None
    notes: list[str] = field(default_factory=list)

    def formula(self) -> str:
        """Per-layer CX cost, e.g. ``(2+4)|V| + 6|E|``."""
        if self.mixer_per_vertex:
            if not self.prep_cx and not self.mixer_cx:
                return f"{self.separator_cx}|E|"
            head = f"({self.prep_cx}+{self.mixer_cx})|V|" if self.prep_cx else f"{self.mixer_cx}|V|"
        else:
            head = f"{self.mixer_cx}"
            if self.prep_cx:
                head = f"{self.prep_cx}|V| + {head}"
        return f"{head} + {self.separator_cx}|E|"

    def total(self) -> int | None:
        if self.num_edges is None or (self.mixer_per_vertex and self.num_vertices is None):
            return None
        per_vertex = self.prep_cx + (self.mixer_cx if self.mixer_per_vertex else 0)
        total = per_vertex * (self.num_vertices or 0) + self.separator_cx * self.num_edges
        if not self.mixer_per_vertex:
            total += self.mixer_cx
        return total

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "encoding": self.encoding,
            "mixer": self.mixer,
            "separator": {"census": self.separator_census,
                          "pretty": format_census(self.separator_census) + " per edge",
                          "cx": self.separator_cx},
            "mixer_layer": {"census": self.mixer_census, "cx": self.mixer_cx,
                            "scope": "per_vertex" if self.mixer_per_vertex else "global"},
            "prep": {"census": self.prep_census, "cx": self.prep_cx},
            "formula": self.formula(),
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "total_cx": self.total(),
            "notes": list(self.notes),
        }


def resource_report(
    k: int,
    encoding: str,
    mixer: str,
    num_vertices: int | None = None,
    num_edges: int | None = None,
    table: Mapping[str, int] | None = None,
) -> ResourceReport:
    """Gate census and CX cost of one QAOA layer.

    The separator is counted per edge and per-vertex mixers per vertex. The
    global Grover mixer depends on the whole register, so it needs
    ``num_vertices``. The prep column is the per-vertex initial-state circuit.
    """
    table = DEFAULT_CX_TABLE if table is None else table
    spec = MixerSpec(mixer, k, _space(encoding))
    sep = separator_circuit(k, encoding)
    prep = spec.prep()
    notes = []
    if spec.kind == "grover":
        if num_vertices is None:
            raise InvalidArgumentError("the global Grover mixer needs num_vertices")
        mix = mixer_grover(prep, 0.5, "global", num_vertices)
        per_vertex = False
        notes.append("global Grover mixer counted once per layer")
    elif spec.kind == "grover_box":
        mix = grover_block(prep, 0.5)
        per_vertex = True
    else:
        mix = spec.block(0.5)
        per_vertex = True
    return ResourceReport(
        k=k,
        encoding=encoding,
        mixer=spec.kind,
        separator_census=census(sep),
        separator_cx=cx_equivalent_cost(sep, table),
        mixer_census=census(mix),
        mixer_cx=cx_equivalent_cost(mix, table),
        prep_census=census(prep),
        prep_cx=cx_equivalent_cost(prep, table),
        mixer_per_vertex=per_vertex,
        num_vertices=num_vertices,
        num_edges=num_edges,
        notes=notes,
    )


def prior_work_count(k: int, variant: str = "less_than") -> int:
    """Number of ancilla sub-circuits per edge in the earlier construction.

    For the ``<k`` relation this is ``a (a - 1)`` with ``a = 2**n_k - (k - 1)``,
    i.e. the ordered pairs of distinct labels in the merged class. A general
    relation needs one sub-circuit per ordered pair inside every class.
    """
    n_k = num_qubits_per_vertex(k)
    if variant in ("less_than", "lt", "<k"):
        a = 2**n_k - (k - 1)
        return a * (a - 1)
    if variant in ("balanced", "bal"):
        from .coloring import clr_balanced

        return sum(len(c) * (len(c) - 1) for c in clr_balanced(k).classes)
    raise InvalidArgumentError(f"unknown relation variant {variant!r}")


def prior_work_census(k: int, variant: str = "less_than") -> dict[str, int]:
    n_k = num_qubits_per_vertex(k)
    count = prior_work_count(k, variant)
    out: Counter[str] = Counter()
    cls = "Ph" if n_k == 1 else ("CPh" if n_k == 2 else f"C{n_k - 1}Ph")
    out[cls] += 1
    out[f"C{n_k}X"] += 4 * count
    out["C2Ph"] += count
    out["CX"] += 2 * n_k
    return dict(out)


def prior_work_row(k: int, variant: str = "less_than") -> str:
    """Rendered as ``1C^{n_k-1}Ph, N(4C^{n_k}X, 1C²Ph), 2n_kCX``."""
    n_k = num_qubits_per_vertex(k)
    count = prior_work_count(k, variant)
    head = pretty_class("Ph" if n_k == 1 else ("CPh" if n_k == 2 else f"C{n_k - 1}Ph"))
    return f"1{head}, {count}(4{pretty_class(f'C{n_k}X')}, 1C²Ph), {2 * n_k}CX"
