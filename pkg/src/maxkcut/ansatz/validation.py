"""Numerical checks that a mixer keeps the feasible subspace and mixes it."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..circuit import Circuit, unitary
from ..exceptions import InvalidArgumentError

DEFAULT_BETAS = tuple(np.linspace(0.05, 2 * np.pi, 12, endpoint=False) + 0.0137)


@dataclass
class MixerReport:
    feasible: tuple[int, ...]
    max_leak: float
    preserves: bool
    connected: bool
    components: list[list[int]]
    generator_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.preserves and self.connected

    def label(self, i: int, n: int) -> str:
        return format(i, f"0{n}b")


def _components(nodes: Sequence[int], adj: np.ndarray) -> list[list[int]]:
    pos = {x: i for i, x in enumerate(nodes)}
    seen: set[int] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in nodes:
                if v not in seen and (adj[pos[u], pos[v]] or adj[pos[v], pos[u]]):
                    seen.add(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def validate_mixer(
    mixer: Callable[[float], Circuit | np.ndarray],
    feasible: Sequence[int],
    betas: Sequence[float] = DEFAULT_BETAS,
    leak_tol: float = 1e-10,
    amp_tol: float = 1e-8,
) -> MixerReport:
    """Check preservation of ``span(feasible)`` and connectivity over it.

    ``mixer(beta)`` returns a circuit or a unitary matrix. Leakage is the
    largest norm, over feasible inputs and sampled ``beta``, of the component
    outside the feasible span. Two feasible states are linked when some power
    ``r <= |B|`` of ``U(beta)`` has an entry above ``amp_tol`` between them.
    ``generator_pairs`` lists the pairs coupled at first order in ``beta``.
    """
    feasible = tuple(sorted(set(int(i) for i in feasible)))
    if not feasible:
        raise InvalidArgumentError("feasible set is empty")

    def mat(beta: float) -> np.ndarray:
        u = mixer(beta)
        return unitary(u) if isinstance(u, Circuit) else np.asarray(u)

    dim = mat(0.0).shape[0]
    if max(feasible) >= dim:
        raise InvalidArgumentError(f"feasible index {max(feasible)} outside dimension {dim}")
    outside = np.setdiff1d(np.arange(dim), feasible)
    fidx = np.array(feasible)
    m = len(feasible)

    max_leak = 0.0
    adj = np.eye(m, dtype=bool)
    for beta in betas:
        u = mat(beta)
        if outside.size:
            leak = np.linalg.norm(u[np.ix_(outside, fidx)], axis=0).max()
            max_leak = max(max_leak, float(leak))
        power = np.eye(dim, dtype=complex)
        for _ in range(m):
            power = u @ power
            adj |= np.abs(power[np.ix_(fidx, fidx)]) > amp_tol

    h = 1e-6
    deriv = (mat(h) - mat(-h)) / (2 * h)
    sub = np.abs(deriv[np.ix_(fidx, fidx)])
    pairs = [
        (feasible[a], feasible[b])
        for a in range(m) for b in range(a + 1, m)
        if max(sub[a, b], sub[b, a]) > 1e-4
    ]
    comps = _components(list(feasible), adj)
    return MixerReport(
        feasible=feasible,
        max_leak=max_leak,
        preserves=max_leak < leak_tol,
        connected=len(comps) == 1,
        components=comps,
        generator_pairs=pairs,
    )
