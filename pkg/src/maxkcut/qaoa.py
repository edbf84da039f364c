"""QAOA for MAX k-CUT: ansatz configuration, simulation, landscapes and
parameter optimization.

Simulation backends
-------------------
``full``
    Statevector over all ``|V| * n_k`` qubits. The separator layer is a phase
    vector and per-vertex mixers act as ``2**n_k``-dimensional blocks.
``restricted``
    Subspace encodings only: the state lives in the ``k ** |V|`` dimensional
    feasible space and each mixer block is restricted to its first ``k``
    labels. Exact as long as the mixer preserves the subspace, which
    :mod:`maxkcut.ansatz.validation` checks.
``circuit``
    Gate-by-gate simulation of the explicit circuits; slow, used to
    cross-check the other two.

Conventions: the separator multiplies every basis state by
``exp(i gamma * w)`` for each edge of weight ``w`` whose endpoints share a
color; mixers are ``exp(-i beta H_M)``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .ansatz.mixers import MixerSpec, mixer_lx
from .ansatz.preps import uniform_subspace_state
from .ansatz.separators import phase_separator, phase_separator_power2
from .circuit import Circuit, Gate, unitary
from .coloring import (
    ColorRelation,
    clr_balanced,
    clr_less_than_k,
    num_qubits_per_vertex,
    trivial_relation,
)
from .exceptions import IncompatibleConfigError, InvalidArgumentError
from .graph import Graph, brute_force_max_kcut, cost_vector
from .statevector import DEFAULT_MAX_QUBITS, check_size, cost_diagonal, run

ENCODINGS = ("full_lt", "full_bal", "subspace")
MIXERS = ("x", "lx", "grover", "grover_box")
BACKENDS = ("auto", "full", "restricted", "circuit")


def _norm_name(text: str) -> str:
    return text.strip().lower().replace("-", "_")


@dataclass(frozen=True)
class AnsatzConfig:
    """One QAOA method: graph, number of colors, encoding, mixer and depth."""

    graph: Graph
    k: int
    encoding: str
    mixer: str
    p: int = 1
    backend: str = "auto"

    def __post_init__(self):
        encoding = _norm_name(self.encoding)
        mixer = _norm_name(self.mixer)
        backend = _norm_name(self.backend)
        if encoding not in ENCODINGS:
            raise InvalidArgumentError(f"encoding must be one of {ENCODINGS}, got {self.encoding!r}")
        if mixer not in MIXERS:
            raise InvalidArgumentError(f"mixer must be one of {MIXERS}, got {self.mixer!r}")
        if backend not in BACKENDS:
            raise InvalidArgumentError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if int(self.p) != self.p or self.p < 1:
            raise InvalidArgumentError(f"depth p must be a positive integer, got {self.p!r}")
        num_qubits_per_vertex(self.k)
        if mixer == "lx" and encoding != "subspace":
            raise IncompatibleConfigError("the LX mixer needs the subspace encoding")
        if mixer == "x" and encoding == "subspace":
            raise IncompatibleConfigError("the X mixer needs a full encoding")
        if backend == "restricted" and encoding != "subspace":
            raise IncompatibleConfigError("the restricted backend needs the subspace encoding")
        object.__setattr__(self, "encoding", encoding)
        object.__setattr__(self, "mixer", mixer)
        object.__setattr__(self, "backend", backend)
        object.__setattr__(self, "p", int(self.p))

    @property
    def n_k(self) -> int:
        return num_qubits_per_vertex(self.k)

    @property
    def num_qubits(self) -> int:
        return self.graph.num_vertices * self.n_k

    @property
    def space(self) -> str:
        return "subspace" if self.encoding == "subspace" else "full"

    @property
    def relation(self) -> ColorRelation:
        """Relation defining the colors of the qubit labels."""
        if self.encoding == "full_lt":
            return clr_less_than_k(self.k)
        if self.encoding == "full_bal":
            return clr_balanced(self.k)
        return trivial_relation(self.n_k)

    @property
    def mixer_spec(self) -> MixerSpec:
        return MixerSpec(self.mixer, self.k, self.space)

    def resolved_backend(self) -> str:
        if self.backend != "auto":
            return self.backend
        return "restricted" if self.encoding == "subspace" else "full"

    def with_depth(self, p: int) -> "AnsatzConfig":
        return AnsatzConfig(self.graph, self.k, self.encoding, self.mixer, p, self.backend)

    def describe(self) -> dict:
        return {
            "k": self.k,
            "encoding": self.encoding,
            "mixer": self.mixer,
            "p": self.p,
            "backend": self.resolved_backend(),
            "num_vertices": self.graph.num_vertices,
            "num_qubits": self.num_qubits,
            "graph": self.graph.to_dict(),
        }


@dataclass
class RunRecord:
    config: dict
    gammas: list[float]
    betas: list[float]
    expectation: float
    alpha: float
    optimum: float
    wall_time: float
    seed: int | None = None
    evaluations: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls(**json.loads(text))


# ------------------------------------------------------------------ simulator


def _apply_blocks(psi: np.ndarray, block: np.ndarray, num_blocks: int) -> np.ndarray:
    """Apply ``block`` to each of the ``num_blocks`` tensor factors."""
    d = block.shape[0]
    for v in range(num_blocks):
        psi = np.matmul(block, psi.reshape(d**v, d, -1)).reshape(-1)
    return psi


class Simulator:
    """Evaluates the QAOA state for one :class:`AnsatzConfig` (any depth)."""

    def __init__(self, config: AnsatzConfig, max_qubits: int = DEFAULT_MAX_QUBITS):
        self.config = config
        self.backend = config.resolved_backend()
        g = config.graph
        n_v = g.num_vertices
        k, n_k = config.k, config.n_k
        if self.backend == "restricted":
            self.dim_block = k
            digits = k ** np.arange(n_v - 1, -1, -1, dtype=np.int64)
            idx = np.arange(k**n_v, dtype=np.int64)
            colors = (idx[:, None] // digits[None, :]) % k
            self.cost = cost_vector(g, colors)
            self.init_block = np.full(k, 1 / np.sqrt(k), dtype=complex)
        else:
            check_size(config.num_qubits, max_qubits)
            self.dim_block = 2**n_k
            self.cost = cost_diagonal(g, config.relation)
            if config.space == "subspace":
                self.init_block = uniform_subspace_state(k)
            else:
                self.init_block = np.full(2**n_k, 2 ** (-n_k / 2), dtype=complex)
        self.num_blocks = n_v
        # same-color weight; the separator phase is exp(i gamma * same)
        self.same = g.total_weight - self.cost
        self._levels, self._level_idx = np.unique(self.same, return_inverse=True)
        self._optimum: float | None = None

    # state pieces -----------------------------------------------------------

    def initial_state(self) -> np.ndarray:
        psi = np.ones(1, dtype=complex)
        for _ in range(self.num_blocks):
            psi = np.kron(psi, self.init_block)
        return psi

    def phase(self, gamma: float) -> np.ndarray:
        return np.exp(1j * gamma * self._levels)[self._level_idx]

    def mixer_block(self, beta: float) -> np.ndarray:
        """Per-vertex mixer unitary in the backend's block basis."""
        spec = self.config.mixer_spec
        d = self.dim_block
        if spec.kind == "x":
            c, s = np.cos(beta), np.sin(beta)
            one = np.array([[c, -1j * s], [-1j * s, c]])
            out = np.ones((1, 1), dtype=complex)
            for _ in range(self.config.n_k):
                out = np.kron(out, one)
            return out
        if spec.kind == "lx":
            u = unitary(mixer_lx(self.config.k, beta))
            return u[:d, :d]
        # Grover on one register: I - (1 - e^{-i beta}) |f><f|
        f = self.init_block
        return np.eye(d, dtype=complex) - (1 - np.exp(-1j * beta)) * np.outer(f, f.conj())

    def apply_mixer(self, psi: np.ndarray, beta: float, init: np.ndarray | None = None) -> np.ndarray:
        if self.config.mixer == "grover":
            f = self.initial_state() if init is None else init
            return psi - (1 - np.exp(-1j * beta)) * f * np.vdot(f, psi)
        return _apply_blocks(psi, self.mixer_block(beta), self.num_blocks)

    def state(self, gammas: Sequence[float], betas: Sequence[float]) -> np.ndarray:
        if len(gammas) != len(betas):
            raise InvalidArgumentError(
                f"need as many gammas as betas, got {len(gammas)} and {len(betas)}"
            )
        if self.backend == "circuit":
            return run(build_circuit(self.config, gammas, betas))
        init = self.initial_state()
        psi = init.copy()
        for gamma, beta in zip(gammas, betas):
            psi = psi * self.phase(gamma)
            psi = self.apply_mixer(psi, beta, init)
        return psi

    # figures of merit -------------------------------------------------------

    @property
    def optimum(self) -> float:
        if self._optimum is None:
            self._optimum = brute_force_max_kcut(self.config.graph, self.config.k)[0]
        return self._optimum

    def alpha_of(self, expectation: float) -> float:
        opt = self.optimum
        return 1.0 if opt == 0 else expectation / opt

    def expectation(self, gammas, betas, shots: int | None = None,
                    seed: int | None = None) -> float:
        psi = self.state(gammas, betas)
        probs = np.abs(psi) ** 2
        if shots is None:
            return float(np.dot(probs, self.cost))
        rng = np.random.Generator(np.random.PCG64(seed))
        draws = rng.choice(probs.size, size=shots, p=probs / probs.sum())
        return float(self.cost[draws].mean())

    def evaluate(self, gammas, betas, shots: int | None = None,
                 seed: int | None = None) -> tuple[float, float]:
        e = self.expectation(gammas, betas, shots, seed)
        return e, self.alpha_of(e)

    def leaked_probability(self, gammas, betas) -> float:
        """Probability on labels outside ``0..k-1`` (full backend, subspace encoding)."""
        if self.backend == "restricted":
            return 0.0
        psi = self.state(gammas, betas)
        n_k, k = self.config.n_k, self.config.k
        idx = np.arange(psi.size, dtype=np.int64)
        shifts = n_k * np.arange(self.num_blocks, dtype=np.int64)
        labels = (idx[:, None] >> shifts[None, :]) & (2**n_k - 1)
        bad = (labels >= k).any(axis=1)
        return float(np.sum(np.abs(psi[bad]) ** 2))


def evaluate(config: AnsatzConfig, gammas: Sequence[float], betas: Sequence[float],
             shots: int | None = None, seed: int | None = None) -> tuple[float, float]:
    """Cut-value expectation and approximation ratio of the depth-``len(gammas)`` state."""
    return Simulator(config).evaluate(gammas, betas, shots, seed)


# ------------------------------------------------------------------- circuits


def build_circuit(config: AnsatzConfig, gammas: Sequence[float], betas: Sequence[float]) -> Circuit:
    """Explicit gate list of the whole ansatz, initial state included."""
    g = config.graph
    n_k, n_v = config.n_k, g.num_vertices
    n = n_v * n_k
    spec = config.mixer_spec
    block_prep = spec.prep()
    gates: list[Gate] = []
    for v in range(n_v):
        gates.extend(gt.shifted(list(range(v * n_k, (v + 1) * n_k))) for gt in block_prep.gates)
    for gamma, beta in zip(gammas, betas):
        for u, v, w in g.edges:
            t = gamma * w
            if config.encoding == "subspace":
                sep = phase_separator_power2(n_k, t)
            else:
                variant = "less_than" if config.encoding == "full_lt" else "balanced"
                sep = phase_separator(config.k, variant, t)
            mapping = list(range(u * n_k, (u + 1) * n_k)) + list(range(v * n_k, (v + 1) * n_k))
            gates.extend(gt.shifted(mapping) for gt in sep.gates)
        gates.extend(spec.circuit(beta, n_v).gates)
    return Circuit(n, tuple(gates))


# ------------------------------------------------------------------ landscape


def default_ranges(mixer: str) -> tuple[tuple[float, float], tuple[float, float]]:
    """``gamma`` in [0, 2 pi); ``beta`` in [0, pi) for X, [0, 2 pi) otherwise."""
    beta_hi = np.pi if _norm_name(mixer) == "x" else 2 * np.pi
    return (0.0, 2 * np.pi), (0.0, beta_hi)


def grid_axes(mixer: str, resolution: int | tuple[int, int],
              gamma_range=None, beta_range=None) -> tuple[np.ndarray, np.ndarray]:
    """Half-open uniform grids, so periodic ranges do not repeat an endpoint."""
    rg, rb = (resolution, resolution) if isinstance(resolution, int) else resolution
    if rg < 1 or rb < 1:
        raise InvalidArgumentError(f"resolution must be positive, got {resolution}")
    dg, db = default_ranges(mixer)
    g0, g1 = gamma_range or dg
    b0, b1 = beta_range or db
    return g0 + (g1 - g0) * np.arange(rg) / rg, b0 + (b1 - b0) * np.arange(rb) / rb


def _landscape_rows(args) -> np.ndarray:
    config, gammas, betas = args
    sim = Simulator(config)
    init = sim.initial_state()
    out = np.empty((len(gammas), len(betas)))
    for i, gamma in enumerate(gammas):
        phased = init * sim.phase(gamma)
        for j, beta in enumerate(betas):
            psi = sim.apply_mixer(phased, beta, init)
            out[i, j] = sim.alpha_of(float(np.dot(np.abs(psi) ** 2, sim.cost)))
    return out


def landscape(config: AnsatzConfig, gammas: Sequence[float], betas: Sequence[float],
              workers: int = 1) -> np.ndarray:
    """``alpha[i, j]`` at ``(gammas[i], betas[j])`` for depth one.

    With ``workers > 1`` rows are split over processes; results are merged by
    row index so the output does not depend on ``workers``.
    """
    if config.p != 1:
        raise InvalidArgumentError("landscapes are defined for p = 1")
    gammas = np.asarray(gammas, dtype=float)
    betas = np.asarray(betas, dtype=float)
    if config.resolved_backend() == "circuit":
        sim = Simulator(config)
        return np.array([[sim.evaluate([gm], [bt])[1] for bt in betas] for gm in gammas])
    if workers <= 1 or len(gammas) < 2:
        return _landscape_rows((config, gammas, betas))
    chunks = [c for c in np.array_split(gammas, workers) if c.size]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_landscape_rows, [(config, c, betas) for c in chunks]))
    return np.vstack(parts)


def fmt(x: float) -> str:
    return f"{x:.12g}"


def landscape_csv(gammas: Sequence[float], betas: Sequence[float], alpha: np.ndarray) -> str:
    lines = ["gamma,beta,alpha"]
    for i, gm in enumerate(gammas):
        for j, bt in enumerate(betas):
            lines.append(f"{fmt(gm)},{fmt(bt)},{fmt(alpha[i, j])}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ optimizer


@dataclass(frozen=True)
class Strategy:
    """Coarse grid at depth one, then Nelder-Mead; deeper levels start from
    the interpolated schedule of the previous depth."""

    grid: int = 32
    xatol: float = 1e-6
    fatol: float = 1e-6
    maxiter: int = 500
    workers: int = 1
    gamma_range: tuple[float, float] | None = None
    beta_range: tuple[float, float] | None = None


def interpolate(params: Sequence[float]) -> np.ndarray:
    """INTERP rule: depth-``p`` schedule to depth ``p + 1``.

    ``x'_i = (i-1)/p * x_{i-1} + (p-i+1)/p * x_i`` for ``i = 1..p+1`` with
    ``x_0 = x_{p+1} = 0``.
    """
    x = np.asarray(params, dtype=float)
    p = x.size
    padded = np.concatenate([[0.0], x, [0.0]])
    i = np.arange(1, p + 2)
    return (i - 1) / p * padded[i - 1] + (p - i + 1) / p * padded[i]


def _refine(sim: Simulator, x0: np.ndarray, strategy: Strategy) -> tuple[np.ndarray, float, int]:
    p = x0.size // 2

    def neg_alpha(x):
        return -sim.evaluate(x[:p], x[p:])[1]

    res = minimize(
        neg_alpha, x0, method="Nelder-Mead",
        options={"xatol": strategy.xatol, "fatol": strategy.fatol, "maxiter": strategy.maxiter},
    )
    return np.asarray(res.x), float(-res.fun), int(res.nfev)


def optimize(config: AnsatzConfig, strategy: Strategy = Strategy(), seed: int | None = None,
             p_max: int | None = None) -> list[RunRecord]:
    """Optimize depths ``1 .. p_max`` (default ``config.p``); one record per depth.

    Depth ``p + 1`` starts from the interpolated depth-``p`` optimum. The
    depth-``p`` optimum padded with a zero layer realizes the same state, so
    it is kept as a fallback and the returned ratio never drops with depth.
    ``seed`` is stored for provenance; the procedure itself is deterministic.
    """
    p_max = config.p if p_max is None else p_max
    records: list[RunRecord] = []
    sim = Simulator(config)
    t0 = time.perf_counter()
    gammas, betas = grid_axes(config.mixer, strategy.grid, strategy.gamma_range, strategy.beta_range)
    grid = landscape(config.with_depth(1), gammas, betas, strategy.workers)
    i, j = np.unravel_index(int(np.argmax(grid)), grid.shape)
    x0 = np.array([gammas[i], betas[j]])
    grid_best = float(grid[i, j])
    x, a, nfev = _refine(sim, x0, strategy)
    if a < grid_best:
        x, a = x0, grid_best
    records.append(_record(sim, config.with_depth(1), x, t0, seed, nfev + grid.size,
                           {"grid_best_alpha": grid_best}))
    for p in range(2, p_max + 1):
        t0 = time.perf_counter()
        prev = x
        start = np.concatenate([interpolate(prev[: p - 1]), interpolate(prev[p - 1:])])
        x, a_new, nfev = _refine(sim, start, strategy)
        fallback = np.concatenate([prev[: p - 1], [0.0], prev[p - 1:], [0.0]])
        extra = {"start": "interp"}
        if a_new < a:
            x, a_new = fallback, a
            extra["start"] = "previous depth (interp refinement was worse)"
        a = a_new
        records.append(_record(sim, config.with_depth(p), x, t0, seed, nfev, extra))
    return records


def _record(sim, config, x, t0, seed, nfev, extra) -> RunRecord:
    p = x.size // 2
    e, a = sim.evaluate(x[:p], x[p:])
    return RunRecord(
        config=config.describe(),
        gammas=[float(v) for v in x[:p]],
        betas=[float(v) for v in x[p:]],
        expectation=e,
        alpha=a,
        optimum=sim.optimum,
        wall_time=time.perf_counter() - t0,
        seed=seed,
        evaluations=nfev,
        extra=extra,
    )
