"""Weighted graphs, seeded instance generators, file I/O and the exhaustive
MAX k-CUT oracle.

Random instances are drawn from numpy's PCG64 bit generator (64-bit state,
explicit integer seed), so a given ``seed`` produces the same graph on every
platform and numpy version that ships PCG64.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    GraphParseError,
    InvalidArgumentError,
    InvalidAssignmentError,
    SizeLimitError,
)

DEFAULT_ENUMERATION_CAP = 10**8
DEFAULT_MAX_WITNESSES = 4096

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class Graph:
    """Weighted undirected simple graph on vertices ``0 .. num_vertices-1``.

    Edges are stored normalized as ``(u, v, w)`` with ``u < v`` and sorted
    ascending by ``(u, v)``; that order is also the summation order used by
    every cost routine, which keeps brute force and cost diagonals bitwise
    consistent.
    """

    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if int(self.num_vertices) != self.num_vertices or self.num_vertices < 1:
            raise InvalidArgumentError(
                f"num_vertices must be a positive integer, got {self.num_vertices!r}"
            )
        normalized = []
        seen = set()
        for edge in self.edges:
            u, v, w = _check_edge(edge, self.num_vertices)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidArgumentError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], w))
        normalized.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "num_vertices", int(self.num_vertices))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    def to_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "edges": [[u, v, w] for u, v, w in self.edges],
        }

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.num_vertices)):
            raise InvalidArgumentError("perm must be a permutation of the vertices")
        return Graph(
            self.num_vertices, tuple((perm[u], perm[v], w) for u, v, w in self.edges)
        )


def _check_edge(edge, num_vertices: int) -> Edge:
    try:
        u, v, w = edge
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"edge must be a (u, v, w) triple, got {edge!r}")
    if isinstance(u, bool) or isinstance(v, bool):
        raise InvalidArgumentError(f"vertex ids must be integers, got {edge!r}")
    if int(u) != u or int(v) != v:
        raise InvalidArgumentError(f"vertex ids must be integers, got {edge!r}")
    u, v = int(u), int(v)
    if not (0 <= u < num_vertices and 0 <= v < num_vertices):
        raise InvalidArgumentError(
            f"edge ({u}, {v}) references a vertex outside 0..{num_vertices - 1}"
        )
    if u == v:
        raise InvalidArgumentError(f"self-loop on vertex {u}")
    try:
        w = float(w)
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"edge weight must be numeric, got {w!r}")
    if not math.isfinite(w) or w <= 0:
        raise InvalidArgumentError(f"edge weight must be finite and > 0, got {w!r}")
    return u, v, w


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------- cost


def check_assignment(g: Graph, colors: Sequence[int], k: int | None = None) -> np.ndarray:
    arr = np.asarray(colors)
    if arr.ndim != 1 or arr.shape[0] != g.num_vertices:
        raise InvalidAssignmentError(
            f"assignment has length {arr.shape[0] if arr.ndim == 1 else arr.shape}, "
            f"graph has {g.num_vertices} vertices"
        )
    if arr.size and (not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0):
        raise InvalidAssignmentError("colors must be non-negative integers")
    if k is not None and arr.size and arr.max() >= k:
        raise InvalidAssignmentError(f"color {int(arr.max())} out of range for k={k}")
    return arr


def cost(g: Graph, colors: Sequence[int], k: int | None = None) -> float:
    """Total weight of edges whose endpoints receive different colors."""
    arr = check_assignment(g, colors, k)
    total = 0.0
    for u, v, w in g.edges:
        if arr[u] != arr[v]:
            total += w
    return total


def cost_vector(g: Graph, colors: np.ndarray) -> np.ndarray:
    """Cut values for a batch of assignments, ``colors`` shaped ``(batch, |V|)``.

    Accumulates edge by edge in graph order, matching :func:`cost`.
    """
    colors = np.asarray(colors)
    out = np.zeros(colors.shape[0])
    for u, v, w in g.edges:
        out += w * (colors[:, u] != colors[:, v])
    return out


def brute_force_max_kcut(
    g: Graph,
    k: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    chunk: int = 1 << 18,
) -> tuple[float, list[tuple[int, ...]]]:
    """Exact MAX k-CUT by enumeration.

    Vertex 0 is pinned to color 0, which loses no optimum because the cost is
    invariant under relabeling colors. Returns the optimum and up to
    ``max_witnesses`` optimal assignments (all with vertex 0 colored 0).

    Raises:
        SizeLimitError: if ``k ** num_vertices`` exceeds ``cap``.
    """
    if int(k) != k or k < 2:
        raise InvalidArgumentError(f"k must be an integer >= 2, got {k!r}")
    n = g.num_vertices
    if k**n > cap:
        raise SizeLimitError(f"{k}^{n} = {k**n} assignments exceed the cap of {cap}")
    free = n - 1
    total = k**free
    radix = k ** np.arange(free - 1, -1, -1, dtype=np.int64)
    best = -math.inf
    witnesses: list[tuple[int, ...]] = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        colors = np.zeros((idx.size, n), dtype=np.int64)
        if free:
            colors[:, 1:] = (idx[:, None] // radix[None, :]) % k
        values = cost_vector(g, colors)
        chunk_best = values.max()
        if chunk_best > best:
            best = chunk_best
            witnesses = []
        if chunk_best == best and len(witnesses) < max_witnesses:
            hits = np.flatnonzero(values == best)[: max_witnesses - len(witnesses)]
            witnesses.extend(tuple(int(c) for c in colors[i]) for i in hits)
    return float(best), witnesses


# ---------------------------------------------------------------- generators


def generate_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with unit weights; pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"edge probability must lie in [0, 1], got {p}")
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    rng = _rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    draws = rng.random(len(pairs))
    return Graph(n, tuple((u, v, 1.0) for (u, v), r in zip(pairs, draws) if r < p))


def generate_barabasi_albert(
    n: int,
    m: int,
    seed: int,
    weight_low: float = 1.0,
    weight_high: float = 1.0,
) -> Graph:
    """Preferential-attachment graph.

    Construction: start from the complete graph on vertices ``0 .. m-1``,
    then add vertices ``m .. n-1`` one at a time, each joined to ``m``
    distinct earlier vertices drawn with probability proportional to their
    current degree (uniformly while every degree is zero). The edge count is
    therefore ``m*(m-1)/2 + m*(n-m)``; e.g. 17 for ``n=10, m=2``.
    Edge weights are uniform on ``[weight_low, weight_high]``.
    """
    if not 1 <= m < n:
        raise InvalidArgumentError(f"need 1 <= m < n, got m={m}, n={n}")
    if not (weight_low > 0 and weight_high >= weight_low):
        raise InvalidArgumentError(
            f"need 0 < weight_low <= weight_high, got [{weight_low}, {weight_high}]"
        )
    rng = _rng(seed)
    pairs = [(u, v) for u in range(m) for v in range(u + 1, m)]
    degree = np.zeros(n)
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    for new in range(m, n):
        weights = degree[:new]
        probs = None if weights.sum() == 0 else weights / weights.sum()
        targets = rng.choice(new, size=m, replace=False, p=probs)
        for t in sorted(int(t) for t in targets):
            pairs.append((t, new))
            degree[t] += 1
            degree[new] += 1
    w = rng.uniform(weight_low, weight_high, size=len(pairs))
    return Graph(n, tuple((u, v, float(x)) for (u, v), x in zip(pairs, w)))


# ---------------------------------------------------------------- I/O


def save_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        json.dump(g.to_dict(), fh, indent=1)
        fh.write("\n")


def load_graph(path: str | os.PathLike) -> Graph:
    """Read a graph from JSON or from a whitespace-separated edge list.

    The edge-list form has one ``u v w`` (or ``u v`` for unit weight) per
    line; ``#`` starts a comment and the vertex count is the largest id + 1.
    """
    with open(path) as fh:
        text = fh.read()
    return parse_graph(text)


def parse_graph(text: str) -> Graph:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def _edge_lines(text: str) -> list[int]:
    """Line numbers where each element of the top-level "edges" array starts."""
    key = text.find('"edges"')
    if key < 0:
        return []
    pos = text.find("[", key)
    depth, lines = 0, []
    for i in range(pos, len(text)):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                lines.append(text.count("\n", 0, i) + 1)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return lines


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from exc
    if not isinstance(data, dict) or "num_vertices" not in data or "edges" not in data:
        raise GraphParseError('expected an object with "num_vertices" and "edges"', 1)
    n = data["num_vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphParseError(f"num_vertices must be a positive integer, got {n!r}")
    if not isinstance(data["edges"], list):
        raise GraphParseError('"edges" must be a list')
    lines = _edge_lines(text)
    edges, seen = [], set()
    for i, edge in enumerate(data["edges"]):
        line = lines[i] if i < len(lines) else None
        if not isinstance(edge, list) or len(edge) != 3:
            raise GraphParseError(f"edge #{i} must be [u, v, w], got {edge!r}", line)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in edge[:2]):
            raise GraphParseError(f"edge #{i} has non-integer vertex ids", line)
        if isinstance(edge[2], bool) or not isinstance(edge[2], (int, float)):
            raise GraphParseError(f"edge #{i} has a non-numeric weight", line)
        try:
            u, v, w = _check_edge(edge, n)
        except InvalidArgumentError as exc:
            raise GraphParseError(f"edge #{i}: {exc}", line) from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"edge #{i}: duplicate edge {key}", line)
        seen.add(key)
        edges.append((u, v, w))
    return Graph(n, tuple(edges))


def _parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphParseError(f"expected 'u v w', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphParseError(f"cannot parse {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("vertex ids must be non-negative", lineno)
        rows.append((lineno, u, v, w))
    if not rows:
        raise GraphParseError("no edges found")
    n = max(max(u, v) for _, u, v, _ in rows) + 1
    seen = set()
    for lineno, u, v, w in rows:
        try:
            _check_edge((u, v, w), n)
        except InvalidArgumentError as exc:
            raise GraphParseError(str(exc), lineno) from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph(n, tuple((u, v, w) for _, u, v, w in rows))


def graph_from_edges(edges: Iterable[Sequence], num_vertices: int | None = None) -> Graph:
    """Convenience constructor accepting ``(u, v)`` or ``(u, v, w)`` tuples."""
    triples = [(e[0], e[1], e[2] if len(e) > 2 else 1.0) for e in edges]
    if num_vertices is None:
        num_vertices = 1 + max((max(u, v) for u, v, _ in triples), default=0)
    return Graph(num_vertices, tuple(triples))
