"""Deterministic clique-extension graph model.

The generator starts from a complete graph on ``n`` vertices.  At step t
every clique of order f(t) in the previous snapshot is extended by g(t)
new vertices so that the old clique plus the new vertices again forms a
clique.  The g(t) new vertices attached to one extended clique are
called a cap; caps created in the same step are pairwise disjoint and
non-adjacent.  Setting f = 1 grows a cap on every vertex each step (the
cone family); f = g gives the cylinder family.

Everything here is deterministic: cliques are processed in lexicographic
order and vertex ids are dense integers assigned in creation order, so
two runs with equal parameters are bit-identical and the subgraph
induced on the first n_s vertices equals the run stopped at horizon s.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .errors import (
    BudgetExceededError,
    GrowthStallWarning,
    InvalidParamsError,
    SequenceRangeError,
)
from .sequences import SequenceSpec, eval_sequence

DEFAULT_VERTEX_BUDGET = 1_000_000


@dataclass(frozen=True)
class ModelParams:
    """One model instance: seed order, parameter sequences, horizon."""

    n: int
    f: SequenceSpec
    g: SequenceSpec
    horizon: int
    vertex_budget: int = DEFAULT_VERTEX_BUDGET

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("seed order n must be >= 1")
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if self.vertex_budget < 1:
            raise ValueError("vertex_budget must be >= 1")


@dataclass(frozen=True)
class VertexMeta:
    """Birth record of one vertex; cap_id is None for the seed clique."""

    id: int
    birth_time: int
    cap_id: int | None


@dataclass(frozen=True)
class CapRecord:
    """Provenance of one extension: which clique grew, which vertices appeared."""

    cap_id: int
    time: int
    parent_clique: tuple[int, ...]
    new_vertices: tuple[int, ...]


class Graph:
    """Immutable simple undirected graph over dense 0-based vertex ids.

    Neighbor lists are kept sorted; a parallel tuple of frozensets backs
    O(1) adjacency tests.  Instances are safe to share across threads.
    """

    __slots__ = ("neighbors", "edge_count", "_nbr_sets")

    def __init__(self, neighbor_lists):
        rows = tuple(tuple(sorted(set(row))) for row in neighbor_lists)
        n = len(rows)
        for u, row in enumerate(rows):
            for v in row:
                if v == u:
                    raise ValueError(f"loop at vertex {u}")
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} out of range")
        self.neighbors = rows
        self._nbr_sets = tuple(frozenset(row) for row in rows)
        degree_sum = sum(len(row) for row in rows)
        if degree_sum % 2:
            raise ValueError("adjacency is not symmetric")
        for u, row in enumerate(rows):
            for v in row:
                if u not in self._nbr_sets[v]:
                    raise ValueError(f"edge {u}-{v} missing its reverse")
        self.edge_count = degree_sum // 2

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.neighbors]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbor_set(self, v: int) -> frozenset:
        return self._nbr_sets[v]

    def edges(self):
        """Yield edges (u, v) with u < v in ascending lexicographic order."""
        for u, row in enumerate(self.neighbors):
            for v in row:
                if v > u:
                    yield (u, v)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [[] for _ in range(n)]
        for u, v in edges:
            rows[u].append(v)
            rows[v].append(u)
        return cls(rows)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls([[v for v in range(n) if v != u] for u in range(n)])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.neighbors == other.neighbors

    def __hash__(self):
        return hash(self.neighbors)

    def __repr__(self):
        return f"<{type(self).__name__} n={self.n} e={self.edge_count}>"


class FrustumGraph(Graph):
    """Generated graph plus per-vertex birth metadata and cap provenance.

    Vertex ids are assigned seed-first, then step by step in cap order,
    so the vertices with birth_time <= s are exactly ids 0..n_s-1 and
    every earlier snapshot is an id-prefix of this graph.
    """

    __slots__ = ("vertex_meta", "caps", "horizon")

    def __init__(self, neighbor_lists, vertex_meta, caps, horizon: int):
        super().__init__(neighbor_lists)
        self.vertex_meta = tuple(vertex_meta)
        self.caps = tuple(caps)
        self.horizon = int(horizon)
        if len(self.vertex_meta) != self.n:
            raise ValueError("vertex_meta length does not match vertex count")
        for i, meta in enumerate(self.vertex_meta):
            if meta.id != i:
                raise ValueError("vertex_meta ids must be dense and in order")

    def birth_time(self, v: int) -> int:
        return self.vertex_meta[v].birth_time

    def order_at(self, s: int) -> int:
        """Number of vertices born at or before step s."""
        count = 0
        for meta in self.vertex_meta:
            if meta.birth_time > s:
                break
            count += 1
        return count


def seed_graph(n: int) -> FrustumGraph:
    """The step-0 snapshot: a complete graph on n seed vertices."""
    rows = [[v for v in range(n) if v != u] for u in range(n)]
    meta = [VertexMeta(u, 0, None) for u in range(n)]
    return FrustumGraph(rows, meta, (), 0)


def validate_params(params: ModelParams) -> list[str]:
    """Check a model instance; return every violation, empty list when ok.

    Checks, over the full horizon: both sequences evaluate to integers
    >= 1 and are non-decreasing; the seed feasibility conditions
    f(0) <= n and n < f(0) + g(0); and the growth-feasibility condition
    f(t) <= f(t-1) + g(t-1) at every step, which keeps every vertex
    inside at least one extendable clique.
    """
    violations: list[str] = []
    series: dict[str, list[int] | None] = {}
    for name, spec in (("f", params.f), ("g", params.g)):
        values = []
        for t in range(0, params.horizon + 1):
            try:
                values.append(eval_sequence(spec, t))
            except SequenceRangeError as exc:
                violations.append(f"{name}: {exc}")
                values = None
                break
        series[name] = values
        if values is not None:
            for t in range(2, params.horizon + 1):
                if values[t] < values[t - 1]:
                    violations.append(
                        f"{name} is not non-decreasing: {name}({t})={values[t]} "
                        f"< {name}({t - 1})={values[t - 1]}"
                    )
    f_vals, g_vals = series["f"], series["g"]
    if f_vals is not None:
        if f_vals[0] > params.n:
            violations.append(f"f(0)={f_vals[0]} exceeds the seed order n={params.n}")
    if f_vals is not None and g_vals is not None:
        if params.n >= f_vals[0] + g_vals[0]:
            violations.append(
                f"seed order n={params.n} is not below f(0)+g(0)={f_vals[0] + g_vals[0]}"
            )
        for t in range(1, params.horizon + 1):
            if f_vals[t] > f_vals[t - 1] + g_vals[t - 1]:
                violations.append(
                    f"f({t})={f_vals[t]} exceeds f({t - 1})+g({t - 1})="
                    f"{f_vals[t - 1] + g_vals[t - 1]}; growth would strand vertices"
                )
    return violations


def enumerate_k_cliques(graph: Graph, k: int) -> list[list[int]]:
    """All k-cliques of ``graph`` as sorted id lists, in lexicographic order.

    k = 1 lists every vertex, k = 2 every edge.  The order is part of
    the contract: cap creation and therefore vertex id assignment follow
    it.
    """
    if k < 1:
        raise ValueError(f"clique order must be >= 1, got {k}")
    nbr_sets = graph._nbr_sets
    out: list[list[int]] = []
    prefix: list[int] = []

    def extend(candidates: list[int], depth: int):
        if depth == k:
            out.append(prefix.copy())
            return
        remaining = k - depth
        for i, v in enumerate(candidates):
            if len(candidates) - i < remaining:
                break
            prefix.append(v)
            nbrs = nbr_sets[v]
            extend([w for w in candidates[i + 1 :] if w in nbrs], depth + 1)
            prefix.pop()

    extend(list(range(graph.n)), 0)
    return out


def clique_membership_counts(graph: Graph, k: int) -> list[int]:
    """For each vertex, how many k-cliques of the graph contain it."""
    counts = [0] * graph.n
    for clique in enumerate_k_cliques(graph, k):
        for v in clique:
            counts[v] += 1
    return counts


def extend_step(
    graph: FrustumGraph,
    t: int,
    f_t: int,
    g_t: int,
    vertex_budget: int | None = None,
) -> FrustumGraph:
    """Apply one growth step to the snapshot at time t-1.

    Each f_t-clique, in lexicographic order, receives a cap of g_t new
    vertices; ids continue densely in that order.  Projected counts are
    checked against ``vertex_budget`` before anything is allocated.  A
    step that finds no f_t-clique is legal but growth has stalled, which
    is reported as a :class:`GrowthStallWarning`.
    """
    if t < 1:
        raise ValueError("growth steps start at t=1")
    if f_t < 1 or g_t < 1:
        raise ValueError("f and g must be >= 1")
    cliques = enumerate_k_cliques(graph, f_t)
    if not cliques:
        warnings.warn(
            f"step {t}: no clique of order {f_t} exists; graph did not grow",
            GrowthStallWarning,
            stacklevel=2,
        )
        return FrustumGraph(graph.neighbors, graph.vertex_meta, graph.caps, t)

    # Python ints are unbounded, so the projection itself cannot overflow;
    # the budget check is what keeps allocation sane.
    projected_n = graph.n + g_t * len(cliques)
    if vertex_budget is not None and projected_n > vertex_budget:
        raise BudgetExceededError(t, projected_n, vertex_budget)

    rows = [list(row) for row in graph.neighbors]
    meta = list(graph.vertex_meta)
    caps = list(graph.caps)
    next_id = graph.n
    for clique in cliques:
        new_ids = list(range(next_id, next_id + g_t))
        next_id += g_t
        cap_id = len(caps)
        for u in clique:
            rows[u].extend(new_ids)
        for v in new_ids:
            # all prior ids sort below the new ones, so rows stay sorted
            rows.append(clique + [w for w in new_ids if w != v])
            meta.append(VertexMeta(v, t, cap_id))
        caps.append(CapRecord(cap_id, t, tuple(clique), tuple(new_ids)))
    return FrustumGraph(rows, meta, caps, t)


def generate(params: ModelParams) -> FrustumGraph:
    """Run the model to its horizon and return the final snapshot.

    Raises :class:`InvalidParamsError` when validate_params reports
    violations, and propagates budget errors from individual steps.
    """
    violations = validate_params(params)
    if violations:
        raise InvalidParamsError(violations)
    graph = seed_graph(params.n)
    for t in range(1, params.horizon + 1):
        f_t = eval_sequence(params.f, t)
        g_t = eval_sequence(params.g, t)
        graph = extend_step(graph, t, f_t, g_t, params.vertex_budget)
    return graph


def snapshot_at(graph: FrustumGraph, s: int) -> FrustumGraph:
    """The snapshot at time s: induced subgraph on vertices born <= s.

    Because ids are assigned in birth order this is an id-prefix, and it
    equals the generator's output run to horizon s.
    """
    if not 0 <= s <= graph.horizon:
        raise ValueError(f"snapshot time {s} outside [0, {graph.horizon}]")
    if s == graph.horizon:
        return graph
    n_s = graph.order_at(s)
    rows = [[v for v in row if v < n_s] for row in graph.neighbors[:n_s]]
    caps = tuple(c for c in graph.caps if c.time <= s)
    return FrustumGraph(rows, graph.vertex_meta[:n_s], caps, s)


def snapshots(graph: FrustumGraph) -> list[FrustumGraph]:
    """All snapshots 0..horizon, earliest first."""
    return [snapshot_at(graph, s) for s in range(graph.horizon + 1)]


def step_vertex_delta(f_t: int, g_t: int, clique_count: int) -> int:
    """Exact number of vertices one step adds: g_t per extended clique."""
    return g_t * clique_count


def step_edge_delta(f_t: int, g_t: int, clique_count: int) -> int:
    """Exact number of edges one step adds per the extension rule."""
    return (comb(f_t + g_t, 2) - comb(f_t, 2)) * clique_count
