"""Measured graph quantities, computed directly on the graph.

This module is the brute-force side of every closed-form check: BFS
distances, Wiener index, clustering, degrees and clique counts are all
obtained by direct computation, in exact integer or rational arithmetic.
Floating point appears nowhere here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DisconnectedGraphError, StalledStepError
from .model import FrustumGraph, Graph, enumerate_k_cliques

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceTable:
    """BFS distances from one source; UNREACHABLE marks other components."""

    source: int
    dist: tuple[int, ...]


def bfs_distances(graph: Graph, source: int) -> DistanceTable:
    dist = [UNREACHABLE] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in graph.neighbors[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return DistanceTable(source, tuple(dist))


def all_pairs_distances(graph: Graph) -> list[DistanceTable]:
    """One BFS table per source; does not assume connectivity."""
    return [bfs_distances(graph, s) for s in range(graph.n)]


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(graph, 0).dist


def connected_components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    components = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in graph.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        components.append(sorted(comp))
    return components


def diameter(graph: Graph) -> int:
    """Largest BFS distance over all pairs; 0 for a single vertex."""
    best = 0
    for source in range(graph.n):
        table = bfs_distances(graph, source)
        far = max(table.dist)
        if UNREACHABLE in table.dist:
            raise DisconnectedGraphError("diameter of a disconnected graph")
        best = max(best, far)
    return best


def wiener_index(graph: Graph) -> int:
    """Sum of distances over unordered pairs, as an exact integer."""
    total = 0
    for source in range(graph.n):
        table = bfs_distances(graph, source)
        if UNREACHABLE in table.dist:
            raise DisconnectedGraphError("Wiener index of a disconnected graph")
        total += sum(table.dist)
    # every unordered pair was counted once from each endpoint
    return total // 2


def average_distance(graph: Graph) -> Fraction:
    """Wiener index divided by the number of pairs, exact."""
    if graph.n < 2:
        raise ValueError("average distance needs at least two vertices")
    return Fraction(wiener_index(graph), comb(graph.n, 2))


def local_clustering(graph: Graph, x: int) -> Fraction:
    """Edges among the neighbors of x over the pairs of neighbors.

    Vertices of degree < 2 have no neighbor pair; their coefficient is
    defined as 0.
    """
    nbrs = graph.neighbors[x]
    if len(nbrs) < 2:
        return Fraction(0)
    links = 0
    for u, v in combinations(nbrs, 2):
        if graph.adjacent(u, v):
            links += 1
    return Fraction(links, comb(len(nbrs), 2))


def global_clustering(graph: Graph) -> Fraction:
    """Arithmetic mean of the local coefficients over all vertices."""
    if graph.n == 0:
        raise ValueError("clustering of the empty graph")
    return Fraction(sum(local_clustering(graph, x) for x in range(graph.n)), graph.n)


def degree_at(graph: FrustumGraph, x: int, s: int) -> int:
    """Degree of x in the snapshot at time s."""
    if graph.vertex_meta[x].birth_time > s:
        raise ValueError(f"vertex {x} is not born at time {s}")
    n_s = graph.order_at(s)
    return sum(1 for v in graph.neighbors[x] if v < n_s)


def clique_count_containing(graph: Graph, k: int, u: int) -> int:
    """Number of k-cliques of the graph that contain vertex u.

    Counted by enumerating (k-1)-cliques in the subgraph induced on the
    neighbors of u.
    """
    if k < 1:
        raise ValueError(f"clique order must be >= 1, got {k}")
    if not 0 <= u < graph.n:
        raise ValueError(f"vertex {u} out of range")
    if k == 1:
        return 1
    nbrs = graph.neighbors[u]
    index = {v: i for i, v in enumerate(nbrs)}
    rows = [[] for _ in nbrs]
    for a, b in combinations(nbrs, 2):
        if graph.adjacent(a, b):
            rows[index[a]].append(index[b])
            rows[index[b]].append(index[a])
    return len(enumerate_k_cliques(Graph(rows), k - 1))


@dataclass(frozen=True)
class StepIncrement:
    """Exact per-step growth: vertex delta, edge delta, and their ratio."""

    t: int
    vertex_delta: int
    edge_delta: int
    ratio: Fraction


def increment_series(snapshots) -> list[StepIncrement]:
    """Per-step increments along a trajectory of consecutive snapshots.

    Raises :class:`StalledStepError` when a step created no vertices,
    since the densifying ratio is undefined there.
    """
    snaps = list(snapshots)
    if len(snaps) < 2:
        raise ValueError("need at least two snapshots")
    out = []
    for t in range(1, len(snaps)):
        dn = snaps[t].n - snaps[t - 1].n
        de = snaps[t].edge_count - snaps[t - 1].edge_count
        if dn == 0:
            raise StalledStepError(f"step {t} created no vertices")
        out.append(StepIncrement(t, dn, de, Fraction(de, dn)))
    return out


@dataclass(frozen=True)
class StepMetrics:
    """Everything measured on one snapshot; None marks undefined entries."""

    t: int
    n: int
    e: int
    ratio: Fraction
    diameter: int | None
    wiener: int | None
    avg_distance: Fraction | None
    clustering: Fraction | None
    degree_histogram: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class MetricsReport:
    steps: tuple[StepMetrics, ...]


def measure_snapshot(
    graph: Graph,
    t: int,
    with_distances: bool = True,
    with_clustering: bool = True,
) -> StepMetrics:
    diam = wiener = avg = None
    if with_distances:
        try:
            diam = diameter(graph)
            wiener = wiener_index(graph)
            avg = average_distance(graph) if graph.n >= 2 else None
        except DisconnectedGraphError:
            diam = wiener = avg = None
    clustering = global_clustering(graph) if with_clustering else None
    hist: dict[int, int] = {}
    for d in graph.degrees():
        hist[d] = hist.get(d, 0) + 1
    return StepMetrics(
        t=t,
        n=graph.n,
        e=graph.edge_count,
        ratio=Fraction(graph.edge_count, graph.n),
        diameter=diam,
        wiener=wiener,
        avg_distance=avg,
        clustering=clustering,
        degree_histogram=tuple(sorted(hist.items())),
    )


def metrics_report(
    snapshots,
    with_distances: bool = True,
    with_clustering: bool = True,
) -> MetricsReport:
    steps = tuple(
        measure_snapshot(snap, t, with_distances, with_clustering)
        for t, snap in enumerate(snapshots)
    )
    return MetricsReport(steps)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, tuple):
        return ",".join(f"{d}:{c}" for d, c in value)
    return str(value)


def render_metrics_report(report: MetricsReport) -> str:
    """Canonical text form: one line per step, fixed field order.

    Rationals are printed in lowest terms as p/q (denominator omitted
    when it is 1), so equal reports are byte-identical.
    """
    lines = []
    for s in report.steps:
        lines.append(
            f"t={s.t} n={s.n} e={s.e} ratio={_fmt(s.ratio)} diam={_fmt(s.diameter)} "
            f"wiener={_fmt(s.wiener)} avgdist={_fmt(s.avg_distance)} "
            f"clustering={_fmt(s.clustering)} degrees={_fmt(s.degree_histogram)}"
        )
    return "\n".join(lines) + "\n"
