"""Arbitration of every closed form against brute-force measurement.

The built-in calibration suite generates a battery of model instances,
measures them with :mod:`frustum.metrics`, evaluates the closed forms
from :mod:`frustum.oracles` and :mod:`frustum.spectral`, and emits one
row per check.  Exact quantities must match exactly; eigenvalue-based
checks carry a 1e-9 slack.  Checks of statements that are inherently
asymptotic are reported with the verdict ``not-applicable`` and never
gate the outcome.

The Wiener closed-form candidates are the reason this module exists:
they disagree, so the suite records the match status of each and
requires that exactly one candidate, the pair-partition recurrence,
matches brute force on every calibration run.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .metrics import (
    all_pairs_distances,
    average_distance,
    degree_at,
    diameter,
    global_clustering,
    increment_series,
    wiener_index,
)
from .model import (
    Graph,
    ModelParams,
    clique_membership_counts,
    enumerate_k_cliques,
    generate,
    snapshots,
)
from .oracles import (
    RECOMMENDED_WIENER_CANDIDATE,
    cone_avg_distance_scale,
    cone_clustering_bound,
    cone_degree_closed,
    cone_diameter_closed,
    cone_edges_closed,
    cone_order_closed,
    cone_wiener_closed,
    cylinder_constant_closed,
    densification_diagnostic,
)
from .sequences import eval_sequence, parse_sequence_spec
from .spectral import SLACK, mixing_check, spectral_report

MATCH = "match"
MISMATCH = "mismatch"
NOT_APPLICABLE = "not-applicable"

_DISTANCE_HORIZON = 4
_WIENER_HORIZON = 3
_SPECTRAL_TIMES = (1, 2, 3, 4)
_MIXING_MAX_ORDER = 12


@dataclass(frozen=True)
class ValidationRow:
    quantity: str
    instance: str
    t: int | None
    expected: str
    measured: str
    verdict: str
    mandatory: bool


@dataclass(frozen=True)
class ValidationReport:
    rows: tuple[ValidationRow, ...]
    wiener_winners: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return not any(r.mandatory and r.verdict == MISMATCH for r in self.rows)

    @property
    def failures(self) -> list[ValidationRow]:
        return [r for r in self.rows if r.mandatory and r.verdict == MISMATCH]


def _params(n, f, g, horizon) -> ModelParams:
    return ModelParams(n=n, f=parse_sequence_spec(f), g=parse_sequence_spec(g), horizon=horizon)


#: Cone instances (seed K_1, f = 1) with closed forms for every quantity.
CONE_INSTANCES: list[tuple[str, ModelParams]] = [
    ("cone-table-1-1", _params(1, "constant:1", "table:1,1", 2)),
    ("cone-table-2", _params(1, "constant:1", "table:2", 1)),
    ("cone-const-2", _params(1, "constant:1", "constant:2", 5)),
    ("cone-linear", _params(1, "constant:1", "affine:1,0", 6)),
]

#: Constant cylinder instances (f = g = n on seed K_n).
CYLINDER_INSTANCES: list[tuple[int, int, str, ModelParams]] = [
    (1, 3, "cylinder-const-1", _params(1, "constant:1", "constant:1", 3)),
    (2, 3, "cylinder-const-2", _params(2, "constant:2", "constant:2", 3)),
]

#: Instances for the clique-count recurrence and lower-bound checks.
CLIQUE_INSTANCES: list[tuple[str, ModelParams]] = [
    ("frus-3-2-2", _params(3, "constant:2", "constant:2", 3)),
    ("frus-2-2-1", _params(2, "constant:2", "constant:1", 3)),
]

#: Battery for the per-step identities: >= 20 valid instances, T <= 4,
#: covering f = 1, f = 2, f = 3, the growing cylinder, and table specs.
BATTERY: list[tuple[str, ModelParams]] = [
    ("bat-cone-g1", _params(1, "constant:1", "constant:1", 4)),
    ("bat-cone-g2", _params(1, "constant:1", "constant:2", 4)),
    ("bat-cone-g3", _params(1, "constant:1", "constant:3", 3)),
    ("bat-cone-gt", _params(1, "constant:1", "affine:1,0", 4)),
    ("bat-cone-gt1", _params(1, "constant:1", "affine:1,1", 3)),
    ("bat-cone-g2t", _params(1, "constant:1", "affine:2,0", 3)),
    ("bat-cone-gtable", _params(1, "constant:1", "table:1,1,2,3", 4)),
    ("bat-cone-n2", _params(2, "constant:1", "constant:2", 3)),
    ("bat-cylinder-tt", _params(1, "affine:1,0", "affine:1,0", 4)),
    ("bat-cylinder-n1", _params(1, "constant:1", "constant:1", 3)),
    ("bat-cylinder-n2", _params(2, "constant:2", "constant:2", 3)),
    ("bat-cylinder-tables", _params(1, "table:1,2,2", "table:1,2,2", 3)),
    ("bat-f2-g1-n2", _params(2, "constant:2", "constant:1", 3)),
    ("bat-f2-gaffine", _params(2, "constant:2", "affine:1,1", 3)),
    ("bat-f2-g2-n3", _params(3, "constant:2", "constant:2", 3)),
    ("bat-f3-gt-n3", _params(3, "constant:3", "affine:1,0", 3)),
    ("bat-f4-g2-n4", _params(4, "constant:4", "constant:2", 2)),
    ("bat-f2-gtable", _params(2, "constant:2", "table:2,3,4", 3)),
    ("bat-ftable-g2", _params(2, "table:2,2,3", "constant:2", 3)),
    ("bat-f3-g2-n3", _params(3, "constant:3", "constant:2", 3)),
    ("bat-f3-g3-n3", _params(3, "constant:3", "constant:3", 2)),
    ("bat-f3-g2-n4", _params(4, "constant:3", "constant:2", 2)),
]

#: Plain graphs that join the exhaustive mixing checks.
GENERIC_SMALL_GRAPHS: list[tuple[str, Graph]] = [
    ("complete-2", Graph.complete(2)),
    ("complete-3", Graph.complete(3)),
    ("complete-4", Graph.complete(4)),
    ("complete-5", Graph.complete(5)),
    ("star-3", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])),
    ("path-3", Graph.from_edges(3, [(0, 1), (1, 2)])),
    ("star-11", Graph.from_edges(12, [(0, v) for v in range(1, 12)])),
    ("path-12", Graph.from_edges(12, [(v, v + 1) for v in range(11)])),
]


def _row(rows, quantity, instance, t, expected, measured, mandatory=True):
    verdict = MATCH if str(expected) == str(measured) else MISMATCH
    rows.append(
        ValidationRow(quantity, instance, t, str(expected), str(measured), verdict, mandatory)
    )


def _bound_row(rows, quantity, instance, t, ok, bound_text, measured, mandatory=True):
    rows.append(
        ValidationRow(
            quantity,
            instance,
            t,
            bound_text,
            str(measured),
            MATCH if ok else MISMATCH,
            mandatory,
        )
    )


def _info_row(rows, quantity, instance, t, expected, measured):
    rows.append(
        ValidationRow(quantity, instance, t, str(expected), str(measured), NOT_APPLICABLE, False)
    )


def _cap_parent(cap) -> int:
    # cone caps extend a single vertex
    return cap.parent_clique[0]


def _distance_law_rows(rows, name, snaps, t):
    """The three distance recurrences, checked over every applicable pair."""
    prev, cur = snaps[t - 1], snaps[t]
    n_prev = prev.n
    dist_prev = [table.dist for table in all_pairs_distances(prev)]
    dist_cur = [table.dist for table in all_pairs_distances(cur)]
    parent_of = {}
    for cap in cur.caps:
        if cap.time == t:
            for v in cap.new_vertices:
                parent_of[v] = _cap_parent(cap)
    bad = None
    for x in range(n_prev):
        for y in range(x + 1, n_prev):
            if dist_cur[x][y] != dist_prev[x][y]:
                bad = f"old pair ({x},{y}): {dist_cur[x][y]} != {dist_prev[x][y]}"
                break
        if bad:
            break
    if not bad:
        for v, y in parent_of.items():
            for x in range(n_prev):
                if x == y:
                    continue
                if dist_cur[x][v] != dist_prev[x][y] + 1:
                    bad = f"old-new pair ({x},{v}): {dist_cur[x][v]} != {dist_prev[x][y]}+1"
                    break
            if bad:
                break
    if not bad:
        news = sorted(parent_of)
        for i, v in enumerate(news):
            for w in news[i + 1 :]:
                x, y = parent_of[v], parent_of[w]
                if x == y:
                    expected = 1  # same cap: the cap is a clique
                else:
                    expected = dist_prev[x][y] + 2
                if dist_cur[v][w] != expected:
                    bad = f"new pair ({v},{w}): {dist_cur[v][w]} != {expected}"
                    break
            if bad:
                break
    _row(rows, "distance-laws", name, t, "all pairs obey the recurrences", bad or
         "all pairs obey the recurrences")


def _cone_rows(rows, name, params, wiener_match_sets):
    g = params.g
    graph = generate(params)
    snaps = snapshots(graph)
    horizon = params.horizon
    for t in range(horizon + 1):
        snap = snaps[t]
        _row(rows, "order", name, t, cone_order_closed(g, t), snap.n)
        _row(rows, "edges", name, t, cone_edges_closed(g, t), snap.edge_count)
    for t in range(1, min(horizon, _DISTANCE_HORIZON) + 1):
        _row(rows, "diameter", name, t, cone_diameter_closed(t), diameter(snaps[t]))
        _distance_law_rows(rows, name, snaps, t)
    for t in range(1, horizon + 1):
        snap = snaps[t]
        bad = None
        for meta in snap.vertex_meta:
            birth = max(meta.birth_time, 1)  # n=1 seeds grow like first-step vertices
            want = cone_degree_closed(g, birth, t)
            got = degree_at(graph, meta.id, t)
            if got != want:
                bad = f"vertex {meta.id}: {got} != {want}"
                break
        _row(rows, "degree", name, t, "sum of g over life", bad or "sum of g over life")
        bound = cone_clustering_bound(g, t)
        measured = global_clustering(snap)
        # the bound is only derivable when the step adds caps of >= 2
        # vertices (each newborn's neighborhood is then a clique, so its
        # coefficient is 1); steps with g(t) = 1 add triangle-free leaves
        # and genuinely undercut it, so they are recorded without gating
        _bound_row(rows, "clustering-bound", name, t, measured >= bound,
                   f">= {bound}", measured, mandatory=eval_sequence(g, t) >= 2)
    for t in range(min(horizon, _WIENER_HORIZON) + 1):
        brute = wiener_index(snaps[t])
        candidates = cone_wiener_closed(g, t)
        for label, value in candidates.as_pairs():
            mandatory = label == RECOMMENDED_WIENER_CANDIDATE
            _row(rows, f"wiener[{label}]", name, t, value, brute, mandatory=mandatory)
            wiener_match_sets.setdefault(label, True)
            if value != brute:
                wiener_match_sets[label] = False
        if snaps[t].n >= 2:
            lhs = average_distance(snaps[t]) * comb(snaps[t].n, 2)
            _row(rows, "wiener-consistency", name, t, brute, lhs)
    for t in _SPECTRAL_TIMES:
        if t > horizon:
            continue
        snap = snaps[t]
        report = spectral_report(snap)
        if t >= 2:
            _bound_row(
                rows,
                "spectral-gap",
                name,
                t,
                report.lambda_gap >= 0.5 - SLACK,
                ">= 0.5",
                f"{report.lambda_gap:.9f}",
            )
        else:
            # the lower-bound argument needs edges before the step; at t=1
            # the seed has none, so the value is recorded without a verdict
            _info_row(rows, "spectral-gap", name, t, ">= 0.5 (asserted from t=2)",
                      f"{report.lambda_gap:.9f}")
        newborns = [m.id for m in snap.vertex_meta if m.birth_time == t]
        prev = snaps[t - 1]
        g_t = eval_sequence(g, t)
        check = mixing_check(snap, newborns, report.lambda_gap)
        _row(rows, "volume-newborns", name, t, prev.n * g_t * g_t, check.vol_x)
        _row(rows, "volume-graph", name, t,
             2 * prev.edge_count + (g_t * g_t + g_t) * prev.n, check.vol_g)
        _row(rows, "edges-inside-newborns", name, t, g_t * (g_t - 1) * prev.n, check.e_xx)
        _bound_row(rows, "mixing-newborns", name, t, check.holds,
                   f"|{check.lhs}| <= {check.rhs:.6f}", f"{float(check.lhs):.6f}")
    if horizon >= 2:
        trend = " ".join(
            f"t={t}:{float(average_distance(snaps[t]) / cone_avg_distance_scale(g, t)):.4f}"
            for t in range(1, min(horizon, _DISTANCE_HORIZON) + 1)
        )
        _info_row(rows, "avgdist-trend", name, None,
                  "L stays within a constant factor of g(t)+t-sum(1/(g(i)+1))", trend)
    return snaps


def _cylinder_rows(rows, n, name, params):
    snaps = snapshots(generate(params))
    gaps = []
    for t in range(params.horizon + 1):
        snap = snaps[t]
        forms = cylinder_constant_closed(n, t)
        _row(rows, "cylinder-cliques", name, t, forms.clique_count,
             len(enumerate_k_cliques(snap, n)))
        _row(rows, "cylinder-order", name, t, forms.order, snap.n)
        _row(rows, "cylinder-edges", name, t, forms.edges, snap.edge_count)
        if t >= 1:
            ratio = Fraction(snap.edge_count, snap.n)
            _bound_row(rows, "cylinder-ratio-below-limit", name, t,
                       ratio < forms.limit_ratio, f"< {forms.limit_ratio}", ratio)
            gaps.append(forms.limit_ratio - ratio)
    shrinking = all(a > b for a, b in zip(gaps, gaps[1:]))
    _bound_row(rows, "cylinder-gap-shrinking", name, None, shrinking,
               "limit gap strictly shrinks with t",
               " ".join(str(gap) for gap in gaps))
    return snaps


def _identity_rows(rows, name, params):
    """Per-step increment identity, growth inequality, and clique bounds."""
    graph = generate(params)
    snaps = snapshots(graph)
    diag = densification_diagnostic(snaps, params)
    for inc in increment_series(snaps):
        f_t = eval_sequence(params.f, inc.t)
        g_t = eval_sequence(params.g, inc.t)
        expected = Fraction(g_t, 2) + f_t - Fraction(1, 2)
        _row(rows, "increment-ratio", name, inc.t, expected, inc.ratio)
    for step in diag.steps:
        _bound_row(
            rows, "growth-inequality", name, step.t, step.growth_inequality_ok,
            f"(n_t - n_prev) * {step.f_t} >= n_prev * {step.clique_min} * {step.g_t}",
            "holds" if step.growth_inequality_ok else "violated",
        )
        if step.clique_lower_bound_ok is not None:
            _bound_row(
                rows, "clique-lower-bound", name, step.t, step.clique_lower_bound_ok,
                f"every old vertex in >= {step.clique_lower_bound} cliques of order {step.f_t}",
                "holds" if step.clique_lower_bound_ok else "violated",
            )
    return snaps


def _clique_recurrence_rows(rows, name, params, snaps):
    for t in range(2, params.horizon + 1):
        k = eval_sequence(params.f, t)
        f_prev = eval_sequence(params.f, t - 1)
        g_prev = eval_sequence(params.g, t - 1)
        counts_now = clique_membership_counts(snaps[t - 1], k)
        counts_before = clique_membership_counts(snaps[t - 2], k)
        counts_parent = clique_membership_counts(snaps[t - 2], f_prev)
        factor = comb(g_prev + f_prev - 1, k - 1) - comb(f_prev - 1, k - 1)
        bad = None
        for u in range(snaps[t - 2].n):
            want = counts_before[u] + factor * counts_parent[u]
            if counts_now[u] != want:
                bad = f"vertex {u}: {counts_now[u]} != {want}"
                break
        _row(rows, "clique-recurrence", name, t, "recurrence holds for all old vertices",
             bad or "recurrence holds for all old vertices")


def _mixing_small_graph_rows(rows, name, graph):
    report = spectral_report(graph)
    lam = report.lambda_gap
    failures = 0
    universe = list(range(graph.n))
    for size in range(graph.n + 1):
        for subset in combinations(universe, size):
            if not mixing_check(graph, subset, lam).holds:
                failures += 1
    _bound_row(rows, "mixing-exhaustive", name, None, failures == 0,
               f"all {2 ** graph.n} subsets obey the mixing bound",
               "all hold" if failures == 0 else f"{failures} subsets violate the bound")


def _complete_spectrum_rows(rows):
    for n in (2, 3, 4, 5):
        report = spectral_report(Graph.complete(n))
        expected = [0.0] + [n / (n - 1)] * (n - 1)
        ok = all(abs(a - b) <= SLACK for a, b in zip(report.eigenvalues, expected))
        _bound_row(rows, "complete-spectrum", f"complete-{n}", None, ok,
                   "{0} + (n/(n-1)) x (n-1) within 1e-9",
                   "within 1e-9" if ok else
                   " ".join(f"{v:.12f}" for v in report.eigenvalues))


def _small_graph_pool(named_snaps) -> list[tuple[str, Graph]]:
    pool = list(GENERIC_SMALL_GRAPHS)
    for name, snaps in named_snaps:
        for t, snap in enumerate(snaps):
            if 2 <= snap.n <= _MIXING_MAX_ORDER and snap.edge_count > 0:
                pool.append((f"{name}[t={t}]", snap))
    return pool


def run_validation(
    params: ModelParams | None = None, negative_control: bool = False
) -> ValidationReport:
    """Run the calibration suite, or the generic checks of one instance.

    With ``negative_control`` a deliberately corrupted expected value is
    injected, which must flip the outcome to failure; it exists to prove
    the harness can fail.
    """
    rows: list[ValidationRow] = []
    wiener_match_sets: dict[str, bool] = {}
    if params is not None:
        snaps = _identity_rows(rows, "instance", params)
        _clique_recurrence_rows(rows, "instance", params, snaps)
        winners = ()
    else:
        named_snaps = []
        for name, inst in CONE_INSTANCES:
            named_snaps.append((name, _cone_rows(rows, name, inst, wiener_match_sets)))
        for n, _horizon, name, inst in CYLINDER_INSTANCES:
            named_snaps.append((name, _cylinder_rows(rows, n, name, inst)))
        for name, inst in CLIQUE_INSTANCES:
            snaps = _identity_rows(rows, name, inst)
            _clique_recurrence_rows(rows, name, inst, snaps)
            named_snaps.append((name, snaps))
        for name, inst in BATTERY:
            _identity_rows(rows, name, inst)
        _complete_spectrum_rows(rows)
        for name, graph in _small_graph_pool(named_snaps):
            _mixing_small_graph_rows(rows, name, graph)
        winners = tuple(sorted(k for k, v in wiener_match_sets.items() if v))
        arbitration_ok = winners == (RECOMMENDED_WIENER_CANDIDATE,)
        _bound_row(
            rows, "wiener-arbitration", "calibration-suite", None, arbitration_ok,
            f"exactly one candidate matches brute force everywhere: "
            f"{RECOMMENDED_WIENER_CANDIDATE}",
            ",".join(winners) if winners else "none",
        )
    if negative_control:
        first = CONE_INSTANCES[0][1]
        graph = generate(first)
        _row(rows, "order", "negative-control", first.horizon,
             graph.n + 1, graph.n)
    return ValidationReport(tuple(rows), winners if params is None else ())


def render_validation_text(report: ValidationReport) -> str:
    lines = ["quantity | instance | t | expected | measured | verdict"]
    for r in report.rows:
        t = "-" if r.t is None else str(r.t)
        flag = "" if r.mandatory else " (informational)"
        lines.append(
            f"{r.quantity} | {r.instance} | {t} | {r.expected} | {r.measured} | "
            f"{r.verdict}{flag}"
        )
    lines.append(
        f"result: {'all mandatory checks hold' if report.all_ok else 'FAILURES PRESENT'}"
    )
    return "\n".join(lines) + "\n"


def render_validation_json(report: ValidationReport) -> str:
    payload = {
        "checks": [asdict(r) for r in report.rows],
        "wiener_winners": list(report.wiener_winners),
        "all_ok": report.all_ok,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
