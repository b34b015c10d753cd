"""File formats: model spec files, edge lists, vertex metadata, cap records.

All writers are deterministic, so identical inputs produce byte-identical
files.  Formats:

* model file -- flat ``key = value`` text with fields ``n``, ``f.kind``,
  ``f.params``, ``g.kind``, ``g.params``, ``horizon``, ``vertex_budget``;
  ``#`` starts a comment.
* edge list -- one line per edge, ``u v`` with u < v, ascending
  lexicographic order, 0-based ids, newline-terminated.
* vertex metadata -- one line per vertex, ``id birth_time cap_id`` with
  ``-`` as the cap of seed vertices.
* cap records -- one line per cap, ``cap_id time parent new`` where
  parent and new are comma-joined sorted id lists.
"""

from __future__ import annotations

import os

from .model import CapRecord, FrustumGraph, ModelParams, VertexMeta
from .sequences import SequenceSpec

MODEL_FIELDS = ("n", "f.kind", "f.params", "g.kind", "g.params", "horizon", "vertex_budget")

EDGES_FILE = "edges.txt"
VERTICES_FILE = "vertices.txt"
CAPS_FILE = "caps.txt"
MODEL_FILE = "model.txt"


def render_model_file(params: ModelParams) -> str:
    lines = [
        f"n = {params.n}",
        f"f.kind = {params.f.kind}",
        "f.params = " + " ".join(str(v) for v in params.f.params),
        f"g.kind = {params.g.kind}",
        "g.params = " + " ".join(str(v) for v in params.g.params),
        f"horizon = {params.horizon}",
        f"vertex_budget = {params.vertex_budget}",
    ]
    return "\n".join(lines) + "\n"


def parse_model_file(text: str) -> ModelParams:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key = key.strip()
        if key not in MODEL_FIELDS:
            raise ValueError(f"line {lineno}: unknown field {key!r}")
        if key in fields:
            raise ValueError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value.strip()
    missing = [k for k in MODEL_FIELDS if k not in fields and k != "vertex_budget"]
    if missing:
        raise ValueError("missing model fields: " + ", ".join(missing))

    def seq(prefix: str) -> SequenceSpec:
        params = tuple(int(v) for v in fields[f"{prefix}.params"].replace(",", " ").split())
        return SequenceSpec(fields[f"{prefix}.kind"], params)

    kwargs = {}
    if "vertex_budget" in fields:
        kwargs["vertex_budget"] = int(fields["vertex_budget"])
    return ModelParams(
        n=int(fields["n"]),
        f=seq("f"),
        g=seq("g"),
        horizon=int(fields["horizon"]),
        **kwargs,
    )


def read_model_file(path: str) -> ModelParams:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model_file(fh.read())


def render_edge_list(graph: FrustumGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


def render_vertex_meta(graph: FrustumGraph) -> str:
    lines = []
    for meta in graph.vertex_meta:
        cap = "-" if meta.cap_id is None else str(meta.cap_id)
        lines.append(f"{meta.id} {meta.birth_time} {cap}\n")
    return "".join(lines)


def render_cap_records(graph: FrustumGraph) -> str:
    lines = []
    for cap in graph.caps:
        parent = ",".join(str(v) for v in cap.parent_clique)
        new = ",".join(str(v) for v in cap.new_vertices)
        lines.append(f"{cap.cap_id} {cap.time} {parent} {new}\n")
    return "".join(lines)


def write_run(out_dir: str, graph: FrustumGraph, params: ModelParams | None = None) -> list[str]:
    """Write the export files for one generated graph; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    contents = [
        (EDGES_FILE, render_edge_list(graph)),
        (VERTICES_FILE, render_vertex_meta(graph)),
        (CAPS_FILE, render_cap_records(graph)),
    ]
    if params is not None:
        contents.append((MODEL_FILE, render_model_file(params)))
    for name, text in contents:
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        written.append(path)
    return written


def parse_run(edge_text: str, vertex_text: str, cap_text: str = "") -> FrustumGraph:
    """Rebuild a graph from exported files.

    The reconstructed horizon is the largest birth time present, so a
    final stalled step (which exports no vertices) is not recoverable
    from the files alone.
    """
    meta = []
    for raw in vertex_text.splitlines():
        if not raw.strip():
            continue
        ident, birth, cap = raw.split()
        meta.append(VertexMeta(int(ident), int(birth), None if cap == "-" else int(cap)))
    meta.sort(key=lambda m: m.id)
    n = len(meta)
    rows: list[list[int]] = [[] for _ in range(n)]
    for raw in edge_text.splitlines():
        if not raw.strip():
            continue
        u, v = (int(p) for p in raw.split())
        rows[u].append(v)
        rows[v].append(u)
    caps = []
    for raw in cap_text.splitlines():
        if not raw.strip():
            continue
        cap_id, time, parent, new = raw.split()
        caps.append(
            CapRecord(
                int(cap_id),
                int(time),
                tuple(int(p) for p in parent.split(",")),
                tuple(int(p) for p in new.split(",")),
            )
        )
    caps.sort(key=lambda c: c.cap_id)
    horizon = max((m.birth_time for m in meta), default=0)
    return FrustumGraph(rows, meta, caps, horizon)


def read_run(run_dir: str) -> FrustumGraph:
    def slurp(name: str, required: bool) -> str:
        path = os.path.join(run_dir, name)
        if not os.path.exists(path):
            if required:
                raise FileNotFoundError(f"missing {name} in {run_dir}")
            return ""
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()

    return parse_run(
        slurp(EDGES_FILE, required=True),
        slurp(VERTICES_FILE, required=True),
        slurp(CAPS_FILE, required=False),
    )
