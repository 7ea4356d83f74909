"""Edge-list ingestion and whole-network statistic rows.

Accepted format: one edge per line as whitespace-separated vertex
tokens, with ``%`` or ``#`` comment lines and blank lines ignored.
Extra columns (weights, timestamps) are dropped.  Vertex tokens may be
arbitrary strings; they are mapped to dense ids in first-appearance
order.  Direction is ignored: a pair and its reverse are the same edge,
counted as a duplicate when both occur.

Statistic rows follow a fixed column order (see ``CSV_HEADER``); the
coherence columns switch automatically from the dense spectral route to
the stochastic estimator above ``DENSE_EIGEN_LIMIT`` vertices, recorded
in the ``method`` column.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path

from netcoherence.graphs import (
    Graph,
    average_shortest_path,
    build_graph,
    largest_connected_component,
)
from netcoherence.powerlaw import powerlaw_exponent
from netcoherence.spectral import (
    DENSE_EIGEN_LIMIT,
    coherence_dense,
    coherence_estimate,
)

__all__ = [
    "ParseReport",
    "NetworkStats",
    "CSV_HEADER",
    "BUNDLED_NETWORKS",
    "parse_edge_list",
    "serialize_edge_list",
    "network_stats",
    "stats_csv_row",
    "stats_to_dict",
    "load_bundled",
]

CSV_HEADER = "name,n_raw,m_raw,n_lcc,m_lcc,mean_degree,gamma,mean_path,h_fo,h_so,method"

BUNDLED_NETWORKS = ("karate", "lesmis")


@dataclass(frozen=True)
class ParseReport:
    name: str
    n_lines: int
    n_comments: int
    self_loops: int
    duplicates: int
    labels: tuple[str, ...]


@dataclass(frozen=True)
class NetworkStats:
    name: str
    n_raw: int
    m_raw: int
    n_lcc: int
    m_lcc: int
    mean_degree: float
    gamma: float
    mean_path: float
    h_fo: float
    h_so: float
    method: str


def parse_edge_list(source, *, name: str | None = None) -> tuple[Graph, ParseReport]:
    """Parse an edge list from a path, traversable, or text stream.

    Returns the canonical graph plus a report with the line count and
    the dropped self-loop/duplicate counts.  Malformed lines raise
    ValueError with their 1-based line number.
    """
    if hasattr(source, "read"):
        stream = source
        label = name or getattr(source, "name", "<stream>")
        close = False
    else:
        stream = open(source, "r", encoding="utf-8") if isinstance(
            source, (str, Path)
        ) else source.open("r")
        label = name or Path(str(source)).stem
        close = True

    ids: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    n_lines = 0
    n_comments = 0
    try:
        for lineno, line in enumerate(stream, start=1):
            n_lines = lineno
            text = line.strip()
            if not text or text.startswith("%") or text.startswith("#"):
                n_comments += 1
                continue
            tokens = text.split()
            if len(tokens) < 2:
                raise ValueError(
                    f"{label}: line {lineno}: expected two vertex tokens, "
                    f"got {len(tokens)}"
                )
            u = ids.setdefault(tokens[0], len(ids))
            v = ids.setdefault(tokens[1], len(ids))
            pairs.append((u, v))
    finally:
        if close:
            stream.close()

    if not pairs:
        raise ValueError(f"{label}: empty graph: no edge lines found")
    graph, dropped = build_graph(pairs, n_vertices=len(ids))
    report = ParseReport(
        name=label,
        n_lines=n_lines,
        n_comments=n_comments,
        self_loops=dropped.self_loops,
        duplicates=dropped.duplicates,
        labels=tuple(sorted(ids, key=ids.get)),
    )
    return graph, report


def serialize_edge_list(g: Graph, target, *, comments: tuple[str, ...] = ()) -> None:
    """Write a graph as a 1-based edge list with ``%`` header comments.

    Isolated vertices are not representable in this format; parsing the
    output back yields the same graph up to vertex relabeling.
    """
    if hasattr(target, "write"):
        stream, close = target, False
    else:
        stream, close = open(target, "w", encoding="utf-8"), True
    try:
        for line in comments:
            stream.write(f"% {line}\n")
        stream.write(
            f"% undirected simple graph, {g.n_vertices} vertices, "
            f"{g.n_edges} edges, 1-based vertex ids\n"
        )
        for u, v in g.edges:
            stream.write(f"{u + 1} {v + 1}\n")
    finally:
        if close:
            stream.close()


def network_stats(
    g: Graph,
    name: str,
    *,
    probes: int = 256,
    seed: int = 0,
    dense_limit: int = DENSE_EIGEN_LIMIT,
) -> NetworkStats:
    """Full statistic row for one network.

    Raw counts describe the parsed graph; degree, path, and coherence
    statistics are computed on its largest connected component.  The
    power-law exponent is NaN when the fit is undefined (degenerate or
    too-short degree tail).
    """
    lcc, _ = largest_connected_component(g)
    mean_degree = 2.0 * lcc.n_edges / lcc.n_vertices
    try:
        gamma = powerlaw_exponent(lcc.degrees).gamma
    except ValueError:
        gamma = math.nan
    mean_path = average_shortest_path(lcc)
    if lcc.n_vertices <= dense_limit:
        rep = coherence_dense(lcc, dense_limit=dense_limit)
    else:
        rep = coherence_estimate(lcc, probes=probes, seed=seed)
    return NetworkStats(
        name=name,
        n_raw=g.n_vertices,
        m_raw=g.n_edges,
        n_lcc=lcc.n_vertices,
        m_lcc=lcc.n_edges,
        mean_degree=mean_degree,
        gamma=gamma,
        mean_path=mean_path,
        h_fo=rep.h_fo,
        h_so=rep.h_so,
        method=rep.method,
    )


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def stats_csv_row(s: NetworkStats) -> str:
    return ",".join(
        [
            s.name,
            str(s.n_raw),
            str(s.m_raw),
            str(s.n_lcc),
            str(s.m_lcc),
            _fmt(s.mean_degree),
            _fmt(s.gamma),
            _fmt(s.mean_path),
            _fmt(s.h_fo),
            _fmt(s.h_so),
            s.method,
        ]
    )


def stats_to_dict(s: NetworkStats) -> dict:
    return {
        "name": s.name,
        "n_raw": s.n_raw,
        "m_raw": s.m_raw,
        "n_lcc": s.n_lcc,
        "m_lcc": s.m_lcc,
        "mean_degree": s.mean_degree,
        "gamma": None if math.isnan(s.gamma) else s.gamma,
        "mean_path": s.mean_path,
        "h_fo": s.h_fo,
        "h_so": s.h_so,
        "method": s.method,
    }


def load_bundled(name: str) -> tuple[Graph, ParseReport]:
    """Parse one of the networks shipped with the package."""
    if name not in BUNDLED_NETWORKS:
        raise ValueError(
            f"unknown bundled network {name!r}; available: {BUNDLED_NETWORKS}"
        )
    resource = files("netcoherence") / "data" / f"{name}.txt"
    with resource.open("r", encoding="utf-8") as fh:
        return parse_edge_list(io.StringIO(fh.read()), name=name)
