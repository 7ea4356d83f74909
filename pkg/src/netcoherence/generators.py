"""Deterministic generators for two self-similar triangle-based families.

Both families start from a single triangle (generation 0) and triple
per generation:

    N_n = (3**(n+1) + 3) / 2   vertices
    M_n = 3**(n+1)             edges

Edge-subdivision family ("psfw", the pseudofractal scale-free web):
every existing edge spawns one new vertex joined to both endpoints.
Degrees are powers of two; the three original vertices remain the
highest-degree hubs with degree 2**(n+1), and the 3**n vertices added
last have degree 2.  Two equivalent routes are provided: direct
iterative growth, and gluing three copies of the previous generation at
their hubs.

Corner-glued family ("sierpinski", the Sierpinski gasket): three copies
of the previous generation are glued pairwise at corner vertices.  For
n >= 1 the three outmost corners have degree 2 and every other vertex
degree 4.  The two families coincide at generation 1.

Vertex ids are reproducible: creation order for iterative growth,
copy-major order for the self-similar merges (the second member of a
glued pair reuses the id from the earlier copy).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from netcoherence.graphs import DropCounts, Graph, build_graph

__all__ = [
    "GeneratedGraph",
    "generation_size",
    "psfw_iterative",
    "psfw_selfsimilar",
    "sierpinski",
    "GENERATION_LIMIT",
]

# guard against accidental exponential blowups; override via n_max
GENERATION_LIMIT = 12

_TRIANGLE = np.array([[0, 1], [0, 2], [1, 2]], dtype=np.int64)


@dataclass(frozen=True)
class GeneratedGraph:
    """A generated family member plus its distinguished vertex triple.

    ``hubs`` holds the three highest-degree vertices for the
    edge-subdivision family and the three outmost (degree-2) corners
    for the corner-glued family.
    """

    graph: Graph
    family: str
    generation: int
    hubs: tuple[int, int, int]


def generation_size(n: int) -> tuple[int, int]:
    """(vertices, edges) of generation n in either family."""
    if n < 0:
        raise ValueError("generation must be nonnegative")
    return (3 ** (n + 1) + 3) // 2, 3 ** (n + 1)


def _check_generation(n: int, n_max: int) -> None:
    if n < 0:
        raise ValueError("generation must be nonnegative")
    if n > n_max:
        raise ValueError(
            f"generation too large (n={n} > n_max={n_max}); "
            f"pass n_max explicitly to go further"
        )


def _finish(edges: np.ndarray, nv: int, family: str, n: int,
            hubs: tuple[int, int, int]) -> GeneratedGraph:
    graph, dropped = build_graph(edges, n_vertices=nv)
    if dropped != DropCounts(0, 0):
        raise AssertionError(f"{family} generator produced a non-simple graph")
    want_nv, want_m = generation_size(n)
    if graph.n_vertices != want_nv or graph.n_edges != want_m:
        raise AssertionError(f"{family} generator size mismatch at n={n}")
    return GeneratedGraph(graph=graph, family=family, generation=n, hubs=hubs)


# ------------------------------------------------------------ edge subdivision


def psfw_iterative(n: int, *, n_max: int = GENERATION_LIMIT) -> GeneratedGraph:
    """Generation n of the edge-subdivision family, by direct growth.

    New vertex ids are assigned in edge-visit order each step, so the
    labeling is reproducible run to run.
    """
    _check_generation(n, n_max)
    edges = _TRIANGLE.copy()
    nv = 3
    for _ in range(n):
        m = edges.shape[0]
        mids = np.arange(nv, nv + m, dtype=np.int64)
        left = np.stack([edges[:, 0], mids], axis=1)
        right = np.stack([edges[:, 1], mids], axis=1)
        edges = np.concatenate([edges, left, right], axis=0)
        nv += m
    return _finish(edges, nv, "psfw", n, (0, 1, 2))


def psfw_selfsimilar(n: int, *, n_max: int = GENERATION_LIMIT) -> GeneratedGraph:
    """Generation n of the edge-subdivision family, by copy merging.

    Three copies of generation n-1 are glued at hub vertices: with hubs
    (A, B, C) and copies 0, 1, 2, vertex B of copy 2 is identified with
    A of copy 0, B of copy 1 with C of copy 0, and C of copy 2 with A
    of copy 1.  Produces a graph isomorphic to :func:`psfw_iterative`.
    """
    _check_generation(n, n_max)
    nv, edges, hubs = 3, _TRIANGLE.copy(), (0, 1, 2)
    for _ in range(n):
        a, b, c = hubs
        pairs = {(2, b): (0, a), (1, b): (0, c), (2, c): (1, a)}
        nv, edges, mapping = _glue_three(nv, edges, pairs)
        hubs = (int(mapping[0, a]), int(mapping[1, b]), int(mapping[1, a]))
    return _finish(edges, nv, "psfw", n, hubs)


# ----------------------------------------------------------------- corner glue


def sierpinski(n: int, *, n_max: int = GENERATION_LIMIT) -> GeneratedGraph:
    """Generation n of the corner-glued family.

    With outmost corners (A, B, C) and copies 0, 1, 2: corner A of copy
    1 is identified with B of copy 0, A of copy 2 with C of copy 0, and
    B of copy 2 with C of copy 1.  The new outmost corners are A of
    copy 0, B of copy 1 and C of copy 2.
    """
    _check_generation(n, n_max)
    nv, edges, corners = 3, _TRIANGLE.copy(), (0, 1, 2)
    for _ in range(n):
        a, b, c = corners
        pairs = {(1, a): (0, b), (2, a): (0, c), (2, b): (1, c)}
        nv, edges, mapping = _glue_three(nv, edges, pairs)
        corners = (int(mapping[0, a]), int(mapping[1, b]), int(mapping[2, c]))
    return _finish(edges, nv, "sierpinski", n, corners)


# ------------------------------------------------------------------- merging


def _glue_three(
    nv: int, edges: np.ndarray, pairs: dict[tuple[int, int], tuple[int, int]]
) -> tuple[int, np.ndarray, np.ndarray]:
    """Merge three copies of a graph, identifying the given vertex pairs.

    ``pairs`` maps (copy, vertex) to an equivalent (earlier copy,
    vertex).  Fresh ids run copy-major; identified vertices reuse the
    earlier copy's id.  Returns (new vertex count, new edges, the
    (3, nv) id mapping).
    """
    mapping = np.empty((3, nv), dtype=np.int64)
    next_id = 0
    for copy in range(3):
        fresh = np.ones(nv, dtype=bool)
        for (cp, v) in pairs:
            if cp == copy:
                fresh[v] = False
        n_fresh = int(fresh.sum())
        ids = np.full(nv, -1, dtype=np.int64)
        ids[fresh] = next_id + np.arange(n_fresh)
        mapping[copy] = ids
        next_id += n_fresh
    for (cp, v), (cp2, v2) in pairs.items():
        mapping[cp, v] = mapping[cp2, v2]
    new_edges = np.concatenate([mapping[cp][edges] for cp in range(3)], axis=0)
    return next_id, new_edges, mapping
