"""Canonical undirected simple graphs and Laplacian utilities.

Vertices are dense integer ids ``0..N-1``.  Edges live in an ``(M, 2)``
int64 array with ``u < v`` in every row and rows sorted
lexicographically, so two graphs on the same vertex count are equal
exactly when their edge arrays are.  A CSR adjacency (indptr / indices)
is kept alongside for traversals and sparse matrix assembly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

__all__ = [
    "Graph",
    "DropCounts",
    "DegreeSummary",
    "LaplacianMatrix",
    "build_graph",
    "laplacian",
    "largest_connected_component",
    "average_shortest_path",
    "EXACT_PATH_LIMIT",
    "DEFAULT_PATH_SOURCES",
]

# all-sources BFS stays exact up to this many vertices; above it the mean
# path length is estimated from a fixed number of sampled sources
EXACT_PATH_LIMIT = 10_000
DEFAULT_PATH_SOURCES = 1_000


@dataclass(frozen=True)
class DropCounts:
    """What canonicalization discarded."""

    self_loops: int
    duplicates: int


@dataclass(frozen=True)
class DegreeSummary:
    degrees: np.ndarray
    mean: float
    maximum: int


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph in canonical form.

    Attributes
    ----------
    n_vertices : int
        Number of vertices; ids are 0..n_vertices-1.
    edges : ndarray, shape (M, 2)
        Canonical edge array: u < v per row, rows sorted.
    indptr, indices : ndarray
        CSR adjacency; neighbors of v are
        ``indices[indptr[v]:indptr[v+1]]``, sorted ascending.
    """

    n_vertices: int
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def n_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree_summary(self) -> DegreeSummary:
        d = self.degrees
        return DegreeSummary(degrees=d, mean=float(d.mean()), maximum=int(d.max()))

    def adjacency(self) -> sp.csr_matrix:
        data = np.ones(self.indices.shape[0], dtype=np.float64)
        return sp.csr_matrix(
            (data, self.indices, self.indptr),
            shape=(self.n_vertices, self.n_vertices),
        )


def build_graph(edges, n_vertices: int | None = None) -> tuple[Graph, DropCounts]:
    """Canonicalize raw edge pairs into a :class:`Graph`.

    Parameters
    ----------
    edges : array-like, shape (M, 2)
        Vertex id pairs; endpoint order within a pair is irrelevant.
    n_vertices : int, optional
        Declared vertex count.  Must cover every id that appears; ids
        not touched by any edge become isolated vertices.  When omitted
        the count is ``max id + 1``.

    Returns
    -------
    graph, dropped : Graph, DropCounts
        The canonical graph plus counts of removed self-loops and
        duplicate edges (a pair and its reverse count as duplicates).

    Raises
    ------
    ValueError
        On an empty edge set with no declared vertex count ("empty
        graph"), on negative ids, or when an id falls outside the
        declared range.
    """
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be an (M, 2) array of vertex id pairs")
    if arr.shape[0] == 0 and not n_vertices:
        raise ValueError("empty graph: no edges and no declared vertex count")
    if arr.size and int(arr.min()) < 0:
        raise ValueError("negative vertex id")
    top = int(arr.max()) + 1 if arr.size else 0
    if n_vertices is None:
        n_vertices = top
    elif n_vertices < top:
        raise ValueError(
            f"vertex id {top - 1} outside declared range of {n_vertices} vertices"
        )

    lo = arr.min(axis=1)
    hi = arr.max(axis=1)
    proper = lo != hi
    n_loops = int(arr.shape[0] - proper.sum())
    canon = np.stack([lo[proper], hi[proper]], axis=1)
    kept = canon.shape[0]
    if kept:
        canon = np.unique(canon, axis=0)
    n_dup = kept - canon.shape[0]
    return _from_canonical(int(n_vertices), canon), DropCounts(n_loops, n_dup)


def _from_canonical(n_vertices: int, canon: np.ndarray) -> Graph:
    if canon.size:
        both = np.concatenate([canon, canon[:, ::-1]], axis=0)
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        counts = np.bincount(both[:, 0], minlength=n_vertices)
        indices = np.ascontiguousarray(both[:, 1])
    else:
        counts = np.zeros(n_vertices, dtype=np.int64)
        indices = np.zeros(0, dtype=np.int64)
    indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    return Graph(n_vertices=n_vertices, edges=canon, indptr=indptr, indices=indices)


# ------------------------------------------------------------------ Laplacian


@dataclass(frozen=True, eq=False)
class LaplacianMatrix:
    """Combinatorial Laplacian L = D - A."""

    order: int
    matrix: sp.csr_matrix

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()


def laplacian(g: Graph) -> LaplacianMatrix:
    lap = sp.diags(g.degrees.astype(np.float64), 0) - g.adjacency()
    return LaplacianMatrix(order=g.n_vertices, matrix=lap.tocsr())


# ----------------------------------------------------------------- components


def largest_connected_component(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Extract the largest connected component.

    Ties are broken toward the component containing the smallest
    original vertex id.  Retained vertices are relabeled 0..N'-1 in
    increasing original-id order; the returned dict maps old ids to new.
    """
    n_comp, labels = csgraph.connected_components(g.adjacency(), directed=False)
    if n_comp == 1:
        return g, {v: v for v in range(g.n_vertices)}
    sizes = np.bincount(labels)
    cand = np.flatnonzero(sizes == sizes.max())
    first_seen = [int(np.flatnonzero(labels == c)[0]) for c in cand]
    target = int(cand[int(np.argmin(first_seen))])

    keep = np.flatnonzero(labels == target)
    renum = np.full(g.n_vertices, -1, dtype=np.int64)
    renum[keep] = np.arange(keep.size)
    if g.edges.size:
        mask = labels[g.edges[:, 0]] == target
        sub_edges = renum[g.edges[mask]]
    else:
        sub_edges = np.zeros((0, 2), dtype=np.int64)
    sub = _from_canonical(int(keep.size), sub_edges)
    return sub, {int(old): int(new) for new, old in enumerate(keep)}


# ----------------------------------------------------------------- path stats


def average_shortest_path(
    g: Graph,
    *,
    exact: bool | None = None,
    sources: int = DEFAULT_PATH_SOURCES,
    seed: int = 0,
) -> float:
    """Mean hop distance over ordered vertex pairs.

    All-sources BFS (exact) up to ``EXACT_PATH_LIMIT`` vertices; above
    that, the mean is estimated from ``sources`` BFS roots sampled
    without replacement (deterministic for a given seed).  Pass
    ``exact`` to force either mode.

    Raises
    ------
    ValueError
        If the graph has fewer than two vertices or is not connected.
    """
    n = g.n_vertices
    if n < 2:
        raise ValueError("graph too small for path statistics")
    if exact is None:
        exact = n <= EXACT_PATH_LIMIT
    if exact or sources >= n:
        roots = np.arange(n)
    else:
        rng = np.random.default_rng(seed)
        roots = np.sort(rng.choice(n, size=sources, replace=False))

    adj = g.adjacency()
    total = 0.0
    batch = 256
    for off in range(0, roots.size, batch):
        idx = roots[off:off + batch]
        dist = csgraph.dijkstra(adj, indices=idx, unweighted=True, directed=False)
        if np.isinf(dist).any():
            raise ValueError("graph not connected")
        total += float(dist.sum())
    return total / (roots.size * (n - 1))
