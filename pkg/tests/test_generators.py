import numpy as np
import pytest
from scipy.sparse import csgraph

from netcoherence.generators import (
    generation_size,
    psfw_iterative,
    psfw_selfsimilar,
    sierpinski,
)
from netcoherence.spectral import spectrum


def test_sizes_match_closed_formula():
    for n in range(7):
        n_vertices, n_edges = generation_size(n)
        assert n_vertices == (3 ** (n + 1) + 3) // 2
        assert n_edges == 3 ** (n + 1)
        for fn in (psfw_iterative, psfw_selfsimilar, sierpinski):
            gg = fn(n)
            assert gg.graph.n_vertices == n_vertices
            assert gg.graph.n_edges == n_edges
            assert gg.generation == n


def test_connected_and_simple():
    for fn in (psfw_iterative, psfw_selfsimilar, sierpinski):
        g = fn(5).graph
        n_comp, _ = csgraph.connected_components(g.adjacency(), directed=False)
        assert n_comp == 1
        assert (g.edges[:, 0] < g.edges[:, 1]).all()


def test_subdivision_family_degree_structure():
    for n in (2, 4, 5):
        gg = psfw_iterative(n)
        deg = gg.graph.degrees
        # every degree is a power of two
        assert ((deg & (deg - 1)) == 0).all()
        assert deg.max() == 2 ** (n + 1)
        assert all(deg[h] == 2 ** (n + 1) for h in gg.hubs)
        # the newest subdivision adds one degree-2 vertex per prior edge
        assert int((deg == 2).sum()) == 3**n


def test_selfsimilar_hubs_have_top_degree():
    for n in (1, 2, 3, 4):
        gg = psfw_selfsimilar(n)
        deg = gg.graph.degrees
        assert len(set(gg.hubs)) == 3
        assert sorted(int(deg[h]) for h in gg.hubs) == [2 ** (n + 1)] * 3


def test_gasket_degree_structure():
    for n in (1, 2, 3):
        gg = sierpinski(n)
        deg = gg.graph.degrees
        corners = list(gg.hubs)
        assert sorted(int(deg[c]) for c in corners) == [2, 2, 2]
        assert (np.delete(deg, corners) == 4).all()


def test_construction_routes_agree():
    for n in range(5):
        a = psfw_iterative(n).graph
        b = psfw_selfsimilar(n).graph
        assert a.n_vertices == b.n_vertices
        assert np.array_equal(np.sort(a.degrees), np.sort(b.degrees))
        wa = spectrum(a).eigenvalues
        wb = spectrum(b).eigenvalues
        assert np.abs(wa - wb).max() < 1e-9


def test_families_coincide_at_generation_one():
    wg = spectrum(psfw_iterative(1).graph).eigenvalues
    ws = spectrum(sierpinski(1).graph).eigenvalues
    assert np.abs(wg - ws).max() < 1e-10


def test_generation_guards():
    for fn in (psfw_iterative, psfw_selfsimilar, sierpinski):
        with pytest.raises(ValueError, match="nonnegative"):
            fn(-1)
        with pytest.raises(ValueError, match="too large"):
            fn(13)
    assert psfw_iterative(3, n_max=3).generation == 3
    with pytest.raises(ValueError, match="too large"):
        psfw_iterative(3, n_max=2)


def test_deterministic_output():
    assert np.array_equal(psfw_iterative(4).graph.edges, psfw_iterative(4).graph.edges)
    assert np.array_equal(psfw_selfsimilar(4).graph.edges, psfw_selfsimilar(4).graph.edges)
    assert np.array_equal(sierpinski(4).graph.edges, sierpinski(4).graph.edges)
