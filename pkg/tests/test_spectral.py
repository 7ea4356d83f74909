import numpy as np
import pytest

import util
from netcoherence.generators import psfw_iterative
from netcoherence.graphs import build_graph, laplacian
from netcoherence.spectral import (
    biharmonic_distance,
    biharmonic_index,
    coherence_dense,
    coherence_estimate,
    coherence_from_spectrum,
    kirchhoff_index,
    resistance_distance,
    spectrum,
)


def triangle():
    return build_graph([(0, 1), (1, 2), (0, 2)])[0]


def test_triangle_spectrum_and_coherence():
    g = triangle()
    w = spectrum(g).eigenvalues
    assert np.allclose(w, [0.0, 3.0, 3.0], atol=1e-12)
    rep = coherence_from_spectrum(spectrum(g))
    assert rep.h_fo == pytest.approx(1 / 9, abs=1e-14)
    assert rep.h_so == pytest.approx(1 / 27, abs=1e-14)
    assert rep.kirchhoff == pytest.approx(2.0, abs=1e-12)
    assert rep.n_vertices == 3
    assert rep.n_edges == 3
    assert rep.method == "dense-spectrum"


def test_single_edge():
    g, _ = build_graph([(0, 1)])
    rep = coherence_dense(g)
    # one nonzero eigenvalue, 2
    assert rep.h_fo == pytest.approx(1 / 8, abs=1e-14)
    assert rep.h_so == pytest.approx(1 / 16, abs=1e-14)
    assert rep.kirchhoff == pytest.approx(1.0, abs=1e-14)


def test_disconnected_graphs_rejected():
    g, _ = build_graph([(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="disconnected"):
        coherence_dense(g)
    with pytest.raises(ValueError, match="disconnected"):
        resistance_distance(g, 0, 2)
    with pytest.raises(ValueError, match="disconnected"):
        coherence_estimate(g, probes=8)


def test_dense_limit_error_points_to_estimator():
    g = psfw_iterative(3).graph
    with pytest.raises(ValueError, match="coherence_estimate"):
        spectrum(g, dense_limit=10)


def test_classic_resistance_values():
    g, _ = build_graph([(0, 1)])
    assert resistance_distance(g, 0, 1) == pytest.approx(1.0, abs=1e-12)
    p3, _ = build_graph([(0, 1), (1, 2)])
    assert resistance_distance(p3, 0, 2) == pytest.approx(2.0, abs=1e-12)
    t = triangle()
    assert resistance_distance(t, 0, 1) == pytest.approx(2 / 3, abs=1e-12)
    assert resistance_distance(t, 1, 1) == 0.0
    with pytest.raises(ValueError, match="out of range"):
        resistance_distance(t, 0, 7)


def test_pair_distances_match_pseudoinverse_oracle():
    for seed in (0, 1, 2):
        g = util.er_connected(25, 0.2, seed)
        lplus = util.pinv_oracle(laplacian(g).dense())
        omega = util.pair_matrix(lplus, 1)
        theta = util.pair_matrix(lplus, 2)
        for i, j in [(0, 1), (3, 17), (5, 24), (2, 2)]:
            assert resistance_distance(g, i, j) == pytest.approx(omega[i, j], abs=1e-10)
            assert biharmonic_distance(g, i, j) == pytest.approx(theta[i, j], abs=1e-10)


def test_indices_equal_pairwise_sums():
    for seed in (3, 4):
        g = util.er_connected(40, 0.12, seed)
        lplus = util.pinv_oracle(laplacian(g).dense())
        omega_sum = np.triu(util.pair_matrix(lplus, 1), 1).sum()
        theta_sum = np.triu(util.pair_matrix(lplus, 2), 1).sum()
        assert kirchhoff_index(g) == pytest.approx(omega_sum, rel=1e-10)
        assert biharmonic_index(g) == pytest.approx(theta_sum, rel=1e-10)


def test_coherence_scales_indices():
    g = util.er_connected(20, 0.25, 9)
    rep = coherence_dense(g)
    assert rep.h_fo == pytest.approx(rep.kirchhoff / (2 * 20**2), rel=1e-12)
    assert rep.h_so == pytest.approx(rep.biharmonic / (2 * 20**2), rel=1e-12)


def test_permutation_invariance():
    g = util.er_connected(30, 0.2, 42)
    perm = np.random.default_rng(0).permutation(30)
    gp = util.permute_graph(g, perm)
    assert kirchhoff_index(gp) == pytest.approx(kirchhoff_index(g), rel=1e-10)
    assert biharmonic_index(gp) == pytest.approx(biharmonic_index(g), rel=1e-10)
    i, j = 3, 17
    assert resistance_distance(gp, int(perm[i]), int(perm[j])) == pytest.approx(
        resistance_distance(g, i, j), abs=1e-10
    )


def test_estimate_matches_dense_within_error_bars():
    g = psfw_iterative(4).graph
    truth = coherence_dense(g)
    rep = coherence_estimate(g, probes=400, seed=11)
    assert rep.method == "stochastic-estimate"
    assert rep.uncertainty is not None
    assert abs(rep.h_fo - truth.h_fo) < 3 * rep.uncertainty.h_fo
    assert abs(rep.h_so - truth.h_so) < 3 * rep.uncertainty.h_so
    assert rep.uncertainty.h_fo < 0.01


def test_estimate_deterministic_and_guarded():
    g = psfw_iterative(3).graph
    a = coherence_estimate(g, probes=32, seed=9)
    b = coherence_estimate(g, probes=32, seed=9)
    assert (a.h_fo, a.h_so) == (b.h_fo, b.h_so)
    c = coherence_estimate(g, probes=32, seed=10)
    assert a.h_fo != c.h_fo
    with pytest.raises(ValueError, match="two probes"):
        coherence_estimate(g, probes=1)
