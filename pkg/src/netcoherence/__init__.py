"""Network coherence toolkit.

Computes how well noisy consensus dynamics hold a network together:
first-order coherence h_fo (single-integrator steady-state deviation
variance) and second-order coherence h_so (double-integrator position
variance).  Routes: exact rational recursion and closed forms for two
self-similar triangle families, dense spectral computation, a
stochastic trace estimator for large graphs, direct time-stepping
simulation, and statistic rows for real edge-list networks.

Set COHERENCE_THREADS to cap BLAS thread pools; it must be in the
environment before this package (and with it numpy) is first imported.
"""

import os as _os

_threads = _os.environ.get("COHERENCE_THREADS")
if _threads:
    for _var in (
        "OMP_NUM_THREADS",
        "OPENBLAS_NUM_THREADS",
        "MKL_NUM_THREADS",
        "NUMEXPR_NUM_THREADS",
    ):
        _os.environ.setdefault(_var, _threads)
del _os, _threads

__version__ = "0.1.0"

from netcoherence.exact import (
    ClosedCoeffs,
    ExactCoherence,
    PolyQuad,
    TruncPoly,
    asymptote,
    closed_coeffs,
    coherence_recursion,
    exact_sums,
    psfw_theorem1,
    recursion_step,
    seed_polyquad,
    sierpinski_theorem2,
)
from netcoherence.generators import (
    GeneratedGraph,
    generation_size,
    psfw_iterative,
    psfw_selfsimilar,
    sierpinski,
)
from netcoherence.graphs import (
    DegreeSummary,
    DropCounts,
    Graph,
    LaplacianMatrix,
    average_shortest_path,
    build_graph,
    laplacian,
    largest_connected_component,
)
from netcoherence.ingest import (
    CSV_HEADER,
    NetworkStats,
    ParseReport,
    load_bundled,
    network_stats,
    parse_edge_list,
    serialize_edge_list,
)
from netcoherence.powerlaw import PowerlawFit, powerlaw_exponent
from netcoherence.simulate import (
    SimConfig,
    SimEstimate,
    estimate_lambda2,
    estimate_lambda_max,
    simulate_first_order,
    simulate_second_order,
)
from netcoherence.spectral import (
    CoherenceReport,
    Spectrum,
    Uncertainty,
    biharmonic_distance,
    biharmonic_index,
    coherence_dense,
    coherence_estimate,
    coherence_from_spectrum,
    kirchhoff_index,
    resistance_distance,
    spectrum,
)

__all__ = [
    "__version__",
    "Graph",
    "DropCounts",
    "DegreeSummary",
    "LaplacianMatrix",
    "build_graph",
    "laplacian",
    "largest_connected_component",
    "average_shortest_path",
    "PowerlawFit",
    "powerlaw_exponent",
    "GeneratedGraph",
    "generation_size",
    "psfw_iterative",
    "psfw_selfsimilar",
    "sierpinski",
    "Spectrum",
    "Uncertainty",
    "CoherenceReport",
    "spectrum",
    "coherence_from_spectrum",
    "coherence_dense",
    "coherence_estimate",
    "resistance_distance",
    "biharmonic_distance",
    "kirchhoff_index",
    "biharmonic_index",
    "TruncPoly",
    "PolyQuad",
    "ExactCoherence",
    "ClosedCoeffs",
    "seed_polyquad",
    "recursion_step",
    "exact_sums",
    "coherence_recursion",
    "closed_coeffs",
    "psfw_theorem1",
    "sierpinski_theorem2",
    "asymptote",
    "SimConfig",
    "SimEstimate",
    "simulate_first_order",
    "simulate_second_order",
    "estimate_lambda_max",
    "estimate_lambda2",
    "ParseReport",
    "NetworkStats",
    "CSV_HEADER",
    "parse_edge_list",
    "serialize_edge_list",
    "network_stats",
    "load_bundled",
]
