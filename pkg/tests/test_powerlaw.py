import numpy as np
import pytest

from netcoherence.generators import psfw_iterative
from netcoherence.powerlaw import powerlaw_exponent


def test_recovers_zipf_exponent():
    rng = np.random.default_rng(1234)
    sample = rng.zipf(2.5, size=20_000)
    fit = powerlaw_exponent(sample)
    assert abs(fit.gamma - 2.5) < 0.1
    assert fit.xmin <= 3


def test_rejects_degenerate_sequence():
    with pytest.raises(ValueError, match="degenerate degree sequence"):
        powerlaw_exponent([5] * 100)


def test_rejects_empty_and_nonpositive():
    with pytest.raises(ValueError, match="no positive degrees"):
        powerlaw_exponent([])
    with pytest.raises(ValueError, match="no positive degrees"):
        powerlaw_exponent([0, 0, 0])


def test_rejects_short_tail():
    with pytest.raises(ValueError, match="tail"):
        powerlaw_exponent([1, 2, 3, 4, 5], min_tail=10)


def test_deterministic():
    rng = np.random.default_rng(7)
    sample = rng.zipf(2.2, size=5_000)
    assert powerlaw_exponent(sample) == powerlaw_exponent(sample)


def test_fractal_family_degree_tail():
    degrees = psfw_iterative(8).graph.degrees
    fit = powerlaw_exponent(degrees)
    assert fit.xmin == 2
    assert fit.gamma == pytest.approx(2.7674, abs=1e-3)
