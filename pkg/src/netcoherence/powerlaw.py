"""Maximum-likelihood fitting of a discrete power-law degree tail.

The tail model is p(d) proportional to d**-gamma for integer d >= xmin.
For each candidate xmin the exponent minimizes the negative
log-likelihood

    gamma * sum(log d_i)  +  n_tail * log hurwitz_zeta(gamma, xmin)

and the reported fit is the candidate whose fitted model has the
smallest Kolmogorov-Smirnov distance to the empirical tail.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta

__all__ = ["PowerlawFit", "powerlaw_exponent"]


class PowerlawFit(NamedTuple):
    gamma: float
    xmin: int


def powerlaw_exponent(
    degrees,
    *,
    gamma_min: float = 1.0001,
    gamma_max: float = 6.0,
    min_tail: int = 10,
) -> PowerlawFit:
    """Fit (gamma, xmin) to a degree sequence.

    Candidate xmin values are the distinct degrees keeping at least
    ``min_tail`` observations at or above them.

    Raises
    ------
    ValueError
        On a constant sequence ("degenerate degree sequence"), when no
        positive degrees are present, or when every candidate xmin
        leaves fewer than ``min_tail`` tail points.
    """
    ds = np.asarray(degrees, dtype=np.int64).ravel()
    ds = ds[ds >= 1]
    if ds.size == 0:
        raise ValueError("no positive degrees to fit")
    uniq = np.unique(ds)
    if uniq.size == 1:
        raise ValueError("degenerate degree sequence")

    best: tuple[float, int, float] | None = None
    for xmin in uniq:
        tail = ds[ds >= xmin]
        if tail.size < min_tail:
            continue
        n = tail.size
        slog = float(np.log(tail).sum())

        def nll(gamma: float, _slog=slog, _n=n, _xmin=int(xmin)) -> float:
            return gamma * _slog + _n * math.log(zeta(gamma, _xmin))

        res = minimize_scalar(
            nll, bounds=(gamma_min, gamma_max), method="bounded",
            options={"xatol": 1e-8},
        )
        gamma = float(res.x)

        # KS distance between empirical and model survival functions,
        # evaluated at the distinct tail values
        z0 = float(zeta(gamma, int(xmin)))
        ks = 0.0
        for d in np.unique(tail):
            s_emp = float((tail >= d).sum()) / n
            s_mod = float(zeta(gamma, int(d))) / z0
            ks = max(ks, abs(s_emp - s_mod))
        if best is None or ks < best[2]:
            best = (gamma, int(xmin), ks)

    if best is None:
        raise ValueError(f"fewer than {min_tail} tail points for every candidate xmin")
    return PowerlawFit(gamma=best[0], xmin=best[1])
