"""Exact rational coherence for the triangle families.

Write phi_n(lam) = det(L_n - lam * I) for the generation-n
edge-subdivision graph.  Because generation n+1 is three copies of
generation n glued at hub vertices, phi and three bordered minors close
under the construction.  With

    P = full determinant
    Q = determinant with one hub row and column deleted
    R = determinant with two hub rows and columns deleted
    X = minor deleting the row of one hub and the column of another

one generation step is

    P' = 2Q**3 + 2X**3 + 6PQR + 9tQ**2R + 3tPR**2 + 6t**2QR**2 + t**3R**3
    Q' = 3Q**2R + PR**2 + 4tQR**2 + t**2R**3
    R' = 2QR**2 + tR**3
    X' = 2QRX + tR**2X - RX**2

(t stands for the spectral variable).  Only the three lowest
coefficients of phi_n / t are ever needed: writing

    phi_n(t) / t = a0 + a1 t + a2 t**2 + ...

Vieta's formulas over the nonzero Laplacian eigenvalues give

    S_n = sum 1/l_k    = -a1 / a0
    T_n = sum 1/l_k**2 = (a1/a0)**2 - 2 a2/a0

and the coherences are h_fo = S_n / 2N_n, h_so = T_n / 2N_n with
N_n = (3**(n+1) + 3) / 2.  Every polynomial is therefore tracked as an
exact degree-3 truncation over rationals.  One subtlety: the degree-3
coefficient of P/t would need degree-4 information about Q and X, so it
is stored as zero and never consumed (S and T only read degrees 0..2).
The constant term of Q**3 + X**3 vanishes identically (X(0) = -Q(0)
propagates through the step), which is what makes P divisible by t.

Raw coefficients grow like 3**n digits.  The step map is homogeneous of
degree 3 in (P, Q, R, X), so each step may rescale the quadruple by R's
constant term; all downstream quantities are ratios and are unchanged.
The unnormalized mode is kept for coefficient-level cross-checks against
the closed forms in :func:`closed_coeffs`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = [
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
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class TruncPoly:
    """Polynomial in the spectral variable, truncated above degree 3."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    @classmethod
    def make(cls, c0=0, c1=0, c2=0, c3=0) -> "TruncPoly":
        return cls(Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        return TruncPoly(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        return TruncPoly(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        a, b = self.coeffs, other.coeffs
        out = [_ZERO, _ZERO, _ZERO, _ZERO]
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(4 - i):
                out[i + j] += ai * b[j]
        return TruncPoly(*out)

    def scaled(self, s) -> "TruncPoly":
        s = Fraction(s)
        return TruncPoly(*(c * s for c in self.coeffs))

    def shift(self) -> "TruncPoly":
        """Multiply by the spectral variable, truncating degree 4 away."""
        return TruncPoly(_ZERO, self.c0, self.c1, self.c2)


def _cube5(a: TruncPoly) -> list[Fraction]:
    """Coefficients 0..4 of a**3.

    Index-4 products only involve factor coefficients of index <= 3, so
    the first five coefficients of the cube are exact up to the caller
    accounting for the factor's own untracked degree-4 part.
    """
    cs = a.coeffs
    sq = [_ZERO] * 5
    for i, ai in enumerate(cs):
        if ai == 0:
            continue
        for j, aj in enumerate(cs):
            if i + j <= 4:
                sq[i + j] += ai * aj
    cu = [_ZERO] * 5
    for i, si in enumerate(sq):
        if si == 0:
            continue
        for j, aj in enumerate(cs):
            if i + j <= 4:
                cu[i + j] += si * aj
    return cu


@dataclass(frozen=True)
class PolyQuad:
    """State of the recursion at one generation.

    ``p`` holds the full characteristic determinant divided by the
    spectral variable; ``q``, ``r``, ``x`` are the three minors.
    """

    generation: int
    p: TruncPoly
    q: TruncPoly
    r: TruncPoly
    x: TruncPoly


@dataclass(frozen=True)
class ExactCoherence:
    generation: int
    n_vertices: int
    s: Fraction
    t: Fraction
    h_fo: Fraction
    h_so: Fraction


def family_vertices(n: int) -> int:
    """N_n = (3**(n+1) + 3) / 2, shared by both triangle families."""
    return (3 ** (n + 1) + 3) // 2


# ----------------------------------------------------------------------- seed


def _det2(m) -> TruncPoly:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _det3(m) -> TruncPoly:
    return (
        m[0][0] * _det2([[m[1][1], m[1][2]], [m[2][1], m[2][2]]])
        - m[0][1] * _det2([[m[1][0], m[1][2]], [m[2][0], m[2][2]]])
        + m[0][2] * _det2([[m[1][0], m[1][1]], [m[2][0], m[2][1]]])
    )


def seed_polyquad() -> PolyQuad:
    """Generation-0 state, derived from the triangle's determinants.

    The triangle Laplacian has 2 on the diagonal and -1 off it; the
    four polynomials come from det(L - t*I) and its minors with hub
    rows/columns removed (hubs are all three vertices at generation 0).
    """
    t = TruncPoly.make(0, 1)
    diag = TruncPoly.make(2) - t
    off = TruncPoly.make(-1)
    m = [[diag if i == j else off for j in range(3)] for i in range(3)]

    full = _det3(m)
    if full.c0 != 0:
        raise RuntimeError("triangle characteristic polynomial must vanish at 0")
    p = TruncPoly(full.c1, full.c2, full.c3, _ZERO)
    q = _det2([[m[0][0], m[0][1]], [m[1][0], m[1][1]]])
    r = m[0][0]
    # delete the row of vertex 0 and the column of vertex 1
    x = _det2([[m[1][0], m[1][2]], [m[2][0], m[2][2]]])
    return PolyQuad(generation=0, p=p, q=q, r=r, x=x)


# ----------------------------------------------------------------------- step


def recursion_step(pq: PolyQuad, *, normalize: bool = True) -> PolyQuad:
    """Advance the quadruple one generation.

    With ``normalize`` (default) every polynomial is divided by the new
    R's constant term, keeping coefficient sizes linear in n; the step
    map is homogeneous, so S and T are unaffected.  Raw mode keeps the
    integer coefficients for coefficient-level comparisons.
    """
    p, q, r, x = pq.p, pq.q, pq.r, pq.x
    q2 = q * q
    r2 = r * r
    r3 = r2 * r
    qr2 = q * r2

    q_next = (
        (q2 * r).scaled(3)
        + (p * r2).shift()
        + qr2.shift().scaled(4)
        + r3.shift().shift()
    )
    r_next = (r2 * q).scaled(2) + r3.shift()
    x_next = (q * r * x).scaled(2) + (r2 * x).shift() - r * (x * x)

    cube = [cq + cx for cq, cx in zip(_cube5(q), _cube5(x))]
    if cube[0] != 0:
        raise RuntimeError(
            f"recursion inconsistency at generation {pq.generation}: "
            f"Q**3 + X**3 has a nonzero constant term"
        )
    low = TruncPoly(2 * cube[1], 2 * cube[2], 2 * cube[3], 2 * cube[4])
    p_next = (
        low
        + (p * q * r).scaled(6)
        + (q2 * r).scaled(9)
        + (p * r2).shift().scaled(3)
        + qr2.shift().scaled(6)
        + r3.shift().shift()
    )
    # degree 3 of p would need untracked degree-4 data; never consumed
    p_next = TruncPoly(p_next.c0, p_next.c1, p_next.c2, _ZERO)
    if p_next.c0 == 0 or r_next.c0 <= 0:
        raise RuntimeError(
            f"recursion inconsistency at generation {pq.generation + 1}: "
            f"degenerate constant terms"
        )
    if normalize:
        inv = Fraction(1) / r_next.c0
        p_next = p_next.scaled(inv)
        q_next = q_next.scaled(inv)
        x_next = x_next.scaled(inv)
        r_next = r_next.scaled(inv)
    return PolyQuad(
        generation=pq.generation + 1, p=p_next, q=q_next, r=r_next, x=x_next
    )


def exact_sums(pq: PolyQuad) -> ExactCoherence:
    """Vieta extraction: S, T and the coherences at this generation."""
    a0, a1, a2 = pq.p.c0, pq.p.c1, pq.p.c2
    if a0 == 0:
        raise RuntimeError("recursion inconsistency: vanishing constant term")
    s = -a1 / a0
    t = s * s - 2 * a2 / a0
    nv = family_vertices(pq.generation)
    return ExactCoherence(
        generation=pq.generation,
        n_vertices=nv,
        s=s,
        t=t,
        h_fo=s / (2 * nv),
        h_so=t / (2 * nv),
    )


def coherence_recursion(n: int, *, normalize: bool = True) -> ExactCoherence:
    """Exact coherence of the generation-n edge-subdivision graph."""
    if n < 0:
        raise ValueError("generation must be nonnegative")
    pq = seed_polyquad()
    for _ in range(n):
        pq = recursion_step(pq, normalize=normalize)
    return exact_sums(pq)


# ----------------------------------------------------- closed-form coefficients


class ClosedCoeffs(NamedTuple):
    """The twelve tracked coefficients at one generation, in closed form."""

    p0: Fraction
    p1: Fraction
    p2: Fraction
    q0: Fraction
    q1: Fraction
    q2: Fraction
    r0: Fraction
    r1: Fraction
    r2: Fraction
    x0: Fraction
    x1: Fraction
    x2: Fraction

    @classmethod
    def from_polyquad(cls, pq: PolyQuad) -> "ClosedCoeffs":
        return cls(
            pq.p.c0, pq.p.c1, pq.p.c2,
            pq.q.c0, pq.q.c1, pq.q.c2,
            pq.r.c0, pq.r.c1, pq.r.c2,
            pq.x.c0, pq.x.c1, pq.x.c2,
        )


def _quarter(v: int, n: int) -> int:
    if v % 4 != 0:
        raise ArithmeticError(f"closed-form transcription inconsistency at n={n}")
    return v // 4


def _pow23(e2: int, e3: int) -> Fraction:
    """Exact 2**e2 * 3**e3 for signed integer exponents."""
    v = Fraction(2**e2) if e2 >= 0 else Fraction(1, 2**-e2)
    v *= Fraction(3**e3) if e3 >= 0 else Fraction(1, 3**-e3)
    return v


def closed_coeffs(n: int) -> ClosedCoeffs:
    """Closed forms of the twelve raw (unnormalized) coefficients.

    Every exponent of the shared 2**a * 3**b prefactors arrives as a
    multiple of four; integrality is checked before exponentiation and
    violations abort rather than round.
    """
    if n < 0:
        raise ValueError("generation must be nonnegative")
    t = 3 ** (1 + n)

    def q4(v: int) -> int:
        return _quarter(v, n)

    p0 = -_pow23(q4(-7 + t - 2 * n), q4(5 + t + 2 * n)) * (1 + 3**n)
    q0 = _pow23(q4(-3 + t - 2 * n), q4(1 + t + 2 * n))
    r0 = _pow23(q4(1 + t + 2 * n), q4(-3 + t - 2 * n))
    x0 = -q0
    p1 = Fraction(1, 7) * _pow23(q4(-15 + t - 2 * n), q4(1 + t - 2 * n)) * (
        25 * 2**n - 7 * 3**n + 8 * 3 ** (1 + 2 * n)
        + 25 * 3 ** (1 + 3 * n) + 5 * 6 ** (1 + n) - 35 * 18**n
    )
    q1 = Fraction(1, 7) * _pow23(q4(-11 + t - 2 * n), q4(-3 + t - 2 * n)) * (
        -11 * 2 ** (2 + n) + 7 * 3**n - 25 * 3 ** (1 + 2 * n)
    )
    r1 = Fraction(1, 7) * _pow23(q4(-7 + t + 2 * n), q4(-7 + t - 6 * n)) * (
        3 * 2 ** (2 + n) - 25 * 3 ** (1 + 2 * n) + 7 * 3**n * (-1 + 2 ** (2 + n))
    )
    x1 = Fraction(1, 7) * _pow23(q4(-11 + t - 2 * n), q4(-3 + t - 2 * n)) * (
        2 ** (1 + n) - 7 * 3**n + 25 * 3 ** (1 + 2 * n) - 7 * 6 ** (1 + n)
    )
    p2 = Fraction(1, 5635) * _pow23(q4(-27 + t - 2 * n), q4(-7 + t - 6 * n)) * (
        -41 * 2 ** (7 + 2 * n) * 3 ** (1 + n)
        - 9775 * 2 ** (1 + n) * 3 ** (3 + 2 * n)
        + 129283 * 3 ** (1 + 3 * n)
        - 71875 * 3 ** (3 + 5 * n)
        + 9039 * 4 ** (2 + n)
        - 20125 * 6 ** (1 + n)
        + 93541 * 9**n
        + 79373 * 4 ** (2 + n) * 9**n
        + 147163 * 9 ** (1 + 2 * n)
        + 100625 * 2 ** (1 + n) * 9 ** (1 + 2 * n)
        - 64975 * 54 ** (1 + n)
    )
    q2 = Fraction(1, 5635) * _pow23(q4(-23 + t - 2 * n), q4(-11 + t - 6 * n)) * (
        8855 * 2 ** (3 + n) * 3 ** (1 + n)
        - 1127 * 2 ** (7 + 2 * n) * 3 ** (1 + n)
        + 71875 * 3 ** (3 + 4 * n)
        - 18819 * 4 ** (2 + n)
        - 93541 * 9**n
        - 61985 * 4 ** (2 + n) * 9**n
        + 31625 * 2 ** (3 + n) * 9 ** (1 + n)
        - 36596 * 27 ** (1 + n)
    )
    r2 = Fraction(1, 5635) * _pow23(q4(-19 + t + 2 * n), q4(-15 + t - 10 * n)) * (
        18873 * 2 ** (3 + 2 * n)
        + 161 * 2 ** (4 + 2 * n) * 3 ** (3 + n)
        - 115 * 2 ** (9 + n) * 3 ** (1 + 2 * n)
        - 29288 * 3 ** (2 + 3 * n)
        - 20125 * 2 ** (3 + n) * 3 ** (2 + 3 * n)
        + 71875 * 3 ** (3 + 4 * n)
        - 805 * 6 ** (3 + n)
        + 127351 * 9**n
        - 28175 * 2 ** (3 + 2 * n) * 9**n
    )
    x2 = Fraction(1, 5635) * _pow23(q4(-23 + t - 2 * n), q4(-11 + t - 6 * n)) * (
        1413 * 2 ** (3 + 2 * n)
        - 805 * 2 ** (2 + n) * 3 ** (1 + n)
        + 1771 * 2 ** (4 + 2 * n) * 3 ** (1 + n)
        - 71875 * 3 ** (3 + 4 * n)
        + 93541 * 9**n
        - 28175 * 2 ** (3 + 2 * n) * 9**n
        - 8165 * 2 ** (4 + n) * 9 ** (1 + n)
        + 36596 * 27 ** (1 + n)
        + 20125 * 2 ** (2 + n) * 27 ** (1 + n)
    )
    return ClosedCoeffs(p0, p1, p2, q0, q1, q2, r0, r1, r2, x0, x1, x2)


# ----------------------------------------------------------- closed-form sums


def _require_theorem_domain(n: int) -> None:
    if n < 1:
        raise ValueError(
            "outside theorem domain (closed forms start at generation 1); "
            "use the recursion or a spectral route"
        )


def psfw_theorem1(n: int) -> tuple[Fraction, Fraction]:
    """Closed-form (h_fo, h_so) for the edge-subdivision family, n >= 1."""
    _require_theorem_domain(n)
    h_fo = Fraction(1, 28 * (1 + 3**n) ** 2 * 3 ** (2 + n)) * (
        25 * 2**n - 7 * 3**n + 8 * 3 ** (1 + 2 * n)
        + 25 * 3 ** (1 + 3 * n) + 5 * 6 ** (1 + n) - 35 * 18**n
    )
    h_so = Fraction(1, 90160 * (1 + 3**n) ** 3 * 3 ** (4 + 2 * n)) * (
        69538 * 3 ** (2 + 5 * n)
        + 360249 * 4**n
        + 35 * 2 ** (2 + n) * 3 ** (1 + n) * (-575 + 1539 * 2**n)
        + 322 * 27**n * (1135 - 3225 * 2 ** (1 + n) + 847 * 2 ** (1 + 2 * n))
        + 3 ** (1 + 4 * n) * (516262 - 60375 * 2 ** (2 + n) + 140875 * 4**n)
        + 2 * 9**n * (55223 - 94875 * 2 ** (1 + n) + 480487 * 4**n)
    )
    return h_fo, h_so


def sierpinski_theorem2(n: int) -> tuple[Fraction, Fraction]:
    """Closed-form (h_fo, h_so) for the corner-glued family, n >= 1."""
    _require_theorem_domain(n)
    h_fo = Fraction(1, 20 * 3 ** (2 + n) * (1 + 3**n) ** 2) * (
        4 * 3**n + 2 * 3 ** (1 + 2 * n) - 3 ** (1 + 3 * n)
        + 13 * 3 ** (1 + n) * 5**n + 4 * 5 ** (1 + n) + 14 * 45**n
    )
    h_so = Fraction(1, 400 * (1 + 3**n) ** 3 * 9 ** (2 + n)) * (
        86 * 3 ** (1 + 4 * n)
        - 2 * 3 ** (2 + 5 * n)
        + 754 * 3 ** (1 + 2 * n) * 5**n
        + 568 * 3 ** (1 + 3 * n) * 5**n
        + 32 * 3 ** (2 + n) * 5 ** (1 + 2 * n)
        + 119 * 9**n
        + 28 * 5**n * 9 ** (1 + 2 * n)
        + 64 * 15 ** (1 + n)
        + 8 * 9 ** (1 + 2 * n) * 25**n
        + 24 * 25 ** (1 + n)
        + 320 * 27**n
        + 1237 * 225**n
        + 394 * 675**n
    )
    return h_fo, h_so


# ------------------------------------------------------------------ asymptote


def asymptote(family: str, order: int, n_vertices: int | float) -> float:
    """Leading-order coherence prediction at a given graph size.

    Apart from the size-independent first-order law of the
    edge-subdivision family, these are power laws whose prefactors pair
    with the generation scale g = (2N - 3) / 3, equal to 3**n at the
    exact family sizes:

        psfw, order 1:        25/84
        psfw, order 2:        (25/432) * g**(log3(4)  - 1)
        sierpinski, order 1:  (7/90)   * g**(log3(5)  - 1)
        sierpinski, order 2:  (1/450)  * g**(log3(25) - 1)

    Written against N itself the same powers hold but each prefactor
    picks up a factor (2/3)**exponent; g is the faithful scale.
    """
    if n_vertices < 3:
        raise ValueError("size must be at least 3")
    g = (2.0 * float(n_vertices) - 3.0) / 3.0
    log3 = math.log(3.0)
    if family == "psfw":
        if order == 1:
            return 25.0 / 84.0
        if order == 2:
            return (25.0 / 432.0) * g ** (math.log(4.0) / log3 - 1.0)
    elif family == "sierpinski":
        if order == 1:
            return (7.0 / 90.0) * g ** (math.log(5.0) / log3 - 1.0)
        if order == 2:
            return (1.0 / 450.0) * g ** (math.log(25.0) / log3 - 1.0)
    raise ValueError("family must be 'psfw' or 'sierpinski' and order 1 or 2")
