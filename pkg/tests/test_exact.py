import math
import time
from fractions import Fraction

import pytest

from netcoherence.exact import (
    ClosedCoeffs,
    TruncPoly,
    asymptote,
    closed_coeffs,
    coherence_recursion,
    family_vertices,
    psfw_theorem1,
    recursion_step,
    seed_polyquad,
    sierpinski_theorem2,
)
from netcoherence.generators import psfw_iterative, sierpinski
from netcoherence.spectral import coherence_dense

F = Fraction


def test_truncpoly_arithmetic():
    a = TruncPoly.make(1, 2, 0, 0)
    b = TruncPoly.make(3, 0, 1, 0)
    assert (a + b).coeffs == (F(4), F(2), F(1), F(0))
    # (1 + 2x)(3 + x^2) truncated at degree 3
    assert (a * b).coeffs == (F(3), F(6), F(1), F(2))
    assert a.scaled(F(1, 2)).coeffs == (F(1, 2), F(1), F(0), F(0))


def test_seed_quadruple_from_triangle_determinants():
    pq = seed_polyquad()
    assert pq.generation == 0
    assert pq.p.coeffs == (F(-9), F(6), F(-1), F(0))
    assert pq.q.coeffs == (F(3), F(-4), F(1), F(0))
    assert pq.r.coeffs == (F(2), F(-1), F(0), F(0))
    assert pq.x.coeffs == (F(-3), F(1), F(0), F(0))


def test_first_unnormalized_step_coefficients():
    pq = recursion_step(seed_polyquad(), normalize=False)
    assert pq.generation == 1
    assert pq.p.coeffs == (F(-324), F(585), F(-394), F(0))
    assert pq.q.coeffs == (F(54), F(-159), F(160), F(-71))
    assert pq.r.coeffs == (F(24), F(-48), F(34), F(-10))
    assert pq.x.coeffs == (F(-54), F(87), F(-50), F(12))


def test_power_sums_first_generations():
    ec0 = coherence_recursion(0)
    assert (ec0.h_fo, ec0.h_so) == (F(1, 9), F(1, 27))
    ec1 = coherence_recursion(1)
    assert (ec1.s, ec1.t) == (F(65, 36), F(1073, 1296))
    assert (ec1.h_fo, ec1.h_so) == (F(65, 432), F(1073, 15552))
    ec2 = coherence_recursion(2)
    assert (ec2.s, ec2.t) == (F(1657, 270), F(274559, 72900))
    assert ec2.n_vertices == 15


def test_normalization_does_not_change_results():
    for n in (1, 3, 5, 8):
        raw = coherence_recursion(n, normalize=False)
        norm = coherence_recursion(n)
        assert (raw.h_fo, raw.h_so) == (norm.h_fo, norm.h_so)


def test_constant_term_invariant():
    # x(0) = -q(0) at every generation; the step relies on it
    pq = seed_polyquad()
    for _ in range(8):
        assert pq.x.c0 == -pq.q.c0
        pq = recursion_step(pq)


def test_closed_coefficients_match_raw_recursion():
    pq = seed_polyquad()
    for n in range(11):
        assert closed_coeffs(n) == ClosedCoeffs.from_polyquad(pq), n
        if n < 10:
            pq = recursion_step(pq, normalize=False)


def test_theorem_values_first_generation():
    assert psfw_theorem1(1) == (F(65, 432), F(1073, 15552))
    assert sierpinski_theorem2(1) == (F(65, 432), F(1073, 15552))


def test_gasket_theorem_values():
    assert sierpinski_theorem2(2) == (F(899, 4050), F(129983, 546750))
    assert sierpinski_theorem2(3) == (
        F(338827, 952560),
        F(15724565081, 10802030400),
    )


def test_recursion_equals_closed_form_exactly():
    for n in range(1, 16):
        ec = coherence_recursion(n)
        assert (ec.h_fo, ec.h_so) == psfw_theorem1(n), n


def test_theorem_domain_errors():
    for fn in (psfw_theorem1, sierpinski_theorem2):
        with pytest.raises(ValueError, match="outside theorem domain"):
            fn(0)
        with pytest.raises(ValueError, match="outside theorem domain"):
            fn(-2)


def test_closed_forms_match_spectra():
    for n in (1, 2, 3, 4):
        h_fo, h_so = psfw_theorem1(n)
        rep = coherence_dense(psfw_iterative(n).graph)
        assert rep.h_fo == pytest.approx(float(h_fo), rel=1e-10)
        assert rep.h_so == pytest.approx(float(h_so), rel=1e-10)
        h_fo, h_so = sierpinski_theorem2(n)
        rep = coherence_dense(sierpinski(n).graph)
        assert rep.h_fo == pytest.approx(float(h_fo), rel=1e-10)
        assert rep.h_so == pytest.approx(float(h_so), rel=1e-10)


def test_second_order_coherence_grows():
    prev_p = prev_s = Fraction(0)
    for n in range(1, 13):
        hp = psfw_theorem1(n)[1]
        hs = sierpinski_theorem2(n)[1]
        assert hp > prev_p
        assert hs > prev_s
        prev_p, prev_s = hp, hs


def test_deep_recursion_is_fast():
    t0 = time.perf_counter()
    ec = coherence_recursion(30)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    assert (ec.h_fo, ec.h_so) == psfw_theorem1(30)
    assert ec.n_vertices == family_vertices(30)


def test_asymptote_matches_exact_tail():
    n = 20
    nv = family_vertices(n)
    h_fo_p, h_so_p = psfw_theorem1(n)
    # first-order subdivision coherence converges to a constant
    assert asymptote("psfw", 1, nv) == 25 / 84
    assert float(h_fo_p) == pytest.approx(25 / 84, rel=0.01)
    assert asymptote("psfw", 2, nv) == pytest.approx(float(h_so_p), rel=0.01)
    h_fo_s, h_so_s = sierpinski_theorem2(n)
    assert asymptote("sierpinski", 1, nv) == pytest.approx(float(h_fo_s), rel=1e-3)
    assert asymptote("sierpinski", 2, nv) == pytest.approx(float(h_so_s), rel=1e-3)


def test_asymptote_guards():
    with pytest.raises(ValueError, match="order"):
        asymptote("psfw", 3, 100)
    with pytest.raises(ValueError, match="family"):
        asymptote("ring", 1, 100)
    with pytest.raises(ValueError, match="at least 3"):
        asymptote("psfw", 1, 2)


def test_scaling_exponents_visible_in_exact_values():
    # ratio h(n+1)/h(n) approaches the per-generation growth factor;
    # the subdivision family needs deep n because its correction decays
    # like (3/4)^n
    r_so_p = psfw_theorem1(41)[1] / psfw_theorem1(40)[1]
    assert float(r_so_p) == pytest.approx(4 / 3, rel=1e-4)
    r_fo_s = sierpinski_theorem2(21)[0] / sierpinski_theorem2(20)[0]
    assert float(r_fo_s) == pytest.approx(5 / 3, rel=1e-4)
    r_so_s = sierpinski_theorem2(21)[1] / sierpinski_theorem2(20)[1]
    assert float(r_so_s) == pytest.approx(25 / 3, rel=1e-4)
    assert math.isclose(
        math.log(4 / 3) / math.log(3), math.log(4, 3) - 1, rel_tol=1e-12
    )
