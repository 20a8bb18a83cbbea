"""Weights, quadrature, recurrence recovery, and Weyl functions."""

import cmath
import math

import numpy as np
import pytest

from cmvpencil.errors import (
    BandEdgeError,
    InvalidParameterError,
    NonConvergenceError,
)
from cmvpencil.measures import (
    Measure,
    essential_spectrum_periodic,
    gram,
    integrate,
    m_full,
    m_per,
    named_weight,
    periodic_weight_verbatim,
    stieltjes_perron_density,
    stieltjes_recurrence,
    validate_periodic_density,
    weyl_point,
)
from cmvpencil.recurrences import (
    ReflectionSequence,
    jacobi_opuc_reflections,
    pencil_recurrence,
    sdg_recurrence,
)

# frozen values computed independently with 40-digit quadrature
GEN_GEG_M0 = 5.65051330225180013236983  # mass, xi = 0.5, eta = 0.25
GEN_GEG_M2 = 10.27366054954872751339969  # second moment
SDG_MASS = 256.0 / 15.0  # mass, xi = 1, eta = 0.5
BIG_M1_MASS = 0.1034708931315469  # mass, alpha = 2, beta = 3, c = 0.4
M_PER_ORACLE = -0.4565129821946941898652524 + 0.3747031412172208193425578j  # z = 1.3+0.4i, lam = 1.7


def test_integrate_moments_against_oracle():
    m = named_weight("gen_gegenbauer", xi=0.5, eta=0.25)
    assert integrate(m, lambda x: x * 0 + 1, 1e-12) == pytest.approx(
        GEN_GEG_M0, rel=1e-12
    )
    assert integrate(m, lambda x: x * x, 1e-12) == pytest.approx(
        GEN_GEG_M2, rel=1e-12
    )
    # odd moment vanishes by symmetry; tolerance is relative to |integrand|
    assert integrate(m, lambda x: x, 1e-12) == pytest.approx(0.0, abs=1e-10)


def test_sdg_mass_oracle():
    m = named_weight("sdg", xi=1.0, eta=0.5)
    assert integrate(m, lambda x: x * 0 + 1, 1e-12) == pytest.approx(
        SDG_MASS, rel=1e-12
    )


def test_periodic_mass_is_two_pi():
    for lam in (0.5, 1.0, 2.0, 3.7):
        m = named_weight("periodic", lam=lam)
        assert integrate(m, lambda t: t * 0 + 1, 1e-10) == pytest.approx(
            2 * math.pi, rel=1e-9
        )


def test_periodic_first_moment_is_lam():
    for lam in (0.5, 2.0):
        m = named_weight("periodic", lam=lam)
        mass = integrate(m, lambda t: t * 0 + 1, 1e-11)
        first = integrate(m, lambda t: t, 1e-11)
        assert first / mass == pytest.approx(lam, abs=1e-10)


def test_integrate_rejects_tiny_tol():
    m = named_weight("sdg", xi=0.0, eta=0.0)
    with pytest.raises(InvalidParameterError):
        integrate(m, lambda x: x, 1e-14)


def test_integrate_detects_undeclared_singularity():
    # density claims to be regular while actually blowing up at the edge
    m = Measure(
        support=((-1.0, 1.0),),
        density=lambda x: (1.0 - np.asarray(x)) ** -0.9,
        endpoint_exponents=(),
    )
    with pytest.raises(NonConvergenceError):
        integrate(m, lambda x: x * 0 + 1, 1e-10)


def test_measure_validation():
    with pytest.raises(InvalidParameterError):
        Measure(support=((1.0, -1.0),), density=lambda x: x, endpoint_exponents=())
    with pytest.raises(InvalidParameterError):
        Measure(
            support=((-1.0, 1.0),),
            density=lambda x: x,
            endpoint_exponents=((1.0, -1.5),),
        )


def test_named_weight_validation():
    with pytest.raises(InvalidParameterError):
        named_weight("no_such_family")
    with pytest.raises(InvalidParameterError):
        named_weight("sdg", xi=-2.0, eta=0.0)
    with pytest.raises(InvalidParameterError):
        named_weight("big_m1", alpha=1.0, beta=1.0, c=1.5)
    with pytest.raises(InvalidParameterError):
        named_weight("periodic", lam=-1.0)
    with pytest.raises(InvalidParameterError):
        named_weight("sdg", xi=0.0, eta=0.0, extra=1)


def test_stieltjes_recovers_symmetric_rationals():
    # u_1 = 20/11 and u_2 = 32/55 for the plain even weight, independently
    # derived from moment quadrature
    m = named_weight("gen_gegenbauer", xi=0.5, eta=0.25)
    rec = stieltjes_recurrence(m, 6, tol=1e-11)
    assert rec.b(0) == pytest.approx(0.0, abs=1e-12)
    assert rec.u(1) == pytest.approx(20.0 / 11.0, rel=1e-10)
    assert rec.u(2) == pytest.approx(32.0 / 55.0, rel=1e-10)


def test_stieltjes_matches_closed_form_family():
    # dual route: quadrature-only recovery against the reflection formulas
    for xi, eta in ((0.0, 0.0), (1.0, 0.5)):
        m = named_weight("sdg", xi=xi, eta=eta)
        rec = stieltjes_recurrence(m, 13, tol=1e-10)
        expected = sdg_recurrence(jacobi_opuc_reflections(xi, eta))
        for n in range(13):
            assert float(rec.b(n)) == pytest.approx(float(expected.b(n)), abs=1e-8)
            assert float(rec.u(n)) == pytest.approx(float(expected.u(n)), abs=1e-8)


def test_stieltjes_big_m1_oracle():
    m = named_weight("big_m1", alpha=2.0, beta=3.0, c=0.4)
    mass = integrate(m, lambda y: y * 0 + 1, 1e-12)
    assert mass == pytest.approx(BIG_M1_MASS, rel=1e-10)
    rec = stieltjes_recurrence(m, 4, tol=1e-11)
    assert rec.b(0) == pytest.approx(0.4, abs=1e-11)
    assert rec.u(1) == pytest.approx(0.48, abs=1e-11)


def test_stieltjes_envelope_guard():
    m = named_weight("sdg", xi=0.0, eta=0.0)
    with pytest.raises(InvalidParameterError):
        stieltjes_recurrence(m, 31)


def test_gram_identity_and_orthogonality():
    xi, eta = 1.0, 0.5
    m = named_weight("sdg", xi=xi, eta=eta)
    rec = sdg_recurrence(jacobi_opuc_reflections(xi, eta))
    assert gram(m, rec, rec, 4, 4) == pytest.approx(1.0, abs=1e-12)
    for n, k in ((0, 1), (2, 5), (3, 4)):
        assert abs(gram(m, rec, rec, n, k)) < 1e-9


def test_essential_spectrum_bands():
    assert essential_spectrum_periodic(2.0) == ((-3.0, -1.0), (1.0, 3.0))
    assert essential_spectrum_periodic(1.0) == ((-2.0, 0.0), (0.0, 2.0))
    assert essential_spectrum_periodic(0.0) == ((-1.0, -1.0), (1.0, 1.0))
    with pytest.raises(InvalidParameterError):
        essential_spectrum_periodic(-0.5)


def test_m_per_frozen_oracle():
    m = m_per(1.3 + 0.4j, 1.7)
    assert abs(m - M_PER_ORACLE) < 1e-14


def test_m_per_satisfies_quadratic_and_conjugation():
    for z, lam in ((0.4 + 1.1j, 0.6), (-2.0 + 0.3j, 2.0), (1.0 - 0.5j, 1.0)):
        m = m_per(z, lam)
        residual = lam * lam * z * m * m + (z * z - 1 + lam * lam) * m + z
        assert abs(residual) < 1e-13
        assert m_per(z.conjugate(), lam) == pytest.approx(m.conjugate(), abs=1e-13)


def test_m_per_herglotz_sign():
    for t in np.linspace(-3.5, 3.5, 29):
        z = complex(t, 0.3)
        assert m_per(z, 2.0).imag > 0
        assert m_full(z, 2.0).imag > 0


def test_m_per_asymptotics():
    z = 1e7j
    assert abs(z * m_per(z, 1.3) + 1) < 1e-6


def test_m_per_real_axis_handling():
    # outside the bands: real limit agrees with the lifted value
    val = m_per(5.0, 2.0)
    assert val.imag == 0
    assert val == pytest.approx(m_per(5.0 + 1e-9j, 2.0).real, abs=1e-6)
    with pytest.raises(InvalidParameterError):
        m_per(2.0, 2.0)  # strictly inside a band
    with pytest.raises(InvalidParameterError):
        m_per(0.0, 2.0)  # point-mass pole for lam > 1
    m_per(0.0, 0.5)  # but fine for lam < 1
    with pytest.raises(BandEdgeError):
        m_per(3.0, 2.0)  # band edge |z| = lam + 1


def test_m_full_pole_free_and_point():
    wp = weyl_point(1.0 + 1.0j, 2.0)
    assert wp.value == pytest.approx(m_full(1.0 + 1.0j, 2.0))
    # the composed function keeps Herglotz positivity where m_per has its atom
    assert m_full(0.02j, 2.0).imag > 0


def test_density_is_weyl_boundary_value():
    assert validate_periodic_density(0.5) < 1e-4
    assert validate_periodic_density(2.0) < 1e-4
    # spot check: density equals 2*Im m_full just above the band
    t, lam = 1.6, 2.0
    assert stieltjes_perron_density(lam, t) == pytest.approx(
        2 * m_full(complex(t, 1e-9), lam).imag, rel=1e-6
    )


def test_density_lam1_closed_form():
    for t in (-1.5, 0.3, 1.9):
        assert stieltjes_perron_density(1.0, t) == pytest.approx(
            math.sqrt((2 + t) / (2 - t)), rel=1e-12
        )
    with pytest.raises(InvalidParameterError):
        stieltjes_perron_density(2.0, 0.5)  # in the gap


def test_verbatim_display_disagrees():
    # the alternative closed form deviates at O(1) away from lam = 1;
    # it is kept only so the discrepancy can be reported
    lam, t = 2.0, 1.6
    reference = stieltjes_perron_density(lam, t)
    assert abs(periodic_weight_verbatim(lam, t) - reference) / reference > 0.1
    lam1_dev = abs(
        periodic_weight_verbatim(1.0, 0.7) - stieltjes_perron_density(1.0, 0.7)
    )
    assert lam1_dev < 1e-12  # the two displays agree at lam = 1


def test_periodic_weight_recovers_free_recurrence():
    lam = 2.0
    m = named_weight("periodic", lam=lam)
    rec = stieltjes_recurrence(m, 12, tol=1e-9)
    expected = pencil_recurrence(ReflectionSequence.constant(0.0), lam)
    for n in range(12):
        assert float(rec.b(n)) == pytest.approx(float(expected.b(n)), abs=1e-8)
        assert float(rec.u(n)) == pytest.approx(float(expected.u(n)), abs=1e-8)
