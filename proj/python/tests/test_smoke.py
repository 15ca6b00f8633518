import math

import mpmath
import pytest

import zetakit


def test_zeta_matches_mpmath():
    for s in (2.0, complex(0.5, 14.134725), complex(0.3, -7.0), complex(-1.5, 2.0)):
        expected = complex(mpmath.zeta(s))
        got = zetakit.zeta(s).value
        assert abs(got - expected) < 1e-8 * max(1.0, abs(expected))


def test_regimes_and_errors():
    assert zetakit.zeta(2.0).regime == zetakit.Regime.dirichlet
    assert zetakit.zeta(-2.0).value == 0
    with pytest.raises(zetakit.UndefinedPointError):
        zetakit.zeta(1.0)
    with pytest.raises(zetakit.Error):
        zetakit.zeta(0.0)
    with pytest.raises(zetakit.DomainError):
        zetakit.factorize(0)


def test_gamma_matches_mpmath():
    for z in (complex(0.5, 3.0), complex(-2.5, 1.0), complex(7.0, -4.0)):
        expected = complex(mpmath.gamma(z))
        assert abs(zetakit.gamma(z) - expected) < 1e-12 * abs(expected)


def test_arith():
    assert zetakit.factorize(12) == [(2, 2), (3, 1)]
    assert zetakit.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [zetakit.beta_divisor_sum(n) for n in range(1, 11)] == [1, -2, 0, 1, 0, 0, 0, -2, 1, 0]
    b = zetakit.beta_closed_form(8)
    assert (b.value, b.classification) == (-2, zetakit.BetaClass.twice_square)


def test_zeros_against_mpmath():
    zeros = zetakit.find_zeros(0.0, 30.0)
    assert len(zeros) == 3
    for k, z in enumerate(zeros, start=1):
        assert abs(z.t - float(mpmath.zetazero(k).imag)) < 1e-8


def test_probe_and_swap():
    t0 = zetakit.find_zeros(14.0, 15.0, 0.5)[0].t
    on_line = zetakit.probe_zero(0.5, t0)
    assert abs(on_line.residual_31) < 1e-4 and on_line.A is None
    off_line = zetakit.probe_zero(0.75, t0)
    assert off_line.coeffs.det > 0
    assert abs(off_line.zeta2s) > 1e-3
    reports = zetakit.swap_discrepancy(1.0, 2.0, [50, 400])
    assert reports[-1].gap < 1e-4 and reports[-1].matched_gap == 0.0


def test_mrzf():
    assert math.isclose(zetakit.mrzf(2, 1, 1.0, 0.75), -math.sin(math.log(2)) / 2 ** 0.75, rel_tol=1e-15)


def test_verify_identities():
    checks = zetakit.verify("identities")
    assert checks and all(c["passed"] for c in checks)
    with pytest.raises(ValueError):
        zetakit.verify("nope")
