import math
import random

import pytest
from hypothesis import given, strategies as st

from expwave.errors import (
    DomainError,
    FrameDegenerateError,
    InvalidParamsError,
    UnsupportedFamilyError,
)
from expwave.reduction import (
    C1_LEMNISCATIC,
    CaseLabel,
    EquationParams,
    FamilyLabel,
    FrameParams,
    classify_case,
    classify_family,
    conserved_c1,
    elliptic_data,
    family_params,
    first_integral,
    traveling_ode,
)

FR1 = FrameParams.from_lambda_gamma(1.0)
FRN = FrameParams.from_lambda_gamma(-1.0)


def test_classify_family_catalogued():
    assert classify_family(EquationParams(1.0, -1.0, 1.0, -2.0)) is FamilyLabel.Tzitzeica
    assert classify_family(EquationParams(1.0, 0.0, 1.0, 0.0)) is FamilyLabel.Liouville
    assert classify_family(EquationParams(0.5, -0.5, 2.0, -2.0)) is FamilyLabel.SinhGordon
    assert classify_family(EquationParams(-1.0, 1.0, 1.0, -2.0)) is FamilyLabel.DoddBullough
    assert classify_family(EquationParams(1.0, 1.0, 1.0, -2.0)) is FamilyLabel.TzitzeicaDoddBullough
    assert classify_family(EquationParams(-1.0, -1.0, 1.0, -2.0)) is FamilyLabel.DoddBulloughMikhailov
    assert classify_family(EquationParams.sine_gordon()) is FamilyLabel.SineGordon
    # round trip through the catalogued tuples is the identity
    for fam in FamilyLabel:
        if fam is FamilyLabel.GenericTwoExponential:
            continue
        assert classify_family(family_params(fam)) is fam


def test_classify_family_generic_and_invalid():
    assert classify_family(EquationParams(1.0, 1.0, 2.0, -1.0)) is \
        FamilyLabel.GenericTwoExponential
    with pytest.raises(InvalidParamsError):
        EquationParams(0.0, 0.0, 1.0, -2.0)
    with pytest.raises(InvalidParamsError):
        EquationParams(1.0, 0.0, 0.0, 0.0)


def test_frame_validation():
    with pytest.raises(FrameDegenerateError):
        FrameParams(lam=1.0, k=2.0, omega=2.0)
    with pytest.raises(FrameDegenerateError):
        FrameParams(lam=1.0, k=2.0, omega=-2.0)
    with pytest.raises(FrameDegenerateError):
        FrameParams(lam=0.0, k=0.0, omega=1.0)
    fr = FrameParams.from_lambda_gamma(2.5, xi0=0.3)
    assert (fr.k, fr.omega, fr.gamma) == (0.0, 1.0, 1.0)
    assert fr.lambda_gamma == 2.5
    assert fr.r == pytest.approx(1.0 / 2.5, rel=1e-16)
    full = FrameParams(lam=1.0 / 3.0, k=1.0, omega=2.0)
    assert full.gamma == 3.0
    assert full.lambda_gamma == pytest.approx(1.0)


def test_traveling_ode_values():
    ode = traveling_ode(family_params(FamilyLabel.Liouville), FR1)
    assert ode.f(2.0) == pytest.approx(8.0, abs=1e-15)
    ode = traveling_ode(family_params(FamilyLabel.Tzitzeica), FR1)
    assert ode.f(1.0) == 0.0
    ode = traveling_ode(family_params(FamilyLabel.SinhGordon),
                        FrameParams.from_lambda_gamma(2.0))
    assert ode.f(1.0) == 0.0
    # residual functional is h h'' - (h')^2 - f(h)
    assert ode.residual(1.0, 0.5, 2.0) == pytest.approx(2.0 - 0.25, abs=1e-15)
    with pytest.raises(FrameDegenerateError):
        FrameParams(lam=1.0, k=1.0, omega=1.0)


def test_first_integral_values():
    q = first_integral(family_params(FamilyLabel.Tzitzeica), FR1, 0.0)
    assert q.g(1.0) == pytest.approx(1.5, abs=1e-15)
    q = first_integral(family_params(FamilyLabel.Liouville), FR1, -1.0)
    assert q.g(1.0) == 0.0
    # psi-space turning point for the circular family at c1 = 1, psi = 0
    q = first_integral(EquationParams.sine_gordon(), FR1, 1.0)
    assert q.g_psi(0.0) == 0.0
    assert q.g_psi(math.pi) == pytest.approx(2.0, abs=1e-15)
    assert q.g_psi_prime(math.pi / 2.0) == pytest.approx(1.0, abs=1e-15)
    # hyperbolic family: G_psi = c1 + cosh(2 psi)/2
    q = first_integral(family_params(FamilyLabel.SinhGordon), FR1, 0.25)
    assert q.g_psi(0.0) == pytest.approx(0.75, abs=1e-15)
    assert q.g_psi_prime(0.3) == pytest.approx(math.sinh(0.6), rel=1e-15)


def test_liouville_single_exponential_branch():
    # beta = 0: no beta-term in G, b unused
    q = first_integral(family_params(FamilyLabel.Liouville), FR1, 2.0)
    assert q.g(3.0) == pytest.approx(5.0, abs=1e-15)
    # non-integer exponent with h < 0 is rejected
    q = first_integral(EquationParams(1.0, 0.0, 0.5, 0.0), FR1, 0.0)
    with pytest.raises(DomainError):
        q.g(-1.0)
    q = first_integral(family_params(FamilyLabel.Tzitzeica), FR1, 0.0)
    with pytest.raises(DomainError):
        q.g(0.0)  # negative exponent at h = 0
    with pytest.raises(InvalidParamsError):
        first_integral(EquationParams(1.0, 1.0, 1.0, 0.0), FR1, 0.0)


def test_elliptic_data_values():
    d = elliptic_data(FamilyLabel.Tzitzeica, FR1, -1.5)
    assert d.p == pytest.approx(-3.0, abs=1e-15)
    assert d.g2 == pytest.approx(0.75, abs=1e-15)
    assert d.g3 == pytest.approx(-0.125, abs=1e-15)
    assert d.delta == pytest.approx(0.0, abs=1e-15)
    assert d.repeated_root == pytest.approx(0.25, rel=1e-12)
    assert (d.a0, d.a1, d.a2, d.a3) == (1.0, 0.0, -3.0, 2.0)
    # the repeated-root invariants with unit double root
    from expwave.specfun import solve_weierstrass_cubic
    assert solve_weierstrass_cubic(12.0, -8.0).real == (1.0, 1.0, -2.0)
    # equianharmonic data: g2 = 0, g3 = -r^3/4, delta = -(27/16) r^6
    d = elliptic_data(FamilyLabel.Tzitzeica, FR1, 0.0)
    assert d.g2 == 0.0
    assert d.g3 == pytest.approx(-0.25, abs=1e-15)
    assert d.delta == pytest.approx(-27.0 / 16.0, rel=1e-14)
    with pytest.raises(UnsupportedFamilyError):
        elliptic_data(FamilyLabel.SineGordon, FR1, 0.0)
    with pytest.raises(UnsupportedFamilyError):
        elliptic_data(FamilyLabel.SinhGordon, FR1, 0.0)


def test_germ_discriminant_identity():
    # both closed forms of the discriminant agree for random (r, c1)
    rng = random.Random(11)
    for _ in range(200):
        lg = rng.uniform(0.2, 3.0) * rng.choice([1.0, -1.0])
        c1 = rng.uniform(-3.0, 3.0)
        frame = FrameParams.from_lambda_gamma(lg)
        d = elliptic_data(FamilyLabel.Tzitzeica, frame, c1)
        alt = -(d.r ** 3 / 16.0) * (d.p ** 3 + 27.0 * d.r ** 3)
        assert d.delta == pytest.approx(alt, rel=1e-12, abs=1e-300)


def test_root_identities():
    rng = random.Random(5)
    for _ in range(100):
        lg = rng.uniform(0.3, 2.0) * rng.choice([1.0, -1.0])
        c1 = rng.uniform(-3.0, 3.0)
        d = elliptic_data(FamilyLabel.Tzitzeica,
                          FrameParams.from_lambda_gamma(lg), c1)
        roots = d.roots
        if roots.all_real:
            e1, e2, e3 = roots.real
            assert e1 + e2 + e3 == pytest.approx(0.0, abs=1e-12)
            assert e1 * e2 + e1 * e3 + e2 * e3 == pytest.approx(-d.g2 / 4.0,
                                                                abs=1e-12)
            assert e1 * e2 * e3 == pytest.approx(d.g3 / 4.0, abs=1e-12)


def test_degenerate_forces_delta_zero():
    for lg in (0.5, 1.0, -2.0, 3.7):
        d = elliptic_data(FamilyLabel.Tzitzeica,
                          FrameParams.from_lambda_gamma(lg), -1.5)
        assert abs(d.delta) <= 1e-12 * max(abs(d.g2) ** 3, 27.0 * d.g3 ** 2)
        assert d.is_degenerate


def test_lemniscatic_forces_g3_zero():
    for lg in (0.5, 1.0, 2.0):
        d = elliptic_data(FamilyLabel.Tzitzeica,
                          FrameParams.from_lambda_gamma(lg), C1_LEMNISCATIC)
        assert abs(d.g3) <= 1e-12
        assert d.g2 == pytest.approx(3.0 * 4.0 ** (1.0 / 3.0) / 4.0 * d.r ** 2,
                                     rel=1e-13)


def test_classify_case_taxonomy():
    assert classify_case(FamilyLabel.Tzitzeica, FR1, -1.5) is CaseLabel.Degenerate1a
    assert classify_case(FamilyLabel.Tzitzeica, FRN, -1.5) is CaseLabel.Degenerate1b
    assert classify_case(FamilyLabel.Tzitzeica, FR1, 0.0) is CaseLabel.Equianharmonic
    assert classify_case(FamilyLabel.Tzitzeica, FR1, C1_LEMNISCATIC) is \
        CaseLabel.Lemniscatic
    assert classify_case(FamilyLabel.Tzitzeica, FR1, 1.0) is \
        CaseLabel.GeneralWeierstrass
    # sign-mapped variant hits the degenerate case at +3/2 with lg < 0
    assert classify_case(FamilyLabel.DoddBullough, FRN, 1.5) is CaseLabel.Degenerate1a
    assert classify_case(FamilyLabel.DoddBullough, FR1, 1.5) is CaseLabel.Degenerate1b
    assert classify_case(FamilyLabel.Liouville, FR1, 1.0) is CaseLabel.LiouvilleSoliton
    assert classify_case(FamilyLabel.Liouville, FR1, -1.0) is CaseLabel.LiouvillePeriodic
    assert classify_case(FamilyLabel.Liouville, FR1, 0.0) is CaseLabel.LiouvilleRational
    assert classify_case(FamilyLabel.SineGordon, FR1, 1.0) is CaseLabel.KinkC1Plus
    assert classify_case(FamilyLabel.SineGordon, FRN, -1.0) is CaseLabel.KinkC1Minus
    assert classify_case(FamilyLabel.SineGordon, FRN, 0.0) is CaseLabel.AmplitudeC1Zero
    assert classify_case(FamilyLabel.SineGordon, FR1, 3.0) is CaseLabel.AmplitudeGeneric
    assert classify_case(FamilyLabel.SinhGordon, FR1, 0.5) is CaseLabel.KinkC1Plus
    assert classify_case(FamilyLabel.SinhGordon, FR1, -0.5) is CaseLabel.KinkC1Minus
    assert classify_case(FamilyLabel.SinhGordon, FR1, 0.0) is CaseLabel.AmplitudeC1Zero
    assert classify_case(FamilyLabel.SinhGordon, FRN, -2.0) is CaseLabel.AmplitudeGeneric


@given(st.floats(min_value=0.1, max_value=5.0),
       st.floats(min_value=-0.2, max_value=5.0),
       st.floats(min_value=0.05, max_value=3.0))
def test_conserved_constant(h, dh, lg):
    # the recovered integration constant is exact on analytic states
    params = family_params(FamilyLabel.Tzitzeica)
    frame = FrameParams.from_lambda_gamma(lg)
    q = first_integral(params, frame, 0.7)
    dh_exact = math.sqrt(max(0.0, 2.0 * frame.r * h * h * q.g(h)))
    c1 = conserved_c1(params, frame, h, dh_exact)
    assert c1 == pytest.approx(0.7, rel=1e-10, abs=1e-10)
