import json
import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from expwave.errors import (
    CaseMismatchError,
    DomainError,
    SignDomainError,
    UnsupportedFamilyError,
)
from expwave.reduction import (
    C1_LEMNISCATIC,
    CaseLabel,
    FamilyLabel,
    FrameParams,
    family_params,
    first_integral,
)
from expwave.solutions import (
    construct,
    dodd_bullough,
    from_descriptor,
    implicit_relation,
    liouville,
    sine_gordon,
    sinh_gordon,
    tdb_dbm,
    tzitzeica,
)
from expwave.specfun import WeierstrassInvariants, weierstrass_p

FR1 = FrameParams.from_lambda_gamma(1.0)
FRN = FrameParams.from_lambda_gamma(-1.0)
XS = [-7.3, -2.0, -0.4, 0.3, 1.1, 2.6, 6.9]


# -- Liouville ---------------------------------------------------------------

def test_liouville_soliton_profile():
    sol = liouville(1.0, FR1)
    assert sol.case is CaseLabel.LiouvilleSoliton
    # peak value is -c1 at xi0, exponential decay in the tails
    assert sol.evaluate_h(0.0) == pytest.approx(-1.0, abs=1e-15)
    assert abs(sol.evaluate_h(25.0)) < 1e-14
    assert sol.singularities.kind == "none"
    # psi is unavailable where h <= 0
    assert math.isnan(sol.evaluate_psi(0.0))
    sol2 = liouville(-1.0, FRN)  # positive pulse
    assert sol2.evaluate_h(0.0) == pytest.approx(1.0)
    assert sol2.evaluate_psi(0.3) == math.log(sol2.evaluate_h(0.3))


def test_liouville_periodic_profile():
    sol = liouville(-1.0, FR1)
    assert sol.case is CaseLabel.LiouvillePeriodic
    kappa = math.sqrt(0.5)
    for x in XS:
        ref = 1.0 / math.cos(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-14)
    # pole lattice at the cosine zeros
    period = math.pi / kappa
    assert sol.singularities.period == pytest.approx(period)
    assert sol.singularities.distance(math.pi / (2.0 * kappa)) < 1e-12


def test_liouville_rational_value():
    sol = liouville(0.0, FrameParams.from_lambda_gamma(0.5))
    assert sol.evaluate_h(1.0) == pytest.approx(1.0, abs=1e-16)
    assert sol.evaluate_h(2.0) == pytest.approx(0.25, abs=1e-16)
    with pytest.raises(DomainError):
        sol.evaluate_h(0.0)
    assert sol.singularities.kind == "isolated"


# -- base cubic family -------------------------------------------------------

def test_dark_soliton_profile():
    sol = tzitzeica(-1.5, FR1)
    assert sol.case is CaseLabel.Degenerate1a
    assert sol.evaluate_h(0.0) == pytest.approx(-0.5, abs=1e-15)
    # unit background at infinity, minimum at the center
    assert sol.evaluate_h(30.0) == pytest.approx(1.0, abs=1e-12)
    assert sol.evaluate_h(-30.0) == pytest.approx(1.0, abs=1e-12)
    assert min(sol.evaluate_h(x) for x in XS) >= -0.5
    kappa = 0.5 * math.sqrt(3.0)
    for x in XS:
        ref = 1.0 - 1.5 / math.cosh(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-15)


def test_singular_companions():
    sol = tzitzeica(-1.5, FR1, branch=-1)
    kappa = 0.5 * math.sqrt(3.0)
    for x in (0.3, 1.2, 4.0):
        ref = 1.0 + 1.5 / math.sinh(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-15)
    assert sol.singularities.kind == "isolated"
    sol = tzitzeica(-1.5, FRN, branch=-1)
    for x in (0.4, 1.0):
        ref = 1.0 - 1.5 / math.sin(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-14)
    assert sol.singularities.distance(0.0) == 0.0


def test_periodic_degenerate_profiles():
    sol = tzitzeica(-1.5, FRN)
    assert sol.case is CaseLabel.Degenerate1b
    kappa = 0.5 * math.sqrt(3.0)
    assert sol.evaluate_h(0.0) == pytest.approx(-0.5, abs=1e-15)
    for x in (0.4, 1.1):
        ref = 1.0 - 1.5 / math.cos(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-14)


def test_equianharmonic_laurent():
    sol = tzitzeica(0.0, FR1)
    assert sol.case is CaseLabel.Equianharmonic
    # leading double-pole behaviour h ~ 2 lg / (xi - xi0)^2, with the next
    # Laurent correction g3 z^4/28 entering through 2 p
    for z in (0.05, 0.1):
        lead = 2.0 / (z * z)
        corr = 2.0 * (-0.25) * z ** 4 / 28.0
        assert sol.evaluate_h(z) == pytest.approx(lead + corr, rel=1e-8)
    assert sol.evaluate_h(0.1) == pytest.approx(200.0, rel=1e-6)


def test_lemniscatic_bounded_periodic():
    sol = tzitzeica(C1_LEMNISCATIC, FR1)
    assert sol.case is CaseLabel.Lemniscatic
    assert sol.bounded is True
    period = sol.params["period"]
    amp = 4.0 ** (-1.0 / 3.0)
    lo_expected = amp * (1.0 - math.sqrt(3.0))
    values = [sol.evaluate_h(-5.0 + 0.01 * i) for i in range(1001)]
    assert max(values) <= amp + 1e-12
    assert min(values) >= lo_expected - 1e-12
    for x in XS:
        assert sol.evaluate_h(x + period) == pytest.approx(sol.evaluate_h(x),
                                                           abs=1e-12)
    # lambda gamma < 0 is served by the sign-mapped variant instead
    with pytest.raises(SignDomainError):
        tzitzeica(C1_LEMNISCATIC, FRN)


def test_general_weierstrass_scale_shift():
    lg = 1.0
    c1 = 1.0
    sol = tzitzeica(c1, FR1)
    inv = WeierstrassInvariants(c1 * c1 / (3.0 * lg * lg),
                                -(4.0 * c1 ** 3 + 27.0) / (108.0 * lg ** 3))
    for x in (0.6, 1.3, 2.2):
        p, _ = weierstrass_p(x, inv)
        assert sol.evaluate_h(x) == pytest.approx(
            lg * (2.0 * p - c1 / (3.0 * lg)), rel=1e-14)
    # at the degenerate constant the general form reproduces the singular
    # companion exactly (the unbounded real branch)
    via_general = tzitzeica(-1.5, FR1, case=CaseLabel.GeneralWeierstrass)
    companion = tzitzeica(-1.5, FR1, branch=-1)
    for x in (0.3, 1.0, 2.5):
        assert via_general.evaluate_h(x) == pytest.approx(
            companion.evaluate_h(x), rel=1e-12)


# -- sign-mapped and reflected variants --------------------------------------

def test_db_soliton_profile():
    sol = dodd_bullough(1.5, FRN)
    assert sol.case is CaseLabel.Degenerate1a
    assert sol.evaluate_h(0.0) == pytest.approx(-0.5, abs=1e-15)
    kappa = 0.5 * math.sqrt(3.0)
    for x in XS:
        ref = 1.0 - 1.5 / math.cosh(kappa * x) ** 2
        assert sol.evaluate_h(x) == pytest.approx(ref, rel=1e-15)


def test_db_companions():
    kappa = 0.5 * math.sqrt(3.0)
    sol = dodd_bullough(1.5, FRN, branch=-1)
    for x in (0.4, 1.5):
        assert sol.evaluate_h(x) == pytest.approx(
            1.0 + 1.5 / math.sinh(kappa * x) ** 2, rel=1e-14)
    sol = dodd_bullough(1.5, FR1)
    for x in (0.4, 1.1):
        assert sol.evaluate_h(x) == pytest.approx(
            1.0 - 1.5 / math.cos(kappa * x) ** 2, rel=1e-14)
    sol = dodd_bullough(1.5, FR1, branch=-1)
    for x in (0.4, 1.1):
        assert sol.evaluate_h(x) == pytest.approx(
            1.0 - 1.5 / math.sin(kappa * x) ** 2, rel=1e-14)


def test_db_general_weierstrass():
    lg = -1.0
    c1 = 1.0
    sol = dodd_bullough(c1, FRN)
    inv = WeierstrassInvariants(c1 * c1 / (3.0 * lg * lg),
                                -(4.0 * c1 ** 3 - 27.0) / (108.0 * lg ** 3))
    for x in (0.6, 1.4, 2.1):
        p, _ = weierstrass_p(x, inv)
        assert sol.evaluate_h(x) == pytest.approx(
            -lg * (2.0 * p - c1 / (3.0 * lg)), rel=1e-13)


def test_db_equianharmonic_form():
    lg = -1.0
    sol = dodd_bullough(0.0, FRN)
    inv = WeierstrassInvariants(0.0, 1.0 / (4.0 * lg ** 3))
    for x in (0.5, 1.2, 2.0):
        p, _ = weierstrass_p(x, inv)
        assert sol.evaluate_h(x) == pytest.approx(-2.0 * lg * p, rel=1e-13)


def test_db_lemniscatic():
    lg = -1.0
    sol = dodd_bullough(-C1_LEMNISCATIC, FRN)
    assert sol.case is CaseLabel.Lemniscatic
    scale = 3.0 ** 0.25 / (2.0 ** (1.0 / 3.0) * math.sqrt(-lg))
    amp = 4.0 ** (-1.0 / 3.0)
    from expwave.specfun import jacobi_sn_cn_dn
    for x in (0.0, 0.7, 1.9):
        _, cn, _ = jacobi_sn_cn_dn(scale * x, 0.5)
        assert sol.evaluate_h(x) == pytest.approx(
            amp * (1.0 - math.sqrt(3.0) * cn * cn), rel=1e-13)


@given(st.floats(min_value=-8.0, max_value=8.0),
       st.sampled_from([(1.5, -1.0), (1.0, -2.0), (0.0, -1.0), (-0.7, 0.5)]))
@settings(max_examples=120)
def test_sign_map_duality(x, pair):
    c1, lg = pair
    db = dodd_bullough(c1, FrameParams.from_lambda_gamma(lg))
    tz = tzitzeica(-c1, FrameParams.from_lambda_gamma(-lg))
    if db.singularities.distance(x) < max(0.02, db.singularities.default_pad()):
        return
    assert db.evaluate_h(x) == tz.evaluate_h(x)


def test_reflection_dualities():
    for c1, lg in [(1.5, -1.0), (1.0, -2.0)]:
        frame = FrameParams.from_lambda_gamma(lg)
        tdb = tdb_dbm(FamilyLabel.TzitzeicaDoddBullough, c1, frame)
        db = dodd_bullough(c1, frame)
        for i in range(100):
            x = -5.0 + 0.1 * i + 0.013
            if db.singularities.distance(-x) < 1e-3:
                continue
            assert tdb.evaluate_h(x) == pytest.approx(-db.evaluate_h(-x),
                                                      abs=1e-12)
    for c1, lg in [(-1.5, 1.0), (1.0, 1.0)]:
        frame = FrameParams.from_lambda_gamma(lg)
        dbm = tdb_dbm(FamilyLabel.DoddBulloughMikhailov, c1, frame)
        tz = tzitzeica(c1, frame)
        for i in range(100):
            x = -5.0 + 0.1 * i + 0.013
            if tz.singularities.distance(-x) < 1e-3:
                continue
            assert dbm.evaluate_h(x) == pytest.approx(-tz.evaluate_h(-x),
                                                      abs=1e-12)
    with pytest.raises(UnsupportedFamilyError):
        tdb_dbm(FamilyLabel.Tzitzeica, 0.0, FR1)


def test_dbm_quadrature_polynomial_map():
    # the h -> -h map sends the reflected variant's radicand onto the
    # base family's: G_dbm(h) = G_base(-h)
    q_dbm = first_integral(family_params(FamilyLabel.DoddBulloughMikhailov),
                           FR1, 0.8)
    q_tz = first_integral(family_params(FamilyLabel.Tzitzeica), FR1, 0.8)
    for h in (0.3, 1.0, 2.7, -1.4):
        assert q_dbm.g(h) == pytest.approx(q_tz.g(-h), rel=1e-14)


# -- circular (sine) family --------------------------------------------------

def test_sine_kink_profile():
    sol = sine_gordon(1.0, FR1)
    assert sol.case is CaseLabel.KinkC1Plus
    assert sol.psi_native
    assert sol.evaluate_psi(0.0) == pytest.approx(math.pi, abs=1e-15)
    # strictly monotone with range (0, 2 pi)
    vals = [sol.evaluate_psi(-12.0 + 0.1 * i) for i in range(241)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[0] > 0.0 and vals[-1] < 2.0 * math.pi
    assert abs(sol.evaluate_psi(-40.0)) < 1e-15
    assert sol.evaluate_psi(40.0) == pytest.approx(2.0 * math.pi, abs=1e-12)
    # h = exp(psi) everywhere
    assert sol.evaluate_h(0.7) == pytest.approx(
        math.exp(sol.evaluate_psi(0.7)), rel=1e-15)
    with pytest.raises(SignDomainError):
        sine_gordon(1.0, FRN)


def test_sine_shifted_kink_profile():
    sol = sine_gordon(-1.0, FRN)
    assert sol.case is CaseLabel.KinkC1Minus
    assert sol.evaluate_psi(0.0) == pytest.approx(0.0, abs=1e-15)
    assert sol.evaluate_psi(-40.0) == pytest.approx(-math.pi, abs=1e-12)
    assert sol.evaluate_psi(40.0) == pytest.approx(math.pi, abs=1e-12)
    with pytest.raises(SignDomainError):
        sine_gordon(-1.0, FR1)


def test_amplitude_boundedness():
    # bounded and periodic exactly in the superunitary parameter regime
    bounded = sine_gordon(0.0, FRN)  # parameter 2
    assert bounded.bounded is True
    vals = [bounded.evaluate_psi(-30.0 + 0.1 * i) for i in range(601)]
    assert max(abs(v) for v in vals) <= 2.0 * math.asin(1.0 / math.sqrt(2.0)) + 1e-10
    sub = sine_gordon(-3.0, FRN)  # parameter 1/2 in (0, 1): unbounded
    assert sub.bounded is False
    assert abs(sub.evaluate_psi(40.0) - sub.evaluate_psi(-40.0)) > 4.0 * math.pi
    neg = sine_gordon(3.0, FR1)  # negative parameter: unbounded
    assert neg.bounded is False
    assert abs(neg.evaluate_psi(40.0) - neg.evaluate_psi(-40.0)) > 4.0 * math.pi
    with pytest.raises(SignDomainError):
        sine_gordon(3.0, FRN)  # (c1-1)/(2 lg) < 0


def test_amplitude_c1zero_matches_generic():
    from expwave.specfun import jacobi_am
    sol = sine_gordon(0.0, FRN)
    assert sol.case is CaseLabel.AmplitudeC1Zero
    kappa = 0.5 * math.sqrt(2.0)
    for x in (-2.0, 0.4, 1.7):
        assert sol.evaluate_psi(x) == pytest.approx(
            2.0 * jacobi_am(kappa * x, 2.0), rel=1e-13, abs=1e-13)


# -- hyperbolic (sinh) family ------------------------------------------------

def test_sinh_kink_values():
    sol = sinh_gordon(-0.5, FR1)
    assert sol.case is CaseLabel.KinkC1Minus
    # arctanh oracle: atanh(x) = log((1+x)/(1-x))/2; at exp-argument 1/e
    x_at = -1.0 / math.sqrt(2.0)
    expected = math.log((1.0 + math.exp(-1.0)) / (1.0 - math.exp(-1.0)))
    assert sol.evaluate_psi(x_at) == pytest.approx(expected, rel=1e-14)
    assert sol.evaluate_psi(x_at) == pytest.approx(0.7719368329053048, rel=1e-13)
    # singular boundary at xi0; invalid beyond it
    assert sol.singularities.kind == "half_line"
    with pytest.raises(DomainError):
        sol.evaluate_psi(0.5)
    with pytest.raises(SignDomainError):
        sinh_gordon(-0.5, FRN)


def test_sinh_gudermannian_kink():
    sol = sinh_gordon(0.5, FR1)
    assert sol.case is CaseLabel.KinkC1Plus
    assert sol.evaluate_psi(0.0) == 0.0
    kappa = 1.0 / math.sqrt(2.0)
    for x in (0.3, -0.6):
        assert sol.evaluate_psi(x) == pytest.approx(
            2.0 * math.atanh(math.tan(kappa * x)), rel=1e-14)
    # windows of validity with singular edges
    assert sol.singularities.kind == "lattice_windows"
    edge = math.pi / (4.0 * kappa)
    with pytest.raises(DomainError):
        sol.evaluate_psi(edge * 1.5)  # between windows
    assert sol.singularities.distance(edge) < 1e-12


def test_sinh_amplitude_quadrature_inversion():
    # independent oracle: invert the psi-quadrature numerically and compare
    # against the closed form, for the blow-up and the bounded regime
    for c1, lg in [(0.0, 1.0), (1.0, 2.0), (-1.0, -1.0), (-2.5, -0.7)]:
        frame = FrameParams.from_lambda_gamma(lg)
        sol = sinh_gordon(c1, frame)
        q = first_integral(family_params(FamilyLabel.SinhGordon), frame, c1)
        x1, x2 = 0.15, 0.55
        p1, p2 = sol.evaluate_psi(x1), sol.evaluate_psi(x2)
        val, _ = quad(lambda p: 1.0 / math.sqrt(2.0 * frame.r * q.g_psi(p)),
                      p1, p2, epsabs=1e-13, epsrel=1e-12)
        assert abs(val) == pytest.approx(x2 - x1, abs=1e-10)
    with pytest.raises(SignDomainError):
        sinh_gordon(1.0, FRN)  # (2 c1 + 1)/lg < 0
    bounded = sinh_gordon(-1.0, FRN)
    assert bounded.bounded is True and bounded.singularities.kind == "none"
    blow = sinh_gordon(0.0, FR1)
    assert blow.bounded is False and blow.singularities.kind == "lattice"


# -- implicit relations, descriptors, misc -----------------------------------

def test_implicit_relation_slopes_and_domain():
    rel = implicit_relation(FamilyLabel.Tzitzeica, FrameParams.from_lambda_gamma(4.0))
    assert rel.slope_denom == pytest.approx(2.0)
    assert rel.rhs(2.0) == pytest.approx(1.0)
    rel = implicit_relation(FamilyLabel.SinhGordon, FrameParams.from_lambda_gamma(2.0))
    assert rel.slope_denom == pytest.approx(2.0)
    rel = implicit_relation(FamilyLabel.DoddBullough, FRN)
    assert rel.slope_denom == pytest.approx(1.0)
    # tiny h: the hypergeometric factor tends to 1
    assert rel.lhs(1e-8) / 1e-8 == pytest.approx(1.0, abs=1e-12)
    for fam in (FamilyLabel.SineGordon, FamilyLabel.Liouville):
        with pytest.raises(UnsupportedFamilyError):
            implicit_relation(fam, FR1)
    with pytest.raises(SignDomainError):
        implicit_relation(FamilyLabel.Tzitzeica, FRN)


def test_solution_descriptor_roundtrip():
    for sol in (tzitzeica(1.0, FrameParams.from_lambda_gamma(1.0, xi0=0.7)),
                sine_gordon(3.0, FR1, branch=-1),
                sinh_gordon(-0.5, FR1),
                liouville(-1.0, FR1)):
        blob = json.dumps(sol.descriptor(), sort_keys=True)
        rebuilt = from_descriptor(json.loads(blob))
        for i in range(40):
            x = -4.0 + 0.2 * i + 0.05
            try:
                a = sol.evaluate_h(x)
            except DomainError:
                with pytest.raises(DomainError):
                    rebuilt.evaluate_h(x)
                continue
            assert rebuilt.evaluate_h(x) == a  # exact


def test_psi_log_consistency():
    sol = tzitzeica(-1.5, FR1, branch=-1)  # h > 1 everywhere
    for x in (0.4, 1.3, 3.3):
        assert sol.evaluate_psi(x) == math.log(sol.evaluate_h(x))
    dark = tzitzeica(-1.5, FR1)  # h < 0 near the center
    assert math.isnan(dark.evaluate_psi(0.0))


def test_case_mismatch_errors():
    with pytest.raises(CaseMismatchError):
        tzitzeica(0.5, FR1, case=CaseLabel.Degenerate1a)
    with pytest.raises(CaseMismatchError):
        sine_gordon(0.5, FR1, case=CaseLabel.KinkC1Plus)
    with pytest.raises(DomainError):
        tzitzeica(-1.5, FR1, branch=0)
    with pytest.raises(UnsupportedFamilyError):
        construct(FamilyLabel.GenericTwoExponential, 1.0, FR1)
