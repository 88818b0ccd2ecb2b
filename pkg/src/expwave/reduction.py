"""Reduction of the wave equations to the traveling ODE and its
first-integral / elliptic-equation machinery.

The equations handled are second-order hyperbolic PDEs whose source is a
sum of two exponentials of the field; in light-cone form

    (log h)_uv = alpha h^a + beta h^b,

which along characteristics z = u - lambda v, t = u + lambda v and a
traveling ansatz xi = k z - omega t (gamma = omega^2 - k^2 != 0) becomes

    h h'' - (h')^2 = (h^2 / (lambda gamma)) (alpha h^a + beta h^b) = f(h).

One integration gives (h')^2 = (2/(lambda gamma)) h^2 G(h) with

    G(h) = c1 + (alpha/a) h^a + (beta/b) h^b,

where c1 is the integration constant that selects among the catalogued
solution cases.  (The raw constant produced by the Bernoulli-step
integration equals 2 c1 / (lambda gamma); the normalization above is the
one every downstream formula uses.)  For the cubic families, G generates
(h')^2 = a3 h^3 + a2 h^2 + a1 h + a0, whose Weierstrass invariants and
discriminant classify the closed-form cases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import (
    CaseMismatchError,
    DomainError,
    FrameDegenerateError,
    InvalidParamsError,
    UnsupportedFamilyError,
)
from .specfun.weierstrass import (
    CubicRoots,
    WeierstrassInvariants,
    solve_weierstrass_cubic,
)

C1_MATCH_TOL = 1.0e-12  # user-provided special constants are exact in practice

CBRT2 = 2.0 ** (1.0 / 3.0)
CBRT4 = 4.0 ** (1.0 / 3.0)
#: c1 singling out the degenerate (repeated-root) cubic case.
C1_DEGENERATE = -1.5
#: c1 singling out the lemniscatic (g3 = 0) cubic case.
C1_LEMNISCATIC = -3.0 / CBRT4


class FamilyLabel(enum.Enum):
    Liouville = "liouville"
    Tzitzeica = "tzitzeica"
    DoddBullough = "dodd-bullough"
    TzitzeicaDoddBullough = "tzitzeica-dodd-bullough"
    DoddBulloughMikhailov = "dodd-bullough-mikhailov"
    SineGordon = "sine-gordon"
    SinhGordon = "sinh-gordon"
    GenericTwoExponential = "generic"

    @classmethod
    def parse(cls, text: str) -> "FamilyLabel":
        t = text.strip().lower().replace("_", "-").replace(" ", "-")
        for fam in cls:
            if t in (fam.value, fam.name.lower()):
                return fam
        raise InvalidParamsError(f"unknown family {text!r}")


#: Families whose first integral is a cubic in h (the Weierstrass route).
CUBIC_FAMILIES = frozenset({
    FamilyLabel.Liouville,
    FamilyLabel.Tzitzeica,
    FamilyLabel.DoddBullough,
    FamilyLabel.TzitzeicaDoddBullough,
    FamilyLabel.DoddBulloughMikhailov,
})

GORDON_FAMILIES = frozenset({FamilyLabel.SineGordon, FamilyLabel.SinhGordon})


class CaseLabel(enum.Enum):
    LiouvilleSoliton = "liouville-soliton"
    LiouvillePeriodic = "liouville-periodic"
    LiouvilleRational = "liouville-rational"
    Degenerate1a = "degenerate-1a"
    Degenerate1b = "degenerate-1b"
    Equianharmonic = "equianharmonic"
    Lemniscatic = "lemniscatic"
    GeneralWeierstrass = "general-weierstrass"
    KinkC1Plus = "kink-c1-plus"
    KinkC1Minus = "kink-c1-minus"
    AmplitudeGeneric = "amplitude-generic"
    AmplitudeC1Zero = "amplitude-c1-zero"

    @classmethod
    def parse(cls, text: str) -> "CaseLabel":
        t = text.strip().lower().replace("_", "-").replace(" ", "-")
        for c in cls:
            if t in (c.value, c.name.lower()):
                return c
        raise InvalidParamsError(f"unknown case {text!r}")


@dataclass(frozen=True)
class EquationParams:
    """Exponents and amplitudes of the two exponential source terms.

    For real equations the source is alpha e^(a psi) + beta e^(b psi).
    The sine-Gordon family has imaginary exponents; these are never stored
    as complex floats.  Instead ``imaginary_pair=True`` flags that
    (alpha, beta, a, b) hold the coefficients of i, i.e. the source is
    (alpha i) e^(a i psi) + (beta i) e^(b i psi); with the catalogued tags
    (-1/2, 1/2, 1, -1) this is exactly sin(psi).
    """

    alpha: float
    beta: float
    a: float
    b: float
    imaginary_pair: bool = False

    def __post_init__(self):
        if self.alpha == 0.0 and self.beta == 0.0:
            raise InvalidParamsError("alpha and beta must not both vanish")
        if self.a == 0.0 and self.alpha != 0.0:
            raise InvalidParamsError("exponent a must be nonzero")

    @classmethod
    def sine_gordon(cls) -> "EquationParams":
        return cls(alpha=-0.5, beta=0.5, a=1.0, b=-1.0, imaginary_pair=True)


_FAMILY_PARAMS = {
    FamilyLabel.Liouville: EquationParams(1.0, 0.0, 1.0, 0.0),
    FamilyLabel.Tzitzeica: EquationParams(1.0, -1.0, 1.0, -2.0),
    FamilyLabel.DoddBullough: EquationParams(-1.0, 1.0, 1.0, -2.0),
    FamilyLabel.TzitzeicaDoddBullough: EquationParams(1.0, 1.0, 1.0, -2.0),
    FamilyLabel.DoddBulloughMikhailov: EquationParams(-1.0, -1.0, 1.0, -2.0),
    FamilyLabel.SineGordon: EquationParams.sine_gordon(),
    FamilyLabel.SinhGordon: EquationParams(0.5, -0.5, 2.0, -2.0),
}


def family_params(family: FamilyLabel) -> EquationParams:
    """The catalogued (alpha, beta, a, b) tuple of a named family."""
    try:
        return _FAMILY_PARAMS[family]
    except KeyError:
        raise UnsupportedFamilyError(
            f"{family.name} has no catalogued parameter tuple") from None


def classify_family(params: EquationParams) -> FamilyLabel:
    """Match (alpha, beta, a, b) against the seven catalogued tuples."""
    for fam, ref in _FAMILY_PARAMS.items():
        if params == ref:
            return fam
    return FamilyLabel.GenericTwoExponential


@dataclass(frozen=True)
class FrameParams:
    """Traveling-frame data: lambda, k, omega, the derived gamma and
    r = 1/(lambda gamma), and the phase offset xi0.

    The characteristic coordinates are z = u - lambda v, t = u + lambda v
    and the wave variable is xi = k z - omega t; z, t, u, v themselves are
    derivation-only and never computed on here.  Every closed form depends
    on lambda and gamma only through the product lambda*gamma; use
    :meth:`from_lambda_gamma` when the split does not matter.
    """

    lam: float
    k: float
    omega: float
    xi0: float = 0.0
    gamma: float = field(init=False)
    r: float = field(init=False)

    def __post_init__(self):
        if self.lam == 0.0:
            raise FrameDegenerateError("lambda must be nonzero")
        gamma = self.omega ** 2 - self.k ** 2
        if gamma == 0.0:
            raise FrameDegenerateError("k = +/-omega makes gamma vanish")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "r", 1.0 / (self.lam * gamma))

    @classmethod
    def from_lambda_gamma(cls, lambda_gamma: float, xi0: float = 0.0) -> "FrameParams":
        # normalization: lambda = value, k = 0, omega = 1, so gamma = 1
        return cls(lam=lambda_gamma, k=0.0, omega=1.0, xi0=xi0)

    @property
    def lambda_gamma(self) -> float:
        return self.lam * self.gamma

    def with_lambda_gamma(self, lambda_gamma: float) -> "FrameParams":
        return FrameParams.from_lambda_gamma(lambda_gamma, xi0=self.xi0)


def _real_pow(h: float, e: float) -> float:
    if e == 0.0:
        return 1.0
    if h == 0.0 and e < 0.0:
        raise DomainError("h = 0 with a negative exponent")
    if h < 0.0 and e != round(e):
        raise DomainError("h <= 0 with a non-integer exponent")
    if h < 0.0:
        n = int(round(e))
        return math.copysign(abs(h) ** n, 1.0 if n % 2 == 0 else h)
    return h ** e


class OdeDescriptor:
    """The traveling ODE h h'' - (h')^2 = f(h) for one (family, frame).

    ``f`` and ``residual`` work in h; for the Gordon families the
    psi-space form psi'' = rhs_psi(psi) is also exposed (it is the same
    equation written in psi = log h, where it stays real).
    """

    def __init__(self, params: EquationParams, frame: FrameParams,
                 family: FamilyLabel | None = None):
        self.params = params
        self.frame = frame
        self.family = family if family is not None else classify_family(params)
        self.r = frame.r

    def source(self, h: float) -> float:
        """alpha h^a + beta h^b (equals sin(log h) for sine-Gordon)."""
        p = self.params
        if p.imaginary_pair:
            psi = math.log(h)
            return self.source_psi(psi)
        return p.alpha * _real_pow(h, p.a) + p.beta * _real_pow(h, p.b)

    def source_psi(self, psi: float) -> float:
        p = self.params
        if p.imaginary_pair:
            # (alpha i) e^(i a psi) + (beta i) e^(i b psi), real by pairing
            return -p.alpha * math.sin(p.a * psi) - p.beta * math.sin(p.b * psi)
        return p.alpha * math.exp(p.a * psi) + p.beta * math.exp(p.b * psi)

    def f(self, h: float) -> float:
        return self.r * h * h * self.source(h)

    def residual(self, h: float, dh: float, d2h: float) -> float:
        return h * d2h - dh * dh - self.f(h)

    def rhs_psi(self, psi: float) -> float:
        return self.r * self.source_psi(psi)

    def residual_psi(self, psi: float, d2psi: float) -> float:
        return d2psi - self.rhs_psi(psi)


class QuadratureDescriptor:
    """First integral (h')^2 = (2/(lambda gamma)) h^2 G(h), with

        G(h) = c1 + (alpha/a) h^a + (beta/b) h^b.

    For beta = 0 (single exponential, b unused) the beta-term is simply
    absent.  The Gordon families carry the psi-space form
    (psi')^2 = (2/(lambda gamma)) G_psi(psi) with G_psi = c1 - cos psi
    (sine) or c1 + cosh(2 psi)/2 (sinh).
    """

    def __init__(self, params: EquationParams, frame: FrameParams, c1: float,
                 family: FamilyLabel | None = None):
        if params.beta != 0.0 and params.b == 0.0:
            raise InvalidParamsError("exponent b must be nonzero when beta != 0")
        self.params = params
        self.frame = frame
        self.c1 = c1
        self.family = family if family is not None else classify_family(params)
        self.r = frame.r

    def g(self, h: float) -> float:
        p = self.params
        if p.imaginary_pair:
            return self.g_psi(math.log(h))
        total = self.c1 + (p.alpha / p.a) * _real_pow(h, p.a)
        if p.beta != 0.0:
            total += (p.beta / p.b) * _real_pow(h, p.b)
        return total

    def g_prime(self, h: float) -> float:
        p = self.params
        if p.imaginary_pair:
            raise UnsupportedFamilyError("g_prime is h-space only")
        total = p.alpha * _real_pow(h, p.a - 1.0)
        if p.beta != 0.0:
            total += p.beta * _real_pow(h, p.b - 1.0)
        return total

    def g_psi(self, psi: float) -> float:
        p = self.params
        if p.imaginary_pair:
            # (alpha i)/(a i) e^(i a psi) + ... pairs up into cosines;
            # with the sine-Gordon tags this is c1 - cos(psi)
            return self.c1 + (p.alpha / p.a) * math.cos(p.a * psi) \
                + (p.beta / p.b) * math.cos(p.b * psi)
        total = self.c1 + (p.alpha / p.a) * math.exp(p.a * psi)
        if p.beta != 0.0:
            total += (p.beta / p.b) * math.exp(p.b * psi)
        return total

    def g_psi_prime(self, psi: float) -> float:
        # dG_psi/dpsi equals the ODE source written in psi
        p = self.params
        if p.imaginary_pair:
            return -p.alpha * math.sin(p.a * psi) - p.beta * math.sin(p.b * psi)
        total = p.alpha * math.exp(p.a * psi)
        if p.beta != 0.0:
            total += p.beta * math.exp(p.b * psi)
        return total

    def residual(self, h: float, dh: float) -> float:
        return dh * dh - 2.0 * self.r * h * h * self.g(h)

    def residual_psi(self, psi: float, dpsi: float) -> float:
        return dpsi * dpsi - 2.0 * self.r * self.g_psi(psi)


def traveling_ode(params: EquationParams, frame: FrameParams) -> OdeDescriptor:
    """Descriptor of h h'' - (h')^2 = f(h) for these parameters."""
    return OdeDescriptor(params, frame)


def first_integral(params: EquationParams, frame: FrameParams,
                   c1: float) -> QuadratureDescriptor:
    """Descriptor of the once-integrated equation
    (h')^2 = (2/(lambda gamma)) h^2 G(h)."""
    return QuadratureDescriptor(params, frame, c1)


def conserved_c1(params: EquationParams, frame: FrameParams,
                 h: float, dh: float) -> float:
    """The integration constant recovered from a state (h, h').

    Exact along any true trajectory; its drift along a numerically
    integrated one measures integrator quality.
    """
    q = QuadratureDescriptor(params, frame, 0.0)
    return dh * dh / (2.0 * frame.r * h * h) - q.g(h)


@dataclass(frozen=True)
class EllipticData:
    """Cubic coefficients, Weierstrass invariants, discriminant and roots
    backing the closed-form classification of the cubic families."""

    family: FamilyLabel
    c1: float
    r: float
    a0: float
    a1: float
    a2: float
    a3: float
    p: float
    g2: float
    g3: float
    delta: float
    roots: CubicRoots
    repeated_root: float | None = None

    @property
    def invariants(self) -> WeierstrassInvariants:
        return WeierstrassInvariants(self.g2, self.g3)

    @property
    def is_degenerate(self) -> bool:
        return self.invariants.is_degenerate

    def to_json(self) -> dict:
        d = {
            "a0": self.a0, "a1": self.a1, "a2": self.a2, "a3": self.a3,
            "c1": self.c1, "delta": self.delta, "g2": self.g2, "g3": self.g3,
            "p": self.p, "r": self.r,
            "roots_real": list(self.roots.real),
        }
        if self.roots.complex_pair is not None:
            d["roots_complex_pair"] = list(self.roots.complex_pair)
        if self.repeated_root is not None:
            d["repeated_root"] = self.repeated_root
        return d


def effective_cubic_params(family: FamilyLabel, frame: FrameParams,
                           c1: float) -> tuple[float, float]:
    """(r_eff, c1_eff) mapping a variant family onto the base cubic.

    The Dodd-Bullough route flips both r -> -r and c1 -> -c1 relative to
    the base family; the two reflection variants (h -> -h, xi -> -xi)
    leave (r, c1) untouched relative to their parent.
    """
    if family in (FamilyLabel.DoddBullough, FamilyLabel.TzitzeicaDoddBullough):
        return -frame.r, -c1
    return frame.r, c1


def elliptic_data(family: FamilyLabel, frame: FrameParams, c1: float) -> EllipticData:
    """Coefficients, germs g2/g3, discriminant and cubic roots for the
    cubic families.

    The Gordon families bypass the cubic route entirely and are rejected.
    """
    if family not in CUBIC_FAMILIES:
        raise UnsupportedFamilyError(
            f"{family.name} does not reduce to the cubic elliptic equation")
    params = family_params(family)
    r = frame.r
    p = 2.0 * c1 * r
    a2 = p
    a1 = 0.0
    a3 = 2.0 * r * params.alpha  # all cubic families have a = 1
    a0 = 0.0 if params.beta == 0.0 else 2.0 * r * params.beta / params.b
    g2 = (a2 * a2 - 3.0 * a1 * a3) / 12.0
    g3 = (9.0 * a1 * a2 * a3 - 27.0 * a0 * a3 * a3 - 2.0 * a2 ** 3) / 432.0
    delta = g2 ** 3 - 27.0 * g3 * g3
    roots = solve_weierstrass_cubic(g2, g3)
    repeated = None
    if WeierstrassInvariants(g2, g3).is_degenerate and not (g2 == 0.0 and g3 == 0.0):
        # double root magnitude: e for (g3 < 0), with roots (e, e, -2e)
        repeated = abs(g3) ** (1.0 / 3.0) / 2.0
    return EllipticData(
        family=family, c1=c1, r=r,
        a0=a0, a1=a1, a2=a2, a3=a3, p=p,
        g2=g2, g3=g3, delta=delta, roots=roots, repeated_root=repeated,
    )


def classify_case(family: FamilyLabel, frame: FrameParams, c1: float,
                  data: EllipticData | None = None) -> CaseLabel:
    """Deterministic case label for (family, frame, c1).

    Cubic families dispatch on the scaled-discriminant test and the signs
    of g3 / g2; Gordon families dispatch on c1 hitting its special values
    within 1e-12.  ``data`` may be supplied to reuse an elliptic_data
    result; it is computed on demand otherwise (and is meaningless for the
    Gordon families, which never touch it).
    """
    if family is FamilyLabel.Liouville:
        if abs(c1) <= C1_MATCH_TOL:
            return CaseLabel.LiouvilleRational
        return (CaseLabel.LiouvilleSoliton
                if c1 / (2.0 * frame.lambda_gamma) > 0.0
                else CaseLabel.LiouvillePeriodic)
    if family in CUBIC_FAMILIES:
        if data is None:
            data = elliptic_data(family, frame, c1)
        _, c1_eff = effective_cubic_params(family, frame, c1)
        if data.is_degenerate:
            return CaseLabel.Degenerate1a if data.g3 < 0.0 else CaseLabel.Degenerate1b
        if abs(c1_eff) <= C1_MATCH_TOL:
            return CaseLabel.Equianharmonic
        if abs(c1_eff - C1_LEMNISCATIC) <= C1_MATCH_TOL:
            return CaseLabel.Lemniscatic
        return CaseLabel.GeneralWeierstrass
    if family is FamilyLabel.SineGordon:
        special = 1.0
    elif family is FamilyLabel.SinhGordon:
        special = 0.5
    else:
        raise UnsupportedFamilyError(f"no case taxonomy for {family.name}")
    if abs(c1 - special) <= C1_MATCH_TOL:
        return CaseLabel.KinkC1Plus
    if abs(c1 + special) <= C1_MATCH_TOL:
        return CaseLabel.KinkC1Minus
    if abs(c1) <= C1_MATCH_TOL:
        return CaseLabel.AmplitudeC1Zero
    return CaseLabel.AmplitudeGeneric


def require_case(expected: CaseLabel, actual: CaseLabel):
    if expected is not actual:
        raise CaseMismatchError(
            f"requested case {expected.name} but parameters give {actual.name}")
