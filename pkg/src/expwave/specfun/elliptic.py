"""Incomplete elliptic integral of the first kind, Jacobi elliptic
functions, and the Jacobi amplitude.

Parameter convention
--------------------
Every routine here takes the *parameter* m, the quantity that appears
inside the integrand of

    F(phi; m) = integral_0^phi dpsi / sqrt(1 - m sin^2 psi).

Sources that quote a *modulus* k use m = k^2 (so a modulus of sqrt(2)/2
is the parameter 1/2).  Negative m is evaluated directly; m > 1 goes
through the reciprocal-parameter transformation

    sn(u; m) = m^(-1/2) sn(u sqrt(m); 1/m),
    cn(u; m) = dn(u sqrt(m); 1/m),
    dn(u; m) = cn(u sqrt(m); 1/m),

which keeps all arithmetic real.  For m > 1 the amplitude is bounded and
periodic; for m < 1 it is unbounded and the continuous (unwrapped) branch
is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError
from .carlson import carlson_rf

_AGM_TOL = 1.0e-8  # accuracy of the Landen descent is the square of this


@dataclass(frozen=True)
class EllipticModulus:
    """Parameter-convention wrapper: m as used in F(phi; m).

    Use :meth:`from_modulus` to convert a modulus k (the square-root
    convention) into the parameter m = k**2.
    """

    m: float

    def __post_init__(self):
        if not math.isfinite(self.m):
            raise DomainError("elliptic parameter m must be finite")

    @classmethod
    def from_modulus(cls, k: float) -> "EllipticModulus":
        return cls(k * k)

    @property
    def modulus(self) -> float:
        if self.m < 0.0:
            raise DomainError("negative parameter has no real modulus")
        return math.sqrt(self.m)


def _sncndn_descent(u: float, mc: float) -> tuple[float, float, float]:
    # Bulirsch-style descending Landen transformation; mc = 1 - m > 0.
    a = 1.0
    dn = 1.0
    em = []
    en = []
    c = 0.0
    for _ in range(16):
        em.append(a)
        mc = math.sqrt(mc)
        en.append(mc)
        c = 0.5 * (a + mc)
        if abs(a - mc) <= _AGM_TOL * a:
            break
        mc *= a
        a = c
    u = u * c
    sn = math.sin(u)
    cn = math.cos(u)
    if sn != 0.0:
        aa = cn / sn
        c *= aa
        for b, e in zip(reversed(em), reversed(en)):
            aa *= c
            c *= dn
            dn = (e + aa) / (b + aa)
            aa = c / b
        aa = 1.0 / math.hypot(c, 1.0)
        sn = aa if sn >= 0.0 else -aa
        cn = c * sn
    return sn, cn, dn


def jacobi_sn_cn_dn(u: float, m: float) -> tuple[float, float, float]:
    """Jacobi sn, cn, dn of real u for any real parameter m.

    m <= 1 runs the Landen descent directly (this covers m < 0); m > 1 is
    mapped to 1/m by the reciprocal-parameter transformation.  Satisfies
    sn^2 + cn^2 = 1 and dn^2 + m sn^2 = 1 to ~1e-15.
    """
    if not (math.isfinite(u) and math.isfinite(m)):
        raise DomainError("jacobi_sn_cn_dn requires finite arguments")
    if abs(u) < 1e-120:
        # below any representable quadratic correction; also keeps the
        # backward recurrence's cn/sn ratio from overflowing
        return u, 1.0, 1.0
    if m == 0.0:
        return math.sin(u), math.cos(u), 1.0
    if m == 1.0:
        sech = 1.0 / math.cosh(u)
        return math.tanh(u), sech, sech
    if m < 1.0:
        return _sncndn_descent(u, 1.0 - m)
    rk = math.sqrt(m)
    sn, cn, dn = jacobi_sn_cn_dn(u * rk, 1.0 / m)
    return sn / rk, dn, cn


def ellint_k(m: float) -> float:
    """Complete elliptic integral of the first kind, K(m) = F(pi/2; m)."""
    if m >= 1.0:
        raise DomainError("K(m) is finite only for m < 1")
    return carlson_rf(0.0, 1.0 - m, 1.0)


def _f_principal(phi: float, m: float) -> float:
    # |phi| <= pi/2, m <= 1
    s = math.sin(phi)
    c = math.cos(phi)
    w = 1.0 - m * s * s
    if w < 0.0:
        raise DomainError("elliptic integrand not real for these arguments")
    return s * carlson_rf(c * c, w, 1.0)


def ellint_f(phi: float, m: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi; m).

    Odd in phi.  For m <= 1 any real phi is accepted through the
    quasi-periodic extension F(phi + n pi) = F(phi) + 2 n K(m); at m = 1
    that extension does not exist and |phi| < pi/2 is required.  For
    m > 1 the integral is real only while |sin phi| <= 1/sqrt(m) (and
    |phi| <= pi/2); it is then evaluated through the reciprocal-parameter
    transformation F(phi; m) = m^(-1/2) F(asin(sqrt(m) sin phi); 1/m).
    """
    if not (math.isfinite(phi) and math.isfinite(m)):
        raise DomainError("ellint_f requires finite arguments")
    if m > 1.0:
        s = math.sin(phi)
        rk = math.sqrt(m)
        if abs(phi) > 0.5 * math.pi or abs(s) > 1.0 / rk * (1.0 + 1e-14):
            raise DomainError(
                "ellint_f: for m > 1 need |phi| <= pi/2 and |sin phi| <= 1/sqrt(m)"
            )
        theta = math.asin(min(1.0, max(-1.0, rk * s)))
        return _f_principal(theta, 1.0 / m) / rk
    n = round(phi / math.pi)
    phi_r = phi - n * math.pi
    if n == 0:
        return _f_principal(phi, m)
    if m == 1.0:
        raise DomainError("ellint_f: m = 1 requires |phi| < pi/2")
    return 2.0 * n * ellint_k(m) + _f_principal(phi_r, m)


def jacobi_am(u: float, m: float) -> float:
    """Jacobi amplitude am(u; m), the inverse of F on the principal domain.

    For m < 1 the continuous unwrapped branch is returned, using
    am(u + 2K) = am(u) + pi.  For m > 1 the amplitude is bounded and
    periodic: am(u; m) = asin(m^(-1/2) sn(u sqrt(m); 1/m)).
    """
    if not (math.isfinite(u) and math.isfinite(m)):
        raise DomainError("jacobi_am requires finite arguments")
    if m == 0.0:
        return u
    if m == 1.0:
        return math.asin(math.tanh(u))  # gudermannian
    if m > 1.0:
        rk = math.sqrt(m)
        sn, _, _ = jacobi_sn_cn_dn(u * rk, 1.0 / m)
        return math.asin(min(1.0, max(-1.0, sn / rk)))
    k = ellint_k(m)
    n = round(u / (2.0 * k))
    ur = u - 2.0 * n * k
    sn, cn, _ = jacobi_sn_cn_dn(ur, m)
    return n * math.pi + math.atan2(sn, cn)
