"""Weierstrass p-function on the real axis, from invariants (g2, g3).

The evaluator solves the cubic 4 t^3 - g2 t - g3 = 0 and reduces p to
Jacobi elliptic functions:

  discriminant > 0 (three real roots e1 >= e2 >= e3):
      p(z) = e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3); m),
      m = (e2 - e3)/(e1 - e3)

  discriminant < 0 (one real root e2*, conjugate pair):
      H^2 = 3 e2*^2 - g2/4,
      p(z) = e2* + H (1 + cn(2 z sqrt(H); m)) / (1 - cn(...)),
      m = 1/2 - 3 e2* / (4 H)

  discriminant = 0 degenerates to elementary functions:
      g2 = g3 = 0:      p(z) = 1/z^2
      g3 < 0 (e>0):     p(z) = e + 3 e csch^2(z sqrt(3 e)),   e = cbrt(-g3)/2
      g3 > 0 (e>0):     p(z) = -e + 3 e csc^2(z sqrt(3 e)),   e = cbrt(g3)/2

This is the real branch: p >= e1 between consecutive real poles.  Poles
lie on the lattice {n * real_period}; evaluation inside the exclusion
radius (1e-3 of the real-period estimate) raises PoleProximityError so
verification grids can skip singularities deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import DomainError, PoleProximityError
from .carlson import carlson_rf
from .elliptic import jacobi_sn_cn_dn

# |delta| below this times max(|g2|^3, 27 g3^2) classifies as degenerate;
# the case split is discontinuous, so a scaled tolerance is required.
DELTA_REL_TOL = 1.0e-12

_POLE_FRACTION = 1.0e-3


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


@dataclass(frozen=True)
class WeierstrassInvariants:
    """Invariant pair (g2, g3) with the modular discriminant attached."""

    g2: float
    g3: float
    delta: float = field(init=False)

    def __post_init__(self):
        if not (math.isfinite(self.g2) and math.isfinite(self.g3)):
            raise DomainError("invariants must be finite")
        object.__setattr__(self, "delta", self.g2 ** 3 - 27.0 * self.g3 ** 2)

    @property
    def is_degenerate(self) -> bool:
        scale = max(abs(self.g2) ** 3, 27.0 * self.g3 ** 2)
        return abs(self.delta) <= DELTA_REL_TOL * scale


@dataclass(frozen=True)
class CubicRoots:
    """Roots of 4 t^3 - g2 t - g3, sorted descending when all real.

    ``real`` holds all real roots; for a conjugate pair ``complex_pair``
    holds (re, |im|) and ``real`` the single real root.
    """

    real: tuple[float, ...]
    complex_pair: tuple[float, float] | None = None

    @property
    def all_real(self) -> bool:
        return self.complex_pair is None


def solve_weierstrass_cubic(g2: float, g3: float) -> CubicRoots:
    """Roots of s3(t) = 4 t^3 - g2 t - g3.

    Three real roots use the trigonometric (Viete) form, one real root
    uses Cardano with the Vieta product to dodge cancellation; repeated
    roots (degenerate invariants) are returned exactly as (e, e, -2e).
    """
    inv = WeierstrassInvariants(g2, g3)
    pd = -g2 / 4.0  # depressed cubic t^3 + pd t + qd
    qd = -g3 / 4.0
    if inv.is_degenerate:
        if g2 == 0.0 and g3 == 0.0:
            return CubicRoots(real=(0.0, 0.0, 0.0))
        d = _cbrt(qd / 2.0)  # double root; the simple root is -2d
        roots = sorted((d, d, -2.0 * d), reverse=True)
        return CubicRoots(real=tuple(roots))
    if inv.delta > 0.0:
        amp = 2.0 * math.sqrt(-pd / 3.0)
        c3 = min(1.0, max(-1.0, -4.0 * qd / amp ** 3))
        theta = math.acos(c3) / 3.0
        roots = sorted(
            (amp * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)),
            reverse=True,
        )
        return CubicRoots(real=tuple(roots))
    disc = (qd / 2.0) ** 2 + (pd / 3.0) ** 3  # > 0 here
    w = -qd / 2.0 - math.copysign(math.sqrt(disc), qd)
    u = _cbrt(w)
    v = 0.0 if u == 0.0 else -pd / (3.0 * u)
    e_real = u + v
    re = -e_real / 2.0
    im2 = (g3 / (4.0 * e_real)) - re * re if e_real != 0.0 else -pd
    im = math.sqrt(max(0.0, im2))
    return CubicRoots(real=(e_real,), complex_pair=(re, im))


class _PreparedWeierstrass:
    """Invariant-dependent data hoisted out of the per-point evaluation."""

    __slots__ = (
        "inv", "kind", "roots", "scale", "m", "e_off", "coeff",
        "real_period", "pole_scale", "eps_pole",
    )

    def __init__(self, inv: WeierstrassInvariants, kind: str, roots: CubicRoots,
                 scale: float, m: float, e_off: float, coeff: float,
                 real_period: float, pole_scale: float):
        self.inv = inv
        self.kind = kind
        self.roots = roots
        self.scale = scale
        self.m = m
        self.e_off = e_off
        self.coeff = coeff
        self.real_period = real_period
        self.pole_scale = pole_scale
        self.eps_pole = _POLE_FRACTION * pole_scale

    def pole_distance(self, z: float) -> float:
        if math.isfinite(self.real_period):
            return abs(z - self.real_period * round(z / self.real_period))
        return abs(z)

    def check_pole(self, z: float) -> None:
        d = self.pole_distance(z)
        if d < self.eps_pole:
            raise PoleProximityError(
                f"z within {self.eps_pole:.3e} of a Weierstrass pole (distance {d:.3e})",
                distance=d,
                limit=self.eps_pole,
            )

    def eval(self, z: float) -> tuple[float, float]:
        self.check_pole(z)
        if self.kind == "rational":
            p = 1.0 / (z * z)
            return p, -2.0 / (z * z * z)
        if self.kind == "hyperbolic":
            e = self.e_off
            a = self.scale  # sqrt(3 e)
            s = math.sinh(a * z)
            csch2 = 1.0 / (s * s)
            p = e + 3.0 * e * csch2
            pp = -6.0 * e * a * csch2 * (math.cosh(a * z) / s)
            return p, pp
        if self.kind == "trigonometric":
            e = self.e_off
            a = self.scale
            s = math.sin(a * z)
            csc2 = 1.0 / (s * s)
            p = -e + 3.0 * e * csc2
            pp = -6.0 * e * a * csc2 * (math.cos(a * z) / s)
            return p, pp
        if self.kind == "sn":
            sn, cn, dn = jacobi_sn_cn_dn(self.scale * z, self.m)
            p = self.e_off + self.coeff / (sn * sn)
            pp = -2.0 * self.coeff * self.scale * cn * dn / (sn ** 3)
            return p, pp
        # "cn": H-form for one real root
        sn, cn, dn = jacobi_sn_cn_dn(self.scale * z, self.m)
        h = self.coeff
        one_m_cn = 1.0 - cn
        p = self.e_off + h * (1.0 + cn) / one_m_cn
        pp = -2.0 * h * self.scale * sn * dn / (one_m_cn * one_m_cn)
        return p, pp


def prepare_weierstrass(inv: WeierstrassInvariants,
                        force_general: bool = False) -> _PreparedWeierstrass:
    """Classify the invariants and precompute root/modulus/period data.

    ``force_general`` bypasses the degenerate closed forms and runs the
    root-based Jacobi reduction even at (near-)degenerate invariants,
    where it hits the hyperbolic/trigonometric limits of sn; used to
    cross-check the two expression routes against each other.
    """
    g2, g3 = inv.g2, inv.g3
    roots = solve_weierstrass_cubic(g2, g3)
    if force_general and len(roots.real) == 3:
        e1, e2, e3 = roots.real
        span = e1 - e3
        m = (e2 - e3) / span
        scale = math.sqrt(span)
        period = (2.0 * carlson_rf(0.0, 1.0 - m, 1.0) / scale
                  if m < 1.0 else math.inf)
        return _PreparedWeierstrass(
            inv, "sn", roots, scale, m, e3, span,
            period, period if math.isfinite(period) else 1.0)
    if inv.is_degenerate:
        if g2 == 0.0 and g3 == 0.0:
            return _PreparedWeierstrass(
                inv, "rational", roots, 0.0, 0.0, 0.0, 0.0,
                math.inf, 1.0)
        e = abs(_cbrt(g3)) / 2.0
        a = math.sqrt(3.0 * e)
        if g3 < 0.0:
            # poles only at z = 0; the companion trigonometric scale pi/a
            # still sets a sensible exclusion radius
            return _PreparedWeierstrass(
                inv, "hyperbolic", roots, a, 0.0, e, 0.0,
                math.inf, math.pi / a)
        return _PreparedWeierstrass(
            inv, "trigonometric", roots, a, 0.0, e, 0.0,
            math.pi / a, math.pi / a)
    if inv.delta > 0.0:
        e1, e2, e3 = roots.real
        span = e1 - e3
        m = (e2 - e3) / span
        scale = math.sqrt(span)
        period = 2.0 * carlson_rf(0.0, 1.0 - m, 1.0) / scale if m < 1.0 else math.inf
        return _PreparedWeierstrass(
            inv, "sn", roots, scale, m, e3, span,
            period, period if math.isfinite(period) else 1.0)
    e2s = roots.real[0]
    h2 = 3.0 * e2s * e2s - g2 / 4.0
    h = math.sqrt(h2)
    m = 0.5 - 3.0 * e2s / (4.0 * h)
    scale = 2.0 * math.sqrt(h)
    period = 4.0 * carlson_rf(0.0, 1.0 - m, 1.0) / scale if m < 1.0 else math.inf
    return _PreparedWeierstrass(
        inv, "cn", roots, scale, m, e2s, h,
        period, period if math.isfinite(period) else 1.0)


def weierstrass_p(z: float, inv: WeierstrassInvariants) -> tuple[float, float]:
    """Weierstrass p(z) and its derivative p'(z) on the real axis.

    Satisfies p'^2 = 4 p^3 - g2 p - g3 to ~1e-13 relative.  Raises
    PoleProximityError inside the exclusion radius of a lattice pole.
    """
    if not math.isfinite(z):
        raise DomainError("weierstrass_p requires finite z")
    return prepare_weierstrass(inv).eval(z)
