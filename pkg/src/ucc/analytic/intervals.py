"""Outward-rounded interval arithmetic and sound enclosures of f.

Arithmetic on :class:`Interval` nudges every computed endpoint one ulp
outward with ``math.nextafter``, so machine rounding can never shrink an
enclosure.  Library calls (log2, log1p) are not correctly rounded, so every
transcendental evaluation additionally widens by an absolute slack of
``TRANSCENDENTAL_SLACK`` = 4e-13, far above the worst observed libm error
for these functions on (0, 1) but small against every margin we certify.

Enclosures of the entropy cast are built from shape facts with elementary
proofs, restated here because the certifier's soundness rests on them:

*   h is unimodal on [0, 1]: h'(x) = log2((1-x)/x) is positive left of 1/2
    and negative right of it.  On [a, b] the range of h is therefore
    [min(h(a), h(b)), 1] if a <= 1/2 <= b and the endpoint interval
    otherwise, and 0 <= h <= 1 always.
*   g(x) = h(x)/x is strictly decreasing on (0, 1):
    g'(x) = log2(1-x)/x^2 < 0.
*   G(x) = log2(1-x)/x is strictly decreasing on (0, 1): its numerator in
    G'(x) = [-x/(1-x) - log(1-x)] / x^2 (natural log) expands to
    -sum_{k>=1} x^k (1 - 1/k) < 0.

Three enclosures of f on a box X x Y, tightest wins by intersection:

*   ``f_box_enclosure``: h-form h(XY) / (h(X) Y + h(Y) X) via unimodality.
*   ``f_box_refined``: g-form g(XY) / (g(X) + g(Y)) via monotonicity.
*   ``f_mean_value``: f(c) +/- |df/dx|(X,Y) rx + |df/dy|(X,Y) ry around the
    center c, with the gradient enclosed through
    df/dx = (G(xy) (g(x)+g(y)) - g(xy) G(x)) / (x (g(x)+g(y))^2),
    which follows from d/dx g(xy) = y g'(xy) = G(xy)/x and
    d/dx g(x) = g'(x) = G(x)/x.  The gradient vanishes at (phi, phi), so
    this form stays sharp exactly where the plain extensions go blunt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import big_g_of, binary_entropy, g_of

__all__ = [
    "TRANSCENDENTAL_SLACK",
    "Interval",
    "h_enclosure",
    "g_enclosure",
    "big_g_enclosure",
    "product_enclosure",
    "f_box_enclosure",
    "f_box_refined",
    "f_point_enclosure",
    "f_gradient_enclosure",
    "f_mean_value",
]

TRANSCENDENTAL_SLACK = 4e-13

_INF = math.inf


def _dn(v: float) -> float:
    return math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return math.nextafter(v, _INF)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with outward-rounded arithmetic."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("interval endpoints must not be NaN")
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, v: float) -> "Interval":
        return cls(v, v)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def mag(self) -> float:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("intersection of disjoint intervals")
        return Interval(lo, hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_dn(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_dn(self.lo - other.hi), _up(self.hi - other.lo))

    def __mul__(self, other: "Interval") -> "Interval":
        p1 = self.lo * other.lo
        p2 = self.lo * other.hi
        p3 = self.hi * other.lo
        p4 = self.hi * other.hi
        return Interval(_dn(min(p1, p2, p3, p4)), _up(max(p1, p2, p3, p4)))

    def scale(self, c: float) -> "Interval":
        return self * Interval.point(c)

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo > 0.0 or other.hi < 0.0:
            q1 = self.lo / other.lo
            q2 = self.lo / other.hi
            q3 = self.hi / other.lo
            q4 = self.hi / other.hi
            return Interval(_dn(min(q1, q2, q3, q4)), _up(max(q1, q2, q3, q4)))
        raise ZeroDivisionError("interval division by an interval containing 0")


def h_enclosure(iv: Interval) -> Interval:
    """Range enclosure of the binary entropy over ``iv`` within [0, 1]."""
    a, b = iv.lo, iv.hi
    if a < 0.0 or b > 1.0:
        raise ValueError(f"h_enclosure needs iv within [0, 1], got {iv}")
    ha = binary_entropy(a)
    hb = binary_entropy(b)
    lo = max(0.0, min(ha, hb) - TRANSCENDENTAL_SLACK)
    if a <= 0.5 <= b:
        hi = 1.0  # the peak h(1/2) = 1 is inside; h <= 1 is exact
    else:
        hi = min(1.0, max(ha, hb) + TRANSCENDENTAL_SLACK)
    return Interval(lo, hi)


def g_enclosure(iv: Interval) -> Interval:
    """Range enclosure of g (strictly decreasing, positive) over ``iv``."""
    if not 0.0 < iv.lo <= iv.hi < 1.0:
        raise ValueError(f"g_enclosure needs iv within (0, 1), got {iv}")
    return Interval(max(0.0, g_of(iv.hi) - TRANSCENDENTAL_SLACK),
                    g_of(iv.lo) + TRANSCENDENTAL_SLACK)


def big_g_enclosure(iv: Interval) -> Interval:
    """Range enclosure of G (strictly decreasing, negative) over ``iv``."""
    if not 0.0 < iv.lo <= iv.hi < 1.0:
        raise ValueError(f"big_g_enclosure needs iv within (0, 1), got {iv}")
    return Interval(big_g_of(iv.hi) - TRANSCENDENTAL_SLACK,
                    big_g_of(iv.lo) + TRANSCENDENTAL_SLACK)


def product_enclosure(x: Interval, y: Interval) -> Interval:
    """Enclosure of x*y for subintervals of [0, 1], clamped back to [0, 1]."""
    return Interval(max(0.0, _dn(x.lo * y.lo)), min(1.0, _up(x.hi * y.hi)))


def f_box_enclosure(x: Interval, y: Interval) -> Interval | None:
    """h-form interval extension of f on a box inside the open square.

    None when the denominator enclosure touches 0 (the caller splits).
    """
    p = product_enclosure(x, y)
    num = h_enclosure(p)
    den = h_enclosure(x) * y + h_enclosure(y) * x
    if den.lo <= 0.0:
        return None
    return num / den


def f_box_refined(x: Interval, y: Interval) -> Interval | None:
    """g-form interval extension, usually tighter off the h peak."""
    p = product_enclosure(x, y)
    if not (0.0 < p.lo and p.hi < 1.0):
        return None
    num = g_enclosure(p)
    den = g_enclosure(x) + g_enclosure(y)
    if den.lo <= 0.0:
        return None
    return num / den


def f_point_enclosure(x: float, y: float) -> Interval:
    """Tight enclosure of f at one interior point (g form, outward)."""
    p = x * y
    pint = Interval(max(0.0, _dn(p)), _up(p))
    if not (0.0 < pint.lo and pint.hi < 1.0):
        raise ValueError("f_point_enclosure needs an interior point")
    num = g_enclosure(pint)
    den = g_enclosure(Interval.point(x)) + g_enclosure(Interval.point(y))
    return num / den


def f_gradient_enclosure(x: Interval, y: Interval) -> tuple[Interval, Interval] | None:
    """Enclosures of (df/dx, df/dy) on a box inside the open square."""
    p = product_enclosure(x, y)
    if not (0.0 < p.lo and p.hi < 1.0 and x.lo > 0.0 and y.lo > 0.0):
        return None
    num = g_enclosure(p)
    den = g_enclosure(x) + g_enclosure(y)
    if den.lo <= 0.0:
        return None
    gp = big_g_enclosure(p)
    gx = big_g_enclosure(x)
    gy = big_g_enclosure(y)
    den2 = den * den
    dfx = (gp * den - num * gx) / (x * den2)
    dfy = (gp * den - num * gy) / (y * den2)
    return dfx, dfy


def f_mean_value(x: Interval, y: Interval) -> Interval | None:
    """Mean-value form enclosure of f around the box center."""
    grad = f_gradient_enclosure(x, y)
    if grad is None:
        return None
    dfx, dfy = grad
    cx, cy = x.mid, y.mid
    f0 = f_point_enclosure(cx, cy)
    rx = max(cx - x.lo, x.hi - cx)
    ry = max(cy - y.lo, y.hi - cy)
    spread = _up(_up(dfx.mag() * rx) + _up(dfy.mag() * ry))
    return Interval(_dn(f0.lo - spread), _up(f0.hi + spread))
