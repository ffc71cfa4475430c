"""Exact-where-possible complex scalars.

A value carries a Gaussian-rational rectangular form, a polar form with
rational modulus and rational angle (in units of pi), or both.  Operations
keep whichever exact forms survive; the float approximation is always
available for numeric cross-checks but never drives an exact decision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction as Frac
from typing import Optional, Tuple


def _norm_angle(theta: Frac) -> Frac:
    return theta % 2


# angles (in pi-units) whose cosine/sine are rational
_EXACT_TRIG = {
    Frac(0): (Frac(1), Frac(0)),
    Frac(1, 2): (Frac(0), Frac(1)),
    Frac(1): (Frac(-1), Frac(0)),
    Frac(3, 2): (Frac(0), Frac(-1)),
}


@dataclass(frozen=True)
class ComplexVal:
    rect: Optional[Tuple[Frac, Frac]] = None
    polar: Optional[Tuple[Frac, Frac]] = None  # (modulus, angle/pi), angle in [0,2)

    def __post_init__(self):
        if self.rect is None and self.polar is None:
            raise ValueError("ComplexVal needs a rect or polar form")
        if self.polar is not None:
            r, theta = self.polar
            if r < 0:
                raise ValueError("polar modulus must be nonnegative")
            if r == 0 and theta != 0:
                object.__setattr__(self, "polar", (Frac(0), Frac(0)))

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rect(re, im=0) -> "ComplexVal":
        re, im = Frac(re), Frac(im)
        c = ComplexVal(rect=(re, im))
        return c._fill_polar()

    @staticmethod
    def from_polar(r, theta) -> "ComplexVal":
        r, theta = Frac(r), _norm_angle(Frac(theta))
        if r == 0:
            theta = Frac(0)
        c = ComplexVal(polar=(r, theta))
        return c._fill_rect()

    def _fill_polar(self) -> "ComplexVal":
        """Attach an exact polar form when the rect form admits one."""
        if self.polar is not None or self.rect is None:
            return self
        re, im = self.rect
        if im == 0:
            r, theta = abs(re), (Frac(0) if re >= 0 else Frac(1))
        elif re == 0:
            r, theta = abs(im), (Frac(1, 2) if im > 0 else Frac(3, 2))
        else:
            return self
        return ComplexVal(rect=self.rect, polar=(r, theta))

    def _fill_rect(self) -> "ComplexVal":
        if self.rect is not None or self.polar is None:
            return self
        r, theta = self.polar
        trig = _EXACT_TRIG.get(theta)
        if trig is None:
            return self
        return ComplexVal(rect=(r * trig[0], r * trig[1]), polar=self.polar)

    # -- queries ------------------------------------------------------
    def is_zero(self) -> bool:
        if self.rect is not None:
            return self.rect == (0, 0)
        return self.polar[0] == 0

    @property
    def modulus_squared(self) -> Frac:
        if self.polar is not None:
            return self.polar[0] ** 2
        re, im = self.rect
        return re * re + im * im

    def exact_modulus(self) -> Optional[Frac]:
        """Rational modulus, or None when it is irrational/unknown."""
        if self.polar is not None:
            return self.polar[0]
        msq = self.modulus_squared
        root = _frac_sqrt(msq)
        return root

    def exact_phase(self) -> Optional[Frac]:
        """Angle as a rational multiple of pi, or None when unknown.

        Zero has no phase; callers must check is_zero() first.
        """
        if self.is_zero():
            raise ValueError("zero has no phase")
        if self.polar is not None:
            return self.polar[1]
        re, im = self.rect
        if im == 0:
            return Frac(0) if re > 0 else Frac(1)
        if re == 0:
            return Frac(1, 2) if im > 0 else Frac(3, 2)
        if abs(re) == abs(im):
            octant = {(1, 1): Frac(1, 4), (-1, 1): Frac(3, 4),
                      (-1, -1): Frac(5, 4), (1, -1): Frac(7, 4)}
            return octant[(1 if re > 0 else -1, 1 if im > 0 else -1)]
        return None

    @property
    def approx(self) -> complex:
        if self.rect is not None:
            return complex(self.rect[0], self.rect[1])
        r, theta = self.polar
        return float(r) * cmath.exp(1j * math.pi * float(theta))

    # -- arithmetic ---------------------------------------------------
    def __mul__(self, other: "ComplexVal") -> "ComplexVal":
        rect = None
        polar = None
        if self.rect is not None and other.rect is not None:
            a, b = self.rect
            c, d = other.rect
            rect = (a * c - b * d, a * d + b * c)
        if self.polar is not None and other.polar is not None:
            polar = (self.polar[0] * other.polar[0],
                     _norm_angle(self.polar[1] + other.polar[1]))
        if rect is None and polar is None:
            left = self._fill_rect()._fill_polar()
            right = other._fill_rect()._fill_polar()
            if (left.rect, left.polar) != (self.rect, self.polar) or \
               (right.rect, right.polar) != (other.rect, other.polar):
                return left * right
            raise ValueError("product has no exact representation")
        return ComplexVal(rect=rect, polar=polar)

    def __add__(self, other: "ComplexVal") -> "ComplexVal":
        left = self._fill_rect()
        right = other._fill_rect()
        if left.rect is None or right.rect is None:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("sum has no exact representation")
        return ComplexVal.from_rect(left.rect[0] + right.rect[0],
                                    left.rect[1] + right.rect[1])

    def __neg__(self) -> "ComplexVal":
        rect = (-self.rect[0], -self.rect[1]) if self.rect is not None else None
        polar = None
        if self.polar is not None:
            polar = (self.polar[0], _norm_angle(self.polar[1] + 1))
        return ComplexVal(rect=rect, polar=polar)

    def inverse(self) -> "ComplexVal":
        if self.is_zero():
            raise ZeroDivisionError("complex zero has no inverse")
        rect = None
        polar = None
        if self.rect is not None:
            re, im = self.rect
            n = re * re + im * im
            rect = (re / n, -im / n)
        if self.polar is not None:
            polar = (1 / self.polar[0], _norm_angle(-self.polar[1]))
        return ComplexVal(rect=rect, polar=polar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexVal):
            return NotImplemented
        a = self._fill_rect()._fill_polar()
        b = other._fill_rect()._fill_polar()
        if a.is_zero() or b.is_zero():
            return a.is_zero() and b.is_zero()
        if a.rect is not None and b.rect is not None:
            return a.rect == b.rect
        if a.polar is not None and b.polar is not None:
            return a.polar == b.polar
        raise ValueError("cannot compare mixed exact forms")

    def __hash__(self):
        c = self._fill_rect()._fill_polar()
        if c.rect is not None:
            return hash(("C", c.rect))
        return hash(("C", c.polar))

    def __repr__(self):
        if self.rect is not None:
            return f"({self.rect[0]}+{self.rect[1]}i)"
        r, theta = self.polar
        return f"{r}*exp(ipi*{theta})"


def _frac_sqrt(x: Frac) -> Optional[Frac]:
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        raise ValueError("negative radicand")
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Frac(rn, rd)
    return None


CPLX_ZERO = ComplexVal.from_rect(0, 0)
CPLX_ONE = ComplexVal.from_rect(1, 0)
