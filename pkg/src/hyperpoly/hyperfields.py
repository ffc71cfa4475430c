"""The five concrete hyperfields, field adapters, and their set algebra.

Elements are exact: rationals, rational angles in pi-units, or Gaussian
rationals.  Hyperaddition returns closed-form set shapes (finite sets,
closed intervals, tropical down-sets, open circular arcs) on which
membership is decided by rational comparisons only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Frac
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .complexval import ComplexVal, CPLX_ONE, CPLX_ZERO


class HyperfieldId(Enum):
    KRASNER = "K"
    SIGN = "S"
    TROPICAL = "T"
    VIRO = "V"
    PHASE = "P"
    FIELD_RATIONAL = "Q"
    FIELD_COMPLEX = "C"


class _Bottom:
    """The tropical additive identity, below every rational."""
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"


BOTTOM = _Bottom()


class DomainError(ValueError):
    """Raised when an operand is not valid in the requested hyperfield."""


class _PhaseZero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "0"


PHASE_ZERO = _PhaseZero()


@dataclass(frozen=True)
class Element:
    hyperfield: HyperfieldId
    value: object

    def __post_init__(self):
        hf, v = self.hyperfield, self.value
        if hf is HyperfieldId.KRASNER and v not in (0, 1):
            raise DomainError(f"Krasner element must be 0 or 1, got {v!r}")
        if hf is HyperfieldId.SIGN and v not in (-1, 0, 1):
            raise DomainError(f"sign element must be -1, 0 or 1, got {v!r}")
        if hf is HyperfieldId.TROPICAL and not (v is BOTTOM or isinstance(v, Frac)):
            raise DomainError(f"tropical element must be rational or -inf, got {v!r}")
        if hf is HyperfieldId.VIRO:
            if not isinstance(v, Frac) or v < 0:
                raise DomainError(f"Viro element must be a nonnegative rational, got {v!r}")
        if hf is HyperfieldId.PHASE:
            if not (v is PHASE_ZERO or (isinstance(v, Frac) and 0 <= v < 2)):
                raise DomainError(f"phase element must be 0 or an angle in [0,2), got {v!r}")
        if hf is HyperfieldId.FIELD_RATIONAL and not isinstance(v, Frac):
            raise DomainError(f"rational element expected, got {v!r}")
        if hf is HyperfieldId.FIELD_COMPLEX and not isinstance(v, ComplexVal):
            raise DomainError(f"complex element expected, got {v!r}")

    def is_zero(self) -> bool:
        hf, v = self.hyperfield, self.value
        if hf is HyperfieldId.TROPICAL:
            return v is BOTTOM
        if hf is HyperfieldId.PHASE:
            return v is PHASE_ZERO
        if hf is HyperfieldId.FIELD_COMPLEX:
            return v.is_zero()
        return v == 0

    def __repr__(self):
        return f"{self.hyperfield.value}({self.value!r})"


# -- constructors -----------------------------------------------------

def krasner(v: int) -> Element:
    return Element(HyperfieldId.KRASNER, v)


def sign_el(v: int) -> Element:
    return Element(HyperfieldId.SIGN, v)


def trop(x) -> Element:
    return Element(HyperfieldId.TROPICAL, x if x is BOTTOM else Frac(x))


def trop_bottom() -> Element:
    return Element(HyperfieldId.TROPICAL, BOTTOM)


def viro(x) -> Element:
    return Element(HyperfieldId.VIRO, Frac(x))


def phase(angle) -> Element:
    return Element(HyperfieldId.PHASE, Frac(angle) % 2)


def phase_zero() -> Element:
    return Element(HyperfieldId.PHASE, PHASE_ZERO)


def rational(x) -> Element:
    return Element(HyperfieldId.FIELD_RATIONAL, Frac(x))


def cplx_rect(re, im=0) -> Element:
    return Element(HyperfieldId.FIELD_COMPLEX, ComplexVal.from_rect(re, im))


def cplx_polar(r, theta) -> Element:
    return Element(HyperfieldId.FIELD_COMPLEX, ComplexVal.from_polar(r, theta))


def zero(hf: HyperfieldId) -> Element:
    return {
        HyperfieldId.KRASNER: krasner(0),
        HyperfieldId.SIGN: sign_el(0),
        HyperfieldId.TROPICAL: trop_bottom(),
        HyperfieldId.VIRO: viro(0),
        HyperfieldId.PHASE: phase_zero(),
        HyperfieldId.FIELD_RATIONAL: rational(0),
        HyperfieldId.FIELD_COMPLEX: Element(HyperfieldId.FIELD_COMPLEX, CPLX_ZERO),
    }[hf]


def one(hf: HyperfieldId) -> Element:
    return {
        HyperfieldId.KRASNER: krasner(1),
        HyperfieldId.SIGN: sign_el(1),
        HyperfieldId.TROPICAL: trop(0),
        HyperfieldId.VIRO: viro(1),
        HyperfieldId.PHASE: phase(0),
        HyperfieldId.FIELD_RATIONAL: rational(1),
        HyperfieldId.FIELD_COMPLEX: Element(HyperfieldId.FIELD_COMPLEX, CPLX_ONE),
    }[hf]


def _check_same(x: Element, y: Element):
    if x.hyperfield is not y.hyperfield:
        raise DomainError(
            f"mixed hyperfields: {x.hyperfield.name} vs {y.hyperfield.name}")


# -- multiplicative structure ----------------------------------------

def multiply(x: Element, y: Element) -> Element:
    _check_same(x, y)
    hf = x.hyperfield
    if hf is HyperfieldId.KRASNER:
        return krasner(x.value * y.value)
    if hf is HyperfieldId.SIGN:
        return sign_el(x.value * y.value)
    if hf is HyperfieldId.TROPICAL:
        if x.value is BOTTOM or y.value is BOTTOM:
            return trop_bottom()
        return trop(x.value + y.value)
    if hf is HyperfieldId.VIRO:
        return viro(x.value * y.value)
    if hf is HyperfieldId.PHASE:
        if x.is_zero() or y.is_zero():
            return phase_zero()
        return phase(x.value + y.value)
    if hf is HyperfieldId.FIELD_RATIONAL:
        return rational(x.value * y.value)
    return Element(hf, x.value * y.value)


def negate(x: Element) -> Element:
    hf = x.hyperfield
    if hf in (HyperfieldId.KRASNER, HyperfieldId.TROPICAL, HyperfieldId.VIRO):
        return x
    if hf is HyperfieldId.SIGN:
        return sign_el(-x.value)
    if hf is HyperfieldId.PHASE:
        return x if x.is_zero() else phase(x.value + 1)
    if hf is HyperfieldId.FIELD_RATIONAL:
        return rational(-x.value)
    return Element(hf, -x.value)


def inverse(x: Element) -> Element:
    if x.is_zero():
        raise DomainError("zero has no multiplicative inverse")
    hf = x.hyperfield
    if hf in (HyperfieldId.KRASNER, HyperfieldId.SIGN):
        return x
    if hf is HyperfieldId.TROPICAL:
        return trop(-x.value)
    if hf is HyperfieldId.VIRO:
        return viro(1 / x.value)
    if hf is HyperfieldId.PHASE:
        return phase(-x.value)
    if hf is HyperfieldId.FIELD_RATIONAL:
        return rational(1 / x.value)
    return Element(hf, x.value.inverse())


def divide(x: Element, y: Element) -> Element:
    return multiply(x, inverse(y))


def power(x: Element, n: int) -> Element:
    if n < 0:
        return power(inverse(x), -n)
    acc = one(x.hyperfield)
    for _ in range(n):
        acc = multiply(acc, x)
    return acc


# -- set shapes -------------------------------------------------------

class ElementSet:
    hyperfield: HyperfieldId

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def contains_zero(self) -> bool:
        return self.contains(zero(self.hyperfield))

    def is_empty(self) -> bool:
        return False


@dataclass(frozen=True)
class FiniteSet(ElementSet):
    hyperfield: HyperfieldId
    elems: frozenset

    def contains(self, x: Element) -> bool:
        return x in self.elems

    def is_empty(self) -> bool:
        return not self.elems


@dataclass(frozen=True)
class IntervalSet(ElementSet):
    """Finite union of disjoint closed intervals of nonnegative rationals."""
    intervals: Tuple[Tuple[Frac, Frac], ...]
    hyperfield: HyperfieldId = HyperfieldId.VIRO

    @staticmethod
    def of(*intervals) -> "IntervalSet":
        ivs = []
        for lo, hi in intervals:
            lo, hi = Frac(lo), Frac(hi)
            if lo < 0 or hi < lo:
                raise DomainError(f"bad Viro interval [{lo},{hi}]")
            ivs.append((lo, hi))
        ivs.sort()
        merged: List[Tuple[Frac, Frac]] = []
        for lo, hi in ivs:
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        return IntervalSet(tuple(merged))

    def contains(self, x: Element) -> bool:
        return any(lo <= x.value <= hi for lo, hi in self.intervals)

    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def lo(self) -> Frac:
        return self.intervals[0][0]

    @property
    def hi(self) -> Frac:
        return self.intervals[-1][1]


@dataclass(frozen=True)
class TropSet(ElementSet):
    """A tropical down-set (optionally) plus finitely many points above it."""
    down_max: object = None  # None: no down-set part; else Frac or BOTTOM
    points: frozenset = frozenset()
    hyperfield: HyperfieldId = HyperfieldId.TROPICAL

    @staticmethod
    def of(down_max=None, points: Iterable[Frac] = ()) -> "TropSet":
        pts = frozenset(Frac(p) for p in points)
        if down_max is not None and down_max is not BOTTOM:
            down_max = Frac(down_max)
            pts = frozenset(p for p in pts if p > down_max)
        return TropSet(down_max, pts)

    def contains(self, x: Element) -> bool:
        v = x.value
        if v is BOTTOM:
            return self.down_max is not None
        if v in self.points:
            return True
        if self.down_max is None or self.down_max is BOTTOM:
            return False
        return v <= self.down_max

    def is_empty(self) -> bool:
        return self.down_max is None and not self.points


def _arc_norm(a: Frac) -> Frac:
    return a % 2


def _arc_contains(start: Frac, end: Frac, x: Frac) -> bool:
    """Open arc going counterclockwise from start to end, endpoints excluded."""
    span = (end - start) % 2
    off = (x - start) % 2
    return 0 < off < span


@dataclass(frozen=True)
class PhaseSet(ElementSet):
    """Subset of the phase hyperfield: zero flag, isolated angles, open arcs."""
    has_zero: bool = False
    points: frozenset = frozenset()
    arcs: Tuple[Tuple[Frac, Frac], ...] = ()
    full_circle: bool = False
    hyperfield: HyperfieldId = HyperfieldId.PHASE

    @staticmethod
    def of(has_zero=False, points: Iterable[Frac] = (), arcs=(), full_circle=False) -> "PhaseSet":
        pts = set(_arc_norm(Frac(p)) for p in points)
        raw_arcs = [(_arc_norm(Frac(s)), _arc_norm(Frac(e))) for s, e in arcs]
        if full_circle:
            return PhaseSet(has_zero, frozenset(), (), True)
        # merge overlapping arcs; absorb points that glue two arcs together
        changed = True
        while changed:
            changed = False
            out: List[Tuple[Frac, Frac]] = []
            for s, e in raw_arcs:
                span = (e - s) % 2
                if span == 0:
                    continue
                merged = False
                for i, (s2, e2) in enumerate(out):
                    joined = _join_arcs(s, e, s2, e2)
                    if joined == "full":
                        return PhaseSet(has_zero, frozenset(), (), True)
                    if joined is not None:
                        out[i] = joined
                        merged = changed = True
                        break
                if not merged:
                    out.append((s, e))
            raw_arcs = out
            # a point sitting at the junction of two arcs (or interior) merges in
            for p in list(pts):
                if any(_arc_contains(s, e, p) for s, e in raw_arcs):
                    pts.discard(p)
                    continue
                left = [i for i, (s, e) in enumerate(raw_arcs) if e == p]
                right = [i for i, (s, e) in enumerate(raw_arcs) if s == p]
                if left and right:
                    i, j = left[0], right[0]
                    s, e = raw_arcs[i][0], raw_arcs[j][1]
                    pts.discard(p)
                    if (e - s) % 2 == 0 and len({i, j}) == 2:
                        keep = [a for k, a in enumerate(raw_arcs) if k not in (i, j)]
                        if not keep:
                            return PhaseSet(has_zero, frozenset(), (), True)
                        raw_arcs = keep + [(s, e)]
                    elif i == j:
                        return PhaseSet(has_zero, frozenset(), (), True)
                    else:
                        raw_arcs = [a for k, a in enumerate(raw_arcs) if k not in (i, j)]
                        raw_arcs.append((s, e))
                    changed = True
                    break
        return PhaseSet(has_zero, frozenset(pts), tuple(sorted(raw_arcs)))

    def contains(self, x: Element) -> bool:
        if x.is_zero():
            return self.has_zero
        if self.full_circle:
            return True
        a = x.value
        return a in self.points or any(_arc_contains(s, e, a) for s, e in self.arcs)

    def is_empty(self) -> bool:
        return not (self.has_zero or self.full_circle or self.points or self.arcs)


def _join_arcs(s1, e1, s2, e2):
    """Union of two open arcs if it is a single open arc (or 'full'); else None."""
    sp1, sp2 = (e1 - s1) % 2, (e2 - s2) % 2
    in1 = lambda x: _arc_contains(s1, e1, x)
    in2 = lambda x: _arc_contains(s2, e2, x)
    if in1(s2) and in1(e2) and in2(s1) and in2(e1):
        return "full"
    if in2(s1) and in2(e1) and not (in1(s2) or in1(e2)):
        return (s2, e2)
    if in1(s2) and in1(e2) and not (in2(s1) or in2(e1)):
        return (s1, e1)
    if in1(s2) or (s2 == e1 and sp1 + sp2 < 2 and False):
        # s2 inside arc1: union runs from s1 to e2
        return (s1, e2) if in2(e1) or in1(e2) is False or True else None
    if in2(s1):
        return (s2, e1) if True else None
    return None


def _arcs_overlap_union(s1, e1, s2, e2):
    pass


# -- hyperaddition ----------------------------------------------------

_SIGN_ALL = frozenset({sign_el(-1), sign_el(0), sign_el(1)})


def hyperadd(x: Element, y: Element) -> ElementSet:
    _check_same(x, y)
    hf = x.hyperfield
    if x.is_zero():
        return singleton(y)
    if y.is_zero():
        return singleton(x)
    if hf is HyperfieldId.KRASNER:
        if x.value == y.value == 1:
            return FiniteSet(hf, frozenset({krasner(0), krasner(1)}))
        return singleton(krasner(1))
    if hf is HyperfieldId.SIGN:
        if x.value == y.value:
            return singleton(x)
        return FiniteSet(hf, _SIGN_ALL)
    if hf is HyperfieldId.TROPICAL:
        if x.value == y.value:
            return TropSet.of(down_max=x.value)
        return singleton(trop(max(x.value, y.value)))
    if hf is HyperfieldId.VIRO:
        return IntervalSet.of((abs(x.value - y.value), x.value + y.value))
    if hf is HyperfieldId.PHASE:
        if y.value == (x.value + 1) % 2:
            return PhaseSet.of(has_zero=True, points=[x.value, y.value])
        if x.value == y.value:
            return PhaseSet.of(points=[x.value])
        return PhaseSet.of(arcs=[_minor_arc(x.value, y.value)])
    if hf is HyperfieldId.FIELD_RATIONAL:
        return singleton(rational(x.value + y.value))
    return singleton(Element(hf, x.value + y.value))


def _minor_arc(a: Frac, b: Frac) -> Tuple[Frac, Frac]:
    """Open arc of positive combinations of two non-antipodal unit phases."""
    d = (b - a) % 2
    if d < 1:
        return (a, b)
    return (b, a)


def singleton(x: Element) -> ElementSet:
    hf = x.hyperfield
    if hf is HyperfieldId.VIRO:
        return IntervalSet.of((x.value, x.value))
    if hf is HyperfieldId.TROPICAL:
        if x.value is BOTTOM:
            return TropSet.of(down_max=BOTTOM)
        return TropSet.of(points=[x.value])
    if hf is HyperfieldId.PHASE:
        if x.is_zero():
            return PhaseSet.of(has_zero=True)
        return PhaseSet.of(points=[x.value])
    return FiniteSet(hf, frozenset({x}))


def antipodal_triple(theta) -> PhaseSet:
    theta = Frac(theta) % 2
    return PhaseSet.of(has_zero=True, points=[theta, (theta + 1) % 2])


def open_arc(start, end) -> PhaseSet:
    start, end = Frac(start) % 2, Frac(end) % 2
    width = (end - start) % 2
    if not 0 < width < 1:
        raise DomainError(f"open arc width must lie in (0,1), got {width}")
    return PhaseSet.of(arcs=[(start, end)])


# -- element (+) set, scaling, unions --------------------------------

def elem_plus_set(x: Element, s: ElementSet) -> ElementSet:
    """Closed-form hypersum of an element with a set, x (+) S."""
    if x.hyperfield is not s.hyperfield:
        raise DomainError("mixed hyperfields in elem_plus_set")
    hf = x.hyperfield
    if isinstance(s, FiniteSet):
        return set_union_many([hyperadd(x, e) for e in s.elems])
    if isinstance(s, IntervalSet):
        if x.is_zero():
            return s
        out = []
        for lo, hi in s.intervals:
            v = x.value
            dist = lo - v if v < lo else (v - hi if v > hi else Frac(0))
            out.append((dist, v + hi))
        return IntervalSet.of(*out)
    if isinstance(s, TropSet):
        parts: List[ElementSet] = []
        if s.down_max is not None:
            parts.append(_trop_elem_plus_down(x, s.down_max))
        for p in s.points:
            parts.append(hyperadd(x, trop(p)))
        return set_union_many(parts)
    if isinstance(s, PhaseSet):
        if x.is_zero():
            return s
        if s.full_circle:
            # every antipode is hit, so the sum covers all of P
            return PhaseSet.of(has_zero=True, full_circle=True)
        parts = [PhaseSet.of(has_zero=s.has_zero)]
        if s.has_zero:
            parts.append(singleton(x))
        for p in s.points:
            parts.append(hyperadd(x, Element(hf, p)))
        for arc in s.arcs:
            parts.append(_phase_elem_plus_arc(x.value, arc))
        return set_union_many(parts)
    raise TypeError(f"unknown set shape {type(s).__name__}")


def _trop_elem_plus_down(x: Element, m) -> ElementSet:
    if x.value is BOTTOM:
        return TropSet.of(down_max=m)
    if m is BOTTOM:
        return singleton(x)
    if x.value > m:
        return singleton(x)
    return TropSet.of(down_max=m)


def _phase_elem_plus_arc(x: Frac, arc: Tuple[Frac, Frac]) -> PhaseSet:
    """x (+) open arc, derived from the pointwise phase hyperaddition."""
    s, e = arc
    anti = (x + 1) % 2
    if _arc_contains(s, e, anti):
        # the antipodal point inside the arc disconnects the circle fully
        return PhaseSet.of(has_zero=True, full_circle=True)
    if _arc_contains(s, e, x):
        return PhaseSet.of(arcs=[arc])
    # arc sits strictly on one side of the x / -x axis
    rel_s = (s - x) % 2
    if 0 <= rel_s < 1 and s != anti:
        # arc within the half-turn counterclockwise of x
        return PhaseSet.of(arcs=[(x, e)]) if s != x else PhaseSet.of(arcs=[(x, e)])
    return PhaseSet.of(arcs=[(s, x)]) if e != x else PhaseSet.of(arcs=[(s, x)])


def scale_set(a: Element, s: ElementSet) -> ElementSet:
    """Image of a set under multiplication by a fixed element."""
    hf = a.hyperfield
    if a.is_zero():
        return singleton(zero(hf))
    if isinstance(s, FiniteSet):
        return FiniteSet(hf, frozenset(multiply(a, e) for e in s.elems))
    if isinstance(s, IntervalSet):
        return IntervalSet.of(*[(a.value * lo, a.value * hi) for lo, hi in s.intervals])
    if isinstance(s, TropSet):
        dm = s.down_max
        if dm is not None and dm is not BOTTOM:
            dm = dm + a.value
        return TropSet.of(down_max=dm, points=[p + a.value for p in s.points])
    if isinstance(s, PhaseSet):
        if s.full_circle:
            return s
        t = a.value
        return PhaseSet.of(
            has_zero=s.has_zero,
            points=[(p + t) % 2 for p in s.points],
            arcs=[((u + t) % 2, (v + t) % 2) for u, v in s.arcs])
    raise TypeError(f"unknown set shape {type(s).__name__}")


def set_contains(s: ElementSet, x: Element) -> bool:
    if s.hyperfield is not x.hyperfield:
        raise DomainError("mixed hyperfields in set_contains")
    return s.contains(x)


def set_contains_zero(s: ElementSet) -> bool:
    return s.contains_zero()


def set_union(s1: ElementSet, s2: ElementSet) -> ElementSet:
    return set_union_many([s1, s2])


def set_union_many(sets: Sequence[ElementSet]) -> ElementSet:
    sets = [s for s in sets if not s.is_empty()]
    if not sets:
        raise DomainError("union of no sets")
    hf = sets[0].hyperfield
    if any(s.hyperfield is not hf for s in sets):
        raise DomainError("mixed hyperfields in union")
    if all(isinstance(s, FiniteSet) for s in sets):
        out = frozenset().union(*[s.elems for s in sets])
        return FiniteSet(hf, out)
    if all(isinstance(s, IntervalSet) for s in sets):
        ivs = [iv for s in sets for iv in s.intervals]
        return IntervalSet.of(*ivs)
    if all(isinstance(s, TropSet) for s in sets):
        downs = [s.down_max for s in sets if s.down_max is not None]
        dm = None
        if downs:
            dm = BOTTOM
            for d in downs:
                if d is BOTTOM:
                    continue
                dm = d if (dm is BOTTOM or d > dm) else dm
        pts = set()
        for s in sets:
            pts.update(s.points)
        return TropSet.of(down_max=dm, points=pts)
    if all(isinstance(s, PhaseSet) for s in sets):
        if any(s.full_circle for s in sets):
            return PhaseSet.of(has_zero=any(s.has_zero for s in sets), full_circle=True)
        pts = set()
        arcs = []
        for s in sets:
            pts.update(s.points)
            arcs.extend(s.arcs)
        return PhaseSet.of(has_zero=any(s.has_zero for s in sets),
                           points=pts, arcs=arcs)
    raise DomainError("union of incompatible set shapes")


def set_intersection(s1: ElementSet, s2: ElementSet) -> ElementSet:
    if s1.hyperfield is not s2.hyperfield:
        raise DomainError("mixed hyperfields in intersection")
    hf = s1.hyperfield
    if isinstance(s1, FiniteSet) and isinstance(s2, FiniteSet):
        return FiniteSet(hf, s1.elems & s2.elems)
    if isinstance(s1, IntervalSet) and isinstance(s2, IntervalSet):
        out = []
        for lo1, hi1 in s1.intervals:
            for lo2, hi2 in s2.intervals:
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if lo <= hi:
                    out.append((lo, hi))
        return IntervalSet.of(*out) if out else IntervalSet(())
    if isinstance(s1, TropSet) and isinstance(s2, TropSet):
        dm = None
        d1, d2 = s1.down_max, s2.down_max
        if d1 is not None and d2 is not None:
            if d1 is BOTTOM or d2 is BOTTOM:
                dm = BOTTOM
            else:
                dm = min(d1, d2)
        pts = {p for p in s1.points if s2.contains(trop(p))}
        pts |= {p for p in s2.points if s1.contains(trop(p))}
        return TropSet.of(down_max=dm, points=pts)
    if isinstance(s1, PhaseSet) and isinstance(s2, PhaseSet):
        return _phase_intersection(s1, s2)
    raise DomainError("intersection of incompatible set shapes")


def _phase_intersection(s1: PhaseSet, s2: PhaseSet) -> PhaseSet:
    if s1.full_circle:
        return PhaseSet.of(has_zero=s1.has_zero and s2.has_zero,
                           points=s2.points, arcs=s2.arcs, full_circle=s2.full_circle)
    if s2.full_circle:
        return _phase_intersection(s2, s1)
    has_zero = s1.has_zero and s2.has_zero
    pts = {p for p in s1.points if s2.contains(phase(p))}
    pts |= {p for p in s2.points if s1.contains(phase(p))}
    arcs = []
    for a1 in s1.arcs:
        for a2 in s2.arcs:
            arcs.extend(_arc_intersection(a1, a2))
    return PhaseSet.of(has_zero=has_zero, points=pts, arcs=arcs)


def _arc_intersection(a1, a2) -> List[Tuple[Frac, Frac]]:
    s1, e1 = a1
    s2, e2 = a2
    out = []
    for s, e in ((max_start(s1, s2, a1, a2)),):
        pass
    # enumerate candidate sub-arcs by clipping a2 against a1
    candidates = []
    if _arc_contains(s1, e1, s2):
        end = e2 if _arc_contains(s1, e1, e2) and _arc_after(s2, e2, e1) else e1
        candidates.append((s2, end))
    if _arc_contains(s2, e2, s1):
        end = e1 if _arc_contains(s2, e2, e1) and _arc_after(s1, e1, e2) else e2
        candidates.append((s1, end))
    if s1 == s2:
        span1, span2 = (e1 - s1) % 2, (e2 - s2) % 2
        candidates.append((s1, e1 if span1 <= span2 else e2))
    for s, e in candidates:
        if (e - s) % 2 > 0:
            out.append((s, e))
    # dedupe
    seen = set()
    uniq = []
    for arc in out:
        if arc not in seen:
            seen.add(arc)
            uniq.append(arc)
    return uniq


def _arc_after(s, e, x) -> bool:
    """True when the arc (s,e) ends before reaching past x (helper for clipping)."""
    return ((e - s) % 2) <= ((x - s) % 2)


def max_start(s1, s2, a1, a2):
    return (s1, s1)


def hypersum(xs: Sequence[Element]) -> ElementSet:
    """n-ary hypersum, computed by the recursive union definition."""
    if not xs:
        raise DomainError("hypersum of empty list")
    hf = xs[0].hyperfield
    for x in xs[1:]:
        if x.hyperfield is not hf:
            raise DomainError("mixed hyperfields in hypersum")
    acc = singleton(xs[-1])
    for x in reversed(xs[:-1]):
        acc = elem_plus_set(x, acc)
    return acc


# -- axiom checking ---------------------------------------------------

@dataclass
class AxiomReport:
    hyperfield: HyperfieldId
    checks: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def default_samples(hf: HyperfieldId) -> List[Element]:
    if hf is HyperfieldId.KRASNER:
        return [krasner(0), krasner(1)]
    if hf is HyperfieldId.SIGN:
        return [sign_el(-1), sign_el(0), sign_el(1)]
    if hf is HyperfieldId.TROPICAL:
        return [trop_bottom(), trop(-2), trop(0), trop(Frac(1, 2)), trop(3)]
    if hf is HyperfieldId.VIRO:
        return [viro(0), viro(Frac(1, 2)), viro(1), viro(2)]
    if hf is HyperfieldId.PHASE:
        angles = [Frac(0), Frac(1, 24), Frac(1, 2), Frac(1), Frac(25, 24), Frac(3, 2)]
        return [phase_zero()] + [phase(a) for a in angles]
    if hf is HyperfieldId.FIELD_RATIONAL:
        return [rational(x) for x in (-2, -1, 0, Frac(1, 2), 1, 3)]
    return [cplx_rect(re, im) for re in (-1, 0, 1) for im in (-1, 0, 2)]


def axiom_suite(hf: HyperfieldId, samples: Optional[Sequence[Element]] = None) -> AxiomReport:
    """Check the hyperfield axioms on a finite sample set.

    Exhaustive for the finite hyperfields; deterministic grids otherwise.
    Violations are reported, not raised.
    """
    xs = list(samples) if samples is not None else default_samples(hf)
    rep = AxiomReport(hf)
    z = zero(hf)

    for x in xs:
        rep.checks += 1
        if hyperadd(z, x) != singleton(x):
            rep.violations.append(f"identity fails at {x}")
        if not hyperadd(x, negate(x)).contains_zero():
            rep.violations.append(f"hyperinverse fails at {x}")
        inverses = [y for y in xs if hyperadd(x, y).contains_zero()]
        expected = [y for y in inverses if y == negate(x)]
        if len(inverses) != len(expected) or not expected:
            if negate(x) in xs:
                rep.violations.append(f"hyperinverse not unique at {x}: {inverses}")

    for x in xs:
        for y in xs:
            rep.checks += 1
            if hyperadd(x, y) != hyperadd(y, x):
                rep.violations.append(f"commutativity fails at ({x},{y})")

    for x in xs:
        for y in xs:
            for c in xs:
                rep.checks += 1
                left = elem_plus_set(x, hyperadd(y, c))
                right = elem_plus_set(c, hyperadd(x, y))
                if left != right:
                    rep.violations.append(f"associativity fails at ({x},{y},{c})")
                # reversibility
                if hyperadd(y, c).contains(x) != hyperadd(x, negate(y)).contains(c):
                    rep.violations.append(f"reversibility fails at ({x},{y},{c})")
                # distributivity
                if scale_set(c, hyperadd(x, y)) != hyperadd(multiply(c, x), multiply(c, y)):
                    rep.violations.append(f"distributivity fails at ({c},{x},{y})")
                if rep.violations:
                    return rep
    return rep
