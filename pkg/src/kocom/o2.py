"""Exact arithmetic in O(2), piecewise rotation paths, and the Klein four-group.

Every angle is a rational multiple of pi, stored mod 2 (so a value of 1/2
means the rotation by pi/2).  An element of O(2) is either a rotation R_a
or a reflected rotation R_a*A, where A = diag(1, -1).  Paths in O(2) are
piecewise affine in the angle coordinate, which keeps every winding-number
computation exact: the degree of a loop is a plain Fraction, never a float.

The degree convention is fixed so that t |-> R_{2t*pi} on [0, 1] has
degree 1; a path's degree is sum(slope * (t1 - t0)) / 2 over its segments.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class NotALoopError(ValueError):
    """Raised when a path degree is requested for a non-closed path."""


class NotInSO2Error(ValueError):
    """Raised when a rotation-only operation meets a reflected segment."""


def _frac(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Angle:
    """A rational multiple of pi, normalized into the half-open interval [0, 2)."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", _frac(self.value) % 2)

    def __add__(self, other: "Angle") -> "Angle":
        return Angle(self.value + other.value)

    def __sub__(self, other: "Angle") -> "Angle":
        return Angle(self.value - other.value)

    def __neg__(self) -> "Angle":
        return Angle(-self.value)

    def scaled(self, n: int) -> "Angle":
        return Angle(self.value * n)

    def __str__(self) -> str:
        return f"{self.value}*pi"


@dataclass(frozen=True)
class O2Element:
    """R_angle if reflect is False, otherwise R_angle * A with A = diag(1, -1).

    Multiplication table (all exact, angles mod 2*pi):
        R_a * R_b     = R_{a+b}
        R_a * (R_b A) = R_{a+b} A
        (R_a A) * R_b = R_{a-b} A
        (R_a A)(R_b A) = R_{a-b}
    """

    angle: Angle
    reflect: bool = False

    def __mul__(self, other: "O2Element") -> "O2Element":
        if not self.reflect:
            return O2Element(self.angle + other.angle, other.reflect)
        return O2Element(self.angle - other.angle, not other.reflect)

    def inverse(self) -> "O2Element":
        if self.reflect:
            return self
        return O2Element(-self.angle)

    @property
    def is_identity(self) -> bool:
        return not self.reflect and self.angle.value == 0

    def __str__(self) -> str:
        core = "I" if self.angle.value == 0 else f"R({self.angle})"
        return core + "*A" if self.reflect else core


IDENTITY = O2Element(Angle(Fraction(0)))
REFLECTION = O2Element(Angle(Fraction(0)), reflect=True)


def rotation(value: Rational) -> O2Element:
    """The rotation by value*pi."""
    return O2Element(Angle(_frac(value)))


def reflected_rotation(value: Rational) -> O2Element:
    """The element R_{value*pi} * A."""
    return O2Element(Angle(_frac(value)), reflect=True)


def o2_mul(a: O2Element, b: O2Element) -> O2Element:
    return a * b


def o2_pow(a: O2Element, n: int) -> O2Element:
    """n-fold product of a; reflections square to the identity, so odd powers
    of a reflection return the reflection itself (for every odd n, including
    negative ones)."""
    if a.reflect:
        return a if n % 2 else IDENTITY
    return O2Element(a.angle.scaled(n))


def commutes(a: O2Element, b: O2Element) -> bool:
    """Exact commutation test: rotations always commute with each other, and a
    rotation commutes with a reflected element iff it is central (I or R_pi)."""
    return a * b == b * a


@dataclass(frozen=True)
class PathSegment:
    """t |-> R_{(slope*t + offset)*pi} (times A if reflect) for t in [t0, t1]."""

    t0: Fraction
    t1: Fraction
    slope: Fraction
    offset: Fraction
    reflect: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "t0", _frac(self.t0))
        object.__setattr__(self, "t1", _frac(self.t1))
        object.__setattr__(self, "slope", _frac(self.slope))
        # The offset only matters mod 2; normalizing makes path equality usable.
        object.__setattr__(self, "offset", _frac(self.offset) % 2)
        if self.t0 >= self.t1:
            raise ValueError(f"empty segment domain [{self.t0}, {self.t1}]")

    def value(self, t: Rational) -> O2Element:
        t = _frac(t)
        if not self.t0 <= t <= self.t1:
            raise ValueError(f"parameter {t} outside [{self.t0}, {self.t1}]")
        return O2Element(Angle(self.slope * t + self.offset), self.reflect)

    def angle_change(self) -> Fraction:
        return self.slope * (self.t1 - self.t0)


class O2Path:
    """A piecewise-affine-angle path [0, 1] -> O(2).

    Segment domains partition [0, 1] and consecutive segments agree, as
    group elements, at the shared endpoint.  A path is a loop iff its two
    endpoint values agree.
    """

    def __init__(self, segments: Iterable[PathSegment]):
        segs = tuple(segments)
        if not segs:
            raise ValueError("a path needs at least one segment")
        if segs[0].t0 != 0 or segs[-1].t1 != 1:
            raise ValueError("segment domains must cover [0, 1]")
        for left, right in itertools.pairwise(segs):
            if left.t1 != right.t0:
                raise ValueError(
                    f"segment domains must be contiguous ({left.t1} != {right.t0})"
                )
            if left.value(left.t1) != right.value(right.t0):
                raise ValueError(f"path is discontinuous at t={left.t1}")
        self.segments = _merge_segments(segs)

    def value(self, t: Rational) -> O2Element:
        t = _frac(t)
        for seg in self.segments:
            if seg.t0 <= t <= seg.t1:
                return seg.value(t)
        raise ValueError(f"parameter {t} outside [0, 1]")

    @property
    def start(self) -> O2Element:
        return self.segments[0].value(self.segments[0].t0)

    @property
    def end(self) -> O2Element:
        return self.segments[-1].value(self.segments[-1].t1)

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    @property
    def in_so2(self) -> bool:
        return all(not seg.reflect for seg in self.segments)

    @property
    def in_reflection_coset(self) -> bool:
        return all(seg.reflect for seg in self.segments)

    def breakpoints(self) -> list[Fraction]:
        pts = [seg.t0 for seg in self.segments]
        pts.append(self.segments[-1].t1)
        return pts

    def pointwise_mul(self, other: "O2Path") -> "O2Path":
        """The path t |-> self(t) * other(t), on the common refinement."""
        cuts = sorted(set(self.breakpoints()) | set(other.breakpoints()))
        segs = []
        for t0, t1 in itertools.pairwise(cuts):
            a = _segment_at(self, t0, t1)
            b = _segment_at(other, t0, t1)
            # Angle algebra of the multiplication table, kept affine in t.
            if not a.reflect:
                slope, offset = a.slope + b.slope, a.offset + b.offset
            else:
                slope, offset = a.slope - b.slope, a.offset - b.offset
            segs.append(PathSegment(t0, t1, slope, offset, a.reflect != b.reflect))
        return O2Path(segs)

    def pointwise_pow(self, n: int) -> "O2Path":
        """The path t |-> self(t)**n (affine again, by the power case table)."""
        segs = []
        for seg in self.segments:
            if seg.reflect:
                if n % 2:
                    segs.append(seg)
                else:
                    segs.append(PathSegment(seg.t0, seg.t1, Fraction(0), Fraction(0)))
            else:
                segs.append(
                    PathSegment(seg.t0, seg.t1, seg.slope * n, seg.offset * n)
                )
        return O2Path(segs)

    def right_mul_constant(self, a: O2Element) -> "O2Path":
        """The path t |-> self(t) * a."""
        segs = []
        for seg in self.segments:
            if not seg.reflect:
                slope, offset = seg.slope, seg.offset + a.angle.value
            else:
                slope, offset = seg.slope, seg.offset - a.angle.value
            segs.append(PathSegment(seg.t0, seg.t1, slope, offset, seg.reflect != a.reflect))
        return O2Path(segs)

    def reparameterized(self, scale: Rational, shift: Rational) -> "O2Path":
        """The path u |-> self(scale*u + shift), on the u-interval where
        scale*u + shift sweeps [0, 1].  Negative scale reverses orientation."""
        scale, shift = _frac(scale), _frac(shift)
        if scale == 0:
            raise ValueError("scale must be nonzero")
        segs = []
        for seg in self.segments:
            u0, u1 = (seg.t0 - shift) / scale, (seg.t1 - shift) / scale
            if scale < 0:
                u0, u1 = u1, u0
            segs.append(
                PathSegment(u0, u1, seg.slope * scale, seg.offset + seg.slope * shift, seg.reflect)
            )
        if scale < 0:
            segs.reverse()
        return _RawPath(segs)

    def reversed(self) -> "O2Path":
        return O2Path(self.reparameterized(-1, 1).segments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, O2Path):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __repr__(self) -> str:
        pieces = ", ".join(
            f"[{s.t0},{s.t1}]:({s.slope}t+{s.offset}){'A' if s.reflect else ''}"
            for s in self.segments
        )
        return f"O2Path({pieces})"


class _RawPath(O2Path):
    """O2Path whose domain is an arbitrary interval; used mid-construction."""

    def __init__(self, segments: Sequence[PathSegment]):
        self.segments = tuple(segments)


def _merge_segments(segs: Sequence[PathSegment]) -> tuple[PathSegment, ...]:
    merged: list[PathSegment] = []
    for seg in segs:
        if merged:
            last = merged[-1]
            if (
                last.reflect == seg.reflect
                and last.slope == seg.slope
                and last.offset == seg.offset
            ):
                merged[-1] = PathSegment(last.t0, seg.t1, last.slope, last.offset, last.reflect)
                continue
        merged.append(seg)
    return tuple(merged)


def _segment_at(path: O2Path, t0: Fraction, t1: Fraction) -> PathSegment:
    for seg in path.segments:
        if seg.t0 <= t0 and t1 <= seg.t1:
            return PathSegment(t0, t1, seg.slope, seg.offset, seg.reflect)
    raise ValueError(f"no segment covers [{t0}, {t1}]")


def affine_path(slope: Rational, offset: Rational, reflect: bool = False) -> O2Path:
    """The single-segment path t |-> R_{(slope*t + offset)*pi} (*A) on [0, 1]."""
    return O2Path([PathSegment(Fraction(0), Fraction(1), _frac(slope), _frac(offset), reflect)])


def constant_path(elem: O2Element) -> O2Path:
    return affine_path(0, elem.angle.value, elem.reflect)


def concat(first: O2Path, second: O2Path) -> O2Path:
    """Concatenation, first on [0, 1/2] then second on [1/2, 1]."""
    a = first.reparameterized(2, 0)
    b = second.reparameterized(2, -1)
    return O2Path(a.segments + b.segments)


def loop_degree(loop: O2Path) -> Fraction:
    """Winding degree of a closed rotation-valued path.

    Returns sum(slope * (t1 - t0)) / 2 over the segments, exact.  The value
    is an integer Fraction for every genuine loop; the halved normalization
    makes t |-> R_{2t*pi} the degree-1 generator.
    """
    if not loop.in_so2:
        raise NotInSO2Error("path leaves the rotation subgroup")
    if not loop.is_loop:
        raise NotALoopError(f"endpoints differ: {loop.start} vs {loop.end}")
    return sum((seg.angle_change() for seg in loop.segments), Fraction(0)) / 2


class D4Element(enum.Enum):
    """The Klein four-group on labels I, c1, c2, c3 (each ci an involution,
    and the product of two distinct non-identity elements is the third)."""

    I = (0, 0)  # noqa: E741 - the identity label
    C1 = (1, 0)
    C2 = (0, 1)
    C3 = (1, 1)

    def __mul__(self, other: "D4Element") -> "D4Element":
        a, b = self.value, other.value
        return D4Element((a[0] ^ b[0], a[1] ^ b[1]))

    @property
    def sort_index(self) -> int:
        return self.value[0] + 2 * self.value[1]

    def __str__(self) -> str:
        return {0: "I", 1: "c1", 2: "c2", 3: "c3"}[self.sort_index]


def d4_mul(a: D4Element, b: D4Element) -> D4Element:
    return a * b
