"""Commutative O(2) cocycles on the three-set cover of the 2-sphere.

The cover has a left hemisphere and a north-east / south-east pair of
quarter-spheres.  Each pairwise intersection is an arc parameterized by
t in [0, 1]; the two triple points sit at t = 0 and t = 1, and they are
the only points shared by distinct arcs.  A cocycle is a triple of O(2)
paths (alpha12, alpha13, alpha23); it is commutative when its values at
each triple point pairwise commute, and the cocycle condition
alpha12 * alpha23 = alpha13 holds there.

Gluing along such a cocycle produces a plane bundle on the sphere whose
isomorphism class is read off a single clutching loop over the boundary
circle of the left hemisphere: the loop runs alpha12 * alpha23 along the
upper arc and back along alpha13.  Pointwise n-th powers of a cocycle
are again cocycles, and the pair of clutching degrees of a cocycle and
its pointwise inverse is the invariant this module extracts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .o2 import (
    IDENTITY,
    O2Element,
    O2Path,
    affine_path,
    commutes,
    constant_path,
    loop_degree,
    reflected_rotation,
)


class InvalidCocycleError(ValueError):
    """Raised when an operation requires a valid commutative cocycle."""


class MixedComponentsError(ValueError):
    """Raised for loops visiting both components of O(2); no normal form
    for the bundle class is implemented in that case."""


#: Parameter values of the two triple points shared by all three arcs.
TRIPLE_POINTS = (Fraction(0), Fraction(1))

#: The labeled arcs of the cover: boundary-circle halves (1,2) and (1,3),
#: and the equatorial arc (2,3) of the right hemisphere.
ARCS = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class TripleCover:
    """Symbolic record of the fixed cover: three regions, three arcs, two
    triple points.  All geometry is collapsed into the shared parameter;
    in particular the retraction of the north-east region onto the
    equatorial arc is the identity on the parameter."""

    arcs: tuple = ARCS
    triple_points: tuple = TRIPLE_POINTS


COVER = TripleCover()


@dataclass(frozen=True)
class CommCocycle:
    """Transition paths over the three arcs, each parameterized on [0, 1]."""

    alpha12: O2Path
    alpha13: O2Path
    alpha23: O2Path

    def path(self, arc: tuple) -> O2Path:
        return {(1, 2): self.alpha12, (1, 3): self.alpha13, (2, 3): self.alpha23}[arc]


@dataclass(frozen=True)
class CocycleFailure:
    point: Fraction
    product: O2Element  # alpha12 * alpha23 at the point
    alpha13: O2Element


@dataclass(frozen=True)
class CommutationFailure:
    point: Fraction
    arc_a: tuple
    arc_b: tuple
    value_a: O2Element
    value_b: O2Element


@dataclass(frozen=True)
class ValidationReport:
    cocycle_failures: tuple
    commutation_failures: tuple

    @property
    def ok(self) -> bool:
        return not self.cocycle_failures and not self.commutation_failures

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return (
            f"{len(self.cocycle_failures)} cocycle / "
            f"{len(self.commutation_failures)} commutation failures"
        )


def standard_cocycle(k: int) -> CommCocycle:
    """The k-th standard commutative cocycle: alpha12(t) = R_{kt*pi},
    alpha23 constant A, alpha13(t) = R_{kt*pi} * A."""
    return CommCocycle(
        alpha12=affine_path(k, 0),
        alpha13=affine_path(k, 0, reflect=True),
        alpha23=constant_path(reflected_rotation(0)),
    )


def so2_cocycle(m: int) -> CommCocycle:
    """A rotation-valued cocycle clutching the oriented plane bundle of
    Euler number m: all winding lives on the upper arc."""
    return CommCocycle(
        alpha12=affine_path(2 * m, 0),
        alpha13=constant_path(IDENTITY),
        alpha23=constant_path(IDENTITY),
    )


def identity_cocycle() -> CommCocycle:
    return CommCocycle(
        alpha12=constant_path(IDENTITY),
        alpha13=constant_path(IDENTITY),
        alpha23=constant_path(IDENTITY),
    )


def validate(c: CommCocycle) -> ValidationReport:
    """Check the cocycle condition and pairwise commutativity at the two
    triple points.  Distinct arcs meet only there, so those are the only
    points where two transition values are simultaneously defined.
    Failures are returned as data, not raised."""
    cocycle_failures = []
    commutation_failures = []
    for p in TRIPLE_POINTS:
        values = {arc: c.path(arc).value(p) for arc in ARCS}
        product = values[(1, 2)] * values[(2, 3)]
        if product != values[(1, 3)]:
            cocycle_failures.append(CocycleFailure(p, product, values[(1, 3)]))
        for i in range(len(ARCS)):
            for j in range(i + 1, len(ARCS)):
                a, b = ARCS[i], ARCS[j]
                if not commutes(values[a], values[b]):
                    commutation_failures.append(
                        CommutationFailure(p, a, b, values[a], values[b])
                    )
    return ValidationReport(tuple(cocycle_failures), tuple(commutation_failures))


def power_cocycle(c: CommCocycle, n: int) -> CommCocycle:
    """Pointwise n-th power of every transition path (n may be negative;
    n = 0 gives the all-identity cocycle)."""
    return CommCocycle(
        alpha12=c.alpha12.pointwise_pow(n),
        alpha13=c.alpha13.pointwise_pow(n),
        alpha23=c.alpha23.pointwise_pow(n),
    )


def clutching_function(c: CommCocycle) -> O2Path:
    """The clutching loop over the boundary circle of the left hemisphere.

    Counterclockwise, the first half is the upper arc carrying
    alpha12(t) * alpha23(t) for t from 0 to 1 (the retraction onto the
    equatorial arc is the identity on the parameter), and the second half
    is the lower arc carrying alpha13, traversed from t = 1 back to 0.
    Continuity at both junctions is exactly the cocycle condition.
    """
    report = validate(c)
    if not report.ok:
        raise InvalidCocycleError(report.summary())
    upper = c.alpha12.pointwise_mul(c.alpha23)
    first = upper.reparameterized(2, 0)          # u in [0, 1/2], t = 2u
    second = c.alpha13.reparameterized(-2, 2)    # u in [1/2, 1], t = 2 - 2u
    return O2Path(first.segments + second.segments)


def bundle_class(loop: O2Path) -> int:
    """The integer class of the bundle clutched by a closed loop.

    Rotation-valued loops report their winding degree directly.  Loops
    inside the reflection coset are first translated into rotations by a
    constant right multiplication by A, which does not change the clutched
    bundle's isomorphism class.
    """
    if loop.in_so2:
        degree = loop_degree(loop)
    elif loop.in_reflection_coset:
        degree = loop_degree(loop.right_mul_constant(reflected_rotation(0)))
    else:
        raise MixedComponentsError("loop visits both components of O(2)")
    if degree.denominator != 1:
        raise ValueError(f"degree {degree} of a closed loop is not an integer")
    return int(degree)


@dataclass(frozen=True)
class TCInvariant:
    """Clutching degree of a cocycle (deg_plus) and of its pointwise
    inverse (deg_minus); their mod-2 sum detects structures that are
    invisible to the underlying bundle."""

    deg_plus: int
    deg_minus: int

    @property
    def a2(self) -> int:
        return (self.deg_plus + self.deg_minus) % 2

    def __str__(self) -> str:
        return f"(deg+={self.deg_plus}, deg-={self.deg_minus}, a2={self.a2})"


def tc_invariant(c: CommCocycle) -> TCInvariant:
    deg_plus = bundle_class(clutching_function(c))
    deg_minus = bundle_class(clutching_function(power_cocycle(c, -1)))
    return TCInvariant(deg_plus, deg_minus)


def tc_sum(x: TCInvariant, y: TCInvariant) -> TCInvariant:
    """Invariant of the sum of two structures (componentwise addition)."""
    return TCInvariant(x.deg_plus + y.deg_plus, x.deg_minus + y.deg_minus)


def oriented_invariant(m: int) -> TCInvariant:
    """Invariant (m, -m) of the oriented bundle of Euler number m with its
    rotation-valued structure."""
    return tc_invariant(so2_cocycle(m))


def broken_commutation_cocycle() -> CommCocycle:
    """Fixture: the standard k = 1 cocycle with alpha23 replaced by the
    non-central reflection R_{pi/2} * A.  At both triple points the value
    of alpha13 fails to commute with it, and the cocycle condition fails."""
    return CommCocycle(
        alpha12=affine_path(1, 0),
        alpha13=affine_path(1, 0, reflect=True),
        alpha23=constant_path(reflected_rotation(Fraction(1, 2))),
    )


def broken_cocycle_condition() -> CommCocycle:
    """Fixture: alpha13 frozen at the constant A, so the cocycle condition
    fails at t = 1 while every pair of values still commutes."""
    return CommCocycle(
        alpha12=affine_path(1, 0),
        alpha13=constant_path(reflected_rotation(0)),
        alpha23=constant_path(reflected_rotation(0)),
    )
