"""Cocycle validity, pointwise powers, clutching loops, and the two-degree
invariant, with the degree formula checked exactly."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kocom.cocycles import (
    InvalidCocycleError,
    MixedComponentsError,
    TCInvariant,
    broken_cocycle_condition,
    broken_commutation_cocycle,
    bundle_class,
    clutching_function,
    identity_cocycle,
    oriented_invariant,
    power_cocycle,
    so2_cocycle,
    standard_cocycle,
    tc_invariant,
    tc_sum,
    validate,
)
from kocom.o2 import (
    IDENTITY,
    O2Path,
    PathSegment,
    affine_path,
    constant_path,
    loop_degree,
    reflected_rotation,
    rotation,
)


def expected_degree(k: int, n: int) -> int:
    return n * k // 2 if n % 2 == 0 else (n - 1) * k // 2


def test_standard_cocycle_values():
    c0 = standard_cocycle(0)
    assert c0.alpha12.value(Fraction(1, 3)) == IDENTITY
    assert c0.alpha23.value(Fraction(1, 2)) == reflected_rotation(0)
    assert c0.alpha13.value(Fraction(2, 3)) == reflected_rotation(0)
    c1 = standard_cocycle(1)
    assert c1.alpha13.value(1) == reflected_rotation(1)  # R_pi * A, central part
    assert validate(c1).ok
    c2 = standard_cocycle(2)
    assert c2.alpha12.value(1) == IDENTITY  # full turn closes up


def test_validate_standard_family():
    for k in range(-10, 11):
        assert validate(standard_cocycle(k)).ok


def test_validate_identity_cocycle():
    assert validate(identity_cocycle()).ok


def test_validate_failure_fixtures():
    report = validate(broken_commutation_cocycle())
    assert report.cocycle_failures and report.commutation_failures
    assert {f.point for f in report.commutation_failures} == {Fraction(0), Fraction(1)}
    report = validate(broken_cocycle_condition())
    assert report.cocycle_failures and not report.commutation_failures
    assert [f.point for f in report.cocycle_failures] == [Fraction(1)]


def test_power_cocycle_zero_gives_identity():
    assert power_cocycle(standard_cocycle(5), 0) == identity_cocycle()


def test_power_cocycle_square_values():
    sq = power_cocycle(standard_cocycle(3), 2)
    for t in (Fraction(0), Fraction(1, 4), Fraction(1)):
        assert sq.alpha23.value(t) == IDENTITY
        assert sq.alpha13.value(t) == IDENTITY
        assert sq.alpha12.value(t) == rotation(Fraction(6) * t)


@given(st.integers(-4, 4), st.integers(-3, 3), st.integers(-3, 3))
def test_power_composition(k, n, m):
    c = standard_cocycle(k)
    assert power_cocycle(power_cocycle(c, n), m) == power_cocycle(c, n * m)


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_powers_stay_valid(k, n):
    assert validate(power_cocycle(standard_cocycle(k), n)).ok


def test_clutching_standard_is_reflected_loop():
    loop = clutching_function(standard_cocycle(3))
    assert loop.in_reflection_coset
    assert loop.is_loop


def test_clutching_identity_cocycle_is_constant():
    loop = clutching_function(identity_cocycle())
    assert loop.in_so2
    assert loop_degree(loop) == 0


def test_clutching_even_power_lands_in_rotations():
    loop = clutching_function(power_cocycle(standard_cocycle(3), 2))
    assert loop.in_so2
    # upper arc winds 3 full turns, lower arc sits at the identity
    assert loop.value(Fraction(3, 4)) == IDENTITY
    assert loop_degree(loop) == 3


def test_clutching_requires_validity():
    with pytest.raises(InvalidCocycleError):
        clutching_function(broken_commutation_cocycle())


def test_bundle_class_mixed_loop_rejected():
    # a continuous path cannot change components, so only malformed raw
    # segment data can reach this guard
    from kocom.o2 import _RawPath

    mixed = _RawPath(
        [
            PathSegment(Fraction(0), Fraction(1, 2), Fraction(2), Fraction(0)),
            PathSegment(Fraction(1, 2), Fraction(1), Fraction(0), Fraction(1), True),
        ]
    )
    with pytest.raises(MixedComponentsError):
        bundle_class(mixed)


def test_degree_formula_exact():
    for k in range(-6, 7):
        base = standard_cocycle(k)
        for n in range(-6, 7):
            loop = clutching_function(power_cocycle(base, n))
            assert bundle_class(loop) == expected_degree(k, n), (k, n)


def test_standard_clutching_is_nullhomotopic():
    for k in range(-10, 11):
        assert bundle_class(clutching_function(standard_cocycle(k))) == 0


def test_tc_invariant_values():
    for k in range(-6, 7):
        inv = tc_invariant(standard_cocycle(k))
        assert (inv.deg_plus, inv.deg_minus, inv.a2) == (0, -k, k % 2)
    zero = tc_invariant(identity_cocycle())
    assert (zero.deg_plus, zero.deg_minus, zero.a2) == (0, 0, 0)
    assert tc_invariant(standard_cocycle(1)).a2 == 1


def test_so2_cocycle_clutches_prescribed_degree():
    for m in range(-5, 6):
        assert bundle_class(clutching_function(so2_cocycle(m))) == m
        inv = oriented_invariant(m)
        assert (inv.deg_plus, inv.deg_minus, inv.a2) == (m, -m, 0)


@given(st.integers(-5, 5))
def test_so2_inverse_negates_degree(m):
    inv = oriented_invariant(m)
    assert inv.deg_minus == -inv.deg_plus
    assert inv.a2 == 0


def test_tc_sum():
    f_k = tc_invariant(standard_cocycle(4))
    g_m = oriented_invariant(2)
    total = tc_sum(f_k, g_m)
    assert (total.deg_plus, total.deg_minus) == (2, -6)
    zero = TCInvariant(0, 0)
    assert tc_sum(f_k, zero) == f_k


def test_tc_sum_distinctness():
    for m in range(-3, 4):
        seen = {
            (inv.deg_plus, inv.deg_minus)
            for inv in (
                tc_sum(tc_invariant(standard_cocycle(k)), oriented_invariant(m))
                for k in range(-5, 6)
            )
        }
        assert len(seen) == 11
        assert seen == {(m, -k - m) for k in range(-5, 6)}
