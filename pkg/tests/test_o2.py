"""Exact O(2) arithmetic against an independent floating-point matrix model,
plus path and winding-degree behavior."""

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kocom.o2 import (
    IDENTITY,
    REFLECTION,
    Angle,
    D4Element,
    NotALoopError,
    NotInSO2Error,
    O2Element,
    O2Path,
    PathSegment,
    affine_path,
    commutes,
    concat,
    constant_path,
    d4_mul,
    loop_degree,
    o2_mul,
    o2_pow,
    reflected_rotation,
    rotation,
)

# -- independent 2x2 matrix oracle ------------------------------------------


def as_matrix(e: O2Element):
    a = float(e.angle.value) * math.pi
    c, s = math.cos(a), math.sin(a)
    m = ((c, -s), (s, c))
    if e.reflect:
        m = matmul(m, ((1.0, 0.0), (0.0, -1.0)))
    return m


def matmul(m, n):
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def matdist(m, n):
    return max(abs(m[i][j] - n[i][j]) for i in range(2) for j in range(2))


rational_angles = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=24
)
elements = st.builds(O2Element, st.builds(Angle, rational_angles), st.booleans())


def test_angle_normalization():
    assert Angle(Fraction(5, 2)).value == Fraction(1, 2)
    assert Angle(Fraction(-1, 3)).value == Fraction(5, 3)
    assert Angle(Fraction(2)).value == 0


def test_multiplication_table_cases():
    # A * A = I
    assert REFLECTION * REFLECTION == IDENTITY
    # conjugating a rotation by the reflection inverts it: for angle pi/3,
    # A R A = R_{-pi/3} = R_{5pi/3}
    third = rotation(Fraction(1, 3))
    assert REFLECTION * third * REFLECTION == rotation(Fraction(5, 3))
    assert rotation(Fraction(1, 2)) * rotation(Fraction(1, 2)) == rotation(1)


def test_powers_of_reflected_elements():
    g = reflected_rotation(Fraction(2, 7))
    assert o2_pow(g, 2) == IDENTITY
    assert o2_pow(g, 3) == g
    assert o2_pow(g, -1) == g
    assert o2_pow(g, -4) == IDENTITY
    assert o2_pow(g, 0) == IDENTITY
    assert o2_pow(rotation(Fraction(1, 3)), 0) == IDENTITY


def test_power_additivity_small_range():
    samples = [
        rotation(Fraction(2, 5)),
        reflected_rotation(Fraction(1, 6)),
        rotation(Fraction(7, 4)),
    ]
    for a in samples:
        for n in range(-6, 7):
            for m in range(-6, 7):
                assert o2_pow(a, n) * o2_pow(a, m) == o2_pow(a, n + m)


def test_commutes_examples():
    assert commutes(rotation(Fraction(1, 3)), rotation(Fraction(4, 7)))
    assert commutes(rotation(1), REFLECTION)  # R_pi is central
    assert not commutes(rotation(Fraction(1, 2)), REFLECTION)


def test_commutes_against_matrix_oracle():
    rng = random.Random(20240811)
    for _ in range(1000):
        a = O2Element(
            Angle(Fraction(rng.randrange(-200, 200), rng.randrange(1, 50))),
            rng.random() < 0.5,
        )
        b = O2Element(
            Angle(Fraction(rng.randrange(-200, 200), rng.randrange(1, 50))),
            rng.random() < 0.5,
        )
        ma, mb = as_matrix(a), as_matrix(b)
        numeric = matdist(matmul(ma, mb), matmul(mb, ma)) < 1e-9
        assert commutes(a, b) == numeric, (a, b)


def test_associativity_exhaustive_grid():
    grid = [
        O2Element(Angle(Fraction(num, 4)), ref)
        for num in range(8)
        for ref in (False, True)
    ]
    for a, b, c in itertools.product(grid, repeat=3):
        assert (a * b) * c == a * (b * c)


@given(elements, elements)
def test_product_matches_matrix_oracle(a, b):
    assert matdist(as_matrix(a * b), matmul(as_matrix(a), as_matrix(b))) < 1e-9


@given(elements)
def test_inverse(a):
    assert a * a.inverse() == IDENTITY
    assert a.inverse() * a == IDENTITY


def test_path_validation():
    with pytest.raises(ValueError):
        O2Path([PathSegment(Fraction(0), Fraction(1, 2), Fraction(1), Fraction(0))])
    with pytest.raises(ValueError):
        # discontinuous at the junction
        O2Path(
            [
                PathSegment(Fraction(0), Fraction(1, 2), Fraction(1), Fraction(0)),
                PathSegment(Fraction(1, 2), Fraction(1), Fraction(1), Fraction(1)),
            ]
        )


def test_loop_degree_generator_convention():
    # t |-> R_{2t*pi} is the degree-1 generator
    assert loop_degree(affine_path(2, 0)) == 1
    assert loop_degree(constant_path(IDENTITY)) == 0
    # four half-turns wind twice
    assert loop_degree(affine_path(4, 0)) == 2


def test_loop_degree_rejects_open_and_reflected_paths():
    with pytest.raises(NotALoopError):
        loop_degree(affine_path(1, 0))
    with pytest.raises(NotInSO2Error):
        loop_degree(affine_path(2, 0, reflect=True))


def test_loop_degree_concat_and_reversal():
    loops = [affine_path(2, 0), affine_path(-4, 0), constant_path(IDENTITY)]
    for p in loops:
        assert loop_degree(p.reversed()) == -loop_degree(p)
        for q in loops:
            assert loop_degree(concat(p, q)) == loop_degree(p) + loop_degree(q)


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_loop_degree_additive_on_generators(m, n):
    p, q = affine_path(2 * m, 0), affine_path(2 * n, 0)
    assert loop_degree(concat(p, q)) == m + n


def test_pointwise_mul_matches_values():
    p = affine_path(3, Fraction(1, 2), reflect=True)
    q = affine_path(-2, Fraction(1, 3))
    prod = p.pointwise_mul(q)
    for t in (Fraction(0), Fraction(1, 4), Fraction(2, 3), Fraction(1)):
        assert prod.value(t) == p.value(t) * q.value(t)


def test_pointwise_pow_matches_values():
    p = O2Path(
        [
            PathSegment(Fraction(0), Fraction(1, 2), Fraction(1), Fraction(0)),
            PathSegment(Fraction(1, 2), Fraction(1), Fraction(-1), Fraction(1)),
        ]
    )
    for n in (-3, -1, 0, 2, 5):
        q = p.pointwise_pow(n)
        for t in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)):
            assert q.value(t) == o2_pow(p.value(t), n)


def test_right_mul_constant():
    p = affine_path(1, 0, reflect=True)
    q = p.right_mul_constant(REFLECTION)
    assert q.in_so2
    for t in (Fraction(0), Fraction(1, 2), Fraction(1)):
        assert q.value(t) == p.value(t) * REFLECTION


def test_d4_multiplication():
    assert d4_mul(D4Element.C1, D4Element.C2) == D4Element.C3
    assert d4_mul(D4Element.C1, D4Element.C3) == D4Element.C2
    assert d4_mul(D4Element.C2, D4Element.C3) == D4Element.C1
    assert d4_mul(D4Element.C1, D4Element.C1) == D4Element.I
    assert d4_mul(D4Element.I, D4Element.C2) == D4Element.C2
    for a, b in itertools.product(D4Element, repeat=2):
        assert d4_mul(a, b) == d4_mul(b, a)
