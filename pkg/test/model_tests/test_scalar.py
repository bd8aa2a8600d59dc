from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from exact1q.kernel.errors import FieldError
from exact1q.models.qsim import (
    ROOT2,
    SQRT2,
    Field,
    abs2,
    coefficients,
    exact_scalar,
    field_sqrt,
    inv_sqrt2,
    qsqrt2,
    sign,
)
from exact1q.models.qsim.scalar import (
    is_real,
    scalar_from_json,
    scalar_to_json,
)


fractions = st.fractions(min_value=-4, max_value=4, max_denominator=8)
elements = st.builds(qsqrt2, fractions, fractions, fractions, fractions)
reals = st.builds(qsqrt2, fractions, fractions)


def same(x, y) -> bool:
    return sympy.expand(x - y) == 0


def test_sqrt2_squared_is_two():
    assert ROOT2 * ROOT2 == 2
    assert coefficients(ROOT2 * ROOT2) == (2, 0, 0, 0)


def test_inverse_sqrt2():
    h = qsqrt2(0, Fraction(1, 2))
    assert same(h * h, Fraction(1, 2))
    assert inv_sqrt2(Field.QSQRT2) == h


def test_complex_unit():
    i = qsqrt2(0, 0, 1)
    assert i * i == -1
    assert sympy.conjugate(i) == -i
    assert abs2(i) == 1


@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert same((a + b) * c, a * c + b * c)
    assert same(a * b, b * a)
    assert same((a - b) + b, a)
    assert same(sympy.conjugate(a * b), sympy.conjugate(a) * sympy.conjugate(b))


@given(reals, reals)
def test_quotient_stays_in_field(a, b):
    assume(b != 0)
    q = qsqrt2(*coefficients(a / b))
    assert same(q * b, a)


@given(elements)
def test_abs2_is_real_and_nonnegative(z):
    m = abs2(z)
    assert is_real(m)
    assert sign(m) >= 0
    assert abs(float(m) - abs(complex(z)) ** 2) < 1e-9


@given(elements)
def test_subtraction_identity_per_amplitude_pair(a):
    # (|a|^2 + |b|^2) - (a* b + b* a) = |a - b|^2
    b = a * qsqrt2(Fraction(1, 3), 1) + qsqrt2(0, 0, 1)
    lhs = (abs2(a) + abs2(b)) - (sympy.conjugate(a) * b + sympy.conjugate(b) * a)
    assert same(lhs, abs2(a - b))
    assert abs2(a - b) <= 2 * (abs2(a) + abs2(b))


@pytest.mark.parametrize('a, b, expected', [
    (3, -2, 1),      # 3 > 2*sqrt2
    (-3, 2, -1),
    (2, -1, 1),
    (1, -1, -1),
    (0, 0, 0),
])
def test_sign_of_real_elements(a, b, expected):
    assert sign(qsqrt2(a, b)) == expected
    approx = a + b * SQRT2
    assert ((approx > 0) - (approx < 0)) == expected


def test_sign_of_complex_is_error():
    with pytest.raises(FieldError):
        sign(qsqrt2(0, 0, 1))


@pytest.mark.parametrize('r, root', [
    (4, qsqrt2(2)),
    (Fraction(1, 4), qsqrt2(Fraction(1, 2))),
    (Fraction(1, 2), qsqrt2(0, Fraction(1, 2))),
    (Fraction(1, 8), qsqrt2(0, Fraction(1, 4))),
])
def test_sqrt(r, root):
    assert same(field_sqrt(r), root)
    assert same(root * root, r)


@pytest.mark.parametrize('r', [3, -1, Fraction(1, 3)])
def test_sqrt_outside_field(r):
    with pytest.raises(FieldError):
        field_sqrt(r)


def test_json_round_trip():
    z = qsqrt2(Fraction(1, 2), -1, 0, Fraction(3, 4))
    data = scalar_to_json(z, Field.QSQRT2)
    assert data == [[1, 2], [-1, 1], [0, 1], [3, 4]]
    assert scalar_from_json(data, Field.QSQRT2) == z


def test_coefficients_reject_other_radicals():
    with pytest.raises(FieldError):
        coefficients(sympy.sqrt(3))
    with pytest.raises(FieldError):
        exact_scalar(1 + sympy.sqrt(6))


def test_rejects_floats():
    with pytest.raises(TypeError):
        qsqrt2(0.5)
    with pytest.raises(TypeError):
        exact_scalar(0.5)
    with pytest.raises(TypeError):
        exact_scalar(sympy.Float(0.5))


def test_equal_scalars_hash_alike():
    assert exact_scalar(1) == 1
    assert len({exact_scalar(1), 1}) == 1
    assert len({qsqrt2(Fraction(1, 2)), sympy.Rational(1, 2)}) == 1
