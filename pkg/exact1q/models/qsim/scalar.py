from enum import Enum
from fractions import Fraction
from numbers import Integral
from typing import Union

import numpy as np
import sympy

from exact1q.kernel.errors import FieldError


TOLERANCE = 1e-9  # общий допуск для поля float
SQRT2 = 2 ** 0.5
ROOT2 = sympy.sqrt(2)


class Field(str, Enum):
    FLOAT = 'float'
    QSQRT2 = 'qsqrt2'


# ----------------------------------------------------------------------------
# Точные скаляры
#
# Элементы поля Q(sqrt2)(i) - выражения sympy. После expand каждый элемент
# записывается однозначно как a + b*sqrt(2) + I*(c + d*sqrt(2)), поэтому
# точное равенство - это == над раскрытыми выражениями.
# ----------------------------------------------------------------------------

def _rational(value) -> sympy.Rational:
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, Integral):
        return sympy.Integer(int(value))
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    raise TypeError(f'expected an exact rational, got {type(value).__name__}')


def qsqrt2(a=0, b=0, c=0, d=0) -> sympy.Expr:
    '''Элемент (a + b*sqrt2) + (c + d*sqrt2)*i по рациональным a, b, c, d.'''
    a, b, c, d = (_rational(x) for x in (a, b, c, d))
    return sympy.expand(a + b * ROOT2 + sympy.I * (c + d * ROOT2))


def is_exact_scalar(z) -> bool:
    return isinstance(z, sympy.Basic)


def canonical(z):
    '''Точное значение в раскрытом виде; числа float не меняются.'''
    if is_exact_scalar(z):
        return sympy.expand(z)
    return z


def coefficients(z) -> tuple[sympy.Rational, ...]:
    '''
    Рациональные (a, b, c, d) элемента (a + b*sqrt2) + (c + d*sqrt2)*i.

    Raises:
        FieldError: выражение не лежит в Q(sqrt2)(i)
    '''
    z = sympy.expand(sympy.radsimp(sympy.sympify(z)))
    result = []
    for part in z.as_real_imag():
        part = sympy.expand(part)
        b = part.coeff(ROOT2)
        a = sympy.expand(part - b * ROOT2)
        if not (a.is_Rational and b.is_Rational):
            raise FieldError(f'{z} does not lie in Q(sqrt2)')
        result.extend((a, b))
    return tuple(result)


def exact_scalar(value) -> sympy.Expr:
    '''
    Привести число к элементу поля Q(sqrt2)(i).

    Raises:
        TypeError: float и complex не бывают точными
        FieldError: выражение sympy вне поля
    '''
    if isinstance(value, (float, complex)):
        raise TypeError(f'expected an exact value, got {type(value).__name__}')
    if isinstance(value, Fraction):
        return _rational(value)
    z = sympy.expand(sympy.sympify(value))
    if z.has(sympy.Float):
        raise TypeError(f'expected an exact value, got {z}')
    coefficients(z)
    return z


def is_real(z) -> bool:
    _, _, c, d = coefficients(z)
    return c == 0 and d == 0


def sign(z) -> int:
    '''Знак вещественного элемента a + b*sqrt2.'''
    if not is_real(z):
        raise FieldError('sign of a non-real element')
    return int(sympy.sign(sympy.expand(z)))


def field_sqrt(r) -> sympy.Expr:
    '''
    Квадратный корень из неотрицательного рационального r, если он лежит
    в поле: r = (p/q)^2 или r = (p/q)^2 / 2.
    '''
    r = sympy.expand(sympy.sympify(r))
    if not r.is_Rational or r < 0:
        raise FieldError(f'sqrt({r}) is not supported in Q(sqrt2)')
    root = sympy.sqrt(r)
    try:
        coefficients(root)
    except FieldError:
        raise FieldError(f'sqrt({r}) does not lie in Q(sqrt2)') from None
    return root


Scalar = Union[sympy.Expr, complex]


# ----------------------------------------------------------------------------
# Общие операции над матрицами в обоих полях
#
# Точные матрицы хранятся как object-массивы numpy с элементами sympy,
# проверки равенства идут через sympy.Matrix.
# ----------------------------------------------------------------------------

def zero(field: Field):
    return sympy.S.Zero if field == Field.QSQRT2 else 0j


def one(field: Field):
    return sympy.S.One if field == Field.QSQRT2 else 1 + 0j


def inv_sqrt2(field: Field):
    return 1 / ROOT2 if field == Field.QSQRT2 else 1 / SQRT2


def as_matrix(rows, field: Field) -> np.ndarray:
    '''Матрица (или вектор) над полем: object-массив sympy или complex128.'''
    if field == Field.QSQRT2:
        return np.vectorize(exact_scalar, otypes=[object])(
            np.array(rows, dtype=object)
        )
    return np.asarray(rows, dtype=complex)


def zeros(shape, field: Field) -> np.ndarray:
    if field == Field.QSQRT2:
        return np.full(shape, sympy.S.Zero, dtype=object)
    return np.zeros(shape, dtype=complex)


def identity(d: int, field: Field) -> np.ndarray:
    m = zeros((d, d), field)
    for k in range(d):
        m[k, k] = one(field)
    return m


def expand_matrix(m: np.ndarray) -> np.ndarray:
    '''Раскрыть элементы точной матрицы после умножения.'''
    if m.dtype == object:
        return np.vectorize(sympy.expand, otypes=[object])(m)
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conjugate(m).T


def inner(u: np.ndarray, v: np.ndarray, field: Field):
    '''<u|v> = sum conj(u_k) v_k.'''
    if field == Field.QSQRT2:
        return sympy.expand(
            sympy.Add(*(sympy.conjugate(x) * y for x, y in zip(u, v)))
        )
    return complex(np.vdot(u, v))


def abs2(z):
    if is_exact_scalar(z):
        return sympy.expand(z * sympy.conjugate(z))
    return abs(z) ** 2


def _exact(m: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(m.tolist())


def is_zero_matrix(m: np.ndarray, field: Field) -> bool:
    if field == Field.QSQRT2:
        return _exact(m).expand().is_zero_matrix is True
    return float(np.linalg.norm(m)) <= TOLERANCE


def matrices_equal(a: np.ndarray, b: np.ndarray, field: Field) -> bool:
    if a.shape != b.shape:
        return False
    return is_zero_matrix(a - b, field)


def exact_unitary(m: np.ndarray) -> bool:
    '''U^H U = I точно.'''
    u = _exact(m)
    return (u.H * u - sympy.eye(u.rows)).expand().is_zero_matrix is True


def to_complex(m: np.ndarray) -> np.ndarray:
    '''Приближение матрицы над любым полем матрицей complex128.'''
    if m.dtype == object:
        return np.vectorize(complex, otypes=[complex])(m)
    return np.asarray(m, dtype=complex)


def real_value(z, field: Field):
    '''Вещественная часть: точная для Q(sqrt2), float для поля float.'''
    if field == Field.QSQRT2:
        return sympy.expand(sympy.re(z))
    return float(np.real(z))


def scalar_to_json(z, field: Field):
    if field == Field.QSQRT2:
        return [[int(x.p), int(x.q)] for x in coefficients(z)]
    z = complex(z)
    return [z.real, z.imag]


def scalar_from_json(data, field: Field):
    if field == Field.QSQRT2:
        if len(data) != 4:
            raise ValueError('Q(sqrt2) scalar needs four [num, den] pairs')
        return qsqrt2(*(sympy.Rational(int(num), int(den)) for num, den in data))
    re, im = data
    return complex(float(re), float(im))
