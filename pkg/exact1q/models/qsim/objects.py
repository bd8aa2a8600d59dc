from dataclasses import dataclass, field as dc_field
from typing import Literal

import numpy as np

from exact1q.kernel.errors import (
    DimensionMismatchError,
    InvalidMeasurementError,
    NotUnitaryError,
)
from .scalar import (
    TOLERANCE,
    Field,
    abs2,
    canonical,
    dagger,
    exact_unitary,
    identity,
    matrices_equal,
    to_complex,
    zero,
)


MeasurementKind = Literal['projective', 'povm']


def basis_index(i: int, b: int, k: int, K: int) -> int:
    '''Номер базисного состояния |i, b, k>: ((i-1)*2 + b)*K + k.'''
    return ((i - 1) * 2 + b) * K + k


def is_unitary(m: np.ndarray, field: Field) -> bool:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if field == Field.QSQRT2:
        return exact_unitary(m)
    gram = dagger(m) @ m
    return float(np.linalg.norm(gram - np.eye(m.shape[0]))) <= TOLERANCE


@dataclass(frozen=True, eq=False)
class Measurement:
    '''
    Двухисходное измерение (E0, E1), E0 = I - E1.

    Для kind = 'projective' E1 обязан быть проектором (E1^2 = E1),
    для 'povm' - эрмитовым с собственными числами в [0, 1].
    '''
    e1: np.ndarray
    field: Field
    kind: MeasurementKind = 'projective'
    e0: np.ndarray = dc_field(init=False)

    def __post_init__(self):
        e1 = self.e1
        if e1.ndim != 2 or e1.shape[0] != e1.shape[1]:
            raise InvalidMeasurementError('E1 must be a square matrix')
        if not matrices_equal(e1, dagger(e1), self.field):
            raise InvalidMeasurementError('E1 is not Hermitian')
        if self.kind == 'projective':
            if not matrices_equal(e1 @ e1, e1, self.field):
                raise InvalidMeasurementError('E1 is not a projector')
        elif self.kind == 'povm':
            # E0 = I - E1 >= 0 и E1 >= 0 <=> спектр E1 внутри [0, 1]
            eigenvalues = np.linalg.eigvalsh(to_complex(e1))
            if (eigenvalues.min() < -TOLERANCE or
                    eigenvalues.max() > 1 + TOLERANCE):
                raise InvalidMeasurementError(
                    'E0 and E1 must be positive semidefinite'
                )
        else:
            raise InvalidMeasurementError(f'unknown measurement {self.kind!r}')
        object.__setattr__(
            self, 'e0', identity(e1.shape[0], self.field) - e1
        )

    @property
    def dim(self) -> int:
        return self.e1.shape[0]

    def operator(self, outcome: int) -> np.ndarray:
        if outcome not in (0, 1):
            raise ValueError(f'outcome must be 0 or 1, got {outcome}')
        return self.e1 if outcome else self.e0

    def swapped(self) -> 'Measurement':
        '''То же измерение с переставленными метками исходов.'''
        return Measurement(self.e0, self.field, self.kind)


@dataclass(frozen=True, eq=False)
class Circuit:
    '''
    T-запросный квантовый алгоритм U_T O_x ... O_x U_0 |psi_0> и измерение.

    Размерность пространства d = 2 n K, базис упорядочен по basis_index.
    |psi_0> - базисное состояние с номером 0.
    '''
    n: int
    K: int
    T: int
    unitaries: tuple[np.ndarray, ...]
    measurement: Measurement
    field: Field

    def __post_init__(self):
        if self.n < 1 or self.K < 1 or self.T < 0:
            raise DimensionMismatchError(
                f'bad circuit dimensions n={self.n}, K={self.K}, T={self.T}'
            )
        if len(self.unitaries) != self.T + 1:
            raise DimensionMismatchError(
                f'T = {self.T} needs {self.T + 1} unitaries, '
                f'got {len(self.unitaries)}'
            )
        d = self.dim
        for t, u in enumerate(self.unitaries):
            if u.shape != (d, d):
                raise DimensionMismatchError(
                    f'U_{t} has shape {u.shape}, expected {(d, d)}'
                )
            if not is_unitary(u, self.field):
                raise NotUnitaryError(f'U_{t} is not unitary')
        if self.measurement.dim != d:
            raise DimensionMismatchError(
                f'measurement acts on dimension {self.measurement.dim}, '
                f'expected {d}'
            )
        if self.measurement.field != self.field:
            raise DimensionMismatchError('measurement uses another field')

    @property
    def dim(self) -> int:
        return 2 * self.n * self.K

    def with_measurement(self, measurement: Measurement) -> 'Circuit':
        return Circuit(
            self.n, self.K, self.T, self.unitaries, measurement, self.field
        )


@dataclass(frozen=True)
class AmplitudeTable:
    '''Коэффициенты alpha_{ijk} состояния U_0|psi_0>.'''
    n: int
    K: int
    field: Field
    alpha: dict[tuple[int, int, int], object]

    def __getitem__(self, key: tuple[int, int, int]):
        return self.alpha[key]

    def norm2(self):
        total = zero(self.field)
        for a in self.alpha.values():
            total = total + abs2(a)
        return canonical(total)

    def beta(self, i: int):
        '''sum_k |alpha_{i0k} - alpha_{i1k}|^2.'''
        total = zero(self.field)
        for k in range(self.K):
            total = total + abs2(self.alpha[(i, 0, k)] - self.alpha[(i, 1, k)])
        return canonical(total)

    def mass(self, i: int):
        '''sum_k |alpha_{i0k}|^2 + |alpha_{i1k}|^2.'''
        total = zero(self.field)
        for k in range(self.K):
            total = (total + abs2(self.alpha[(i, 0, k)]) +
                     abs2(self.alpha[(i, 1, k)]))
        return canonical(total)

    def cross(self, i: int):
        '''sum_k conj(alpha_{i0k}) alpha_{i1k} + conj(alpha_{i1k}) alpha_{i0k}.'''
        total = zero(self.field)
        for k in range(self.K):
            a0, a1 = self.alpha[(i, 0, k)], self.alpha[(i, 1, k)]
            total = total + a0.conjugate() * a1 + a1.conjugate() * a0
        return canonical(total)

    def is_normalized(self) -> bool:
        if self.field == Field.QSQRT2:
            return self.norm2() == 1
        return abs(self.norm2() - 1) <= TOLERANCE