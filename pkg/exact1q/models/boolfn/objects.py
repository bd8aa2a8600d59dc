from dataclasses import dataclass
from typing import Callable, Iterator

from exact1q.kernel.errors import (
    DimensionMismatchError,
    InvalidTransformError,
    TruthTableFormatError,
)


MAX_N = 16          # предел представления
ENUMERATION_MAX_N = 4  # предел перебора и канонизации


@dataclass(frozen=True)
class TruthTable:
    '''
    Булева функция от n переменных (возможно, частичная).

    Значения упакованы в целые числа: бит с номером idx числа `values`
    равен f(x), где idx = sum(x_i * 2^(n-i)), то есть x_1 - старший бит
    индекса. Бит idx числа `domain` равен 1, если вход x лежит в области
    определения. Значения вне области обнуляются при создании.
    '''
    n: int
    values: int
    domain: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise TruthTableFormatError(
                f'n must be in 1..{MAX_N}, got {self.n}'
            )
        full = (1 << (1 << self.n)) - 1
        if self.values < 0 or self.values > full:
            raise TruthTableFormatError('values do not fit 2^n bits')
        if self.domain < 0 or self.domain > full:
            raise TruthTableFormatError('domain does not fit 2^n bits')
        object.__setattr__(self, 'values', self.values & self.domain)

    @classmethod
    def total(cls, n: int, values: int) -> 'TruthTable':
        return cls(n, values, (1 << (1 << n)) - 1)

    @classmethod
    def from_function(
        cls,
        n: int,
        fn: Callable[[tuple[int, ...]], int]
    ) -> 'TruthTable':
        '''Построить таблицу по функции от кортежа битов (x_1, ..., x_n).'''
        values = 0
        for idx in range(1 << n):
            if fn(input_bits(n, idx)) & 1:
                values |= 1 << idx
        return cls.total(n, values)

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def is_total(self) -> bool:
        return self.domain == self.full_mask

    @property
    def is_empty(self) -> bool:
        return self.domain == 0

    def value(self, x: int) -> int:
        return (self.values >> x) & 1

    def in_domain(self, x: int) -> bool:
        return bool((self.domain >> x) & 1)

    def domain_inputs(self) -> Iterator[int]:
        for x in range(self.size):
            if (self.domain >> x) & 1:
                yield x

    def is_constant_on_domain(self) -> bool:
        return self.values == 0 or self.values == self.domain

    def to_text(self) -> str:
        return ''.join(
            ('1' if self.value(x) else '0') if self.in_domain(x) else '*'
            for x in range(self.size)
        )

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Transform:
    '''
    Преобразование из NPN-группы.

    Действие на функцию: g(x) = f(sigma(x XOR input_neg)) XOR output_neg.
    Сначала инвертируются входы по маске, затем переставляются позиции,
    затем инвертируется выход.

    perm[k-1] - позиция, в которую переходит k-й бит (позиции с единицы).
    input_neg - маска в том же соглашении, что и индекс входа
    (x_1 - старший бит).
    '''
    perm: tuple[int, ...]
    input_neg: int = 0
    output_neg: int = 0

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidTransformError(f'perm is not a bijection: {self.perm}')
        if not 0 <= self.input_neg < (1 << n):
            raise InvalidTransformError('input_neg does not fit n bits')
        if self.output_neg not in (0, 1):
            raise InvalidTransformError('output_neg must be 0 or 1')

    @classmethod
    def identity(cls, n: int) -> 'Transform':
        return cls(tuple(range(1, n + 1)), 0, 0)

    @property
    def n(self) -> int:
        return len(self.perm)

    def permute_input(self, y: int) -> int:
        '''sigma(y): бит позиции k переходит в позицию perm[k-1].'''
        n = self.n
        out = 0
        for k, target in enumerate(self.perm, start=1):
            if (y >> (n - k)) & 1:
                out |= 1 << (n - target)
        return out

    def check_arity(self, n: int) -> None:
        if self.n != n:
            raise DimensionMismatchError(
                f'transform acts on {self.n} variables, table has {n}'
            )


def input_bits(n: int, x: int) -> tuple[int, ...]:
    '''Кортеж (x_1, ..., x_n) для индекса входа x.'''
    return tuple((x >> (n - i)) & 1 for i in range(1, n + 1))


def input_index(bits) -> int:
    '''Индекс входа по битам (x_1, ..., x_n).'''
    idx = 0
    for b in bits:
        idx = (idx << 1) | (int(b) & 1)
    return idx


def variable_bit(n: int, i: int) -> int:
    '''Маска бита переменной x_i внутри индекса входа.'''
    return 1 << (n - i)
