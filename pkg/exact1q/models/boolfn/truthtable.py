from functools import lru_cache

from exact1q.kernel.errors import (
    EmptyDomainError,
    PartialFunctionError,
    TruthTableFormatError,
    VariableIndexError,
)
from .objects import MAX_N, TruthTable


ALPHABET = frozenset('01*')


def parse_truth_table(text: str) -> TruthTable:
    '''
    Разобрать таблицу истинности в формате {0,1,*}.

    Символ в позиции idx - значение f на входе с индексом idx
    (x_1 - старший бит), '*' - вход вне области определения.

    Raises:
        TruthTableFormatError: длина не степень двойки, недопустимый
            символ или n > 16
    '''
    text = text.strip()
    length = len(text)
    if length < 2 or length & (length - 1):
        raise TruthTableFormatError(
            f'table length must be a power of two >= 2, got {length}'
        )
    n = length.bit_length() - 1
    if n > MAX_N:
        raise TruthTableFormatError(f'n = {n} exceeds {MAX_N}')
    bad = set(text) - ALPHABET
    if bad:
        raise TruthTableFormatError(
            f'illegal characters {"".join(sorted(bad))!r} in table'
        )
    values = 0
    domain = 0
    for idx, ch in enumerate(text):
        if ch == '*':
            continue
        domain |= 1 << idx
        if ch == '1':
            values |= 1 << idx
    return TruthTable(n, values, domain)


def parse_input(text: str, n: int) -> int:
    '''Разобрать вход x, заданный строкой битов x_1...x_n.'''
    text = text.strip()
    if len(text) != n or set(text) - {'0', '1'}:
        raise TruthTableFormatError(
            f'input must be a string of {n} bits, got {text!r}'
        )
    return int(text, 2)


def format_input(x: int, n: int) -> str:
    return format(x, f'0{n}b')


# ----------------------------------------------------------------------------
# Битовые операции над упакованной таблицей
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _low_half_mask(n: int, p: int) -> int:
    '''Маска позиций idx, у которых бит p индекса равен нулю.'''
    block = (1 << (1 << p)) - 1
    mask = 0
    for start in range(0, 1 << n, 1 << (p + 1)):
        mask |= block << start
    return mask


def flip_index_bit(packed: int, n: int, p: int) -> int:
    '''Переставить записи idx <-> idx ^ 2^p в упакованном векторе.'''
    shift = 1 << p
    low = _low_half_mask(n, p)
    return ((packed & low) << shift) | ((packed >> shift) & low)


def xor_shift(packed: int, n: int, d: int) -> int:
    '''Вектор g с g[idx] = packed[idx ^ d].'''
    p = 0
    while d:
        if d & 1:
            packed = flip_index_bit(packed, n, p)
        d >>= 1
        p += 1
    return packed


def check_variable(f: TruthTable, i: int) -> None:
    if not 1 <= i <= f.n:
        raise VariableIndexError(f'variable index {i} out of range 1..{f.n}')


def require_total(f: TruthTable, what: str) -> None:
    if not f.is_total:
        raise PartialFunctionError(f'{what} is defined for total functions only')


def require_nonempty(f: TruthTable) -> None:
    if f.is_empty:
        raise EmptyDomainError('function has an empty domain')


def depends_on(f: TruthTable, i: int) -> bool:
    '''f зависит от x_i, если найдется x с f(x) != f(x^i).'''
    require_total(f, 'depends_on')
    check_variable(f, i)
    flipped = flip_index_bit(f.values, f.n, f.n - i)
    return (f.values ^ flipped) != 0


def dependent_set(f: TruthTable) -> frozenset[int]:
    require_total(f, 'dependent_set')
    return frozenset(i for i in range(1, f.n + 1) if depends_on(f, i))


def differing_mask(f: TruthTable, d: int) -> int:
    '''
    Позиции x из области, для которых x ^ d тоже в области и f(x) != f(x ^ d).
    '''
    shifted_values = xor_shift(f.values, f.n, d)
    shifted_domain = xor_shift(f.domain, f.n, d)
    return (f.values ^ shifted_values) & f.domain & shifted_domain


def variable_half(n: int, i: int, b: int) -> int:
    '''Маска входов с x_i = b.'''
    half = _low_half_mask(n, n - i)
    if b:
        half = ((1 << (1 << n)) - 1) & ~half
    return half


def restrict(f: TruthTable, i: int, b: int) -> TruthTable:
    '''Сужение области на x_i = b (n не меняется).'''
    check_variable(f, i)
    return TruthTable(f.n, f.values, f.domain & variable_half(f.n, i, b))


def negate_output(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, f.values ^ f.domain, f.domain)
