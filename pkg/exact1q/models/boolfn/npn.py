from functools import lru_cache
import itertools
from typing import Iterator

import numpy as np

from exact1q.kernel.errors import EnumerationLimitError
from .objects import ENUMERATION_MAX_N, Transform, TruthTable
from .truthtable import require_total


@lru_cache(maxsize=4096)
def _index_map(t: Transform) -> tuple[int, ...]:
    '''src[x] = sigma(x ^ input_neg): откуда брать значение для входа x.'''
    return tuple(
        t.permute_input(x ^ t.input_neg) for x in range(1 << t.n)
    )


def _apply_packed(values: int, t: Transform, full: int) -> int:
    out = 0
    for x, src in enumerate(_index_map(t)):
        if (values >> src) & 1:
            out |= 1 << x
    if t.output_neg:
        out ^= full
    return out


def apply_transform(f: TruthTable, t: Transform) -> TruthTable:
    '''g(x) = f(sigma(x XOR input_neg)) XOR output_neg.'''
    require_total(f, 'apply_transform')
    t.check_arity(f.n)
    return TruthTable.total(f.n, _apply_packed(f.values, t, f.full_mask))


def inverse_transform(t: Transform) -> Transform:
    '''
    Обратное преобразование: (perm^-1, sigma(input_neg), output_neg).
    '''
    inverse_perm = [0] * t.n
    for k, target in enumerate(t.perm, start=1):
        inverse_perm[target - 1] = k
    return Transform(
        tuple(inverse_perm), t.permute_input(t.input_neg), t.output_neg
    )


@lru_cache(maxsize=None)
def all_transforms(n: int) -> tuple[Transform, ...]:
    '''Все n! * 2^n * 2 преобразования в фиксированном порядке.'''
    _check_enumeration_limit(n)
    return tuple(
        Transform(perm, mask, out)
        for perm in itertools.permutations(range(1, n + 1))
        for mask in range(1 << n)
        for out in (0, 1)
    )


def random_transform(n: int, rng: np.random.Generator) -> Transform:
    perm = tuple(int(p) + 1 for p in rng.permutation(n))
    return Transform(perm, int(rng.integers(1 << n)), int(rng.integers(2)))


def random_function(n: int, rng: np.random.Generator) -> TruthTable:
    '''Всюду определенная функция с равновероятными значениями.'''
    bits = rng.integers(0, 2, size=1 << n)
    return TruthTable.total(n, sum(1 << x for x, b in enumerate(bits) if b))


def _text_key(values: int, size: int) -> str:
    return ''.join('1' if (values >> x) & 1 else '0' for x in range(size))


def npn_canonical(f: TruthTable) -> tuple[TruthTable, Transform]:
    '''
    Канонический представитель NPN-класса: лексикографически наименьшая
    строка значений по всем преобразованиям. Возвращает также первое
    (в порядке all_transforms) преобразование, которое к ней приводит.
    '''
    require_total(f, 'npn_canonical')
    _check_enumeration_limit(f.n)
    best_key = None
    best = None
    for t in all_transforms(f.n):
        values = _apply_packed(f.values, t, f.full_mask)
        key = _text_key(values, f.size)
        if best_key is None or key < best_key:
            best_key, best = key, (values, t)
    values, witness = best
    return TruthTable.total(f.n, values), witness


def orbit(f: TruthTable) -> frozenset[int]:
    '''Упакованные значения всех функций, изоморфных f.'''
    require_total(f, 'orbit')
    _check_enumeration_limit(f.n)
    return frozenset(
        _apply_packed(f.values, t, f.full_mask) for t in all_transforms(f.n)
    )


def npn_classes(n: int) -> dict[str, int]:
    '''
    Разбиение всех функций от n переменных на NPN-классы.

    Returns:
        словарь: строка канонической таблицы -> размер орбиты,
        в порядке возрастания канонических строк
    '''
    _check_enumeration_limit(n)
    size = 1 << n
    seen: set[int] = set()
    classes: dict[str, int] = {}
    for values in range(1 << size):
        if values in seen:
            continue
        members = orbit(TruthTable.total(n, values))
        seen.update(members)
        canonical = min(_text_key(v, size) for v in members)
        classes[canonical] = len(members)
    return dict(sorted(classes.items()))


def enumerate_all(n: int) -> Iterator[TruthTable]:
    '''Все 2^(2^n) всюду определенных функций по возрастанию values.'''
    _check_enumeration_limit(n)
    full = (1 << (1 << n)) - 1
    for values in range(full + 1):
        yield TruthTable(n, values, full)


def _check_enumeration_limit(n: int) -> None:
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise EnumerationLimitError(
            f'exhaustive enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, '
            f'got n = {n}'
        )
