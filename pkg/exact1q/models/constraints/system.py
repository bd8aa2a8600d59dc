from exact1q.kernel.errors import ConstantFunctionError
from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import (
    TruthTable,
    dependent_set,
    differing_mask,
    require_nonempty,
    require_total,
)
from exact1q.models.qsim import AmplitudeTable
from exact1q.models.qsim.scalar import real_value
from .objects import CAP, ConstraintSystem, DistinguishingSet


logger = get_logger('constraints')


def distinguishing_sets(f: TruthTable) -> frozenset[DistinguishingSet]:
    '''
    Все множества S(x, y) = {i | x_i != y_i} для пар x, y из области f
    с f(x) != f(y).

    Перебираются маски различий d = x ^ y, а не пары: для каждой d одна
    битовая операция над упакованной таблицей отвечает, есть ли пара
    с такой маской. Для функции, постоянной на области, результат пуст.
    '''
    return frozenset(
        DistinguishingSet.from_mask(f.n, d)
        for d in range(1, f.size)
        if differing_mask(f, d)
    )


def build_system(f: TruthTable) -> ConstraintSystem:
    '''
    Система ограничений на beta_i, необходимая для точного однозапросного
    вычисления f.

    Raises:
        EmptyDomainError: пустая область
        ConstantFunctionError: f постоянна на области (ноль запросов)
    '''
    require_nonempty(f)
    if f.is_constant_on_domain():
        raise ConstantFunctionError(
            f'{f} is constant on its domain: zero queries suffice'
        )
    sets = distinguishing_sets(f)
    logger.debug('%s: %d distinguishing sets', f, len(sets))
    return ConstraintSystem(f.n, tuple(sets), CAP, partial=not f.is_total)


def dependency_shortcut(f: TruthTable) -> bool:
    '''
    False, если f зависит больше чем от двух переменных (система заведомо
    несовместна), иначе True (ответ не определен).
    '''
    require_total(f, 'dependency_shortcut')
    return len(dependent_set(f)) <= 2


def amplitude_beta(table: AmplitudeTable) -> tuple:
    '''
    Вектор beta_i = sum_k |alpha_{i0k} - alpha_{i1k}|^2 по таблице амплитуд.

    В поле Q(sqrt2) компоненты точные (вещественные элементы поля),
    в поле float - числа float.
    '''
    return tuple(
        real_value(table.beta(i), table.field) for i in range(1, table.n + 1)
    )
