from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import (
    TruthTable,
    dependent_set,
    require_total,
    variable_bit,
)
from .objects import (
    Classification,
    Constant,
    Dictator,
    NotExactOneQuery,
    ParityPair,
)


logger = get_logger('characterize')

# коды сужения на (x_i, x_j) в порядке 00, 01, 10, 11
XOR_CODES = frozenset({'0110', '1001'})


def two_variable_code(f: TruthTable, i: int, j: int) -> str:
    '''Таблица сужения f на x_i, x_j при нулевых остальных переменных.'''
    bi, bj = variable_bit(f.n, i), variable_bit(f.n, j)
    return ''.join(
        str(f.value(x)) for x in (0, bj, bi, bi | bj)
    )


def classify(f: TruthTable) -> Classification:
    '''
    Отнести всюду определенную функцию к одному из классов:

    - Constant: нет существенных переменных;
    - Dictator(i, negated): одна существенная переменная;
    - ParityPair(i, j, negated): две переменные, сужение - XOR или XNOR;
    - NotExactOneQuery: две переменные и тип AND_2, либо три и более.

    Raises:
        PartialFunctionError: f частичная
    '''
    require_total(f, 'classify')
    deps = sorted(dependent_set(f))
    t = len(deps)
    if t == 0:
        cl = Constant(value=f.value(0))
    elif t == 1:
        cl = Dictator(i=deps[0], negated=f.value(0))
    elif t == 2:
        i, j = deps
        code = two_variable_code(f, i, j)
        if code in XOR_CODES:
            cl = ParityPair(i=i, j=j, negated=int(code[0]))
        else:
            cl = NotExactOneQuery(reason='and_type_on_two')
    else:
        cl = NotExactOneQuery(reason='depends_on_too_many', t=t)
    logger.debug('%s -> %s', f, cl.kind)
    return cl


def _predicted_value(cl: Classification, n: int, x: int) -> int | None:
    if isinstance(cl, Constant):
        return cl.value
    if isinstance(cl, Dictator):
        return ((x >> (n - cl.i)) & 1) ^ cl.negated
    if isinstance(cl, ParityPair):
        return (((x >> (n - cl.i)) & 1) ^ ((x >> (n - cl.j)) & 1) ^
                cl.negated)
    return None


def classification_matches(cl: Classification, f: TruthTable) -> bool:
    '''
    Проверить, что f действительно имеет вид, описанный cl, на всей своей
    области. Для NotExactOneQuery сравнивается с результатом classify.
    '''
    if isinstance(cl, NotExactOneQuery):
        return classify(f) == cl
    for attr in ('i', 'j'):
        if getattr(cl, attr, 1) > f.n:
            return False
    return all(
        _predicted_value(cl, f.n, x) == f.value(x) for x in f.domain_inputs()
    )
