import numpy as np
import sympy

from exact1q.kernel.errors import NotSynthesizableError, VariableIndexError
from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import TruthTable, require_total
from exact1q.models.dtree import decision_tree_depth
from exact1q.models.qsim import (
    Circuit,
    Field,
    Measurement,
    basis_index,
    expand_matrix,
    identity,
    is_exact,
    zeros,
)
from .classify import classify
from .objects import Classification, Dictator, ParityPair, Separation


logger = get_logger('characterize.synthesis')

FIELD = Field.QSQRT2
HALF = sympy.Rational(1, 2)

# Столбцы блока на координатах (i0, i1, j0, j1): первые два - образы
# состояний четной и нечетной четности после запроса.
_PARITY_BLOCK = (
    (1, -1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, 1, 1),
    (1, 1, -1, -1),
)


def swap_matrix(d: int, a: int, b: int) -> np.ndarray:
    m = identity(d, FIELD)
    if a != b:
        m[a, a] = m[b, b] = sympy.S.Zero
        m[a, b] = m[b, a] = sympy.S.One
    return m


def parity_block(d: int, coords: tuple[int, int, int, int]) -> np.ndarray:
    '''Единичная матрица, в которой на coords вписан вещественный блок 4x4.'''
    m = identity(d, FIELD)
    for col, vector in zip(coords, _PARITY_BLOCK):
        for row, sign in zip(coords, vector):
            m[row, col] = sign * HALF
    return m


def b_projector(n: int) -> np.ndarray:
    '''Проектор на состояния |i, 1, 0> (K = 1).'''
    d = 2 * n
    m = zeros((d, d), FIELD)
    for i in range(1, n + 1):
        s = basis_index(i, 1, 0, 1)
        m[s, s] = sympy.S.One
    return m


def basis_projector(d: int, s: int) -> np.ndarray:
    m = zeros((d, d), FIELD)
    m[s, s] = sympy.S.One
    return m


def _check_indices(cl: Classification, n: int) -> None:
    for i in (cl.i, getattr(cl, 'j', cl.i)):
        if not 1 <= i <= n:
            raise VariableIndexError(f'variable {i} out of range 1..{n}')


def _dictator_circuit(cl: Dictator, n: int) -> Circuit:
    # U_0|psi_0> = |i, 0>, запрос записывает x_i в b, измеряется b
    d = 2 * n
    u0 = swap_matrix(d, 0, basis_index(cl.i, 0, 0, 1))
    measurement = Measurement(b_projector(n), FIELD)
    if cl.negated:
        measurement = measurement.swapped()
    return Circuit(n, 1, 1, (u0, identity(d, FIELD)), measurement, FIELD)


def _parity_circuit(cl: ParityPair, n: int) -> Circuit:
    d = 2 * n
    i0, i1 = basis_index(cl.i, 0, 0, 1), basis_index(cl.i, 1, 0, 1)
    j0, j1 = basis_index(cl.j, 0, 0, 1), basis_index(cl.j, 1, 0, 1)
    block = parity_block(d, (i0, i1, j0, j1))
    # U_0|psi_0> = (|i,0> - |i,1> + |j,0> - |j,1>) / 2; после запроса
    # состояние равно +-первому столбцу блока при x_i = x_j и +-второму
    # иначе, U_1 = block^T переводит их в |i,0> и |i,1>
    u0 = expand_matrix(block @ swap_matrix(d, 0, i0))
    u1 = block.T.copy()
    measurement = Measurement(basis_projector(d, i1), FIELD)
    if cl.negated:
        measurement = measurement.swapped()
    return Circuit(n, 1, 1, (u0, u1), measurement, FIELD)


def synthesize(cl: Classification, n: int) -> Circuit:
    '''
    Однозапросная схема (T = 1, K = 1) над полем Q(sqrt2), точно
    вычисляющая функцию класса cl.

    Raises:
        NotSynthesizableError: cl не Dictator и не ParityPair
        VariableIndexError: номер переменной больше n
    '''
    if isinstance(cl, Dictator):
        _check_indices(cl, n)
        return _dictator_circuit(cl, n)
    if isinstance(cl, ParityPair):
        _check_indices(cl, n)
        return _parity_circuit(cl, n)
    raise NotSynthesizableError(
        f'no one-query circuit for classification {cl.kind!r}'
    )


def verify_family(f: TruthTable) -> bool:
    '''Функция из точного семейства и синтезированная схема точна на f.'''
    require_total(f, 'verify_family')
    cl = classify(f)
    if not isinstance(cl, (Dictator, ParityPair)):
        return False
    ok = is_exact(synthesize(cl, f.n), f)
    if not ok:
        logger.warning('synthesized circuit is not exact for %s', f)
    return ok


def separation(f: TruthTable) -> Separation:
    '''
    D(f) против одного квантового запроса для функций точного семейства:
    1 против 1 у диктатора, 2 против 1 у пары четности.
    '''
    cl = classify(f)
    if not isinstance(cl, (Dictator, ParityPair)):
        raise NotSynthesizableError(
            f'{f} is not computable exactly with one query'
        )
    return Separation(decision_tree_depth=decision_tree_depth(f),
                      quantum_queries=1)
