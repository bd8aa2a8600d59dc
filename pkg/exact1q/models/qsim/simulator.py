from functools import lru_cache

import numpy as np

from exact1q.kernel.errors import DimensionMismatchError, QueryCountError
from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import TruthTable
from .objects import AmplitudeTable, Circuit, Measurement, basis_index
from .scalar import (
    TOLERANCE,
    Field,
    canonical,
    expand_matrix,
    inner,
    real_value,
    zero,
)


logger = get_logger('qsim')


@lru_cache(maxsize=1024)
def oracle_permutation(n: int, K: int, x: int) -> tuple[int, ...]:
    '''
    Перестановка базиса, задающая O_x|i, b, k> = |i, b xor x_i, k>.

    perm[s] - номер состояния, в которое переходит базисное состояние s.
    '''
    perm = [0] * (2 * n * K)
    for i in range(1, n + 1):
        x_i = (x >> (n - i)) & 1
        for b in (0, 1):
            for k in range(K):
                perm[basis_index(i, b, k, K)] = basis_index(i, b ^ x_i, k, K)
    return tuple(perm)


def apply_oracle(state: np.ndarray, n: int, K: int, x: int) -> np.ndarray:
    out = state.copy()
    for s, target in enumerate(oracle_permutation(n, K, x)):
        out[target] = state[s]
    return out


def _check_input(c: Circuit, x: int) -> None:
    if not 0 <= x < (1 << c.n):
        raise DimensionMismatchError(f'input {x} is out of range for n = {c.n}')


def initial_state(c: Circuit) -> np.ndarray:
    '''U_0|psi_0>, то есть нулевой столбец U_0.'''
    return c.unitaries[0][:, 0].copy()


def run_circuit(c: Circuit, x: int) -> np.ndarray:
    '''|psi_x> = U_T O_x ... O_x U_0 |psi_0>.'''
    _check_input(c, x)
    state = initial_state(c)
    for u in c.unitaries[1:]:
        state = expand_matrix(u @ apply_oracle(state, c.n, c.K, x))
    return state


def outcome_probability(state: np.ndarray, measurement: Measurement,
                        outcome: int):
    '''<psi|E_outcome|psi>; точное значение в поле Q(sqrt2).'''
    if state.shape[0] != measurement.dim:
        raise DimensionMismatchError(
            f'state of dimension {state.shape[0]} vs measurement '
            f'of dimension {measurement.dim}'
        )
    op = measurement.operator(outcome)
    return real_value(inner(state, op @ state, measurement.field),
                      measurement.field)


def _check_arity(c: Circuit, f: TruthTable) -> None:
    if c.n != f.n:
        raise DimensionMismatchError(
            f'circuit works with n = {c.n}, function with n = {f.n}'
        )


def success_probabilities(c: Circuit, f: TruthTable) -> list[tuple]:
    '''Строки (x, f(x), p0, p1) для всех x из области f.'''
    _check_arity(c, f)
    rows = []
    for x in f.domain_inputs():
        state = run_circuit(c, x)
        rows.append((
            x,
            f.value(x),
            outcome_probability(state, c.measurement, 0),
            outcome_probability(state, c.measurement, 1),
        ))
    return rows


def _is_one(p, field: Field) -> bool:
    if field == Field.QSQRT2:
        return p == 1
    return p >= 1 - TOLERANCE


def is_exact(c: Circuit, f: TruthTable) -> bool:
    '''
    P[r(x) = f(x)] = 1 для всех x из области f. В поле Q(sqrt2) проверка
    точная, в поле float - с допуском TOLERANCE.
    '''
    _check_arity(c, f)
    for x in f.domain_inputs():
        p = outcome_probability(run_circuit(c, x), c.measurement, f.value(x))
        if not _is_one(p, c.field):
            logger.debug('input %d: P[correct] = %s', x, p)
            return False
    return True


def max_error(c: Circuit, f: TruthTable):
    '''max по области f величины 1 - P[r(x) = f(x)].'''
    _check_arity(c, f)
    worst = real_value(zero(c.field), c.field)
    for x in f.domain_inputs():
        p = outcome_probability(run_circuit(c, x), c.measurement, f.value(x))
        err = 1 - p
        if err > worst:
            worst = err
    return worst


def computes_with_bounded_error(c: Circuit, f: TruthTable,
                                epsilon: float) -> bool:
    '''P[r(x) = f(x)] >= 1 - epsilon для всех x, epsilon < 1/2.'''
    if not 0 <= epsilon < 0.5:
        raise ValueError(f'epsilon must lie in [0, 1/2), got {epsilon}')
    return float(max_error(c, f)) <= epsilon + TOLERANCE


def amplitude_table(c: Circuit) -> AmplitudeTable:
    state = initial_state(c)
    alpha = {
        (i, j, k): state[basis_index(i, j, k, c.K)]
        for i in range(1, c.n + 1)
        for j in (0, 1)
        for k in range(c.K)
    }
    return AmplitudeTable(c.n, c.K, c.field, alpha)


def differing_bits(n: int, x: int, y: int) -> list[int]:
    '''S = {i | x_i != y_i}.'''
    d = x ^ y
    return [i for i in range(1, n + 1) if (d >> (n - i)) & 1]


def _require_one_query(c: Circuit) -> None:
    if c.T != 1:
        raise QueryCountError(f'one-query circuit expected, got T = {c.T}')


def lemma1_sum(c: Circuit, x: int, y: int):
    '''sum_{i in S} sum_k |alpha_{i0k} - alpha_{i1k}|^2.'''
    _require_one_query(c)
    _check_input(c, x)
    _check_input(c, y)
    table = amplitude_table(c)
    total = zero(c.field)
    for i in differing_bits(c.n, x, y):
        total = total + table.beta(i)
    return real_value(total, c.field)


def phi_inner_product(c: Circuit, x: int, y: int):
    '''<phi_x|phi_y>, где |phi_x> = O_x U_0 |psi_0>.'''
    _require_one_query(c)
    _check_input(c, x)
    _check_input(c, y)
    start = initial_state(c)
    phi_x = apply_oracle(start, c.n, c.K, x)
    phi_y = apply_oracle(start, c.n, c.K, y)
    return inner(phi_x, phi_y, c.field)


def phi_inner_product_closed_form(table: AmplitudeTable, x: int, y: int):
    '''
    Развернутая форма <phi_x|phi_y>: вне S суммируются массы,
    внутри S - перекрестные слагаемые.
    '''
    differing = set(differing_bits(table.n, x, y))
    total = zero(table.field)
    for i in range(1, table.n + 1):
        total = total + (table.cross(i) if i in differing else table.mass(i))
    return canonical(total)


# ----------------------------------------------------------------------------
# Случайные схемы (поле float)
# ----------------------------------------------------------------------------

def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    '''Унитарная матрица из QR-разложения комплексной гауссовской.'''
    z = (rng.standard_normal((d, d)) +
         1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_circuit(n: int, K: int, T: int,
                   rng: np.random.Generator) -> Circuit:
    '''Случайная схема над полем float с проективным измерением ранга d/2.'''
    d = 2 * n * K
    unitaries = tuple(random_unitary(d, rng) for _ in range(T + 1))
    basis = random_unitary(d, rng)[:, : d // 2]
    e1 = basis @ basis.conj().T
    e1 = (e1 + e1.conj().T) / 2
    return Circuit(
        n, K, T, unitaries, Measurement(e1, Field.FLOAT, 'povm'), Field.FLOAT
    )
