import sympy

from exact1q.kernel.errors import NotSynthesizableError
from exact1q.models.boolfn import TruthTable
from exact1q.models.qsim import Circuit, Field, Measurement, identity, zeros
from .synthesis import basis_projector


FIELD = Field.QSQRT2
DJ_SIZES = (2, 4)


def promise_table(n: int) -> TruthTable:
    '''
    Частичная функция обещания: 0 на постоянных строках, 1 на
    сбалансированных (вес n/2), остальные входы вне области.
    '''
    _check_size(n)
    full = (1 << n) - 1
    values = domain = 0
    for x in range(1 << n):
        if x in (0, full):
            domain |= 1 << x
        elif bin(x).count('1') * 2 == n:
            domain |= 1 << x
            values |= 1 << x
    return TruthTable(n, values, domain)


def _check_size(n: int) -> None:
    if n not in DJ_SIZES:
        raise NotSynthesizableError(
            f'Deutsch-Jozsa demo needs even n in {DJ_SIZES}, got {n}'
        )


def _hadamard_sign(r: int, c: int) -> int:
    return -1 if bin(r & c).count('1') & 1 else 1


def deutsch_jozsa(n: int) -> tuple[TruthTable, Circuit]:
    '''
    Однозапросный алгоритм Дойча-Йожи как схема с K = 1, d = 2n.

    U_0 = D H / sqrt(2n), где H - матрица Сильвестра, а D меняет знак
    состояний с b = 1. Тогда U_0|psi_0> - равномерная суперпозиция по i
    с регистром (|0> - |1>) / sqrt2, запрос дает фазы (-1)^{x_i},
    U_1 = U_0^T возвращает равномерную компоненту в |psi_0>.
    Исход 0 - проекция на |psi_0>.
    '''
    _check_size(n)
    d = 2 * n
    scale = 1 / sympy.sqrt(2 * n)
    u0 = zeros((d, d), FIELD)
    for r in range(d):
        row_sign = -1 if r & 1 else 1
        for c in range(d):
            u0[r, c] = scale * (row_sign * _hadamard_sign(r, c))
    u1 = u0.T.copy()
    e1 = identity(d, FIELD) - basis_projector(d, 0)
    circuit = Circuit(n, 1, 1, (u0, u1), Measurement(e1, FIELD), FIELD)
    return promise_table(n), circuit
