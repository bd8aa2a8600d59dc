from fractions import Fraction
from functools import lru_cache

from exact1q.kernel.logger import get_logger
from .objects import (
    ConstraintSystem,
    FarkasCertificate,
    FeasibilityResult,
    satisfies,
)


logger = get_logger('constraints.solver')

ZERO = Fraction(0)
ONE = Fraction(1)


class _Phase1Tableau:
    '''
    Симплекс-таблица первой фазы для системы

        A_S beta + a_S = 1            (по строке на каждое S)
        sum beta + s + a_cap = cap
        beta, s, a >= 0

    с целевой функцией w = sum a -> min. Столбцы: beta_1..beta_n, слак s,
    затем искусственные переменные по одной на строку. Последний элемент
    каждой строки - правая часть.

    Строка `cost` хранит приведенные стоимости d_j = c_j - y A_j, ее
    правая часть равна -w.
    '''

    def __init__(self, system: ConstraintSystem):
        n = system.n
        self.n = n
        self.m = len(system.sets)
        self.rows_count = self.m + 1
        self.slack = n
        self.first_artificial = n + 1
        self.width = n + 1 + self.rows_count
        self.rows: list[list[Fraction]] = []
        for r, s in enumerate(system.sets):
            row = [ZERO] * (self.width + 1)
            for i in s.members:
                row[i - 1] = ONE
            row[self.first_artificial + r] = ONE
            row[-1] = ONE
            self.rows.append(row)
        cap_row = [ONE] * n + [ONE] + [ZERO] * self.rows_count + [ZERO]
        cap_row[self.first_artificial + self.m] = ONE
        cap_row[-1] = Fraction(system.cap)
        self.rows.append(cap_row)
        self.basis = [self.first_artificial + r for r in range(self.rows_count)]
        # c = 1 на искусственных, базис - искусственные: d = c - sum строк
        self.cost = [ZERO] * (self.width + 1)
        for j in range(self.first_artificial, self.width):
            self.cost[j] = ONE
        for row in self.rows:
            for j in range(self.width + 1):
                self.cost[j] -= row[j]
        self.pivots = 0

    def _entering(self) -> int | None:
        # правило Бленда: наименьший номер с отрицательной стоимостью
        for j in range(self.width):
            if self.cost[j] < 0:
                return j
        return None

    def _leaving(self, j: int) -> int | None:
        best = None
        for r, row in enumerate(self.rows):
            if row[j] > 0:
                ratio = row[-1] / row[j]
                if (best is None or ratio < best[0] or
                        (ratio == best[0] and self.basis[r] < best[1])):
                    best = (ratio, self.basis[r], r)
        return None if best is None else best[2]

    def _pivot(self, r: int, j: int) -> None:
        pivot_row = self.rows[r]
        piv = pivot_row[j]
        if piv != 1:
            self.rows[r] = pivot_row = [v / piv for v in pivot_row]
        for other in self.rows + [self.cost]:
            if other is pivot_row:
                continue
            factor = other[j]
            if factor:
                for k in range(self.width + 1):
                    if pivot_row[k]:
                        other[k] -= factor * pivot_row[k]
        self.basis[r] = j
        self.pivots += 1

    def solve(self) -> None:
        while True:
            j = self._entering()
            if j is None:
                return
            r = self._leaving(j)
            # w ограничена снизу нулем, неограниченного луча быть не может
            assert r is not None
            self._pivot(r, j)

    @property
    def infeasibility(self) -> Fraction:
        return -self.cost[-1]

    def primal(self) -> tuple[Fraction, ...]:
        beta = [ZERO] * self.n
        for r, var in enumerate(self.basis):
            if var < self.n:
                beta[var] = self.rows[r][-1]
        return tuple(beta)

    def duals(self) -> list[Fraction]:
        '''y_r = c_{a_r} - d_{a_r} = 1 - d_{a_r}.'''
        return [
            ONE - self.cost[self.first_artificial + r]
            for r in range(self.rows_count)
        ]


@lru_cache(maxsize=65536)
def lp_feasible(system: ConstraintSystem) -> FeasibilityResult:
    '''
    Точное решение вопроса о совместности системы.

    Первая фаза симплекс-метода в рациональных числах с правилом Бленда.
    Если минимум w равен нулю, базисное решение дает свидетельство beta.
    Иначе двойственные переменные оптимальной таблицы дают сертификат
    Фаркаша: y_S при равенствах и lam = -y_cap при ограничении сверху.

    Оба ответа перепроверяются подстановкой.
    '''
    tableau = _Phase1Tableau(system)
    tableau.solve()
    w = tableau.infeasibility
    logger.debug('system with %d sets: w = %s after %d pivots',
                 len(system.sets), w, tableau.pivots)
    if w == 0:
        beta = tableau.primal()
        if not satisfies(system, beta):
            raise ArithmeticError(f'witness {beta} does not satisfy the system')
        return FeasibilityResult(
            True, witness=beta, necessary_only=system.partial,
            pivots=tableau.pivots,
        )
    y = tableau.duals()
    certificate = FarkasCertificate(tuple(y[:-1]), -y[-1])
    if not certificate.verify(system):
        raise ArithmeticError('Farkas certificate failed verification')
    return FeasibilityResult(
        False, certificate=certificate, necessary_only=system.partial,
        pivots=tableau.pivots,
    )
