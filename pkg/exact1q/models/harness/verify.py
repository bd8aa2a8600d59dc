import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from exact1q.kernel.errors import EnumerationLimitError
from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import TruthTable, npn_canonical, random_function
from exact1q.models.characterize import (
    Constant,
    Dictator,
    NotExactOneQuery,
    ParityPair,
    classification_matches,
    classify,
    synthesize,
    verify_family,
)
from exact1q.models.constraints import (
    amplitude_beta,
    build_system,
    dependency_shortcut,
    lp_feasible,
    satisfies,
)
from exact1q.models.dtree import decision_tree_depth
from exact1q.models.qsim import amplitude_table
from .objects import (
    EXHAUSTIVE_MAX_N,
    SAMPLE_MAX_N,
    HarnessConfig,
    Mismatch,
    VerificationReport,
)


logger = get_logger('harness')

CHUNKS_PER_JOB = 4
EXPECTED_DEPTH = {'dictator': 1, 'parity_pair': 2}


@dataclass
class _Tally:
    constants: int = 0
    dictators: int = 0
    parities: int = 0
    not_exact: int = 0
    exact_tables: list[int] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    def merge(self, other: '_Tally') -> None:
        self.constants += other.constants
        self.dictators += other.dictators
        self.parities += other.parities
        self.not_exact += other.not_exact
        self.exact_tables.extend(other.exact_tables)
        self.mismatches.extend(other.mismatches)


def check_function(f: TruthTable, tally: _Tally) -> None:
    '''
    Все проверки для одной всюду определенной функции: классификатор,
    совместность системы, граница на число существенных переменных,
    синтез и глубина дерева для точного семейства.
    '''
    text = f.to_text()

    def mismatch(check: str, detail: str) -> None:
        logger.warning('%s: %s failed (%s)', text, check, detail)
        tally.mismatches.append(Mismatch(table=text, check=check, detail=detail))

    cl = classify(f)
    if not classification_matches(cl, f):
        mismatch('classification', f'{cl.kind} does not describe the table')
    if isinstance(cl, Constant):
        tally.constants += 1
        return

    system = build_system(f)
    result = lp_feasible(system)
    if not result.verify(system):
        mismatch('lp_certificate', 'witness or certificate does not re-verify')
    family = isinstance(cl, (Dictator, ParityPair))
    if result.feasible != family:
        mismatch('classifier_vs_lp',
                 f'classify = {cl.kind}, feasible = {result.feasible}')
    if result.feasible and not dependency_shortcut(f):
        mismatch('dependency_bound', 'feasible with more than two variables')

    if isinstance(cl, NotExactOneQuery):
        tally.not_exact += 1
        return
    if isinstance(cl, Dictator):
        tally.dictators += 1
    else:
        tally.parities += 1
    tally.exact_tables.append(f.values)
    if not verify_family(f):
        mismatch('synthesis', 'synthesized circuit is not exact')
    beta = amplitude_beta(amplitude_table(synthesize(cl, f.n)))
    if not satisfies(system, beta):
        mismatch('beta_witness', f'circuit beta {beta} violates the system')
    depth = decision_tree_depth(f)
    if depth != EXPECTED_DEPTH[cl.kind]:
        mismatch('decision_tree_depth',
                 f'D = {depth}, expected {EXPECTED_DEPTH[cl.kind]}')


def _check_chunk(args: tuple[int, list[int]]) -> _Tally:
    n, values = args
    tally = _Tally()
    for v in values:
        check_function(TruthTable.total(n, v), tally)
    logger.debug('chunk of %d functions done', len(values))
    return tally


def _split(items: list[int], parts: int) -> list[list[int]]:
    size = max(1, -(-len(items) // parts))
    return [items[k:k + size] for k in range(0, len(items), size)]


def _function_values(config: HarnessConfig) -> list[int]:
    size = 1 << config.n
    if config.sample is None:
        return list(range(1 << size))
    rng = np.random.default_rng(config.seed)
    return [random_function(config.n, rng).values for _ in range(config.sample)]


def run_harness(config: HarnessConfig) -> VerificationReport:
    '''
    Прогон проверок по всем функциям (или по случайной выборке).

    Работа делится на куски, которые при jobs > 1 обрабатываются пулом
    процессов; результаты сливаются в исходном порядке кусков, так что
    отчет не зависит от jobs.
    '''
    start = time.perf_counter()
    values = _function_values(config)
    logger.info('verifying %d functions of n = %d (%s, jobs = %d)',
                len(values), config.n, config.mode, config.jobs)
    chunks = [(config.n, c) for c in
              _split(values, config.jobs * CHUNKS_PER_JOB)]
    if config.jobs == 1:
        parts = [_check_chunk(c) for c in chunks]
    else:
        with multiprocessing.Pool(config.jobs) as pool:
            parts = pool.map(_check_chunk, chunks)
    tally = _Tally()
    for part in parts:
        tally.merge(part)

    classes = []
    if config.n <= EXHAUSTIVE_MAX_N:
        classes = sorted({
            npn_canonical(TruthTable.total(config.n, v))[0].to_text()
            for v in tally.exact_tables
        })
    report = VerificationReport(
        n=config.n,
        mode=config.mode,
        seed=config.seed,
        total_functions=len(values),
        constants=tally.constants,
        exact_one_query=tally.dictators + tally.parities,
        dictator_count=tally.dictators,
        parity_count=tally.parities,
        not_exact_one_query=tally.not_exact,
        exact_npn_classes=classes,
        mismatches=tally.mismatches,
        wall_time=time.perf_counter() - start,
    )
    logger.info('n = %d: %d exact one-query functions, %d mismatches',
                config.n, report.exact_one_query, len(report.mismatches))
    return report


def verify_theorem(n: int, jobs: int = 1, seed: int = 0,
                   sample: int | None = None) -> VerificationReport:
    '''
    Проверка характеризации точных однозапросных функций для n <= 4
    полным перебором, для 5 <= n <= 6 - на случайной выборке sample функций.

    Raises:
        EnumerationLimitError: n вне допустимого диапазона для режима
    '''
    limit = EXHAUSTIVE_MAX_N if sample is None else SAMPLE_MAX_N
    if not 1 <= n <= limit:
        raise EnumerationLimitError(
            f'verification supports 1 <= n <= {limit} in this mode, got {n}'
        )
    return run_harness(HarnessConfig(n=n, jobs=jobs, seed=seed, sample=sample))
