import click
from tabulate import tabulate

from exact1q.models.boolfn import TruthTable
from .objects import VerificationReport


def print_report(report: VerificationReport, timing: bool = False) -> None:
    '''Сводка прогона и таблица расхождений, если они есть.'''
    click.echo(f'Verification of n = {report.n} ({report.mode}, '
               f'seed = {report.seed})\n')
    rows = [
        ('total functions', report.total_functions),
        ('constants', report.constants),
        ('dictators', report.dictator_count),
        ('parity pairs', report.parity_count),
        ('exact one-query', report.exact_one_query),
        ('not exact one-query', report.not_exact_one_query),
        ('mismatches', len(report.mismatches)),
    ]
    if timing and report.wall_time is not None:
        rows.append(('wall time, s', f'{report.wall_time:.3f}'))
    click.echo(tabulate(rows, tablefmt='pretty'))
    if report.exact_npn_classes:
        click.echo('\nExact one-query NPN classes: ' +
                   ', '.join(report.exact_npn_classes))
    if report.mismatches:
        click.echo('\nMismatches:\n')
        click.echo(tabulate(
            [(m.table, m.check, m.detail) for m in report.mismatches],
            headers=('table', 'check', 'detail'),
            tablefmt='pretty',
        ))


def print_corpus(corpus: dict[str, TruthTable]) -> None:
    click.echo(tabulate(
        [(name, f.n, f.to_text()) for name, f in corpus.items()],
        headers=('name', 'n', 'table'),
        tablefmt='pretty',
    ))
