import click
from tabulate import tabulate

from exact1q.kernel.errors import Exact1qError
from exact1q.models.characterize import classify
from exact1q.models.harness.params import (
    TABLE,
    emit_json,
    json_option,
    usage_error,
)
from .npn import npn_canonical, npn_classes
from .objects import TruthTable
from .truthtable import parse_truth_table


DEFAULT_NPN_N = 3


def _kind(text: str) -> str:
    return classify(parse_truth_table(text)).kind


@click.command('npn')
@click.option('-n', 'n', type=int, default=DEFAULT_NPN_N, show_default=True,
              help='Число переменных (1..4)')
@json_option
def npn(n: int, as_json: bool):
    '''NPN-классы функций от n переменных с их классификацией.'''
    try:
        classes = npn_classes(n)
    except Exact1qError as e:
        raise usage_error(e) from e
    rows = [(text, size, _kind(text)) for text, size in classes.items()]
    if as_json:
        emit_json([
            {'canonical': text, 'orbit_size': size, 'kind': kind}
            for text, size, kind in rows
        ])
        return
    click.echo(tabulate(rows, headers=('canonical', 'orbit', 'kind'),
                        tablefmt='pretty'))
    click.echo(f'{len(rows)} classes, {sum(r[1] for r in rows)} functions')


@click.command('canonical')
@click.argument('table', type=TABLE)
@json_option
def canonical(table: TruthTable, as_json: bool):
    '''Канонический представитель NPN-класса функции TABLE.'''
    try:
        canon, t = npn_canonical(table)
    except Exact1qError as e:
        raise usage_error(e) from e
    if as_json:
        emit_json({
            'table': table.to_text(),
            'canonical': canon.to_text(),
            'transform': {
                'perm': list(t.perm),
                'input_neg': t.input_neg,
                'output_neg': t.output_neg,
            },
        })
        return
    click.echo(canon.to_text())
    click.echo(f'perm = {t.perm}, input_neg = {t.input_neg:0{table.n}b}, '
               f'output_neg = {t.output_neg}')


COMMANDS = [npn, canonical]
