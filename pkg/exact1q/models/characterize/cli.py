import click

from exact1q.kernel.errors import Exact1qError
from exact1q.models.boolfn import TruthTable
from exact1q.models.harness.params import (
    TABLE,
    emit_json,
    json_option,
    usage_error,
)
from exact1q.models.qsim import circuit_to_json, dumps_circuit, save_circuit
from exact1q.models.qsim.processing import (
    print_simulation_report,
    simulation_report,
)
from .classify import classify
from .deutsch_jozsa import deutsch_jozsa
from .objects import Classification, NotExactOneQuery, is_exact_family
from .synthesis import separation, synthesize


def describe(cl: Classification) -> str:
    fields = ' '.join(f'{k}={v}' for k, v in cl.to_json().items() if k != 'kind')
    return f'{cl.kind} {fields}'.strip()


def _classify_or_usage(table: TruthTable) -> Classification:
    try:
        return classify(table)
    except Exact1qError as e:
        raise usage_error(e) from e


@click.command('classify')
@click.argument('table', type=TABLE)
@json_option
@click.pass_context
def classify_command(ctx, table: TruthTable, as_json: bool):
    '''
    Классифицировать всюду определенную функцию TABLE. Код выхода 1, если
    функция не вычисляется точно за один запрос.
    '''
    cl = _classify_or_usage(table)
    if as_json:
        emit_json(cl.to_json())
    else:
        click.echo(describe(cl))
        if is_exact_family(cl):
            s = separation(table)
            click.echo(f'D(f) = {s.decision_tree_depth}, '
                       f'quantum queries = {s.quantum_queries}')
    ctx.exit(1 if isinstance(cl, NotExactOneQuery) else 0)


@click.command('synth')
@click.argument('table', type=TABLE)
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              default=None, help='Сохранить схему в файл JSON')
@json_option
@click.pass_context
def synth(ctx, table: TruthTable, output: str | None, as_json: bool):
    '''Построить точную однозапросную схему для функции TABLE.'''
    cl = _classify_or_usage(table)
    if not is_exact_family(cl):
        message = f'{table}: {describe(cl)}, no one-query circuit'
        if as_json:
            emit_json({'classification': cl.to_json(), 'circuit': None})
        else:
            click.echo(message)
        ctx.exit(1)
    circuit = synthesize(cl, table.n)
    if output is None:
        if as_json:
            emit_json({'classification': cl.to_json(),
                       'circuit': circuit_to_json(circuit)})
        else:
            click.echo(dumps_circuit(circuit))
        return
    save_circuit(circuit, output)
    if as_json:
        emit_json({'classification': cl.to_json(), 'path': output})
    else:
        click.echo(f'{describe(cl)}: circuit written to {output}')


@click.command('dj')
@click.option('-n', 'n', type=int, required=True,
              help='Длина строки оракула (2 или 4)')
@json_option
@click.pass_context
def dj(ctx, n: int, as_json: bool):
    '''Алгоритм Дойча-Йожи на области обещания (частичная функция).'''
    try:
        table, circuit = deutsch_jozsa(n)
    except Exact1qError as e:
        raise usage_error(e) from e
    report = simulation_report(circuit, table)
    if as_json:
        emit_json({'table': table.to_text(), **report})
    else:
        click.echo(f'promise table: {table}')
        print_simulation_report(report)
    ctx.exit(0 if report['exact'] else 1)


COMMANDS = [classify_command, synth, dj]
