import click

from exact1q.models.boolfn import TruthTable
from exact1q.models.harness.params import TABLE, emit_json, json_option
from .objects import FeasibilityResult
from .solver import lp_feasible
from .system import build_system


def _format_fraction_list(values) -> str:
    return '(' + ', '.join(str(v) for v in values) + ')'


def _print_result(result: FeasibilityResult, witness: bool) -> None:
    verdict = 'feasible' if result.feasible else 'infeasible'
    if result.necessary_only:
        verdict += ' (necessary condition only: partial function)'
    click.echo(verdict)
    if not witness:
        return
    if result.feasible:
        click.echo(f'beta = {_format_fraction_list(result.witness)}')
    else:
        cert = result.certificate
        click.echo(f'y_S = {_format_fraction_list(cert.equalities)}')
        click.echo(f'lambda = {cert.cap}')


@click.command('feasibility')
@click.argument('table', type=TABLE)
@click.option('--witness', is_flag=True, default=False,
              help='Показать решение beta или сертификат несовместности')
@json_option
@click.pass_context
def feasibility(ctx, table: TruthTable, witness: bool, as_json: bool):
    '''
    Совместность системы ограничений на beta для функции TABLE.
    Код выхода 0 - система совместна (или функция постоянна), 1 - нет.
    '''
    if table.is_empty:
        raise click.UsageError('function has an empty domain')
    if table.is_constant_on_domain():
        if as_json:
            emit_json({'constant': True, 'feasible': True})
        else:
            click.echo('constant function: zero queries')
        ctx.exit(0)
    system = build_system(table)
    result = lp_feasible(system)
    if as_json:
        emit_json({'system': system.to_json(), **result.to_json()})
    else:
        _print_result(result, witness)
    ctx.exit(0 if result.feasible else 1)


COMMANDS = [feasibility]
