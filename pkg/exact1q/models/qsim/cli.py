import click

from exact1q.kernel.errors import Exact1qError
from exact1q.models.boolfn import TruthTable, format_input, parse_input
from exact1q.models.harness.params import (
    TABLE,
    emit_json,
    json_option,
    usage_error,
)
from .circuit_io import load_circuit
from .processing import (
    print_simulation_report,
    probability_to_json,
    simulation_report,
)
from .scalar import TOLERANCE, is_exact_scalar
from .simulator import (
    amplitude_table,
    differing_bits,
    lemma1_sum,
    phi_inner_product,
    phi_inner_product_closed_form,
)


def _load(path: str):
    try:
        return load_circuit(path)
    except Exact1qError as e:
        raise usage_error(e) from e


def _scalar_text(z):
    if is_exact_scalar(z):
        return str(z)
    return [z.real, z.imag]


@click.command('simulate')
@click.argument('circuit', type=click.Path(exists=True, dir_okay=False))
@click.argument('table', type=TABLE)
@json_option
@click.pass_context
def simulate(ctx, circuit: str, table: TruthTable, as_json: bool):
    '''
    Вероятности исходов схемы CIRCUIT на области функции TABLE.
    Код выхода 0, если схема вычисляет функцию точно.
    '''
    c = _load(circuit)
    try:
        report = simulation_report(c, table)
    except Exact1qError as e:
        raise usage_error(e) from e
    if as_json:
        emit_json(report)
    else:
        print_simulation_report(report)
    ctx.exit(0 if report['exact'] else 1)


@click.command('lemma1')
@click.argument('circuit', type=click.Path(exists=True, dir_okay=False))
@click.argument('x')
@click.argument('y')
@json_option
@click.pass_context
def lemma1(ctx, circuit: str, x: str, y: str, as_json: bool):
    '''
    Сумма по S = {i | x_i != y_i} величин |alpha_i0k - alpha_i1k|^2 для
    однозапросной схемы и скалярное произведение состояний после запроса.
    Код выхода 0, если состояния ортогональны (сумма равна 1).
    '''
    c = _load(circuit)
    try:
        xi, yi = parse_input(x, c.n), parse_input(y, c.n)
        total = lemma1_sum(c, xi, yi)
        inner = phi_inner_product(c, xi, yi)
    except Exact1qError as e:
        raise usage_error(e) from e
    closed = phi_inner_product_closed_form(amplitude_table(c), xi, yi)
    if is_exact_scalar(total):
        orthogonal = total == 1
    else:
        orthogonal = abs(total - 1) <= TOLERANCE
    data = {
        'x': format_input(xi, c.n),
        'y': format_input(yi, c.n),
        'S': differing_bits(c.n, xi, yi),
        'lemma1_sum': probability_to_json(total),
        'inner_product': _scalar_text(inner),
        'closed_form': _scalar_text(closed),
        'orthogonal': orthogonal,
    }
    if as_json:
        emit_json(data)
    else:
        click.echo(f'S = {data["S"]}')
        click.echo(f'sum = {data["lemma1_sum"]}')
        click.echo(f'<phi_x|phi_y> = {data["inner_product"]}')
        click.echo(f'closed form = {data["closed_form"]}')
        click.echo(f'orthogonal = {str(orthogonal).lower()}')
    ctx.exit(0 if orthogonal else 1)


COMMANDS = [simulate, lemma1]
