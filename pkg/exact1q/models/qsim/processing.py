import click
from tabulate import tabulate

from exact1q.models.boolfn import TruthTable, format_input
from .objects import Circuit
from .scalar import is_exact_scalar
from .simulator import is_exact, max_error, success_probabilities


def probability_to_json(p):
    '''Точные значения - строкой вида "sqrt(2)/4 + 1/2", float - числом.'''
    if is_exact_scalar(p):
        return str(p)
    return float(p)


def simulation_report(c: Circuit, f: TruthTable) -> dict:
    rows = [
        {
            'x': format_input(x, f.n),
            'f': fx,
            'p0': probability_to_json(p0),
            'p1': probability_to_json(p1),
        }
        for x, fx, p0, p1 in success_probabilities(c, f)
    ]
    return {
        'n': c.n,
        'field': c.field.value,
        'queries': c.T,
        'rows': rows,
        'max_error': probability_to_json(max_error(c, f)),
        'exact': is_exact(c, f),
    }


def print_simulation_report(report: dict) -> None:
    click.echo(tabulate(
        [(r['x'], r['f'], r['p0'], r['p1']) for r in report['rows']],
        headers=('x', 'f(x)', 'P[0]', 'P[1]'),
        tablefmt='pretty',
    ))
    click.echo(f'queries = {report["queries"]}')
    click.echo(f'max_error = {report["max_error"]}')
    click.echo(f'is_exact = {str(report["exact"]).lower()}')
