import json

import click

from exact1q.kernel.errors import Exact1qError
from exact1q.models.boolfn import TruthTable, parse_truth_table
from .corpus import lookup


class TruthTableParam(click.ParamType):
    '''Таблица в формате {0,1,*} или имя функции из корпуса.'''
    name = 'table'

    def convert(self, value, param, ctx):
        if isinstance(value, TruthTable):
            return value
        named = lookup(value)
        if named is not None:
            return named
        try:
            return parse_truth_table(value)
        except Exact1qError as e:
            self.fail(str(e), param, ctx)


TABLE = TruthTableParam()


json_option = click.option(
    '--json', 'as_json', is_flag=True, default=False,
    help='Вывести результат в формате JSON'
)


def emit_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


def usage_error(e: Exact1qError) -> click.UsageError:
    '''Ошибка предметной области в аргументах превращается в код выхода 2.'''
    return click.UsageError(str(e))
