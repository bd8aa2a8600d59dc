import click

from exact1q.kernel.errors import Exact1qError
from exact1q.models.boolfn import TruthTable
from exact1q.models.harness.params import (
    TABLE,
    emit_json,
    json_option,
    usage_error,
)
from .tree import (
    build_optimal_tree,
    decision_tree_depth,
    render_tree,
    tree_to_json,
)


@click.command('dtree')
@click.argument('table', type=TABLE)
@click.option('--tree', 'show_tree', is_flag=True, default=False,
              help='Показать оптимальное дерево')
@json_option
def dtree(table: TruthTable, show_tree: bool, as_json: bool):
    '''Детерминированная сложность D(f) функции TABLE.'''
    try:
        depth = decision_tree_depth(table)
    except Exact1qError as e:
        raise usage_error(e) from e
    tree = build_optimal_tree(table) if show_tree else None
    if as_json:
        data = {'table': table.to_text(), 'depth': depth}
        if tree is not None:
            data['tree'] = tree_to_json(tree)
        emit_json(data)
        return
    click.echo(f'D(f) = {depth}')
    if tree is not None:
        click.echo(render_tree(tree))


COMMANDS = [dtree]
