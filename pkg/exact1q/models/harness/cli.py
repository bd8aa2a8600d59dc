import click
from pydantic import ValidationError

from exact1q.kernel.errors import Exact1qError
from .corpus import golden_corpus
from .params import emit_json, json_option
from .processing import print_corpus, print_report
from .verify import verify_theorem


DEFAULT_JOBS = 1
DEFAULT_SEED = 0
SEED_ENVVAR = 'EXACT1Q_SEED'


@click.command('verify-theorem')
@click.option('-n', 'n', type=int, required=True,
              help='Число переменных (1..4, с --sample до 6)')
@click.option('-j', '--jobs', default=DEFAULT_JOBS, type=int,
              show_default=True, help='Число процессов')
@click.option('--seed', default=DEFAULT_SEED, type=int, envvar=SEED_ENVVAR,
              show_default=True, help='Зерно выборки (или EXACT1Q_SEED)')
@click.option('--sample', default=None, type=int,
              help='Проверить M случайных функций (5 <= n <= 6)')
@click.option('--timing', is_flag=True, default=False,
              help='Добавить время работы в вывод')
@json_option
@click.pass_context
def verify_theorem_command(ctx, n, jobs, seed, sample, timing, as_json):
    '''
    Проверить характеризацию на всех функциях от n переменных.
    Код выхода 1 при любом расхождении.
    '''
    try:
        report = verify_theorem(n, jobs=jobs, seed=seed, sample=sample)
    except (Exact1qError, ValidationError) as e:
        raise click.UsageError(str(e)) from e
    if as_json:
        emit_json(report.to_json(timing))
    else:
        print_report(report, timing)
    ctx.exit(0 if report.ok else 1)


@click.command('list')
@json_option
def list_corpus(as_json: bool):
    '''Именованные функции, которые можно передавать вместо таблиц.'''
    corpus = golden_corpus()
    if as_json:
        emit_json({name: f.to_text() for name, f in corpus.items()})
    else:
        print_corpus(corpus)


COMMANDS = [verify_theorem_command, list_corpus]
