import importlib
import logging
import pkgutil
import sys

import click

from exact1q.kernel.logger import ToolkitLoggerConfig, configure_logging


models_list = []  # Заполняется в коде инициализации, в конце файла


########################################
# CLI
########################################

# Корневая группа
@click.group()
@click.option('-v', '--verbose', is_flag=True, default=False,
              help='Писать журнал уровня DEBUG в stderr')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None,
              help='Писать журнал в файл')
def cli(verbose: bool, log_file: str | None):
    '''Точные однозапросные квантовые алгоритмы для булевых функций.'''
    if verbose or log_file:
        configure_logging(ToolkitLoggerConfig(
            level=logging.DEBUG,
            use_console=verbose,
            file_name=log_file,
        ))


#############################################################################
# ИНИЦИАЛИЗАЦИЯ
#
# Просматриваем все подмодули в модуле models. Если в подмодуле есть файл
# cli.py со списком команд click `COMMANDS`, добавляем их в корневую группу.
#
# Например, для `models.dtree` с файлом
#
# -----------------------------------------------------
# # File: models/dtree/cli.py
#
# @click.command('dtree')
# def dtree(...):
#     ...
#
# COMMANDS = [dtree]
# -----------------------------------------------------
#
# в CLI появится команда `exact1q dtree`.
#############################################################################
def __initialize__():
    from exact1q import models  # type: ignore
    for submodule in pkgutil.iter_modules(models.__path__):
        name = submodule.name
        try:
            module = importlib.import_module('.cli', f'exact1q.models.{name}')
        except ModuleNotFoundError as e:
            if e.name != f'exact1q.models.{name}.cli':
                raise
            continue
        commands = getattr(module, 'COMMANDS', None)
        if commands is None:
            continue
        for cmd in commands:
            if not isinstance(cmd, click.Command):
                raise TypeError(f'{name}: {cmd!r} is not a click command')
            cli.add_command(cmd)
        models_list.append(name)


def cli_dispatch(argv: list[str] | None = None) -> int:
    '''
    Выполнить команду и вернуть код выхода: 0 - успех или "да",
    1 - "нет" (несовместно, расхождение, не вычисляется за один запрос),
    2 - ошибка использования.
    '''
    try:
        rv = cli.main(args=argv, prog_name='exact1q', standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    # при standalone_mode=False click возвращает код из ctx.exit()
    return rv if isinstance(rv, int) else 0


__initialize__()


if __name__ == '__main__':
    sys.exit(cli_dispatch())
