from dataclasses import dataclass
import logging
import time
from typing import Callable, Literal
import uuid
import colorama


PACKAGE_LOGGER_NAME = 'exact1q'

# Кроме стандартных полей используются два дополнительных, их добавляет
# ToolkitLogger:
#
# - elapsed: секунды с начала запуска
# - runId: идентификатор запуска
#
# Пример строки в журнале:
# 000001.250731 [DEBUG   ] exact1q.harness (R:972274) (verify.py:run_harness) - ...
TOOLKIT_LOGGER_FORMAT = (
    "{elapsed:013.06f} [{levelname:8s}] {name} (R:{runId}) "
    "({filename}:{funcName}) - {message}"
)

Style = Literal['%', '{', '$']


class ColoredFormatter(logging.Formatter):
    """Форматтер для консоли: цвет записи зависит от уровня."""

    DEFAULT_COLORS = {
        logging.DEBUG: colorama.Fore.LIGHTBLACK_EX,
        logging.INFO: colorama.Fore.GREEN,
        logging.WARNING: colorama.Fore.YELLOW,
        logging.ERROR: colorama.Fore.RED + colorama.Style.BRIGHT,
        logging.CRITICAL:
            colorama.Back.RED + colorama.Fore.WHITE + colorama.Style.BRIGHT,
    }

    def __init__(self, fmt: str, style: Style = '%',
                 colors: dict[int, str] | None = None, **kwargs):
        super().__init__(fmt=fmt, style=style, **kwargs)
        palette = {**self.DEFAULT_COLORS, **(colors or {})}
        self._by_level = {
            level: logging.Formatter(
                color + fmt + colorama.Style.RESET_ALL, style=style
            )
            for level, color in palette.items()
        }

    def format(self, record):
        formatter = self._by_level.get(record.levelno)
        if formatter is None:
            return super().format(record)
        return formatter.format(record)


@dataclass
class ToolkitLoggerConfig:
    """Настройки логгера пакета."""
    fmt: str = TOOLKIT_LOGGER_FORMAT
    style: Style = '{'

    # По умолчанию молчим: вывод CLI должен быть побайтово воспроизводим
    level: int = logging.CRITICAL

    use_console: bool = False      # писать ли в stderr
    colored_console: bool = True
    console_colors: dict[int, str] | None = None
    console_level: int | None = None   # если None - level

    file_name: str | None = None   # без имени файла журнал в файл не пишется
    file_level: int | None = None      # если None - level
    file_name_sep: str = "_"
    # Если False, к имени файла добавляется runId (trace.log -> trace_17.log)
    file_name_no_run_id: bool = True


class _RunState:
    """Общее для всех логгеров пакета состояние запуска."""
    def __init__(self):
        self.run_id: int = uuid.uuid4().int % 1_000_000
        self.t_start: float = time.perf_counter()


_RUN_STATE = _RunState()


def _elapsed() -> float:
    return time.perf_counter() - _RUN_STATE.t_start


def _console_handler(config: ToolkitLoggerConfig) -> logging.Handler:
    if config.colored_console:
        formatter = ColoredFormatter(config.fmt, style=config.style,
                                     colors=config.console_colors)
    else:
        formatter = logging.Formatter(config.fmt, style=config.style)
    handler = logging.StreamHandler()
    handler.setLevel(config.console_level or config.level)
    handler.setFormatter(formatter)
    return handler


def _file_handler(config: ToolkitLoggerConfig, run_id: int) -> logging.Handler:
    file_name = config.file_name
    if not config.file_name_no_run_id:
        file_name = ToolkitLogger.build_file_name(
            file_name, run_id, config.file_name_sep
        )
    handler = logging.FileHandler(file_name, mode='w')
    handler.setLevel(config.file_level or config.level)
    handler.setFormatter(logging.Formatter(config.fmt, style=config.style))
    return handler


class ToolkitLogger:
    """
    Логгер модуля пакета.

    Обертка над `logging.getLogger(name)`, которая добавляет к каждой
    записи поля `elapsed` и `runId`. Сообщения передаются через
    %-формат: `debug("checked %d functions", count)`.

    Обработчики есть только у логгера пакета (`exact1q`), логгеры модулей
    (`exact1q.harness` и т.п.) передают записи ему.
    """
    def __init__(
        self,
        name: str = PACKAGE_LOGGER_NAME,
        time_getter: Callable[[], float] | None = None,
        run_id: int | None = None,
    ):
        self._logger = logging.getLogger(name)
        self.time_getter = time_getter or _elapsed
        self._run_id = run_id

    @property
    def name(self) -> str:
        return self._logger.name

    @property
    def run_id(self) -> int:
        return self._run_id if self._run_id is not None else _RUN_STATE.run_id

    def setup(self, config: ToolkitLoggerConfig | None = None) -> None:
        """Заменить обработчики логгера на описанные в config."""
        config = config or ToolkitLoggerConfig()
        for handler in self._logger.handlers:
            handler.close()
        handlers = []
        if config.use_console:
            handlers.append(_console_handler(config))
        if config.file_name is not None:
            handlers.append(_file_handler(config, self.run_id))
        self._logger.handlers = handlers or [logging.NullHandler()]
        self._logger.propagate = False
        self._logger.setLevel(config.level)

    def isEnabledFor(self, level: int) -> bool:
        return self._logger.isEnabledFor(level)

    def _emit(self, level: int, msg, args, kwargs):
        # stacklevel=3: в записи файл и функция того, кто вызвал debug/info/...
        self._logger.log(
            level, msg, *args,
            extra={'elapsed': self.time_getter(), 'runId': self.run_id},
            stacklevel=3,
            **kwargs,
        )

    def log(self, level: int, msg, *args, **kwargs):
        self._emit(level, msg, args, kwargs)

    def debug(self, msg, *args, **kwargs):
        self._emit(logging.DEBUG, msg, args, kwargs)

    def info(self, msg, *args, **kwargs):
        self._emit(logging.INFO, msg, args, kwargs)

    def warning(self, msg, *args, **kwargs):
        self._emit(logging.WARNING, msg, args, kwargs)

    def error(self, msg, *args, **kwargs):
        self._emit(logging.ERROR, msg, args, kwargs)

    @staticmethod
    def build_file_name(file_name: str, run_id: int, sep: str = "_") -> str:
        """
        "something.log" и run_id = 123 дают "something_123.log". Если
        расширение не "log", идентификатор добавляется в конец.
        """
        file_name = file_name.strip()
        stem, dot, ext = file_name.rpartition('.')
        if dot and ext.lower() == 'log':
            return f'{stem}{sep}{run_id}.{ext}'
        return f'{file_name}{sep}{run_id}'


_PACKAGE_LOGGER = ToolkitLogger(PACKAGE_LOGGER_NAME)

# Пока логгер не настроен, записи не должны уходить в logging.lastResort
logging.getLogger(PACKAGE_LOGGER_NAME).addHandler(logging.NullHandler())
logging.getLogger(PACKAGE_LOGGER_NAME).setLevel(logging.CRITICAL)


def get_logger(name: str) -> ToolkitLogger:
    """Логгер модуля, например get_logger('harness') -> exact1q.harness."""
    if not name.startswith(PACKAGE_LOGGER_NAME):
        name = f'{PACKAGE_LOGGER_NAME}.{name}'
    return ToolkitLogger(name)


def configure_logging(
    config: ToolkitLoggerConfig | None = None,
    run_id: int | None = None,
) -> ToolkitLogger:
    """
    Настроить логгер пакета и начать новый запуск (сбросить часы).
    Возвращает логгер пакета.
    """
    if run_id is not None:
        _RUN_STATE.run_id = run_id
    _RUN_STATE.t_start = time.perf_counter()
    _PACKAGE_LOGGER.setup(config)
    return _PACKAGE_LOGGER
