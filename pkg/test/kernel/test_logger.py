import logging

import pytest

from exact1q.kernel.logger import (
    ColoredFormatter,
    ToolkitLogger,
    ToolkitLoggerConfig,
    configure_logging,
    get_logger,
)


@pytest.fixture
def silent_after():
    yield
    configure_logging(ToolkitLoggerConfig())


@pytest.mark.parametrize('file_name, run_id, expected', [
    ('model.log', 123, 'model_123.log'),
    ('model.LOG', 7, 'model_7.LOG'),
    ('model', 5, 'model_5'),
    (' trace.txt ', 1, 'trace.txt_1'),
])
def test_build_file_name(file_name, run_id, expected):
    assert ToolkitLogger.build_file_name(file_name, run_id) == expected


def test_get_logger_is_under_package_logger():
    assert get_logger('harness').name == 'exact1q.harness'
    assert get_logger('exact1q.qsim').name == 'exact1q.qsim'


def test_default_level_is_silent():
    assert not get_logger('harness').isEnabledFor(logging.ERROR)


def test_file_log_has_run_id_and_caller(tmp_path, silent_after):
    log_file = tmp_path / 'run.log'
    configure_logging(
        ToolkitLoggerConfig(level=logging.DEBUG, file_name=str(log_file)),
        run_id=4242,
    )
    get_logger('harness').info('checked %d functions', 16)
    text = log_file.read_text()

    assert '(R:4242)' in text
    assert 'exact1q.harness' in text
    assert '[INFO    ]' in text
    assert '(test_logger.py:' in text
    assert 'checked 16 functions' in text


def test_file_name_with_run_id(tmp_path, silent_after):
    base = tmp_path / 'trace.log'
    configure_logging(
        ToolkitLoggerConfig(
            level=logging.INFO,
            file_name=str(base),
            file_name_no_run_id=False,
        ),
        run_id=17,
    )
    get_logger('dtree').warning('deep tree')
    assert (tmp_path / 'trace_17.log').exists()


def test_colored_formatter_wraps_message():
    formatter = ColoredFormatter('{message}', style='{')
    record = logging.LogRecord(
        'exact1q', logging.WARNING, __file__, 1, 'careful', None, None
    )
    out = formatter.format(record)
    assert 'careful' in out
    assert out != 'careful'
