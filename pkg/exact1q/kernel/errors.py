class Exact1qError(Exception):
    """Базовое исключение пакета exact1q."""


class TruthTableFormatError(Exact1qError, ValueError):
    """Строка таблицы истинности имеет неверный формат."""


class InvalidTransformError(Exact1qError, ValueError):
    """Перестановка или маски NPN-преобразования заданы неверно."""


class PartialFunctionError(Exact1qError, ValueError):
    """Операция определена только для всюду определенных функций."""


class VariableIndexError(Exact1qError, IndexError):
    """Номер переменной вне диапазона 1..n."""


class EnumerationLimitError(Exact1qError, ValueError):
    """Перебор (или канонизация) запрошены для слишком большого n."""


class EmptyDomainError(Exact1qError, ValueError):
    """Область определения функции пуста."""


class DimensionMismatchError(Exact1qError, ValueError):
    """Размерности схемы, матриц или функции не согласованы."""


class NotUnitaryError(Exact1qError, ValueError):
    """Матрица схемы не является унитарной."""


class InvalidMeasurementError(Exact1qError, ValueError):
    """Пара (E0, E1) не задает двухисходное POVM-измерение."""


class QueryCountError(Exact1qError, ValueError):
    """Операция требует схему с другим числом запросов T."""


class FieldError(Exact1qError, ArithmeticError):
    """Результат вычисления выходит за пределы числового поля Q(sqrt2)."""


class ConstantFunctionError(Exact1qError, ValueError):
    """Функция постоянна на своей области (ноль запросов)."""


class NotSynthesizableError(Exact1qError, ValueError):
    """Для данной классификации однозапросная схема не строится."""


class CircuitFormatError(Exact1qError, ValueError):
    """Ошибка в JSON-описании схемы."""
