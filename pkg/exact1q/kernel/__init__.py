from .logger import ToolkitLogger, ToolkitLoggerConfig, TOOLKIT_LOGGER_FORMAT, \
    ColoredFormatter, configure_logging, get_logger

from .errors import Exact1qError, TruthTableFormatError, PartialFunctionError, \
    VariableIndexError, EnumerationLimitError, EmptyDomainError, \
    DimensionMismatchError, NotUnitaryError, InvalidMeasurementError, \
    QueryCountError, FieldError, ConstantFunctionError, NotSynthesizableError, \
    CircuitFormatError, InvalidTransformError
