import json
from pathlib import Path

import numpy as np

from exact1q.kernel.errors import CircuitFormatError, Exact1qError
from .objects import Circuit, Measurement
from .scalar import Field, scalar_from_json, scalar_to_json


def matrix_to_json(m: np.ndarray, field: Field) -> list[list]:
    return [[scalar_to_json(z, field) for z in row] for row in m]


def matrix_from_json(rows, field: Field) -> np.ndarray:
    if not rows or any(len(row) != len(rows) for row in rows):
        raise CircuitFormatError('matrix must be a non-empty square list of rows')
    d = len(rows)
    if field == Field.QSQRT2:
        m = np.empty((d, d), dtype=object)
    else:
        m = np.empty((d, d), dtype=complex)
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            m[r, c] = scalar_from_json(value, field)
    return m


def circuit_to_json(c: Circuit) -> dict:
    '''Описание схемы: {n, K, T, field, unitaries, measurement}.'''
    return {
        'n': c.n,
        'K': c.K,
        'T': c.T,
        'field': c.field.value,
        'unitaries': [matrix_to_json(u, c.field) for u in c.unitaries],
        'measurement': {
            'type': c.measurement.kind,
            'E1': matrix_to_json(c.measurement.e1, c.field),
        },
    }


def circuit_from_json(data: dict) -> Circuit:
    '''
    Восстановить схему из JSON-словаря.

    Raises:
        CircuitFormatError: нет обязательных полей или неизвестное поле чисел
        DimensionMismatchError, NotUnitaryError, InvalidMeasurementError:
            схема не проходит проверки Circuit
    '''
    try:
        field = Field(data['field'])
        unitaries = tuple(
            matrix_from_json(rows, field) for rows in data['unitaries']
        )
        measurement = data['measurement']
        e1 = matrix_from_json(measurement['E1'], field)
        kind = measurement.get('type', 'projective')
        n, K, T = int(data['n']), int(data['K']), int(data['T'])
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, Exact1qError):
            raise
        raise CircuitFormatError(f'malformed circuit description: {e}') from e
    return Circuit(n, K, T, unitaries, Measurement(e1, field, kind), field)


def dumps_circuit(c: Circuit) -> str:
    return json.dumps(circuit_to_json(c), indent=2)


def save_circuit(c: Circuit, path: str | Path) -> None:
    Path(path).write_text(dumps_circuit(c) + '\n')


def load_circuit(path: str | Path) -> Circuit:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise CircuitFormatError(f'{path}: invalid JSON ({e})') from e
    return circuit_from_json(data)
