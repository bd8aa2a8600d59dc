from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator


class _Variant(BaseModel):
    model_config = ConfigDict(frozen=True)

    def to_json(self) -> dict:
        return self.model_dump(exclude_none=True)


class Constant(_Variant):
    kind: Literal['constant'] = 'constant'
    value: int = Field(..., ge=0, le=1)


class Dictator(_Variant):
    '''f(x) = x_i XOR negated.'''
    kind: Literal['dictator'] = 'dictator'
    i: int = Field(..., ge=1)
    negated: int = Field(0, ge=0, le=1)


class ParityPair(_Variant):
    '''f(x) = x_i XOR x_j XOR negated, i < j.'''
    kind: Literal['parity_pair'] = 'parity_pair'
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=2)
    negated: int = Field(0, ge=0, le=1)

    @model_validator(mode='after')
    def _ordered(self):
        if self.i >= self.j:
            raise ValueError(f'parity pair needs i < j, got ({self.i}, {self.j})')
        return self


Reason = Literal['and_type_on_two', 'depends_on_too_many']


class NotExactOneQuery(_Variant):
    '''
    Функция не вычисляется точно за один запрос: либо она существенно
    зависит от двух переменных, но изоморфна AND_2 (and_type_on_two), либо
    зависит от t >= 3 переменных (depends_on_too_many).
    '''
    kind: Literal['not_exact_one_query'] = 'not_exact_one_query'
    reason: Reason
    t: int | None = None

    @model_validator(mode='after')
    def _reason_fields(self):
        if self.reason == 'depends_on_too_many' and (self.t is None or
                                                     self.t < 3):
            raise ValueError('depends_on_too_many requires t >= 3')
        if self.reason == 'and_type_on_two' and self.t is not None:
            raise ValueError('and_type_on_two carries no t')
        return self


Classification = Annotated[
    Union[Constant, Dictator, ParityPair, NotExactOneQuery],
    Field(discriminator='kind'),
]

_classification_adapter = TypeAdapter(Classification)


def classification_from_json(data: dict) -> Classification:
    return _classification_adapter.validate_python(data)


def is_exact_family(cl: Classification) -> bool:
    return isinstance(cl, (Dictator, ParityPair))


class Separation(BaseModel):
    '''Детерминированная сложность против числа квантовых запросов.'''
    decision_tree_depth: int
    quantum_queries: int
