from typing import Literal

from pydantic import BaseModel, Field, model_validator


EXHAUSTIVE_MAX_N = 4
SAMPLE_MAX_N = 6


class HarnessConfig(BaseModel):
    n: int = Field(..., ge=1, le=SAMPLE_MAX_N)
    jobs: int = Field(1, ge=1)
    seed: int = 0
    sample: int | None = Field(None, ge=1)

    @model_validator(mode='after')
    def _mode_matches_n(self):
        if self.sample is None and self.n > EXHAUSTIVE_MAX_N:
            raise ValueError(
                f'exhaustive sweep supports n <= {EXHAUSTIVE_MAX_N}, '
                'use --sample for larger n'
            )
        if self.sample is not None and self.n <= EXHAUSTIVE_MAX_N:
            raise ValueError(
                f'sample mode is meant for {EXHAUSTIVE_MAX_N + 1} <= n <= '
                f'{SAMPLE_MAX_N}'
            )
        return self

    @property
    def mode(self) -> Literal['exhaustive', 'sample']:
        return 'exhaustive' if self.sample is None else 'sample'


class Mismatch(BaseModel):
    table: str
    check: str = Field(..., description='Name of the failed check')
    detail: str


class VerificationReport(BaseModel):
    n: int
    mode: Literal['exhaustive', 'sample']
    seed: int
    total_functions: int
    constants: int
    exact_one_query: int
    dictator_count: int
    parity_count: int
    not_exact_one_query: int
    exact_npn_classes: list[str] = []
    mismatches: list[Mismatch] = []
    wall_time: float | None = Field(None, description='Seconds, --timing only')

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, timing: bool = False) -> dict:
        exclude = None if timing else {'wall_time'}
        return self.model_dump(exclude=exclude)
