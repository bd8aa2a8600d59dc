from dataclasses import dataclass, field
from fractions import Fraction


CAP = 2  # sum beta_i <= 2


@dataclass(frozen=True, order=True)
class DistinguishingSet:
    '''S = {i | x_i != y_i} для пары с f(x) != f(y); хранится отсортированным.'''
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if not members:
            raise ValueError('distinguishing set must be nonempty')
        object.__setattr__(self, 'members', members)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> 'DistinguishingSet':
        return cls(tuple(i for i in range(1, n + 1) if (mask >> (n - i)) & 1))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ConstraintSystem:
    '''
    Линейная система над beta_i >= 0:

    - sum_{i in S} beta_i = 1 для каждого S из sets;
    - sum_i beta_i <= cap.

    partial = True, если система построена для частичной функции: тогда
    ее допустимость - лишь необходимое условие.
    '''
    n: int
    sets: tuple[DistinguishingSet, ...]
    cap: int = CAP
    partial: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'sets', tuple(sorted(set(self.sets))))

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'sets': [list(s.members) for s in self.sets],
            'cap': self.cap,
        }


def fraction_to_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


@dataclass(frozen=True)
class FarkasCertificate:
    '''
    Доказательство несовместности: множители y_S при равенствах и
    lam >= 0 при ограничении сверху, такие что для каждого i
    sum_{S содержит i} y_S - lam <= 0, но sum_S y_S - cap * lam > 0.

    Для любого допустимого beta первое дает sum_S y_S - lam * sum beta <= 0,
    а второе с sum beta <= cap - противоречие.
    '''
    equalities: tuple[Fraction, ...]
    cap: Fraction

    def verify(self, system: ConstraintSystem) -> bool:
        if len(self.equalities) != len(system.sets) or self.cap < 0:
            return False
        for i in range(1, system.n + 1):
            column = sum(
                (y for y, s in zip(self.equalities, system.sets) if i in s),
                Fraction(0)
            )
            if column - self.cap > 0:
                return False
        return sum(self.equalities, Fraction(0)) - system.cap * self.cap > 0

    def to_json(self) -> dict:
        return {
            'equalities': [fraction_to_json(y) for y in self.equalities],
            'cap': fraction_to_json(self.cap),
        }


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None = None
    certificate: FarkasCertificate | None = None
    necessary_only: bool = False
    pivots: int = field(default=0, compare=False)

    def verify(self, system: ConstraintSystem) -> bool:
        '''Независимая проверка свидетельства или сертификата.'''
        if self.feasible:
            return self.witness is not None and satisfies(system, self.witness)
        return (self.certificate is not None and
                self.certificate.verify(system))

    def to_json(self) -> dict:
        data = {
            'feasible': self.feasible,
            'necessary_condition_only': self.necessary_only,
        }
        if self.witness is not None:
            data['witness'] = [fraction_to_json(b) for b in self.witness]
        if self.certificate is not None:
            data['certificate'] = self.certificate.to_json()
        return data


def satisfies(system: ConstraintSystem, beta) -> bool:
    '''
    Точная подстановка beta во все ограничения системы. Компоненты beta -
    рациональные числа или вещественные элементы Q(sqrt2).
    '''
    beta = tuple(beta)
    if len(beta) != system.n or any(b < 0 for b in beta):
        return False
    for s in system.sets:
        if sum((beta[i - 1] for i in s.members), Fraction(0)) != 1:
            return False
    return sum(beta, Fraction(0)) <= system.cap
