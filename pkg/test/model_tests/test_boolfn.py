import numpy as np
import pytest
from hypothesis import given, strategies as st

from exact1q.kernel.errors import (
    EnumerationLimitError,
    InvalidTransformError,
    PartialFunctionError,
    TruthTableFormatError,
    VariableIndexError,
)
from exact1q.models.boolfn import (
    Transform,
    TruthTable,
    all_transforms,
    apply_transform,
    dependent_set,
    depends_on,
    enumerate_all,
    inverse_transform,
    negate_output,
    npn_canonical,
    npn_classes,
    orbit,
    parse_input,
    parse_truth_table,
    random_function,
    random_transform,
    restrict,
)


# ============================================================================
# Разбор и представление таблиц
# ============================================================================
def test_parse_parity():
    f = parse_truth_table('0110')
    assert f.n == 2
    assert f.is_total
    assert [f.value(x) for x in range(4)] == [0, 1, 1, 0]


def test_parse_identity_on_one_variable():
    f = parse_truth_table('01')
    assert f.n == 1
    assert f.value(0) == 0 and f.value(1) == 1


def test_parse_partial():
    f = parse_truth_table('0**1')
    assert not f.is_total
    assert list(f.domain_inputs()) == [0, 3]
    assert f.to_text() == '0**1'


def test_msb_convention():
    # x_1 - старший бит: f = x_1 равна 1 на второй половине таблицы
    f = TruthTable.from_function(3, lambda x: x[0])
    assert f.to_text() == '00001111'


@pytest.mark.parametrize('text', ['', '0', '010', '01a1', '0 11'])
def test_parse_errors(text):
    with pytest.raises(TruthTableFormatError):
        parse_truth_table(text)


def test_parse_rejects_more_than_sixteen_variables():
    with pytest.raises(TruthTableFormatError):
        parse_truth_table('0' * (1 << 17))


def test_parse_input():
    assert parse_input('10', 2) == 2
    with pytest.raises(TruthTableFormatError):
        parse_input('102', 3)
    with pytest.raises(TruthTableFormatError):
        parse_input('1', 2)


# ============================================================================
# Зависимость от переменных
# ============================================================================
@pytest.mark.parametrize('text, i, expected', [
    ('0110', 1, True),
    ('0000', 1, False),
    ('0001', 2, True),
    ('0011', 2, False),
])
def test_depends_on(text, i, expected):
    assert depends_on(parse_truth_table(text), i) is expected


@pytest.mark.parametrize('text, expected', [
    ('0110', {1, 2}),
    ('0011', {1}),
    ('00010111', {1, 2, 3}),
    ('1111', set()),
])
def test_dependent_set(text, expected):
    assert dependent_set(parse_truth_table(text)) == expected


def test_dependency_refuses_partial_and_bad_index():
    with pytest.raises(PartialFunctionError):
        depends_on(parse_truth_table('0**1'), 1)
    with pytest.raises(VariableIndexError):
        depends_on(parse_truth_table('0110'), 3)


@given(st.integers(min_value=0, max_value=255), st.integers(1, 3))
def test_output_negation_keeps_dependency(values, i):
    f = TruthTable.total(3, values)
    assert depends_on(f, i) == depends_on(negate_output(f), i)


def test_restrict_keeps_half_of_domain():
    f = restrict(parse_truth_table('0110'), 1, 1)
    assert f.to_text() == '**10'


# ============================================================================
# Преобразования и NPN-канонизация
# ============================================================================
def test_output_negation_transform():
    t = Transform((1, 2), 0, 1)
    assert apply_transform(parse_truth_table('0011'), t).to_text() == '1100'


def test_swap_transform():
    t = Transform((2, 1))
    assert apply_transform(parse_truth_table('0011'), t).to_text() == '0101'


def test_identity_transform():
    f = parse_truth_table('00010111')
    assert apply_transform(f, Transform.identity(3)) == f


@pytest.mark.parametrize('args', [
    ((1, 1),),
    ((1, 3),),
    ((1, 2), 4),
    ((1, 2), -1),
    ((2, 1), 0, 2),
])
def test_transform_rejects_bad_arguments(args):
    with pytest.raises(InvalidTransformError):
        Transform(*args)


def test_transform_round_trip_random_pairs():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        f = random_function(n, rng)
        t = random_transform(n, rng)
        assert apply_transform(apply_transform(f, t), inverse_transform(t)) == f


def test_transform_count():
    assert len(all_transforms(3)) == 6 * 8 * 2


@pytest.mark.parametrize('a, b', [
    ('0110', '1001'),
    ('0001', '0111'),
    ('0011', '1010'),
])
def test_isomorphic_functions_share_canonical(a, b):
    ca, _ = npn_canonical(parse_truth_table(a))
    cb, _ = npn_canonical(parse_truth_table(b))
    assert ca == cb


@given(st.integers(min_value=0, max_value=255))
def test_canonical_is_idempotent_and_witnessed(values):
    f = TruthTable.total(3, values)
    canon, witness = npn_canonical(f)
    assert npn_canonical(canon)[0] == canon
    assert apply_transform(f, witness) == canon


def test_canonical_refuses_large_and_partial():
    with pytest.raises(EnumerationLimitError):
        npn_canonical(TruthTable.total(5, 1))
    with pytest.raises(PartialFunctionError):
        npn_canonical(parse_truth_table('0**1'))


@pytest.mark.parametrize('n, classes', [(1, 2), (2, 4), (3, 14)])
def test_npn_class_counts_and_orbit_sizes(n, classes):
    result = npn_classes(n)
    assert len(result) == classes
    assert sum(result.values()) == 2 ** (2 ** n)


def test_distinct_orbits_have_distinct_canonicals():
    seen = {}
    for f in enumerate_all(3):
        canon = npn_canonical(f)[0].values
        members = orbit(f)
        if canon in seen:
            assert seen[canon] == members
        seen[canon] = members
    assert len(seen) == 14


# ============================================================================
# Перебор
# ============================================================================
@pytest.mark.parametrize('n, count', [(1, 4), (2, 16), (4, 65536)])
def test_enumerate_all_counts(n, count):
    tables = enumerate_all(n)
    assert sum(1 for _ in tables) == count


def test_enumerate_all_order():
    assert [f.to_text() for f in enumerate_all(1)] == ['00', '10', '01', '11']


def test_enumerate_all_limit():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_all(5))


def test_random_function_is_seeded():
    a = [random_function(4, np.random.default_rng(9)) for _ in range(2)]
    assert a[0] == a[1]
    assert a[0].is_total and a[0].n == 4
