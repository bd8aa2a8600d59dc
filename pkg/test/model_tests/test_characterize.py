import numpy as np
import pytest
import sympy
from pydantic import ValidationError

from exact1q.kernel.errors import (
    NotSynthesizableError,
    PartialFunctionError,
    VariableIndexError,
)
from exact1q.models.boolfn import (
    all_transforms,
    apply_transform,
    dependent_set,
    enumerate_all,
    inverse_transform,
    npn_canonical,
    parse_truth_table,
    random_function,
    random_transform,
)
from exact1q.models.characterize import (
    Constant,
    Dictator,
    NotExactOneQuery,
    ParityPair,
    classification_from_json,
    classification_matches,
    classify,
    deutsch_jozsa,
    is_exact_family,
    separation,
    synthesize,
    two_variable_code,
    verify_family,
)
from exact1q.models.qsim import (
    amplitude_table,
    dumps_circuit,
    is_exact,
    lemma1_sum,
    outcome_probability,
    run_circuit,
)


HALF = sympy.Rational(1, 2)


# ============================================================================
# Классификация
# ============================================================================
@pytest.mark.parametrize('text, expected', [
    ('0110', ParityPair(i=1, j=2, negated=0)),
    ('1001', ParityPair(i=1, j=2, negated=1)),
    ('0001', NotExactOneQuery(reason='and_type_on_two')),
    ('1100', Dictator(i=1, negated=1)),
    ('0101', Dictator(i=2, negated=0)),
    ('00010111', NotExactOneQuery(reason='depends_on_too_many', t=3)),
    ('0000', Constant(value=0)),
    ('11111111', Constant(value=1)),
    ('01011010', ParityPair(i=1, j=3, negated=0)),
])
def test_classify(text, expected):
    assert classify(parse_truth_table(text)) == expected


def test_classify_refuses_partial():
    with pytest.raises(PartialFunctionError):
        classify(parse_truth_table('0**1'))


def test_classification_json():
    assert ParityPair(i=1, j=2).to_json() == \
        {'kind': 'parity_pair', 'i': 1, 'j': 2, 'negated': 0}
    assert NotExactOneQuery(reason='and_type_on_two').to_json() == \
        {'kind': 'not_exact_one_query', 'reason': 'and_type_on_two'}
    majority = classify(parse_truth_table('00010111'))
    assert majority.to_json()['t'] == 3
    for cl in (Constant(value=1), Dictator(i=3, negated=1), majority):
        assert classification_from_json(cl.to_json()) == cl


@pytest.mark.parametrize('kwargs', [
    {'i': 2, 'j': 1},
    {'i': 1, 'j': 1},
    {'i': 1, 'j': 2, 'negated': 2},
])
def test_parity_pair_validation(kwargs):
    with pytest.raises(ValidationError):
        ParityPair(**kwargs)


def test_reason_fields_are_validated():
    with pytest.raises(ValidationError):
        NotExactOneQuery(reason='depends_on_too_many')
    with pytest.raises(ValidationError):
        NotExactOneQuery(reason='and_type_on_two', t=2)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_every_classification_describes_its_function(n):
    for f in enumerate_all(n):
        assert classification_matches(classify(f), f)


def test_classification_matches_rejects_wrong_description():
    f = parse_truth_table('0011')
    assert not classification_matches(Dictator(i=2), f)
    assert not classification_matches(Dictator(i=3), f)
    assert not classification_matches(ParityPair(i=1, j=2), f)


def test_two_variable_case_split():
    # зависимость ровно от двух переменных: либо XOR/XNOR, либо AND_2 с
    # точностью до отрицаний и перестановок
    and2 = npn_canonical(parse_truth_table('0001'))[0]
    for n in (2, 3):
        for f in enumerate_all(n):
            deps = sorted(dependent_set(f))
            if len(deps) != 2:
                continue
            code = two_variable_code(f, *deps)
            restricted = parse_truth_table(code)
            if code in ('0110', '1001'):
                assert isinstance(classify(f), ParityPair)
            else:
                assert npn_canonical(restricted)[0] == and2
                assert classify(f) == NotExactOneQuery(reason='and_type_on_two')


def _mapped(t, i):
    return inverse_transform(t).perm[i - 1]


def test_classify_is_transform_equivariant_for_exact_family():
    for f in enumerate_all(3):
        cl = classify(f)
        if not is_exact_family(cl):
            continue
        for t in all_transforms(3):
            g = classify(apply_transform(f, t))
            assert g.kind == cl.kind
            if isinstance(cl, Dictator):
                assert g.i == _mapped(t, cl.i)
            else:
                assert {g.i, g.j} == {_mapped(t, cl.i), _mapped(t, cl.j)}


def test_classify_keeps_reason_under_transforms():
    rng = np.random.default_rng(2)
    for _ in range(300):
        f = random_function(3, rng)
        g = apply_transform(f, random_transform(3, rng))
        a, b = classify(f), classify(g)
        assert a.kind == b.kind
        if isinstance(a, NotExactOneQuery):
            assert a == b


# ============================================================================
# Синтез схем
# ============================================================================
def test_parity_pair_amplitudes():
    table = amplitude_table(synthesize(ParityPair(i=1, j=2), 2))
    assert [table[(i, b, 0)] for i in (1, 2) for b in (0, 1)] == \
        [HALF, -HALF, HALF, -HALF]


def test_dictator_on_one_variable():
    c = synthesize(Dictator(i=1), 1)
    for x in (0, 1):
        assert outcome_probability(run_circuit(c, x), c.measurement, x) == 1


def test_negated_parity_is_relabeled_deutsch():
    plain = synthesize(ParityPair(i=1, j=2, negated=0), 2)
    negated = synthesize(ParityPair(i=1, j=2, negated=1), 2)
    assert is_exact(negated, parse_truth_table('1001'))
    assert dumps_circuit(plain) != dumps_circuit(negated)
    assert plain.unitaries[0].tolist() == negated.unitaries[0].tolist()


@pytest.mark.parametrize('cl', [
    Constant(value=0),
    NotExactOneQuery(reason='and_type_on_two'),
])
def test_cannot_synthesize(cl):
    with pytest.raises(NotSynthesizableError):
        synthesize(cl, 2)


def test_synthesis_checks_indices():
    with pytest.raises(VariableIndexError):
        synthesize(ParityPair(i=1, j=3), 2)


def test_synthesis_is_deterministic():
    cl = ParityPair(i=2, j=3, negated=1)
    assert dumps_circuit(synthesize(cl, 3)) == dumps_circuit(synthesize(cl, 3))


@pytest.mark.parametrize('n', [1, 2, 3])
def test_synthesized_circuits_satisfy_orthogonality(n):
    for f in enumerate_all(n):
        cl = classify(f)
        if not is_exact_family(cl):
            continue
        c = synthesize(cl, n)
        assert c.T == 1 and c.K == 1
        assert is_exact(c, f)
        assert amplitude_table(c).is_normalized()
        for x in range(f.size):
            for y in range(f.size):
                if f.value(x) != f.value(y):
                    assert lemma1_sum(c, x, y) == 1


@pytest.mark.parametrize('text, expected', [
    ('0110', True),
    ('0001', False),
    ('0011', True),
    ('0000', False),
    ('00010111', False),
])
def test_verify_family(text, expected):
    assert verify_family(parse_truth_table(text)) is expected


def test_verify_family_on_all_functions_of_four_variables():
    count = sum(verify_family(f) for f in enumerate_all(4))
    assert count == 20


def test_separation():
    s = separation(parse_truth_table('0110'))
    assert (s.decision_tree_depth, s.quantum_queries) == (2, 1)
    s = separation(parse_truth_table('0011'))
    assert (s.decision_tree_depth, s.quantum_queries) == (1, 1)
    with pytest.raises(NotSynthesizableError):
        separation(parse_truth_table('0001'))


# ============================================================================
# Дойч-Йожа
# ============================================================================
def test_deutsch_jozsa_two():
    table, c = deutsch_jozsa(2)
    assert table.to_text() == '0110'
    assert c.T == 1
    assert is_exact(c, table)


def test_deutsch_jozsa_four():
    table, c = deutsch_jozsa(4)
    assert table.to_text() == '0**1*11**11*1**0'
    assert is_exact(c, table)
    # постоянный вход 1111: глобальная фаза -1, исход 0
    state = run_circuit(c, 0b1111)
    assert outcome_probability(state, c.measurement, 0) == 1


def test_deutsch_jozsa_ignores_off_domain():
    table, c = deutsch_jozsa(4)
    # вход веса 1 вне обещания: вероятность ошибки не нулевая, но не считается
    state = run_circuit(c, 0b1000)
    assert outcome_probability(state, c.measurement, 0) != 1
    assert is_exact(c, table)


@pytest.mark.parametrize('n', [1, 3, 5, 6])
def test_deutsch_jozsa_needs_even_n(n):
    with pytest.raises(NotSynthesizableError):
        deutsch_jozsa(n)
