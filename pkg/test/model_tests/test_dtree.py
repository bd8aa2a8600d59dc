import numpy as np
import pytest

from exact1q.kernel.errors import EmptyDomainError
from exact1q.models.boolfn import (
    TruthTable,
    apply_transform,
    enumerate_all,
    parse_truth_table,
    random_function,
    random_transform,
)
from exact1q.models.dtree import (
    Leaf,
    Node,
    build_optimal_tree,
    decision_tree_depth,
    evaluate_tree,
    and_or_tree,
    render_tree,
    tree_depth,
    tree_from_json,
    tree_to_json,
    tree_variables,
)


AND_OR = parse_truth_table('00000111')  # x1 and (x2 or x3)


@pytest.mark.parametrize('x, expected', [(0b000, 0), (0b110, 1), (0b101, 1),
                                         (0b100, 0), (0b011, 0)])
def test_and_or_tree_evaluation(x, expected):
    assert evaluate_tree(and_or_tree(), x, 3) == expected


def test_and_or_tree_matches_function_everywhere():
    t = and_or_tree()
    assert tree_depth(t) == 3
    assert all(evaluate_tree(t, x, 3) == AND_OR.value(x) for x in range(8))


def test_leaf_and_single_query_depth():
    assert evaluate_tree(Leaf(1), 5, 3) == 1
    assert tree_depth(Leaf(0)) == 0
    assert tree_depth(Node(1, Leaf(0), Leaf(1))) == 1


@pytest.mark.parametrize('text, depth', [
    ('0011', 1),
    ('00001111', 1),
    ('0110', 2),
    ('00000111', 3),
    ('01101001', 3),
    ('0000', 0),
])
def test_decision_tree_depth(text, depth):
    assert decision_tree_depth(parse_truth_table(text)) == depth


def test_optimal_tree_for_dictator_and_constant():
    assert build_optimal_tree(parse_truth_table('0011')) == \
        Node(1, Leaf(0), Leaf(1))
    assert build_optimal_tree(parse_truth_table('0000')) == Leaf(0)


def test_partial_function_depth():
    # на области {00, 11} достаточно одного запроса
    f = parse_truth_table('0**1')
    assert decision_tree_depth(f) == 1
    t = build_optimal_tree(f)
    assert all(evaluate_tree(t, x, 2) == f.value(x) for x in f.domain_inputs())


def test_empty_domain():
    with pytest.raises(EmptyDomainError):
        decision_tree_depth(TruthTable(2, 0, 0))


@pytest.mark.parametrize('n', [1, 2, 3])
def test_optimal_trees_are_correct_and_optimal(n):
    for f in enumerate_all(n):
        t = build_optimal_tree(f)
        assert tree_depth(t) == decision_tree_depth(f)
        assert all(evaluate_tree(t, x, n) == f.value(x) for x in range(f.size))


def test_depth_is_transform_invariant():
    rng = np.random.default_rng(3)
    for _ in range(200):
        f = random_function(3, rng)
        g = apply_transform(f, random_transform(3, rng))
        assert decision_tree_depth(f) == decision_tree_depth(g)


def test_no_variable_repeats_on_a_path():
    def paths_ok(t, used):
        if isinstance(t, Leaf):
            return True
        if t.var in used:
            return False
        return paths_ok(t.lo, used | {t.var}) and paths_ok(t.hi, used | {t.var})

    rng = np.random.default_rng(5)
    for _ in range(50):
        assert paths_ok(build_optimal_tree(random_function(4, rng)),
                        frozenset())


def test_tree_json_round_trip_and_render():
    t = and_or_tree()
    data = tree_to_json(t)
    assert data['var'] == 1 and data['lo'] == {'leaf': 0}
    assert tree_from_json(data) == t
    assert tree_variables(t) == {1, 2, 3}
    text = render_tree(t)
    assert text.splitlines()[0] == 'x1?'
    assert '-> 1' in text
