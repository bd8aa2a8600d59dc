from exact1q.kernel.errors import DimensionMismatchError
from exact1q.kernel.logger import get_logger
from exact1q.models.boolfn import TruthTable, require_nonempty, variable_half
from .objects import DecisionTree, Leaf, Node


logger = get_logger('dtree')


def evaluate_tree(t: DecisionTree, x: int, n: int) -> int:
    '''
    Вычислить дерево на входе x (индекс, x_1 - старший бит).

    Начинаем с корня, в узле спрашиваем x_var и идем в lo или hi.
    '''
    node = t
    while isinstance(node, Node):
        if not 1 <= node.var <= n:
            raise DimensionMismatchError(
                f'tree queries x_{node.var}, but n = {n}'
            )
        node = node.hi if (x >> (n - node.var)) & 1 else node.lo
    return node.bit


def tree_depth(t: DecisionTree) -> int:
    if isinstance(t, Leaf):
        return 0
    return 1 + max(tree_depth(t.lo), tree_depth(t.hi))


def tree_variables(t: DecisionTree) -> set[int]:
    if isinstance(t, Leaf):
        return set()
    return {t.var} | tree_variables(t.lo) | tree_variables(t.hi)


class _TreeSearch:
    '''
    Точный перебор деревьев с мемоизацией по сужению (values, domain).

    Кеш живет в пределах одного вызова.
    '''
    def __init__(self, f: TruthTable):
        self.n = f.n
        self.values = f.values
        self.memo: dict[tuple[int, int], tuple[int, int]] = {}
        self.halves = [
            (variable_half(f.n, i, 0), variable_half(f.n, i, 1))
            for i in range(1, f.n + 1)
        ]

    def depth(self, domain: int) -> tuple[int, int]:
        '''(D, переменная корня) для сужения на domain; переменная 0 - лист.'''
        key = (self.values & domain, domain)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        ones = self.values & domain
        if ones == 0 or ones == domain:
            result = (0, 0)
        else:
            result = None
            for i, (low, high) in enumerate(self.halves, start=1):
                lo, hi = domain & low, domain & high
                if not lo or not hi:
                    continue  # переменная уже известна на этом сужении
                d = 1 + max(self.depth(lo)[0], self.depth(hi)[0])
                # при равенстве остается меньший номер
                if result is None or d < result[0]:
                    result = (d, i)
        self.memo[key] = result
        return result

    def build(self, domain: int) -> DecisionTree:
        d, var = self.depth(domain)
        if var == 0:
            # вне области лист может быть любым, выбираем 0
            return Leaf(1 if self.values & domain else 0)
        low, high = self.halves[var - 1]
        return Node(var, self.build(domain & low), self.build(domain & high))


def decision_tree_depth(f: TruthTable) -> int:
    '''D(f) = min_T D(T) по всем деревьям, верным на области f.'''
    require_nonempty(f)
    search = _TreeSearch(f)
    d = search.depth(f.domain)[0]
    logger.debug(
        'D(%s) = %d, memo size %d', f.to_text(), d, len(search.memo)
    )
    return d


def build_optimal_tree(f: TruthTable) -> DecisionTree:
    require_nonempty(f)
    return _TreeSearch(f).build(f.domain)


def and_or_tree() -> DecisionTree:
    '''Дерево глубины 3 для f(x) = x_1 and (x_2 or x_3).'''
    return Node(
        1,
        Leaf(0),
        Node(2, Node(3, Leaf(0), Leaf(1)), Leaf(1)),
    )


def tree_to_json(t: DecisionTree) -> dict:
    if isinstance(t, Leaf):
        return {'leaf': t.bit}
    return {'var': t.var, 'lo': tree_to_json(t.lo), 'hi': tree_to_json(t.hi)}


def tree_from_json(data: dict) -> DecisionTree:
    if 'leaf' in data:
        return Leaf(int(data['leaf']))
    return Node(
        int(data['var']),
        tree_from_json(data['lo']),
        tree_from_json(data['hi']),
    )


def render_tree(t: DecisionTree, indent: str = '') -> str:
    '''Текстовое изображение дерева, по строке на вершину.'''
    if isinstance(t, Leaf):
        return f'{indent}-> {t.bit}'
    return '\n'.join([
        f'{indent}x{t.var}?',
        f'{indent}  0:',
        render_tree(t.lo, indent + '    '),
        f'{indent}  1:',
        render_tree(t.hi, indent + '    '),
    ])
