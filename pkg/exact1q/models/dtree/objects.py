from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Leaf:
    bit: int


@dataclass(frozen=True)
class Node:
    '''Запрос переменной x_var: lo - поддерево для x_var = 0, hi - для 1.'''
    var: int
    lo: 'DecisionTree'
    hi: 'DecisionTree'


DecisionTree = Union[Leaf, Node]
