from .objects import DecisionTree, Leaf, Node

from .tree import evaluate_tree, tree_depth, tree_variables, \
    decision_tree_depth, build_optimal_tree, and_or_tree, tree_to_json, \
    tree_from_json, render_tree
