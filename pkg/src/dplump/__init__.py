"""Directed plump ordering on W-types over finitely-branching list-closed containers."""

from dplump.container import (
    BaseSignature,
    InvalidShapeError,
    PlumpError,
    SignatureError,
    arity,
    concat_shapes,
    parse_signature,
)
from dplump.wtree import (
    ArityError,
    Tree,
    join2,
    joinN,
    make_node,
    nat_tree,
    size,
    tree_equal,
    tree_hash,
    zero,
)
from dplump.order import clear_memo, covered, covered_naive, le, le_naive
from dplump.listorder import ElemOrder, check_perm_invariance, greedy_descend, list_lt
from dplump.syntax import TreeSyntaxError, parse_tree, print_tree

__all__ = [
    "ArityError",
    "BaseSignature",
    "ElemOrder",
    "InvalidShapeError",
    "PlumpError",
    "SignatureError",
    "Tree",
    "TreeSyntaxError",
    "arity",
    "check_perm_invariance",
    "clear_memo",
    "concat_shapes",
    "covered",
    "covered_naive",
    "greedy_descend",
    "join2",
    "joinN",
    "le",
    "le_naive",
    "list_lt",
    "make_node",
    "nat_tree",
    "parse_signature",
    "parse_tree",
    "print_tree",
    "size",
    "tree_equal",
    "tree_hash",
    "zero",
]
