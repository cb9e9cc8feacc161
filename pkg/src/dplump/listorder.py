"""The list ordering ⊏ over an arbitrary strict order, and greedy ◁-descents on trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from dplump.wtree import Tree, joinN


@dataclass(frozen=True)
class ElemOrder:
    lt: Callable[[Any, Any], bool]


NUMERIC_LT = ElemOrder(lambda a, b: a < b)


def list_lt(xs: Sequence, ys: Sequence, ord: ElemOrder = NUMERIC_LT) -> bool:
    """True iff `ys` is non-empty and each element of `xs` is below some element of `ys`.

    The index map in the rule is an arbitrary function, so it can be chosen
    element by element; no matching is needed.
    """
    if not ys:
        return False
    return all(any(ord.lt(x, y) for y in ys) for x in xs)


def _is_permutation(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    rest = list(b)
    for x in a:
        for i, y in enumerate(rest):
            if x == y:
                del rest[i]
                break
        else:
            return False
    return True


def check_perm_invariance(xs, ys, perm_xs, perm_ys, ord: ElemOrder = NUMERIC_LT) -> bool:
    if not (_is_permutation(xs, perm_xs) and _is_permutation(ys, perm_ys)):
        raise ValueError("perm_xs/perm_ys must be permutations of xs/ys")
    return list_lt(xs, ys, ord) == list_lt(perm_xs, perm_ys, ord)


def greedy_descend(u: Tree) -> list[Tree]:
    """Chain u = w0, w1, ..., wk with w(i+1) the join of w(i)'s children, ending at a leaf."""
    chain = [u]
    while chain[-1].children:
        chain.append(joinN(chain[-1].children))
    return chain
