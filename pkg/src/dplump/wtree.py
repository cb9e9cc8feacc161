"""Well-founded trees over a list-closed container, with the binary and n-ary joins."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from dplump.container import BaseSignature, PlumpError, Shape, arity, concat_shapes

NAT_SHAPE = "s"


class ArityError(PlumpError):
    def __init__(self, tag: Shape, expected: int, actual: int):
        self.tag = tag
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"shape [{' '.join(tag)}] takes {expected} children, got {actual}"
        )


@dataclass(frozen=True, eq=False)
class Tree:
    """A node: a shape tag plus one subtree per child position.

    The constructor does no signature checking; use `make_node` for that.
    Size and hash are computed once at construction.
    """

    tag: Shape
    children: tuple[Tree, ...] = ()
    _size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        tag = tuple(self.tag)
        children = tuple(self.children)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_size", 1 + sum(c._size for c in children))
        object.__setattr__(self, "_hash", hash((tag, tuple(c._hash for c in children))))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return tree_equal(self, other)

    def __repr__(self):
        from dplump.syntax import print_tree

        return f"Tree({print_tree(self)})"


def make_node(sig: BaseSignature, tag: Iterable[str], children: Sequence[Tree]) -> Tree:
    tag = sig.validate_shape(tag)
    children = tuple(children)
    expected = arity(sig, tag)
    if len(children) != expected:
        raise ArityError(tag, expected, len(children))
    return Tree(tag, children)


def validate(sig: BaseSignature, u: Tree) -> None:
    """Raise unless every node of `u` has as many children as its tag's arity."""
    stack = [u]
    while stack:
        node = stack.pop()
        make_node(sig, node.tag, node.children)
        stack.extend(node.children)


def zero(sig: BaseSignature | None = None) -> Tree:
    return Tree((), ())


ZERO = Tree((), ())


def join2(u: Tree, v: Tree) -> Tree:
    return Tree(concat_shapes(u.tag, v.tag), u.children + v.children)


def joinN(us: Sequence[Tree]) -> Tree:
    """Flattened join of a non-empty family: one node carrying every tag and every child.

    A singleton family is returned unchanged.
    """
    us = tuple(us)
    if not us:
        raise ValueError("joinN requires a non-empty sequence of trees")
    if len(us) == 1:
        return us[0]
    tag: Shape = ()
    children: tuple[Tree, ...] = ()
    for u in us:
        tag += u.tag
        children += u.children
    return Tree(tag, children)


def size(u: Tree) -> int:
    return u._size


def nat_tree(sig: BaseSignature, n: int) -> Tree:
    if sig.shapes.get(NAT_SHAPE) != 1:
        raise PlumpError(f"naturals need a unary shape {NAT_SHAPE!r} in the signature")
    if n < 0:
        raise ValueError("n must be a natural number")
    u = ZERO
    for _ in range(n):
        u = Tree((NAT_SHAPE,), (u,))
    return u


def tree_equal(u: Tree, v: Tree) -> bool:
    stack = [(u, v)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if (
            a._hash != b._hash
            or a._size != b._size
            or a.tag != b.tag
            or len(a.children) != len(b.children)
        ):
            return False
        stack.extend(zip(a.children, b.children))
    return True


def tree_hash(u: Tree) -> int:
    return u._hash


def subtrees(u: Tree):
    """Yield every node of `u`, root first."""
    stack = [u]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))
