import pytest
from hypothesis import strategies as st

from dplump.container import BaseSignature
from dplump.wtree import Tree, nat_tree

SP = BaseSignature({"s": 1, "p": 2})
# adds an arity-0 base shape so non-empty leaf tags show up
SPC = BaseSignature({"s": 1, "p": 2, "c": 0})


@pytest.fixture
def sig():
    return SP


def nat(n):
    return nat_tree(SP, n)


@st.composite
def trees(draw, sig=SPC, budget=10):
    room = budget - 1
    tag = []
    for _ in range(draw(st.integers(0, 3))):
        fit = [n for n, a in sig.shapes.items() if a <= room]
        if not fit:
            break
        name = draw(st.sampled_from(fit))
        tag.append(name)
        room -= sig.shapes[name]
    k = sum(sig.shapes[n] for n in tag)
    spare = budget - 1 - k
    children = []
    for _ in range(k):
        share = draw(st.integers(0, spare))
        spare -= share
        children.append(draw(trees(sig, 1 + share)))
    return Tree(tuple(tag), tuple(children))


small_trees = trees(budget=7)
