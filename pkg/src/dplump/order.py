"""Decision procedures for the plump relations ``le`` (u ≤ v) and ``covered`` (u ◁ v).

The two relations are the least ones closed under

    covered(u, v)  if  le(u, ⋁ S) for some non-empty family S of v's children
    le(u, v)       if  covered(c, v) for every child c of u

`le`/`covered` pick the whole child family of v as the witness for S, which
is optimal because every sub-family join is ≤ the full join. `le_naive` and
`covered_naive` enumerate every non-empty sub-family instead and serve as the
oracle for that shortcut.
"""

from __future__ import annotations

import itertools
import threading

from dplump.wtree import Tree, joinN

_MEMO_LIMIT = 1 << 20


class Decider:
    """Evaluates the relations with an optional memo table.

    ``max_depth`` records the deepest nesting of le/covered calls seen so
    far; the recursion always strictly shrinks size(u) + size(v).
    """

    def __init__(self, memo: bool = True):
        self.memo = memo
        self._le: dict[tuple[Tree, Tree], bool] = {}
        self._cov: dict[tuple[Tree, Tree], bool] = {}
        self._lub: dict[Tree, Tree] = {}
        self.depth = 0
        self.max_depth = 0

    def clear(self) -> None:
        self._le.clear()
        self._cov.clear()
        self._lub.clear()
        self.max_depth = 0

    def children_join(self, v: Tree) -> Tree:
        if not self.memo:
            return joinN(v.children)
        j = self._lub.get(v)
        if j is None:
            j = joinN(v.children)
            self._lub[v] = j
        return j

    def _store(self, table, key, value):
        if len(table) >= _MEMO_LIMIT:
            table.clear()
        table[key] = value

    def le(self, u: Tree, v: Tree) -> bool:
        key = (u, v)
        if self.memo:
            hit = self._le.get(key)
            if hit is not None:
                return hit
        self.depth += 1
        self.max_depth = max(self.max_depth, self.depth)
        try:
            result = all(self.covered(c, v) for c in u.children)
        finally:
            self.depth -= 1
        if self.memo:
            self._store(self._le, key, result)
        return result

    def covered(self, u: Tree, v: Tree) -> bool:
        if not v.children:
            return False
        key = (u, v)
        if self.memo:
            hit = self._cov.get(key)
            if hit is not None:
                return hit
        self.depth += 1
        self.max_depth = max(self.max_depth, self.depth)
        try:
            result = self.le(u, self.children_join(v))
        finally:
            self.depth -= 1
        if self.memo:
            self._store(self._cov, key, result)
        return result


_local = threading.local()


def _default() -> Decider:
    d = getattr(_local, "decider", None)
    if d is None:
        d = _local.decider = Decider()
    return d


def le(u: Tree, v: Tree, *, memo: bool = True) -> bool:
    if not memo:
        return Decider(memo=False).le(u, v)
    return _default().le(u, v)


def covered(u: Tree, v: Tree, *, memo: bool = True) -> bool:
    if not memo:
        return Decider(memo=False).covered(u, v)
    return _default().covered(u, v)


def clear_memo() -> None:
    """Drop the calling thread's memo table."""
    d = getattr(_local, "decider", None)
    if d is not None:
        d.clear()


def _nonempty_subfamilies(children: tuple[Tree, ...]):
    idx = range(len(children))
    for k in range(1, len(children) + 1):
        for combo in itertools.combinations(idx, k):
            yield [children[i] for i in combo]


def le_naive(u: Tree, v: Tree) -> bool:
    return all(covered_naive(c, v) for c in u.children)


def covered_naive(u: Tree, v: Tree) -> bool:
    return any(le_naive(u, joinN(s)) for s in _nonempty_subfamilies(v.children))
