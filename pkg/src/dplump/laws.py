"""Executable law checkers, a seeded random tree generator, and the suite runner.

Every checker returns True on every input for a correct implementation of
the relations. Well-foundedness of ``covered`` cannot be decided, so it is
exercised through refutable consequences only: irreflexivity, asymmetry,
and strictly shrinking greedy descents.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from dplump.container import BaseSignature, arity
from dplump.listorder import greedy_descend
from dplump.order import clear_memo, covered, covered_naive, le, le_naive
from dplump.syntax import print_tree
from dplump.wtree import ZERO, Tree, join2, joinN, size

# Generator bias: number of base names in a drawn shape, and the weight of a
# base name of arity a is 1 / (1 + a).
SHAPE_LENGTH_WEIGHTS = (3, 4, 2, 1)
ORACLE_SIZE = 12

WF_NOTE = (
    "well-foundedness of covered is tested only via refutable consequences "
    "(irreflexivity, asymmetry, strictly shrinking greedy descents)"
)


@dataclass(frozen=True)
class GenConfig:
    signature: BaseSignature
    seed: int = 0
    size_budget: int = 12
    cases: int = 100

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.size_budget < 1:
            raise ValueError("size_budget must be at least 1")
        if self.cases < 1:
            raise ValueError("cases must be at least 1")


def _draw_shape(sig: BaseSignature, rng: random.Random, room: int) -> list[str]:
    length = rng.choices(range(len(SHAPE_LENGTH_WEIGHTS)), weights=SHAPE_LENGTH_WEIGHTS)[0]
    tag: list[str] = []
    for _ in range(length):
        fit = [n for n, a in sig.shapes.items() if a <= room]
        if not fit:
            break
        name = rng.choices(fit, weights=[1 / (1 + sig.shapes[n]) for n in fit])[0]
        tag.append(name)
        room -= sig.shapes[name]
    return tag


def _gen(sig: BaseSignature, rng: random.Random, budget: int) -> Tree:
    tag = _draw_shape(sig, rng, budget - 1)
    k = arity(sig, tag)
    spare = budget - 1 - k
    cuts = sorted(rng.randint(0, spare) for _ in range(max(k - 1, 0)))
    shares = [b - a for a, b in zip([0] + cuts, cuts + [spare])][:k]
    return Tree(tuple(tag), tuple(_gen(sig, rng, 1 + s) for s in shares))


def random_tree(cfg: GenConfig, rng: random.Random) -> Tree:
    return _gen(cfg.signature, rng, cfg.size_budget)


def _lift(sig: BaseSignature, x: Tree) -> Tree:
    """A node all of whose children are `x`, using the smallest positive base arity."""
    positive = [(a, n) for n, a in sig.shapes.items() if a > 0]
    if not positive:
        return x
    a, name = min(positive)
    return Tree((name,), (x,) * a)


def check_refl(u: Tree) -> bool:
    return le(u, u)


def _trans_flex(u: Tree, v: Tree, w: Tree) -> dict[str, bool]:
    le_uv, le_vw, le_uw = le(u, v), le(v, w), le(u, w)
    cov_uv, cov_vw, cov_uw = covered(u, v), covered(v, w), covered(u, w)
    return {
        "trans_le": not (le_uv and le_vw) or le_uw,
        "trans_covered": not (cov_uv and cov_vw) or cov_uw,
        "left_flex": not (le_uv and cov_vw) or cov_uw,
        "right_flex": not (cov_uv and le_vw) or cov_uw,
    }


def check_trans_flex(u: Tree, v: Tree, w: Tree) -> bool:
    return all(_trans_flex(u, v, w).values())


def check_cov_implies_le(u: Tree, v: Tree) -> bool:
    return not covered(u, v) or le(u, v)


def _lub_universal(us: Sequence[Tree], v: Tree) -> tuple[bool, bool]:
    j = joinN(us)
    iff = le(j, v) == all(le(u, v) for u in us)
    cov = not all(covered(u, v) for u in us) or covered(j, v)
    return iff, cov


def check_lub_universal(us: Sequence[Tree], v: Tree) -> bool:
    return all(_lub_universal(us, v))


def check_directed(u: Tree, v: Tree, w: Tree) -> bool:
    return not (covered(u, w) and covered(v, w)) or covered(join2(u, v), w)


def check_least(u: Tree) -> bool:
    return le(ZERO, u)


def check_upper_bound(u: Tree) -> bool:
    return all(covered(c, u) and le(c, u) for c in u.children)


def _wf(u: Tree, v: Tree) -> tuple[bool, bool]:
    return not covered(u, u), not (covered(u, v) and covered(v, u))


def check_wf_consequences(u: Tree, v: Tree) -> bool:
    return all(_wf(u, v))


def check_descent(u: Tree) -> bool:
    chain = greedy_descend(u)
    return not chain[-1].children and all(
        covered(b, a) and size(b) < size(a) for a, b in zip(chain, chain[1:])
    )


def check_oracle_agreement(u: Tree, v: Tree) -> bool:
    return le(u, v) == le_naive(u, v) and covered(u, v) == covered_naive(u, v)


@dataclass
class LawResult:
    name: str
    attempted: int = 0
    passed: int = 0
    counterexample: tuple[str, ...] | None = None

    def record(self, ok: bool, witness: Callable[[], Sequence[Tree]]) -> None:
        self.attempted += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = tuple(print_tree(t) for t in witness())

    def line(self) -> str:
        s = f"{self.name} {self.passed}/{self.attempted}"
        if self.counterexample is not None:
            s += " counterexample: " + " ; ".join(self.counterexample)
        return s


@dataclass
class LawReport:
    seed: int
    laws: dict[str, LawResult] = field(default_factory=dict)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    def law(self, name: str) -> LawResult:
        if name not in self.laws:
            self.laws[name] = LawResult(name)
        return self.laws[name]

    @property
    def ok(self) -> bool:
        return all(r.passed == r.attempted for r in self.laws.values())

    def to_text(self) -> str:
        lines = [f"seed {self.seed}"]
        lines += [r.line() for r in self.laws.values()]
        lines += [f"# {n}" for n in self.notes]
        lines.append(f"# elapsed {self.elapsed:.2f}s")
        return "\n".join(lines)


LAW_NAMES = (
    "refl",
    "trans_le",
    "trans_covered",
    "left_flex",
    "right_flex",
    "covered_implies_le",
    "lub_le_iff",
    "lub_covered",
    "least",
    "upper_bound",
    "directed",
    "covered_irrefl",
    "covered_asym",
    "descent",
    "oracle_agreement",
)


def _instances(cfg: GenConfig, rng: random.Random):
    """Per case: one independent triple and one triple built so the premises hold."""
    sig = cfg.signature
    u, v, w = (random_tree(cfg, rng) for _ in range(3))
    yield u, v, w
    v2 = join2(u, v)
    yield u, v2, _lift(sig, join2(v2, w))


def run_suite(cfg: GenConfig) -> LawReport:
    rng = random.Random(cfg.seed)
    report = LawReport(seed=cfg.seed)
    for name in LAW_NAMES:
        report.law(name)
    start = time.perf_counter()
    clear_memo()
    for _ in range(cfg.cases):
        for u, v, w in _instances(cfg, rng):
            report.law("refl").record(check_refl(u), lambda: [u])
            for name, ok in _trans_flex(u, v, w).items():
                report.law(name).record(ok, lambda: [u, v, w])
            report.law("covered_implies_le").record(check_cov_implies_le(u, w), lambda: [u, w])
            us = [u, v, w][: rng.randint(1, 3)]
            iff, cov = _lub_universal(us, w)
            report.law("lub_le_iff").record(iff, lambda: [*us, w])
            report.law("lub_covered").record(cov, lambda: [*us, w])
            report.law("least").record(check_least(v), lambda: [v])
            report.law("upper_bound").record(check_upper_bound(w), lambda: [w])
            report.law("directed").record(check_directed(u, v, w), lambda: [u, v, w])
            irrefl, asym = _wf(u, w)
            report.law("covered_irrefl").record(irrefl, lambda: [u])
            report.law("covered_asym").record(asym, lambda: [u, w])
            report.law("descent").record(check_descent(w), lambda: [w])
            if size(u) <= ORACLE_SIZE and size(v) <= ORACLE_SIZE:
                report.law("oracle_agreement").record(
                    check_oracle_agreement(u, v), lambda: [u, v]
                )
    report.elapsed = time.perf_counter() - start
    report.notes = [
        WF_NOTE,
        f"oracle_agreement runs on pairs with both sizes <= {ORACLE_SIZE}",
        f"generator: shape length weights {SHAPE_LENGTH_WEIGHTS}, base name weight 1/(1+arity)",
        "each case checks one independent triple and one triple built to satisfy the premises",
    ]
    return report


@dataclass
class OracleReport:
    seed: int
    pairs: int = 0
    le_agree: int = 0
    covered_agree: int = 0
    disagreements: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.le_agree == self.pairs and self.covered_agree == self.pairs

    def to_text(self) -> str:
        lines = [
            f"seed {self.seed}",
            f"pairs {self.pairs}",
            f"le agree {self.le_agree}/{self.pairs}",
            f"covered agree {self.covered_agree}/{self.pairs}",
        ]
        total = 2 * self.pairs
        pct = 100.0 * (self.le_agree + self.covered_agree) / total if total else 100.0
        lines.append(f"agreement {pct:.2f}%")
        for rel, a, b in self.disagreements[:10]:
            lines.append(f"disagree {rel}: {a} ; {b}")
        return "\n".join(lines)


def _oracle_pairs(cfg: GenConfig, rng: random.Random):
    u = random_tree(cfg, rng)
    v = random_tree(cfg, rng)
    yield u, v
    # a sub-family join of some inner node's children is covered by that node
    inner = [t for t in _nodes(v) if t.children]
    if inner:
        t = rng.choice(inner)
        k = rng.randint(1, len(t.children))
        yield joinN(rng.sample(t.children, k)), t
    else:
        yield v, u


def _nodes(u: Tree):
    stack = [u]
    while stack:
        t = stack.pop()
        yield t
        stack.extend(t.children)


def oracle_compare(cfg: GenConfig) -> OracleReport:
    rng = random.Random(cfg.seed)
    report = OracleReport(seed=cfg.seed)
    clear_memo()
    for _ in range(cfg.cases):
        for u, v in _oracle_pairs(cfg, rng):
            report.pairs += 1
            if le(u, v) == le_naive(u, v):
                report.le_agree += 1
            else:
                report.disagreements.append(("le", print_tree(u), print_tree(v)))
            if covered(u, v) == covered_naive(u, v):
                report.covered_agree += 1
            else:
                report.disagreements.append(("covered", print_tree(u), print_tree(v)))
    return report
