"""Base signatures and the list-closure of a container.

A base signature assigns each shape name a finite arity. Shapes of the
closed container are finite sequences of base names; the arity of a sequence
is the sum of its members' arities, so concatenation acts as the coproduct
of shapes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple

Shape = Tuple[str, ...]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PlumpError(Exception):
    """Base class for errors raised by this package."""


class SignatureError(PlumpError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidShapeError(PlumpError):
    pass


@dataclass(frozen=True)
class BaseSignature:
    """Finite map from base shape names to arities."""

    shapes: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        checked = {}
        for name, n in dict(self.shapes).items():
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise SignatureError(f"invalid shape name {name!r}")
            if isinstance(n, bool) or not isinstance(n, int) or n < 0:
                raise SignatureError(f"arity of {name!r} must be a natural number, got {n!r}")
            checked[name] = n
        object.__setattr__(self, "shapes", MappingProxyType(checked))

    def __hash__(self):
        return hash(frozenset(self.shapes.items()))

    def __eq__(self, other):
        if not isinstance(other, BaseSignature):
            return NotImplemented
        return dict(self.shapes) == dict(other.shapes)

    def __contains__(self, name):
        return name in self.shapes

    def names(self) -> list[str]:
        return list(self.shapes)

    def base_arity(self, name: str) -> int:
        try:
            return self.shapes[name]
        except KeyError:
            raise InvalidShapeError(f"unknown shape name {name!r}") from None

    def validate_shape(self, s: Iterable[str]) -> Shape:
        s = tuple(s)
        for name in s:
            self.base_arity(name)
        return s


def arity(sig: BaseSignature, s: Iterable[str]) -> int:
    """Number of child positions of shape `s`: 0 for the empty shape, additive under concatenation."""
    return sum(sig.base_arity(name) for name in s)


def concat_shapes(s1: Iterable[str], s2: Iterable[str]) -> Shape:
    return tuple(s1) + tuple(s2)


def parse_signature(text: str) -> BaseSignature:
    """Read the line format ``shape <name> <arity>`` with ``#`` comments."""
    shapes: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "shape":
            raise SignatureError(f"expected 'shape <name> <arity>', got {raw.strip()!r}", lineno)
        _, name, n = parts
        if not NAME_RE.match(name):
            raise SignatureError(f"invalid shape name {name!r}", lineno)
        if n.startswith("-") and n[1:].isdigit():
            raise SignatureError(f"negative arity {n} for {name!r}", lineno)
        if not (n.isascii() and n.isdigit()):
            raise SignatureError(f"arity must be a decimal natural, got {n!r}", lineno)
        if name in shapes:
            raise SignatureError(f"duplicate shape name {name!r}", lineno)
        shapes[name] = int(n)
    return BaseSignature(shapes)


def load_signature(path) -> BaseSignature:
    with open(path, encoding="utf-8") as fh:
        return parse_signature(fh.read())
