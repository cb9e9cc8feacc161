"""Text format for trees.

    tree ::= "(" "w" "[" name* "]" tree* ")" | "zero" | "(" "nat" <k> ")"

Printing always emits the desugared form.
"""

from __future__ import annotations

import re

from dplump.container import NAME_RE, BaseSignature, PlumpError
from dplump.wtree import Tree, make_node, nat_tree

_TOKEN_RE = re.compile(r"\s*(?:(?P<punct>[()\[\]])|(?P<atom>[^\s()\[\]]+))")


class TreeSyntaxError(PlumpError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"at position {pos}: {message}")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise TreeSyntaxError("unexpected character", pos)
            break
        tok = m.group("punct") or m.group("atom")
        tokens.append((tok, m.start(m.lastgroup)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, sig: BaseSignature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return None, len(self.text)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, want: str):
        tok, pos = self.next()
        if tok != want:
            found = "end of input" if tok is None else repr(tok)
            raise TreeSyntaxError(f"expected {want!r}, found {found}", pos)

    def tree(self) -> Tree:
        tok, pos = self.next()
        if tok == "zero":
            return make_node(self.sig, (), ())
        if tok != "(":
            found = "end of input" if tok is None else repr(tok)
            raise TreeSyntaxError(f"expected '(' or 'zero', found {found}", pos)
        head, hpos = self.next()
        if head == "nat":
            k, kpos = self.next()
            if k is None or not (k.isascii() and k.isdigit()):
                raise TreeSyntaxError("expected a natural number after 'nat'", kpos)
            self.expect(")")
            return nat_tree(self.sig, int(k))
        if head != "w":
            raise TreeSyntaxError(f"expected 'w' or 'nat', found {head!r}", hpos)
        self.expect("[")
        tag = []
        while True:
            tok, tpos = self.next()
            if tok == "]":
                break
            if tok is None or not NAME_RE.match(tok):
                found = "end of input" if tok is None else repr(tok)
                raise TreeSyntaxError(f"expected shape name or ']', found {found}", tpos)
            tag.append(tok)
        children = []
        while self.peek()[0] != ")":
            if self.peek()[0] is None:
                raise TreeSyntaxError("unclosed '('", pos)
            children.append(self.tree())
        self.next()
        return make_node(self.sig, tag, children)

    def parse(self) -> Tree:
        u = self.tree()
        tok, pos = self.peek()
        if tok is not None:
            raise TreeSyntaxError(f"trailing input {tok!r}", pos)
        return u


def parse_tree(text: str, sig: BaseSignature) -> Tree:
    return _Parser(text, sig).parse()


def print_tree(u: Tree) -> str:
    # iterative so that long chains print without hitting the recursion limit
    out: list[str] = []
    stack: list[object] = [u]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append("(w [" + " ".join(item.tag) + "]")
        stack.append(")")
        for child in reversed(item.children):
            stack.append(child)
            stack.append(" ")
    return "".join(out)
