"""Parsing trees for quasigroup words.

A word is a rooted binary tree whose internal nodes carry one of the six
quasigroup operations and whose leaves are generators or the pointed
idempotent ``@e``.

Grammar (all operators have equal precedence and associate to the left)::

    expr := atom (OP atom)*
    atom := IDENT | '@e' | '(' expr ')'
    OP   := '*' | '/' | '\\' | 'o' | '//' | '\\\\'

``//`` and ``\\\\`` are lexed by maximal munch, so ``a//b`` is a single
operation. ``o`` is reserved for the opposite multiplication and cannot be
used as a generator name.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Union


# -- the symmetric group on {1, 2, 3} -------------------------------------

@dataclass(frozen=True, order=True)
class S3Element:
    """A permutation of {1, 2, 3}; ``perm[i - 1]`` is the image of ``i``.

    Products compose left to right: ``i^(g*h) = (i^g)^h``.
    """

    perm: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1,2,3: {self.perm}")

    def __mul__(self, other: S3Element) -> S3Element:
        return S3Element(tuple(other.perm[i - 1] for i in self.perm))

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def inverse(self) -> S3Element:
        inv = [0, 0, 0]
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return S3Element(tuple(inv))

    @property
    def word(self) -> str:
        """Shortest spelling in ``s`` (sigma) and ``t`` (tau); '' for 1."""
        return _WORDS[self]

    @classmethod
    def from_word(cls, word: str) -> S3Element:
        """Parse a word in ``s``/``t`` (``1`` or empty for the identity)."""
        w = word.replace(" ", "").replace("*", "")
        if w in ("", "1", "e"):
            return IDENTITY
        g = IDENTITY
        for ch in w:
            if ch in "sσ":
                g = g * SIGMA
            elif ch in "tτ":
                g = g * TAU
            else:
                raise ValueError(f"bad S3 word {word!r}: letters must be s or t")
        return g

    def __str__(self) -> str:
        return self.word or "1"

    def __repr__(self) -> str:
        return f"S3Element({self})"


IDENTITY = S3Element((1, 2, 3))
SIGMA = S3Element((2, 1, 3))  # (1 2)
TAU = S3Element((1, 3, 2))  # (2 3)


def _spell() -> dict[S3Element, str]:
    words = {IDENTITY: ""}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for letter, gen in (("s", SIGMA), ("t", TAU)):
                h = g * gen
                if h not in words:
                    words[h] = words[g] + letter
                    nxt.append(h)
        frontier = nxt
    return words


_WORDS = _spell()
S3 = tuple(sorted(_WORDS, key=lambda g: (len(_WORDS[g]), _WORDS[g])))


# -- operation symbols ------------------------------------------------------

class OpSymbol(enum.Enum):
    MUL = "*"
    LDIV = "\\"
    RRDIV = "//"
    RDIV = "/"
    LLDIV = "\\\\"
    OPP = "o"

    @property
    def token(self) -> str:
        return self.value

    @property
    def g(self) -> S3Element:
        """The group element g with this operation equal to mu^g."""
        return _OP_TO_G[self]

    @classmethod
    def from_g(cls, g: S3Element) -> OpSymbol:
        return _G_TO_OP[g]

    @property
    def opposite(self) -> OpSymbol:
        return OpSymbol.from_g(SIGMA * self.g)


_OP_TO_G = {
    OpSymbol.MUL: IDENTITY,
    OpSymbol.LDIV: S3Element.from_word("t"),
    OpSymbol.RRDIV: S3Element.from_word("ts"),
    OpSymbol.OPP: S3Element.from_word("s"),
    OpSymbol.LLDIV: S3Element.from_word("st"),
    OpSymbol.RDIV: S3Element.from_word("sts"),
}
_G_TO_OP = {g: op for op, g in _OP_TO_G.items()}

BASIC_OPS = (OpSymbol.MUL, OpSymbol.RDIV, OpSymbol.LDIV)
ALL_OPS = tuple(OpSymbol)


# -- terms ------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    name: str


@dataclass(frozen=True)
class PointedIdempotent:
    pass


@dataclass(frozen=True)
class Node:
    op: OpSymbol
    left: Term
    right: Term


Term = Union[Leaf, PointedIdempotent, Node]
E = PointedIdempotent()


def leaves(t: Term) -> Iterator[Term]:
    """Leaves from left to right (generators and ``@e``)."""
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Node):
            stack.append(s.right)
            stack.append(s.left)
        else:
            yield s


def leaf_count(t: Term) -> int:
    return sum(1 for _ in leaves(t))


def generators(t: Term) -> set[str]:
    return {s.name for s in leaves(t) if isinstance(s, Leaf)}


def relabel_ops(t: Term, g: S3Element) -> Term:
    """Replace every operation mu^h by mu^(hg); leaves are untouched."""
    if isinstance(t, Node):
        return Node(OpSymbol.from_g(t.op.g * g), relabel_ops(t.left, g), relabel_ops(t.right, g))
    return t


# -- printing ---------------------------------------------------------------

def to_text(t: Term) -> str:
    """Canonical text: every compound subterm is parenthesized except the root."""
    if isinstance(t, Leaf):
        return t.name
    if isinstance(t, PointedIdempotent):
        return "@e"
    tok = " o " if t.op is OpSymbol.OPP else t.op.token
    return _wrapped(t.left) + tok + _wrapped(t.right)


def _wrapped(t: Term) -> str:
    s = to_text(t)
    return f"({s})" if isinstance(t, Node) else s


def to_sexpr(t: Term) -> str:
    if isinstance(t, Node):
        return f"({t.op.token} {to_sexpr(t.left)} {to_sexpr(t.right)})"
    return to_text(t)


# -- parsing ----------------------------------------------------------------

class TermSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<op>//|\\\\|[*/\\])
      | (?P<lpar>\()
      | (?P<rpar>\))
      | (?P<at>@[A-Za-z0-9_]*)
      | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        val = m.group()
        if kind == "at":
            if val != "@e":
                raise TermSyntaxError(f"reserved token {val!r} (only @e is allowed)", text, pos)
        elif kind == "ident" and val == "o":
            kind = "op"
        if kind != "ws":
            out.append((kind, val, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expr(self) -> Term:
        t = self.atom()
        while self.peek()[0] == "op":
            _, val, _ = self.take()
            t = Node(OpSymbol(val), t, self.atom())
        return t

    def atom(self) -> Term:
        kind, val, pos = self.take()
        if kind == "ident":
            return Leaf(val)
        if kind == "at":
            return E
        if kind == "lpar":
            t = self.expr()
            kind, val, pos = self.take()
            if kind != "rpar":
                raise TermSyntaxError("expected ')'", self.text, pos)
            return t
        what = "end of input" if kind == "end" else repr(val)
        raise TermSyntaxError(f"expected a generator, '@e' or '(' but found {what}", self.text, pos)


def parse(text: str) -> Term:
    p = _Parser(text)
    t = p.expr()
    kind, val, pos = p.take()
    if kind != "end":
        raise TermSyntaxError(f"unexpected {val!r}", text, pos)
    return t
