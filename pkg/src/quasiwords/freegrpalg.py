"""Exact arithmetic in the coefficient ring of central piques.

The ring is Z<X1, X2, X3> modulo X3 X2 X1 = X2 X1 X3 = X1 X3 X2 = -1. The
substitution X1 = L^-1, X2 = R, X3 = -L R^-1 identifies it with the integral
group algebra of the free group on {R, L}, and reduced words in R, L give a
canonical basis. X-monomials are therefore only an input format; every
comparison happens after normalizing to the (R, L) basis.

Letters are small nonzero ints: R = 1, L = 2 for group words and
X1, X2, X3 = 1, 2, 3 for X-monomials, with negation for inverses.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .term import S3, SIGMA, TAU, S3Element

R, L = 1, 2
X1, X2, X3 = 1, 2, 3

GroupWord = tuple[int, ...]

_LETTER_ORDER = {R: 0, -R: 1, L: 2, -L: 3}
_LETTER_NAMES = {R: "R", -R: "R^-1", L: "L", -L: "L^-1"}


def reduce(word: Iterable[int]) -> GroupWord:
    """Freely reduce a sequence of letters."""
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(word: GroupWord) -> GroupWord:
    return tuple(-a for a in reversed(word))


def shortlex_key(word: GroupWord) -> tuple:
    return (len(word), tuple(_LETTER_ORDER[a] for a in word))


def word_to_text(word: GroupWord) -> str:
    return " ".join(_LETTER_NAMES[a] for a in word) if word else "1"


def word_from_text(text: str) -> GroupWord:
    text = text.strip()
    if text == "1":
        return ()
    lookup = {v: k for k, v in _LETTER_NAMES.items()}
    try:
        return reduce(lookup[tok] for tok in text.split())
    except KeyError as exc:
        raise ValueError(f"bad group word {text!r}") from exc


class AlgebraElement:
    """A finite integer combination of reduced words in R, L.

    Immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[GroupWord, int] | None = None):
        items = {}
        for w, c in (terms or {}).items():
            w = reduce(w)
            items[w] = items.get(w, 0) + c
        self._terms = tuple(sorted(((w, c) for w, c in items.items() if c),
                                   key=lambda wc: shortlex_key(wc[0])))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, word: Iterable[int] = (), coef: int = 1) -> AlgebraElement:
        return cls({tuple(word): coef})

    @property
    def terms(self) -> tuple[tuple[GroupWord, int], ...]:
        """(word, coefficient) pairs in shortlex order."""
        return self._terms

    def as_dict(self) -> dict[GroupWord, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = AlgebraElement.monomial((), other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        d = self.as_dict()
        for w, c in other._terms:
            d[w] = d.get(w, 0) + c
        return AlgebraElement(d)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({w: -c for w, c in self._terms})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement | int) -> AlgebraElement:
        if isinstance(other, int):
            return AlgebraElement({w: c * other for w, c in self._terms})
        d: dict[GroupWord, int] = {}
        for w1, c1 in self._terms:
            for w2, c2 in other._terms:
                w = reduce(w1 + w2)
                d[w] = d.get(w, 0) + c1 * c2
        return AlgebraElement(d)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{word_to_text(w)}" for w, c in self._terms)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def to_json(self) -> list[list]:
        return [[c, word_to_text(w)] for w, c in self._terms]

    @classmethod
    def from_json(cls, data: list) -> AlgebraElement:
        return cls({word_from_text(w): int(c) for c, w in data})


ZERO = AlgebraElement()
ONE = AlgebraElement.monomial()


def add(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    return p + q


def mul(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    return p * q


# -- X-monomials ----------------------------------------------------------

_X_NAMES = {X1: "X1", -X1: "X1^-1", X2: "X2", -X2: "X2^-1", X3: "X3", -X3: "X3^-1"}


@dataclass(frozen=True)
class XMonomial:
    """A signed, freely reduced word in the coefficient variables.

    The cyclic relations are deliberately not applied here.
    """

    letters: tuple[int, ...] = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce(self.letters))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __mul__(self, other: XMonomial) -> XMonomial:
        return XMonomial(self.letters + other.letters, self.sign * other.sign)

    def __neg__(self) -> XMonomial:
        return XMonomial(self.letters, -self.sign)

    def inverse(self) -> XMonomial:
        return XMonomial(invert(self.letters), self.sign)

    def __str__(self) -> str:
        body = " ".join(_X_NAMES[a] for a in self.letters) or "1"
        return body if self.sign > 0 else "-" + body

    @classmethod
    def parse(cls, text: str) -> XMonomial:
        text = text.strip()
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:]
        if text in ("", "1"):
            return cls((), sign)
        lookup = {v: k for k, v in _X_NAMES.items()}
        return cls(tuple(lookup[tok] for tok in text.split()), sign)


# X1 = L^-1, X2 = R, X3 = -L R^-1
_SUBST: dict[int, tuple[int, GroupWord]] = {
    X1: (1, (-L,)),
    -X1: (1, (L,)),
    X2: (1, (R,)),
    -X2: (1, (-R,)),
    X3: (-1, (L, -R)),
    -X3: (-1, (R, -L)),
}


def normalize(m: XMonomial) -> AlgebraElement:
    """Substitute for the X_i and return the single signed (R, L) monomial."""
    sign = m.sign
    word: list[int] = []
    for a in m.letters:
        s, w = _SUBST[a]
        sign *= s
        word.extend(w)
    return AlgebraElement.monomial(word, sign)


def x_element(text: str) -> AlgebraElement:
    return normalize(XMonomial.parse(text))


# -- S3 acting on the coefficient ring --------------------------------------

# Images of the coefficient variables under the generating transpositions.
_GEN_ACTION: dict[S3Element, dict[int, int]] = {
    SIGMA: {X1: -X2, X2: -X1, X3: -X3},
    TAU: {X1: -X1, X2: -X3, X3: -X2},
}


def act_on_x(g: S3Element, m: XMonomial) -> XMonomial:
    """Letterwise substitution on an X-monomial (no normalization)."""
    letters = m.letters
    for ch in g.word:
        table = _GEN_ACTION[SIGMA if ch == "s" else TAU]
        letters = tuple(table[a] if a > 0 else -table[-a] for a in letters)
    return XMonomial(letters, m.sign)


def _letter_images(gen: S3Element) -> dict[int, tuple[int, GroupWord]]:
    # R = X2 and L = X1^-1, so their images follow from the X substitution.
    images = {}
    for letter, xword in ((R, (X2,)), (L, (-X1,))):
        img = normalize(act_on_x(gen, XMonomial(xword)))
        ((w, c),) = img.terms
        images[letter] = (c, w)
        images[-letter] = (c, invert(w))
    return images


_IMAGES = {gen: _letter_images(gen) for gen in (SIGMA, TAU)}


def _act_gen(gen: S3Element, p: AlgebraElement) -> AlgebraElement:
    images = _IMAGES[gen]
    d: dict[GroupWord, int] = {}
    for w, c in p.terms:
        word: list[int] = []
        for a in w:
            s, img = images[a]
            c *= s
            word.extend(img)
        rw = reduce(word)
        d[rw] = d.get(rw, 0) + c
    return AlgebraElement(d)


def act(g: S3Element, p: AlgebraElement) -> AlgebraElement:
    """Apply the automorphism of g, composing generators left to right."""
    for ch in g.word:
        p = _act_gen(SIGMA if ch == "s" else TAU, p)
    return p


# -- cyclic relations -------------------------------------------------------

CYCLIC_PRODUCTS = {
    "X3 X2 X1": XMonomial((X3, X2, X1)),
    "X2 X1 X3": XMonomial((X2, X1, X3)),
    "X1 X3 X2": XMonomial((X1, X3, X2)),
}


@dataclass
class CyclicRelationReport:
    direct: dict[str, AlgebraElement]
    derived: dict[str, AlgebraElement]

    @property
    def ok(self) -> bool:
        minus_one = -ONE
        return all(v == minus_one for v in (*self.direct.values(), *self.derived.values()))


def check_cyclic_relations() -> CyclicRelationReport:
    """Normalize the three cyclic products, and also derive the second and
    third from X3 X2 X1 = -1 by conjugating with invertible factors."""
    direct = {name: normalize(m) for name, m in CYCLIC_PRODUCTS.items()}
    base = direct["X3 X2 X1"]
    x3 = normalize(XMonomial((X3,)))
    x3x2 = normalize(XMonomial((X3, X2)))
    derived = {
        "X2 X1 X3": normalize(XMonomial((-X3,))) * base * x3,
        "X1 X3 X2": normalize(XMonomial((-X2, -X3))) * base * x3x2,
    }
    return CyclicRelationReport(direct, derived)


def distinct_actions(probe: AlgebraElement | None = None) -> dict[S3Element, AlgebraElement]:
    """Image of ``probe`` (default X1) under each of the six group elements."""
    probe = x_element("X1") if probe is None else probe
    return {g: act(g, probe) for g in S3}

