"""Homogeneous representation of free central pique words.

Each operation is affine with coefficients in the coefficient ring; for
example ``x*y = x X2 + y X1^-1``. Reading the edge labels from a leaf down to
the root gives that leaf's X-monomial, and summing the normalized monomials
per generator gives the representation. Two words are equal in the free
central pique exactly when their representations agree.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .freegrpalg import (
    ONE,
    X1,
    X2,
    X3,
    AlgebraElement,
    XMonomial,
    normalize,
)
from .term import (
    ALL_OPS,
    BASIC_OPS,
    S3,
    TAU,
    Leaf,
    Node,
    OpSymbol,
    PointedIdempotent,
    S3Element,
    Term,
    leaf_count,
    to_text,
)

log = logging.getLogger(__name__)

# (left edge, right edge) label for each operation.
EDGE_LABELS: dict[OpSymbol, tuple[int, int]] = {
    OpSymbol.MUL: (X2, -X1),
    OpSymbol.RDIV: (-X2, X3),
    OpSymbol.LDIV: (-X3, X1),
    OpSymbol.OPP: (-X1, X2),
    OpSymbol.RRDIV: (X3, -X2),
    OpSymbol.LLDIV: (X1, -X3),
}

EDGE_COEFFS: dict[OpSymbol, tuple[AlgebraElement, AlgebraElement]] = {
    op: (normalize(XMonomial((a,))), normalize(XMonomial((b,))))
    for op, (a, b) in EDGE_LABELS.items()
}


class Representation:
    """Map generator -> nonzero AlgebraElement, ordered by generator name."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs: Mapping[str, AlgebraElement] | None = None):
        self._items = tuple(sorted((g, c) for g, c in (coeffs or {}).items() if c))
        self._hash = hash(self._items)

    @classmethod
    def generator(cls, name: str) -> Representation:
        return cls({name: ONE})

    @property
    def items(self) -> tuple[tuple[str, AlgebraElement], ...]:
        return self._items

    def as_dict(self) -> dict[str, AlgebraElement]:
        return dict(self._items)

    def __getitem__(self, name: str) -> AlgebraElement:
        return self.as_dict().get(name, AlgebraElement())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: Representation) -> Representation:
        d = self.as_dict()
        for g, c in other._items:
            d[g] = d[g] + c if g in d else c
        return Representation(d)

    def __mul__(self, c: AlgebraElement) -> Representation:
        """Right scalar multiplication by an element of the coefficient ring."""
        return Representation({g: p * c for g, p in self._items})

    def __bool__(self) -> bool:
        return bool(self._items)

    def __str__(self) -> str:
        return "\n".join(f"{g}: {c}" for g, c in self._items)

    def __repr__(self) -> str:
        return "Representation({" + ", ".join(f"{g}: {c}" for g, c in self._items) + "})"

    def to_json(self) -> dict[str, list]:
        return {g: c.to_json() for g, c in self._items}

    @classmethod
    def from_json(cls, data: Mapping[str, list]) -> Representation:
        return cls({g: AlgebraElement.from_json(v) for g, v in data.items()})


@dataclass(frozen=True)
class RawEntry:
    generator: str
    monomial: XMonomial
    coefficient: int = 1


def _leaf_paths(t: Term, prefix=(), labels=()):
    """Yield (leaf, node path, labels root->leaf) for every leaf, left to right."""
    if isinstance(t, Node):
        lbl_l, lbl_r = EDGE_LABELS[t.op]
        yield from _leaf_paths(t.left, prefix + (0,), labels + (lbl_l,))
        yield from _leaf_paths(t.right, prefix + (1,), labels + (lbl_r,))
    else:
        yield t, prefix, labels


def raw_form(t: Term) -> list[RawEntry]:
    """One entry per generator leaf; the monomial reads leaf-to-root, leaf-nearest first."""
    return [
        RawEntry(leaf.name, XMonomial(tuple(reversed(labels))))
        for leaf, _, labels in _leaf_paths(t)
        if isinstance(leaf, Leaf)
    ]


def represent(t: Term) -> Representation:
    coeffs: dict[str, AlgebraElement] = {}
    for entry in raw_form(t):
        c = normalize(entry.monomial) * entry.coefficient
        coeffs[entry.generator] = coeffs[entry.generator] + c if entry.generator in coeffs else c
    return Representation(coeffs)


def represent_recursive(t: Term) -> Representation:
    """Same value as :func:`represent`, built bottom-up from the operation formulas."""
    if isinstance(t, Leaf):
        return Representation.generator(t.name)
    if isinstance(t, PointedIdempotent):
        return Representation()
    cl, cr = EDGE_COEFFS[t.op]
    return represent_recursive(t.left) * cl + represent_recursive(t.right) * cr


def equal(t1: Term, t2: Term) -> bool:
    return represent(t1) == represent(t2)


def eliminated_arguments(t: Term) -> set[str]:
    present = {name for name, _ in represent(t).items}
    return {e.generator for e in raw_form(t)} - present


# -- elimination patterns ---------------------------------------------------

@dataclass(frozen=True)
class EliminationHit:
    generator: str
    leaves: tuple[int, int]  # left-to-right leaf indices
    meet: tuple[int, ...]  # node path from the root (0 = left, 1 = right)
    paths: tuple[XMonomial, XMonomial]  # leaf-to-meet label products
    pattern: str | None  # "left", "right" or None when neither shape matches
    index: int | None  # i in 1..3

    def describe(self) -> str:
        where = "root" if not self.meet else "".join("LR"[b] for b in self.meet)
        shape = f"{self.pattern} pattern, i={self.index}" if self.pattern else "unclassified"
        return (f"{self.generator}: leaves {self.leaves[0]},{self.leaves[1]} meet at {where}; "
                f"paths {self.paths[0]} | {self.paths[1]}; {shape}")


def _cyc(i: int) -> int:
    return (i - 1) % 3 + 1


def classify_pattern(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[str, int] | None:
    """Match a pair of freely reduced label words against the two collapse shapes.

    left:  X_i^-1   against  X_{i-1} X_{i+1}
    right: X_i      against  X_{i+1}^-1 X_{i-1}^-1
    """
    for a, b in ((p, q), (q, p)):
        if len(a) == 1 and len(b) == 2:
            i = abs(a[0])
            if a[0] < 0 and b == (_cyc(i - 1), _cyc(i + 1)):
                return "left", i
            if a[0] > 0 and b == (-_cyc(i + 1), -_cyc(i - 1)):
                return "right", i
    return None


def find_elimination_patterns(t: Term) -> list[EliminationHit]:
    """All same-generator leaf pairs whose contributions cancel below their meet node."""
    occ = [(k, leaf.name, path, labels)
           for k, (leaf, path, labels) in enumerate(_leaf_paths(t))
           if isinstance(leaf, Leaf)]
    hits = []
    for x in range(len(occ)):
        for y in range(x + 1, len(occ)):
            k1, g1, path1, lab1 = occ[x]
            k2, g2, path2, lab2 = occ[y]
            if g1 != g2:
                continue
            depth = 0
            while path1[depth] == path2[depth]:
                depth += 1
            m1 = XMonomial(tuple(reversed(lab1[depth:])))
            m2 = XMonomial(tuple(reversed(lab2[depth:])))
            if normalize(m1) != -normalize(m2):
                continue
            shape = classify_pattern(m1.letters, m2.letters)
            hits.append(EliminationHit(
                g1, (k1, k2), path1[:depth], (m1, m2),
                shape[0] if shape else None, shape[1] if shape else None,
            ))
    return hits


# -- enumeration ------------------------------------------------------------

class EnumerationLimitError(RuntimeError):
    pass


DEFAULT_TERM_CAP = 10**7


def count_raw_terms(n_generators: int, max_leaves: int, n_ops: int) -> list[int]:
    """Number of raw terms with exactly k leaves, for k = 0..max_leaves."""
    counts = [0] * (max_leaves + 1)
    if max_leaves >= 1:
        counts[1] = n_generators
    for k in range(2, max_leaves + 1):
        counts[k] = n_ops * sum(counts[j] * counts[k - j] for j in range(1, k))
    return counts


def _sort_key(t: Term) -> tuple[int, str]:
    return leaf_count(t), to_text(t)


def enumerate_words(
    generators: Sequence[str],
    max_leaves: int,
    ops: str = "basic",
    cap: int = DEFAULT_TERM_CAP,
) -> list[tuple[Term, Representation]]:
    """One representative per representation class among all terms with at
    most ``max_leaves`` leaves, each the minimum under (leaf count, text).

    Classes are returned in the order of their representatives.
    """
    if max_leaves < 1:
        raise ValueError("max_leaves must be at least 1")
    if not generators:
        raise ValueError("need at least one generator")
    op_set: Iterable[OpSymbol] = {"basic": BASIC_OPS, "all": ALL_OPS}[ops]
    op_set = tuple(op_set)
    counts = count_raw_terms(len(generators), max_leaves, len(op_set))
    if sum(counts) > cap:
        raise EnumerationLimitError(
            f"{sum(counts)} raw terms with <= {max_leaves} leaves exceeds the cap of {cap}")

    by_size: list[list[tuple[Term, Representation]]] = [[] for _ in range(max_leaves + 1)]
    by_size[1] = [(Leaf(g), Representation.generator(g)) for g in generators]
    for k in range(2, max_leaves + 1):
        level = by_size[k]
        for j in range(1, k):
            for op in op_set:
                cl, cr = EDGE_COEFFS[op]
                rights = [(t, r * cr) for t, r in by_size[k - j]]
                for tl, rl in by_size[j]:
                    rl = rl * cl
                    for tr, rr in rights:
                        level.append((Node(op, tl, tr), rl + rr))
        log.debug("%d raw terms with %d leaves", len(level), k)

    best: dict[Representation, tuple[tuple[int, str], Term]] = {}
    for level in by_size:
        for t, rep in level:
            key = _sort_key(t)
            cur = best.get(rep)
            if cur is None or key < cur[0]:
                best[rep] = (key, t)
    classes = sorted(((key, t, rep) for rep, (key, t) in best.items()), key=lambda x: x[0])
    return [(t, rep) for _, t, rep in classes]


def shortest_words(count: int, generators: Sequence[str] = ("a",), ops: str = "basic",
                   cap: int = DEFAULT_TERM_CAP) -> list[tuple[Term, Representation]]:
    """The first ``count`` classes, growing the leaf budget until enough exist.

    Raising the budget only adds classes with more leaves, so a prefix of the
    ordering is final once it is long enough.
    """
    budget = 1
    while True:
        classes = enumerate_words(generators, budget, ops, cap)
        if len(classes) >= count:
            return classes[:count]
        budget += 1


# -- identities -------------------------------------------------------------

def identity_term(g: S3Element, x: str = "x", y: str = "y") -> Term:
    """The word x (x y mu^(tau g)) mu^g."""
    inner = Node(OpSymbol.from_g(TAU * g), Leaf(x), Leaf(y))
    return Node(OpSymbol.from_g(g), Leaf(x), inner)


def rep_identity_check(g: S3Element) -> bool:
    return represent(identity_term(g)) == Representation.generator("y")


def all_identity_checks() -> dict[S3Element, bool]:
    return {g: rep_identity_check(g) for g in S3}


def rep_to_json(rep: Representation) -> str:
    return json.dumps(rep.to_json(), sort_keys=True)
