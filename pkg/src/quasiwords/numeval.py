"""Exact evaluation of representations in a 2x2 matrix model over Q(sqrt2, sqrt5).

    X1 = [[1, 0], [-r5, 1]],  X2 = [[1, r5], [0, 1]],  X3 = [[-1, r5], [-r5, 4]]

satisfy X3 X2 X1 = -I, so R = X2 and L = X1^-1 make R^2 a right module over
the coefficient ring. Floats appear only when points are written out.
"""
from __future__ import annotations

import csv
import functools
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .freegrpalg import L, R, AlgebraElement
from .homrep import Representation, shortest_words
from .term import to_text

Q = Fraction


@dataclass(frozen=True)
class FieldElement:
    """q0 + q1 sqrt2 + q2 sqrt5 + q3 sqrt10 with rational q_i."""

    q0: Fraction = Q(0)
    q1: Fraction = Q(0)
    q2: Fraction = Q(0)
    q3: Fraction = Q(0)

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            v = getattr(self, name)
            if type(v) is not Fraction:
                object.__setattr__(self, name, Q(v))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.q0, self.q1, self.q2, self.q3

    def __add__(self, other: FieldElement | int) -> FieldElement:
        other = _lift(other)
        return FieldElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(*(-a for a in self.coeffs))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return self + (-_lift(other))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        other = _lift(other)
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        # rational operands are the common case in the model matrices
        if not (b1 or b2 or b3):
            return FieldElement(a0 * b0, a1 * b0, a2 * b0, a3 * b0)
        if not (a1 or a2 or a3):
            return FieldElement(a0 * b0, a0 * b1, a0 * b2, a0 * b3)
        # sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2
        return FieldElement(
            a0 * b0 + 2 * a1 * b1 + 5 * a2 * b2 + 10 * a3 * b3,
            a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    __rmul__ = __mul__

    def __float__(self) -> float:
        a0, a1, a2, a3 = self.coeffs
        return float(a0) + float(a1) * math.sqrt(2) + float(a2) * math.sqrt(5) + float(a3) * math.sqrt(10)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        parts = [f"{c}{s}" for c, s in zip(self.coeffs, ("", "*r2", "*r5", "*r10")) if c]
        return " + ".join(parts) or "0"


def _lift(x) -> FieldElement:
    return x if isinstance(x, FieldElement) else FieldElement(Q(x))


SQRT2 = FieldElement(0, 1)
SQRT5 = FieldElement(0, 0, 1)
ZERO = FieldElement()
ONE = FieldElement(1)

Matrix2 = tuple[FieldElement, FieldElement, FieldElement, FieldElement]  # row-major
Point2 = tuple[FieldElement, FieldElement]


def mat(a, b, c, d) -> Matrix2:
    return (_lift(a), _lift(b), _lift(c), _lift(d))


def mat_mul(m: Matrix2, n: Matrix2) -> Matrix2:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_neg(m: Matrix2) -> Matrix2:
    return tuple(-x for x in m)


def mat_det(m: Matrix2) -> FieldElement:
    a, b, c, d = m
    return a * d - b * c


def mat_inv_unimodular(m: Matrix2) -> Matrix2:
    """Inverse of a determinant-one matrix."""
    if mat_det(m) != ONE:
        raise ValueError("expected a determinant-one matrix")
    a, b, c, d = m
    return (d, -b, -c, a)


IDENTITY = mat(1, 0, 0, 1)


def model_matrices() -> tuple[Matrix2, Matrix2, Matrix2]:
    X1 = mat(1, 0, -SQRT5, 1)
    X2 = mat(1, SQRT5, 0, 1)
    X3 = mat(-1, SQRT5, -SQRT5, 4)
    return X1, X2, X3


@functools.cache
def letter_matrices() -> dict[int, Matrix2]:
    X1, X2, _ = model_matrices()
    return {R: X2, -R: mat_inv_unimodular(X2), L: mat_inv_unimodular(X1), -L: X1}


def point_times(p: Point2, m: Matrix2) -> Point2:
    x, y = p
    a, b, c, d = m
    return (x * a + y * c, x * b + y * d)


def point_add(p: Point2, q: Point2) -> Point2:
    return (p[0] + q[0], p[1] + q[1])


def element_matrix(c: AlgebraElement) -> Matrix2:
    """Image of a coefficient-ring element in the matrix model."""
    mats = letter_matrices()
    total = mat(0, 0, 0, 0)
    for word, coef in c.terms:
        m = IDENTITY
        for a in word:
            m = mat_mul(m, mats[a])
        total = tuple(t + coef * x for t, x in zip(total, m))
    return total


def evaluate(rep: Representation, assignment: Mapping[str, Point2]) -> Point2:
    total: Point2 = (ZERO, ZERO)
    for gen, c in rep.items:
        if gen not in assignment:
            raise KeyError(f"no point assigned to generator {gen!r}")
        total = point_add(total, point_times(assignment[gen], element_matrix(c)))
    return total


BASE_POINT: Point2 = (SQRT2, FieldElement(2))


def format_coord(v: FieldElement) -> str:
    return f"{float(v):.12f}"


def shortest_words_plot(count: int = 16, point: Point2 = BASE_POINT):
    """Rows (word, exact point) for the first ``count`` one-generator classes,
    with their CSV and SVG renderings."""
    if count < 1:
        raise ValueError("count must be at least 1")
    classes = shortest_words(count, ("a",))
    rows = [(to_text(t), evaluate(rep, {"a": point})) for t, rep in classes]
    points = [p for _, p in rows]
    if len(set(points)) != len(points):
        raise ArithmeticError("the matrix model identifies two distinct classes")
    return rows, to_csv(rows), to_svg(rows)


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "x", "y"])
    for word, (x, y) in rows:
        w.writerow([word, format_coord(x), format_coord(y)])
    return buf.getvalue()


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def to_svg(rows, width: int = 640, height: int = 640) -> str:
    xs = [float(p[0]) for _, p in rows]
    ys = [-float(p[1]) for _, p in rows]  # SVG y grows downward
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = (x1 - x0) or 1.0
    h = (y1 - y0) or 1.0
    mx, my = 0.05 * w, 0.05 * h
    vb = (x0 - mx, y0 - my, w + 2 * mx, h + 2 * my)
    font = 0.02 * max(vb[2], vb[3])
    r = 3 * max(vb[2], vb[3]) / max(width, height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{vb[0]:.6g} {vb[1]:.6g} {vb[2]:.6g} {vb[3]:.6g}">',
        f'<g font-family="monospace" font-size="{font:.6g}">',
    ]
    for (word, _), x, y in zip(rows, xs, ys):
        out.append(f'<circle cx="{x:.6f}" cy="{y:.6f}" r="{r:.6g}" fill="black"/>')
        out.append(f'<text x="{x + r:.6f}" y="{y - r:.6f}">{_esc(word)}</text>')
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)
