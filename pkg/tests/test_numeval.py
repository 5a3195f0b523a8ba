"""Matrix-model evaluation checked against sympy's exact radicals.

The oracle never touches a representation: it evaluates the term itself in
the module R^2 with x.y = x X2 + y X1^-1 and the divisions solved from it.
"""
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_term, terms
from quasiwords.freegrpalg import ONE, AlgebraElement
from quasiwords.homrep import Representation, equal, represent
from quasiwords.numeval import (
    BASE_POINT, IDENTITY, SQRT2, SQRT5, FieldElement, element_matrix, evaluate, format_coord,
    mat, mat_det, mat_mul, mat_neg, model_matrices, shortest_words_plot,
)
from quasiwords.term import BASIC_OPS, Leaf, OpSymbol, parse

r2, r5 = sympy.sqrt(2), sympy.sqrt(5)
SX1 = sympy.Matrix([[1, 0], [-r5, 1]])
SX2 = sympy.Matrix([[1, r5], [0, 1]])
SR, SL = SX2, SX1.inv()


def to_sympy(v: FieldElement):
    q0, q1, q2, q3 = (sympy.Rational(c.numerator, c.denominator) for c in v.coeffs)
    return q0 + q1 * r2 + q2 * r5 + q3 * sympy.sqrt(10)


def same(v: FieldElement, expr) -> bool:
    return sympy.expand(to_sympy(v) - expr) == 0


def oracle(t, env):
    if isinstance(t, Leaf):
        return env[t.name]
    x, y = oracle(t.left, env), oracle(t.right, env)
    op = t.op
    if op in (OpSymbol.RRDIV, OpSymbol.LLDIV, OpSymbol.OPP):
        x, y = y, x
        op = {OpSymbol.RRDIV: OpSymbol.RDIV, OpSymbol.LLDIV: OpSymbol.LDIV,
              OpSymbol.OPP: OpSymbol.MUL}[op]
    if op is OpSymbol.MUL:
        return x * SR + y * SL
    if op is OpSymbol.RDIV:
        return (x - y * SL) * SR.inv()
    return (y - x * SR) * SL.inv()


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
field = st.builds(FieldElement, rationals, rationals, rationals, rationals)


def test_model_matrix_products():
    X1, X2, X3 = model_matrices()
    minus_one = mat_neg(IDENTITY)
    assert mat_mul(X3, X2) == mat(-1, 0, -SQRT5, -1)
    assert mat_mul(mat_mul(X3, X2), X1) == minus_one
    assert mat_mul(mat_mul(X2, X1), X3) == minus_one
    assert mat_mul(mat_mul(X1, X3), X2) == minus_one
    assert all(mat_det(m) == FieldElement(1) for m in (X1, X2, X3))


def test_field_multiplication_table():
    sqrt10 = FieldElement(0, 0, 0, 1)
    assert SQRT2 * SQRT5 == sqrt10
    assert SQRT2 * sqrt10 == FieldElement(0, 0, 2)
    assert SQRT5 * sqrt10 == FieldElement(0, 5)
    assert sqrt10 * sqrt10 == FieldElement(10)
    assert SQRT2 * SQRT2 == FieldElement(2)


def test_field_laws_on_ten_thousand_triples():
    rng = random.Random(3)

    def rnd():
        return FieldElement(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)))

    for _ in range(10_000):
        p, q, r = rnd(), rnd(), rnd()
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


@given(field, field)
def test_field_against_sympy(p, q):
    assert same(p * q, to_sympy(p) * to_sympy(q))
    assert abs(float(p) - float(to_sympy(p).evalf(30))) <= 1e-12 * max(1.0, abs(float(p)))


def test_evaluate_examples():
    a = BASE_POINT
    assert evaluate(represent(parse("a")), {"a": a}) == a
    x, y = evaluate(represent(parse("a*a")), {"a": a})
    assert x == FieldElement(0, 2, 2) and y == FieldElement(4, 0, 0, 1)
    assert format_coord(x) == "7.300563079746" and format_coord(y) == "7.162277660168"


def test_two_words_evaluate_identically():
    env = {f"a{i}": (FieldElement(i, 1), FieldElement(2, 0, i)) for i in range(5)}
    left = evaluate(represent(parse("((a0/a1)*(a2*a3))/(a4\\a0)")), env)
    right = evaluate(represent(parse("(a4*(a2*a3))/a1")), env)
    assert left == right


@settings(max_examples=60, deadline=None)
@given(terms(ops=BASIC_OPS, names=("a", "b"), max_leaves=6))
def test_evaluate_matches_direct_matrix_oracle(t):
    env = {"a": (SQRT2, FieldElement(2)), "b": (FieldElement(1), SQRT5)}
    senv = {"a": sympy.Matrix([[r2, 2]]), "b": sympy.Matrix([[1, r5]])}
    x, y = evaluate(represent(t), env)
    want = oracle(t, senv)
    assert same(x, want[0]) and same(y, want[1])


@given(terms(names=("a", "b")), terms(names=("a", "b")))
def test_evaluate_is_linear(t1, t2):
    env = {"a": BASE_POINT, "b": (FieldElement(1), FieldElement(-1))}
    r1, r2_ = represent(t1), represent(t2)
    s = evaluate(r1 + r2_, env)
    p, q = evaluate(r1, env), evaluate(r2_, env)
    assert s == (p[0] + q[0], p[1] + q[1])


def test_equal_terms_evaluate_equally():
    rng = random.Random(11)
    env = {"a": BASE_POINT, "b": (SQRT5, FieldElement(Fraction(1, 3)))}
    found = 0
    while found < 100:
        t1 = random_term(rng, rng.randint(1, 5), names=("a", "b"))
        t2 = random_term(rng, rng.randint(1, 5), names=("a", "b"))
        if not equal(t1, t2):
            continue
        found += 1
        assert evaluate(represent(t1), env) == evaluate(represent(t2), env)


def test_missing_assignment():
    with pytest.raises(KeyError):
        evaluate(represent(parse("a*b")), {"a": BASE_POINT})


def test_element_matrix_is_ring_map():
    p = AlgebraElement({(1,): 2, (2, -1): -1})
    q = AlgebraElement({(-2,): 1, (): 3})
    lhs = element_matrix(p * q)
    rhs = mat_mul(element_matrix(p), element_matrix(q))
    assert lhs == rhs
    assert element_matrix(ONE) == IDENTITY


def test_plot_rows_csv_and_svg():
    rows, csv_text, svg = shortest_words_plot(16)
    lines = csv_text.splitlines()
    assert lines[0] == "word,x,y"
    assert len(lines) == 17
    assert lines[1] == "a,1.414213562373,2.000000000000"
    assert lines[2].startswith("a*a,7.300563")
    assert len({p for _, p in rows}) == 16
    assert len({represent(parse(w)) for w, _ in rows}) == 16
    root = ET.fromstring(svg.split("\n", 1)[1])
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg" and root.get("version") == "1.1"
    assert len(root.findall(f".//{ns}circle")) == 16
    assert [t.text for t in root.findall(f".//{ns}text")] == [w for w, _ in rows]
    x0, y0, w, h = map(float, root.get("viewBox").split())
    for _, (x, y) in rows:
        assert x0 < float(x) < x0 + w and y0 < -float(y) < y0 + h


def test_plot_is_deterministic_and_counts():
    assert shortest_words_plot(5)[1] == shortest_words_plot(5)[1]
    assert len(shortest_words_plot(20)[0]) == 20


def test_representation_zero_evaluates_to_origin():
    zero = evaluate(Representation(), {})
    assert zero == (FieldElement(), FieldElement())
