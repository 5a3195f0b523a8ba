"""Finite quasigroups given by Cayley tables.

Tables are numpy integer arrays of element indices; ``mul[x, y]`` is the
index of ``x*y``. Everything here is exhaustive over the carrier, so it is
meant for small orders.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .term import S3, TAU, OpSymbol, S3Element


class QuasigroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteQuasigroup:
    elements: tuple[str, ...]
    mul: np.ndarray
    rdiv: np.ndarray = field(repr=False)
    ldiv: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def same_carrier(self, other: FiniteQuasigroup) -> bool:
        return self.elements == other.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteQuasigroup):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.mul, other.mul)

    def op_table(self, op: OpSymbol) -> np.ndarray:
        return conjugate(self, op.g).mul

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "mul": self.mul.tolist()}


def validate(mul: Sequence[Sequence[int]] | np.ndarray,
             elements: Sequence[str] | None = None) -> FiniteQuasigroup:
    """Check that ``mul`` is a Latin square and derive both divisions."""
    table = np.array(mul, dtype=np.int64)
    if table.size == 0:
        table = table.reshape(0, 0)
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n):
        raise QuasigroupError(f"multiplication table must be square, got shape {table.shape}")
    if elements is None:
        elements = [str(i) for i in range(n)]
    elements = tuple(str(e) for e in elements)
    if len(elements) != n:
        raise QuasigroupError(f"{len(elements)} element names for a table of order {n}")
    if len(set(elements)) != n:
        raise QuasigroupError("element names must be distinct")
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        x, y = bad[0]
        raise QuasigroupError(f"entry ({x}, {y}) = {table[x, y]} is not an element index")
    idx = np.arange(n)
    for axis, what in ((1, "row"), (0, "column")):
        ok = np.all(np.sort(table, axis=axis) == (idx[None, :] if axis == 1 else idx[:, None]),
                    axis=axis)
        if not ok.all():
            line = int(np.argmin(ok))
            vals = table[line] if axis == 1 else table[:, line]
            counts = np.bincount(vals, minlength=n)
            raise QuasigroupError(f"{what} {line} repeats {int(np.argmax(counts > 1))}")
    rdiv = np.empty_like(table)
    ldiv = np.empty_like(table)
    # x/y = x R(y)^-1 and x\y = y L(x)^-1
    rdiv[table, idx[None, :]] = idx[:, None]
    ldiv[idx[:, None], table] = idx[None, :]
    table.setflags(write=False)
    rdiv.setflags(write=False)
    ldiv.setflags(write=False)
    return FiniteQuasigroup(elements, table, rdiv, ldiv)


def from_json(data: dict) -> FiniteQuasigroup:
    return validate(data["mul"], data.get("elements"))


def cyclic(n: int, op=lambda x, y, n: (x + y) % n) -> FiniteQuasigroup:
    """Z_n with the given binary operation (addition by default)."""
    idx = np.arange(n)
    return validate(op(idx[:, None], idx[None, :], n))


def check_identities(q: FiniteQuasigroup) -> dict[str, bool]:
    """(SL), (SR), (IL), (IR), (DL), (DR) evaluated exhaustively."""
    n = q.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    m, r, l = q.mul, q.rdiv, q.ldiv
    return {
        "SL": bool(np.all(m[x, l[x, y]] == y)),
        "SR": bool(np.all(m[r[y, x], x] == y)),
        "IL": bool(np.all(l[x, m[x, y]] == y)),
        "IR": bool(np.all(r[m[y, x], x] == y)),
        "DL": bool(np.all(r[x, l[y, x]] == y)),
        "DR": bool(np.all(l[r[x, y], x] == y)),
    }


# -- conjugates -----------------------------------------------------------

def conjugate(q: FiniteQuasigroup, g: S3Element) -> FiniteQuasigroup:
    """The conjugate (Q, mu^g): whenever x1 x2 mu = x3, x_{1g} x_{2g} mu^g = x_{3g}."""
    n = q.order
    x1, x2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    triple = (x1.ravel(), x2.ravel(), q.mul.ravel())
    table = np.empty((n, n), dtype=np.int64)
    table[triple[g(1) - 1], triple[g(2) - 1]] = triple[g(3) - 1]
    return validate(table, q.elements)


def all_conjugates(q: FiniteQuasigroup) -> dict[OpSymbol, FiniteQuasigroup]:
    return {OpSymbol.from_g(g): conjugate(q, g) for g in S3}


def is_semisymmetric(q: FiniteQuasigroup) -> bool:
    """x(yx) = y for all x, y, cross-checked against R(x) = L(x)^-1."""
    n = q.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    direct = bool(np.all(q.mul[x, q.mul[y, x]] == y))
    # y R(x) = yx must equal y L(x)^-1 = x\y
    via_maps = bool(np.all(q.mul[y, x] == q.ldiv[x, y]))
    if direct != via_maps:
        raise AssertionError("semisymmetry criteria disagree")
    return direct


# -- semisymmetrization ----------------------------------------------------

def triple_index(n: int, x1, x2, x3):
    return (x1 * n + x2) * n + x3


def triple_components(n: int, i):
    return i // (n * n), (i // n) % n, i % n


def semisymmetrize(q: FiniteQuasigroup) -> FiniteQuasigroup:
    """Q^3 with (x1,x2,x3)(y1,y2,y3) = (x2 // y3, x3 \\\\ y1, x1 y2)."""
    n = q.order
    idx = np.arange(n ** 3)
    x1, x2, x3 = (c[:, None] for c in triple_components(n, idx))
    y1, y2, y3 = (c[None, :] for c in triple_components(n, idx))
    # x // y = y / x and x \\ y = y \ x
    table = triple_index(n, q.rdiv[y3, x2], q.ldiv[y1, x3], q.mul[x1, y2])
    names = [f"({a},{b},{c})" for a, b, c in itertools.product(q.elements, repeat=3)]
    return validate(table, names)


@dataclass(frozen=True, eq=False)
class Homotopy:
    source: FiniteQuasigroup
    target: FiniteQuasigroup
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray

    def __post_init__(self):
        for name in ("f1", "f2", "f3"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.int64))

    @classmethod
    def of_map(cls, source, target, f) -> Homotopy:
        return cls(source, target, f, f, f)


def _shapes_ok(h: Homotopy) -> bool:
    n, m = h.source.order, h.target.order
    for f in (h.f1, h.f2, h.f3):
        if f.shape != (n,) or (n and (f.min() < 0 or f.max() >= m)):
            return False
    return True


def is_homotopy(h: Homotopy) -> bool:
    """xf1 . yf2 = (x.y)f3 for all x, y."""
    if not _shapes_ok(h):
        raise QuasigroupError("homotopy components do not match the carriers")
    n = h.source.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return bool(np.all(h.target.mul[h.f1[x], h.f2[y]] == h.f3[h.source.mul[x, y]]))


def is_homomorphism(h: Homotopy) -> bool:
    return (np.array_equal(h.f1, h.f2) and np.array_equal(h.f2, h.f3)
            and is_homotopy(h))


def _is_bijection(f: np.ndarray, n: int) -> bool:
    return f.shape == (n,) and np.array_equal(np.sort(f), np.arange(n))


def is_isotopy(h: Homotopy) -> bool:
    m = h.target.order
    return (h.source.order == m
            and all(_is_bijection(f, m) for f in (h.f1, h.f2, h.f3))
            and is_homotopy(h))


def identity_homotopy(q: FiniteQuasigroup) -> Homotopy:
    return Homotopy.of_map(q, q, np.arange(q.order))


def delta(h: Homotopy) -> Homotopy:
    """Componentwise action of a homotopy on the semisymmetrizations, as a map."""
    n = h.source.order
    m = h.target.order
    x1, x2, x3 = triple_components(n, np.arange(n ** 3))
    f = triple_index(m, h.f1[x1], h.f2[x2], h.f3[x3])
    return Homotopy.of_map(semisymmetrize(h.source), semisymmetrize(h.target), f)


def unit_map(p: FiniteQuasigroup) -> Homotopy:
    """x -> (x, x, x) into the semisymmetrization."""
    n = p.order
    idx = np.arange(n)
    return Homotopy.of_map(p, semisymmetrize(p), triple_index(n, idx, idx, idx))


def counit(q: FiniteQuasigroup, qd: FiniteQuasigroup | None = None) -> Homotopy:
    """The three projections from the semisymmetrization back to q."""
    n = q.order
    qd = semisymmetrize(q) if qd is None else qd
    p1, p2, p3 = triple_components(n, np.arange(n ** 3))
    return Homotopy(qd, q, p1, p2, p3)


# -- the monoid of binary operations -----------------------------------------

@dataclass(frozen=True, eq=False)
class BinaryOpTable:
    base: FiniteQuasigroup
    table: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryOpTable):
            return NotImplemented
        return self.base.same_carrier(other.base) and np.array_equal(self.table, other.table)


def binop(q: FiniteQuasigroup, g: S3Element) -> BinaryOpTable:
    return BinaryOpTable(q, conjugate(q, g).mul)


def binop_identity(q: FiniteQuasigroup) -> BinaryOpTable:
    """The right projection xy -> y."""
    n = q.order
    return BinaryOpTable(q, np.broadcast_to(np.arange(n)[None, :], (n, n)).copy())


def binop_mul(alpha: BinaryOpTable, beta: BinaryOpTable) -> BinaryOpTable:
    """xy(alpha * beta) = x (xy alpha) beta."""
    if not alpha.base.same_carrier(beta.base):
        raise QuasigroupError("binary operations live on different carriers")
    n = alpha.base.order
    x = np.arange(n)[:, None]
    return BinaryOpTable(alpha.base, beta.table[np.broadcast_to(x, (n, n)), alpha.table])


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        return "\n".join(
            f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                           for c in self.checks]}


def check_triality_units(q: FiniteQuasigroup) -> Report:
    """mu^g and mu^(tau g) are mutually inverse in the monoid, for all six g."""
    eps = binop_identity(q)
    report = Report()
    for g in S3:
        a, b = binop(q, TAU * g), binop(q, g)
        report.add(f"mu^({TAU * g})*mu^({g}) = eps", binop_mul(a, b) == eps)
        report.add(f"mu^({g})*mu^({TAU * g}) = eps", binop_mul(b, a) == eps)
    return report


# -- Latin square generators ------------------------------------------------

def latin_squares(n: int):
    """Every Latin square of order n on symbols 0..n-1 (fine for n <= 4)."""
    grid = np.full((n, n), -1, dtype=np.int64)
    rows = [set() for _ in range(n)]
    cols = [set() for _ in range(n)]

    def fill(cell):
        if cell == n * n:
            yield grid.copy()
            return
        r, c = divmod(cell, n)
        for v in range(n):
            if v not in rows[r] and v not in cols[c]:
                grid[r, c] = v
                rows[r].add(v)
                cols[c].add(v)
                yield from fill(cell + 1)
                rows[r].discard(v)
                cols[c].discard(v)
        grid[r, c] = -1

    yield from fill(0)


def random_latin_square(n: int, rng: np.random.Generator) -> np.ndarray:
    """A Latin square built cell by cell with randomized backtracking, then
    randomly isotoped. Not uniform, but covers many isotopy classes."""
    grid = np.full((n, n), -1, dtype=np.int64)
    rows = [set() for _ in range(n)]
    cols = [set() for _ in range(n)]

    def fill(cell):
        if cell == n * n:
            return True
        r, c = divmod(cell, n)
        for v in rng.permutation(n):
            v = int(v)
            if v not in rows[r] and v not in cols[c]:
                grid[r, c] = v
                rows[r].add(v)
                cols[c].add(v)
                if fill(cell + 1):
                    return True
                rows[r].discard(v)
                cols[c].discard(v)
        grid[r, c] = -1
        return False

    fill(0)
    pr, pc, ps = rng.permutation(n), rng.permutation(n), rng.permutation(n)
    return ps[grid[pr][:, pc]]

