"""Linear semisymmetrized algebras on P = Z_n^k.

Elements are row vectors and endomorphisms act on the right, so ``x rho`` is
``x @ rho`` and ``rho a1`` means "first rho, then a1". The operations are

    x . y = x rho + y lambda,        (x1, x2, x3) alpha = x1 a1 + x2 a2 + x3 a3.

Elements of P are encoded as integers with the first coordinate most
significant.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .finiteqg import (
    FiniteQuasigroup,
    Report,
    is_semisymmetric,
    semisymmetrize,
    triple_components,
    validate,
)
from .revaut import ReversibleAutomaton, extract_quasigroup, validate_automaton

MAX_ELEMENTS = 4096
EXHAUSTIVE_LIMIT = 10**6
SAMPLES = 10_000


class LinSSError(ValueError):
    pass


def inv_mod(m: np.ndarray, n: int) -> np.ndarray:
    from sympy import Matrix

    try:
        inv = Matrix(m.tolist()).inv_mod(n)
    except ValueError as exc:
        raise LinSSError(f"matrix is not invertible mod {n}") from exc
    return np.array(inv.tolist(), dtype=np.int64) % n


@dataclass(frozen=True, eq=False)
class LinSSAlgebra:
    modulus: int
    rho: np.ndarray
    idempotents: tuple[np.ndarray, np.ndarray, np.ndarray]
    lam: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.modulus
        rho = np.asarray(self.rho, dtype=np.int64) % n
        ids = tuple(np.asarray(a, dtype=np.int64) % n for a in self.idempotents)
        k = rho.shape[0]
        if n < 2:
            raise LinSSError("modulus must be at least 2")
        if rho.shape != (k, k) or any(a.shape != (k, k) for a in ids) or len(ids) != 3:
            raise LinSSError("rho and the three idempotents must be square matrices of one size")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "idempotents", ids)
        object.__setattr__(self, "lam", inv_mod(rho, n))

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    @property
    def size(self) -> int:
        return self.modulus ** self.dim

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "dim": self.dim, "rho": self.rho.tolist(),
                "idempotents": [a.tolist() for a in self.idempotents]}

    @classmethod
    def from_json(cls, data: dict) -> LinSSAlgebra:
        alg = cls(int(data["modulus"]), np.array(data["rho"]),
                  tuple(np.array(a) for a in data["idempotents"]))
        if "dim" in data and int(data["dim"]) != alg.dim:
            raise LinSSError(f"dim {data['dim']} does not match matrices of size {alg.dim}")
        return alg

    @classmethod
    def theta_blocks(cls, modulus: int, t1: int, t2: int, t3: int) -> LinSSAlgebra:
        """k = 3, a_i the coordinate projections and
        [x1 x2 x3] rho = [x2 t2, x3 t3, x1 t1]."""
        rho = np.array([[0, 0, t1], [t2, 0, 0], [0, t3, 0]])
        ids = tuple(np.diag([int(i == j) for j in range(3)]) for i in range(3))
        return cls(modulus, rho, ids)


def _mm(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return (a @ b) % n


def condition_failures(alg: LinSSAlgebra) -> list[str]:
    n, k = alg.modulus, alg.dim
    one = np.eye(k, dtype=np.int64)
    zero = np.zeros((k, k), dtype=np.int64)
    a1, a2, a3 = alg.idempotents
    rho, lam = alg.rho, alg.lam
    out = []
    if not np.array_equal((a1 + a2 + a3) % n, one):
        out.append("a1 + a2 + a3 != 1")
    for i, ai in enumerate(alg.idempotents, start=1):
        for j, aj in enumerate(alg.idempotents, start=1):
            want = ai if i == j else zero
            if not np.array_equal(_mm(ai, aj, n), want):
                out.append(f"a{i} a{j} != {'a%d' % i if i == j else '0'}")
    if not np.array_equal(_mm(rho, lam, n), one) or not np.array_equal(_mm(lam, rho, n), one):
        out.append("rho lambda != 1")
    rho3 = _mm(_mm(rho, rho, n), rho, n)
    if not np.array_equal(rho3, (-one) % n):
        out.append(f"rho^3 = {rho3.tolist()} != -1")
    # a^rho = rho^-1 a rho
    for (i, ai), (j, aj) in (((1, a1), (2, a2)), ((2, a2), (3, a3)), ((3, a3), (1, a1))):
        if not np.array_equal(ai, _mm(_mm(lam, aj, n), rho, n)):
            out.append(f"a{i} != a{j}^rho")
    return out


def check_conditions(alg: LinSSAlgebra) -> LinSSAlgebra:
    """Raise LinSSError listing every violated condition."""
    bad = condition_failures(alg)
    if bad:
        raise LinSSError("; ".join(bad))
    return alg


# -- tables -------------------------------------------------------------------

def encode(v: np.ndarray, n: int) -> np.ndarray:
    v = np.asarray(v) % n
    out = np.zeros(v.shape[:-1], dtype=np.int64)
    for j in range(v.shape[-1]):
        out = out * n + v[..., j]
    return out


def decode(i, n: int, k: int) -> np.ndarray:
    i = np.asarray(i, dtype=np.int64)
    digits = []
    for _ in range(k):
        digits.append(i % n)
        i = i // n
    return np.stack(digits[::-1], axis=-1)


@dataclass(frozen=True, eq=False)
class LinSSTables:
    alg: LinSSAlgebra
    vectors: np.ndarray  # (N, k)
    mul: np.ndarray  # (N, N)

    def alpha(self, i, j, l):
        """(x_i, x_j, x_l) alpha on encoded elements, vectorized."""
        n, k = self.alg.modulus, self.alg.dim
        a1, a2, a3 = self.alg.idempotents
        v = decode(i, n, k) @ a1 + decode(j, n, k) @ a2 + decode(l, n, k) @ a3
        return encode(v, n)

    def add(self, i, j):
        n, k = self.alg.modulus, self.alg.dim
        return encode(decode(i, n, k) + decode(j, n, k), n)

    def neg(self, i):
        n, k = self.alg.modulus, self.alg.dim
        return encode(-decode(i, n, k), n)

    def apply(self, i, m: np.ndarray):
        n, k = self.alg.modulus, self.alg.dim
        return encode(decode(i, n, k) @ m, n)


def build_operations(alg: LinSSAlgebra) -> LinSSTables:
    if alg.size > MAX_ELEMENTS:
        raise LinSSError(f"|P| = {alg.size} exceeds the table cap of {MAX_ELEMENTS}")
    n, k = alg.modulus, alg.dim
    vecs = decode(np.arange(alg.size), n, k)
    xr = encode(vecs @ alg.rho, n)
    yl = encode(vecs @ alg.lam, n)
    vr, vl = decode(xr, n, k), decode(yl, n, k)
    mul = encode(vr[:, None, :] + vl[None, :, :], n)
    return LinSSTables(alg, vecs, mul)


# -- axioms -------------------------------------------------------------------

def _tuples(size: int, arity: int, rng: np.random.Generator):
    """All arity-tuples of element indices when few enough, else a random sample."""
    if size ** arity <= EXHAUSTIVE_LIMIT:
        grids = np.meshgrid(*[np.arange(size)] * arity, indexing="ij")
        return [g.ravel() for g in grids], True
    return [rng.integers(0, size, SAMPLES) for _ in range(arity)], False


def _witness(bad: np.ndarray, cols) -> str:
    hit = int(np.argmax(bad))
    return "witness " + str(tuple(int(c[hit]) for c in cols))


def verify_semisymmetrized_axioms(alg: LinSSAlgebra, seed: int = 0) -> Report:
    """Check the axioms of a semisymmetrized algebra directly on the tables."""
    rng = np.random.default_rng(seed)
    tab = build_operations(alg)
    N = alg.size
    rep = Report()
    try:
        q = validate(tab.mul)
        rep.add("(P,.) quasigroup", True)
        rep.add("(P,.) semisymmetric", is_semisymmetric(q))
        zero = 0
        # R(0): y -> y.0 and L(0)^-1 both equal rho
        rho_map = tab.apply(np.arange(N), alg.rho)
        rep.add("R(0) = L(0)^-1 = rho",
                np.array_equal(q.mul[:, zero], rho_map) and np.array_equal(q.ldiv[zero, :], rho_map))
    except ValueError as exc:
        rep.add("(P,.) quasigroup", False, str(exc))

    idx = np.arange(N)
    rep.add("idempotence (x,x,x)alpha = x", np.array_equal(tab.alpha(idx, idx, idx), idx))

    cols, exhaustive = _tuples(N, 9, rng)
    x = [cols[3 * r:3 * r + 3] for r in range(3)]
    lhs = tab.alpha(tab.alpha(*x[0]), tab.alpha(*x[1]), tab.alpha(*x[2]))
    rhs = tab.alpha(x[0][0], x[1][1], x[2][2])
    bad = lhs != rhs
    rep.add("diagonal identity" + ("" if exhaustive else f" ({SAMPLES} samples)"),
            not bad.any(), _witness(bad, cols) if bad.any() else "")

    n, k = alg.modulus, alg.dim
    a = alg.idempotents
    orth = all(np.array_equal(_mm(a[i], a[j], n), a[i] if i == j else np.zeros((k, k)))
               for i in range(3) for j in range(3))
    rep.add("orthogonal idempotents", orth)

    cols, exhaustive = _tuples(N, 6, rng)
    x1, x2, x3, y1, y2, y3 = cols
    m = tab.mul
    lhs = tab.alpha(m[x1, y1], m[x2, y2], m[x3, y3])
    rhs = m[tab.alpha(x3, x1, x2), tab.alpha(y2, y3, y1)]
    bad = lhs != rhs
    rep.add("compatibility" + ("" if exhaustive else f" ({SAMPLES} samples)"),
            not bad.any(), _witness(bad, cols) if bad.any() else "")
    return rep


# -- theta decomposition --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ThetaDecomposition:
    """S_i = Im a_i as sorted lists of encoded elements of P; theta maps are
    index arrays between those lists (theta1: S1->S3, theta2: S2->S1,
    theta3: S3->S2)."""

    tables: LinSSTables
    S: tuple[np.ndarray, np.ndarray, np.ndarray]
    theta1: np.ndarray
    theta2: np.ndarray
    theta3: np.ndarray

    @property
    def alg(self) -> LinSSAlgebra:
        return self.tables.alg

    def inverse(self, i: int) -> np.ndarray:
        return np.argsort((self.theta1, self.theta2, self.theta3)[i - 1])

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray] | None:
        """theta_i as submatrices of rho when the a_i are coordinate projections."""
        alg = self.alg
        coords = []
        for a in alg.idempotents:
            d = np.diag(a)
            if not (np.array_equal(a, np.diag(d)) and set(d.tolist()) <= {0, 1}):
                return None
            coords.append(np.flatnonzero(d))
        c1, c2, c3 = coords
        r = alg.rho
        return r[np.ix_(c1, c3)], r[np.ix_(c2, c1)], r[np.ix_(c3, c2)]

    def products(self) -> dict[str, bool]:
        """theta1 theta3 theta2 = -1 on S1, and the two cyclic shifts."""
        t1, t2, t3 = self.theta1, self.theta2, self.theta3
        out = {}
        for name, space, chain in (
            ("theta1 theta3 theta2", 0, (t1, t3, t2)),
            ("theta2 theta1 theta3", 1, (t2, t1, t3)),
            ("theta3 theta2 theta1", 2, (t3, t2, t1)),
        ):
            elems = self.S[space]
            pos = np.arange(len(elems))
            for t in chain:
                pos = t[pos]
            neg = self.tables.neg(elems)
            out[name] = bool(np.array_equal(elems[pos], neg))
        return out


def extract_thetas(alg: LinSSAlgebra) -> ThetaDecomposition:
    tab = build_operations(alg)
    n = alg.modulus
    everything = np.arange(alg.size)
    S = tuple(np.unique(tab.apply(everything, a)) for a in alg.idempotents)
    thetas = []
    for src, dst, name in ((0, 2, "theta1"), (1, 0, "theta2"), (2, 1, "theta3")):
        img = tab.apply(S[src], alg.rho)
        pos = np.searchsorted(S[dst], img)
        pos = np.minimum(pos, len(S[dst]) - 1)
        if not np.array_equal(S[dst][pos], img):
            raise LinSSError(f"rho does not carry S{src + 1} into S{dst + 1} ({name})")
        if len(np.unique(pos)) != len(pos) or len(pos) != len(S[dst]):
            raise LinSSError(f"{name} is not a bijection")
        thetas.append(pos)
    dec = ThetaDecomposition(tab, S, *thetas)
    failed = [k for k, ok in dec.products().items() if not ok]
    if failed:
        raise LinSSError("theta products are not -1: " + ", ".join(failed))
    # P = S1 + S2 + S3 as a direct sum
    if len(S[0]) * len(S[1]) * len(S[2]) != alg.size or n < 2:
        raise LinSSError("images of the idempotents do not decompose P")
    return dec


def to_automaton(dec: ThetaDecomposition) -> ReversibleAutomaton:
    """State spaces S1, S2, S3 with

        y3 / x2 = y3 theta1^-1 + x2 theta2,
        y1 \\ x3 = y1 theta2^-1 + x3 theta3,
        x1 . y2 = x1 theta1 + y2 theta3^-1.
    """
    tab = dec.tables
    S1, S2, S3 = dec.S

    def lookup(space, vals):
        return np.searchsorted(space, vals)

    t1, t2, t3 = dec.theta1, dec.theta2, dec.theta3
    t1i, t2i, t3i = dec.inverse(1), dec.inverse(2), dec.inverse(3)
    i1 = np.arange(len(S1))
    i2 = np.arange(len(S2))
    i3 = np.arange(len(S3))
    mul = lookup(S3, tab.add(S3[t1[i1]][:, None], S3[t3i[i2]][None, :]))
    rdiv = lookup(S1, tab.add(S1[t1i[i3]][:, None], S1[t2[i2]][None, :]))
    ldiv = lookup(S2, tab.add(S2[t2i[i1]][:, None], S2[t3[i3]][None, :]))
    n, k = dec.alg.modulus, dec.alg.dim
    names = [[str(decode(e, n, k).tolist()) for e in S] for S in dec.S]
    return validate_automaton(*names, mul, rdiv, ldiv)


@dataclass
class Identification:
    quasigroup: FiniteQuasigroup
    l1: np.ndarray
    l2: np.ndarray
    l3: np.ndarray
    coordinate_map: np.ndarray  # P -> A^3 as triple indices
    report: Report

    @property
    def ok(self) -> bool:
        return self.report.ok


def identify_semisymmetrization(alg: LinSSAlgebra) -> Identification:
    """Realize (P, ., alpha) as the semisymmetrization of x.y = -x+y on A = S1.

    l1 = 1, l2 = theta2^-1 and l3 = l2 theta3^-1, which equals -theta1.
    """
    dec = extract_thetas(alg)
    tab = dec.tables
    S1, S2, S3 = dec.S
    m = len(S1)
    rep = Report()
    l1 = np.arange(m)
    l2 = dec.inverse(2)
    l3 = dec.inverse(3)[l2]
    minus_theta1 = np.searchsorted(S3, tab.neg(S3[dec.theta1]))
    rep.add("l3 = l2 theta3^-1 = -theta1", np.array_equal(l3, minus_theta1))

    aut = to_automaton(dec)
    names = [str(decode(e, alg.modulus, alg.dim).tolist()) for e in S1]
    q = extract_quasigroup(aut, l1, l2, l3, names)
    x = np.arange(m)[:, None]
    y = np.arange(m)[None, :]
    opposed = np.searchsorted(S1, tab.add(tab.neg(S1[x]), S1[y]))
    rep.add("extracted operation is x.y = -x + y", np.array_equal(q.mul, opposed))

    # [x1 x2 x3] -> (x1 l1^-1, x2 l2^-1, x3 l3^-1)
    everything = np.arange(alg.size)
    a1, a2, a3 = alg.idempotents
    c1 = np.searchsorted(S1, tab.apply(everything, a1))
    c2 = np.searchsorted(S2, tab.apply(everything, a2))
    c3 = np.searchsorted(S3, tab.apply(everything, a3))
    phi = (c1 * m + np.argsort(l2)[c2]) * m + np.argsort(l3)[c3]
    rep.add("coordinate map is bijective", len(np.unique(phi)) == alg.size)

    qd = semisymmetrize(q)
    P = np.arange(alg.size)
    same = np.array_equal(phi[tab.mul[P[:, None], P[None, :]]], qd.mul[phi[:, None], phi[None, :]])
    rep.add("(P,.) isomorphic to the semisymmetrization", same)
    rep.add("semisymmetrization is semisymmetric", is_semisymmetric(qd))

    # alpha corresponds to picking components: (u, v, w) -> (u1, v2, w3)
    rng = np.random.default_rng(0)
    cols, _ = _tuples(alg.size, 3, rng)
    u, v, w = cols
    pu, pv, pw = (triple_components(m, phi[c]) for c in (u, v, w))
    lhs = phi[tab.alpha(u, v, w)]
    rhs = (pu[0] * m + pv[1]) * m + pw[2]
    rep.add("alpha corresponds to (u1, v2, w3)", np.array_equal(lhs, rhs))
    return Identification(q, l1, l2, l3, phi, rep)
