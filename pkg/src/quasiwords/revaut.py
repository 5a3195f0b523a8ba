"""Reversible automata of quasigroup type.

An automaton has three state spaces S1, S2, S3 and operations

    mul:  S1 x S2 -> S3,   rdiv: S3 x S2 -> S1,   ldiv: S1 x S3 -> S2

satisfying (ILA) x1\\(x1 x2) = x2, (IRA) (x1 x2)/x2 = x1,
(SLA) x1 (x1\\x3) = x3 and (SRA) (x3/x2) x2 = x3. State spaces may be empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .finiteqg import FiniteQuasigroup, Homotopy, QuasigroupError, validate


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ReversibleAutomaton:
    S1: tuple[str, ...]
    S2: tuple[str, ...]
    S3: tuple[str, ...]
    mul: np.ndarray
    rdiv: np.ndarray
    ldiv: np.ndarray

    @property
    def sizes(self) -> tuple[int, int, int]:
        return len(self.S1), len(self.S2), len(self.S3)

    def to_json(self) -> dict:
        return {
            "S1": list(self.S1), "S2": list(self.S2), "S3": list(self.S3),
            "mul": self.mul.tolist(), "rdiv": self.rdiv.tolist(), "ldiv": self.ldiv.tolist(),
        }


def _table(data, shape: tuple[int, int], target: int, name: str) -> np.ndarray:
    t = np.array(data, dtype=np.int64)
    if t.size == 0:
        t = t.reshape(shape) if 0 in shape else t
    if t.shape != shape:
        raise AutomatonError(f"{name} table has shape {t.shape}, expected {shape}")
    bad = np.argwhere((t < 0) | (t >= target))
    if len(bad):
        i, j = bad[0]
        raise AutomatonError(f"{name}[{i}][{j}] = {t[i, j]} is outside a state space of size {target}")
    t.setflags(write=False)
    return t


def identity_violation(a: ReversibleAutomaton) -> tuple[str, tuple[int, int]] | None:
    """The first failing identity with its witness pair, or None."""
    n1, n2, n3 = a.sizes
    i1 = np.arange(n1)[:, None]
    i2 = np.arange(n2)[None, :]
    i3 = np.arange(n3)[None, :]
    j3 = np.arange(n3)[:, None]
    checks = [
        ("ILA", a.ldiv[i1, a.mul[i1, i2]] != i2, "x1", "x2"),
        ("IRA", a.rdiv[a.mul[i1, i2], i2] != i1, "x1", "x2"),
        ("SLA", a.mul[i1, a.ldiv[i1, i3]] != i3, "x1", "x3"),
        ("SRA", a.mul[a.rdiv[j3, i2], i2] != j3, "x3", "x2"),
    ]
    for name, bad, _, _ in checks:
        hit = np.argwhere(bad)
        if len(hit):
            return name, (int(hit[0][0]), int(hit[0][1]))
    return None


def validate_automaton(S1: Sequence[str], S2: Sequence[str], S3: Sequence[str],
                       mul, rdiv, ldiv) -> ReversibleAutomaton:
    S1, S2, S3 = (tuple(str(s) for s in S) for S in (S1, S2, S3))
    n1, n2, n3 = len(S1), len(S2), len(S3)
    a = ReversibleAutomaton(
        S1, S2, S3,
        _table(mul, (n1, n2), n3, "mul"),
        _table(rdiv, (n3, n2), n1, "rdiv"),
        _table(ldiv, (n1, n3), n2, "ldiv"),
    )
    bad = identity_violation(a)
    if bad is not None:
        name, (i, j) = bad
        raise AutomatonError(f"{name} fails at ({i}, {j})")
    return a


def from_json(data: dict) -> ReversibleAutomaton:
    return validate_automaton(data["S1"], data["S2"], data["S3"],
                              data["mul"], data["rdiv"], data["ldiv"])


def from_quasigroup(q: FiniteQuasigroup) -> ReversibleAutomaton:
    e = q.elements
    return validate_automaton(e, e, e, q.mul, q.rdiv, q.ldiv)


def transport(q: FiniteQuasigroup, m1, m2, m3, names=None) -> ReversibleAutomaton:
    """The automaton obtained by relabelling the three copies of q along
    bijections m_i: Q -> S_i (given as index arrays)."""
    m1, m2, m3 = (np.asarray(m, dtype=np.int64) for m in (m1, m2, m3))
    n = q.order
    inv = [np.argsort(m) for m in (m1, m2, m3)]
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    # mul[m1 x, m2 y] = m3(x y) and so on, written on the S-side indices.
    mul = m3[q.mul[inv[0][x], inv[1][y]]]
    rdiv = m1[q.rdiv[inv[2][x], inv[1][y]]]
    ldiv = m2[q.ldiv[inv[0][x], inv[2][y]]]
    names = names or [[f"s{i}_{k}" for k in range(n)] for i in (1, 2, 3)]
    return validate_automaton(names[0], names[1], names[2], mul, rdiv, ldiv)


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AutomatonHomomorphism:
    source: ReversibleAutomaton
    target: ReversibleAutomaton
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray

    def __post_init__(self):
        for name in ("f1", "f2", "f3"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.int64))


def homomorphism_violation(h: AutomatonHomomorphism) -> tuple[str, tuple[int, int]] | None:
    s, t = h.source, h.target
    for f, n, m in zip((h.f1, h.f2, h.f3), s.sizes, t.sizes):
        if f.shape != (n,) or (n and (f.min() < 0 or f.max() >= m)):
            raise AutomatonError("homomorphism components do not match the state spaces")
    n1, n2, n3 = s.sizes
    i1 = np.arange(n1)[:, None]
    i2 = np.arange(n2)[None, :]
    i3 = np.arange(n3)[None, :]
    j3 = np.arange(n3)[:, None]
    checks = [
        ("mul", t.mul[h.f1[i1], h.f2[i2]] != h.f3[s.mul[i1, i2]]),
        ("rdiv", t.rdiv[h.f3[j3], h.f2[i2]] != h.f1[s.rdiv[j3, i2]]),
        ("ldiv", t.ldiv[h.f1[i1], h.f3[i3]] != h.f2[s.ldiv[i1, i3]]),
    ]
    for name, bad in checks:
        hit = np.argwhere(bad)
        if len(hit):
            return name, (int(hit[0][0]), int(hit[0][1]))
    return None


def is_automaton_homomorphism(h: AutomatonHomomorphism) -> bool:
    return homomorphism_violation(h) is None


def homotopy_to_homomorphism(h: Homotopy) -> AutomatonHomomorphism:
    return AutomatonHomomorphism(from_quasigroup(h.source), from_quasigroup(h.target),
                                 h.f1, h.f2, h.f3)


# -- purity -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Purity:
    pure: bool
    s1: int | None = None
    s2: int | None = None
    s1_to_s3: np.ndarray | None = None  # x1 -> x1 s2
    s3_to_s1: np.ndarray | None = None  # x3 -> x3 / s2
    s2_to_s3: np.ndarray | None = None  # x2 -> s1 x2
    s3_to_s2: np.ndarray | None = None  # x3 -> s1 \ x3


def purity_analysis(a: ReversibleAutomaton, s1: int = 0, s2: int = 0) -> Purity:
    """Classify as degenerate (two or more empty state spaces) or pure, and in
    the pure case return the explicit bijections through S3."""
    if sum(n == 0 for n in a.sizes) >= 2:
        return Purity(False)
    # A valid automaton with a single empty space cannot exist: a table from a
    # nonempty domain into an empty space would be needed.
    s1_to_s3 = a.mul[:, s2].copy()
    s3_to_s1 = a.rdiv[:, s2].copy()
    s2_to_s3 = a.mul[s1, :].copy()
    s3_to_s2 = a.ldiv[s1, :].copy()
    n1, n2, n3 = a.sizes
    if not (np.array_equal(s3_to_s1[s1_to_s3], np.arange(n1))
            and np.array_equal(s1_to_s3[s3_to_s1], np.arange(n3))
            and np.array_equal(s3_to_s2[s2_to_s3], np.arange(n2))
            and np.array_equal(s2_to_s3[s3_to_s2], np.arange(n3))):
        raise AutomatonError("purity maps are not mutually inverse; automaton is invalid")
    return Purity(True, s1, s2, s1_to_s3, s3_to_s1, s2_to_s3, s3_to_s2)


def carrier_bijections(p: Purity) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """l1, l2, l3 with carrier Q = S3: l1 = (x -> x/s2), l2 = (x -> s1\\x), l3 = 1."""
    if not p.pure:
        raise AutomatonError("degenerate automaton has no carrier bijections")
    return p.s3_to_s1, p.s3_to_s2, np.arange(len(p.s3_to_s1))


def extract_quasigroup(a: ReversibleAutomaton, l1, l2, l3,
                       elements: Sequence[str] | None = None) -> FiniteQuasigroup:
    """The quasigroup on Q with x.y = (x^l1 . y^l2) l3^-1 and likewise for the
    divisions; l_i: Q -> S_i are bijections given as index arrays."""
    ls = [np.asarray(l, dtype=np.int64) for l in (l1, l2, l3)]
    n = len(ls[0])
    for i, (l, size) in enumerate(zip(ls, a.sizes), start=1):
        if l.shape != (n,) or size != n or not np.array_equal(np.sort(l), np.arange(n)):
            raise AutomatonError(f"l{i} is not a bijection onto S{i}")
    l1, l2, l3 = ls
    inv1, inv2, inv3 = (np.argsort(l) for l in ls)
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    mul = inv3[a.mul[l1[x], l2[y]]]
    rdiv = inv1[a.rdiv[l3[x], l2[y]]]
    ldiv = inv2[a.ldiv[l1[x], l3[y]]]
    q = validate(mul, elements)
    if not (np.array_equal(q.rdiv, rdiv) and np.array_equal(q.ldiv, ldiv)):
        raise QuasigroupError("transported divisions disagree with the derived divisions")
    return q


def isotopy_between(l_src, l_dst, src: FiniteQuasigroup, dst: FiniteQuasigroup) -> Homotopy:
    """Given two extractions of the same automaton, the isotopy
    (l1 l1'^-1, l2 l2'^-1, l3 l3'^-1) from the first quasigroup to the second."""
    comps = [np.argsort(np.asarray(b))[np.asarray(a)] for a, b in zip(l_src, l_dst)]
    return Homotopy(src, dst, *comps)
