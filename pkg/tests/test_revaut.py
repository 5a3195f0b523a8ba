import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiwords import finiteqg as F
from quasiwords import revaut as A


def random_q(seed, n):
    return F.validate(F.random_latin_square(n, np.random.default_rng(seed)))


def test_from_quasigroup_validates():
    a = A.from_quasigroup(F.cyclic(4))
    assert a.sizes == (4, 4, 4)
    assert A.identity_violation(a) is None


def test_corrupted_automaton_is_rejected():
    data = A.from_quasigroup(F.cyclic(3)).to_json()
    data["ldiv"][0][0] = data["ldiv"][0][1]
    with pytest.raises(A.AutomatonError, match="ILA|SLA"):
        A.from_json(data)


def test_shape_and_range_errors():
    q = F.cyclic(2)
    with pytest.raises(A.AutomatonError, match="shape"):
        A.validate_automaton("ab", "ab", "ab", [[0, 1]], q.rdiv, q.ldiv)
    with pytest.raises(A.AutomatonError, match="outside"):
        A.validate_automaton("ab", "ab", "ab", [[0, 1], [1, 5]], q.rdiv, q.ldiv)


def test_degenerate_automata():
    empty = A.validate_automaton([], [], [], [], [], [])
    assert not A.purity_analysis(empty).pure
    # S1 = S2 = empty, S3 nonempty: every table is empty, so the identities hold vacuously
    a = A.validate_automaton([], [], ["z"], np.zeros((0, 0)), np.zeros((1, 0)), np.zeros((0, 1)))
    assert a.sizes == (0, 0, 1)
    assert not A.purity_analysis(a).pure
    with pytest.raises(A.AutomatonError):
        A.carrier_bijections(A.purity_analysis(a))


def test_purity_maps_are_inverse():
    a = A.from_quasigroup(random_q(1, 5))
    p = A.purity_analysis(a, 2, 3)
    assert p.pure
    assert np.array_equal(p.s3_to_s1[p.s1_to_s3], np.arange(5))
    assert np.array_equal(p.s3_to_s2[p.s2_to_s3], np.arange(5))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_transport_round_trip(seed, n):
    rng = np.random.default_rng(seed)
    q = random_q(seed, n)
    ms = [rng.permutation(n) for _ in range(3)]
    a = A.transport(q, *ms)
    # extracting along the transport maps gives q back exactly
    assert A.extract_quasigroup(a, *ms, q.elements) == q
    # extracting along the purity bijections gives an isotope of q
    p = A.purity_analysis(a, int(rng.integers(n)), int(rng.integers(n)))
    ls = A.carrier_bijections(p)
    q2 = A.extract_quasigroup(a, *ls)
    h = A.isotopy_between(ms, ls, q, q2)
    assert F.is_isotopy(h)


def test_homotopy_gives_automaton_homomorphism():
    q = random_q(4, 3)
    rng = np.random.default_rng(2)
    f1, f2, f3 = (rng.permutation(3) for _ in range(3))
    table = np.empty_like(q.mul)
    table[f1[:, None], f2[None, :]] = f3[q.mul]
    h = F.Homotopy(q, F.validate(table), f1, f2, f3)
    assert A.is_automaton_homomorphism(A.homotopy_to_homomorphism(h))
    broken = F.Homotopy(h.source, h.target, f1, f2, np.roll(f3, 1))
    assert not A.is_automaton_homomorphism(A.homotopy_to_homomorphism(broken))


def test_extract_rejects_non_bijection():
    a = A.from_quasigroup(F.cyclic(3))
    with pytest.raises(A.AutomatonError, match="l2"):
        A.extract_quasigroup(a, [0, 1, 2], [0, 0, 2], [0, 1, 2])


def test_json_round_trip():
    a = A.from_quasigroup(random_q(8, 4))
    b = A.from_json(a.to_json())
    assert b.to_json() == a.to_json()
