import itertools

import numpy as np
import pytest

from quasiwords import finiteqg as F
from quasiwords import linss as S
from quasiwords import revaut as A


def block_algebra(n, t1, t2, t3):
    """k = 3m with m x m theta blocks and coordinate idempotents."""
    m = t1.shape[0]
    Z, I = np.zeros((m, m), dtype=np.int64), np.eye(m, dtype=np.int64)
    rho = np.block([[Z, Z, t1], [t2, Z, Z], [Z, t3, Z]])
    ids = tuple(np.block([[I * (i == 0), Z, Z], [Z, I * (i == 1), Z], [Z, Z, I * (i == 2)]])
                for i in range(3))
    return S.LinSSAlgebra(n, rho, ids)


def sign_patterns():
    for signs in itertools.product((1, -1), repeat=3):
        yield signs, signs[0] * signs[2] * signs[1] == -1


@pytest.mark.parametrize("n", [5, 7])
@pytest.mark.parametrize("signs, expected", list(sign_patterns()))
def test_sign_patterns(n, signs, expected):
    alg = S.LinSSAlgebra.theta_blocks(n, *signs)
    assert (not S.condition_failures(alg)) == expected
    if expected:
        assert S.verify_semisymmetrized_axioms(alg).ok


def test_inv_mod():
    m = np.array([[2, 1], [1, 1]])
    assert np.array_equal(S.inv_mod(m, 7) @ m % 7, np.eye(2))
    with pytest.raises(S.LinSSError):
        S.inv_mod(np.array([[5, 0], [0, 1]]), 5)


def test_encode_decode():
    idx = np.arange(125)
    v = S.decode(idx, 5, 3)
    assert np.array_equal(S.encode(v, 5), idx)
    assert S.decode(7, 5, 3).tolist() == [0, 1, 2]


def test_failures_are_listed():
    k1 = S.LinSSAlgebra(5, np.array([[4]]), (np.array([[1]]), np.array([[0]]), np.array([[0]])))
    assert S.condition_failures(k1) == ["a1 != a2^rho", "a3 != a1^rho"]
    assert S.condition_failures(S.LinSSAlgebra.theta_blocks(5, 1, 1, 1)) == [
        "rho^3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]] != -1"]
    with pytest.raises(S.LinSSError, match="rho\\^3"):
        S.check_conditions(S.LinSSAlgebra.theta_blocks(7, 1, 1, 1))


def test_corrupted_idempotent():
    alg = S.LinSSAlgebra.theta_blocks(5, 1, 1, -1)
    a1, a2, a3 = alg.idempotents
    a2 = a2.copy()
    a2[1, 0] = 1
    bad = S.LinSSAlgebra(5, alg.rho, (a1, a2, a3))
    assert "a1 + a2 + a3 != 1" in S.condition_failures(bad)
    rep = S.verify_semisymmetrized_axioms(bad)
    failed = [c.name for c in rep.failures()]
    for prefix in ("idempotence", "orthogonal idempotents", "compatibility"):
        assert any(name.startswith(prefix) for name in failed), prefix
    assert all("witness" in c.detail for c in rep.failures() if "samples" in c.name)


def test_misoriented_rho_breaks_only_compatibility():
    alg = S.LinSSAlgebra.theta_blocks(5, 1, 1, -1)
    rho = np.array([[0, 1, 0], [0, 0, 1], [-1, 0, 0]])
    bad = S.LinSSAlgebra(5, rho, alg.idempotents)
    assert S.condition_failures(bad) == ["a1 != a2^rho", "a2 != a3^rho", "a3 != a1^rho"]
    rep = S.verify_semisymmetrized_axioms(bad)
    assert [c.name.split(" ")[0] for c in rep.failures()] == ["compatibility"]


def test_invalid_shapes():
    with pytest.raises(S.LinSSError):
        S.LinSSAlgebra(5, np.eye(3), (np.eye(3), np.eye(2), np.eye(3)))
    with pytest.raises(S.LinSSError):
        S.LinSSAlgebra(1, np.eye(1), (np.eye(1),) * 3)
    with pytest.raises(S.LinSSError, match="cap"):
        S.build_operations(S.LinSSAlgebra.theta_blocks(17, 1, 1, -1))


def test_json_round_trip():
    alg = S.LinSSAlgebra.theta_blocks(7, 1, -1, 1)
    back = S.LinSSAlgebra.from_json(alg.to_json())
    assert back.to_json() == alg.to_json()
    with pytest.raises(S.LinSSError, match="dim"):
        S.LinSSAlgebra.from_json(alg.to_json() | {"dim": 2})


@pytest.mark.parametrize("n, thetas", [(5, (2, 2, 1)), (7, (1, 1, -1)), (7, (3, 5, 6))])
def test_identification_with_scalar_thetas(n, thetas):
    t1, t2, t3 = thetas
    assert (t1 * t3 * t2) % n == n - 1
    alg = S.check_conditions(S.LinSSAlgebra.theta_blocks(n, t1, t2, t3))
    dec = S.extract_thetas(alg)
    b1, b2, b3 = dec.blocks()
    assert (b1.item(), b2.item(), b3.item()) == (t1 % n, t2 % n, t3 % n)
    assert all(dec.products().values())
    aut = S.to_automaton(dec)
    assert aut.sizes == (n, n, n)
    ident = S.identify_semisymmetrization(alg)
    assert ident.ok, str(ident.report)
    # l3 = -theta1; on S3 = span(e3) this is multiplication by -t1
    assert np.array_equal(ident.l3, (-t1 * np.arange(n)) % n)
    if (-t1) % n != (-pow(t1, -1, n)) % n:
        assert not np.array_equal(ident.l3, (-pow(t1, -1, n) * np.arange(n)) % n)


def test_identification_with_matrix_blocks():
    n = 3
    t1 = np.array([[1, 1], [0, 1]])
    t3 = np.array([[0, 1], [2, 0]])
    t2 = (-S.inv_mod(t1 @ t3 % n, n)) % n
    alg = S.check_conditions(block_algebra(n, t1, t2, t3))
    assert alg.size == 729
    assert S.verify_semisymmetrized_axioms(alg).ok
    assert S.identify_semisymmetrization(alg).ok


def test_change_of_basis_keeps_everything():
    alg = S.LinSSAlgebra.theta_blocks(5, 2, 2, 1)
    B = np.array([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    Bi = S.inv_mod(B, 5)
    moved = S.LinSSAlgebra(5, Bi @ alg.rho @ B, tuple(Bi @ a @ B for a in alg.idempotents))
    assert S.condition_failures(moved) == []
    dec = S.extract_thetas(moved)
    assert dec.blocks() is None
    assert S.verify_semisymmetrized_axioms(moved).ok
    ident = S.identify_semisymmetrization(moved)
    assert ident.ok, str(ident.report)


def test_automaton_extracts_to_the_quasigroup():
    alg = S.LinSSAlgebra.theta_blocks(7, 1, 1, -1)
    ident = S.identify_semisymmetrization(alg)
    aut = S.to_automaton(S.extract_thetas(alg))
    assert A.identity_violation(aut) is None
    q = A.extract_quasigroup(aut, ident.l1, ident.l2, ident.l3)
    x = np.arange(7)
    assert np.array_equal(q.mul, (-x[:, None] + x[None, :]) % 7)
    assert F.is_semisymmetric(F.semisymmetrize(q))
