import random
from fractions import Fraction
from itertools import product as cartesian

import pytest

from trias import linalg
from trias.algebra import (
    TRIALGEBRA_AXIOMS,
    Trialgebra,
    associativity_failure,
    basis_vector,
    centralizer,
    check_dialgebra,
    check_homomorphism,
    check_trialgebra,
    is_associative,
    multiply,
    star_product,
    tensor_from_entries,
    transport,
)
from trias.catalog import instantiate, list_entries
from trias.errors import DimensionError
from trias.fingerprint import fingerprint
from trias.linalg import Subspace

from conftest import random_associative_tensor, random_invertible

F = Fraction


def naive_mul(c, x, y):
    n = len(x)
    out = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return out


def integral(c):
    # integer tensors make the oracle fast; rational ones are kept as they are
    if all(v.denominator == 1 for plane in c for row in plane for v in row):
        return [[[int(v) for v in row] for row in plane] for plane in c]
    return c


# the eleven identities written out by hand, in the form lhs(x,y,z), rhs(x,y,z)
def oracle_identities(t):
    lt, rt, mt = integral(t.left), integral(t.right), integral(t.middle)
    L = lambda a, b: naive_mul(lt, a, b)  # noqa: E731
    R = lambda a, b: naive_mul(rt, a, b)  # noqa: E731
    M = lambda a, b: naive_mul(mt, a, b)  # noqa: E731
    return {
        "T1": (lambda x, y, z: L(L(x, y), z), lambda x, y, z: L(x, L(y, z))),
        "T2": (lambda x, y, z: L(L(x, y), z), lambda x, y, z: L(x, R(y, z))),
        "T3": (lambda x, y, z: L(R(x, y), z), lambda x, y, z: R(x, L(y, z))),
        "T4": (lambda x, y, z: R(L(x, y), z), lambda x, y, z: R(x, R(y, z))),
        "T5": (lambda x, y, z: R(R(x, y), z), lambda x, y, z: R(x, R(y, z))),
        "T6": (lambda x, y, z: L(L(x, y), z), lambda x, y, z: L(x, M(y, z))),
        "T7": (lambda x, y, z: L(M(x, y), z), lambda x, y, z: M(x, L(y, z))),
        "T8": (lambda x, y, z: M(L(x, y), z), lambda x, y, z: M(x, R(y, z))),
        "T9": (lambda x, y, z: M(R(x, y), z), lambda x, y, z: R(x, M(y, z))),
        "T10": (lambda x, y, z: R(M(x, y), z), lambda x, y, z: R(x, R(y, z))),
        "T11": (lambda x, y, z: M(M(x, y), z), lambda x, y, z: M(x, M(y, z))),
    }


def oracle_holds_on_random(t, rng, triples=200):
    # each identity is trilinear, so a rational triple passes iff its cleared-denominator
    # integer multiple does; sampling integer vectors loses nothing
    ids = oracle_identities(t)
    for _ in range(triples):
        x, y, z = ([rng.randint(-6, 6) for _ in range(t.dim)] for _ in range(3))
        for lhs, rhs in ids.values():
            if lhs(x, y, z) != rhs(x, y, z):
                return False
    return True


def upper_triangular_like():
    # e1*e1 = e1, e1*e2 = e2
    return tensor_from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1})


def e(n, i):
    return basis_vector(n, i - 1)


# multiply


def test_multiply_examples(t26):
    assert multiply(t26, "left", e(2, 1), e(2, 1)) == (1, 0)
    t33 = instantiate("Trias_3^3")
    assert multiply(t33, "middle", e(3, 2), e(3, 3)) == (1, 0, 1)
    for p in ("left", "right", "middle"):
        assert multiply(t33, p, (0, 0, 0), (F(1, 2), 3, -1)) == (0, 0, 0)


def test_multiply_length_mismatch(t26):
    with pytest.raises(DimensionError):
        multiply(t26, "left", (1, 0, 0), (1, 0))


# axioms


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_zero_algebra_passes(n):
    assert check_trialgebra(Trialgebra.zero(n)).ok
    assert check_dialgebra(Trialgebra.zero(n)).ok


def test_axiom_table_matches_hand_written_identities():
    assert list(TRIALGEBRA_AXIOMS) == list(oracle_identities(Trialgebra.zero(1)))


def test_diagonal_of_associative_passes():
    c = upper_triangular_like()
    assert is_associative(c)
    assert check_trialgebra(Trialgebra.diagonal(c)).ok


def test_trias33_fails_t11_at_e2_e2_e2():
    report = check_trialgebra(instantiate("Trias_3^3"))
    assert report.violated_axioms == ["T11"]
    v = report.first_witness("T11")
    assert v.triple == (2, 2, 2)
    assert v.lhs == (0, 0, 0)
    assert v.rhs == (1, 0, 1)


def test_dialgebra_examples(t26):
    assert check_dialgebra(t26).ok
    assert list(check_dialgebra(t26).checked) == ["D1", "D2", "D3", "D4", "D5"]
    # the table e1⊣e1 = e2 alone is left-associative: both sides of D1 vanish
    lone = Trialgebra(2, tensor_from_entries(2, {(0, 0, 1): 1}), Trialgebra.zero(2).right, Trialgebra.zero(2).middle)
    assert not any(v.axiom == "D1" for v in check_dialgebra(lone).violations)


def test_dialgebra_d1_witness_found_by_brute_force():
    # smallest ⊣ tables over {0,1} with e1⊣e1 = e2 that break D1, checked by the oracle
    zero = Trialgebra.zero(2)
    found = None
    for bits in cartesian((0, 1), repeat=8):
        entries = {(i, j, k): bits[i * 4 + j * 2 + k] for i, j, k in cartesian(range(2), repeat=3)}
        if entries[(0, 0, 1)] != 1:
            continue
        t = Trialgebra(2, tensor_from_entries(2, entries), zero.right, zero.middle)
        lhs, rhs = oracle_identities(t)["T1"]
        if lhs(e(2, 1), e(2, 1), e(2, 1)) != rhs(e(2, 1), e(2, 1), e(2, 1)):
            found = t
            break
    assert found is not None
    report = check_dialgebra(found)
    assert report.first_witness("D1").triple == (1, 1, 1)
    # the pinned instance: e1⊣e1 = e2, e1⊣e2 = e1
    pinned = Trialgebra(2, tensor_from_entries(2, {(0, 0, 1): 1, (0, 1, 0): 1}), zero.right, zero.middle)
    w = check_dialgebra(pinned).first_witness("D1")
    assert w.triple == (1, 1, 1) and w.lhs == (0, 0) and w.rhs == (1, 0)


@pytest.mark.parametrize("entry", [e.id for e in list_entries()])
def test_checker_agrees_with_random_triple_oracle(entry):
    t = instantiate(entry)
    rng = random.Random(entry)
    assert check_trialgebra(t).ok == oracle_holds_on_random(t, rng)


def test_checker_agrees_with_oracle_on_random_tables(rng):
    for _ in range(15):
        n = rng.choice((2, 3))
        tensors = [
            tensor_from_entries(n, {(i, j, k): rng.choice((0, 0, 0, 1)) for i, j, k in cartesian(range(n), repeat=3)})
            for _ in range(3)
        ]
        t = Trialgebra(n, *tensors)
        assert check_trialgebra(t).ok == oracle_holds_on_random(t, rng, triples=60)


def test_violations_report_both_sides():
    t = instantiate("Trias_2^5")
    ids = oracle_identities(t)
    for v in check_trialgebra(t).violations:
        x, y, z = (e(2, i) for i in v.triple)
        lhs, rhs = ids[v.axiom]
        assert tuple(lhs(x, y, z)) == v.lhs
        assert tuple(rhs(x, y, z)) == v.rhs
        assert v.lhs != v.rhs


# star product


def test_star_examples(t26):
    assert star_product(Trialgebra.zero(3)) == Trialgebra.zero(3).left
    s = star_product(t26)
    assert s[0][0] == (1, 0)
    assert s[1][0] == (0, 1)
    assert s[0][1] == (0, 0)
    assert s[1][1] == (0, 0)
    c = upper_triangular_like()
    assert star_product(Trialgebra.diagonal(c)) == c


def test_star_associative_on_passing_entries(passing_ids):
    for id in passing_ids:
        assert associativity_failure(star_product(instantiate(id))) is None, id


def test_associativity_failure_reports_triple():
    c = tensor_from_entries(2, {(0, 0, 1): 1, (0, 1, 0): 1})
    assert associativity_failure(c) is not None
    assert is_associative(upper_triangular_like())


# homomorphisms


def test_homomorphism_examples(t26):
    assert check_homomorphism(t26, t26, linalg.identity(2))
    assert check_homomorphism(t26, t26, linalg.zeros(2))
    res = check_homomorphism(t26, t26, ((2, 0), (0, 2)))
    assert not res.ok
    assert res.witness == ("left", 1, 1)


def test_homomorphism_shape_mismatch(t26):
    with pytest.raises(DimensionError):
        check_homomorphism(t26, t26, ((1, 0, 0), (0, 1, 0)))


def test_homomorphism_composition(rng, passing_ids):
    for id in passing_ids[:8]:
        a = instantiate(id)
        P = random_invertible(rng, a.dim)
        Q = random_invertible(rng, a.dim)
        b = transport(a, P)
        c = transport(b, Q)
        assert check_homomorphism(a, b, P)
        assert check_homomorphism(b, c, Q)
        assert check_homomorphism(a, c, linalg.matmul(Q, P))


def test_transport_of_identity_is_noop(t26):
    assert transport(t26, linalg.identity(2)).tensors() == t26.tensors()


# centralizer


def test_centralizer_examples(t26):
    assert centralizer(Trialgebra.zero(3)) == Subspace.full(3)
    assert centralizer(t26) == Subspace.zero(2)
    assert centralizer(instantiate("Trias_3^3")) == Subspace.span([(1, 0, 0)], 3)


def test_centralizer_of_subset(t26):
    # anything killing e2 on both sides under all three products
    z = centralizer(t26, [e(2, 2)])
    for v in z.basis:
        for p in ("left", "right", "middle"):
            assert multiply(t26, p, v, e(2, 2)) == (0, 0)
            assert multiply(t26, p, e(2, 2), v) == (0, 0)
    with pytest.raises(DimensionError):
        centralizer(t26, [(1, 0, 0)])


# fingerprint


@pytest.mark.parametrize("n", [2, 3])
def test_zero_algebra_fingerprint(n):
    fp = fingerprint(Trialgebra.zero(n))
    assert (fp.dim_der, fp.dim_centroid, fp.dim_square, fp.dim_centralizer) == (n * n, n * n, 0, n)


def test_fingerprint_examples(t26):
    fp = fingerprint(t26)
    assert fp.dim_square == 2
    assert fingerprint(instantiate("Trias_3^6")) != fp
    assert fp.as_dict()["left_unital"] == {"left": False, "right": False, "middle": False}


def test_unit_detection():
    from trias.algebra import has_unit

    c = upper_triangular_like()  # e1 is a left unit, no right unit
    assert has_unit(c, "left")
    assert not has_unit(c, "right")
    unital = tensor_from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    assert has_unit(unital, "left") and has_unit(unital, "right")


def test_basis_change_preserves_axiom_verdict_and_fingerprint(rng):
    for id in ("Trias_2^6", "Trias_3^3", "Trias_3^8", "Trias_2^5"):
        t = instantiate(id)
        moved = transport(t, random_invertible(rng, t.dim))
        assert check_trialgebra(moved).ok == check_trialgebra(t).ok
        assert fingerprint(moved) == fingerprint(t)


def test_random_associative_tensors_are_associative(rng):
    for n in (2, 3):
        for _ in range(5):
            assert is_associative(random_associative_tensor(rng, n))
