import random
from fractions import Fraction
from itertools import product as cartesian

import pytest

from trias import linalg
from trias.algebra import Trialgebra, check_trialgebra, is_associative, tensor_from_entries, transport
from trias.catalog import instantiate, list_entries


def random_rational(rng, lo=-3, hi=3, dens=(1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_matrix(rng, rows, cols, lo=-3, hi=3):
    return tuple(tuple(random_rational(rng, lo, hi) for _ in range(cols)) for _ in range(rows))


def random_invertible(rng, n):
    while True:
        m = random_matrix(rng, n, n)
        if linalg.rank(m) == n:
            return m


def random_semigroup_table(rng, n):
    # rejection sample a random associative table on {0..n-1}
    while True:
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        if all(table[table[a][b]][c] == table[a][table[b][c]] for a, b, c in cartesian(range(n), repeat=3)):
            return table


def random_associative_tensor(rng, n):
    """Semigroup algebra, possibly rescaled, seen in a random basis."""
    table = random_semigroup_table(rng, n)
    s = random_rational(rng, 1, 3) if rng.random() < 0.3 else 1  # a scaled product stays associative
    c = tensor_from_entries(n, {(i, j, table[i][j]): s for i in range(n) for j in range(n)})
    P = random_invertible(rng, n)
    moved = transport(Trialgebra.diagonal(c), P).left
    assert is_associative(moved)
    return moved


def random_diagonal_trialgebras(count, seed=20261015):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = 2 if k % 2 == 0 else 3
        out.append(Trialgebra.diagonal(random_associative_tensor(rng, n), name=f"diag#{k}"))
    return out


AXIOM_PASSING_IDS = [e.id for e in list_entries() if check_trialgebra(instantiate(e.id)).ok]


@pytest.fixture(scope="session")
def passing_ids():
    return list(AXIOM_PASSING_IDS)


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def t26():
    return instantiate("Trias_2^6")
