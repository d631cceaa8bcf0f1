import itertools
import random

import pytest

from monoid_ramsey import (
    Element,
    FiniteMonoid,
    KDecomposition,
    common_idempotent,
    find_ramsey_decomposition,
    find_ramsey_decomposition_brute,
    is_ramsey,
    make_boolmat_monoid,
    make_cyclic,
    make_max,
    make_transformation,
)
from monoid_ramsey.core import format_monoid_file, parse_monoid_file, parse_word_file


# --- multiplication and reduction -------------------------------------------


def test_multiply_max():
    h3 = make_max(3)
    # letters 2 and 3 are indices 1 and 2
    assert h3.mul(1, 2) == 2


def test_multiply_cyclic():
    z2 = make_cyclic(2)
    assert z2.mul(1, 1) == 0


def test_multiply_boolmat():
    r2 = make_boolmat_monoid(2)
    nilpotent = int("0100", 2)  # rows 01 / 00
    assert r2.mul(nilpotent, nilpotent) == 0


def test_element_wrapper():
    z3 = make_cyclic(3)
    assert (z3.element(1) * z3.element(2)).index == 0
    with pytest.raises(ValueError):
        z3.element(1) * make_cyclic(4).element(1)
    with pytest.raises(ValueError):
        z3.element(3)


def test_reduce():
    h3 = make_max(3)
    assert h3.reduce(()) == h3.neutral
    assert h3.reduce((0, 1, 0, 2, 0, 1, 0)) == 2  # the letter 3
    assert make_cyclic(2).reduce((0, 1, 0)) == 1


def test_reduce_is_homomorphic():
    rng = random.Random(1)
    for monoid in (make_cyclic(4), make_max(3), make_transformation(2)):
        for _ in range(200):
            u = [rng.randrange(monoid.size) for _ in range(rng.randrange(6))]
            v = [rng.randrange(monoid.size) for _ in range(rng.randrange(6))]
            assert monoid.reduce(u + v) == monoid.mul(monoid.reduce(u), monoid.reduce(v))


def test_idempotent_power():
    z3 = make_cyclic(3)
    assert z3.idempotent_power(1) == 0
    assert make_cyclic(4).idempotent_power(2) == 0
    h5 = make_max(5)
    assert h5.idempotent_power(4) == 4
    for monoid in (make_cyclic(6), make_transformation(2), make_boolmat_monoid(2)):
        for m in range(monoid.size):
            e = monoid.idempotent_power(m)
            assert monoid.is_idempotent(e)
            assert monoid.idempotent_power(e) == e


# --- decompositions ----------------------------------------------------------


def test_kdecomposition_validation():
    d = KDecomposition((0, 2, 4))
    assert d.k == 2
    d.check(4)
    with pytest.raises(ValueError):
        KDecomposition((0, 2, 2)).check(4)
    with pytest.raises(ValueError):
        KDecomposition((0, 5)).check(4)
    with pytest.raises(ValueError):
        KDecomposition((2,)).check(4)


def test_is_ramsey_examples():
    h1 = make_max(1)
    assert is_ramsey(h1, (0, 0), KDecomposition((0, 1, 2)))
    h2 = make_max(2)
    assert not is_ramsey(h2, (0, 1), KDecomposition((0, 1, 2)))
    # the max-monoid witness for n=3, k=2 has no Ramsey 2-decomposition at all
    h3 = make_max(3)
    witness = (0, 1, 0, 2, 0, 1, 0)
    for cuts in itertools.combinations(range(len(witness) + 1), 3):
        assert not is_ramsey(h3, witness, KDecomposition(cuts))


def test_common_idempotent_requires_idempotent_value():
    z3 = make_cyclic(3)
    # both middle factors reduce to 1, which is not idempotent in Z3
    assert common_idempotent(z3, (1, 1), KDecomposition((0, 1, 2))) is None


def test_find_ramsey_decomposition():
    z2 = make_cyclic(2)
    assert find_ramsey_decomposition(z2, (1,), 2) is None  # too short
    d = find_ramsey_decomposition(z2, (1, 1, 1, 1), 2)
    assert d is not None and d.idempotent == 0
    assert is_ramsey(z2, (1, 1, 1, 1), d)
    h3 = make_max(3)
    assert find_ramsey_decomposition(h3, (0, 1, 0, 2, 0, 1, 0), 2) is None
    with pytest.raises(ValueError):
        find_ramsey_decomposition(z2, (0, 1), 0)
    with pytest.raises(ValueError):
        find_ramsey_decomposition(z2, (0, 7), 1)


def test_find_against_brute_force():
    rng = random.Random(7)
    monoids = [make_cyclic(3), make_max(2), make_transformation(2)]
    r2 = make_boolmat_monoid(2)
    for _ in range(300):
        monoid = rng.choice(monoids)
        n = rng.randrange(0, 13)
        word = tuple(rng.randrange(monoid.size) for _ in range(n))
        k = rng.randrange(1, 4)
        fast = find_ramsey_decomposition(monoid, word, k)
        slow = find_ramsey_decomposition_brute(monoid, word, k)
        assert (fast is None) == (slow is None)
        for dec in (fast, slow):
            if dec is not None:
                assert common_idempotent(monoid, word, dec) == dec.idempotent
    for _ in range(60):
        word = tuple(rng.randrange(16) for _ in range(rng.randrange(0, 9)))
        k = rng.randrange(1, 3)
        fast = find_ramsey_decomposition(r2, word, k)
        slow = find_ramsey_decomposition_brute(r2, word, k)
        assert (fast is None) == (slow is None)


# --- table validation --------------------------------------------------------


def test_construction_rejects_malformed_tables():
    with pytest.raises(ValueError):
        FiniteMonoid([[0, 1], [1]], 0)
    with pytest.raises(ValueError):
        FiniteMonoid([[0, 1], [1, 2]], 0)
    with pytest.raises(ValueError):
        FiniteMonoid([[0, 1], [1, 0]], 2)
    with pytest.raises(ValueError):
        FiniteMonoid([[0, 1], [1, 0]], 0, names=["a"])


def _is_valid_monoid_table(table, neutral):
    n = len(table)
    if any(table[neutral][a] != a or table[a][neutral] != a for a in range(n)):
        return False
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


@pytest.mark.parametrize("monoid", [make_cyclic(4), make_max(3)])
def test_corrupted_tables_validate_like_brute_force(monoid):
    """Every single-entry corruption is accepted exactly when the corrupted
    table still is a monoid (a corruption can land on another valid one)."""
    base = [list(row) for row in monoid.table]
    n = monoid.size
    rejected = 0
    for a in range(n):
        for b in range(n):
            for wrong in range(n):
                if wrong == base[a][b]:
                    continue
                bad = [row[:] for row in base]
                bad[a][b] = wrong
                try:
                    FiniteMonoid(bad, monoid.neutral)
                    accepted = True
                except ValueError:
                    accepted = False
                    rejected += 1
                assert accepted == _is_valid_monoid_table(bad, monoid.neutral)
    assert rejected > 0


# --- text formats ------------------------------------------------------------


def test_monoid_file_round_trip():
    z3 = make_cyclic(3)
    text = format_monoid_file(z3)
    back = parse_monoid_file(text)
    assert back.table == z3.table and back.neutral == z3.neutral


def test_monoid_file_rejects_garbage():
    with pytest.raises(ValueError):
        parse_monoid_file("monoid 2 0\n0 1\n1 0\nextra")
    with pytest.raises(ValueError):
        parse_monoid_file("monoid 2 0\n0 1\n1")
    with pytest.raises(ValueError):
        parse_monoid_file("group 2 0\n0 1\n1 0")
    with pytest.raises(ValueError):
        parse_monoid_file("monoid two 0\n0 1\n1 0")
    # structurally fine but the declared neutral is wrong
    with pytest.raises(ValueError):
        parse_monoid_file("monoid 2 1\n0 1\n1 0")


def test_word_file():
    z3 = make_cyclic(3)
    assert parse_word_file("0 1\n2", z3) == (0, 1, 2)
    with pytest.raises(ValueError):
        parse_word_file("0 x 1")
    with pytest.raises(ValueError):
        parse_word_file("0 3", z3)
