import pytest

from monoid_ramsey import FiniteMonoid
from monoid_ramsey.boolmat import (
    BoolMatrix,
    arrow_relation,
    free_pairs,
    is_idempotent,
    positive_sets,
)

# A pair of idempotents of the 4x4 Boolean matrix monoid that generates a
# six-element all-idempotent submonoid with the structure pinned below.
# The pair was found by exhaustive search over the 4x4 idempotents (the
# search is replayed in test_families.py::test_example_pair_search) and is
# re-verified against every pinned fact each session.
EXAMPLE_A = BoolMatrix.from_entries(
    [
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ]
)
EXAMPLE_B = BoolMatrix.from_entries(
    [
        [1, 1, 1, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 1],
    ]
)

IDENTITY_PAIRS = frozenset((i, i) for i in range(4))
ALL_PAIRS = frozenset((i, j) for i in range(4) for j in range(4))


def assert_example_pair_facts(a: BoolMatrix, b: BoolMatrix) -> None:
    ab, ba = a * b, b * a
    aba = ab * a
    elems = [BoolMatrix.identity(4), a, b, ab, ba, aba]
    assert len(set(elems)) == 6
    assert all(is_idempotent(m) for m in elems)
    closed = set(elems)
    assert all(x * y in closed for x in elems for y in elems)

    assert positive_sets(a) == (frozenset({0, 2}), frozenset({1, 3}))
    assert positive_sets(b) == (frozenset({0}), frozenset({3}))
    assert positive_sets(ab) == (frozenset({0, 2}), frozenset({3}))
    assert positive_sets(ba) == (frozenset({0}), frozenset({1, 3}))
    assert positive_sets(aba) == (frozenset({0, 2}), frozenset({1, 3}))

    assert arrow_relation(a).pairs() == set(
        IDENTITY_PAIRS | {(0, 2), (2, 0), (1, 3), (3, 1)}
    )
    assert arrow_relation(b).pairs() == set(ALL_PAIRS - {(3, 0)})

    assert free_pairs(a) == frozenset({(0, 1), (0, 3), (1, 2), (2, 3)})
    assert all(not free_pairs(m) for m in (b, ab, ba, aba))


@pytest.fixture(scope="session")
def example_pair() -> tuple[BoolMatrix, BoolMatrix]:
    assert_example_pair_facts(EXAMPLE_A, EXAMPLE_B)
    return EXAMPLE_A, EXAMPLE_B


@pytest.fixture(scope="session")
def example_submonoid(example_pair) -> tuple[FiniteMonoid, list[BoolMatrix]]:
    """The six-element submonoid re-indexed as a table monoid, plus the
    matrix behind each element index."""
    a, b = example_pair
    elems = [BoolMatrix.identity(4), a, b, a * b, b * a, a * b * a]
    index = {m: i for i, m in enumerate(elems)}
    table = [[index[x * y] for y in elems] for x in elems]
    names = ["D", "A", "B", "AB", "BA", "ABA"]
    return FiniteMonoid(table, neutral=0, names=names), elems
