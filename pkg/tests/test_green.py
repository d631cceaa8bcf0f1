import random

import pytest

from monoid_ramsey import (
    FiniteMonoid,
    ResourceLimitError,
    chain_to_embedding,
    generated_submonoid,
    green_structure,
    largest_max_embedding,
    longest_regular_chain,
    make_boolmat_monoid,
    make_cyclic,
    make_max,
    make_transformation,
    regular_d_length,
    validate_embedding,
)


def brute_embedding_length(monoid: FiniteMonoid) -> int:
    """Independent oracle: depth-first search over all chains of distinct
    idempotents in which each new element absorbs the previous one."""
    idem = monoid.idempotents()
    best = 0

    def extend(chain):
        nonlocal best
        best = max(best, len(chain))
        last = chain[-1]
        for f in idem:
            if f not in chain and monoid.mul(last, f) == f == monoid.mul(f, last):
                extend(chain + [f])

    for start in idem:
        extend([start])
    return best


# --- structure of the standard families --------------------------------------


def test_group_has_one_regular_class():
    for n in (2, 3, 5):
        gs = green_structure(make_cyclic(n))
        assert gs.class_count == 1
        assert gs.regular == {0}


def test_max_monoid_classes_are_singleton_chain():
    n = 4
    gs = green_structure(make_max(n))
    assert gs.class_count == n
    assert gs.regular == set(range(n))
    # totally ordered: each class strictly below exactly its predecessors
    chain = longest_regular_chain(gs)
    assert len(chain) == n
    for hi, lo in zip(chain, chain[1:]):
        assert gs.strictly_below(lo, hi)


def test_transformation_monoid_classes():
    gs = green_structure(make_transformation(2))
    assert gs.class_count == 3
    assert gs.regular == {0, 1, 2}
    assert len(longest_regular_chain(gs)) == 3


def test_regular_d_length_values():
    assert regular_d_length(make_cyclic(2)) == 1
    assert regular_d_length(make_max(3)) == 3
    assert regular_d_length(make_boolmat_monoid(2)) == 4


def test_green_size_cap():
    with pytest.raises(ResourceLimitError):
        green_structure(make_max(10), size_cap=5)
    with pytest.raises(ResourceLimitError):
        largest_max_embedding(make_max(10), size_cap=5)


# --- H-classes ---------------------------------------------------------------


def test_hclasses_have_at_most_one_idempotent():
    for monoid in (
        make_cyclic(6),
        make_max(4),
        make_transformation(3),
        make_boolmat_monoid(2),
    ):
        gs = green_structure(monoid)
        per_class: dict[int, int] = {}
        for e in monoid.idempotents():
            h = gs.hclass_of[e]
            assert h not in per_class, "two idempotents share an H-class"
            per_class[h] = e


def test_one_sided_witnesses_in_same_dclass_force_same_hclass():
    rng = random.Random(9)
    for monoid in (make_transformation(2), make_boolmat_monoid(2)):
        gs = green_structure(monoid)
        checked = 0
        for _ in range(4000):
            m2 = rng.randrange(monoid.size)
            s = rng.randrange(monoid.size)
            t = rng.randrange(monoid.size)
            if monoid.mul(s, m2) == monoid.mul(m2, t):
                m = monoid.mul(s, m2)
                if gs.dclass_of[m] == gs.dclass_of[m2]:
                    assert gs.hclass_of[m] == gs.hclass_of[m2]
                    checked += 1
        assert checked > 50


# --- embeddings --------------------------------------------------------------


def test_largest_max_embedding_examples(example_submonoid):
    trivial = largest_max_embedding(make_cyclic(1))
    assert trivial.images == (0,)
    h4 = largest_max_embedding(make_max(4))
    assert h4.images == (0, 1, 2, 3)
    sub, _ = example_submonoid
    assert largest_max_embedding(sub).length == 3
    assert brute_embedding_length(sub) == 3
    assert regular_d_length(sub) == 3


def test_validate_embedding_rejections():
    h3 = make_max(3)
    validate_embedding(h3, (0, 1, 2), require_neutral_start=True)
    with pytest.raises(ValueError):
        validate_embedding(h3, ())
    with pytest.raises(ValueError):
        validate_embedding(h3, (0, 1, 1))
    with pytest.raises(ValueError):
        validate_embedding(h3, (1, 2), require_neutral_start=True)
    z4 = make_cyclic(4)
    with pytest.raises(ValueError):
        validate_embedding(z4, (0, 1))  # 1 is not idempotent
    # idempotents that do not absorb each other
    t2 = make_transformation(2)
    ones = t2.names.index("11")
    twos = t2.names.index("22")
    with pytest.raises(ValueError):
        validate_embedding(t2, (t2.neutral, ones, twos))


def test_chain_to_embedding_examples():
    h4 = make_max(4)
    gs = green_structure(h4)
    emb = chain_to_embedding(h4, gs, longest_regular_chain(gs))
    assert emb.images == (0, 1, 2, 3)

    t2 = make_transformation(2)
    gs = green_structure(t2)
    chain = longest_regular_chain(gs)
    emb = chain_to_embedding(t2, gs, chain)
    assert emb.length == 3
    validate_embedding(t2, emb.images)
    # single-class chain: the class's least idempotent
    top = chain[0]
    single = chain_to_embedding(t2, gs, (top,))
    assert single.length == 1

    with pytest.raises(ValueError):
        chain_to_embedding(t2, gs, (chain[1], chain[0]))  # not descending
    with pytest.raises(ValueError):
        chain_to_embedding(t2, gs, ())


def test_chain_to_embedding_rejects_irregular_class():
    r3 = make_boolmat_monoid(3)
    gs = green_structure(r3)
    irregular = [c for c in range(gs.class_count) if c not in gs.regular]
    assert irregular, "R3 is expected to have an irregular class"
    with pytest.raises(ValueError):
        chain_to_embedding(r3, gs, (irregular[0],))


def test_definitions_agree_on_random_submonoids():
    rng = random.Random(21)
    bases = [make_boolmat_monoid(3), make_transformation(3)]
    done = 0
    while done < 16:
        base = bases[done % 2]
        gens = [rng.randrange(base.size) for _ in range(rng.randrange(1, 4))]
        sub, _ = generated_submonoid(base, gens)
        if sub.size > 64:
            continue
        chain_len = regular_d_length(sub)
        emb = largest_max_embedding(sub)
        assert chain_len == emb.length
        gs = green_structure(sub)
        built = chain_to_embedding(sub, gs, longest_regular_chain(gs))
        validate_embedding(sub, built.images)
        done += 1
