"""Green's relations, regular D-classes, and the regular D-length.

The D-preorder compares two-sided principal ideals (m below m' when
m = s*m'*t for some s, t); the H-preorder requires one-sided witnesses on
both sides (s*m' = m = m'*t).  A D-class is regular when it contains an
idempotent.  The regular D-length of a monoid is both the longest chain of
regular D-classes and the length of the largest chain of idempotents in
which later elements bilaterally absorb earlier ones (the image of the
largest embedded max monoid); both computations live here, together with
the constructive translation from a class chain to such an idempotent
chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import FiniteMonoid, ResourceLimitError

GREEN_SIZE_CAP = 4096
EMBEDDING_SIZE_CAP = 64


@dataclass(frozen=True)
class GreenStructure:
    """D/H partition of a monoid with regularity flags and the class order.

    Class ids are dense, ordered by each class's minimal element.  ``below``
    holds, per class, the set of class ids strictly below it in the
    D-order (the relation is transitive, so this is the full chain
    reachability).
    """

    dclass_of: tuple[int, ...]
    hclass_of: tuple[int, ...]
    class_members: tuple[tuple[int, ...], ...]
    regular: frozenset[int]
    below: tuple[frozenset[int], ...]

    @property
    def class_count(self) -> int:
        return len(self.class_members)

    def strictly_below(self, a: int, b: int) -> bool:
        return a in self.below[b]


def green_structure(monoid: FiniteMonoid, size_cap: int = GREEN_SIZE_CAP) -> GreenStructure:
    if monoid.size > size_cap:
        raise ResourceLimitError(
            f"Green structure limited to {size_cap} elements, got {monoid.size}"
        )
    n = monoid.size
    table = np.asarray(monoid.table, dtype=np.int64)

    # Principal ideals.  sm = {s*m}; the two-sided ideal is the union of the
    # rows of the table indexed by sm; the right/left ideals give H-classes.
    ideals: list[np.ndarray] = []
    dkeys: list[bytes] = []
    hkeys: list[tuple[bytes, bytes]] = []
    for m in range(n):
        left = np.unique(table[:, m])
        two_sided = np.unique(table[left, :])
        ideals.append(two_sided)
        dkeys.append(two_sided.tobytes())
        right = np.unique(table[m, :])
        hkeys.append((right.tobytes(), left.tobytes()))

    def group_by(keys):
        groups: dict = {}
        for m, key in enumerate(keys):
            groups.setdefault(key, []).append(m)
        classes = sorted(groups.values(), key=lambda ms: ms[0])
        of = [0] * n
        for cid, members in enumerate(classes):
            for m in members:
                of[m] = cid
        return tuple(of), tuple(tuple(ms) for ms in classes)

    dclass_of, class_members = group_by(dkeys)
    hclass_of, _ = group_by(hkeys)

    regular = frozenset(
        cid
        for cid, members in enumerate(class_members)
        if any(monoid.is_idempotent(m) for m in members)
    )

    # Class a is below class b iff a's representative lies in b's ideal.
    ideal_sets = [frozenset(ideals[members[0]].tolist()) for members in class_members]
    below = tuple(
        frozenset(
            a
            for a in range(len(class_members))
            if a != b and class_members[a][0] in ideal_sets[b]
        )
        for b in range(len(class_members))
    )
    return GreenStructure(dclass_of, hclass_of, class_members, regular, below)


def longest_regular_chain(gs: GreenStructure) -> tuple[int, ...]:
    """A maximum-length chain of regular class ids, top class first."""

    @lru_cache(maxsize=None)
    def depth(c: int) -> tuple[int, tuple[int, ...]]:
        best = (1, (c,))
        for d in gs.below[c]:
            if d in gs.regular:
                length, chain = depth(d)
                if length + 1 > best[0]:
                    best = (length + 1, (c, *chain))
        return best

    best = (0, ())
    for c in gs.regular:
        best = max(best, depth(c), key=lambda t: t[0])
    return best[1]


def regular_d_length(monoid: FiniteMonoid, size_cap: int = GREEN_SIZE_CAP) -> int:
    """Size of the longest chain of regular D-classes."""
    return len(longest_regular_chain(green_structure(monoid, size_cap)))


@dataclass(frozen=True)
class MaxEmbedding:
    """Images e_1, ..., e_L of a max-monoid embedding: pairwise distinct
    idempotents with e_i * e_j = e_max(i,j) = e_j * e_i."""

    images: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.images)


def validate_embedding(
    monoid: FiniteMonoid, images: Sequence[int], require_neutral_start: bool = False
) -> None:
    """Raise ValueError unless the images satisfy the embedding invariants."""
    images = tuple(images)
    if not images:
        raise ValueError("embedding must be non-empty")
    if len(set(images)) != len(images):
        raise ValueError("embedding images must be pairwise distinct")
    if require_neutral_start and images[0] != monoid.neutral:
        raise ValueError("embedding must start at the neutral element")
    for e in images:
        if not monoid.is_idempotent(e):
            raise ValueError(f"image {e} is not idempotent")
    for i, a in enumerate(images):
        for j, b in enumerate(images):
            want = images[max(i, j)]
            if monoid.mul(a, b) != want or monoid.mul(b, a) != want:
                raise ValueError(
                    f"images {i} and {j} do not multiply to the larger one"
                )


def largest_max_embedding(
    monoid: FiniteMonoid, size_cap: int = EMBEDDING_SIZE_CAP
) -> MaxEmbedding:
    """A maximum-length max-monoid embedding starting at the unit.

    Bilateral absorption (e*f = f = f*e) is a transitive, antisymmetric
    relation on idempotents, so chains are paths in a DAG and the exact
    answer is a longest-path computation rather than a backtracking search.
    The unit absorbs every idempotent, hence some maximum chain starts there.
    """
    if monoid.size > size_cap:
        raise ResourceLimitError(
            f"embedding search limited to {size_cap} elements, got {monoid.size}"
        )
    idem = monoid.idempotents()

    @lru_cache(maxsize=None)
    def chain_from(e: int) -> tuple[int, ...]:
        best = (e,)
        for f in idem:
            if f != e and monoid.mul(e, f) == f == monoid.mul(f, e):
                cand = (e, *chain_from(f))
                if len(cand) > len(best):
                    best = cand
        return best

    images = chain_from(monoid.neutral)
    emb = MaxEmbedding(images)
    validate_embedding(monoid, images, require_neutral_start=True)
    return emb


def idempotents_of_class(monoid: FiniteMonoid, gs: GreenStructure, cid: int) -> list[int]:
    return [m for m in gs.class_members[cid] if monoid.is_idempotent(m)]


def chain_to_embedding(
    monoid: FiniteMonoid, gs: GreenStructure, chain: Sequence[int]
) -> MaxEmbedding:
    """Turn a strictly descending chain of regular D-classes into the image
    of a max-monoid embedding, one idempotent per class.

    The representative idempotent f of the next class need not absorb into
    the chain built so far, but any factorization f = s * e * t through the
    current tail element e yields e' = e*t*f*s*e, an idempotent in f's class
    that does; the first factorization in lexicographic (s, t) order is
    used.
    """
    chain = tuple(chain)
    if not chain:
        raise ValueError("chain must be non-empty")
    for c in chain:
        if c not in gs.regular:
            raise ValueError(f"class {c} is not regular")
    for hi, lo in zip(chain, chain[1:]):
        if not gs.strictly_below(lo, hi):
            raise ValueError(f"chain not strictly descending at {hi} -> {lo}")

    mul = monoid.mul
    e = min(idempotents_of_class(monoid, gs, chain[0]))
    images = [e]
    for cid in chain[1:]:
        f = min(idempotents_of_class(monoid, gs, cid))
        found = None
        for s in range(monoid.size):
            se = mul(s, e)
            for t in range(monoid.size):
                if mul(se, t) == f:
                    found = (s, t)
                    break
            if found:
                break
        if found is None:
            raise AssertionError("descending chain without factorization")
        s, t = found
        e = mul(mul(mul(mul(e, t), f), s), e)
        if gs.dclass_of[e] != cid:
            raise AssertionError("constructed idempotent left its class")
        images.append(e)
    validate_embedding(monoid, images)
    return MaxEmbedding(tuple(images))
