"""Extraction algorithms, witness constructions, and the exact Ramsey oracle.

Four extraction routines return Ramsey decompositions (or, for the general
one, alternatively a max-monoid embedding): a prefix-repetition argument for
groups, divide and conquer for max monoids, a prefix/suffix pigeonhole that
yields absorbed middle factors, and the general routine that combines the
absorption step with idempotent powers.  Witness words one letter below the
matching bound, degree bounds from the regular D-length, and a brute-force
computation of the exact Ramsey value complete the module.
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .core import (
    ENUMERATION_CAP,
    FiniteMonoid,
    KDecomposition,
    ResourceLimitError,
    Word,
    find_ramsey_decomposition,
)
from .green import MaxEmbedding, largest_max_embedding, regular_d_length, validate_embedding


@dataclass(frozen=True)
class PositionMap:
    """Cut positions of a derived word expressed in the source word.

    ``cuts[t]`` is the source position of derived position t, so derived
    letter t covers the source interval [cuts[t], cuts[t+1]); reductions of
    aligned derived factors equal the reductions of their source intervals,
    which is what lets a decomposition of a derived word transfer back.
    """

    cuts: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.cuts, self.cuts[1:]):
            if a >= b:
                raise ValueError("position map must be strictly increasing")

    @property
    def letters(self) -> int:
        return len(self.cuts) - 1

    def compose(self, inner_cuts: Sequence[int]) -> "PositionMap":
        """Map positions of a word derived from this one back to the source."""
        return PositionMap(tuple(self.cuts[c] for c in inner_cuts))

    def interval(self, a: int, b: int) -> tuple[int, int]:
        return self.cuts[a], self.cuts[b]


def _exact_prefix(monoid: FiniteMonoid, word: Sequence[int], need: int) -> Word:
    w = monoid.check_word(word)
    if len(w) < need:
        raise ValueError(f"word of length {len(w)} is too short, need {need}")
    return w[:need]


def decompose_in_group(
    group: FiniteMonoid, word: Sequence[int], k: int
) -> KDecomposition:
    """Ramsey k-decomposition of any group word of length k*|G|.

    The k*|G|+1 reduced prefixes take at most |G| values, so some value
    occurs k+1 times; the factors between consecutive occurrences reduce to
    the unit.  The first value to reach k+1 occurrences is used.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not group.is_group():
        raise ValueError("monoid is not a group")
    w = _exact_prefix(group, word, k * group.size)
    counts = [0] * group.size
    acc = group.neutral
    target = None
    prefix_vals = [acc]
    for m in w:
        acc = group.mul(acc, m)
        prefix_vals.append(acc)
    for v in prefix_vals:
        counts[v] += 1
        if counts[v] == k + 1:
            target = v
            break
    assert target is not None, "pigeonhole on reduced prefixes failed"
    cuts = [i for i, v in enumerate(prefix_vals) if v == target][: k + 1]
    return KDecomposition(tuple(cuts), idempotent=group.neutral)


def group_witness(group: FiniteMonoid, k: int) -> Word:
    """A group word of length k*|G| - 1 with no Ramsey k-decomposition.

    Built so that its reduced-prefix sequence enumerates each group element
    exactly k times (unit first, then index order); k+1 equal prefixes would
    be needed for a decomposition.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not group.is_group():
        raise ValueError("monoid is not a group")
    order = [group.neutral] + [
        g for g in range(group.size) if g != group.neutral
    ]
    prefixes = [g for g in order for _ in range(k)]
    return tuple(
        group.mul(group.inverse(a), b) for a, b in zip(prefixes, prefixes[1:])
    )


def decompose_in_max(n: int, word: Sequence[int], k: int) -> KDecomposition:
    """Ramsey k-decomposition of a factor of any max-monoid word of length k^n.

    Divide and conquer: split the current word into k equal parts; if every
    part contains the current top letter they form the decomposition (the
    top letter is idempotent), otherwise recurse into a part missing it,
    where all letters are smaller.  Cuts are reported in the coordinates of
    the input word.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    from .families import make_max

    w = _exact_prefix(make_max(n), word, k**n)
    offset = 0
    j = n
    while True:
        part_len = k ** (j - 1)
        assert all(m < j for m in w[offset : offset + k * part_len])
        missing = None
        for i in range(k):
            part = w[offset + i * part_len : offset + (i + 1) * part_len]
            if (j - 1) not in part:
                missing = i
                break
        if missing is None:
            cuts = tuple(offset + i * part_len for i in range(k + 1))
            return KDecomposition(cuts, idempotent=j - 1)
        offset += missing * part_len
        j -= 1


def max_monoid_witness(n: int, k: int) -> Word:
    """A max-monoid word of length k^n - 1 with no Ramsey k-decomposition:
    k copies of the witness for n-1 separated by the letter n."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    word: Word = (0,) * (k - 1)
    for letter in range(1, n):
        word = (word + (letter,)) * (k - 1) + word
    return word


def absorbing_decomposition(
    monoid: FiniteMonoid, word: Sequence[int], m: int
) -> KDecomposition:
    """m-decomposition x y_1 ... y_m z of a word of length m*|M|^2 in which
    the prefix and suffix absorb every middle factor: reduce(x y_i) equals
    reduce(x) and reduce(y_i z) equals reduce(z).

    The m*|M|^2 + 1 (reduced prefix, reduced suffix) pairs take at most
    |M|^2 values, so some pair repeats m+1 times; positions are scanned left
    to right and the first pair to reach m+1 occurrences is cut at its first
    m+1 positions.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    w = _exact_prefix(monoid, word, m * monoid.size**2)
    n = len(w)
    prefix = [monoid.neutral] * (n + 1)
    for i, letter in enumerate(w):
        prefix[i + 1] = monoid.mul(prefix[i], letter)
    suffix = [monoid.neutral] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = monoid.mul(w[i], suffix[i + 1])
    counts: dict[tuple[int, int], int] = {}
    target = None
    for i in range(n + 1):
        pair = (prefix[i], suffix[i])
        c = counts.get(pair, 0) + 1
        counts[pair] = c
        if c == m + 1:
            target = pair
            break
    assert target is not None, "pigeonhole on (prefix, suffix) pairs failed"
    cuts = [
        i for i in range(n + 1) if (prefix[i], suffix[i]) == target
    ][: m + 1]
    dec = KDecomposition(tuple(cuts))
    if __debug__:
        x_val = prefix[cuts[0]]
        z_val = suffix[cuts[-1]]
        for a, b in zip(cuts, cuts[1:]):
            y_val = monoid.reduce(w[a:b])
            assert monoid.mul(x_val, y_val) == x_val
            assert monoid.mul(y_val, z_val) == z_val
    return dec


def decompose_or_embed(
    monoid: FiniteMonoid, word: Sequence[int], k: int, n: int
) -> KDecomposition | MaxEmbedding:
    """On a word of length (k*|M|^4)^n, either return a Ramsey
    k-decomposition (cuts in the input word's coordinates) or the images of
    a max-monoid embedding of length n+1.

    Each round shrinks the word through two absorbing decompositions (the
    middle-factor reductions form the next word), takes the idempotent power
    of suffix*prefix of the inner round as candidate idempotent e, and
    splits the shrunken word into k blocks: all blocks reducing to e yield a
    decomposition transferred back through the position maps; otherwise the
    first failing block is the next word.  Failing all n rounds produces the
    chain unit, e_n, ..., e_1 of collected idempotents, each absorbed by the
    later ones.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    size4 = monoid.size**4
    need = (k * size4) ** n
    u = _exact_prefix(monoid, word, need)
    pos = PositionMap(tuple(range(len(u) + 1)))
    cur: Word = u
    collected: list[int] = []
    j = n
    while j > 0:
        m1 = k**j * monoid.size ** (4 * j - 2)
        assert len(cur) == m1 * monoid.size**2
        outer = absorbing_decomposition(monoid, cur, m1)
        v = tuple(
            monoid.reduce(cur[a:b]) for a, b in zip(outer.cuts, outer.cuts[1:])
        )
        pos_v = pos.compose(outer.cuts)

        m2 = k**j * monoid.size ** (4 * j - 4)
        assert len(v) == m2 * monoid.size**2
        inner = absorbing_decomposition(monoid, v, m2)
        w = tuple(
            monoid.reduce(v[a:b]) for a, b in zip(inner.cuts, inner.cuts[1:])
        )
        pos_w = pos_v.compose(inner.cuts)

        z_then_x = monoid.mul(
            monoid.reduce(v[inner.cuts[-1] :]), monoid.reduce(v[: inner.cuts[0]])
        )
        e = monoid.idempotent_power(z_then_x)
        if __debug__:
            # The current word reduces to reduce(x) * e * reduce(z) for the
            # outer prefix x and suffix z.
            x_val = monoid.reduce(cur[: outer.cuts[0]])
            z_val = monoid.reduce(cur[outer.cuts[-1] :])
            assert monoid.reduce(cur) == monoid.mul(monoid.mul(x_val, e), z_val)

        block = (k * size4) ** (j - 1)
        assert len(w) == k * block
        values = [
            monoid.reduce(w[i * block : (i + 1) * block]) for i in range(k)
        ]
        if all(val == e for val in values):
            cuts = tuple(pos_w.cuts[i * block] for i in range(k + 1))
            dec = KDecomposition(cuts, idempotent=e)
            if __debug__:
                for a, b in zip(cuts, cuts[1:]):
                    assert monoid.reduce(u[a:b]) == e
            return dec
        fail = min(i for i, val in enumerate(values) if val != e)
        collected.append(e)
        cur = w[fail * block : (fail + 1) * block]
        pos = PositionMap(
            pos_w.cuts[fail * block : (fail + 1) * block + 1]
        )
        if __debug__:
            # e absorbs every letter (hence every factor) of the next word,
            # which itself does not reduce to e.
            assert all(
                monoid.mul(e, letter) == e == monoid.mul(letter, e)
                for letter in cur
            )
            assert monoid.reduce(cur) != e
        j -= 1
    images = (monoid.neutral, *reversed(collected))
    emb = MaxEmbedding(images)
    if __debug__:
        validate_embedding(monoid, images, require_neutral_start=True)
    return emb


def ramsey_bounds(monoid: FiniteMonoid, k: int) -> tuple[int, int]:
    """(k^L, (k*|M|^4)^L) for L the regular D-length: the exact Ramsey value
    is bracketed by these two integers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    length = regular_d_length(monoid)
    return k**length, (k * monoid.size**4) ** length


def embedding_witness(
    monoid: FiniteMonoid, k: int, embedding: MaxEmbedding | None = None
) -> Word:
    """A word of length k^L - 1 with no Ramsey k-decomposition, obtained by
    mapping the max-monoid witness through an embedding of length L."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if embedding is None:
        embedding = largest_max_embedding(monoid)
    base = max_monoid_witness(embedding.length, k)
    return tuple(embedding.images[letter] for letter in base)


def _all_words_decompose(
    monoid: FiniteMonoid, k: int, length: int, threads: int
) -> bool:
    letters = range(monoid.size)
    if threads <= 1 or length == 0 or monoid.size == 1:
        return all(
            find_ramsey_decomposition(monoid, word, k) is not None
            for word in itertools.product(letters, repeat=length)
        )
    # Shard by first letter; the first counterexample aborts the whole sweep.
    stop = threading.Event()

    def shard(first: int) -> bool:
        for rest in itertools.product(letters, repeat=length - 1):
            if stop.is_set():
                return True
            if find_ramsey_decomposition(monoid, (first, *rest), k) is None:
                stop.set()
                return False
        return True

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return all(pool.map(shard, letters))


def ramsey_oracle(
    monoid: FiniteMonoid, k: int, max_len: int, threads: int = 1
) -> int | None:
    """The exact Ramsey value: the smallest N <= max_len such that every
    word of length N has a Ramsey k-decomposition, or None if every
    N <= max_len still admits a counterexample word.

    Having a decomposition is monotone in word length, so N is found by
    scanning lengths upward; every word of each failing length N' < N was
    checked, which certifies the matching witness length N-1.  Refuses to
    enumerate any length with more than ENUMERATION_CAP words.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    for length in range(k, max_len + 1):
        if monoid.size**length > ENUMERATION_CAP:
            raise ResourceLimitError(
                f"enumeration of {monoid.size}^{length} words exceeds "
                f"{ENUMERATION_CAP}; refusing"
            )
        if _all_words_decompose(monoid, k, length, threads):
            return length
    return None
