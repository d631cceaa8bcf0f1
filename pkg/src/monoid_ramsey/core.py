"""Finite monoids as Cayley tables, words over them, and Ramsey decompositions.

Elements are dense indices ``0..size-1``.  A word is a sequence of element
indices.  A k-decomposition splits a word into ``x y_1 ... y_k z`` with the
k middle factors non-empty; it is Ramsey when all middle factors reduce to
one common idempotent element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

Word = tuple[int, ...]

# Exact enumerations refuse to start above this many candidate words.
ENUMERATION_CAP = 10_000_000


class ResourceLimitError(RuntimeError):
    """An exact computation would exceed its configured resource budget."""


class FiniteMonoid:
    """A finite monoid given by its Cayley table.

    ``table[a][b]`` is the index of ``a * b`` and ``neutral`` is the index of
    the unit.  ``names`` gives a display string per element (defaults to the
    decimal index).  Instances are never mutated after construction and may
    be shared freely across threads.
    """

    MAX_TABLE_SIZE = 1 << 16

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        neutral: int,
        names: Sequence[str] | None = None,
        validate: bool = True,
    ):
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self.size = len(self.table)
        self.neutral = neutral
        if self.size == 0:
            raise ValueError("monoid must have at least one element")
        if self.size > self.MAX_TABLE_SIZE:
            raise ResourceLimitError(
                f"table monoid limited to {self.MAX_TABLE_SIZE} elements, got {self.size}"
            )
        for row in self.table:
            if len(row) != self.size:
                raise ValueError("Cayley table must be square")
            for v in row:
                if not 0 <= v < self.size:
                    raise ValueError(f"table entry {v} out of range [0, {self.size})")
        if not 0 <= neutral < self.size:
            raise ValueError(f"neutral index {neutral} out of range")
        if names is None:
            names = tuple(str(i) for i in range(self.size))
        else:
            names = tuple(names)
            if len(names) != self.size:
                raise ValueError("names must match monoid size")
        self.names: tuple[str, ...] = names
        self._idempotents: tuple[int, ...] | None = None
        self._inverses: tuple[int | None, ...] | None = None
        if validate:
            self.validate()

    def validate(self) -> None:
        """Reject tables that violate neutrality or associativity."""
        t = self.table
        e = self.neutral
        for a in range(self.size):
            if t[e][a] != a or t[a][e] != a:
                raise ValueError(f"declared neutral {e} does not act as unit on {a}")
        # (a*b)*c == a*(b*c), checked one a-slice at a time to bound memory.
        arr = np.asarray(t, dtype=np.int64)
        for a in range(self.size):
            left = arr[arr[a]]            # left[b][c] = t[t[a][b]][c]
            right = arr[a][arr]           # right[b][c] = t[a][t[b][c]]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise ValueError(
                    f"associativity fails at ({a},{b},{c}): "
                    f"({a}*{b})*{c} = {left[b][c]} != {right[b][c]} = {a}*({b}*{c})"
                )

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def reduce(self, word: Iterable[int]) -> int:
        """Product of the letters of ``word``, starting from the unit."""
        acc = self.neutral
        row = self.table
        for m in word:
            acc = row[acc][m]
        return acc

    def power(self, a: int, n: int) -> int:
        acc = self.neutral
        for _ in range(n):
            acc = self.table[acc][a]
        return acc

    def idempotent_power(self, a: int) -> int:
        """The unique idempotent among the positive powers of ``a``."""
        cur = a
        while self.table[cur][cur] != cur:
            cur = self.table[cur][a]
        return cur

    def is_idempotent(self, a: int) -> bool:
        return self.table[a][a] == a

    def idempotents(self) -> tuple[int, ...]:
        if self._idempotents is None:
            self._idempotents = tuple(
                a for a in range(self.size) if self.table[a][a] == a
            )
        return self._idempotents

    def inverses(self) -> tuple[int | None, ...]:
        """Two-sided inverse per element, or None where there is none."""
        if self._inverses is None:
            e = self.neutral
            inv: list[int | None] = [None] * self.size
            for a in range(self.size):
                for b in range(self.size):
                    if self.table[a][b] == e == self.table[b][a]:
                        inv[a] = b
                        break
            self._inverses = tuple(inv)
        return self._inverses

    def inverse(self, a: int) -> int:
        b = self.inverses()[a]
        if b is None:
            raise ValueError(f"element {a} has no inverse")
        return b

    def is_group(self) -> bool:
        return all(b is not None for b in self.inverses())

    def element(self, index: int) -> "Element":
        if not 0 <= index < self.size:
            raise ValueError(f"element index {index} out of range")
        return Element(self, index)

    def elements(self) -> Iterator["Element"]:
        return (Element(self, i) for i in range(self.size))

    def check_word(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for m in w:
            if not 0 <= m < self.size:
                raise ValueError(f"letter {m} out of range [0, {self.size})")
        return w

    def word_names(self, word: Iterable[int]) -> list[str]:
        return [self.names[m] for m in word]

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, neutral={self.neutral})"


@dataclass(frozen=True)
class Element:
    """An element index tied to its monoid; ``*`` refuses mixed monoids."""

    monoid: FiniteMonoid
    index: int

    def __mul__(self, other: "Element") -> "Element":
        if self.monoid is not other.monoid:
            raise ValueError("cannot multiply elements of different monoids")
        return Element(self.monoid, self.monoid.mul(self.index, other.index))

    def __repr__(self) -> str:
        return f"Element({self.monoid.names[self.index]})"


@dataclass(frozen=True)
class KDecomposition:
    """Cut positions ``c_0 < c_1 < ... < c_k`` splitting a word ``u`` into
    ``x = u[:c_0]``, middle factors ``y_i = u[c_{i-1}:c_i]`` and ``z = u[c_k:]``.

    ``idempotent`` is filled in by the extraction algorithms that guarantee a
    common idempotent reduction of the middle factors.
    """

    cuts: tuple[int, ...]
    idempotent: int | None = None

    @property
    def k(self) -> int:
        return len(self.cuts) - 1

    def check(self, word_length: int) -> None:
        c = self.cuts
        if len(c) < 2:
            raise ValueError("a k-decomposition needs at least two cuts (k >= 1)")
        if c[0] < 0 or c[-1] > word_length:
            raise ValueError(f"cuts {c} out of range for word of length {word_length}")
        for a, b in zip(c, c[1:]):
            if a >= b:
                raise ValueError(f"cuts {c} must be strictly increasing (empty middle factor)")

    def middle_factors(self, word: Sequence[int]) -> list[Word]:
        self.check(len(word))
        return [tuple(word[a:b]) for a, b in zip(self.cuts, self.cuts[1:])]


def common_idempotent(
    monoid: FiniteMonoid, word: Sequence[int], dec: KDecomposition
) -> int | None:
    """The shared idempotent of the middle factors, or None if they disagree
    or share a non-idempotent value."""
    factors = dec.middle_factors(word)
    first = monoid.reduce(factors[0])
    if not monoid.is_idempotent(first):
        return None
    for f in factors[1:]:
        if monoid.reduce(f) != first:
            return None
    return first


def is_ramsey(monoid: FiniteMonoid, word: Sequence[int], dec: KDecomposition) -> bool:
    return common_idempotent(monoid, word, dec) is not None


def _interval_reductions(monoid: FiniteMonoid, word: Sequence[int]) -> list[list[int]]:
    """red[i][j] = reduction of word[i:j] for all i <= j."""
    n = len(word)
    table = monoid.table
    red = [[monoid.neutral] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        acc = monoid.neutral
        row = red[i]
        for j in range(i + 1, n + 1):
            acc = table[acc][word[j - 1]]
            row[j] = acc
    return red


def find_ramsey_decomposition(
    monoid: FiniteMonoid, word: Sequence[int], k: int
) -> KDecomposition | None:
    """Exact search for a Ramsey k-decomposition.

    For each idempotent e, positions 0..n form a DAG whose edges are the
    factors reducing to e; a chain of k such factors is a longest-path
    question, solved by dynamic programming over positions.  Returns None
    only if no Ramsey k-decomposition exists at all.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    w = monoid.check_word(word)
    n = len(w)
    if n < k:
        return None
    red = _interval_reductions(monoid, w)
    for e in monoid.idempotents():
        best = [0] * (n + 1)   # longest e-chain ending at this position
        prev = [-1] * (n + 1)
        for j in range(1, n + 1):
            bj = 0
            pj = -1
            for i in range(j):
                if red[i][j] == e and best[i] + 1 > bj:
                    bj = best[i] + 1
                    pj = i
            best[j] = bj
            prev[j] = pj
            if bj >= k:
                cuts = [j]
                pos = j
                for _ in range(k):
                    pos = prev[pos]
                    cuts.append(pos)
                cuts.reverse()
                return KDecomposition(tuple(cuts), idempotent=e)
    return None


def find_ramsey_decomposition_brute(
    monoid: FiniteMonoid, word: Sequence[int], k: int
) -> KDecomposition | None:
    """Reference search enumerating every cut tuple; exponential, for
    cross-checks and witness verification at small lengths."""
    if k < 1:
        raise ValueError("k must be >= 1")
    w = monoid.check_word(word)
    n = len(w)
    if n < k:
        return None
    for cuts in itertools.combinations(range(n + 1), k + 1):
        dec = KDecomposition(cuts)
        e = common_idempotent(monoid, w, dec)
        if e is not None:
            return KDecomposition(cuts, idempotent=e)
    return None


# --- text formats ---------------------------------------------------------
#
# Monoid table file:  line 1 is "monoid <size> <neutral-index>", followed by
# <size> rows of <size> whitespace-separated element indices.
# Word file: whitespace-separated element indices.
# Both reject trailing garbage.


def parse_monoid_file(text: str, validate: bool = True) -> FiniteMonoid:
    tokens = text.split()
    if len(tokens) < 3 or tokens[0] != "monoid":
        raise ValueError("monoid file must start with 'monoid <size> <neutral-index>'")
    try:
        size = int(tokens[1])
        neutral = int(tokens[2])
    except ValueError:
        raise ValueError("monoid header fields must be integers") from None
    if size < 1:
        raise ValueError("monoid size must be positive")
    body = tokens[3:]
    if len(body) != size * size:
        raise ValueError(
            f"expected {size * size} table entries, found {len(body)}"
        )
    try:
        entries = [int(t) for t in body]
    except ValueError:
        raise ValueError("table entries must be integers") from None
    table = [entries[r * size : (r + 1) * size] for r in range(size)]
    return FiniteMonoid(table, neutral, validate=validate)


def format_monoid_file(monoid: FiniteMonoid) -> str:
    lines = [f"monoid {monoid.size} {monoid.neutral}"]
    lines += [" ".join(str(v) for v in row) for row in monoid.table]
    return "\n".join(lines) + "\n"


def parse_word_file(text: str, monoid: FiniteMonoid | None = None) -> Word:
    try:
        word = tuple(int(t) for t in text.split())
    except ValueError:
        raise ValueError("word file must contain whitespace-separated indices") from None
    if monoid is not None:
        monoid.check_word(word)
    return word
