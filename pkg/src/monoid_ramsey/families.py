"""Constructors for the concrete monoid families used throughout.

Max monoids (every element idempotent), cyclic groups, partial-function
transformation monoids, full Boolean-matrix monoids in table form, and
submonoids generated by chosen elements.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .core import FiniteMonoid
from .boolmat import BoolMatrix

# Table-form caps: transformation monoids have (n+1)^n elements and matrix
# monoids 2^(n^2); larger members of either family must be handled
# element-wise, never as tables.
MAX_TRANSFORMATION_N = 3
MAX_BOOLMAT_N = 3


@lru_cache(maxsize=None)
def make_max(n: int) -> FiniteMonoid:
    """The monoid {1, ..., n} under max; element index i is the letter i+1."""
    if n < 1:
        raise ValueError("max monoid needs n >= 1")
    table = [[max(i, j) for j in range(n)] for i in range(n)]
    names = [str(i + 1) for i in range(n)]
    return FiniteMonoid(table, neutral=0, names=names)


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteMonoid:
    """The additive group of integers mod n; element index i is the residue i."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteMonoid(table, neutral=0)


def compose_partial(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Apply f first, then g; entries are 1-based points with 0 = undefined."""
    return tuple(0 if x == 0 else g[x - 1] for x in f)


@lru_cache(maxsize=None)
def make_transformation(n: int) -> FiniteMonoid:
    """All partial functions on n points under composition, (n+1)^n elements.

    An element is encoded as its value tuple over the points 1..n with 0 for
    undefined, and named by the corresponding digit string; words act left
    to right (the first letter is applied first).
    """
    if n < 1:
        raise ValueError("transformation monoid needs n >= 1")
    if n > MAX_TRANSFORMATION_N:
        raise ValueError(
            f"table form of the transformation monoid supports n <= {MAX_TRANSFORMATION_N}"
        )
    elems = list(itertools.product(range(n + 1), repeat=n))
    index = {f: i for i, f in enumerate(elems)}
    table = [
        [index[compose_partial(f, g)] for g in elems]
        for f in elems
    ]
    identity = tuple(range(1, n + 1))
    names = ["".join(str(d) for d in f) for f in elems]
    return FiniteMonoid(table, neutral=index[identity], names=names)


@lru_cache(maxsize=None)
def make_boolmat_monoid(n: int) -> FiniteMonoid:
    """All n x n Boolean matrices under Boolean product, 2^(n^2) elements.

    Element index i is the matrix whose row-major entries are the binary
    digits of i; the neutral element is the identity matrix.
    """
    if n < 1:
        raise ValueError("Boolean matrix monoid needs n >= 1")
    if n > MAX_BOOLMAT_N:
        raise ValueError(
            f"table form of the Boolean matrix monoid supports n <= {MAX_BOOLMAT_N}"
        )
    count = 1 << (n * n)
    mats = [BoolMatrix.from_row_major_index(n, i) for i in range(count)]
    table = [
        [(a * b).row_major_index() for b in mats]
        for a in mats
    ]
    names = ["".join(m.to_lines()) for m in mats]
    neutral = BoolMatrix.identity(n).row_major_index()
    return FiniteMonoid(table, neutral=neutral, names=names)


def boolmat_element(monoid_n: int, index: int) -> BoolMatrix:
    """The matrix behind an element index of make_boolmat_monoid(monoid_n)."""
    return BoolMatrix.from_row_major_index(monoid_n, index)


def generated_submonoid(
    monoid: FiniteMonoid, gens: Iterable[int]
) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Close the generators (plus the unit) under multiplication.

    Returns the closure re-indexed as a monoid together with the embedding
    map: element i of the result is element embedding[i] of the input.
    """
    gens = sorted(set(gens))
    for g in gens:
        if not 0 <= g < monoid.size:
            raise ValueError(f"generator {g} out of range")
    order = [monoid.neutral]
    seen = {monoid.neutral}
    queue = [monoid.neutral]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = monoid.mul(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    index = {old: new for new, old in enumerate(order)}
    table = [[index[monoid.mul(a, b)] for b in order] for a in order]
    names = [monoid.names[old] for old in order]
    sub = FiniteMonoid(table, neutral=0, names=names)
    return sub, tuple(order)
