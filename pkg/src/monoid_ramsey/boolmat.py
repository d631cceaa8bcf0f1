"""Boolean matrices and the structure of their idempotents.

Rows are machine-word bitsets (bit j of ``rows[i]`` is the entry in row i,
column j) so an n x n product costs O(n^2 / wordsize) bit operations.
Beyond plain products this module analyses idempotent matrices: stability,
maximal positive sets, the arrow relation and its free pairs, the
containment/descent laws satisfied along bilaterally absorbing pairs, and
the standard descending idempotent chain of length (n^2+n+2)/2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


class BoolMatrix:
    """An immutable n x n Boolean matrix with bitset rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        if n < 1:
            raise ValueError("matrix dimension must be positive")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for r in rows:
            if r < 0 or r & ~full:
                raise ValueError("row bits out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BoolMatrix is immutable")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "BoolMatrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(sum(1 << j for j, v in enumerate(row) if v))
        return cls(n, rows)

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "BoolMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def upper_triangular(cls, n: int) -> "BoolMatrix":
        full = (1 << n) - 1
        return cls(n, (full & ~((1 << i) - 1) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def columns(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            bit = 1 << i
            j = 0
            while r:
                if r & 1:
                    cols[j] |= bit
                r >>= 1
                j += 1
        return tuple(cols)

    def __mul__(self, other: "BoolMatrix") -> "BoolMatrix":
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        brows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc |= brows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BoolMatrix(self.n, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BoolMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def to_lines(self) -> list[str]:
        return [
            "".join("1" if (r >> j) & 1 else "0" for j in range(self.n))
            for r in self.rows
        ]

    def __repr__(self) -> str:
        return f"BoolMatrix({'/'.join(self.to_lines())})"

    def row_major_index(self) -> int:
        """Row-major big-endian reading of the entries as one integer."""
        return int("".join(self.to_lines()), 2)

    @classmethod
    def from_row_major_index(cls, n: int, index: int) -> "BoolMatrix":
        if not 0 <= index < 1 << (n * n):
            raise ValueError(f"index {index} out of range for {n}x{n} matrices")
        bits = format(index, f"0{n * n}b")
        return cls(
            n,
            (
                sum(1 << j for j in range(n) if bits[i * n + j] == "1")
                for i in range(n)
            ),
        )


def is_idempotent(a: BoolMatrix) -> bool:
    return a * a == a


def idempotent_power(a: BoolMatrix) -> BoolMatrix:
    """The unique idempotent among the positive powers of ``a``."""
    cur = a
    while not is_idempotent(cur):
        cur = cur * a
    return cur


def is_stable(a: BoolMatrix) -> bool:
    """Every 1-entry (i, k) passes through a reflexive point j with
    a[i][j] = a[j][j] = a[j][k] = 1."""
    diag = 0
    for j, r in enumerate(a.rows):
        if (r >> j) & 1:
            diag |= 1 << j
    for r in a.rows:
        reach = 0
        mid = r & diag
        while mid:
            low = mid & -mid
            reach |= a.rows[low.bit_length() - 1]
            mid ^= low
        if r & ~reach:
            return False
    return True


def _require_idempotent(a: BoolMatrix) -> None:
    if not is_idempotent(a):
        raise ValueError("matrix is not idempotent")


def positive_sets(a: BoolMatrix) -> tuple[frozenset[int], ...]:
    """Maximal index sets on which all entries are 1 (idempotent input only).

    On the diagonal support, mutual 1s form an equivalence relation for an
    idempotent matrix, so the sets are its classes; each class is re-checked
    against the definition defensively.
    """
    _require_idempotent(a)
    n = a.n
    diag = [i for i in range(n) if a.entry(i, i)]
    seen: set[int] = set()
    sets: list[frozenset[int]] = []
    for i in diag:
        if i in seen:
            continue
        cls = frozenset(
            j for j in diag if a.entry(i, j) and a.entry(j, i)
        )
        seen |= cls
        for p in cls:
            for q in cls:
                if not a.entry(p, q):
                    raise AssertionError("positive-set class not fully 1")
        for k in range(n):
            if k not in cls and all(
                a.entry(p, k) and a.entry(k, p) for p in cls
            ):
                raise AssertionError("positive-set class not maximal")
        sets.append(cls)
    return tuple(sorted(sets, key=min))


@dataclass(frozen=True)
class ArrowRelation:
    """The relation i -> j of an idempotent matrix: every i2 with a[i2][i]=1
    and every j2 with a[j][j2]=1 satisfy a[i2][j2]=1.  ``targets[i]`` is the
    bitmask of all j with i -> j."""

    n: int
    targets: tuple[int, ...]

    def holds(self, i: int, j: int) -> bool:
        return bool((self.targets[i] >> j) & 1)

    def pairs(self) -> set[tuple[int, int]]:
        return {
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if (self.targets[i] >> j) & 1
        }


def arrow_relation(a: BoolMatrix) -> ArrowRelation:
    _require_idempotent(a)
    n = a.n
    full = (1 << n) - 1
    cols = a.columns()
    # meet[i] = AND of rows i2 with a[i2][i] = 1; empty column gives the full
    # mask, which makes i -> j hold vacuously for every j.
    meets = []
    for i in range(n):
        m = full
        c = cols[i]
        while c:
            low = c & -c
            m &= a.rows[low.bit_length() - 1]
            c ^= low
        meets.append(m)
    targets = []
    for i in range(n):
        t = 0
        mi = meets[i]
        for j in range(n):
            if a.rows[j] & ~mi == 0:
                t |= 1 << j
        targets.append(t)
    return ArrowRelation(n, tuple(targets))


def free_pairs(a: BoolMatrix) -> frozenset[tuple[int, int]]:
    """Unordered pairs {i, j} incomparable both ways under the arrow relation."""
    arrows = arrow_relation(a)
    out = set()
    for i in range(a.n):
        for j in range(i + 1, a.n):
            if not arrows.holds(i, j) and not arrows.holds(j, i):
                out.add((i, j))
    return frozenset(out)


def count_signature(a: BoolMatrix) -> tuple[int, int]:
    """(number of positive sets, number of free pairs)."""
    return len(positive_sets(a)), len(free_pairs(a))


def absorbs(a: BoolMatrix, b: BoolMatrix) -> bool:
    """True when a * b == b == b * a."""
    return a * b == b and b * a == b


def _require_absorbing_pair(a: BoolMatrix, b: BoolMatrix) -> None:
    _require_idempotent(a)
    _require_idempotent(b)
    if not absorbs(a, b):
        raise ValueError("pair must satisfy a*b == b == b*a")


def check_positive_set_containment(a: BoolMatrix, b: BoolMatrix) -> bool:
    """Every positive set of b contains a positive set of a (absorbing pair)."""
    _require_absorbing_pair(a, b)
    ps_a = positive_sets(a)
    return all(any(j <= i for j in ps_a) for i in positive_sets(b))


def check_free_pair_containment(a: BoolMatrix, b: BoolMatrix) -> bool:
    """Every free pair of b is a free pair of a (absorbing pair)."""
    _require_absorbing_pair(a, b)
    return free_pairs(b) <= free_pairs(a)


def check_equal_counts_force_equality(a: BoolMatrix, b: BoolMatrix) -> bool:
    """Equal positive-set and free-pair counts force a == b (absorbing pair)."""
    _require_absorbing_pair(a, b)
    if count_signature(a) != count_signature(b):
        return True
    return a == b


def standard_idempotent_chain(n: int) -> list[BoolMatrix]:
    """The descending chain of (n^2+n+2)/2 idempotents from the identity to
    the zero matrix.

    First the g(n) = n(n-1)/2 above-diagonal positions are switched on one
    by one in lexicographic order, ending at the full upper triangle; then
    the rows of the triangle are erased bottom-up.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    chain: list[BoolMatrix] = []
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = [1 << i for i in range(n)]
    chain.append(BoolMatrix(n, rows))
    for (i, j) in pairs:
        rows[i] |= 1 << j
        chain.append(BoolMatrix(n, rows))
    upper = BoolMatrix.upper_triangular(n)
    assert chain[-1] == upper
    for m in range(1, n + 1):
        chain.append(BoolMatrix(n, upper.rows[: n - m] + (0,) * m))
    return chain


def is_max_embedding_chain(seq: Sequence[BoolMatrix]) -> bool:
    """All matrices pairwise distinct with earlier ones bilaterally absorbed
    by later ones, i.e. the sequence is the image of a max-monoid embedding."""
    if len(set(seq)) != len(seq):
        return False
    for i, a in enumerate(seq):
        for b in seq[i + 1 :]:
            if not absorbs(a, b):
                return False
    return True


def check_count_descent(chain: Sequence[BoolMatrix]) -> bool:
    """Along a chain of distinct idempotents with successive bilateral
    absorption, (positive sets, free pairs) never increases componentwise
    and strictly decreases in at least one component at each step."""
    for a, b in zip(chain, chain[1:]):
        _require_absorbing_pair(a, b)
        if a == b:
            raise ValueError("chain elements must be distinct")
    sig = [count_signature(a) for a in chain]
    for (p0, f0), (p1, f1) in zip(sig, sig[1:]):
        if p1 > p0 or f1 > f0:
            return False
        if (p1, f1) == (p0, f0):
            return False
    return True


# --- randomized generation -------------------------------------------------
# Idempotents are drawn as idempotent powers of uniform matrices; the bias
# this introduces is acceptable for property fuzzing.


def random_matrix(n: int, rng: random.Random) -> BoolMatrix:
    return BoolMatrix(n, (rng.getrandbits(n) for _ in range(n)))


def random_idempotent(n: int, rng: random.Random) -> BoolMatrix:
    return idempotent_power(random_matrix(n, rng))


def random_absorbing_pair(
    n: int, rng: random.Random
) -> tuple[BoolMatrix, BoolMatrix]:
    """(a, b) idempotent with a*b == b == b*a, via b = (a*x*a)^idempotent."""
    a = random_idempotent(n, rng)
    x = random_matrix(n, rng)
    b = idempotent_power(a * x * a)
    return a, b


FUZZ_CHECKS = (
    "stable",
    "positive_sets_disjoint",
    "arrow_reflexive",
    "entry_implies_arrow",
    "positive_set_containment",
    "free_pair_containment",
    "equal_counts_force_equality",
)


def fuzz_suite(n: int, trials: int, seed: int) -> dict[str, int]:
    """Run the idempotent-structure property checks on random matrices.

    Returns a failure count per check name plus the number of trials; all
    counts are 0 for a correct implementation.
    """
    rng = random.Random(seed)
    failures = {name: 0 for name in FUZZ_CHECKS}
    for _ in range(trials):
        a, b = random_absorbing_pair(n, rng)
        if not is_stable(a):
            failures["stable"] += 1
        ps = positive_sets(a)
        covered: set[int] = set()
        for s in ps:
            if covered & s:
                failures["positive_sets_disjoint"] += 1
                break
            covered |= s
        arrows = arrow_relation(a)
        if any(not arrows.holds(i, i) for i in range(n)):
            failures["arrow_reflexive"] += 1
        if any(
            a.entry(i, j) and not arrows.holds(i, j)
            for i in range(n)
            for j in range(n)
        ):
            failures["entry_implies_arrow"] += 1
        if not check_positive_set_containment(a, b):
            failures["positive_set_containment"] += 1
        if not check_free_pair_containment(a, b):
            failures["free_pair_containment"] += 1
        if not check_equal_counts_force_equality(a, b):
            failures["equal_counts_force_equality"] += 1
    failures["trials"] = trials
    return failures


# --- text format ------------------------------------------------------------
# Matrix file: first line is n, then n lines of n characters, each '0' or '1'.


def parse_matrix_file(text: str) -> BoolMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError("first line must be the matrix dimension") from None
    if n < 1:
        raise ValueError("matrix dimension must be positive")
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row {ln!r}")
        rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
    return BoolMatrix(n, rows)


def format_matrix_file(a: BoolMatrix) -> str:
    return "\n".join([str(a.n)] + a.to_lines()) + "\n"
