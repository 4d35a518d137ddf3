"""Partitions, plane partitions, diagonal slicing, and brute-force enumeration.

A partition is a plain tuple of weakly decreasing positive integers (a Young
diagram); a plane partition is a tuple of row partitions that also decreases
weakly down every column.  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .qseries import QSeries

Partition = tuple[int, ...]
PlanePartition = tuple[Partition, ...]


def make_partition(values: Iterable[int]) -> Partition:
    """Validate and canonicalize a part sequence (trailing zeros stripped)."""
    parts = list(values)
    for v in parts:
        if not isinstance(v, int):
            raise ValueError(f"parts must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"parts must be nonnegative, got {v}")
    while parts and parts[-1] == 0:
        parts.pop()
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
    return tuple(parts)


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: inner_i <= outer_i for every row."""
    if len(inner) > len(outer):
        return False
    return all(v <= outer[i] for i, v in enumerate(inner))


def interlaces(mu: Partition, nu: Partition) -> bool:
    """Whether mu_1 >= nu_1 >= mu_2 >= nu_2 >= ... (absent parts read as 0).

    Equivalently: nu fits inside mu and mu/nu is a horizontal strip.
    """
    if len(mu) > len(nu) + 1 or len(nu) > len(mu):
        return False
    for i in range(len(mu)):
        nu_i = nu[i] if i < len(nu) else 0
        if nu_i > mu[i]:
            return False
        if i + 1 < len(mu) and nu_i < mu[i + 1]:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of exactly n with parts <= max_part, largest part first."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_partitions(max_size: int) -> list[Partition]:
    """All partitions of size <= max_size, ordered by size then lexicographically."""
    out: list[Partition] = []
    for n in range(max_size + 1):
        out.extend(sorted(partitions_of(n)))
    return out


def make_plane_partition(rows: Iterable[Iterable[int]]) -> PlanePartition:
    """Validate a matrix of stack heights; zero entries and empty rows stripped."""
    cleaned: list[Partition] = []
    for i, row in enumerate(rows):
        try:
            cleaned.append(make_partition(row))
        except ValueError as exc:
            raise ValueError(f"row {i}: {exc}") from None
    while cleaned and not cleaned[-1]:
        cleaned.pop()
    for i in range(len(cleaned) - 1):
        upper, lower = cleaned[i], cleaned[i + 1]
        if len(lower) > len(upper):
            raise ValueError(f"column {len(upper)} increases from row {i} to row {i + 1}")
        for j, v in enumerate(lower):
            if v > upper[j]:
                raise ValueError(f"column {j} increases from row {i} to row {i + 1}")
    return tuple(cleaned)


def volume(pi: PlanePartition) -> int:
    """Total number of boxes (sum of all stack heights)."""
    return sum(sum(row) for row in pi)


@dataclass(frozen=True)
class SliceSequence:
    """Diagonal slices of a plane partition, indexed t = -T .. T with center 0.

    Valid sequences have odd length and interlace upward strictly left of the
    center and downward from the center on, including against the implicit
    empty slices just outside both ends.
    """

    slices: tuple[Partition, ...]

    def __post_init__(self):
        k = len(self.slices)
        if k == 0 or k % 2 == 0:
            raise ValueError(f"slice sequence must have odd length, got {k}")
        half = k // 2
        padded = ((),) + self.slices + ((),)
        for idx in range(len(padded) - 1):
            t = idx - half - 1
            left, right = padded[idx], padded[idx + 1]
            ok = interlaces(right, left) if t < 0 else interlaces(left, right)
            if not ok:
                raise ValueError(f"slices at t={t} and t={t + 1} do not interlace")

    @property
    def half_width(self) -> int:
        return len(self.slices) // 2

    def __getitem__(self, t: int) -> Partition:
        """Slice at signed diagonal index t; empty outside the stored range."""
        half = self.half_width
        if -half <= t <= half:
            return self.slices[t + half]
        return ()

    def total_size(self) -> int:
        return sum(sum(s) for s in self.slices)

    def trimmed(self) -> "SliceSequence":
        """Shrink to the minimal half-width keeping all nonzero slices."""
        half = self.half_width
        t = half
        while t > 0 and self[t] == () and self[-t] == ():
            t -= 1
        if t == half:
            return self
        return SliceSequence(self.slices[half - t : half + t + 1])


def diagonal_slices(pi: PlanePartition) -> SliceSequence:
    """Cut a plane partition along its diagonals.

    Slice t >= 0 reads pi(i, i+t) for i = 0, 1, ...; slice t < 0 reads
    pi(i-t, i).  The result always satisfies the SliceSequence invariant and
    its sizes add up to volume(pi).
    """
    if not pi:
        return SliceSequence(((),))
    half = max(len(pi) - 1, len(pi[0]) - 1)
    slices = []
    for t in range(-half, half + 1):
        parts = []
        i, j = (0, t) if t >= 0 else (-t, 0)
        while i < len(pi) and j < len(pi[i]):
            parts.append(pi[i][j])
            i += 1
            j += 1
        slices.append(tuple(parts))
    return SliceSequence(tuple(slices))


def unslice(seq: SliceSequence) -> PlanePartition:
    """Rebuild the unique plane partition with the given diagonal slices."""
    rows: list[Partition] = []
    i = 0
    while True:
        row = []
        j = 0
        while True:
            s = seq[j - i]
            d = min(i, j)
            if d >= len(s):
                break
            row.append(s[d])
            j += 1
        if not row:
            break
        rows.append(tuple(row))
        i += 1
    pi = make_plane_partition(rows)
    assert volume(pi) == seq.total_size()
    return pi


def _rows_under(bound: Partition | None, budget: int) -> Iterator[Partition]:
    """Nonempty rows fitting entrywise under `bound` with at most `budget` boxes.

    bound=None means the row is unconstrained from above (a first row).
    Deterministic depth-first order, larger entries first.
    """

    def rec(j: int, prev: int, left: int, prefix: list[int]) -> Iterator[Partition]:
        limit = min(prev, left)
        if bound is not None:
            if j >= len(bound):
                return
            limit = min(limit, bound[j])
        for v in range(limit, 0, -1):
            prefix.append(v)
            yield tuple(prefix)
            yield from rec(j + 1, v, left - v, prefix)
            prefix.pop()

    yield from rec(0, budget, budget, [])


def plane_partitions_of(n: int) -> Iterator[PlanePartition]:
    """All plane partitions of volume exactly n, in a fixed depth-first order.

    Rows are built top to bottom, each required to fit entrywise under the
    previous one, with the remaining volume as the pruning budget.
    """
    if n < 0:
        raise ValueError("volume must be nonnegative")
    if n == 0:
        yield ()
        return

    def extend(rows: list[Partition], bound: Partition | None, remaining: int):
        if remaining == 0:
            yield tuple(rows)
            return
        for row in _rows_under(bound, remaining):
            rows.append(row)
            yield from extend(rows, row, remaining - sum(row))
            rows.pop()

    yield from extend([], None, n)


def count_plane_partitions(n: int) -> int:
    """Number of plane partitions of volume exactly n, by direct enumeration."""
    return sum(1 for _ in plane_partitions_of(n))


def skew_ssyt_series(lam: Partition, mu: Partition, weights: Sequence[int], order: int) -> QSeries:
    """Weighted census of semistandard fillings of the skew shape lam/mu.

    Entries run over 1..len(weights); rows weakly increase, columns strictly
    increase.  A cell filled with e contributes weights[e-1] to the exponent
    of q, and the result is truncated at `order`.
    """
    lam = make_partition(lam)
    mu = make_partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"inner shape {mu} does not fit inside {lam}")
    for w in weights:
        if w < 0:
            raise ValueError("weights must be nonnegative")
    k = len(weights)
    cells = [
        (i, j)
        for i in range(len(lam))
        for j in range((mu[i] if i < len(mu) else 0), lam[i])
    ]
    counts = [0] * order
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int, exponent: int) -> None:
        if exponent >= order:
            return
        if idx == len(cells):
            counts[exponent] += 1
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in fill:
            lo = fill[i, j - 1]
        if (i - 1, j) in fill:
            lo = max(lo, fill[i - 1, j] + 1)
        for e in range(lo, k + 1):
            fill[i, j] = e
            rec(idx + 1, exponent + weights[e - 1])
            del fill[i, j]

    rec(0, 0)
    return QSeries(order, counts)
