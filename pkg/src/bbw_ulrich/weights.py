"""Exact combinatorics of GL weights and partitions.

A GL(r) weight is a non-increasing integer vector with r entries; it is a
partition when every entry is non-negative.  Twisting by a line bundle adds
a constant to every entry, so weights with negative entries are first-class
citizens here.

Dimensions of irreducible GL(r) representations are computed along two
independent routes:

* :func:`weyl_dim` multiplies out the Weyl product
  ``prod_{1<=i<j<=r} (w_i - w_j + j - i) / (j - i)``,
  which accepts arbitrary integer weights and is invariant under adding a
  constant to every entry;
* :func:`hook_content_dim` evaluates the hook content formula
  ``prod_{(i,j) in diagram} (r + j - i) / h_ij``
  over the cells of a Young diagram, which only makes sense for partitions.

The two agree on partitions and serve as cross-checks for one another.
All arithmetic is exact: numerators and denominators are accumulated as
Python integers and each final division is asserted to leave no remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

__all__ = [
    "GLWeight",
    "Partition",
    "NotNonIncreasing",
    "PadBelowNegative",
    "LengthShrink",
    "LengthMismatch",
    "TooManyParts",
    "rho",
    "sort_and_count",
    "weyl_dim",
    "hook_content_dim",
]


class NotNonIncreasing(ValueError):
    """Raised when a sequence meant to be a weight increases somewhere."""


class PadBelowNegative(ValueError):
    """Raised when zero-padding a weight whose last entry is negative."""


class LengthShrink(ValueError):
    """Raised when asked to pad a weight to fewer entries than it has."""


class LengthMismatch(ValueError):
    """Raised when a weight's length disagrees with the expected rank."""


class TooManyParts(ValueError):
    """Raised when a partition has more nonzero parts than the rank allows."""


@dataclass(frozen=True)
class GLWeight:
    """A non-increasing integer vector: the highest weight of a GL irrep.

    The length is fixed at construction and the value is immutable.
    Construction rejects sequences that are not non-increasing instead of
    silently sorting them, so a caller mixing up entry order fails loudly.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise NotNonIncreasing("a weight needs at least one entry")
        for i in range(len(entries) - 1):
            if entries[i] < entries[i + 1]:
                raise NotNonIncreasing(
                    f"entries must be non-increasing, got {entries[i]} < "
                    f"{entries[i + 1]} at positions {i}, {i + 1}"
                )
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def total(self) -> int:
        """Sum of the entries (the number of boxes, for a partition)."""
        return sum(self.entries)

    def shift(self, t: int) -> "GLWeight":
        """Add the integer ``t`` to every entry; monotonicity is preserved."""
        return GLWeight(e + t for e in self.entries)

    def pad(self, r: int) -> "GLWeight":
        """Extend to length ``r`` by appending zeros.

        Padding is only meaningful when it preserves monotonicity, so the
        last entry must be non-negative and ``r`` must not shrink the weight.
        """
        if r < len(self.entries):
            raise LengthShrink(f"cannot pad length {len(self.entries)} down to {r}")
        if self.entries[-1] < 0:
            raise PadBelowNegative(
                f"cannot zero-pad past negative last entry {self.entries[-1]}"
            )
        return GLWeight(self.entries + (0,) * (r - len(self.entries)))


@dataclass(frozen=True)
class Partition:
    """A non-increasing sequence of non-negative integers.

    Trailing zeros are trimmed at construction, so transposing twice gives
    back the original value exactly.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NotNonIncreasing(
                    f"parts must be non-increasing, got {parts[i]} < {parts[i + 1]}"
                )
        if parts and parts[-1] < 0:
            raise NotNonIncreasing("partition parts must be non-negative")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        """The conjugate diagram: columns become rows."""
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)


def rho(m: int) -> tuple[int, ...]:
    """The staircase vector (m, m-1, ..., 1) used to regularize weights."""
    if m < 1:
        raise ValueError(f"rank must be positive, got {m}")
    return tuple(range(m, 0, -1))


def sort_and_count(
    seq: Iterable[int],
) -> Optional[tuple[tuple[int, ...], int]]:
    """Sort into strictly decreasing order, counting inversions.

    Returns ``(sorted, inversions)`` where ``inversions`` is the number of
    pairs i < j with seq[i] < seq[j] -- the minimal number of adjacent
    transpositions that sorts the sequence.  Returns ``None`` as soon as two
    entries coincide, in which case no strictly decreasing rearrangement
    exists.

    The O(m^2) pair count is deliberate: sequences here have at most a few
    dozen entries.
    """
    seq = tuple(seq)
    if len(set(seq)) < len(seq):
        return None
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] < seq[j]:
                inversions += 1
    return tuple(sorted(seq, reverse=True)), inversions


def weyl_dim(w: GLWeight, r: int) -> int:
    """Dimension of the irreducible GL(r) representation of highest weight w.

    Evaluates ``prod_{1<=i<j<=r} (w_i - w_j + j - i) / (j - i)`` with exact
    integer arithmetic; the quotient is checked to be exact.  Because only
    differences of entries appear, the result is invariant under shifting
    every entry by a constant, which is what makes this form usable for
    twisted (possibly negative) weights.
    """
    if len(w) != r:
        raise LengthMismatch(f"weight has {len(w)} entries, expected {r}")
    e = w.entries
    num = 1
    den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= e[i] - e[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl product must divide exactly"
    return q


def hook_content_dim(p: Partition, r: int) -> int:
    """Dimension of the GL(r) irrep of a partition, by hooks and contents.

    For each cell (i, j) of the Young diagram (1-based row i, column j) the
    content factor is r + j - i and the hook length is
    ``p_i + p^t_j - (i + j) + 1``.  The dimension is the exact quotient of
    the two products.  This is the partition-only counterpart of
    :func:`weyl_dim` and is kept as an independent oracle for it.
    """
    if len(p.parts) > r:
        raise TooManyParts(f"partition has {len(p.parts)} parts, rank is only {r}")
    conj = p.transpose().parts
    num = 1
    den = 1
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            num *= r + j - i
            den *= row + conj[j - 1] - (i + j) + 1
    q, rem = divmod(num, den)
    assert rem == 0, "hook content product must divide exactly"
    return q
