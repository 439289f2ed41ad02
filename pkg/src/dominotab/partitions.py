"""Partitions, Young-diagram geometry, and the 2-quotient.

Conventions used throughout the package:

* A partition is a tuple of positive integers in nonincreasing order; the
  empty tuple is the empty partition.
* Cells are 1-based pairs (row, col), row counted from the top.  The content
  of a cell is col - row; the diagonal D_k is the set of cells of content k.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


Shape = tuple[int, ...]
Cell = tuple[int, int]


def is_partition(parts: Sequence[int]) -> bool:
    """True iff the sequence is nonincreasing with all entries >= 1."""
    parts = list(parts)
    if any(not isinstance(p, int) or p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts: Iterable[int]) -> Shape:
    """Normalise to a tuple, raising ValueError if not a valid partition."""
    shape = tuple(parts)
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape!r}")
    return shape


def size(shape: Shape) -> int:
    return sum(shape)


def content(row: int, col: int) -> int:
    return col - row


def cells(shape: Shape) -> Iterator[Cell]:
    """All cells of the diagram in row-major order."""
    for r, length in enumerate(shape, start=1):
        for c in range(1, length + 1):
            yield (r, c)


def contains_cell(shape: Shape, row: int, col: int) -> bool:
    return 1 <= row <= len(shape) and 1 <= col <= shape[row - 1]


def diagonal_range(shape: Shape) -> tuple[int, int]:
    """Inclusive (min, max) content over the diagram; (0, -1) when empty."""
    if not shape:
        return (0, -1)
    return (1 - len(shape), shape[0] - 1)


def diagonal_cells(shape: Shape, d: int) -> list[Cell]:
    """Cells on diagonal D_d, northwest to southeast.

    In a Young diagram these always form a contiguous run starting at row
    max(1, 1 - d).
    """
    out = []
    r = max(1, 1 - d)
    while contains_cell(shape, r, r + d):
        out.append((r, r + d))
        r += 1
    return out


def up_cell_count(shape: Shape) -> int:
    """Number of cells of nonnegative content (weakly northeast of D_0)."""
    return sum(max(0, length - (r - 1)) for r, length in enumerate(shape, start=1))


def is_staircase_admissible(shape: Shape) -> bool:
    """True iff the last part is at least the number of parts (lambda_k >= k).

    This is the shape condition for the shifted tableau families; the empty
    shape qualifies.
    """
    return not shape or shape[-1] >= len(shape)


def beta_vector(shape: Shape) -> tuple[int, ...]:
    """First-column hook lengths l_i = lambda_i + k - i (strictly decreasing)."""
    k = len(shape)
    return tuple(shape[i] + k - (i + 1) for i in range(k))


def two_quotient(shape: Shape) -> tuple[Shape, Shape]:
    """The 2-quotient (q1, q2) of a partition, ordered by domino type.

    Computed from the beta vector L with k = number of nonzero parts: the even
    entries of L, after subtracting the largest possible distinct even values
    0, 2, 4, ... assigned right to left and halving, give one component; the
    odd entries give the other the same way with 1, 3, 5, ...  The pair is
    returned so that in any domino paving of the shape the first component
    counts type-1 dominoes and the second type-2; concretely the evens-derived
    component comes first when k is even and second when k is odd (padding
    lambda with a zero part flips the parity of every beta number and hence
    swaps the two components, so a fixed intrinsic order needs this
    correction).
    """
    shape = check_partition(shape)
    k = len(shape)
    if k == 0:
        return ((), ())
    beta = beta_vector(shape)
    evens = [b for b in beta if b % 2 == 0]
    odds = [b for b in beta if b % 2 == 1]
    ne, no = len(evens), len(odds)
    from_evens = [(evens[j] - 2 * (ne - 1 - j)) // 2 for j in range(ne)]
    from_odds = [(odds[j] - 2 * (no - 1 - j) - 1) // 2 for j in range(no)]
    assert all(p >= 0 for p in from_evens) and all(p >= 0 for p in from_odds)
    q_even = tuple(p for p in from_evens if p > 0)
    q_odd = tuple(p for p in from_odds if p > 0)
    if k % 2 == 1:
        return (q_odd, q_even)
    return (q_even, q_odd)


def is_pavable(shape: Shape) -> bool:
    """True iff the diagram can be tiled by dominoes.

    Decided arithmetically: a partition is pavable iff its size equals twice
    the total size of its 2-quotient (equivalently, its 2-core is empty).
    """
    q1, q2 = two_quotient(shape)
    return size(shape) == 2 * (size(q1) + size(q2))


def inverse_two_quotient(q1: Shape, q2: Shape) -> Shape:
    """The unique pavable partition whose 2-quotient is (q1, q2).

    Realised by merging minimally filled tableaux of shapes q1 and q2 through
    the domino bijection, so that a single code path is the source of truth
    for the correspondence.
    """
    from .bijections import gamma_merge
    from .tableaux import PLAIN, minimal_tableau

    t1 = minimal_tableau(PLAIN, check_partition(q1))
    t2 = minimal_tableau(PLAIN, check_partition(q2))
    merged = gamma_merge(PLAIN, t1, t2)
    return merged.shape


def partitions_of(n: int) -> Iterator[Shape]:
    """All partitions of n in descending lexicographic order."""

    def rec(remaining: int, limit: int, prefix: tuple[int, ...]) -> Iterator[Shape]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(limit, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def partitions_up_to(max_size: int) -> Iterator[Shape]:
    """All partitions of sizes 0..max_size, sizes ascending."""
    for n in range(max_size + 1):
        yield from partitions_of(n)
