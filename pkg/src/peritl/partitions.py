"""Exact Young-diagram geometry on integer partitions.

A partition is a plain tuple of weakly decreasing positive integers; ``()``
is the empty partition.  Boxes carry matrix coordinates ``(row, col)``
starting at 1, in English notation, so the box in row ``i`` and column ``j``
has content ``j - i`` and anticontent ``i + j``.  All functions are pure and
all values immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .calltrace import traced

Partition = tuple[int, ...]
Box = tuple[int, int]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and return `parts` as a canonical partition tuple.

    >>> check_partition([3, 1])
    (3, 1)
    >>> check_partition([])
    ()
    """
    t = tuple(int(p) for p in parts)
    for i, p in enumerate(t):
        if p < 1:
            raise ValueError(f"parts must be positive, got {p} in {t}")
        if i + 1 < len(t) and t[i + 1] > p:
            raise ValueError(f"parts must weakly decrease, got {t}")
    return t


def size(lam: Partition) -> int:
    return sum(lam)


def box_in(lam: Partition, row: int, col: int) -> bool:
    """True iff the diagram of `lam` contains the box (row, col)."""
    return 1 <= row <= len(lam) and 1 <= col <= lam[row - 1]


def has_content(lam: Partition, q: int) -> bool:
    """True iff some box of `lam` has content q.

    The contents occurring in a nonempty diagram form the full interval
    [1 - len(lam), lam[0] - 1]: column 1 realizes the negatives, row 1 the
    nonnegatives.
    """
    return bool(lam) and 1 - len(lam) <= q <= lam[0] - 1


@traced
def staircase(k: int) -> Partition:
    """The staircase partition (k, k-1, ..., 1); k = 0 gives ().

    >>> staircase(3)
    (3, 2, 1)
    >>> staircase(0)
    ()
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return tuple(range(k, 0, -1))


@traced
def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: every row of `inner` fits inside `outer`.

    >>> contains((4, 2, 1), (3, 2, 1))
    True
    >>> contains((2,), (2, 1))
    False
    """
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@traced
def add_box(lam: Partition, q: int) -> Optional[Partition]:
    """Add the unique addable box of content q, or None if there is none.

    >>> add_box((), 0)
    (1,)
    >>> add_box((2, 1), 2)
    (3, 1)
    >>> add_box((2, 1), 1) is None
    True
    """
    n = len(lam)
    for i in range(1, n + 2):
        cur = lam[i - 1] if i <= n else 0
        prev = lam[i - 2] if i >= 2 else None
        if (prev is None or prev > cur) and cur + 1 - i == q:
            if i <= n:
                return lam[: i - 1] + (cur + 1,) + lam[i:]
            return lam + (1,)
    return None


@traced
def remove_box(lam: Partition, q: int) -> Optional[Partition]:
    """Remove the unique removable box of content q, or None if there is none.

    >>> remove_box((1,), 0)
    ()
    >>> remove_box((2, 1), 1)
    (1, 1)
    >>> remove_box((2, 1), 0) is None
    True
    """
    n = len(lam)
    for i in range(1, n + 1):
        nxt = lam[i] if i < n else 0
        if lam[i - 1] > nxt and lam[i - 1] - i == q:
            if lam[i - 1] == 1:
                return lam[: i - 1]
            return lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:]
    return None


def addable_contents(lam: Partition) -> list[int]:
    """Contents of the addable corner boxes, in decreasing order."""
    out = []
    n = len(lam)
    for i in range(1, n + 2):
        cur = lam[i - 1] if i <= n else 0
        prev = lam[i - 2] if i >= 2 else None
        if prev is None or prev > cur:
            out.append(cur + 1 - i)
    return out


def removable_contents(lam: Partition) -> list[int]:
    """Contents of the removable corner boxes, in decreasing order."""
    out = []
    n = len(lam)
    for i in range(1, n + 1):
        nxt = lam[i] if i < n else 0
        if lam[i - 1] > nxt:
            out.append(lam[i - 1] - i)
    return out


def rim_box(lam: Partition, q: int) -> Optional[Box]:
    """The unique rim box of content q, or None.

    A box (i, j) is on the rim when (i+1, j+1) is not in the diagram; every
    content present in the diagram is realized by exactly one rim box.
    """
    if not has_content(lam, q):
        return None
    n = len(lam)
    for i in range(1, n + 1):
        lo = max(1, lam[i] if i < n else 0)
        if lo - i <= q <= lam[i - 1] - i:
            return (i, q + i)
    raise RuntimeError(f"rim walk missed content {q} of {lam}")


@traced
def rim_boxes(lam: Partition) -> list[Box]:
    """All rim boxes, ordered by increasing content; one per content.

    >>> rim_boxes((2, 2))
    [(2, 1), (2, 2), (1, 2)]
    >>> rim_boxes(())
    []
    """
    out = []
    n = len(lam)
    for i in range(n, 0, -1):
        lo = max(1, lam[i] if i < n else 0)
        for j in range(lo, lam[i - 1] + 1):
            out.append((i, j))
    return out


@dataclass(frozen=True)
class RimHook:
    """A removable connected strip of rim boxes, one per content.

    `boxes` is ordered by increasing content; `height`/`width` count the
    distinct rows/columns met, so height + width = len(boxes) + 1.
    """

    boxes: tuple[Box, ...]
    start_content: int
    end_content: int
    height: int
    width: int

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def balanced(self) -> bool:
        return self.height == self.width


def remove_boxes(lam: Partition, boxes: Iterable[Box]) -> Optional[Partition]:
    """Delete `boxes` from the diagram; None unless a partition remains.

    Deletion is valid only when the removed boxes form a suffix of every
    affected row and the new row lengths still weakly decrease.
    """
    by_row: dict[int, list[int]] = {}
    for (i, j) in boxes:
        if not box_in(lam, i, j):
            return None
        by_row.setdefault(i, []).append(j)
    rows = list(lam)
    for i, cols in by_row.items():
        hi = max(cols)
        lo = min(cols)
        if hi != rows[i - 1] or len(cols) != hi - lo + 1 or len(set(cols)) != len(cols):
            return None
        rows[i - 1] = lo - 1
    while rows and rows[-1] == 0:
        rows.pop()
    for i in range(len(rows) - 1):
        if rows[i] < rows[i + 1]:
            return None
    if any(r < 0 for r in rows):
        return None
    return tuple(rows)


@traced
def rim_hook(lam: Partition, c1: int, c2: int) -> Optional[RimHook]:
    """The removable rim hook covering contents [c1, c2], or None.

    Present only when every content in the interval occurs in `lam` and
    deleting the corresponding rim boxes leaves a partition.

    >>> rim_hook((3, 3), 0, 2).boxes
    ((2, 2), (2, 3), (1, 3))
    >>> rim_hook((2, 2, 1), -1, 1) is None
    True
    """
    if c1 > c2:
        raise ValueError("need c1 <= c2")
    if not (has_content(lam, c1) and has_content(lam, c2)):
        return None
    boxes = tuple(b for b in rim_boxes(lam) if c1 <= b[1] - b[0] <= c2)
    if len(boxes) != c2 - c1 + 1:
        return None
    if remove_boxes(lam, boxes) is None:
        return None
    return RimHook(
        boxes=boxes,
        start_content=c1,
        end_content=c2,
        height=len({i for (i, _) in boxes}),
        width=len({j for (_, j) in boxes}),
    )


def delete_hook(lam: Partition, hook: RimHook) -> Partition:
    """Delete the boxes of a hook previously produced by `rim_hook`."""
    out = remove_boxes(lam, hook.boxes)
    if out is None:
        raise ValueError("hook is not removable from this partition")
    return out


@traced
def minimal_balanced_hook_starting(lam: Partition, q: int) -> Optional[RimHook]:
    """The fewest-box removable balanced rim hook whose smallest content is q.

    Balanced means equal height and width.  Hooks starting at a fixed content
    are totally ordered by their end content, so the minimum is unique.
    """
    if not has_content(lam, q):
        return None
    for c2 in range(q, lam[0]):
        hook = rim_hook(lam, q, c2)
        if hook is not None and hook.balanced:
            return hook
    return None


@traced
def minimal_balanced_hook_ending(lam: Partition, q: int) -> Optional[RimHook]:
    """Mirror image: fewest-box removable balanced hook with largest content q."""
    if not has_content(lam, q):
        return None
    for c1 in range(q, -len(lam), -1):
        hook = rim_hook(lam, c1, q)
        if hook is not None and hook.balanced:
            return hook
    return None


@traced
def two_core(lam: Partition) -> tuple[Partition, int]:
    """Strip rim 2-hooks (dominoes) until none remains.

    The result never depends on the removal order; for determinism of the
    intermediate states the domino of largest start content is removed first.
    The core is always a staircase, returned together with its index.

    >>> two_core((3, 1))
    ((), 0)
    >>> two_core((3, 2, 1))
    ((3, 2, 1), 3)
    """
    cur = lam
    while True:
        hook = None
        for c in range(cur[0] - 2 if cur else -1, -len(cur) - 1, -1):
            hook = rim_hook(cur, c, c + 1)
            if hook is not None:
                break
        if hook is None:
            break
        cur = delete_hook(cur, hook)
    k = len(cur)
    if cur != staircase(k):
        raise RuntimeError(f"domino-free partition {cur} is not a staircase")
    return cur, k


@traced
def transpose(lam: Partition) -> Partition:
    """The conjugate diagram.

    >>> transpose((3, 1))
    (2, 1, 1)
    >>> transpose(())
    ()
    """
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in descending lexicographic order.

    >>> list(partitions_of(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        v = parts[k] - 1
        rem = len(parts) - k - 1 + 1
        parts[k:] = [v]
        while rem >= v:
            parts.append(v)
            rem -= v
        if rem:
            parts.append(rem)


@traced
def enumerate_partitions(max_size: int) -> Iterator[Partition]:
    """Every partition of every n <= max_size, by size then descending lex.

    >>> list(enumerate_partitions(2))
    [(), (1,), (2,), (1, 1)]
    """
    for n in range(max_size + 1):
        yield from partitions_of(n)
