"""The marking dictionary from partitions to dominant weights.

Scanning a Young diagram bottom row upward, a diamond is placed in the
right-most box of a row whenever fewer diamonds have been placed so far than
that row is long.  The number of diamonds equals the cell index n of the
partition, the set of their contents shifted down by one (the d-set) is an
n-subset of the integers, and subtracting the staircase (n-1, n-2, ..., 0)
from the decreasingly sorted d-set yields a dominant weight for the rank-n
periplectic Lie superalgebra.  On each cell stratum the d-set map is a
bijection onto n-subsets, inverted here by search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .calltrace import traced
from .partitions import (
    Box,
    Partition,
    add_box,
    enumerate_partitions,
    transpose,
)
from .strata import cell_index

DominantWeight = tuple[int, ...]


@dataclass(frozen=True)
class Marking:
    """Diamond-marked boxes of a diagram, bottom row first."""

    boxes: tuple[Box, ...]

    @property
    def contents(self) -> tuple[int, ...]:
        """Contents of the marked boxes in marking order (strictly increasing)."""
        return tuple(j - i for (i, j) in self.boxes)

    def to_json_dict(self) -> dict:
        tilde = sorted(self.contents)
        return {
            "boxes": [list(b) for b in self.boxes],
            "dTilde": tilde,
            "d": [c - 1 for c in tilde],
        }


@traced
def marking(lam: Partition) -> Marking:
    """Mark the diagram bottom-up: the right-most box of row i gets a diamond
    when fewer than lam[i] diamonds exist so far.

    >>> marking((2,)).boxes
    ((1, 2),)
    >>> marking((2, 2, 2)).boxes
    ((3, 2), (2, 2))
    >>> marking((4, 2, 1)).boxes
    ((3, 1), (2, 2), (1, 4))
    """
    boxes = []
    count = 0
    for i in range(len(lam), 0, -1):
        if count < lam[i - 1]:
            boxes.append((i, lam[i - 1]))
            count += 1
    out = Marking(boxes=tuple(boxes))
    contents = out.contents
    if len(set(contents)) != len(contents):
        raise RuntimeError(f"marked contents of {lam} collide: {contents}")
    return out


@traced
def d_tilde(lam: Partition) -> set[int]:
    """Contents of the marked boxes.

    >>> sorted(d_tilde((1, 1, 1)))
    [-2]
    >>> sorted(d_tilde((3, 2, 2, 2)))
    [-2, -1, 2]
    """
    return set(marking(lam).contents)


@traced
def d_set(lam: Partition) -> set[int]:
    """The marked contents, each shifted down by one.

    >>> sorted(d_set((1, 1, 1)))
    [-3]
    >>> sorted(d_set((2, 2, 1, 1)))
    [-4, -1]
    """
    return {c - 1 for c in marking(lam).contents}


@traced
def weight_from_subset(subset: Iterable[int], n: int) -> DominantWeight:
    """Decode an n-subset of the integers as a dominant weight.

    Sorting the subset decreasingly as s_1 > ... > s_n, coordinate i is
    s_i - (n - i); the result is automatically weakly decreasing.

    >>> weight_from_subset({0}, 1)
    (0,)
    >>> weight_from_subset({-4, -1}, 2)
    (-2, -4)
    """
    s = sorted(set(subset), reverse=True)
    if len(s) != n:
        raise ValueError(f"need exactly {n} distinct values, got {s}")
    omega = tuple(s[i] - (n - i - 1) for i in range(n))
    for i in range(n - 1):
        if omega[i] < omega[i + 1]:
            raise RuntimeError(f"decoded weight {omega} is not weakly decreasing")
    return omega


@traced
def dominant_weight(lam: Partition) -> tuple[int, DominantWeight]:
    """Rank and highest weight attached to a partition via its d-set.

    >>> dominant_weight((3, 2, 1))
    (3, (-1, -2, -3))
    >>> dominant_weight((1,))
    (1, (-1,))
    >>> dominant_weight((2, 2, 1, 1))
    (2, (-2, -4))
    """
    s = d_set(lam)
    return len(s), weight_from_subset(s, len(s))


class SearchBudgetExceeded(RuntimeError):
    """Raised when the d-set inversion search exhausts its size cap."""


@traced
def partition_from_d_set(subset: Iterable[int], n: int, max_boxes: Optional[int] = None) -> Partition:
    """The unique partition of cell index n with the given d-set.

    Found by scanning partitions in canonical order inside a provable box:
    the top mark bounds the first row by max(n, max(S)+2) and the bottom
    mark sits in the last row, bounding the number of rows by
    first row - min(S) - 1.  Exhausting the cap raises SearchBudgetExceeded
    rather than ever returning a wrong answer.

    >>> partition_from_d_set({-3}, 1)
    (1, 1, 1)
    >>> partition_from_d_set({0}, 1)
    (2,)
    >>> partition_from_d_set({1}, 1)
    (3,)
    """
    target = set(subset)
    if len(target) != n:
        raise ValueError(f"need exactly {n} distinct values, got {sorted(target)}")
    if n == 0:
        if target:
            raise ValueError("rank 0 takes the empty subset only")
        return ()
    max_cols = max(n, max(target) + 2)
    max_rows = max_cols - min(target) - 1
    if max_boxes is None:
        max_boxes = max_cols * max_rows
    for lam in enumerate_partitions(max_boxes):
        if not lam or lam[0] > max_cols or len(lam) > max_rows:
            continue
        if d_set(lam) == target and cell_index(lam) == n:
            return lam
    raise SearchBudgetExceeded(
        f"no partition with d-set {sorted(target)} within {max_boxes} boxes"
    )


@traced
def closed_form_weight(lam: Partition) -> Optional[DominantWeight]:
    """Closed formula for the weight of a generic partition, or None.

    With n the cell index, an admissible cut is a k0 in 0..n with
    lam[k0] = n - k0 (rows past the end count as zero); the columns of the
    tail rows after the cut form a partition nu, and when nu has no repeated
    part the weight is

        (lam_i - n - 1)           for i = 1..k0,
        (-nu_{n-i+1} - k0)        for i = k0+1..n.

    Every admissible generic cut is evaluated and they must all agree; None
    means no cut is generic.  Absence of any admissible cut is a
    falsification and raises.

    >>> closed_form_weight((3, 2, 1))
    (-1, -2, -3)
    >>> closed_form_weight((2,))
    (0,)
    """
    n = cell_index(lam)
    results = []
    found_cut = False
    for k0 in range(n + 1):
        row = lam[k0] if k0 < len(lam) else 0
        if row != n - k0:
            continue
        found_cut = True
        nu = transpose(lam[k0:])
        if len(set(nu)) != len(nu):
            continue
        padded = nu + (0,) * (n - k0 - len(nu))
        omega = tuple(lam[i - 1] - n - 1 for i in range(1, k0 + 1)) + tuple(
            -padded[n - i] - k0 for i in range(k0 + 1, n + 1)
        )
        results.append(omega)
    if not found_cut:
        raise RuntimeError(f"no admissible cut for {lam} at rank {n}")
    if not results:
        return None
    if any(r != results[0] for r in results):
        raise RuntimeError(f"generic cuts of {lam} disagree: {results}")
    return results[0]


@traced
def check_box_addition_surgery(lam: Partition, q: int) -> dict:
    """Check how the d-set changes when the addable q-box is added.

    Applicable when the box exists, the cell index is unchanged, and a
    marked box of content q-1 (replace q-2 by q-1 in the d-set) or of
    content q+1 with none of content q-1 (replace q by q-1) is present.
    Returns a report dict; failures are data, never exceptions.
    """
    report: dict = {"partition": list(lam), "q": q, "applicable": False, "case": None}
    mu = add_box(lam, q)
    if mu is None:
        report["reason"] = "no addable box of that content"
        return report
    n = cell_index(lam)
    if cell_index(mu) != n:
        report["reason"] = "cell index changes"
        return report
    tilde = d_tilde(lam)
    if q - 1 in tilde:
        case, old, new = "i", q - 2, q - 1
    elif q + 1 in tilde:
        case, old, new = "ii", q, q - 1
    else:
        report["reason"] = "no marked box of content q-1 or q+1"
        return report
    report["applicable"] = True
    report["case"] = case
    before = d_set(lam)
    expected = (before - {old}) | {new}
    actual = d_set(mu)
    report["pass"] = old in before and expected == actual
    report["d_before"] = sorted(before)
    report["d_after"] = sorted(actual)
    report["d_expected"] = sorted(expected)
    return report
