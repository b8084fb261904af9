"""Independent brute-force oracles used to freeze expected values.

Everything here works on raw sets of (row, col) boxes, deliberately sharing
no code with the library's row-length representation.
"""
from __future__ import annotations

from functools import lru_cache

from peritl.partitions import Partition, enumerate_partitions


@lru_cache(maxsize=None)
def boxes_of(lam: Partition) -> frozenset[tuple[int, int]]:
    return frozenset((i + 1, j + 1) for i, row in enumerate(lam) for j in range(row))


def is_diagram(boxes: frozenset[tuple[int, int]]) -> bool:
    """A box set is a Young diagram iff it is closed under moving up/left."""
    for (i, j) in boxes:
        if i > 1 and (i - 1, j) not in boxes:
            return False
        if j > 1 and (i, j - 1) not in boxes:
            return False
    return True


def partition_of_boxes(boxes: frozenset[tuple[int, int]]) -> Partition:
    rows: dict[int, int] = {}
    for (i, _) in boxes:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


@lru_cache(maxsize=None)
def oracle_addable(lam: Partition) -> dict[int, tuple[int, int]]:
    """Content -> box for every position whose addition leaves a diagram."""
    boxes = boxes_of(lam)
    out = {}
    for i in range(1, len(lam) + 2):
        for j in range(1, (lam[0] if lam else 0) + 2):
            if (i, j) not in boxes and is_diagram(boxes | {(i, j)}):
                out[j - i] = (i, j)
    return out


@lru_cache(maxsize=None)
def oracle_removable(lam: Partition) -> dict[int, tuple[int, int]]:
    boxes = boxes_of(lam)
    return {
        j - i: (i, j) for (i, j) in boxes if is_diagram(boxes - frozenset({(i, j)}))
    }


def _connected(cells: frozenset[tuple[int, int]]) -> bool:
    if not cells:
        return False
    todo = [next(iter(cells))]
    seen = {todo[0]}
    while todo:
        i, j = todo.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == cells


@lru_cache(maxsize=None)
def oracle_rim_hooks(lam: Partition) -> tuple[frozenset[tuple[int, int]], ...]:
    """Every removable rim hook of lam, as a box set.

    A removable rim hook is the difference of lam and a contained partition
    when that difference is edge-connected with one box per content.
    """
    big = boxes_of(lam)
    out = []
    for mu in enumerate_partitions(sum(lam)):
        small = boxes_of(mu)
        if not small <= big or small == big:
            continue
        skew = big - small
        contents = sorted(j - i for (i, j) in skew)
        if len(set(contents)) != len(contents):
            continue
        if contents != list(range(contents[0], contents[-1] + 1)):
            continue
        if _connected(skew):
            out.append(skew)
    return tuple(out)


def oracle_min_balanced(lam: Partition, q: int, side: str):
    """Fewest-box balanced removable hook starting (or ending) at content q."""
    best = None
    for skew in oracle_rim_hooks(lam):
        contents = sorted(j - i for (i, j) in skew)
        if side == "start" and contents[0] != q:
            continue
        if side == "end" and contents[-1] != q:
            continue
        height = len({i for (i, _) in skew})
        width = len({j for (_, j) in skew})
        if height != width:
            continue
        if best is None or len(skew) < len(best):
            best = skew
    return best


def oracle_xi(lam: Partition, q: int) -> Partition | None:
    """Recompute the twisted action from the raw case split on box sets."""
    addable = oracle_addable(lam)
    removable = oracle_removable(lam)
    if q in addable:
        return partition_of_boxes(boxes_of(lam) | {addable[q]})
    if q in removable:
        return None
    contents = {j - i for (i, j) in boxes_of(lam)}
    if not contents & {q - 1, q, q + 1}:
        return None
    rim = [
        (i, j)
        for (i, j) in boxes_of(lam)
        if j - i == q and (i + 1, j + 1) not in boxes_of(lam)
    ]
    assert len(rim) == 1
    i, j = rim[0]
    boxes = boxes_of(lam)
    right = (i, j + 1) in boxes
    below = (i + 1, j) in boxes
    assert right != below
    if right:
        skew = oracle_min_balanced(lam, q + 1, "start")
    else:
        skew = oracle_min_balanced(lam, q - 1, "end")
    if skew is None:
        return None
    return partition_of_boxes(boxes - skew)


def partition_count(n: int) -> int:
    """Number of partitions of n, via the independent two-variable recursion."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for maxpart in range(n + 1):
        table[0][maxpart] = 1
    for m in range(1, n + 1):
        for maxpart in range(1, n + 1):
            table[m][maxpart] = table[m][maxpart - 1] + (
                table[m - maxpart][min(maxpart, m - maxpart)] if maxpart <= m else 0
            )
    return table[n][n]
