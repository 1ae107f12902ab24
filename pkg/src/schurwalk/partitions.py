"""Integer partitions, skew shapes, border strips, and walker coordinates.

Partitions are plain tuples of positive ints in weakly decreasing order;
the empty tuple is the empty partition.  Border-strip enumeration runs on
first-column hook lengths (beta numbers), which makes both the strip list
and the strip heights cheap; the cell-level predicate `is_border_strip`
is kept as the slow trusted path.
"""

from __future__ import annotations

from itertools import combinations

Partition = tuple[int, ...]


class PartitionError(ValueError):
    pass


def normalize(parts) -> Partition:
    """Validate weak decrease, trim zero parts, return a tuple."""
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise PartitionError(f"negative part {p}")
        if prev is not None and p > prev:
            raise PartitionError(f"parts not weakly decreasing: {tuple(parts)}")
        prev = p
        if p > 0:
            out.append(p)
    return tuple(out)


def is_partition(parts) -> bool:
    try:
        normalize(parts)
    except PartitionError:
        return False
    return True


def part(lam: Partition, i: int) -> int:
    """Row length lam_i, 1-indexed, 0 beyond the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """Cell-wise containment inner <= outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def skew_size(outer: Partition, inner: Partition) -> int:
    if not contains(outer, inner):
        raise PartitionError(f"{inner} is not contained in {outer}")
    return sum(outer) - sum(inner)


def skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    """Cells (row, col), 1-indexed, of the skew diagram outer\\inner."""
    if not contains(outer, inner):
        raise PartitionError(f"{inner} is not contained in {outer}")
    return [
        (r, c)
        for r in range(1, len(outer) + 1)
        for c in range(part(inner, r) + 1, part(outer, r) + 1)
    ]


def add_box(lam: Partition, row: int) -> Partition | None:
    """lam + e_row (1-indexed), or None when the result is not a partition."""
    if row < 1 or row > len(lam) + 1:
        return None
    new = list(lam) + [0] * (row - len(lam))
    new[row - 1] += 1
    if row >= 2 and new[row - 1] > new[row - 2]:
        return None
    return tuple(p for p in new if p > 0)


def remove_box(lam: Partition, row: int) -> Partition | None:
    """lam - e_row (1-indexed), or None when the result is not a partition."""
    if row < 1 or row > len(lam):
        return None
    new = list(lam)
    new[row - 1] -= 1
    if row < len(lam) and new[row - 1] < new[row]:
        return None
    return tuple(p for p in new if p > 0)


def partitions_of(n: int, max_rows: int | None = None):
    """Yield all partitions of n (optionally with at most max_rows rows)."""
    if n < 0:
        return
    if max_rows is None:
        max_rows = n

    def rec(remaining, largest, rows):
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, rows - 1):
                yield (first,) + rest

    yield from rec(n, n, max_rows)


def partitions_up_to(n: int, max_rows: int | None = None):
    for d in range(n + 1):
        yield from partitions_of(d, max_rows)


def subpartitions(lam: Partition):
    """All partitions contained in lam."""

    def rec(i, larger):
        if i == len(lam):
            yield ()
            return
        for p in range(min(lam[i], larger), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    yield from rec(0, lam[0] if lam else 0)


# -- border strips ----------------------------------------------------------


def is_border_strip(outer: Partition, inner: Partition) -> bool:
    """Connected skew shape with no 2x2 square (cell-level definition)."""
    if not contains(outer, inner):
        return False
    cells = set(skew_cells(outer, inner))
    if not cells:
        return False
    for (r, c) in cells:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return False
    # connectivity under edge adjacency
    stack = [next(iter(cells))]
    seen = {stack[0]}
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def strip_height(outer: Partition, inner: Partition) -> int:
    """Number of occupied rows minus one."""
    rows = {r for (r, _) in skew_cells(outer, inner)}
    if not rows:
        raise PartitionError("empty skew shape has no height")
    return max(rows) - min(rows)


def _beta(lam: Partition, m: int) -> list[int]:
    """First-column hook lengths lam_i - i + m for i = 1..m (distinct, >= 0)."""
    return [part(lam, i) - i + m for i in range(1, m + 1)]


def removable_border_strips(lam: Partition, size: int):
    """All (mu, height) with mu subset lam and lam\\mu a border strip of `size`.

    Sorted lexicographically by mu.
    """
    if size < 1:
        raise PartitionError("strip size must be >= 1")
    m = len(lam)
    if m == 0:
        return []
    betas = set(_beta(lam, m))
    out = []
    for b in betas:
        nb = b - size
        if nb < 0 or nb in betas:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new = sorted(betas - {b} | {nb}, reverse=True)
        mu = tuple(p for p in (new[i] - (m - 1 - i) for i in range(m)) if p > 0)
        out.append((mu, height))
    out.sort(key=lambda t: t[0])
    return out


def addable_border_strips(lam: Partition, size: int, row_bound: int | None = None):
    """All (mu, height) with lam subset mu and mu\\lam a border strip of `size`.

    With `row_bound` set, only mu with at most `row_bound` rows are returned.
    Sorted lexicographically by mu.
    """
    if size < 1:
        raise PartitionError("strip size must be >= 1")
    m = len(lam) + size  # enough rows for any added strip
    betas = set(_beta(lam, m))
    out = []
    for b in betas:
        nb = b + size
        if nb in betas:
            continue
        height = sum(1 for c in betas if b < c < nb)
        new = sorted(betas - {b} | {nb}, reverse=True)
        mu = tuple(p for p in (new[i] - (m - 1 - i) for i in range(m)) if p > 0)
        if row_bound is not None and len(mu) > row_bound:
            continue
        out.append((mu, height))
    out.sort(key=lambda t: t[0])
    return out


# -- walker coordinates ------------------------------------------------------


def walkers_from_partition(lam: Partition, n: int) -> tuple[int, ...]:
    """Strictly increasing positions x_i = lam_{n-i+1} + i - 1."""
    if len(lam) > n:
        raise PartitionError(f"{lam} has more than {n} parts")
    return tuple(part(lam, n - i + 1) + i - 1 for i in range(1, n + 1))


def partition_from_walkers(x) -> tuple[Partition, int]:
    """Inverse of walkers_from_partition; positions must be >= 0 and increasing."""
    x = tuple(x)
    n = len(x)
    if any(x[i] >= x[i + 1] for i in range(n - 1)):
        raise PartitionError(f"positions not strictly increasing: {x}")
    parts = [x[i] - i for i in range(n)]
    if any(p < 0 for p in parts):
        raise PartitionError(f"positions {x} are not of partition type")
    return tuple(p for p in reversed(parts) if p > 0), n


def is_strictly_increasing(x) -> bool:
    x = tuple(x)
    return all(x[i] < x[i + 1] for i in range(len(x) - 1))


# -- textual format ----------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """Parse "a,b,c" (weakly decreasing); the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"malformed partition {text!r}") from exc
    return normalize(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def brute_force_strips(lam: Partition, size: int, direction: str):
    """Reference enumeration by filtering all sub/super-partitions.

    Slow path used by the tests to pin down the beta-number route.
    """
    results = []
    if direction == "remove":
        for mu in subpartitions(lam):
            if sum(lam) - sum(mu) == size and is_border_strip(lam, mu):
                results.append((mu, strip_height(lam, mu)))
    elif direction == "add":
        target = sum(lam) + size
        width = (lam[0] if lam else 0) + size
        rows = len(lam) + size
        for mu in partitions_of(target, max_rows=rows):
            if mu[0] <= width and contains(mu, lam) and is_border_strip(mu, lam):
                results.append((mu, strip_height(mu, lam)))
    else:
        raise ValueError(direction)
    results.sort(key=lambda t: t[0])
    return results
