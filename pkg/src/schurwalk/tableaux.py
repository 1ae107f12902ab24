"""Exact counts of standard and semi-standard skew tableaux, and the signed
border-strip tableau counts behind the power-sum multiplication rule.

Fast paths are determinants (Aitken for standard fillings, a binomial
determinant for bounded semi-standard fillings); backtracking enumerators
are kept alongside as the slow trusted oracles.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import binomial
from .partitions import (
    Partition,
    PartitionError,
    contains,
    part,
    removable_border_strips,
    skew_size,
)


def _int_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-style Gaussian elimination over Fractions."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def count_standard_skew(outer: Partition, inner: Partition = ()) -> int:
    """Number of standard fillings of outer\\inner (1 for the empty shape).

    Aitken's determinant: |shape|! * det(1 / (outer_i - inner_j - i + j)!).
    """
    size = skew_size(outer, inner)
    ell = len(outer)
    if ell == 0:
        return 1
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            m = part(outer, i) - part(inner, j) - i + j
            row.append(Fraction(1, factorial(m)) if m >= 0 else Fraction(0))
        rows.append(row)
    value = _int_det(rows) * factorial(size)
    assert value.denominator == 1
    return int(value)


def count_semistandard_skew(outer: Partition, inner: Partition, q: int) -> int:
    """Semi-standard fillings of outer\\inner with entries in 1..q.

    Binomial determinant det(C(q + m - 1, m)) with m = outer_i - inner_j - i + j,
    the bounded-alphabet specialization of the h-determinant.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    skew_size(outer, inner)  # containment check
    ell = len(outer)
    if ell == 0:
        return 1
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            m = part(outer, i) - part(inner, j) - i + j
            if m < 0:
                row.append(Fraction(0))
            elif m == 0:
                row.append(Fraction(1))  # h_0 = 1 even for an empty alphabet
            else:
                row.append(Fraction(binomial(q + m - 1, m)))
        rows.append(row)
    value = _int_det(rows)
    assert value.denominator == 1
    return int(value)


def border_strip_character(outer: Partition, inner: Partition, alpha) -> int:
    """Signed count of border-strip tableaux of shape outer\\inner and type alpha.

    alpha is a composition (zero parts are ignored) whose parts must sum to
    the size of the shape.  Parts are peeled last-first: the final part
    occupies an outer strip, the rest fill what remains.
    """
    alpha = tuple(a for a in alpha if a != 0)
    if any(a < 0 for a in alpha):
        raise PartitionError("composition parts must be >= 0")
    if sum(alpha) != skew_size(outer, inner):
        raise PartitionError(
            f"type {alpha} does not sum to |{outer}\\{inner}| = {skew_size(outer, inner)}"
        )

    def recurse(out: Partition, rest: tuple[int, ...]) -> int:
        if not rest:
            return 1 if out == inner else 0
        last = rest[-1]
        total = 0
        for nu, height in removable_border_strips(out, last):
            if contains(nu, inner):
                total += (-1) ** height * recurse(nu, rest[:-1])
        return total

    return recurse(outer, alpha)


# -- backtracking oracles ----------------------------------------------------


def _skew_rows(outer: Partition, inner: Partition):
    ell = len(outer)
    return [(part(inner, i + 1), part(outer, i + 1)) for i in range(ell)]


def enumerate_standard_skew(outer: Partition, inner: Partition = ()):
    """Yield all standard fillings as dicts cell -> entry (slow oracle)."""
    size = skew_size(outer, inner)
    rows = _skew_rows(outer, inner)
    cells = [
        (r, c)
        for r, (lo, hi) in enumerate(rows)
        for c in range(lo, hi)
    ]

    def place(k, filling):
        if k > size:
            yield dict(filling)
            return
        for (r, c) in cells:
            if (r, c) in filling:
                continue
            if c > rows[r][0] and (r, c - 1) not in filling:
                continue
            if r > 0 and rows[r - 1][0] <= c < rows[r - 1][1] and (r - 1, c) not in filling:
                continue
            left = filling.get((r, c - 1))
            up = filling.get((r - 1, c))
            if (left is None or left < k) and (up is None or up < k):
                filling[(r, c)] = k
                yield from place(k + 1, filling)
                del filling[(r, c)]

    yield from place(1, {})


def brute_count_standard_skew(outer: Partition, inner: Partition = ()) -> int:
    return sum(1 for _ in enumerate_standard_skew(outer, inner))


def brute_count_semistandard_skew(outer: Partition, inner: Partition, q: int) -> int:
    """Count fillings with entries in 1..q, rows weakly and columns strictly
    increasing, by row-wise backtracking (slow oracle)."""
    rows = _skew_rows(outer, inner)
    ell = len(rows)

    def fill_row(r, above):
        # above: dict col -> entry in row r-1
        lo, hi = rows[r]
        row_vals = {}

        def cell(c):
            if c == hi:
                yield dict(row_vals)
                return
            lower = 1
            if c - 1 in row_vals:
                lower = max(lower, row_vals[c - 1])
            if c in above:
                lower = max(lower, above[c] + 1)
            for v in range(lower, q + 1):
                row_vals[c] = v
                yield from cell(c + 1)
                del row_vals[c]

        yield from cell(lo)

    def rec(r, above):
        if r == ell:
            return 1
        total = 0
        for row_vals in fill_row(r, above):
            total += rec(r + 1, row_vals)
        return total

    if ell == 0:
        return 1
    return rec(0, {})
