"""Gelfand-Tsetlin patterns, the tableau bijection, and row operators.

Index convention (matching the triangular layout)::

    row n:      L(1,n)  L(2,n)  ...  L(n,n)      <- top row, the full shape
    row n-1:      L(1,n-1)  ...  L(n-1,n-1)
    ...
    row 1:              L(1,1)

``rows[j-1]`` stores row j, which has j entries; L(i,j) = rows[j-1][i-1].
Row j of the pattern of a tableau T is the shape of the sub-tableau of
entries <= j, padded with zeros to length j.  Entries interlace:
L(i,j+1) >= L(i,j) >= L(i+1,j+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import Interval, Partition
from .tableaux import Tableau, restrict_entries


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise ValueError(f"row {j} must have {j} entries, got {row}")
            if any(x < 0 for x in row):
                raise ValueError("pattern entries must be nonnegative")
        for j in range(1, len(rows)):
            lower, upper = rows[j - 1], rows[j]
            for i in range(j):
                if not upper[i] >= lower[i] >= upper[i + 1]:
                    raise ValueError(
                        f"interlacing violated between rows {j} and {j + 1}"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """L(i, j), with zero outside the triangle (i > j)."""
        if not 1 <= j <= self.n:
            raise IndexError(f"row {j} out of range")
        if i < 1:
            raise IndexError(f"column {i} out of range")
        return self.rows[j - 1][i - 1] if i <= j else 0

    @property
    def top_shape(self) -> Partition:
        return Partition(self.rows[-1]) if self.rows else Partition()

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "GTPattern":
        return cls(rows=tuple(tuple(row) for row in obj["rows"]))


@dataclass(frozen=True)
class Strip:
    """A strip of the two-letter sub-tableau at level k.

    ``low``/``high`` count the k- and (k+1)-boxes; ``start_col`` is the
    1-based column of the leftmost box.
    """

    row: int
    start_col: int
    low: int
    high: int
    level: int


@dataclass(frozen=True)
class StripRectangle:
    """A k-row directly atop a (k+1)-row of equal span."""

    row: int
    start_col: int
    width: int
    level: int


def to_pattern(T: Tableau, n: int) -> GTPattern:
    """The pattern whose row j is the shape of T restricted to 1..j."""
    if not T.is_straight:
        raise ValueError("patterns are defined for straight tableaux")
    if not T.is_semistandard():
        raise ValueError("patterns are defined for semistandard tableaux")
    if T.max_entry > n:
        raise ValueError(f"entries exceed {n}")
    rows = []
    for j in range(1, n + 1):
        shape = restrict_entries(T, Interval(1, j)).outer
        if len(shape) > j:
            raise ValueError("restriction has too many rows")
        rows.append(tuple(shape) + (0,) * (j - len(shape)))
    return GTPattern(rows=tuple(rows))


def from_pattern(P: GTPattern) -> Tableau:
    """The unique semistandard tableau with the prescribed restriction shapes."""
    n = P.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(i, n + 1):
            prev = P.entry(i, j - 1) if j > 1 else 0
            row.extend([j] * (P.entry(i, j) - prev))
        rows.append(tuple(row))
    T = Tableau(rows=tuple(rows))
    assert T.is_semistandard()
    return T


def _tau_bounds(P: GTPattern, i: int, k: int) -> tuple[int, int]:
    """The (a, b) = (min, max) pair at position (i, k), with edge rules."""
    a = P.entry(1, k + 1) if i == 1 else min(
        P.entry(i, k + 1), P.entry(i - 1, k - 1)
    )
    b = P.entry(k + 1, k + 1) if i == k else max(
        P.entry(i, k - 1), P.entry(i + 1, k + 1)
    )
    return a, b


def bk_tau(P: GTPattern, k: int) -> GTPattern:
    """The row-k reflection L(i,k) -> a + b - L(i,k); other rows fixed."""
    if not 1 <= k <= P.n - 1:
        raise ValueError(f"k must be in 1..{P.n - 1}")
    new_row = []
    for i in range(1, k + 1):
        a, b = _tau_bounds(P, i, k)
        new_row.append(a + b - P.entry(i, k))
    rows = list(P.rows)
    rows[k - 1] = tuple(new_row)
    return GTPattern(rows=tuple(rows))


def strip_location(P: GTPattern, i: int, k: int) -> Strip:
    """The strip in tableau row i at level k, read off the pattern."""
    if not 1 <= k <= P.n - 1:
        raise ValueError(f"k must be in 1..{P.n - 1}")
    if not 1 <= i <= k:
        raise ValueError(f"row index {i} out of range for level {k}")
    a, b = _tau_bounds(P, i, k)
    lam = P.entry(i, k)
    return Strip(row=i, start_col=b + 1, low=lam - b, high=a - lam, level=k)


def _free_boxes(T: Tableau, k: int) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """Free k-columns and free (k+1)-columns per 0-based row.

    A k-box is free unless a (k+1)-box sits directly below it; a
    (k+1)-box is free unless a k-box sits directly above it.
    """
    free_low: dict[int, list[int]] = {}
    free_high: dict[int, list[int]] = {}
    for r, c, e in T.cells():
        if e == k and T.entry(r + 1, c) != k + 1:
            free_low.setdefault(r, []).append(c)
        elif e == k + 1 and (r == 0 or T.entry(r - 1, c) != k):
            free_high.setdefault(r, []).append(c)
    return free_low, free_high


def strip_decomposition(
    T: Tableau, k: int
) -> tuple[tuple[Strip, ...], tuple[StripRectangle, ...]]:
    """Split the k/(k+1) sub-tableau into strips and rectangles.

    Strips are listed top to bottom (increasing row index); rows whose
    k/(k+1) boxes are entirely covered by rectangles contribute no strip.
    """
    if not T.is_straight or not T.is_semistandard():
        raise ValueError("strip decomposition requires a straight SSYT")
    free_low, free_high = _free_boxes(T, k)
    strips = []
    for r in sorted(set(free_low) | set(free_high)):
        lows = free_low.get(r, [])
        highs = free_high.get(r, [])
        cols = sorted(lows + highs)
        assert cols == list(range(cols[0], cols[0] + len(cols)))
        strips.append(
            Strip(
                row=r + 1,
                start_col=cols[0] + 1,
                low=len(lows),
                high=len(highs),
                level=k,
            )
        )
    rectangles = []
    for r, c, e in T.cells():
        if e == k and T.entry(r + 1, c) == k + 1:
            if T.entry(r + 1, c - 1) == k + 1 and T.entry(r, c - 1) == k:
                continue  # extend the rectangle found to the left
            width = 1
            while T.entry(r, c + width) == k and T.entry(r + 1, c + width) == k + 1:
                width += 1
            rectangles.append(
                StripRectangle(row=r + 1, start_col=c + 1, width=width, level=k)
            )
    return tuple(strips), tuple(rectangles)


def strip_swap(T: Tableau, k: int) -> Tableau:
    """Replace each strip of type (a, b) by one of type (b, a).

    This is the tableau form of the row operator: rectangles are left
    alone, so the result is again semistandard of the same shape.
    """
    if not T.is_straight or not T.is_semistandard():
        raise ValueError("strip swap requires a straight SSYT")
    free_low, free_high = _free_boxes(T, k)
    grid = {(r, c): e for r, c, e in T.cells()}
    for r in set(free_low) | set(free_high):
        lows = free_low.get(r, [])
        highs = free_high.get(r, [])
        cols = sorted(lows + highs)
        for idx, c in enumerate(cols):
            grid[(r, c)] = k if idx < len(highs) else k + 1
    rows = tuple(
        tuple(grid[(r, c)] for c in range(len(row)))
        for r, row in enumerate(T.rows)
    )
    out = Tableau(rows=rows)
    assert out.is_semistandard() and out.outer == T.outer
    return out


__all__ = [
    "GTPattern",
    "Strip",
    "StripRectangle",
    "to_pattern",
    "from_pattern",
    "bk_tau",
    "strip_location",
    "strip_decomposition",
    "strip_swap",
]
