"""Jeu de taquin, promotion and the (partial) Schutzenberger involutions.

All operations are pure functions on immutable tableaux.  The slide
comparison rule: a hole with east entry i and south entry j swaps east
when i < j and south otherwise, so equal entries go south; this is what
keeps columns strict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .shapes import Interval
from .tableaux import Tableau

Cell = tuple[int, int]
ChoicePolicy = Callable[[list[Cell]], Cell]


@dataclass(frozen=True)
class SlideTrace:
    """Record of one full rectification: boxes chosen and hole moves."""

    chosen: tuple[Cell, ...]
    steps: tuple[tuple[Cell, Cell], ...]


def _southeast_most(boxes: list[Cell]) -> Cell:
    return max(boxes, key=lambda rc: (rc[0] + rc[1], rc[0]))


def _to_grid(T: Tableau) -> dict[Cell, int]:
    return {(r, c): e for r, c, e in T.cells()}


def _grid_to_tableau(grid: dict[Cell, int], inner: list[int]) -> Tableau:
    nrows = max((r for r, _ in grid), default=-1) + 1
    rows = []
    for r in range(nrows):
        cols = sorted(c for (rr, c) in grid if rr == r)
        off = inner[r] if r < len(inner) else 0
        assert cols == list(range(off, off + len(cols)))
        rows.append(tuple(grid[(r, c)] for c in cols))
    return Tableau(rows=tuple(rows), inner=tuple(inner[:nrows]))


def _movable_boxes(inner: list[int]) -> list[Cell]:
    """Removable corners of the inner shape, as 0-based cells."""
    boxes = []
    for r, p in enumerate(inner):
        if p > 0 and (r + 1 >= len(inner) or inner[r + 1] < p):
            boxes.append((r, p - 1))
    return boxes


def _slide_hole(
    grid: dict[Cell, int], start: Cell, steps: Optional[list] = None
) -> Cell:
    """Slide one hole from ``start`` until no east/south neighbour remains."""
    r, c = start
    while True:
        east = grid.get((r, c + 1))
        south = grid.get((r + 1, c))
        if east is None and south is None:
            return (r, c)
        if south is None or (east is not None and east < south):
            target = (r, c + 1)
        else:
            target = (r + 1, c)
        grid[(r, c)] = grid.pop(target)
        if steps is not None:
            steps.append(((r, c), target))
        r, c = target


def jdt_rectify_traced(
    T: Tableau, choice_policy: Optional[ChoicePolicy] = None
) -> tuple[Tableau, SlideTrace]:
    """Rectify a semistandard skew tableau, returning the slide trace."""
    if not T.is_semistandard():
        raise ValueError("jdt requires a semistandard tableau")
    policy = choice_policy or _southeast_most
    grid = _to_grid(T)
    inner = list(T.inner)
    chosen: list[Cell] = []
    steps: list[tuple[Cell, Cell]] = []
    while any(inner):
        boxes = _movable_boxes(inner)
        box = policy(sorted(boxes))
        if box not in boxes:
            raise ValueError(f"choice policy returned non-movable box {box}")
        chosen.append(box)
        inner[box[0]] -= 1
        _slide_hole(grid, box, steps)
    while inner and inner[-1] == 0:
        inner.pop()
    out = _grid_to_tableau(grid, inner)
    assert out.is_straight and out.is_semistandard()
    return out, SlideTrace(chosen=tuple(chosen), steps=tuple(steps))


def jdt_rectify(T: Tableau, choice_policy: Optional[ChoicePolicy] = None) -> Tableau:
    """Rectify a semistandard skew tableau to a straight one."""
    return jdt_rectify_traced(T, choice_policy)[0]


def jdt_all_rectifications(T: Tableau) -> set[Tableau]:
    """Rectify along every distinct order of movable-box choices.

    Confluence predicts a singleton result set; this is the lever used to
    test that claim.
    """
    if not T.is_semistandard():
        raise ValueError("jdt requires a semistandard tableau")
    seen: dict[tuple, set[Tableau]] = {}

    def key(grid: dict[Cell, int], inner: tuple[int, ...]) -> tuple:
        return (inner, tuple(sorted(grid.items())))

    def explore(grid: dict[Cell, int], inner: list[int]) -> set[Tableau]:
        k = key(grid, tuple(inner))
        if k in seen:
            return seen[k]
        if not any(inner):
            trimmed = [p for p in inner if p]
            out = {_grid_to_tableau(grid, trimmed)}
        else:
            out = set()
            for box in _movable_boxes(inner):
                g2 = dict(grid)
                i2 = list(inner)
                i2[box[0]] -= 1
                _slide_hole(g2, box)
                out |= explore(g2, i2)
        seen[k] = out
        return out

    return explore(_to_grid(T), list(T.inner))


def promotion(T: Tableau, m: int) -> Tableau:
    """One promotion step on a straight semistandard tableau.

    Boxes labelled 1 become holes, the holes slide out by jdt, surviving
    labels drop by one, and the vacated outer cells are relabelled m.
    """
    if not T.is_straight:
        raise ValueError("promotion requires a straight shape")
    if not T.is_semistandard():
        raise ValueError("promotion requires a semistandard tableau")
    if T.max_entry > m:
        raise ValueError(f"entries exceed alphabet {m}")
    lam = T.outer
    ones = sum(1 for e in T.reading_word() if e == 1)
    if ones:
        # In a straight SSYT all 1s form a prefix of the first row.
        assert T.rows and all(e == 1 for e in T.rows[0][:ones])
        skew = Tableau(
            rows=(T.rows[0][ones:],) + T.rows[1:], inner=(ones,)
        )
    else:
        skew = T
    rect = jdt_rectify(skew)
    sigma = rect.outer
    new_rows = []
    for r in range(len(lam)):
        kept = rect.rows[r] if r < len(rect.rows) else ()
        new_rows.append(
            tuple(e - 1 for e in kept) + (m,) * (lam[r] - len(kept))
        )
    out = Tableau(rows=tuple(new_rows))
    assert out.outer == lam and out.is_semistandard()
    assert sigma.size + ones == lam.size
    return out


def bounded_promotion(T: Tableau, k: int) -> Tableau:
    """Promotion applied to the sub-tableau of entries <= k, in place.

    Entries greater than k are untouched.  A k beyond the largest entry
    present is still well defined: the window is the whole tableau.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not T.is_straight:
        raise ValueError("bounded promotion requires a straight shape")
    if not T.is_semistandard():
        raise ValueError("bounded promotion requires a semistandard tableau")
    prefixes = tuple(
        tuple(e for e in row if e <= k) for row in T.rows
    )
    sub = Tableau(rows=prefixes)
    sub = promotion(sub, k)
    new_rows = []
    for r, row in enumerate(T.rows):
        head = sub.rows[r] if r < len(sub.rows) else ()
        tail = row[len(prefixes[r]):]
        assert len(head) == len(prefixes[r])
        new_rows.append(head + tail)
    out = Tableau(rows=tuple(new_rows))
    assert out.is_semistandard()
    return out


def evacuation(T: Tableau, m: Optional[int] = None) -> Tableau:
    """The Schutzenberger involution on alphabet 1..m.

    Computed as the chain of bounded promotions with the largest window
    applied first; m defaults to the largest entry present.
    """
    if m is None:
        m = T.max_entry
    if T.max_entry > m:
        raise ValueError(f"entries exceed alphabet {m}")
    for k in range(m, 0, -1):
        T = bounded_promotion(T, k)
    return T


def partial_evacuation(T: Tableau, k: int) -> Tableau:
    """Schutzenberger involution on the entries 1..k, in place."""
    if k < 2:
        raise ValueError("partial evacuation needs k >= 2")
    for j in range(k, 0, -1):
        T = bounded_promotion(T, j)
    return T


def interval_evacuation(T: Tableau, J: Interval) -> Tableau:
    """The interval involution: xi[1,b] then xi[1,b-a+1] then xi[1,b]."""
    a, b = Interval(*J)
    if not 1 <= a < b:
        raise ValueError(f"invalid interval [{a},{b}]")
    T = partial_evacuation(T, b)
    T = partial_evacuation(T, b - a + 1)
    T = partial_evacuation(T, b)
    return T


__all__ = [
    "SlideTrace",
    "jdt_rectify",
    "jdt_rectify_traced",
    "jdt_all_rectifications",
    "promotion",
    "bounded_promotion",
    "evacuation",
    "partial_evacuation",
    "interval_evacuation",
]
