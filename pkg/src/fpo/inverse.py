"""Building floorplans back from permutations.

``s_inverse`` realizes an S-permutation as a floorplan on the
(n+1) x (n+1) grid: the segment through graph point (i, sigma(i)) gets its
direction from the strong-point rules (weak runs leave a choice, fixed by a
policy) and its endpoints from the unique bounding neighbors.

``r_inverse`` realizes a Baxter permutation: the weak directions are read
off the maximal F-blocks of rho, and the result is verified to reproduce
rho exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .floorplan import HORIZONTAL, VERTICAL, Floorplan, Segment, r_permutation, s_from_r
from .fstructure import ASCENDING, DESCENDING, maximal_f_blocks
from .perm import (
    Direction,
    NotAnSPermutation,
    NotBaxter,
    Permutation,
    PermutationError,
    PointClass,
    _classify_unchecked,
    is_baxter,
    is_s_perm,
    point_neighbors,
)


class InvalidPolicy(PermutationError):
    pass


class InternalMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class NeighborSummary:
    """Per-direction neighbor data for one graph point: how many neighbors
    (0, 1 or 2-for-several) and the nearest one."""

    count: int
    nearest: int | None


def neighbor_summary(p: Permutation) -> dict[Direction, list[NeighborSummary]]:
    """Exhaustive O(n^2) per point; index i-1 holds the summary for N_i."""
    out = {}
    for d in Direction:
        row = []
        for i in range(1, len(p) + 1):
            nb = point_neighbors(p, i, d)
            if not nb:
                row.append(NeighborSummary(0, None))
            else:
                nearest = min(nb, key=lambda j: abs(j - i))
                row.append(NeighborSummary(min(len(nb), 2), nearest))
        out[d] = row
    return out


def _stack_scan(vals: tuple[int, ...], greater: bool) -> list[int | None]:
    """prev-greater (or prev-smaller) position for each index, 1-based."""
    out: list[int | None] = []
    stack: list[int] = []  # positions with decreasing (increasing) values
    for i, v in enumerate(vals, start=1):
        while stack and ((vals[stack[-1] - 1] < v) if greater else (vals[stack[-1] - 1] > v)):
            stack.pop()
        out.append(stack[-1] if stack else None)
        stack.append(i)
    return out


def neighbor_summary_fast(p: Permutation) -> dict[Direction, list[NeighborSummary]]:
    """Linear-time version via monotone stacks on sigma and its inverse.

    In every direction the neighbor nearest in position is a previous/next
    greater/smaller element of sigma, and the neighbor nearest in value is
    the same kind of element of sigma^-1; the point has several neighbors
    exactly when the two differ."""
    n = len(p)
    v = p.values
    inv = p.inverse().values
    rev = tuple(reversed(v))
    rev_inv = tuple(reversed(inv))

    def flip(scan: list[int | None]) -> list[int | None]:
        return [None if x is None else n + 1 - x for x in reversed(scan)]

    pge = _stack_scan(v, greater=True)            # nearest NW by position
    pse = _stack_scan(v, greater=False)           # nearest SW by position
    nge = flip(_stack_scan(rev, greater=True))    # nearest NE by position
    nse = flip(_stack_scan(rev, greater=False))   # nearest SE by position
    # the same scans on the inverse give, per value, the extreme neighbor
    pge_i = _stack_scan(inv, greater=True)
    pse_i = _stack_scan(inv, greater=False)
    nge_i = flip(_stack_scan(rev_inv, greater=True))
    nse_i = flip(_stack_scan(rev_inv, greater=False))

    def build(near: list[int | None], far_by_value: list[int | None],
              from_value: bool) -> list[NeighborSummary]:
        row = []
        for i in range(1, n + 1):
            nr = near[i - 1]
            if nr is None:
                row.append(NeighborSummary(0, None))
                continue
            q = far_by_value[v[i - 1] - 1]
            far = inv[q - 1] if from_value else q
            row.append(NeighborSummary(1 if far == nr else 2, nr))
        return row

    return {
        # farthest NW neighbor: smallest value above sigma(i) on the left =
        # next smaller element of the inverse at position sigma(i)
        Direction.NW: build(pge, nse_i, from_value=True),
        Direction.NE: build(nge, nge_i, from_value=True),
        Direction.SW: build(pse, pse_i, from_value=True),
        Direction.SE: build(nse, pge_i, from_value=True),
    }


# ---------------------------------------------------------------------------
# Weak runs and direction policies


RUN_ASCENDING = "ascending"
RUN_DESCENDING = "descending"
RUN_ISOLATED = "isolated"


def weak_runs(sigma: Permutation) -> list[tuple[int, int, str]]:
    """Maximal runs (start, end, kind) of weak points at adjacent positions
    and adjacent values."""
    if not is_s_perm(sigma):
        raise NotAnSPermutation(f"{sigma} contains 2-14-3 or 3-41-2")
    weak = [i for i in range(1, len(sigma) + 1)
            if _classify_unchecked(sigma, i) is PointClass.WEAK]
    runs = []
    k = 0
    while k < len(weak):
        start = weak[k]
        end = start
        step = 0
        while (k + 1 < len(weak) and weak[k + 1] == end + 1
               and abs(sigma(end + 1) - sigma(end)) == 1
               and (step == 0 or sigma(end + 1) - sigma(end) == step)):
            step = sigma(end + 1) - sigma(end)
            end += 1
            k += 1
        kind = RUN_ISOLATED if end == start else (
            RUN_ASCENDING if step == 1 else RUN_DESCENDING)
        runs.append((start, end, kind))
        k += 1
    return runs


@dataclass(frozen=True)
class DirectionPolicy:
    """Directions for the weak points of an S-permutation.  ``Canonical``
    uses Vertical on ascending runs and isolated points, Horizontal on
    descending runs.  ``Explicit`` lists a direction per weak position."""

    explicit: dict[int, str] | None = None

    @staticmethod
    def canonical() -> "DirectionPolicy":
        return DirectionPolicy(None)

    @staticmethod
    def explicit_for(directions: dict[int, str]) -> "DirectionPolicy":
        return DirectionPolicy(dict(directions))

    def directions_for(self, sigma: Permutation) -> dict[int, str]:
        runs = weak_runs(sigma)
        if self.explicit is None:
            out = {}
            for start, end, kind in runs:
                fill = HORIZONTAL if kind == RUN_DESCENDING else VERTICAL
                for i in range(start, end + 1):
                    out[i] = fill
            return out
        weak_positions = {i for start, end, _ in runs for i in range(start, end + 1)}
        if set(self.explicit) != weak_positions:
            raise InvalidPolicy(
                f"policy covers {sorted(self.explicit)}, weak points are "
                f"{sorted(weak_positions)}")
        for d in self.explicit.values():
            if d not in (HORIZONTAL, VERTICAL):
                raise InvalidPolicy(f"bad direction {d!r}")
        for start, end, kind in runs:
            for i in range(start, end):
                pair = (self.explicit[i], self.explicit[i + 1])
                if kind == RUN_ASCENDING and pair == (HORIZONTAL, HORIZONTAL):
                    raise InvalidPolicy(
                        f"two adjacent horizontals at {i},{i + 1} in an ascending run")
                if kind == RUN_DESCENDING and pair == (VERTICAL, VERTICAL):
                    raise InvalidPolicy(
                        f"two adjacent verticals at {i},{i + 1} in a descending run")
        return dict(self.explicit)


CANONICAL = DirectionPolicy.canonical()


# ---------------------------------------------------------------------------
# The inverse constructions


def _unique(nb: set[int]) -> int | None:
    if len(nb) > 1:
        raise AssertionError("expected at most one bounding neighbor")
    return next(iter(nb)) if nb else None


def s_inverse(sigma: Permutation, policy: DirectionPolicy = CANONICAL) -> Floorplan:
    """A floorplan whose S-permutation is sigma, drawn on the
    (n+1) x (n+1) grid with segment i passing through (i, sigma(i))."""
    if not is_s_perm(sigma):
        raise NotAnSPermutation(f"{sigma} contains 2-14-3 or 3-41-2")
    n = len(sigma)
    chosen = policy.directions_for(sigma)
    segments = []
    for i in range(1, n + 1):
        cls = _classify_unchecked(sigma, i)
        if cls is PointClass.STRONG_HORIZONTAL:
            direction = HORIZONTAL
        elif cls is PointClass.STRONG_VERTICAL:
            direction = VERTICAL
        else:
            direction = chosen[i]
        if direction == VERTICAL:
            up = _unique(point_neighbors(sigma, i, Direction.NW))
            down = _unique(point_neighbors(sigma, i, Direction.SE))
            lo = sigma(down) if down is not None else 0
            hi = sigma(up) if up is not None else n + 1
            segments.append(Segment(VERTICAL, i, lo, hi))
        else:
            left = _unique(point_neighbors(sigma, i, Direction.SW))
            right = _unique(point_neighbors(sigma, i, Direction.NE))
            lo = left if left is not None else 0
            hi = right if right is not None else n + 1
            segments.append(Segment(HORIZONTAL, sigma(i), lo, hi))
    return Floorplan(n + 1, n + 1, segments)


def _block_directions(rho: Permutation) -> dict[int, str]:
    """Weak-point directions encoding rho's F-block interiors.  Scanning a
    block's parts (anti-/diagonal singletons and transposed pairs) from the
    NW-order side, a pair's inner segment splits one brick of the block and
    a segment between parts separates consecutive bricks."""
    out = {}
    for b in maximal_f_blocks(rho):
        if b.size < 2:
            continue
        window = rho.values[b.x - 1:b.x2]
        asc = all(abs((v - b.y + 1) - (t + 1)) <= 1 for t, v in enumerate(window))
        inner, sep = (HORIZONTAL, VERTICAL) if asc else (VERTICAL, HORIZONTAL)
        dirs = []
        t = 0
        parts = []
        while t < b.size:
            local = window[t] - b.y + 1
            target = t + 1 if asc else b.size - t
            if local == target:
                parts.append(1)
                t += 1
            else:
                parts.append(2)
                t += 2
        for k, width in enumerate(parts):
            if width == 2:
                dirs.append(inner)
            if k + 1 < len(parts):
                dirs.append(sep)
        for offset, d in enumerate(dirs):
            out[b.x + offset] = d
    return out


def r_inverse(rho: Permutation) -> Floorplan:
    """A floorplan whose R-permutation is rho; the result is re-checked and
    a failure raises InternalMismatch (an implementation bug, not bad
    input)."""
    if not is_baxter(rho):
        raise NotBaxter(f"{rho} contains 2-41-3 or 3-14-2")
    sigma = s_from_r(rho)
    policy = DirectionPolicy.explicit_for(_block_directions(rho))
    fp = s_inverse(sigma, policy)
    got = r_permutation(fp)
    if got != rho:
        raise InternalMismatch(f"rebuilt floorplan has R = {got}, wanted {rho}")
    return fp
