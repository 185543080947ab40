"""F-blocks of Baxter permutations, improper pairs, contraction/expansion.

An F-block of rho is a block (interval of positions whose values form an
interval) whose inner pattern tau stays within one step of the diagonal
(ascending, |tau(i)-i| <= 1) or of the anti-diagonal (descending).  Maximal
F-blocks partition the positions; the multiset of their value intervals and
direction tags is the F-structure, which determines and is determined by
the induced S-permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import NotBaxter, Permutation, PermutationError, is_baxter


class MarkNotImproper(PermutationError):
    pass


ASCENDING = "+"
DESCENDING = "-"
TINY = "."  # direction undefined for blocks of size <= 2


@dataclass(frozen=True)
class FBlock:
    """Maximal F-block: positions x..x2, values y..y2, direction tag."""

    x: int
    x2: int
    y: int
    y2: int
    direction: str

    @property
    def size(self) -> int:
        return self.x2 - self.x + 1


def _is_ascending(window: tuple[int, ...], ymin: int) -> bool:
    return all(abs((v - ymin + 1) - (t + 1)) <= 1 for t, v in enumerate(window))


def _is_descending(window: tuple[int, ...], ymin: int) -> bool:
    m = len(window)
    return all(abs((v - ymin + 1) - (m - t)) <= 1 for t, v in enumerate(window))


def maximal_f_blocks(rho: Permutation) -> list[FBlock]:
    """The unique partition into maximal F-blocks, by greedy longest
    extension from the left.  The block property is not monotone in the
    window length, so every candidate end is probed."""
    if not is_baxter(rho):
        raise NotBaxter(f"{rho} contains 2-41-3 or 3-14-2")
    v = rho.values
    n = len(v)
    blocks = []
    x = 1
    while x <= n:
        best = x
        lo = hi = v[x - 1]
        best_dir = TINY
        for e in range(x, n + 1):
            lo = min(lo, v[e - 1])
            hi = max(hi, v[e - 1])
            if hi - lo != e - x:
                continue
            window = v[x - 1:e]
            asc = _is_ascending(window, lo)
            desc = _is_descending(window, lo)
            if asc or desc:
                best = e
                best_dir = TINY if e - x + 1 <= 2 else (ASCENDING if asc else DESCENDING)
        window = v[x - 1:best]
        blocks.append(FBlock(x, best, min(window), max(window), best_dir))
        x = best + 1
    return blocks


def f_structure(rho: Permutation) -> tuple[tuple[int, int, str], ...]:
    """Value intervals plus direction tags of the maximal blocks, in
    position order.  Tiny blocks compare equal regardless of their inner
    ascent or descent."""
    return tuple((b.y, b.y2, b.direction) for b in maximal_f_blocks(rho))


def f_structure_text(rho: Permutation) -> str:
    """Rendering like ``([7,9],+), ([1],.), ([2,5],+)``."""
    parts = []
    for y, y2, d in f_structure(rho):
        interval = f"[{y}]" if y == y2 else f"[{y},{y2}]"
        parts.append(f"({interval},{d})")
    return ", ".join(parts)


def inside_f_block_points(rho: Permutation) -> set[tuple[int, int]]:
    """Points (i, sigma(i)) of the induced S-permutation lying strictly
    inside a maximal block: x <= i < x' and y <= sigma(i) < y'.  These are
    exactly the weak points of sigma."""
    from .floorplan import s_from_r

    sigma = s_from_r(rho)
    out = set()
    for b in maximal_f_blocks(rho):
        for i in range(b.x, b.x2):
            j = sigma(i)
            if b.y <= j < b.y2:
                out.add((i, j))
    return out


def improper_pairs(rho: Permutation) -> list[tuple[int, int]]:
    """Adjacent-position pairs forming a descent in a maximal ascending
    block (a lone descent pair counts: a size-2 descent block IS its own
    improper pair) or an ascent in a maximal descending block of size >= 3."""
    v = rho.values
    out = []
    for b in maximal_f_blocks(rho):
        if b.size < 2:
            continue
        treat_as_descending = b.direction == DESCENDING
        if b.size == 2 and v[b.x - 1] < v[b.x]:
            continue  # a lone ascent pair is proper either way
        for i in range(b.x, b.x2):
            if treat_as_descending:
                if v[i - 1] < v[i]:
                    out.append((i, i + 1))
            else:
                if v[i - 1] > v[i]:
                    out.append((i, i + 1))
    return out


@dataclass(frozen=True)
class MarkedPermutation:
    """A permutation with a set of marked positions.  For contraction the
    marks must each open an improper pair; after contraction they mark the
    merged points."""

    perm: Permutation
    marks: frozenset[int]

    def __init__(self, perm: Permutation, marks=()):
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "marks", frozenset(marks))
        for m in self.marks:
            if not 1 <= m <= len(perm):
                raise PermutationError(f"mark {m} outside 1..{len(perm)}")


def _normalize(vals: list[int]) -> Permutation:
    rank = {v: r + 1 for r, v in enumerate(sorted(vals))}
    return Permutation(rank[v] for v in vals)


def contract(mp: MarkedPermutation) -> MarkedPermutation:
    """Merge each marked improper pair into one marked point."""
    pairs = improper_pairs(mp.perm)
    openers = {a for a, _ in pairs}
    for m in mp.marks:
        if m not in openers:
            raise MarkNotImproper(f"position {m} does not open an improper pair")
    v = list(mp.perm.values)
    keep = [i for i in range(1, len(v) + 1) if i - 1 not in mp.marks]
    new_marks = []
    new_vals = []
    for i in keep:
        if i in mp.marks:
            new_marks.append(len(new_vals) + 1)
        new_vals.append(v[i - 1])
    return MarkedPermutation(_normalize(new_vals), new_marks)


def _pair_ascends(rho: Permutation, m: int) -> bool:
    """Direction of the improper pair replacing point m.  On the diagonal
    of an ascending maximal block the pair descends, on the anti-diagonal
    of a descending block (size >= 2) it ascends, and off the (anti-)
    diagonal of a block of size >= 3 it follows the block direction."""
    b = next(b for b in maximal_f_blocks(rho) if b.x <= m <= b.x2)
    t = m - b.x + 1              # 1-based inside the block
    val = rho(m) - b.y + 1
    if b.direction in (ASCENDING, TINY) and val == t:
        return False
    if b.direction in (DESCENDING, TINY) and b.size >= 2 and val == b.size + 1 - t:
        return True
    if b.direction == ASCENDING:
        return True
    if b.direction == DESCENDING:
        return False
    raise AssertionError(f"unclassifiable mark {m} in block {b}")


def _build_expansion(rho: Permutation, marks: list[int],
                     ascends: tuple[bool, ...]) -> MarkedPermutation:
    """Replace each marked point by a value-adjacent pair with the given
    orientation, shifting the other values up."""
    v = rho.values
    marked_vals = sorted(v[m - 1] for m in marks)
    grows = dict(zip(marks, ascends))
    out: list[int] = []
    new_marks: list[int] = []
    for i, val in enumerate(v, start=1):
        lifted = val + sum(1 for w in marked_vals if w < val)
        if i in grows:
            new_marks.append(len(out) + 1)
            out.extend((lifted, lifted + 1) if grows[i] else (lifted + 1, lifted))
        else:
            out.append(lifted)
    return MarkedPermutation(Permutation(out), new_marks)


def expand(mp: MarkedPermutation) -> MarkedPermutation:
    """Inverse of contraction: each marked point becomes an improper pair of
    the result.  The three-case rule fixes each pair's direction in
    isolation; when several contracted pairs ended up in one block the cases
    interact, so the (unique) globally valid assignment is searched for,
    seeded with the three-case guess."""
    rho = mp.perm
    if not is_baxter(rho):
        raise NotBaxter(f"{rho} contains 2-41-3 or 3-14-2")
    marks = sorted(mp.marks)
    if not marks:
        return mp
    guess = tuple(_pair_ascends(rho, m) for m in marks)

    def valid(cand: MarkedPermutation) -> bool:
        if not is_baxter(cand.perm):
            return False
        openers = {a for a, _ in improper_pairs(cand.perm)}
        return all(m in openers for m in cand.marks)

    first = _build_expansion(rho, marks, guess)
    if valid(first):
        return first
    for bits in range(1 << len(marks)):
        cand = _build_expansion(
            rho, marks, tuple(bool(bits >> i & 1) for i in range(len(marks))))
        if valid(cand):
            return cand
    raise AssertionError(f"no valid expansion of {mp}")
