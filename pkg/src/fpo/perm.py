"""Permutations in one-line notation, pattern matching, and point geometry.

A permutation of size n is stored as the tuple (sigma(1), ..., sigma(n)) of
values 1..n.  Its *graph* is the point set {(i, sigma(i))}; most of the
geometry in this package (neighbor relations, symmetries, strong/weak
points) lives on that graph.

Patterns come in three flavors: classical, vincular (dash notation: some
adjacent pattern letters must sit at adjacent host positions) and barred
(every occurrence of the unbarred letters must extend to an occurrence of
the full pattern).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class PermutationError(ValueError):
    pass


class DuplicateValue(PermutationError):
    pass


class OutOfRange(PermutationError):
    pass


class PositionOutOfRange(PermutationError):
    pass


class NotAnSPermutation(PermutationError):
    pass


class NotBaxter(PermutationError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.  Empty is allowed."""

    values: tuple[int, ...]

    def __init__(self, values=()):
        object.__setattr__(self, "values", tuple(values))
        n = len(self.values)
        if len(set(self.values)) != n:
            raise DuplicateValue(f"repeated value in {self.values}")
        for v in self.values:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise OutOfRange(f"value {v!r} outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __call__(self, i: int) -> int:
        """sigma(i), 1-based."""
        if not 1 <= i <= len(self.values):
            raise PositionOutOfRange(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def position(self, v: int) -> int:
        """sigma^-1(v), 1-based."""
        if not 1 <= v <= len(self.values):
            raise OutOfRange(f"value {v} outside 1..{len(self.values)}")
        return self.values.index(v) + 1

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values):
            inv[v - 1] = i + 1
        return Permutation(inv)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def parse(text: str) -> "Permutation":
        """Whitespace-separated one-line notation; an empty line is the empty
        permutation."""
        return Permutation(int(tok) for tok in text.split())

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({list(self.values)})"


def permutations_of(n: int) -> Iterator[Permutation]:
    """All permutations of size n in lexicographic order."""
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


# ---------------------------------------------------------------------------
# Patterns


class PatternKind(Enum):
    CLASSICAL = "classical"
    VINCULAR = "vincular"
    BARRED = "barred"


@dataclass(frozen=True)
class PatternSpec:
    """A pattern of size k.

    ``adjacent`` holds 1-based pattern positions j meaning letters j and j+1
    must occupy adjacent host positions.  ``barred`` holds 1-based positions
    of barred letters.  The two features are mutually exclusive.
    """

    letters: tuple[int, ...]
    adjacent: frozenset[int] = frozenset()
    barred: frozenset[int] = frozenset()

    def __post_init__(self):
        Permutation(self.letters)  # validates letters as a permutation of 1..k
        k = len(self.letters)
        for j in self.adjacent:
            if not 1 <= j <= k - 1:
                raise OutOfRange(f"adjacency position {j} outside 1..{k - 1}")
        for b in self.barred:
            if not 1 <= b <= k:
                raise OutOfRange(f"barred position {b} outside 1..{k}")
        if self.adjacent and self.barred:
            raise PermutationError("a pattern cannot mix dashes and bars")

    @property
    def kind(self) -> PatternKind:
        if self.barred:
            return PatternKind.BARRED
        if self.adjacent:
            return PatternKind.VINCULAR
        return PatternKind.CLASSICAL

    @staticmethod
    def parse(text: str) -> "PatternSpec":
        """Parse e.g. "2-14-3" (dash notation) or "213!54" ('!' bars the
        preceding letter).  Without dashes or bars all letters are adjacent,
        so classical patterns are written fully dashed: "2-4-1-3"."""
        letters: list[int] = []
        barred: set[int] = set()
        groups: list[list[int]] = [[]]  # letters between dashes stay adjacent
        for ch in text:
            if ch == "-":
                if not groups[-1]:
                    raise PermutationError(f"empty dash group in {text!r}")
                groups.append([])
            elif ch == "!":
                if not letters:
                    raise PermutationError(f"leading '!' in {text!r}")
                barred.add(len(letters))
            elif ch.isdigit() and ch != "0":
                letters.append(int(ch))
                groups[-1].append(len(letters))
            else:
                raise PermutationError(f"bad character {ch!r} in pattern {text!r}")
        # within a dash group, consecutive letters are glued; bar notation is
        # classical, so bars suppress adjacency
        adjacent = set() if barred else {pos for g in groups for pos in g[:-1]}
        return PatternSpec(tuple(letters), frozenset(adjacent), frozenset(barred))

    def __str__(self) -> str:
        if self.barred:
            return "".join(
                str(v) + ("!" if i + 1 in self.barred else "")
                for i, v in enumerate(self.letters)
            )
        out = []
        for i, v in enumerate(self.letters):
            out.append(str(v))
            if i + 1 < len(self.letters) and i + 1 not in self.adjacent:
                out.append("-")
        return "".join(out)


# The pattern pairs used throughout: Baxter permutations avoid the first
# pair, S-permutations the second (equivalently the barred pair), separable
# permutations the classical pair.
PAT_2_41_3 = PatternSpec.parse("2-41-3")
PAT_3_14_2 = PatternSpec.parse("3-14-2")
PAT_2_14_3 = PatternSpec.parse("2-14-3")
PAT_3_41_2 = PatternSpec.parse("3-41-2")
PAT_21B354 = PatternSpec.parse("213!54")
PAT_45B312 = PatternSpec.parse("453!12")
PAT_2_4_1_3 = PatternSpec.parse("2-4-1-3")
PAT_3_1_4_2 = PatternSpec.parse("3-1-4-2")

BAXTER_PATTERNS = (PAT_2_41_3, PAT_3_14_2)
S_PATTERNS = (PAT_2_14_3, PAT_3_41_2)
S_BARRED_PATTERNS = (PAT_21B354, PAT_45B312)
SEPARABLE_PATTERNS = (PAT_2_4_1_3, PAT_3_1_4_2)


def _occurrence(vals: tuple[int, ...], letters: tuple[int, ...],
                adjacent: frozenset[int]) -> tuple[int, ...] | None:
    """First occurrence (0-based host positions) of a classical/vincular
    pattern, or None.  Exhaustive backtracking over position tuples."""
    n, k = len(vals), len(letters)
    if k > n:
        return None
    chosen: list[int] = []

    def consistent(pos: int) -> bool:
        v = vals[pos]
        t = len(chosen)
        for s, p in enumerate(chosen):
            if (letters[s] < letters[t]) != (vals[p] < v):
                return False
        return True

    def extend() -> bool:
        t = len(chosen)
        if t == k:
            return True
        if t and t in adjacent:  # pattern positions t, t+1 (1-based) glued
            cands = [chosen[-1] + 1] if chosen[-1] + 1 < n else []
        else:
            lo = chosen[-1] + 1 if chosen else 0
            cands = range(lo, n - (k - t - 1))  # leave room for later slots
        for pos in cands:
            if consistent(pos):
                chosen.append(pos)
                if extend():
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend() else None


def _iter_classical_occurrences(vals, letters) -> Iterator[tuple[int, ...]]:
    n, k = len(vals), len(letters)
    for positions in itertools.combinations(range(n), k):
        ok = True
        for a in range(k):
            for b in range(a + 1, k):
                if (letters[a] < letters[b]) != (vals[positions[a]] < vals[positions[b]]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield positions


def _barred_match(vals: tuple[int, ...], spec: PatternSpec) -> bool:
    """True iff some occurrence of the unbarred part does NOT extend to the
    full pattern (i.e. the host fails to avoid the barred pattern)."""
    k = len(spec.letters)
    unbarred = [t for t in range(k) if t + 1 not in spec.barred]
    sub = [spec.letters[t] for t in unbarred]
    rank = {v: r + 1 for r, v in enumerate(sorted(sub))}
    sub_norm = tuple(rank[v] for v in sub)
    n = len(vals)

    def extends(occ: tuple[int, ...]) -> bool:
        # Try to place barred letters so the whole pattern occurs with the
        # unbarred letters exactly at ``occ``.
        slot_pos: dict[int, int] = dict(zip(unbarred, occ))

        def place(bars: list[int]) -> bool:
            if not bars:
                return True
            t = bars[0]
            left = max((slot_pos[s] for s in slot_pos if s < t), default=-1)
            right = min((slot_pos[s] for s in slot_pos if s > t), default=n)
            for pos in range(left + 1, right):
                v = vals[pos]
                if all((spec.letters[s] < spec.letters[t]) == (vals[p] < v)
                       for s, p in slot_pos.items()):
                    slot_pos[t] = pos
                    if place(bars[1:]):
                        return True
                    del slot_pos[t]
            return False

        return place([t for t in range(k) if t + 1 in spec.barred])

    for occ in _iter_classical_occurrences(vals, sub_norm):
        if not extends(occ):
            return True
    return False


def matches(p: Permutation, spec: PatternSpec) -> bool:
    """True iff p contains an occurrence of the pattern (False when the
    pattern is larger than p; for barred patterns the unbarred part sets
    the size that has to fit)."""
    if spec.kind is PatternKind.BARRED:
        if len(spec.letters) - len(spec.barred) > len(p):
            return False
        return _barred_match(p.values, spec)
    if len(spec.letters) > len(p):
        return False
    return _occurrence(p.values, spec.letters, spec.adjacent) is not None


# ---------------------------------------------------------------------------
# Permutation classes


def is_baxter(p: Permutation) -> bool:
    """Avoids the vincular pair 2-41-3 and 3-14-2."""
    return not matches(p, PAT_2_41_3) and not matches(p, PAT_3_14_2)


def is_s_perm(p: Permutation) -> bool:
    """Avoids the vincular pair 2-14-3 and 3-41-2."""
    return not matches(p, PAT_2_14_3) and not matches(p, PAT_3_41_2)


def is_s_perm_barred(p: Permutation) -> bool:
    """Equivalent characterization through the barred pair 21!354, 45!312."""
    return not matches(p, PAT_21B354) and not matches(p, PAT_45B312)


def is_s_perm_adjacent_rule(p: Permutation) -> bool:
    """Equivalent characterization demanding the extra value-adjacency:
    no i < j < j+1 < m with sigma(j) < sigma(i) < sigma(m) < sigma(j+1) and
    sigma(m) = sigma(i)+1, nor the 180-degree mirror of that."""
    v = p.values
    n = len(v)
    for j in range(1, n - 2):  # 0-based; l = j+1
        lo, hi = v[j], v[j + 1]
        for i in range(j):
            for m in range(j + 2, n):
                if lo < v[i] < v[m] < hi and v[m] == v[i] + 1:
                    return False
                if hi < v[m] < v[i] < lo and v[i] == v[m] + 1:
                    return False
    return True


def is_separable(p: Permutation) -> bool:
    """Avoids the classical pair 2-4-1-3 and 3-1-4-2."""
    return not matches(p, PAT_2_4_1_3) and not matches(p, PAT_3_1_4_2)


def is_separable_recursive(p: Permutation) -> bool:
    """Cross-check: size <= 1, or the graph splits into two blocks (SW/NE or
    NW/SE) that are themselves separable.  Any split point works because the
    class is closed under taking subpermutations."""

    def rec(vals: tuple[int, ...]) -> bool:
        n = len(vals)
        if n <= 1:
            return True
        lo_max = hi_min = None
        for k in range(1, n):
            pre, suf = vals[:k], vals[k:]
            if max(pre) < min(suf) or min(pre) > max(suf):
                return rec(pre) and rec(suf)
        return False

    return rec(p.values)


def is_separable_by_point(p: Permutation) -> bool:
    """Avoids 2-14-3, 3-41-2, 2-4-1-3 and 3-1-4-2 all at once."""
    return is_s_perm(p) and is_separable(p)


def is_separable_by_point_recursive(p: Permutation) -> bool:
    """Cross-check: empty, or block-point-block with the point SW/NE or NW/SE
    between two separable-by-point blocks."""

    def rec(vals: tuple[int, ...]) -> bool:
        n = len(vals)
        if n == 0:
            return True
        for i in range(n):
            v = vals[i]
            if all(w < v for w in vals[:i]) and all(w > v for w in vals[i + 1:]):
                return rec(vals[:i]) and rec(vals[i + 1:])
            if all(w > v for w in vals[:i]) and all(w < v for w in vals[i + 1:]):
                return rec(vals[:i]) and rec(vals[i + 1:])
        return False

    return rec(p.values)


# ---------------------------------------------------------------------------
# Graph-point neighbors


class Direction(Enum):
    """Diagonal directions on the permutation graph."""

    NE = (1, 1)
    NW = (-1, 1)
    SE = (1, -1)
    SW = (-1, -1)


def point_neighbors(p: Permutation, i: int, direction: Direction) -> set[int]:
    """All j such that N_j is a direction-neighbor of N_i: N_j lies on the
    given side diagonally and the open axis-parallel rectangle spanned by
    N_i and N_j contains no other graph point."""
    n = len(p)
    if not 1 <= i <= n:
        raise PositionOutOfRange(f"position {i} outside 1..{n}")
    dx, dy = direction.value
    v = p.values
    vi = v[i - 1]
    out = set()
    for j in range(1, n + 1):
        if j == i:
            continue
        vj = v[j - 1]
        if (j - i) * dx <= 0 or (vj - vi) * dy <= 0:
            continue
        klo, khi = min(i, j), max(i, j)
        vlo, vhi = min(vi, vj), max(vi, vj)
        if all(not vlo < v[k - 1] < vhi for k in range(klo + 1, khi)):
            out.add(j)
    return out


class PointClass(Enum):
    WEAK = "weak"
    STRONG_HORIZONTAL = "strong-horizontal"
    STRONG_VERTICAL = "strong-vertical"


def _classify_unchecked(p: Permutation, i: int) -> PointClass:
    horiz = (len(point_neighbors(p, i, Direction.NW)) >= 2
             or len(point_neighbors(p, i, Direction.SE)) >= 2)
    vert = (len(point_neighbors(p, i, Direction.SW)) >= 2
            or len(point_neighbors(p, i, Direction.NE)) >= 2)
    if horiz and vert:
        raise AssertionError(f"point {i} of {p} is both kinds of strong")
    if horiz:
        return PointClass.STRONG_HORIZONTAL
    if vert:
        return PointClass.STRONG_VERTICAL
    return PointClass.WEAK


def classify_point(p: Permutation, i: int) -> PointClass:
    """Strong-horizontal if N_i has >= 2 NW- or >= 2 SE-neighbors,
    strong-vertical if >= 2 SW- or >= 2 NE-neighbors, weak otherwise.
    Only defined on S-permutations (the two never coincide there)."""
    if not is_s_perm(p):
        raise NotAnSPermutation(f"{p} contains 2-14-3 or 3-41-2")
    if not 1 <= i <= len(p):
        raise PositionOutOfRange(f"position {i} outside 1..{len(p)}")
    return _classify_unchecked(p, i)


# ---------------------------------------------------------------------------
# Symmetries of the square acting on permutation graphs


class Symmetry(Enum):
    """The eight symmetries, encoded as (swap axes, flip x, flip y) acting on
    graph points inside a box: (x, y) -> (u, v) with (u, v) = (y, x) when
    swapped, then each coordinate optionally reflected in its extent."""

    IDENTITY = (False, False, False)
    REVERSE = (False, True, False)        # reflect in a vertical line
    COMPLEMENT = (False, False, True)     # reflect in a horizontal line
    ROT180 = (False, True, True)
    INVERSE = (True, False, False)        # reflect in the main diagonal
    ANTIDIAGONAL = (True, True, True)
    ROT90CW = (True, False, True)
    ROT90CCW = (True, True, False)


def map_point(sym: Symmetry, x: int, y: int, ex: int, ey: int) -> tuple[int, int]:
    """Image of (x, y) in the [0,ex]x[0,ey] box (the image box swaps extents
    for quarter turns and diagonal reflections)."""
    swap, negx, negy = sym.value
    u, v = (y, x) if swap else (x, y)
    fx, fy = (ey, ex) if swap else (ex, ey)
    return (fx - u if negx else u, fy - v if negy else v)


_PROBE = (1, 2, 7, 7)  # a point in general position: distinguishes all eight


def compose_symmetries(first: Symmetry, then: Symmetry) -> Symmetry:
    """The single element equal to applying ``first`` and then ``then``."""
    x, y = map_point(first, *_PROBE)
    ex, ey = _PROBE[2:]  # square probe box: extents unchanged
    x, y = map_point(then, x, y, ex, ey)
    for sym in Symmetry:
        if map_point(sym, *_PROBE) == (x, y):
            return sym
    raise AssertionError("composition fell outside the group")


def apply_symmetry(p: Permutation, sym: Symmetry) -> Permutation:
    """Transform the graph of p by the symmetry and read the result back."""
    n = len(p)
    out = [0] * n
    for i, v in enumerate(p.values, start=1):
        x, y = map_point(sym, i, v, n + 1, n + 1)
        out[x - 1] = y
    return Permutation(out)
