"""Mosaic floorplans on the integer grid and the orders their parts induce.

A floorplan is a bounding box tiled by rectangles so that segments (maximal
interior straight lines made of rectangle sides) meet only in T-joins.  A
floorplan with n segments has n+1 rectangles and is said to have size n+1.

Both segments and rectangles carry two linear orders, written swo ("left or
below") and nwo ("left or above") here.  Reading swo labels along the nwo
order yields the floorplan's S-permutation (on segments) and R-permutation
(on rectangles).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .perm import NotBaxter, Permutation, Symmetry, is_baxter, map_point


class FloorplanError(ValueError):
    pass


class ParseError(FloorplanError):
    pass


class InvalidGeometry(FloorplanError):
    pass


class IndexOutOfRange(FloorplanError):
    pass


class SameSegment(FloorplanError):
    pass


class Mismatch(FloorplanError):
    pass


HORIZONTAL = "H"
VERTICAL = "V"


@dataclass(frozen=True, order=True)
class Segment:
    """A maximal interior segment: fixed coordinate ``offset``, extent
    ``lo..hi`` along the other axis (horizontal segments run in x)."""

    orientation: str
    offset: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.orientation not in (HORIZONTAL, VERTICAL):
            raise InvalidGeometry(f"bad orientation {self.orientation!r}")
        if self.lo >= self.hi:
            raise InvalidGeometry(f"empty span in {self}")

    def __str__(self) -> str:
        return f"{self.orientation} {self.offset} {self.lo} {self.hi}"


@dataclass(frozen=True)
class Rect:
    x1: int
    y1: int
    x2: int
    y2: int


class OrderRelation(Enum):
    LEFT_OF = "left-of"
    RIGHT_OF = "right-of"
    BELOW = "below"
    ABOVE = "above"


SIDES = ("left", "right", "below", "above")


@dataclass(frozen=True)
class Floorplan:
    """Validated mosaic floorplan.  Segments are stored sorted by
    (orientation, offset, lo), so segment indices are canonical."""

    width: int
    height: int
    segments: tuple[Segment, ...]

    def __init__(self, width: int, height: int, segments=()):
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "segments", tuple(sorted(segments)))
        _validate(self)

    @property
    def size(self) -> int:
        return len(self.segments) + 1

    @cached_property
    def rectangles(self) -> tuple[Rect, ...]:
        """The size-many rectangular faces, sorted by (x1, y1)."""
        return _faces(self.width, self.height, self.segments)

    def verticals(self) -> list[int]:
        return [i for i, s in enumerate(self.segments) if s.orientation == VERTICAL]

    def horizontals(self) -> list[int]:
        return [i for i, s in enumerate(self.segments) if s.orientation == HORIZONTAL]

    def __str__(self) -> str:
        return format_floorplan(self)


# ---------------------------------------------------------------------------
# Validation and face extraction


def _span_inside(seg: Segment, coord: int) -> bool:
    """coord strictly inside the segment's extent."""
    return seg.lo < coord < seg.hi


def _validate(fp: Floorplan) -> None:
    w, h = fp.width, fp.height
    if w <= 0 or h <= 0:
        raise InvalidGeometry(f"bounding box {w}x{h} is empty")
    verts = [s for s in fp.segments if s.orientation == VERTICAL]
    horzs = [s for s in fp.segments if s.orientation == HORIZONTAL]
    for s in verts:
        if not 0 < s.offset < w or s.lo < 0 or s.hi > h:
            raise InvalidGeometry(f"segment {s} leaves the interior of the box")
    for s in horzs:
        if not 0 < s.offset < h or s.lo < 0 or s.hi > w:
            raise InvalidGeometry(f"segment {s} leaves the interior of the box")

    # collinear segments may not overlap or touch end to end
    by_line: dict[tuple[str, int], list[Segment]] = {}
    for s in fp.segments:
        by_line.setdefault((s.orientation, s.offset), []).append(s)
    for group in by_line.values():
        group.sort(key=lambda s: s.lo)
        for a, b in zip(group, group[1:]):
            if a.hi >= b.lo:
                raise InvalidGeometry(f"collinear segments {a} and {b} meet")

    # T-joins only: a vertical and a horizontal segment may not cross
    for v in verts:
        for s in horzs:
            if _span_inside(s, v.offset) and _span_inside(v, s.offset):
                raise InvalidGeometry(f"segments {v} and {s} cross")

    # every endpoint is on the boundary or strictly inside a perpendicular segment
    def supported(x: int, y: int, perp: list[Segment], boundary: bool) -> bool:
        if boundary:
            return True
        return any(p.offset == (y if p.orientation == HORIZONTAL else x)
                   and _span_inside(p, x if p.orientation == HORIZONTAL else y)
                   for p in perp)

    for s in verts:
        if not supported(s.offset, s.lo, horzs, s.lo == 0):
            raise InvalidGeometry(f"dangling endpoint ({s.offset},{s.lo}) of {s}")
        if not supported(s.offset, s.hi, horzs, s.hi == h):
            raise InvalidGeometry(f"dangling endpoint ({s.offset},{s.hi}) of {s}")
    for s in horzs:
        if not supported(s.lo, s.offset, verts, s.lo == 0):
            raise InvalidGeometry(f"dangling endpoint ({s.lo},{s.offset}) of {s}")
        if not supported(s.hi, s.offset, verts, s.hi == w):
            raise InvalidGeometry(f"dangling endpoint ({s.hi},{s.offset}) of {s}")

    faces = _faces(w, h, fp.segments)
    if len(faces) != len(fp.segments) + 1:
        raise InvalidGeometry(
            f"{len(fp.segments)} segments bound {len(faces)} faces, want segments+1")

    corners: dict[tuple[int, int], int] = {}
    for r in faces:
        for pt in ((r.x1, r.y1), (r.x1, r.y2), (r.x2, r.y1), (r.x2, r.y2)):
            corners[pt] = corners.get(pt, 0) + 1
    for pt, cnt in corners.items():
        if cnt >= 4:
            raise InvalidGeometry(f"four rectangles meet at {pt}")


def _faces(w: int, h: int, segments: tuple[Segment, ...]) -> tuple[Rect, ...]:
    """Merge grid cells not separated by a segment; every component of a
    mosaic floorplan must come out rectangular."""
    xs = {0, w}
    ys = {0, h}
    for s in segments:
        if s.orientation == VERTICAL:
            xs.add(s.offset)
            ys.update((s.lo, s.hi))
        else:
            ys.add(s.offset)
            xs.update((s.lo, s.hi))
    xs = sorted(xs)
    ys = sorted(ys)
    nx, ny = len(xs) - 1, len(ys) - 1

    vert_lines: dict[int, list[Segment]] = {}
    horz_lines: dict[int, list[Segment]] = {}
    for s in segments:
        (vert_lines if s.orientation == VERTICAL else horz_lines).setdefault(
            s.offset, []).append(s)

    parent = list(range(nx * ny))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def blocked_v(x: int, ylo: int, yhi: int) -> bool:
        return any(s.lo <= ylo and yhi <= s.hi for s in vert_lines.get(x, ()))

    def blocked_h(y: int, xlo: int, xhi: int) -> bool:
        return any(s.lo <= xlo and xhi <= s.hi for s in horz_lines.get(y, ()))

    for i in range(nx):
        for j in range(ny):
            cell = i * ny + j
            if i + 1 < nx and not blocked_v(xs[i + 1], ys[j], ys[j + 1]):
                union(cell, (i + 1) * ny + j)
            if j + 1 < ny and not blocked_h(ys[j + 1], xs[i], xs[i + 1]):
                union(cell, i * ny + j + 1)

    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(nx):
        for j in range(ny):
            groups.setdefault(find(i * ny + j), []).append((i, j))

    rects = []
    for cells in groups.values():
        gx = [c[0] for c in cells]
        gy = [c[1] for c in cells]
        r = Rect(xs[min(gx)], ys[min(gy)], xs[max(gx) + 1], ys[max(gy) + 1])
        if len(cells) != (max(gx) - min(gx) + 1) * (max(gy) - min(gy) + 1):
            raise InvalidGeometry(f"non-rectangular face near {r}")
        rects.append(r)
    return tuple(sorted(rects, key=lambda r: (r.x1, r.y1)))


# ---------------------------------------------------------------------------
# Text format, rendering


def parse_floorplan(text: str) -> Floorplan:
    """Line-based format; '/' may stand in for newlines.  Line 1: ``W H n``,
    then n lines ``V x ylo yhi`` or ``H y xlo xhi``."""
    lines = [ln.strip() for ln in text.replace("/", "\n").splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty floorplan text")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(f"header must be 'W H n', got {lines[0]!r}")
    try:
        w, h, n = (int(t) for t in head)
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != n:
        raise ParseError(f"header promises {n} segments, got {len(lines) - 1}")
    segs = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 4 or toks[0] not in (HORIZONTAL, VERTICAL):
            raise ParseError(f"bad segment line {ln!r}")
        try:
            offset, lo, hi = (int(t) for t in toks[1:])
        except ValueError as exc:
            raise ParseError(f"bad segment line {ln!r}") from exc
        segs.append(Segment(toks[0], offset, lo, hi))
    return Floorplan(w, h, segs)


def format_floorplan(fp: Floorplan, sep: str = "\n") -> str:
    lines = [f"{fp.width} {fp.height} {len(fp.segments)}"]
    lines.extend(str(s) for s in fp.segments)
    return sep.join(lines)


def ascii_render(fp: Floorplan) -> str:
    """Box-drawing rendering on the unit grid, one text row per half step."""
    w, h = fp.width, fp.height
    verts = [s for s in fp.segments if s.orientation == VERTICAL]
    horzs = [s for s in fp.segments if s.orientation == HORIZONTAL]

    def hedge(x: int, y: int) -> bool:  # unit edge (x,y)-(x+1,y)
        if y in (0, h):
            return True
        return any(s.offset == y and s.lo <= x and x + 1 <= s.hi for s in horzs)

    def vedge(x: int, y: int) -> bool:  # unit edge (x,y)-(x,y+1)
        if x in (0, w):
            return True
        return any(s.offset == x and s.lo <= y and y + 1 <= s.hi for s in verts)

    joints = {
        (False, False, False, False): " ",
        (False, False, True, True): "─",
        (True, True, False, False): "│",
        (False, True, False, True): "┌",
        (False, True, True, False): "┐",
        (True, False, False, True): "└",
        (True, False, True, False): "┘",
        (True, True, False, True): "├",
        (True, True, True, False): "┤",
        (False, True, True, True): "┬",
        (True, False, True, True): "┴",
        (True, True, True, True): "┼",
    }
    rows = []
    for y in range(h, -1, -1):
        row = []
        for x in range(w + 1):
            up = y < h and vedge(x, y)
            down = y > 0 and vedge(x, y - 1)
            left = x > 0 and hedge(x - 1, y)
            right = x < w and hedge(x, y)
            row.append(joints[(up, down, left, right)])
            if x < w:
                row.append("──" if hedge(x, y) else "  ")
        rows.append("".join(row))
        if y > 0:
            mid = []
            for x in range(w + 1):
                mid.append("│" if vedge(x, y - 1) else " ")
                if x < w:
                    mid.append("  ")
            rows.append("".join(mid))
    return "\n".join(rows)


def svg_render(fp: Floorplan, unit: int = 20) -> str:
    """One rect for the boundary plus one line per segment; y points up."""
    w, h = fp.width * unit, fp.height * unit

    def pt(x: int, y: int) -> tuple[int, int]:
        return x * unit, (fp.height - y) * unit

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">',
           f'<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black"/>']
    for s in fp.segments:
        if s.orientation == VERTICAL:
            (x1, y1), (x2, y2) = pt(s.offset, s.lo), pt(s.offset, s.hi)
        else:
            (x1, y1), (x2, y2) = pt(s.lo, s.offset), pt(s.hi, s.offset)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Neighborhood relations between segments


def _face_supports(fp: Floorplan) -> list[tuple[int | None, int | None, int | None, int | None]]:
    """Per face: indices of the segments carrying its (left, right, bottom,
    top) side, None where the side lies on the boundary."""
    verts_at: dict[int, list[int]] = {}
    horzs_at: dict[int, list[int]] = {}
    for i, s in enumerate(fp.segments):
        (verts_at if s.orientation == VERTICAL else horzs_at).setdefault(
            s.offset, []).append(i)

    def holder(table: dict[int, list[int]], offset: int, lo: int, hi: int) -> int | None:
        for i in table.get(offset, ()):
            s = fp.segments[i]
            if s.lo <= lo and hi <= s.hi:
                return i
        return None

    out = []
    for r in fp.rectangles:
        out.append((
            holder(verts_at, r.x1, r.y1, r.y2) if r.x1 != 0 else None,
            holder(verts_at, r.x2, r.y1, r.y2) if r.x2 != fp.width else None,
            holder(horzs_at, r.y1, r.x1, r.x2) if r.y1 != 0 else None,
            holder(horzs_at, r.y2, r.x1, r.x2) if r.y2 != fp.height else None,
        ))
    return out


def _segment_adjacency(fp: Floorplan) -> tuple[list[set[int]], list[set[int]]]:
    """(left_adj, below_adj): left_adj[a] holds every b such that segment a
    is a left-neighbor of b; below_adj likewise for below-neighbors."""
    n = len(fp.segments)
    left_adj: list[set[int]] = [set() for _ in range(n)]
    below_adj: list[set[int]] = [set() for _ in range(n)]

    # the two same-orientation cases ask for exactly one face between the pair
    pair_count_lr: dict[tuple[int, int], int] = {}
    pair_count_bt: dict[tuple[int, int], int] = {}
    for ls, rs, bs, ts in _face_supports(fp):
        if ls is not None and rs is not None:
            pair_count_lr[(ls, rs)] = pair_count_lr.get((ls, rs), 0) + 1
        if bs is not None and ts is not None:
            pair_count_bt[(bs, ts)] = pair_count_bt.get((bs, ts), 0) + 1
    for (a, b), cnt in pair_count_lr.items():
        if cnt == 1:
            left_adj[a].add(b)
    for (a, b), cnt in pair_count_bt.items():
        if cnt == 1:
            below_adj[a].add(b)

    for a, sa in enumerate(fp.segments):
        for b, sb in enumerate(fp.segments):
            if a == b or sa.orientation == sb.orientation:
                continue
            if sa.orientation == VERTICAL:
                # vertical a, horizontal b: left endpoint of b on a / bottom of b... n/a;
                # left-neighbor: b starts on a; below-neighbor: b's lower... (b is horizontal)
                if sb.lo == sa.offset and _span_inside(sa, sb.offset):
                    left_adj[a].add(b)          # a left-neighbor of horizontal b
                if sa.hi == sb.offset and _span_inside(sb, sa.offset):
                    below_adj[a].add(b)         # a hangs below horizontal b
            else:
                # horizontal a, vertical b
                if sa.hi == sb.offset and _span_inside(sb, sa.offset):
                    left_adj[a].add(b)          # a ends on b from the left
                if sb.lo == sa.offset and _span_inside(sa, sb.offset):
                    below_adj[a].add(b)         # vertical b stands on a
    return left_adj, below_adj


def segment_neighbors(fp: Floorplan, s: int, side: str) -> set[int]:
    """Neighbors of segment ``s`` on the given side ('left', 'right',
    'below' or 'above')."""
    if not 0 <= s < len(fp.segments):
        raise IndexOutOfRange(f"segment index {s} outside 0..{len(fp.segments) - 1}")
    if side not in SIDES:
        raise FloorplanError(f"side must be one of {SIDES}")
    left_adj, below_adj = _segment_closure_inputs(fp)
    if side == "right":
        return set(left_adj[s])
    if side == "left":
        return {a for a in range(len(fp.segments)) if s in left_adj[a]}
    if side == "above":
        return set(below_adj[s])
    return {a for a in range(len(fp.segments)) if s in below_adj[a]}


def _segment_closure_inputs(fp: Floorplan):
    cached = fp.__dict__.get("_adjacency")
    if cached is None:
        cached = _segment_adjacency(fp)
        fp.__dict__["_adjacency"] = cached
    return cached


def _reachability(adj: list[set[int]]) -> list[set[int]]:
    n = len(adj)
    reach = [set(a) for a in adj]
    changed = True
    while changed:
        changed = False
        for a in range(n):
            add = set()
            for b in reach[a]:
                add |= reach[b]
            if not add <= reach[a]:
                reach[a] |= add
                changed = True
    return reach


def segment_closures(fp: Floorplan) -> tuple[list[set[int]], list[set[int]]]:
    """Transitive closures (left-of, below) of the neighbor relations; the
    reference oracle for all order computations."""
    cached = fp.__dict__.get("_closures")
    if cached is None:
        left_adj, below_adj = _segment_closure_inputs(fp)
        cached = (_reachability(left_adj), _reachability(below_adj))
        fp.__dict__["_closures"] = cached
    return cached


def order_relation(fp: Floorplan, s: int, t: int) -> OrderRelation:
    """The unique relation between two distinct segments."""
    n = len(fp.segments)
    if not 0 <= s < n or not 0 <= t < n:
        raise IndexOutOfRange(f"segment index outside 0..{n - 1}")
    if s == t:
        raise SameSegment(f"segment {s} compared with itself")
    left, below = segment_closures(fp)
    flags = [t in left[s], s in left[t], t in below[s], s in below[t]]
    if sum(flags) != 1:
        raise InvalidGeometry(f"order trichotomy violated for segments {s}, {t}")
    return (OrderRelation.LEFT_OF, OrderRelation.RIGHT_OF,
            OrderRelation.BELOW, OrderRelation.ABOVE)[flags.index(True)]


def nw_order_segments_oracle(fp: Floorplan) -> list[int]:
    """nwo order from the closure oracle: sort by number of predecessors."""
    left, below = segment_closures(fp)
    n = len(fp.segments)
    pred = [sum(1 for t in range(n) if t != s and (s in left[t] or t in below[s]))
            for s in range(n)]
    order = sorted(range(n), key=lambda s: pred[s])
    if [pred[s] for s in order] != list(range(n)):
        raise InvalidGeometry("nwo order is not total")
    return order


def sw_order_segments_oracle(fp: Floorplan) -> list[int]:
    left, below = segment_closures(fp)
    n = len(fp.segments)
    pred = [sum(1 for t in range(n) if t != s and (s in left[t] or s in below[t]))
            for s in range(n)]
    order = sorted(range(n), key=lambda s: pred[s])
    if [pred[s] for s in order] != list(range(n)):
        raise InvalidGeometry("swo order is not total")
    return order


# ---------------------------------------------------------------------------
# Single-pass nwo order on segments (successor rule)


def segment_successor(fp: Floorplan, idx: int) -> int | None:
    """Immediate nwo successor of a segment, or None for the last one.

    The successor of the segment at the SE corner of the k-th rectangle is
    the segment at the SE corner of the k+1-st, and the k+1-st rectangle is
    the highest one leaning on a vertical segment (the leftmost one hanging
    from a horizontal).  This corner form of the walk stays deterministic
    even where a segment's side-neighbors are not mutually incomparable,
    which does happen (two full-height verticals joined by a horizontal are
    V-V neighbors through the face above the horizontal, yet ordered
    through it)."""
    s = fp.segments[idx]
    if s.orientation == VERTICAL:
        cands = [r for r in fp.rectangles
                 if r.x1 == s.offset and s.lo <= r.y1 and r.y2 <= s.hi]
        rect = max(cands, key=lambda r: r.y2)
    else:
        cands = [r for r in fp.rectangles
                 if r.y2 == s.offset and s.lo <= r.x1 and r.x2 <= s.hi]
        rect = min(cands, key=lambda r: r.x1)
    return _se_corner_segment(fp, rect)


def _first_rect(fp: Floorplan) -> int:
    for i, r in enumerate(fp.rectangles):
        if r.x1 == 0 and r.y2 == fp.height:
            return i
    raise InvalidGeometry("no rectangle at the upper-left corner")


def _se_corner_segment(fp: Floorplan, r: Rect) -> int | None:
    """The segment that continues the nwo walk out of rectangle r: the one
    carrying the right or the lower side of r, whichever owns the SE corner
    T-join.  None when the SE corner is the corner of the box."""
    vr = hb = None
    for i, s in enumerate(fp.segments):
        if s.orientation == VERTICAL and s.offset == r.x2 \
                and s.lo <= r.y1 and r.y2 <= s.hi:
            vr = i
        elif s.orientation == HORIZONTAL and s.offset == r.y1 \
                and s.lo <= r.x1 and r.x2 <= s.hi:
            hb = i
    if vr is None and r.x2 != fp.width:
        raise InvalidGeometry(f"right side of {r} unsupported")
    if hb is None and r.y1 != 0:
        raise InvalidGeometry(f"bottom side of {r} unsupported")
    if vr is None and hb is None:
        return None
    if vr is None:
        return hb
    if hb is None:
        return vr
    v, b = fp.segments[vr], fp.segments[hb]
    if v.lo == r.y1 and _span_inside(b, v.offset):
        return vr              # vertical stands on the horizontal: walk right
    if b.hi == r.x2 and _span_inside(v, b.offset):
        return hb              # horizontal ends on the vertical: walk down
    raise InvalidGeometry(f"SE corner of {r} is not a T-join")


def _rect_step(fp: Floorplan, k: int) -> tuple[int | None, int | None]:
    """From the k-th nwo rectangle to (its nwo successor, the segment
    between them)."""
    r = fp.rectangles[k]
    seg = _se_corner_segment(fp, r)
    if seg is None:
        return None, None
    s = fp.segments[seg]
    if s.orientation == VERTICAL:
        cands = [j for j, q in enumerate(fp.rectangles)
                 if q.x1 == s.offset and s.lo <= q.y1 and q.y2 <= s.hi]
        nxt = max(cands, key=lambda j: fp.rectangles[j].y2)
    else:
        cands = [j for j, q in enumerate(fp.rectangles)
                 if q.y2 == s.offset and s.lo <= q.x1 and q.x2 <= s.hi]
        nxt = min(cands, key=lambda j: fp.rectangles[j].x1)
    return nxt, seg


def nw_order_rects(fp: Floorplan) -> tuple[list[int], list[int]]:
    """Single simultaneous pass: nwo order of rectangles, and of segments
    (the k-th segment is the one separating the k-th and k+1-st rectangles)."""
    rect_order = [_first_rect(fp)]
    seg_order: list[int] = []
    while True:
        nxt, seg = _rect_step(fp, rect_order[-1])
        if nxt is None:
            break
        rect_order.append(nxt)
        seg_order.append(seg)
    if len(rect_order) != len(fp.rectangles):
        raise InvalidGeometry("rectangle walk did not visit every face")
    return rect_order, seg_order


def nw_order_segments(fp: Floorplan) -> list[int]:
    """nwo order on segments by the successor rule, seeded from the SE corner
    of the upper-left rectangle."""
    if not fp.segments:
        return []
    order = [_se_corner_segment(fp, fp.rectangles[_first_rect(fp)])]
    while True:
        nxt = segment_successor(fp, order[-1])
        if nxt is None:
            break
        order.append(nxt)
    if len(order) != len(fp.segments):
        raise InvalidGeometry("segment walk did not visit every segment")
    return order


def _flip_segment(fp: Floorplan, s: Segment) -> Segment:
    """Image of a segment under the horizontal-line reflection (y flip)."""
    if s.orientation == VERTICAL:
        return Segment(VERTICAL, s.offset, fp.height - s.hi, fp.height - s.lo)
    return Segment(HORIZONTAL, fp.height - s.offset, s.lo, s.hi)


def sw_order_segments(fp: Floorplan) -> list[int]:
    """swo order: reflecting in a horizontal line swaps the two orders, so
    this is the nwo order of the flipped floorplan, mapped back."""
    if not fp.segments:
        return []
    ref = transform_floorplan(fp, Symmetry.COMPLEMENT)
    image_index = {seg: i for i, seg in enumerate(fp.segments)}
    back = [image_index[_flip_segment(ref, seg)] for seg in ref.segments]
    return [back[i] for i in nw_order_segments(ref)]


def s_permutation(fp: Floorplan) -> Permutation:
    """sigma with sigma(i) = swo label of the i-th segment in nwo order."""
    nwo = nw_order_segments(fp)
    swo = sw_order_segments(fp)
    swo_rank = {seg: k + 1 for k, seg in enumerate(swo)}
    return Permutation(swo_rank[seg] for seg in nwo)


def _flip_rect(fp: Floorplan, r: Rect) -> Rect:
    return Rect(r.x1, fp.height - r.y2, r.x2, fp.height - r.y1)


def sw_order_rects(fp: Floorplan) -> list[int]:
    ref = transform_floorplan(fp, Symmetry.COMPLEMENT)
    image_index = {r: i for i, r in enumerate(fp.rectangles)}
    back = [image_index[_flip_rect(ref, r)] for r in ref.rectangles]
    ref_nwo, _ = nw_order_rects(ref)
    return [back[i] for i in ref_nwo]


def r_permutation(fp: Floorplan) -> Permutation:
    """rho with rho(i) = swo label of the i-th rectangle in nwo order."""
    nwo, _ = nw_order_rects(fp)
    swo = sw_order_rects(fp)
    swo_rank = {r: k + 1 for k, r in enumerate(swo)}
    return Permutation(swo_rank[r] for r in nwo)


# ---------------------------------------------------------------------------
# From R to S, combined diagram, inflation


def s_from_r(rho: Permutation) -> Permutation:
    """The S-permutation determined by a Baxter permutation: next to each
    ascent (descent) of rho, take the largest earlier (later) smaller value."""
    if not is_baxter(rho):
        raise NotBaxter(f"{rho} contains 2-41-3 or 3-14-2")
    v = rho.values
    out = []
    for i in range(len(v) - 1):
        if v[i] < v[i + 1]:
            out.append(max(x for x in v[:i + 1] if x < v[i + 1]))
        else:
            out.append(max(x for x in v[i + 1:] if x < v[i]))
    return Permutation(out)


def combined_diagram(rho: Permutation, sigma: Permutation) -> Permutation:
    """Interleave rho (odd positions/values) with sigma (even ones) into a
    single permutation of size 2n+1."""
    if sigma != s_from_r(rho):
        raise Mismatch(f"{sigma} is not the S-permutation of {rho}")
    n = len(sigma)
    out = [0] * (2 * n + 1)
    for k, v in enumerate(rho.values, start=1):
        out[2 * k - 2] = 2 * v - 1
    for i, v in enumerate(sigma.values, start=1):
        out[2 * i - 1] = 2 * v
    return Permutation(out)


def inflate(fp: Floorplan) -> Floorplan:
    """Thicken every segment into a unit-wide rectangle (coordinates scale
    by 3), giving a floorplan of size 2n+1."""
    if not fp.segments:
        return fp

    def stretched(s: Segment, extent: int) -> tuple[int, int]:
        lo = 0 if s.lo == 0 else 3 * s.lo + 1
        hi = 3 * extent if s.hi == extent else 3 * s.hi - 1
        return lo, hi

    segs = []
    for s in fp.segments:
        extent = fp.height if s.orientation == VERTICAL else fp.width
        lo, hi = stretched(s, extent)
        segs.append(Segment(s.orientation, 3 * s.offset - 1, lo, hi))
        segs.append(Segment(s.orientation, 3 * s.offset + 1, lo, hi))
    return Floorplan(3 * fp.width, 3 * fp.height, segs)


# ---------------------------------------------------------------------------
# Guillotine floorplans, symmetries


def is_guillotine(fp: Floorplan) -> bool:
    """Single rectangle, or some boundary-to-boundary segment splits it into
    two guillotine sub-floorplans."""
    if not fp.segments:
        return True
    for s in fp.segments:
        if s.orientation == VERTICAL and s.lo == 0 and s.hi == fp.height:
            a, b = _split_vertical(fp, s)
            return is_guillotine(a) and is_guillotine(b)
        if s.orientation == HORIZONTAL and s.lo == 0 and s.hi == fp.width:
            a, b = _split_horizontal(fp, s)
            return is_guillotine(a) and is_guillotine(b)
    return False


def _split_vertical(fp: Floorplan, cut: Segment) -> tuple[Floorplan, Floorplan]:
    x = cut.offset
    left = [s for s in fp.segments if s != cut and
            (s.offset < x if s.orientation == VERTICAL else s.hi <= x)]
    right = [Segment(s.orientation, s.offset - x, s.lo, s.hi)
             if s.orientation == VERTICAL else
             Segment(s.orientation, s.offset, s.lo - x, s.hi - x)
             for s in fp.segments if s != cut and
             (s.offset > x if s.orientation == VERTICAL else s.lo >= x)]
    return Floorplan(x, fp.height, left), Floorplan(fp.width - x, fp.height, right)


def _split_horizontal(fp: Floorplan, cut: Segment) -> tuple[Floorplan, Floorplan]:
    y = cut.offset
    below = [s for s in fp.segments if s != cut and
             (s.offset < y if s.orientation == HORIZONTAL else s.hi <= y)]
    above = [Segment(s.orientation, s.offset - y, s.lo, s.hi)
             if s.orientation == HORIZONTAL else
             Segment(s.orientation, s.offset, s.lo - y, s.hi - y)
             for s in fp.segments if s != cut and
             (s.offset > y if s.orientation == HORIZONTAL else s.lo >= y)]
    return Floorplan(fp.width, y, below), Floorplan(fp.width, fp.height - y, above)


def transform_floorplan(fp: Floorplan, sym: Symmetry) -> Floorplan:
    """Apply one of the eight box symmetries; quarter turns and diagonal
    reflections swap the box dimensions."""
    swap = sym.value[0]
    nw, nh = (fp.height, fp.width) if swap else (fp.width, fp.height)
    segs = []
    for s in fp.segments:
        if s.orientation == VERTICAL:
            p1 = map_point(sym, s.offset, s.lo, fp.width, fp.height)
            p2 = map_point(sym, s.offset, s.hi, fp.width, fp.height)
        else:
            p1 = map_point(sym, s.lo, s.offset, fp.width, fp.height)
            p2 = map_point(sym, s.hi, s.offset, fp.width, fp.height)
        orient = (VERTICAL if s.orientation == HORIZONTAL else HORIZONTAL) if swap \
            else s.orientation
        if orient == VERTICAL:
            assert p1[0] == p2[0]
            segs.append(Segment(VERTICAL, p1[0], min(p1[1], p2[1]), max(p1[1], p2[1])))
        else:
            assert p1[1] == p2[1]
            segs.append(Segment(HORIZONTAL, p1[1], min(p1[0], p2[0]), max(p1[0], p2[0])))
    return Floorplan(nw, nh, segs)


# The permutation-graph symmetry matching a floorplan symmetry: rotations map
# to themselves, a reflection's axis turns 45 degrees counterclockwise.
MATCHING_PERM_SYMMETRY = {
    Symmetry.IDENTITY: Symmetry.IDENTITY,
    Symmetry.ROT90CW: Symmetry.ROT90CW,
    Symmetry.ROT90CCW: Symmetry.ROT90CCW,
    Symmetry.ROT180: Symmetry.ROT180,
    Symmetry.INVERSE: Symmetry.REVERSE,
    Symmetry.REVERSE: Symmetry.ANTIDIAGONAL,
    Symmetry.ANTIDIAGONAL: Symmetry.COMPLEMENT,
    Symmetry.COMPLEMENT: Symmetry.INVERSE,
}
