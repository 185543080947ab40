"""Exhaustive verification suites over enumerated floorplans and permutations.

Floorplans are enumerated one per R-equivalence class (Baxter filter plus
``r_inverse``); the library has no other floorplan generator because the
bijections are the generator.  Each suite returns a report with the number
of cases checked and a list of counterexample strings (empty on success).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

from . import counting
from .floorplan import (
    Floorplan,
    combined_diagram,
    inflate,
    is_guillotine,
    nw_order_rects,
    nw_order_segments,
    nw_order_segments_oracle,
    r_permutation,
    s_from_r,
    s_permutation,
    segment_closures,
    segment_neighbors,
    sw_order_segments,
    sw_order_segments_oracle,
)
from .fstructure import (
    MarkedPermutation,
    contract,
    expand,
    f_structure,
    improper_pairs,
    inside_f_block_points,
    maximal_f_blocks,
)
from .inverse import r_inverse, s_inverse
from .perm import (
    Direction,
    Permutation,
    PointClass,
    _classify_unchecked,
    is_baxter,
    is_s_perm,
    is_separable,
    is_separable_by_point,
    permutations_of,
    point_neighbors,
)


@dataclass
class Report:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, detail: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(detail)

    def summary(self) -> str:
        state = "pass" if self.ok else f"FAIL ({len(self.failures)} counterexamples)"
        lines = [f"{self.name}: {self.cases} checks, {state}"]
        lines.extend(f"  {f}" for f in self.failures[:5])
        return "\n".join(lines)


def iter_baxter(n: int) -> Iterator[Permutation]:
    return (p for p in permutations_of(n) if is_baxter(p))


def iter_s_perms(n: int) -> Iterator[Permutation]:
    return (p for p in permutations_of(n) if is_s_perm(p))


def iter_floorplans(size: int) -> Iterator[Floorplan]:
    """One floorplan per R-equivalence class of the given size."""
    if size == 1:
        yield Floorplan(1, 1, ())
        return
    for rho in iter_baxter(size):
        yield r_inverse(rho)


def verify_orders(max_size: int) -> Report:
    """Segment-order laws on every enumerated floorplan up to max_size:
    trichotomy, linearity, order recovery, pass-vs-oracle agreement, the
    neighbor/diagonal correspondence, and R-to-S consistency."""
    rep = Report(f"orders (floorplans of size <= {max_size})")
    for size in range(1, max_size + 1):
        for fp in iter_floorplans(size):
            n = len(fp.segments)
            left, below = segment_closures(fp)
            for s in range(n):
                for t in range(n):
                    if s == t:
                        continue
                    flags = [t in left[s], s in left[t], t in below[s], s in below[t]]
                    rep.check(sum(flags) == 1,
                              f"trichotomy fails for segments {s},{t} of {fp!s}")
            nwo = nw_order_segments(fp)
            swo = sw_order_segments(fp)
            rep.check(nwo == nw_order_segments_oracle(fp),
                      f"nwo pass != closure sort on {fp!s}")
            rep.check(swo == sw_order_segments_oracle(fp),
                      f"swo pass != closure sort on {fp!s}")
            _, seg_pass = nw_order_rects(fp)
            rep.check(seg_pass == nwo,
                      f"rect-walk segment sequence != nwo on {fp!s}")
            nwo_pos = {seg: k for k, seg in enumerate(nwo)}
            swo_pos = {seg: k for k, seg in enumerate(swo)}
            for s in range(n):
                for t in range(n):
                    if s == t:
                        continue
                    swo_before = swo_pos[s] < swo_pos[t]
                    nwo_before = nwo_pos[s] < nwo_pos[t]
                    rep.check((t in left[s]) == (swo_before and nwo_before),
                              f"left-of recovery fails for {s},{t} of {fp!s}")
                    rep.check((t in below[s]) == (swo_before and not nwo_before),
                              f"below recovery fails for {s},{t} of {fp!s}")
            sigma = s_permutation(fp)
            rho = r_permutation(fp)
            rep.check(is_s_perm(sigma), f"S({fp!s}) = {sigma} not an S-permutation")
            rep.check(is_baxter(rho), f"R({fp!s}) = {rho} not Baxter")
            rep.check(s_from_r(rho) == sigma,
                      f"s_from_r(R) != S on {fp!s}")
            if size <= max_size - 1 or size <= 6:
                # neighbor <-> diagonal-neighbor correspondence
                side_dir = [("right", Direction.NE), ("left", Direction.SW),
                            ("above", Direction.NW), ("below", Direction.SE)]
                for k, seg in enumerate(nwo, start=1):
                    for side, d in side_dir:
                        nb = {nwo_pos[x] + 1 for x in segment_neighbors(fp, seg, side)}
                        rep.check(nb == point_neighbors(sigma, k, d),
                                  f"{side}-neighbors of segment {k} != {d} points on {fp!s}")
    return rep


def verify_roundtrip(max_size: int) -> Report:
    """s_inverse and r_inverse round trips over every S-permutation and
    Baxter permutation up to the given size."""
    rep = Report(f"roundtrip (permutations of size <= {max_size})")
    for n in range(0, max_size + 1):
        for sigma in iter_s_perms(n):
            rep.check(s_permutation(s_inverse(sigma)) == sigma,
                      f"S round trip fails on {sigma}")
    for n in range(1, max_size + 1):
        for rho in iter_baxter(n):
            fp = r_inverse(rho)  # internally asserts R(fp) == rho
            rep.check(s_permutation(fp) == s_from_r(rho),
                      f"S(r_inverse) != s_from_r on {rho}")
    return rep


def verify_fstructure(max_size: int) -> Report:
    """F-structure laws: the partition theorem, the weak-point lemma, block
    partition sanity, improper-pair counts and contract/expand inversion."""
    rep = Report(f"fstructure (sizes <= {max_size})")
    for n in range(1, max_size + 1):
        by_fs: dict = {}
        by_sigma: dict = {}
        for rho in iter_baxter(n):
            blocks = maximal_f_blocks(rho)
            covered = [i for b in blocks for i in range(b.x, b.x2 + 1)]
            rep.check(covered == list(range(1, n + 1)),
                      f"blocks of {rho} do not partition the positions")
            for b in blocks:
                vals = sorted(rho(i) for i in range(b.x, b.x2 + 1))
                rep.check(vals == list(range(b.y, b.y2 + 1)),
                          f"block {b} of {rho} has non-interval values")
            pairs = improper_pairs(rho)
            flat = [i for pr in pairs for i in pr]
            rep.check(len(set(flat)) == len(flat),
                      f"improper pairs of {rho} overlap")
            sig = s_from_r(rho)
            by_fs.setdefault(f_structure(rho), set()).add(rho)
            by_sigma.setdefault(sig, set()).add(rho)
            weak = {(i, sig(i)) for i in range(1, len(sig) + 1)
                    if _classify_unchecked(sig, i) is PointClass.WEAK}
            rep.check(weak == inside_f_block_points(rho),
                      f"weak points != inside-block points for {rho}")
        groups_fs = {frozenset(v) for v in by_fs.values()}
        groups_sig = {frozenset(v) for v in by_sigma.values()}
        rep.check(groups_fs == groups_sig,
                  f"F-structure classes != same-S classes at size {n}")
        if n >= 2:
            rep.check(len(groups_fs) == counting.a_number(n - 1),
                      f"{len(groups_fs)} classes at size {n}, want a_{n - 1}")
    # marked improper pairs: counts and inversion
    for size in range(2, max_size + 1):
        per_i: dict[int, int] = {}
        for rho in iter_baxter(size):
            openers = [a for a, _ in improper_pairs(rho)]
            for i in range(1, len(openers) + 1):
                for marks in combinations(openers, i):
                    per_i[i] = per_i.get(i, 0) + 1
                    mp = MarkedPermutation(rho, marks)
                    rep.check(expand(contract(mp)) == mp,
                              f"expand(contract) != id on {mp}")
        for i, cnt in per_i.items():
            want = comb(size - i, i) * counting.baxter_number(size - i)
            rep.check(cnt == want,
                      f"{cnt} permutations of size {size} with {i} marked pairs, want {want}")
    return rep


def verify_guillotine(max_size: int) -> Report:
    """Guillotine floorplans match separable-by-point S-permutations and
    separable R-permutations; class counts match h and Schroeder numbers."""
    rep = Report(f"guillotine (floorplans of size <= {max_size})")
    for size in range(1, max_size + 1):
        guillotine_classes = 0
        for fp in iter_floorplans(size):
            g = is_guillotine(fp)
            rep.check(g == is_separable_by_point(s_permutation(fp)),
                      f"guillotine != separable-by-point S on {fp!s}")
            rep.check(g == is_separable(r_permutation(fp)),
                      f"guillotine != separable R on {fp!s}")
            guillotine_classes += g
        if size >= 2:
            rep.check(guillotine_classes == counting.h_number(size - 1),
                      f"{guillotine_classes} guillotine classes of size {size}, "
                      f"want h_{size - 1}")
    return rep


def verify_combined(max_size: int) -> Report:
    """Combined diagram and inflation agree on every enumerated floorplan."""
    rep = Report(f"combined/inflate (floorplans of size <= {max_size})")
    for size in range(1, max_size + 1):
        for fp in iter_floorplans(size):
            rho, sigma = r_permutation(fp), s_permutation(fp)
            pi = combined_diagram(rho, sigma)
            n = len(sigma)
            rep.check(is_baxter(pi), f"combined diagram of {fp!s} not Baxter")
            odd = [(pi(2 * k - 1) + 1) // 2 for k in range(1, n + 2)]
            rep.check(Permutation(odd) == rho,
                      f"odd entries of combined diagram != R on {fp!s}")
            rep.check(r_permutation(inflate(fp)) == pi,
                      f"R(inflate) != combined diagram on {fp!s}")
    return rep


def verify_series(order: int) -> Report:
    """Exact generating-function identities and table regressions."""
    rep = Report(f"series (order {order})")
    for ident in ("AfromB", "BfromA_Catalan"):
        bad = counting.series_identity_failure(ident, order)
        rep.check(bad is None, f"{ident} first fails at order {bad}")
    for ident in ("ODE_B", "ODE_A"):
        bad = counting.series_identity_failure(ident, min(order, 25))
        rep.check(bad is None, f"{ident} residual nonzero at order {bad}")
    rep.check(tuple(counting.a_number(k) for k in range(1, 31)) == counting.A_TABLE_30,
              "a-table regression failed")
    hs = counting.h_series_closed_form(20)
    rep.check(all(hs.coeffs[k] == counting.h_number(k) for k in range(21)),
              "H closed form != h numbers through order 20")
    rep.check(counting.schroeder_numbers_from_series(12)
              == [counting.schroeder_number(k) for k in range(1, 13)],
              "Schroeder recurrence != series extraction")
    return rep


SUITES = {
    "orders": lambda size: verify_orders(size),
    "roundtrip": lambda size: verify_roundtrip(size),
    "fstructure": lambda size: verify_fstructure(size),
    "guillotine": lambda size: verify_guillotine(size),
    "combined": lambda size: verify_combined(size),
    "series": lambda size: verify_series(size),
}


def verify_all(max_size: int, series_order: int = 25) -> list[Report]:
    return [
        verify_orders(max_size),
        verify_roundtrip(max_size),
        verify_fstructure(max_size),
        verify_guillotine(max_size),
        verify_combined(max_size),
        verify_series(series_order),
    ]
