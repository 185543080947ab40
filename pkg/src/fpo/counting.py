"""Exact enumeration: closed forms, brute-force oracles, power series.

All arithmetic is exact (int / fractions.Fraction); series are truncated
lists of rational coefficients.  Reference values for the four sequences
are embedded below for regression; they match OEIS A001181 (Baxter),
A006318 (Schroeder), A214358 and A078482.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .perm import (
    Permutation,
    PermutationError,
    is_baxter,
    is_s_perm,
    is_separable,
    is_separable_by_point,
    permutations_of,
)


class SizeTooLarge(PermutationError):
    pass


def baxter_number(n: int) -> int:
    """Number of Baxter permutations of size n, as the triple-binomial sum
    2/(n(n+1)^2) * sum_m C(n+1,m) C(n+1,m+1) C(n+1,m+2)."""
    if n < 1:
        raise PermutationError(f"n must be >= 1, got {n}")
    total = sum(comb(n + 1, m) * comb(n + 1, m + 1) * comb(n + 1, m + 2)
                for m in range(n + 1))
    value = Fraction(2 * total, n * (n + 1) ** 2)
    if value.denominator != 1:
        raise AssertionError(f"non-integral count at n={n}")
    return int(value)


def a_number(n: int) -> int:
    """Number of S-permutations of size n: the alternating binomial sum over
    Baxter numbers (n = 0 gives 1, the empty permutation)."""
    if n < 0:
        raise PermutationError(f"n must be >= 0, got {n}")
    total = sum((-1) ** i * comb(n + 1 - i, i) * baxter_number(n + 1 - i)
                for i in range((n + 1) // 2 + 1))
    if total <= 0:
        raise AssertionError(f"non-positive count at n={n}")
    return total


def schroeder_number(n: int) -> int:
    """Number of separable permutations of size n (the (n-1)-st large
    Schroeder number), by the three-term recurrence."""
    if n < 1:
        raise PermutationError(f"n must be >= 1, got {n}")
    a, b = 1, 2  # S_0, S_1
    if n == 1:
        return a
    for k in range(1, n - 1):
        num = 3 * (2 * k + 1) * b - (k - 1) * a
        q, r = divmod(num, k + 2)
        if r:
            raise AssertionError(f"Schroeder recurrence broke at k={k}")
        a, b = b, q
    return b


def schroeder_numbers_from_series(count: int) -> list[int]:
    """The same numbers extracted from the generating function G solving
    G^2 - (1-t) G + t = 0, by fixed-point iteration G = (t + G^2)/(1-t)."""
    order = count
    g = Series.zero(order)
    t = Series.monomial(1, order)
    one_minus_t_inv = (Series.one(order) - t).reciprocal()
    for _ in range(order + 1):
        g = (t + g * g) * one_minus_t_inv
    return [int(g.coeffs[k]) for k in range(1, count + 1)]


def h_number(n: int) -> int:
    """Number of separable-by-point permutations of size n."""
    if n < 0:
        raise PermutationError(f"n must be >= 0, got {n}")
    total = sum((-1) ** i * comb(n + 1 - i, i) * schroeder_number(n + 1 - i)
                for i in range((n + 1) // 2 + 1))
    if total <= 0:
        raise AssertionError(f"non-positive count at n={n}")
    return total


def fibonacci_number(k: int) -> int:
    """F_k with F_0 = F_1 = 1 (counts ascending-block permutations of size k)."""
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def catalan_number(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


class PermClass(Enum):
    S_PERM = "sperm"
    BAXTER = "baxter"
    SEPARABLE = "separable"
    SEPARABLE_BY_POINT = "separable-by-point"


_RECOGNIZERS = {
    PermClass.S_PERM: is_s_perm,
    PermClass.BAXTER: is_baxter,
    PermClass.SEPARABLE: is_separable,
    PermClass.SEPARABLE_BY_POINT: is_separable_by_point,
}


def brute_count(n: int, cls: PermClass) -> int:
    """Count by filtering all n! permutations; the independent oracle for
    the closed forms."""
    if not 1 <= n <= 9:
        raise SizeTooLarge(f"brute force limited to 1 <= n <= 9, got {n}")
    recognize = _RECOGNIZERS[cls]
    return sum(1 for p in permutations_of(n) if recognize(p))


SEQUENCES = {
    "a": a_number,
    "b": baxter_number,
    "g": schroeder_number,
    "h": h_number,
    "fib": fibonacci_number,
    "catalan": catalan_number,
}


@dataclass(frozen=True)
class BigSeq:
    """A named sequence with terms indexed from 1 (fib and catalan from 0)."""

    name: str
    terms: tuple[int, ...]

    @staticmethod
    def compute(name: str, count: int) -> "BigSeq":
        fn = SEQUENCES[name]
        start = 0 if name in ("fib", "catalan") else 1
        return BigSeq(name, tuple(fn(k) for k in range(start, start + count)))


def growth_ratio(name: str, n: int) -> Fraction:
    """term(n) / term(n-1), exact."""
    fn = SEQUENCES[name]
    return Fraction(fn(n), fn(n - 1))


# ---------------------------------------------------------------------------
# Reference tables (OEIS A214358, A001181, A006318, A078482)


A_TABLE_30 = (
    1, 2, 6, 22, 88, 374, 1668, 7744, 37182, 183666,
    929480, 4803018, 25274088, 135132886, 732779504,
    4023875702, 22346542912, 125368768090, 709852110576, 4053103780006,
    23320440656376, 135126739754922, 788061492048436, 4623591001082002,
    27277772831911348, 161762725797343554, 963907399885885724,
    5769548815574513550, 34679563373252224012, 209275178482957838142,
)

BAXTER_TABLE_10 = (1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240)

SCHROEDER_TABLE_10 = (1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098)

H_TABLE_10 = (1, 2, 6, 20, 70, 254, 948, 3618, 14058, 55432)

REFERENCE_TABLES = {
    "a": A_TABLE_30,
    "b": BAXTER_TABLE_10,
    "g": SCHROEDER_TABLE_10,
    "h": H_TABLE_10,
}

OEIS_IDS = {"a": "A214358", "b": "A001181", "g": "A006318", "h": "A078482"}


# ---------------------------------------------------------------------------
# Truncated exact power series


@dataclass(frozen=True)
class Series:
    """Power series truncated at a fixed order, exact rational coefficients
    c_0..c_N."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise PermutationError("a series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def zero(order: int) -> "Series":
        return Series([0] * (order + 1))

    @staticmethod
    def one(order: int) -> "Series":
        return Series([1] + [0] * order)

    @staticmethod
    def monomial(k: int, order: int) -> "Series":
        c = [0] * (order + 1)
        if k <= order:
            c[k] = 1
        return Series(c)

    @staticmethod
    def from_terms(terms, order: int, start: int = 1) -> "Series":
        """Series sum_{k >= start} terms[k-start] t^k, truncated."""
        c = [Fraction(0)] * (order + 1)
        for k, v in enumerate(terms, start=start):
            if k > order:
                break
            c[k] = Fraction(v)
        return Series(c)

    def __add__(self, other: "Series") -> "Series":
        self._match(other)
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "Series") -> "Series":
        self._match(other)
        return Series(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        self._match(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    def scale(self, c) -> "Series":
        c = Fraction(c)
        return Series(a * c for a in self.coeffs)

    def _match(self, other: "Series") -> None:
        if self.order != other.order:
            raise PermutationError("series orders differ")

    def derivative(self) -> "Series":
        """d/dt, truncated back to the same order (top coefficient unknown
        and left zero; callers must not rely on it)."""
        out = [Fraction(k) * self.coeffs[k] for k in range(1, self.order + 1)]
        out.append(Fraction(0))
        return Series(out)

    def shift_down(self) -> "Series":
        """Divide by t (constant term must vanish)."""
        if self.coeffs[0] != 0:
            raise PermutationError("cannot divide by t: nonzero constant term")
        return Series(list(self.coeffs[1:]) + [Fraction(0)])

    def reciprocal(self) -> "Series":
        if self.coeffs[0] == 0:
            raise PermutationError("no reciprocal: zero constant term")
        n = self.order
        out = [Fraction(1) / self.coeffs[0]]
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j] if j <= n else 0
            out.append(-acc / self.coeffs[0])
        return Series(out)

    def compose(self, inner: "Series") -> "Series":
        """self(inner); inner must have zero constant term."""
        self._match(inner)
        if inner.coeffs[0] != 0:
            raise PermutationError("composition needs inner constant term 0")
        n = self.order
        result = Series.zero(n)
        power = Series.one(n)
        for k in range(n + 1):
            if self.coeffs[k]:
                result = result + power.scale(self.coeffs[k])
            if k < n:
                power = power * inner
        return result

    def sqrt(self) -> "Series":
        """Square root with constant term 1, by Newton iteration
        y <- (y + self/y)/2 on exact rationals."""
        if self.coeffs[0] != 1:
            raise PermutationError("sqrt needs constant term 1")
        y = Series.one(self.order)
        # each step doubles the number of correct coefficients
        steps = max(1, (self.order + 1).bit_length())
        for _ in range(steps):
            y = (y + self * y.reciprocal()).scale(Fraction(1, 2))
        return y

    def is_zero(self, through: int | None = None) -> bool:
        upto = self.order if through is None else through
        return all(c == 0 for c in self.coeffs[:upto + 1])


def catalan_series(order: int) -> Series:
    """C(s) = (1 - sqrt(1-4s)) / (2s)."""
    radicand = Series.one(order) - Series.monomial(1, order).scale(4)
    return (Series.one(order) - radicand.sqrt()).shift_down().scale(Fraction(1, 2))


def baxter_series(order: int) -> Series:
    return Series.from_terms((baxter_number(k) for k in range(1, order + 1)), order)


def a_series(order: int) -> Series:
    return Series.from_terms((a_number(k) for k in range(0, order + 1)), order, start=0)


def h_series(order: int) -> Series:
    return Series.from_terms((h_number(k) for k in range(0, order + 1)), order, start=0)


def h_series_closed_form(order: int) -> Series:
    """(1 - t + t^2 - sqrt(1 - 6t + 7t^2 - 2t^3 + t^4)) / (2t)."""
    work = order + 1
    poly = _poly_series([1, -1, 1], work)
    rad = _poly_series([1, -6, 7, -2, 1], work)
    out = (poly - rad.sqrt()).shift_down().scale(Fraction(1, 2))
    return Series(out.coeffs[:order + 1])


# The two annihilating differential equations, as coefficient polynomials
# (constant term first) multiplying 1, y, y' and y''.
ODE_B = {
    "inhomogeneous": [0, -12],                      # -12t
    "y": [6, -12],                                  # 6(1-2t)
    "dy": [0, 6, -28, -16],                         # -2t(-3+14t+8t^2)
    "d2y": [0, 0, 1, -7, -8],                       # -t^2(t+1)(8t-1)
}

ODE_A = {
    "inhomogeneous": [12, -84, 216, -240, 96],      # 12(t-1)(2t-1)^3
    "y": [-12, 104, -338, 512, -294, -110, 192, -48],
    "dy": [0, -8, 78, -246, 282, 72, -434, 336, -80],
    # -2t(t-1)(40t^6-128t^5+89t^4+53t^3-88t^2+35t-4)
    "d2y": [0, 0, -1, 11, -32, 17, 63, -114, 72, -16],
    # -t^2(2t-1)(8t^2-8t+1)(t^2-t-1)(t-1)^2
}


def _poly_series(coeffs: list[int], order: int) -> Series:
    return Series([coeffs[k] if k < len(coeffs) else 0 for k in range(order + 1)])


def _ode_residual(ode: dict, y: Series) -> Series:
    order = y.order
    dy = y.derivative()
    d2y = dy.derivative()
    res = _poly_series(ode["inhomogeneous"], order)
    res = res + _poly_series(ode["y"], order) * y
    res = res + _poly_series(ode["dy"], order) * dy
    res = res + _poly_series(ode["d2y"], order) * d2y
    return res


IDENTITIES = ("AfromB", "BfromA_Catalan", "ODE_B", "ODE_A")


def series_identity_failure(identity: str, order: int) -> int | None:
    """First failing order of the identity, or None if it holds through the
    requested order (exactly, no tolerance)."""
    if order > 40:
        raise SizeTooLarge(f"order {order} > 40")
    if order < 0:
        raise PermutationError("order must be >= 0")
    if identity == "AfromB":
        work = order + 1
        b = baxter_series(work)
        t = Series.monomial(1, work)
        inner = t - t * t
        lhs = b.compose(inner).shift_down()
        target = a_series(work)
        for k in range(order + 1):
            if lhs.coeffs[k] != target.coeffs[k]:
                return k
        return None
    if identity == "BfromA_Catalan":
        work = order + 1
        c = catalan_series(work)
        sc = Series.monomial(1, work) * c
        rhs = sc * a_series(work).compose(sc)
        target = baxter_series(work)
        for k in range(order + 1):
            if rhs.coeffs[k] != target.coeffs[k]:
                return k
        return None
    if identity == "ODE_B":
        res = _ode_residual(ODE_B, baxter_series(order))
        for k in range(order - 1):
            if res.coeffs[k] != 0:
                return k
        return None
    if identity == "ODE_A":
        res = _ode_residual(ODE_A, a_series(order))
        for k in range(order - 1):
            if res.coeffs[k] != 0:
                return k
        return None
    raise PermutationError(f"unknown identity {identity!r}")


def series_identity(identity: str, order: int) -> bool:
    return series_identity_failure(identity, order) is None
