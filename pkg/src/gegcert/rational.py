"""Exact rational arithmetic, polynomial algebra, and certified root isolation.

This is the ground-truth layer: every number is a `fractions.Fraction`
(arbitrary precision, always reduced, positive denominator), polynomials are
dense coefficient tuples, and all root/extremum certificates reduce to exact
integer sign evaluations.

Root isolation contract: the returned enclosures are pairwise disjoint
rational intervals, each exhibiting one sign change of the (squarefree)
polynomial, and together they cover every real root in the query range.
Completeness is certified by a Sturm-sequence count; candidate brackets are
found by a cheap float scan and then certified exactly, with a pure Sturm
bisection as fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction


class NonSquarefree(ValueError):
    """Polynomial shares a nonconstant factor with its derivative."""


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class RatPoly:
    """Dense univariate polynomial over Fraction, ascending coefficients.

    The zero polynomial has degree -1 and an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def shift_x(self) -> "RatPoly":
        """Multiply by x."""
        if self.is_zero():
            return self
        return RatPoly((Fraction(0),) + self.coeffs)


def poly_eval(p: RatPoly, x: Fraction) -> Fraction:
    """Exact value p(x) by Horner's rule."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: RatPoly) -> RatPoly:
    """Exact formal derivative."""
    return RatPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def weighted_inner_product(p: RatPoly, q: RatPoly) -> Fraction:
    """Exact integral of (1 - x^2) p(x) q(x) over [-1, 1].

    Uses the closed-form monomial moments: odd powers integrate to zero,
    x^(2j) integrates to 2/(2j+1).
    """
    r = p * q
    r = RatPoly([c for c in r.coeffs]) - RatPoly((Fraction(0), Fraction(0)) + r.coeffs)
    total = Fraction(0)
    for m, c in enumerate(r.coeffs):
        if c and m % 2 == 0:
            total += c * Fraction(2, m + 1)
    return total


def poly_divmod(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, a.degree - b.degree + 1)
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    db = b.degree
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        f = rem[-1] / lead
        pos = len(rem) - 1 - db
        q[pos] = f
        for i, c in enumerate(b.coeffs):
            rem[pos + i] -= f * c
        rem.pop()
    return RatPoly(q), RatPoly(rem)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a * (1 / a.coeffs[-1])


def squarefree_part(p: RatPoly) -> RatPoly:
    g = poly_gcd(p, poly_derivative(p))
    if g.degree <= 0:
        return p
    return poly_divmod(p, g)[0]


# ---------------------------------------------------------------------------
# integer form and exact sign evaluation
# ---------------------------------------------------------------------------


def _int_coeffs(p: RatPoly) -> list[int]:
    """Scale to primitive integer coefficients (positive content removed)."""
    if p.is_zero():
        return []
    den = math.lcm(*[c.denominator for c in p.coeffs])
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*[abs(c) for c in ints])
    return [c // g for c in ints]


def _sign_at(ints: list[int], x: Fraction) -> int:
    """Sign of the integer polynomial at rational x, exactly."""
    n = len(ints) - 1
    p, q = x.numerator, x.denominator
    acc = ints[-1]
    qp = 1
    for i in range(n - 1, -1, -1):
        qp *= q
        acc = acc * p + ints[i] * qp
    return (acc > 0) - (acc < 0)


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def _sturm_chain(ints: list[int]) -> list[list[int]]:
    p0 = RatPoly(ints)
    chain = [_int_coeffs(p0)]
    p1 = poly_derivative(p0)
    if not p1.is_zero():
        chain.append(_int_coeffs(p1))
        a, b = p0, p1
        while True:
            r = poly_divmod(a, b)[1]
            if r.is_zero():
                break
            r = -r
            chain.append(_int_coeffs(r))
            a, b = b, r
    return chain


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [_sign_at(c, x) for c in chain]
    prev = 0
    var = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            var += 1
        prev = s
    return var


def _sturm_count(chain: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b] for a squarefree polynomial."""
    return _variations(chain, a) - _variations(chain, b)


# ---------------------------------------------------------------------------
# root enclosures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootEnclosure:
    """Rational interval certified to contain exactly one simple real root."""

    lo: Fraction
    hi: Fraction
    simple: bool = True

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def refine_enclosure(p: RatPoly, enc: RootEnclosure, width: Fraction) -> RootEnclosure:
    """Shrink a sign-change enclosure below the requested width by bisection."""
    ints = _int_coeffs(p)
    lo, hi = enc.lo, enc.hi
    s_lo = _sign_at(ints, lo)
    if s_lo == 0 or _sign_at(ints, hi) == 0:
        raise ValueError("enclosure endpoint is an exact root; re-isolate")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign_at(ints, mid)
        if s_mid == 0:
            # mid is the (exact rational) root: the enclosure holds only this
            # root, so the signs just off mid match the outer endpoints
            quarter = (hi - lo) / 4
            lo, hi = mid - quarter, mid + quarter
            continue
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RootEnclosure(lo, hi)


def _certify_bracket(ints: list[int], lo: Fraction, hi: Fraction) -> RootEnclosure | None:
    sl, sh = _sign_at(ints, lo), _sign_at(ints, hi)
    if sl != 0 and sh != 0 and sl != sh:
        return RootEnclosure(lo, hi)
    return None


def _widen_exact_root(
    ints: list[int],
    chain: list[list[int]],
    r: Fraction,
    step: Fraction,
) -> RootEnclosure:
    """Turn an exact rational simple root into a sign-change enclosure."""
    d = step
    for _ in range(200):
        lo, hi = r - d, r + d
        sl, sh = _sign_at(ints, lo), _sign_at(ints, hi)
        if sl != 0 and sh != 0 and sl != sh and _sturm_count(chain, lo, hi) == 1:
            return RootEnclosure(lo, hi)
        d = d / 4
    raise NonSquarefree(f"no isolating neighbourhood around root {r}; multiple root?")


def isolate_real_roots(
    p: RatPoly,
    lo: Fraction,
    hi: Fraction,
    strict: bool = False,
) -> list[RootEnclosure]:
    """Disjoint enclosures covering exactly the real roots of p in [lo, hi].

    In strict mode a nonconstant gcd(p, p') raises NonSquarefree; otherwise
    isolation silently runs on the squarefree part (same root set).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty range")
    if p.degree <= 0:
        return []
    g = poly_gcd(p, poly_derivative(p))
    if g.degree > 0:
        if strict:
            raise NonSquarefree("polynomial is not squarefree")
        p = poly_divmod(p, g)[0]
    ints = _int_coeffs(p)
    chain = _sturm_chain(ints)

    found: list[RootEnclosure] = []
    a, b = lo, hi
    # endpoints that are exact roots get dedicated enclosures
    eps = (hi - lo) / 1024 if hi > lo else Fraction(1, 1024)
    if _sign_at(ints, a) == 0:
        found.append(_widen_exact_root(ints, chain, a, eps))
        a = found[-1].hi
    if b > a and _sign_at(ints, b) == 0:
        found.append(_widen_exact_root(ints, chain, b, eps))
        b = found[-1].lo
    if a < b:
        total = _sturm_count(chain, a, b)
        if total > 0:
            found.extend(_isolate_scan(ints, chain, a, b, total))
    found.sort(key=lambda e: e.lo)
    _certify_disjoint_simple(ints, chain, found)
    return found


def _certify_disjoint_simple(ints: list[int], chain: list[list[int]], encs: list[RootEnclosure]) -> None:
    """Final certificate: enclosures are disjoint and each holds one root."""
    prev_hi = None
    for e in encs:
        if prev_hi is not None and e.lo < prev_hi:
            raise AssertionError("overlapping enclosures")
        prev_hi = e.hi
        if _sign_at(ints, e.lo) == 0 or _sign_at(ints, e.hi) == 0:
            raise AssertionError("enclosure endpoint is a root")
        if _sturm_count(chain, e.lo, e.hi) != 1:
            raise AssertionError("enclosure does not hold exactly one root")


def _isolate_scan(
    ints: list[int],
    chain: list[list[int]],
    a: Fraction,
    b: Fraction,
    total: int,
) -> list[RootEnclosure]:
    """Find `total` certified sign-change brackets in (a, b]."""
    deg = len(ints) - 1
    n_pts = max(8 * deg, 64)
    for _round in range(7):
        grid = _scan_grid(a, b, n_pts)
        encs = _brackets_from_grid(ints, chain, grid)
        if len(encs) == total:
            return encs
        n_pts *= 4
    # fallback: exact Sturm bisection (always terminates for squarefree p)
    return _isolate_sturm(ints, chain, a, b, total)


def _scan_grid(a: Fraction, b: Fraction, n: int) -> list[Fraction]:
    step = (b - a) / n
    return [a + i * step for i in range(n + 1)]


def _brackets_from_grid(
    ints: list[int],
    chain: list[list[int]],
    grid: list[Fraction],
) -> list[RootEnclosure]:
    # exact signs throughout: float pre-screening is worthless for the
    # huge alternating coefficients these families produce
    signs = [_sign_at(ints, x) for x in grid]
    out: list[RootEnclosure] = []
    for i in range(len(grid) - 1):
        s0, s1 = signs[i], signs[i + 1]
        if s0 == 0:
            if not out or out[-1].hi <= grid[i]:
                step = grid[i + 1] - grid[i]
                out.append(_widen_exact_root(ints, chain, grid[i], step / 4))
            continue
        if s1 == 0 or s0 == s1:
            continue  # grid roots handled on their left visit
        enc = RootEnclosure(grid[i], grid[i + 1])
        if not out or out[-1].hi <= enc.lo:
            out.append(enc)
    return out


def _isolate_sturm(
    ints: list[int],
    chain: list[list[int]],
    a: Fraction,
    b: Fraction,
    total: int,
) -> list[RootEnclosure]:
    out: list[RootEnclosure] = []
    stack = [(a, b, total)]
    while stack:
        x, y, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and _sign_at(ints, x) != 0 and _sign_at(ints, x) == -_sign_at(ints, y):
            out.append(RootEnclosure(x, y))
            continue
        mid = (x + y) / 2
        while _sign_at(ints, mid) == 0:
            mid = (x + 2 * mid) / 3  # nudge off the exact root
        left = _sturm_count(chain, x, mid)
        stack.append((x, mid, left))
        stack.append((mid, y, cnt - left))
    return sorted(out, key=lambda e: e.lo)


# ---------------------------------------------------------------------------
# certified extrema
# ---------------------------------------------------------------------------


def poly_range_on_interval(p: RatPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact-rational interval extension of p over [lo, hi] (Horner form)."""
    alo, ahi = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi


def certified_min_on_interval(
    p: RatPoly,
    lo: Fraction,
    hi: Fraction,
    width: Fraction,
) -> tuple[Fraction, Fraction]:
    """Certified bracket (m_lo, m_hi) of min p over [lo, hi], m_hi - m_lo <= width.

    Roots of p' are isolated, p is range-evaluated over each (shrinking)
    critical cell, and the endpoint values are exact; the minimum of a
    polynomial over a closed interval is attained at one of these points.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if lo > hi:
        raise ValueError("empty interval")
    endvals = [poly_eval(p, lo), poly_eval(p, hi)]
    if p.degree <= 1:
        m = min(endvals)
        return m, m
    dp = poly_derivative(p)
    cells = isolate_real_roots(dp, lo, hi)
    while True:
        ranges = [poly_range_on_interval(p, max(c.lo, lo), min(c.hi, hi)) for c in cells]
        m_lo = min(endvals + [r[0] for r in ranges])
        m_hi = min(endvals + [r[1] for r in ranges])
        if m_hi - m_lo <= width:
            return m_lo, m_hi
        cells = [refine_enclosure(dp, c, c.width() / 16) for c in cells]


def certified_max_on_interval(
    p: RatPoly,
    lo: Fraction,
    hi: Fraction,
    width: Fraction,
) -> tuple[Fraction, Fraction]:
    a, b = certified_min_on_interval(-p, lo, hi, width)
    return -b, -a


# ---------------------------------------------------------------------------
# directed rational square roots (for reporting irrational bound values)
# ---------------------------------------------------------------------------


def sqrt_lower(q: Fraction, bits: int = 128) -> Fraction:
    """Rational lower bound of sqrt(q), within 2^-bits relative error."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * q.denominator
    s = math.isqrt(n * scale * scale)
    return Fraction(s, scale * q.denominator)


def sqrt_upper(q: Fraction, bits: int = 128) -> Fraction:
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * q.denominator
    s = math.isqrt(n * scale * scale)
    if s * s < n * scale * scale:
        s += 1
    return Fraction(s, scale * q.denominator)
