"""Exact arithmetic on big rationals and real quadratic surds.

Every value handled by this package is an ``ExactNumber``: either a
``fractions.Fraction`` or a :class:`Surd` representing ``(a + b*sqrt(d))/c``.
Floors, comparisons and root selection are carried out with integer
arithmetic only; there is no floating-point anywhere on a decision path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union


class MixedRadicands(ArithmeticError):
    """Arithmetic between two irrational surds over different radicands."""


class NoRootInRange(ValueError):
    """The quadratic has no root (or no unique root) in the requested range."""


class DegenerateEquation(ValueError):
    """Both the quadratic and the linear coefficient vanish."""


def integer_sqrt(n: int) -> int:
    """Exact floor of the square root of a non-negative integer."""
    if n < 0:
        raise ValueError("integer_sqrt of a negative number")
    return math.isqrt(n)


_PRIME_LIMIT = 1 << 16


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * _PRIME_LIMIT
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(_PRIME_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=None)
def _square_free_split(n: int) -> tuple[int, int]:
    # n = s*s*f with f squarefree.  Trial division over a fixed prime sieve,
    # continued with odd candidates in the (rare) case of huge radicands.
    s, f = 1, 1
    exhausted = True
    for p in _small_primes():
        if p * p > n:
            exhausted = False
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                f *= p
    if exhausted:
        p = _PRIME_LIMIT + 1
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                s *= p ** (e // 2)
                if e % 2:
                    f *= p
            p += 2
    return s, f * n


def _sign(n) -> int:
    return (n > 0) - (n < 0)


def _sign2(p: int, q: int, d: int) -> int:
    """Sign of p + q*sqrt(d), integer arithmetic only."""
    if q == 0 or d == 0:
        return _sign(p)
    if p == 0:
        return _sign(q)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs, rhs = q * q * d, p * p  # |q*sqrt(d)|^2 vs |p|^2
    if q > 0:
        return _sign(lhs - rhs)
    return _sign(rhs - lhs)


def _sign3(p: int, q: int, d1: int, r: int, d2: int) -> int:
    """Sign of p + q*sqrt(d1) + r*sqrt(d2) for distinct non-square radicands."""
    sa = _sign2(p, q, d1)     # p + q*sqrt(d1)  vs  -r*sqrt(d2)
    sb = _sign(-r)
    if sa != sb:
        return 1 if sa > sb else -1
    if sa == 0:
        return 0
    t = _sign2(p * p + q * q * d1 - r * r * d2, 2 * p * q, d1)
    return sa * t


class Surd:
    """Canonical quadratic surd (a + b*sqrt(d))/c.

    Instances are always irrational: c > 0, b != 0, d squarefree and not a
    perfect square, gcd(a, b, c) = 1.  Use :func:`surd` to construct values;
    it collapses rational cases to ``Fraction``.  Immutable and hashable.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_exact(other)
        if isinstance(other, Fraction):
            p, q = other.numerator, other.denominator
            return surd(self.a * q + p * self.c, self.b * q, self.d, self.c * q)
        if isinstance(other, Surd):
            if other.d != self.d:
                raise MixedRadicands(f"sqrt({self.d}) vs sqrt({other.d})")
            return surd(self.a * other.c + other.a * self.c,
                        self.b * other.c + other.b * self.c,
                        self.d, self.c * other.c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        other = _as_exact(other)
        if isinstance(other, (Fraction, Surd)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        other = _as_exact(other)
        if isinstance(other, (Fraction, Surd)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        other = _as_exact(other)
        if isinstance(other, Fraction):
            p, q = other.numerator, other.denominator
            if p == 0:
                return Fraction(0)
            return surd(self.a * p, self.b * p, self.d, self.c * q)
        if isinstance(other, Surd):
            if other.d != self.d:
                raise MixedRadicands(f"sqrt({self.d}) vs sqrt({other.d})")
            return surd(self.a * other.a + self.b * other.b * self.d,
                        self.a * other.b + self.b * other.a,
                        self.d, self.c * other.c)
        return NotImplemented

    __rmul__ = __mul__

    def _inverse(self):
        # 1/x = c*(a - b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
        # because the value is irrational.
        norm = self.a * self.a - self.b * self.b * self.d
        return surd(self.a * self.c, -self.b * self.c, self.d, norm)

    def __truediv__(self, other):
        other = _as_exact(other)
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other)
        if isinstance(other, Surd):
            return self * other._inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        other = _as_exact(other)
        if isinstance(other, (Fraction, Surd)):
            return other * self._inverse()
        return NotImplemented

    # -- predicates ---------------------------------------------------

    def sign(self) -> int:
        return _sign2(self.a, self.b, self.d)

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.c, self.d)

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # canonical surds are irrational
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other):
        return compare_exact(self, other) < 0

    def __le__(self, other):
        return compare_exact(self, other) <= 0

    def __gt__(self, other):
        return compare_exact(self, other) > 0

    def __ge__(self, other):
        return compare_exact(self, other) >= 0

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    def __float__(self):
        # display convenience only; never used for decisions
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __repr__(self):
        return format_exact(self)


ExactNumber = Union[Fraction, Surd]


def _as_exact(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def surd(a: int, b: int, d: int, c: int = 1) -> ExactNumber:
    """Build (a + b*sqrt(d))/c in canonical form.

    Square factors of d are pulled into b, perfect-square radicands collapse
    the value to a Fraction, c is made positive and gcd(a, b, c) = 1.
    """
    if c == 0:
        raise ZeroDivisionError("surd with zero denominator")
    if d < 0:
        raise ValueError("negative radicand")
    if c < 0:
        a, b, c = -a, -b, -c
    if b == 0 or d == 0:
        return Fraction(a, c)
    s, f = _square_free_split(d)
    b *= s
    if f == 1:
        return Fraction(a + b, c)
    g = math.gcd(math.gcd(abs(a), abs(b)), c)
    return Surd(a // g, b // g, c // g, f)


_OPS = {"+": lambda x, y: x + y, "-": lambda x, y: x - y,
        "*": lambda x, y: x * y, "/": lambda x, y: x / y}


def surd_arith(x, y, op: str) -> ExactNumber:
    """Dispatch form of exact arithmetic: op is one of ``+ - * /``.

    Operands must be rationals or surds over the same radicand (or one of
    them rational); results are normalized ExactNumbers.
    """
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    return _OPS[op](_as_exact(x), _as_exact(y))


def compare_exact(x, y) -> int:
    """Exact trichotomy: -1, 0 or +1 for x < y, x = y, x > y.

    Works across rationals and surds with equal or different radicands;
    signs are decided by cross-multiplication and squaring only.
    """
    x, y = _as_exact(x), _as_exact(y)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return _sign(x - y)
    if isinstance(x, Fraction):
        return -compare_exact(y, x)
    if isinstance(y, Fraction):
        return _sign2(x.a * y.denominator - y.numerator * x.c,
                      x.b * y.denominator, x.d)
    if x.d == y.d:
        diff = x - y
        if isinstance(diff, Fraction):
            return _sign(diff)
        return diff.sign()
    return _sign3(x.a * y.c - y.a * x.c, x.b * y.c, x.d, -y.b * x.c, y.d)


def floor_exact(x) -> int:
    """Greatest integer <= x, via integer-square-root bounding for surds."""
    x = _as_exact(x)
    if isinstance(x, Fraction):
        return x.numerator // x.denominator
    return _floor_linear_surd(x.a, x.b, x.d, x.c)


def _floor_linear_surd(p: int, q: int, d: int, e: int) -> int:
    """floor((p + q*sqrt(d))/e) with e > 0; sqrt(d) irrational when q != 0."""
    if q == 0:
        return p // e
    r = math.isqrt(q * q * d)
    f = r if q > 0 else -r - 1  # floor(q*sqrt(d)); strict, value irrational
    n = (p + f) // e
    while _sign2(p - (n + 1) * e, q, d) >= 0:
        n += 1
    return n


def is_rational(x) -> bool:
    return isinstance(_as_exact(x), Fraction)


def solve_quadratic(c2: int, c1: int, c0: int) -> tuple:
    """Real roots of c2*x^2 + c1*x + c0 = 0 (integer coefficients), ascending.

    c2 = 0 degrades to the linear equation; c2 = c1 = 0 is rejected.
    """
    if c2 == 0:
        if c1 == 0:
            raise DegenerateEquation("all coefficients of degree >= 1 vanish")
        return (Fraction(-c0, c1),)
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return ()
    if disc == 0:
        return (Fraction(-c1, 2 * c2),)
    r1 = surd(-c1, -1, disc, 2 * c2)
    r2 = surd(-c1, 1, disc, 2 * c2)
    return (r1, r2) if compare_exact(r1, r2) < 0 else (r2, r1)


def _mobius_entries(m) -> tuple[int, int, int, int]:
    if isinstance(m, tuple):
        return m
    return (m.a, m.b, m.c, m.d)


def solve_mobius_fixed_point(m, shift: int, lo=None, hi=None) -> ExactNumber:
    """Unique root of  x + shift = (a*x + b)/(c*x + d)  inside [lo, hi].

    The equation expands to c*x^2 + (d + shift*c - a)*x + (shift*d - b) = 0
    over the integers.  ``None`` bounds are unbounded.  Raises NoRootInRange
    when the range does not isolate exactly one real root.
    """
    a, b, c, d = _mobius_entries(m)
    roots = solve_quadratic(c, d + shift * c - a, shift * d - b)
    hits = [r for r in roots
            if (lo is None or compare_exact(r, lo) >= 0)
            and (hi is None or compare_exact(r, hi) <= 0)]
    if not hits:
        raise NoRootInRange(f"no root of the fixed-point equation in [{lo}, {hi}]")
    if len(hits) > 1:
        raise NoRootInRange("two roots in range; the range must isolate one")
    return hits[0]


def rational_between(lo, hi) -> Fraction:
    """Some exact rational strictly inside the nonempty open interval (lo, hi)."""
    k = 1
    while True:
        n = floor_exact(_as_exact(lo) * k) + 1
        q = Fraction(n, k)
        if compare_exact(q, hi) < 0 and compare_exact(lo, q) < 0:
            return q
        k *= 2


def decimal_str(x, places: int) -> str:
    """Decimal rendering of an exact value, rounded half-up. Display only."""
    scale = 10 ** places
    n = floor_exact(_as_exact(x) * scale + Fraction(1, 2))
    sign = "-" if n < 0 else ""
    n = abs(n)
    if places == 0:
        return f"{sign}{n}"
    return f"{sign}{n // scale}.{n % scale:0{places}d}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([1-9]\d*))?\s*$")
_SURD_RE = re.compile(
    r"^\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)"
    r"\s*/\s*([1-9]\d*)\s*$")
_SQRT_RE = re.compile(r"^\s*sqrt\(\s*(\d+)\s*\)\s*$")


def parse_exact(text: str) -> ExactNumber:
    """Parse "p/q", "(a+b*sqrt(d))/c" or "sqrt(d)". Decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m:
        num, den = m.group(1), m.group(2)
        return Fraction(int(num), int(den) if den else 1)
    m = _SURD_RE.match(text)
    if m:
        a, sgn, b, d, c = m.groups()
        b = int(b) if sgn == "+" else -int(b)
        return surd(int(a), b, int(d), int(c))
    m = _SQRT_RE.match(text)
    if m:
        return surd(0, 1, int(m.group(1)))
    raise ValueError(f"not an exact number: {text!r}")


def format_exact(x) -> str:
    """Canonical text form: "p/q" (or bare integer) and "(a+b*sqrt(d))/c"."""
    x = _as_exact(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return f"({x.a}{x.b:+d}*sqrt({x.d}))/{x.c}"
