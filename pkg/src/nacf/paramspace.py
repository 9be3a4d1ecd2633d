"""The coprime region of the parameter space and its digit-set cells.

For each N the interval (0, sqrt(N)-1] splits at finitely many exact
breakpoints (above a cutoff) into cells on which the digit set is constant;
a cell belongs to the coprime region when every digit there is coprime
with N.  Inside that region rationals are never periodic for alpha > 1 and
matching is obstructed, which yields whole no-matching intervals for odd N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from .exact import (ExactNumber, compare_exact, decimal_str, floor_exact,
                    rational_between, surd, _as_exact)
from .expansion import Params, alpha_max, digit_set
from .matching import ParamInterval


class NotApplicable(ValueError):
    """The requested region is only established for odd N >= 5."""


@dataclass(frozen=True)
class DigitSetCell:
    interval: ParamInterval  # half-open (lo, hi]
    digit_lo: int
    digit_hi: int
    in_k: bool

    def to_json(self) -> dict:
        return {"interval": self.interval.to_json(), "digit_lo": self.digit_lo,
                "digit_hi": self.digit_hi, "in_K": self.in_k}


DEFAULT_ALPHA_MIN = Fraction(1, 100)


@lru_cache(maxsize=256)
def digit_breakpoints(n: int, alpha_min: Fraction = DEFAULT_ALPHA_MIN) -> tuple[ExactNumber, ...]:
    """Exact parameters in (alpha_min, sqrt(N)-1] where the digit set jumps.

    These solve N/a - a = m (upper digit) or N/(a+1) - a = m (lower digit)
    for integers m >= 1.  The enumeration is bounded by floor(N/alpha_min);
    the set is infinite as alpha -> 0, hence the cutoff.
    """
    if n < 2:
        raise ValueError("N must be >= 2")
    alpha_min = _as_exact(alpha_min)
    edge = alpha_max(n)
    m_max = floor_exact(Fraction(n) / alpha_min)
    found = set()
    for m in range(1, m_max + 1):
        # a^2 + m a - N = 0, positive root
        found.add(surd(-m, 1, m * m + 4 * n, 2))
        # a^2 + (m+1) a + (m - N) = 0, positive root exists for m < N
        if m < n:
            found.add(surd(-(m + 1), 1, (m - 1) * (m - 1) + 4 * n, 2))
    kept = [b for b in found
            if compare_exact(alpha_min, b) < 0 and compare_exact(b, edge) <= 0]
    kept.sort(key=cmp_to_key(compare_exact))
    return tuple(kept)


@lru_cache(maxsize=256)
def kset(n: int, alpha_min: Fraction = DEFAULT_ALPHA_MIN) -> tuple[DigitSetCell, ...]:
    """Partition (alpha_min, sqrt(N)-1] into half-open digit-set cells.

    The digit set of each cell is evaluated at an exact rational interior
    sample; evaluating strictly inside avoids the floor ambiguity on the
    boundaries.
    """
    edge = alpha_max(n)
    cuts = [b for b in digit_breakpoints(n, alpha_min)
            if compare_exact(b, edge) < 0]
    bounds = [_as_exact(alpha_min)] + cuts + [edge]
    cells = []
    for lo, hi in zip(bounds, bounds[1:]):
        sample = rational_between(lo, hi)
        ds = digit_set(Params(n, sample))
        in_k = all(math.gcd(n, d) == 1 for d in ds)
        cells.append(DigitSetCell(ParamInterval(lo, hi, True, False),
                                  ds.start, ds.stop - 1, in_k))
    return tuple(cells)


def no_matching_regions(n: int) -> list[ParamInterval]:
    """Intervals of parameters containing no matching interval (odd N >= 5).

    For N = 5 and 7 the whole of (1, sqrt(N)-1] qualifies; for odd N >= 9
    the interval starts at the positive solution of x = N/(3+x), beyond
    which only the digits 1 and 2 occur.  Each returned interval is checked
    to consist of coprime-region cells.
    """
    if n % 2 == 0 or n < 5:
        raise NotApplicable("established only for odd N >= 5")
    lo = Fraction(1) if n in (5, 7) else surd(-3, 1, 9 + 4 * n, 2)
    region = ParamInterval(lo, alpha_max(n), True, False)
    for cell in kset(n):
        if compare_exact(cell.interval.lo, region.lo) >= 0:
            if not cell.in_k:
                raise RuntimeError(f"cell {cell.interval} in the region is not coprime")
            if any(math.gcd(n, d) != 1
                   for d in range(cell.digit_lo, cell.digit_hi + 1)):
                raise RuntimeError("digit sharing a factor with N inside the region")
    return [region]


def emit_kset_plot_data(n_max: int, precision: int = 6,
                        alpha_min: Fraction = DEFAULT_ALPHA_MIN) -> list[tuple]:
    """Rows (N, lo, hi, in_K, digit_lo, digit_hi) for N = 2..n_max.

    Endpoint decimals are display renderings of the exact cell boundaries
    at the requested precision; suitable for plotting the coprime region.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rows = []
    for n in range(2, n_max + 1):
        for cell in kset(n, alpha_min):
            rows.append((n, decimal_str(cell.interval.lo, precision),
                         decimal_str(cell.interval.hi, precision),
                         cell.in_k, cell.digit_lo, cell.digit_hi))
    return rows
