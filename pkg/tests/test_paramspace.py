import math
import random
from fractions import Fraction

import pytest

from nacf.exact import compare_exact, is_rational, rational_between, surd
from nacf.expansion import Params, alpha_max, digit_set
from nacf.paramspace import (NotApplicable, digit_breakpoints,
                             emit_kset_plot_data, kset, no_matching_regions)


def satisfies_breakpoint_equation(beta, n):
    upper = Fraction(n) / beta - beta
    if is_rational(upper) and upper.denominator == 1:
        return True
    lower = Fraction(n) / (beta + 1) - beta
    return is_rational(lower) and lower.denominator == 1


def test_breakpoints_for_two():
    bps = digit_breakpoints(2)
    assert surd(-5, 1, 33, 2) in bps          # root of a^2 + 5a - 2
    assert surd(-1, 1, 3) not in bps          # 0.73... lies past sqrt(2)-1
    assert all(satisfies_breakpoint_equation(b, 2) for b in bps)


def test_breakpoints_for_five():
    bps = digit_breakpoints(5)
    assert surd(-3, 1, 29, 2) in bps          # upper-digit jump inside (1, edge)
    assert surd(-1, 1, 21, 2) not in bps      # 1.79... exceeds sqrt(5)-1
    edge = alpha_max(5)
    assert all(compare_exact(b, edge) <= 0 for b in bps)
    assert all(compare_exact(Fraction(1, 100), b) < 0 for b in bps)


def test_breakpoints_sorted_distinct():
    for n in (2, 5, 9):
        bps = digit_breakpoints(n)
        assert all(compare_exact(a, b) < 0 for a, b in zip(bps, bps[1:]))


def test_kset_cells_for_five():
    cells = kset(5)
    last, second_last = cells[-1], cells[-2]
    assert second_last.interval.lo == Fraction(1)
    assert second_last.interval.hi == surd(-3, 1, 29, 2)
    assert (second_last.digit_lo, second_last.digit_hi) == (1, 3)
    assert last.interval.hi == alpha_max(5)
    assert (last.digit_lo, last.digit_hi) == (1, 2)
    for cell in cells:
        if compare_exact(cell.interval.lo, Fraction(1)) >= 0:
            assert cell.in_k


def test_kset_cells_for_nine():
    xi9 = surd(-3, 1, 45, 2)
    for cell in kset(9):
        if compare_exact(cell.interval.lo, xi9) >= 0:
            assert (cell.digit_lo, cell.digit_hi) == (1, 2)
            assert cell.in_k


def test_kset_cells_for_two():
    cells = kset(2)
    last = cells[-1]
    assert (last.digit_lo, last.digit_hi) == (1, 4)
    assert not last.in_k
    for cell in cells:
        assert cell.in_k == all(math.gcd(2, d) == 1
                                for d in range(cell.digit_lo, cell.digit_hi + 1))


def test_kset_tiling_and_constancy():
    rng = random.Random(40)
    for n in (2, 5, 12):
        cells = kset(n)
        assert cells[0].interval.lo == Fraction(1, 100)
        assert cells[-1].interval.hi == alpha_max(n)
        for a, b in zip(cells, cells[1:]):
            assert a.interval.hi == b.interval.lo
        for cell in rng.sample(cells, 12):
            lo, hi = cell.interval.lo, cell.interval.hi
            mid = rational_between(lo, hi)
            samples = [mid, rational_between(lo, mid), rational_between(mid, hi)]
            for s in samples:
                ds = digit_set(Params(n, s))
                assert (ds.start, ds.stop - 1) == (cell.digit_lo, cell.digit_hi)
                assert cell.in_k == all(math.gcd(n, d) == 1 for d in ds)


def test_no_matching_regions():
    (r5,) = no_matching_regions(5)
    assert r5.lo == Fraction(1) and r5.hi == alpha_max(5)
    (r7,) = no_matching_regions(7)
    assert r7.lo == Fraction(1) and r7.hi == alpha_max(7)
    (r9,) = no_matching_regions(9)
    assert r9.lo == surd(-3, 1, 45, 2) and r9.hi == Fraction(2)
    for bad in (6, 4, 3, 2):
        with pytest.raises(NotApplicable):
            no_matching_regions(bad)


def test_plot_rows():
    rows = emit_kset_plot_data(5)
    assert (5, "1.000000", "1.192582", True, 1, 3) in rows
    assert (5, "1.192582", "1.236068", True, 1, 2) in rows
    two_rows = [r for r in rows if r[0] == 2]
    assert two_rows[0][1] == "0.010000"
    assert two_rows[-1][2] == "0.414214"
    for a, b in zip(two_rows, two_rows[1:]):
        assert a[2] == b[1]  # rendered endpoints chain without gaps
    assert emit_kset_plot_data(3, precision=3)[0][1] == "0.010"
