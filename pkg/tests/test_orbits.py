import math
import random
from fractions import Fraction

import pytest

from conftest import random_params, random_rational_in, random_surd_in
from nacf.exact import compare_exact, surd
from nacf.expansion import OutOfDomain, Params, expand, xi
from nacf.orbits import (NO_PERIOD, PERIODIC, REACHED_ONE,
                         discriminant_check, divisibility_diagnostics,
                         nonperiodicity_certificate, orbit_quadratic,
                         orbit_rational, quad_coefficients, reaches_one)


def test_worked_orbit_pre_period_and_period():
    trace = orbit_rational(Fraction(40, 33), Params(3, Fraction(73, 100)), 200)
    v = trace.verdict
    assert v.kind == PERIODIC
    assert (v.pre_period, v.period) == (25, 38)
    assert v.first_repeat == 63  # repetition-free head of length 63
    assert trace.states[63].value == trace.states[25].value
    assert len({st.value for st in trace.states[:63]}) == 63


def test_orbit_digits_match_expansion():
    p = Params(3, Fraction(73, 100))
    trace = orbit_rational(Fraction(40, 33), p, 200)
    n = len(trace.digits)
    assert expand(Fraction(40, 33), p, n).prefix == trace.digits


def test_fixed_point_one():
    trace = orbit_rational(Fraction(1), Params(5, Fraction(1, 2)), 5)
    assert trace.verdict.kind == REACHED_ONE
    assert (trace.verdict.pre_period, trace.verdict.period) == (0, 1)
    assert trace.digits == (4,)


def test_no_period_within_budget():
    trace = orbit_rational(Fraction(6, 5), Params(5, Fraction(11, 10)), 300)
    assert trace.verdict.kind == NO_PERIOD
    assert len(trace.states) == 301


def test_orbit_rejects_bad_inputs():
    with pytest.raises(OutOfDomain):
        orbit_rational(Fraction(5), Params(5, Fraction(11, 10)), 10)
    with pytest.raises(TypeError):
        orbit_rational(surd(0, 1, 2), Params(2, surd(-1, 1, 2)), 10)
    with pytest.raises(ValueError):
        orbit_rational(Fraction(6, 5), Params(5, Fraction(11, 10)), 0)


def test_raw_state_recurrence():
    rng = random.Random(20)
    for _ in range(40):
        p = random_params(rng)
        x = random_rational_in(p, rng)
        trace = orbit_rational(x, p, 40)
        for i, d in enumerate(trace.digits):
            cur, nxt = trace.states[i], trace.states[i + 1]
            assert nxt.t == p.N * cur.s - d * cur.t
            assert nxt.s == cur.t
            assert Fraction(nxt.t, nxt.s) == nxt.value


def test_raw_numerators_increase_above_one():
    rng = random.Random(21)
    done = 0
    while done < 25:
        p = random_params(rng)
        if compare_exact(p.alpha, 1) <= 0:
            continue
        x = random_rational_in(p, rng)
        trace = orbit_rational(x, p, 60)
        ts = [st.t for st in trace.states]
        assert all(u < v for u, v in zip(ts, ts[1:]))
        done += 1


def test_denominator_descent_below_threshold():
    # alpha <= xi(N) - 1: reduced denominators drop within one step on
    # [alpha, 1) and within two steps on (1, alpha+1), until the orbit sits at 1
    rng = random.Random(22)
    for n in (2, 3, 5, 8):
        p = Params(n, xi(n) - 1)
        for _ in range(15):
            x = random_rational_in(p, rng, den_max=50)
            trace = orbit_rational(x, p, 400)
            vals = [st.value for st in trace.states]
            dens = [v.denominator for v in vals]
            for i, v in enumerate(vals[:-2]):
                if v == 1:
                    break
                if v < 1:
                    assert dens[i + 1] < dens[i]
                else:
                    assert dens[i + 2] < dens[i]


def test_quadratic_orbit_coefficients():
    root2 = surd(0, 1, 2)
    trace = orbit_quadratic(root2, Params(2, root2 - 1), 10)
    st0, st1 = trace.states[0], trace.states[1]
    assert (st0.A, st0.B, st0.C) == (1, 0, -2)
    assert (st1.A, st1.B, st1.C) == (-2, -4, 2)
    assert trace.digits[0] == 1
    assert st1.value == root2 - 1
    assert discriminant_check(trace)
    assert trace.verdict.kind == PERIODIC


def test_quadratic_orbit_rejects_rationals():
    with pytest.raises(ValueError):
        orbit_quadratic(Fraction(2), Params(9, Fraction(3, 2)), 5)


def test_threshold_point_maps_to_left_end():
    x3 = xi(3)
    p = Params(3, x3 - 1)
    trace = orbit_quadratic(x3, p, 5)
    assert trace.digits[0] == 2  # N - 1
    assert trace.states[1].value == p.alpha


def test_quadratic_states_track_the_point():
    rng = random.Random(23)
    for _ in range(25):
        p = random_params(rng)
        x = random_surd_in(p, rng)
        trace = orbit_quadratic(x, p, 20)
        assert discriminant_check(trace)
        for st in trace.states:
            v = st.value
            assert st.A * v * v + st.B * v + st.C == 0
            centre = Fraction(-st.B, 2 * st.A)
            want = compare_exact(v, centre) * (1 if st.A > 0 else -1)
            assert st.root_sign == want
            # rebuild the selected root from the triple alone
            disc = st.B * st.B - 4 * st.A * st.C
            assert surd(-st.B, st.root_sign, disc, 2 * st.A) == v


def test_discriminant_ratio_follows_powers():
    rng = random.Random(24)
    p = Params(3, Fraction(7, 10))
    x = random_surd_in(p, rng)
    trace = orbit_quadratic(x, p, 20)
    disc0 = trace.states[0].B ** 2 - 4 * trace.states[0].A * trace.states[0].C
    for st in trace.states:
        disc = st.B ** 2 - 4 * st.A * st.C
        assert disc == 3 ** (2 * st.index) * disc0


def test_reaches_one():
    p = Params(2, Fraction(1, 3))
    for s in range(1, 13):
        for t in range(s, 3 * s):
            if math.gcd(t, s) != 1 or not p.contains(Fraction(t, s)):
                continue
            assert reaches_one(Fraction(t, s), p, 200)
    assert reaches_one(Fraction(7, 5), Params(4, Fraction(2, 5)), 200)
    assert not reaches_one(Fraction(6, 5), Params(5, Fraction(11, 10)), 300)


def test_divisibility_diagnostics_coprime_region():
    p = Params(5, Fraction(11, 10))
    trace = orbit_rational(Fraction(6, 5), p, 100)
    report = divisibility_diagnostics(trace, 5)
    assert not report.common_prime_found
    assert report.t_strictly_increasing
    assert all(r != 0 for r in report.raw_t_residues)


def test_divisibility_diagnostics_fixed_point():
    trace = orbit_rational(Fraction(1), Params(2, Fraction(1, 3)), 10)
    assert all(st.t == 1 and st.s == 1 for st in trace.states)


def test_divisibility_diagnostics_factor_persists():
    # 7 divides t0 = 7: the raw numerators keep the factor, while the
    # reduced numerators shed it after the first step and never regain it
    p = Params(7, Fraction(11, 10))
    trace = orbit_rational(Fraction(7, 6), p, 100)
    report = divisibility_diagnostics(trace, 7)
    assert all(r == 0 for r in report.raw_t_residues)
    assert all(r != 0 for r in report.reduced_t_residues[1:])
    assert report.t_strictly_increasing


def test_nonperiodicity_certificates():
    cert = nonperiodicity_certificate(Fraction(6, 5), Params(5, Fraction(11, 10)))
    assert cert.certified and cert.reason == "rational-in-K"
    cert = nonperiodicity_certificate(surd(1, 1, 2), Params(9, Fraction(19, 10)))
    assert cert.certified and cert.reason == "quadratic-in-K"
    assert quad_coefficients(surd(1, 1, 2)) == (1, -2, -1)
    # 1 is a fixed point: never certified
    assert not nonperiodicity_certificate(Fraction(1), Params(2, Fraction(1, 3))).certified
    # digits {2,3,4} share a factor with 9, and the named root falls outside
    # [3/2, 5/2] anyway: not certified
    assert not nonperiodicity_certificate(surd(5, 1, 13, 6), Params(9, Fraction(3, 2))).certified
    # even N declines the quadratic branch
    assert not nonperiodicity_certificate(surd(0, 1, 2), Params(2, surd(-1, 1, 2))).certified


def test_certificates_match_observed_behaviour():
    rng = random.Random(25)
    p = Params(5, Fraction(11, 10))
    for _ in range(10):
        x = random_rational_in(p, rng, den_max=30)
        assert nonperiodicity_certificate(x, p).certified
        assert orbit_rational(x, p, 250).verdict.kind == NO_PERIOD


def test_orbit_fast_path_matches_generic_digits_for_surd_alpha():
    # orbit_rational uses an integer-only floor for surd parameters; it must
    # agree with the generic exact digit path step by step
    rng = random.Random(27)
    from nacf.expansion import alpha_max
    params = [Params(n, xi(n) - 1) for n in (3, 5, 8)]
    params += [Params(n, alpha_max(n)) for n in (2, 3, 7)]
    for p in params:
        for _ in range(6):
            x = random_rational_in(p, rng, den_max=40)
            trace = orbit_rational(x, p, 30)
            assert expand(x, p, len(trace.digits)).prefix == trace.digits


def test_orbit_through_left_endpoint_adjustment():
    # at (5, 1) the quotient 5/1 - 1 = 4 is integral, so the digit at the
    # left endpoint drops to 3 and the orbit passes through alpha + 1 = 2
    p = Params(5, Fraction(1))
    trace = orbit_rational(Fraction(1), p, 50)
    assert trace.digits[0] == 3
    assert trace.states[1].value == Fraction(2)
    assert expand(Fraction(1), p, len(trace.digits)).prefix == trace.digits


def test_cycle_detection_is_sound():
    rng = random.Random(26)
    cases = [(Fraction(40, 33), Params(3, Fraction(73, 100)))]
    p2 = Params(2, Fraction(1, 3))
    cases += [(random_rational_in(p2, rng, den_max=30), p2) for _ in range(10)]
    for x, p in cases:
        trace = orbit_rational(x, p, 300)
        v = trace.verdict
        assert v.is_periodic
        start = trace.states[v.pre_period].value
        rerun = orbit_rational(start, p, v.period + 1)
        cycle = trace.digits[v.pre_period:v.pre_period + v.period]
        assert rerun.digits[:v.period] == cycle
        assert rerun.states[v.period].value == start


def test_trace_json_lines():
    trace = orbit_rational(Fraction(1), Params(5, Fraction(1, 2)), 5)
    lines = trace.json_lines()
    assert lines[0] == {"n": 0, "digit": 4, "value": "1", "t": 1, "s": 1}
    qtrace = orbit_quadratic(surd(0, 1, 2), Params(2, surd(-1, 1, 2)), 3)
    assert {"A", "B", "C", "digit", "n", "value"} == set(qtrace.json_lines()[0])
