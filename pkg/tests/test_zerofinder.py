import math

import numpy as np
import pytest

from hardyzeta.errors import BracketError, ContourError, DomainError
from hardyzeta.hilbert import Interval, SampledFunction
from hardyzeta.zerofinder import (
    argument_principle_count,
    find_critical_zeros,
    hardy_em_function,
    lehmer_scan,
    refine_zero,
    scan_sign_changes,
    zero_count_estimate,
)
from hardyzeta.zetaeval import EvalConfig, davenport_heilbronn, zeta_em

SIN = SampledFunction(math.sin, "sin")

# Frozen: first critical-line zero, refined on the Euler-Maclaurin route
# at tol 1e-12 and confirmed by the em_terms=1e4 oracle (agreement 1.1e-13).
FIRST_ZERO = 14.134725141734693


class TestScan:
    def test_sin_three_brackets(self):
        brackets = scan_sign_changes(SIN, Interval(1.0, 10.0), 0.1)
        assert len(brackets) == 3
        for (lo, hi), ref in zip(brackets, (math.pi, 2 * math.pi, 3 * math.pi)):
            assert lo < ref < hi

    def test_constant_no_brackets(self):
        f = SampledFunction(lambda x: 1.0, "1")
        assert scan_sign_changes(f, Interval(0.0, 5.0), 0.1) == []

    def test_exact_grid_zero_expanded(self):
        f = SampledFunction(lambda x: x - 2.0, "x-2")
        brackets = scan_sign_changes(f, Interval(0.0, 4.0), 1.0)
        assert len(brackets) == 1
        lo, hi = brackets[0]
        assert lo == pytest.approx(1.9) and hi == pytest.approx(2.1)

    def test_step_domain(self):
        with pytest.raises(DomainError):
            scan_sign_changes(SIN, Interval(0.0, 1.0), 2.0)
        with pytest.raises(DomainError):
            scan_sign_changes(SIN, Interval(0.0, 1.0), 0.0)

    def test_hardy_brackets_up_to_50(self):
        from hardyzeta.zerofinder import hardy_rs_function

        brackets = scan_sign_changes(hardy_rs_function(),
                                     Interval(2 * math.pi + 1e-9, 50.0), 0.01)
        assert len(brackets) == 10


class TestRefine:
    def test_pi_to_twelve_digits(self):
        r = refine_zero(SIN, (3.0, 3.3), 1e-12)
        assert abs(r.location - math.pi) < 1e-12
        assert r.simple
        assert r.bracket == (3.0, 3.3)
        assert r.bracket[0] < r.location < r.bracket[1]
        assert r.residual < 1e-12

    def test_no_sign_change_rejected(self):
        square = SampledFunction(lambda x: x * x, "x^2")
        with pytest.raises(BracketError):
            refine_zero(square, (-1.0, 1.0))

    def test_derivative_estimate(self):
        r = refine_zero(SIN, (3.0, 3.3), 1e-10)
        assert r.derivative == pytest.approx(math.cos(math.pi), abs=1e-4)


class TestCountEstimate:
    def test_monotone(self):
        ts = np.linspace(10.0, 500.0, 40)
        vals = [zero_count_estimate(float(t)) for t in ts]
        assert all(a < b for a, b in zip(vals[:-1], vals[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            zero_count_estimate(6.0)

    @pytest.mark.parametrize("T,count", [(30.0, 3), (50.0, 10), (80.0, 21),
                                         (100.0, 29)])
    def test_within_one_of_scan(self, T, count):
        assert abs(zero_count_estimate(T) - count) <= 1.0


class TestCriticalZeros:
    def test_census_and_first_zero(self):
        recs = find_critical_zeros(Interval(2 * math.pi + 1e-9, 100.0),
                                   step=0.01)
        assert len(recs) == 29
        assert abs(recs[0].location - FIRST_ZERO) < 1e-9
        assert all(r.simple for r in recs)

    def test_step_halving_stable(self):
        iv = Interval(2 * math.pi + 1e-9, 50.0)
        a = find_critical_zeros(iv, step=0.01)
        b = find_critical_zeros(iv, step=0.005)
        assert len(a) == len(b) == 10
        assert max(abs(x.location - y.location) for x, y in zip(a, b)) < 1e-9

    def test_residuals_tiny_relative_to_local_scale(self):
        recs = find_critical_zeros(Interval(10.0, 60.0), step=0.01, tol=1e-12)
        z = hardy_em_function()
        for r in recs:
            local = max(abs(z.eval(r.location - 0.01)),
                        abs(z.eval(r.location + 0.01)),
                        abs(z.eval(r.bracket[0])), abs(z.eval(r.bracket[1])))
            assert r.residual < 1e-8 * local

    def test_em_config_stability(self):
        hi = EvalConfig(em_terms=10**4)
        a = refine_zero(hardy_em_function(), (14.0, 14.2), 1e-12)
        b = refine_zero(hardy_em_function(hi), (14.0, 14.2), 1e-12)
        assert abs(a.location - b.location) < 1e-9
        assert abs(a.location - FIRST_ZERO) < 1e-9

    def test_domain_limits(self):
        with pytest.raises(DomainError):
            find_critical_zeros(Interval(1.0, 20.0))
        with pytest.raises(DomainError):
            find_critical_zeros(Interval(9000.0, 10001.0))


class TestLehmer:
    def test_empty_zero_set(self):
        # no Hardy zeros below 14.13, so nothing to pair
        assert lehmer_scan(Interval(7.0, 13.0), threshold=math.inf) == []

    def test_no_close_pairs_low(self):
        assert lehmer_scan(Interval(10.0, 100.0), threshold=0.05) == []

    def test_classic_pair(self):
        pairs = lehmer_scan(Interval(7000.0, 7010.0), threshold=0.2)
        assert len(pairs) == 1
        p = pairs[0]
        assert abs(p.t_low - 7005.06) < 0.01
        assert abs(p.t_high - 7005.10) < 0.01
        assert p.normalized_gap < 0.2
        assert 0.0 < p.min_between < 0.01
        z = hardy_em_function()
        assert abs(z.eval(p.t_low)) < 1e-6
        assert abs(z.eval(p.t_high)) < 1e-6

    def test_infinite_threshold_returns_all_gaps(self):
        pairs = lehmer_scan(Interval(10.0, 50.0), threshold=math.inf)
        # 10 zeros -> 9 consecutive gaps
        assert len(pairs) == 9
        assert all(p.t_low < p.t_high for p in pairs)

    def test_gap_normalization_mean(self):
        pairs = lehmer_scan(Interval(10.0, 1000.0), threshold=math.inf)
        gaps = [p.normalized_gap for p in pairs]
        assert len(gaps) > 600
        assert abs(float(np.mean(gaps)) - 1.0) < 0.05


class TestArgumentPrinciple:
    def test_linear_single_zero(self):
        f = lambda z: z - complex(0.7, 85.0)
        assert argument_principle_count(f, (0.5, 1.0, 80.0, 90.0), 64) == 1

    def test_zeta_box_empty(self):
        assert argument_principle_count(zeta_em, (0.6, 0.9, 10.0, 50.0),
                                        256) == 0

    def test_dh_box_has_offline_zero(self):
        c1 = argument_principle_count(davenport_heilbronn,
                                      (0.51, 1.0, 80.0, 90.0), 128)
        c2 = argument_principle_count(davenport_heilbronn,
                                      (0.51, 1.0, 80.0, 90.0), 256)
        assert c1 >= 1
        assert c1 == c2

    def test_zero_on_contour_rejected(self):
        f = lambda z: z - complex(0.5, 85.0)
        with pytest.raises(ContourError):
            argument_principle_count(f, (0.5, 1.0, 80.0, 90.0), 64)

    def test_degenerate_box(self):
        with pytest.raises(DomainError):
            argument_principle_count(zeta_em, (0.9, 0.6, 10.0, 50.0), 64)
