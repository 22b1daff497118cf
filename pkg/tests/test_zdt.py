import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from safe_moo import zdt

ALL_PROBLEMS = list(zdt.PROBLEMS)


def genome_strategy(problem):
    lo, hi = zdt.domain_bounds(problem)
    return st.lists(
        st.floats(0.0, 1.0, allow_nan=False), min_size=30, max_size=30
    ).map(lambda u: lo + (hi - lo) * np.array(u))


class TestDomains:
    def test_zdt1_all_unit(self):
        ds = zdt.domains("zdt1")
        assert len(ds) == 30
        assert all(d == zdt.GeneDomain(0.0, 1.0) for d in ds)

    def test_zdt3_all_unit(self):
        assert zdt.domains("zdt3") == [zdt.GeneDomain(0.0, 1.0)] * 30

    def test_zdt4_mixed(self):
        ds = zdt.domains("zdt4")
        assert ds[0] == zdt.GeneDomain(0.0, 1.0)
        assert ds[1:] == [zdt.GeneDomain(-5.0, 5.0)] * 29

    def test_unknown_problem_rejected(self):
        with pytest.raises(ValueError, match="unknown problem"):
            zdt.domains("zdt5")
        with pytest.raises(ValueError):
            zdt.evaluate("dtlz1", np.zeros(30))

    def test_bounds_match_domains(self):
        for problem in ALL_PROBLEMS:
            lo, hi = zdt.domain_bounds(problem)
            ds = zdt.domains(problem)
            assert np.array_equal(lo, [d.lo for d in ds])
            assert np.array_equal(hi, [d.hi for d in ds])

    def test_empty_domain_rejected(self):
        with pytest.raises(ValueError):
            zdt.GeneDomain(1.0, 1.0)


class TestEvaluate:
    def test_zdt1_zeros(self):
        assert zdt.evaluate("zdt1", np.zeros(30)) == (0.0, 1.0)

    def test_zdt2_half(self):
        x = np.zeros(30)
        x[0] = 0.5
        assert zdt.evaluate("zdt2", x) == (0.5, 0.75)

    def test_zdt1_ones(self):
        f1, f2 = zdt.evaluate("zdt1", np.ones(30))
        assert f1 == 1.0
        assert f2 == pytest.approx(1.0 - math.sqrt(0.1), abs=1e-12)

    def test_zdt4_quarter(self):
        x = np.zeros(30)
        x[0] = 0.25
        assert zdt.evaluate("zdt4", x) == (0.25, 0.5)

    def test_out_of_domain_rejected(self):
        x = np.zeros(30)
        x[3] = 1.5
        with pytest.raises(ValueError, match="domain"):
            zdt.evaluate("zdt1", x)
        x = np.zeros(30)
        x[1] = -5.0  # fine for zdt4, not for zdt1
        zdt.evaluate("zdt4", x)
        with pytest.raises(ValueError, match="domain"):
            zdt.evaluate("zdt1", x)

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            zdt.evaluate("zdt1", np.zeros(29))

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    def test_matches_scalar_oracle(self, problem):
        rng = np.random.default_rng(321)
        lo, hi = zdt.domain_bounds(problem)
        for _ in range(50):
            x = rng.uniform(lo, hi)
            got = zdt.evaluate(problem, x)
            want = oracles.zdt_objectives_scalar(problem, x)
            assert got[0] == pytest.approx(want[0], abs=1e-12)
            assert got[1] == pytest.approx(want[1], abs=1e-12)

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    def test_batch_rows_equal_single_calls(self, problem):
        rng = np.random.default_rng(5)
        lo, hi = zdt.domain_bounds(problem)
        batch = rng.uniform(lo, hi, size=(40, 30))
        out = zdt.evaluate_batch(problem, batch)
        for i in range(len(batch)):
            assert tuple(out[i]) == zdt.evaluate(problem, batch[i])


class TestEvaluateProperties:
    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_finite_and_f1_range(self, problem, data):
        x = data.draw(genome_strategy(problem))
        f1, f2 = zdt.evaluate(problem, x)
        assert math.isfinite(f1) and math.isfinite(f2)
        assert 0.0 <= f1 <= 1.0
        if problem != "zdt3":  # zdt3's f2 may legitimately go negative
            assert f2 >= 0.0

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    @settings(max_examples=25, deadline=None)
    @given(data=st.data())
    def test_pure_function(self, problem, data):
        x = data.draw(genome_strategy(problem))
        assert zdt.evaluate(problem, x) == zdt.evaluate(problem, x)

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    @settings(max_examples=50, deadline=None)
    @given(x1=st.floats(0.0, 1.0, allow_nan=False))
    def test_g_floor_when_tail_zero(self, problem, x1):
        # genes 2..30 at zero force g = 1, so f2 collapses to its analytic form
        x = np.zeros(30)
        x[0] = x1
        f1, f2 = zdt.evaluate(problem, x)
        assert f1 == x1
        if problem == "zdt2":
            want = 1.0 - x1**2
        elif problem == "zdt3":
            want = 1.0 - math.sqrt(x1) - x1 * math.sin(10 * math.pi * x1)
        else:
            want = 1.0 - math.sqrt(x1)
        assert f2 == pytest.approx(want, abs=1e-12)


class TestTrueFront:
    def test_zdt1_three_points(self):
        tf = zdt.true_front("zdt1", 3)
        assert tf.shape == (3, 2)
        assert np.allclose(tf[0], (0.0, 1.0), atol=0)
        assert tf[1][0] == 0.5 and tf[1][1] == pytest.approx(1 - math.sqrt(0.5), abs=1e-15)
        assert np.allclose(tf[2], (1.0, 0.0), atol=1e-15)

    def test_zdt2_two_points(self):
        tf = zdt.true_front("zdt2", 2)
        assert np.array_equal(tf, [[0.0, 1.0], [1.0, 0.0]])

    def test_zdt4_same_curve_as_zdt1(self):
        assert np.array_equal(zdt.true_front("zdt4", 100), zdt.true_front("zdt1", 100))

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    def test_sorted_and_sized(self, problem):
        tf = zdt.true_front(problem, 200)
        assert len(tf) <= 200
        if problem != "zdt3":
            assert len(tf) == 200
        assert np.all(np.diff(tf[:, 0]) > 0)

    @pytest.mark.parametrize("problem", ALL_PROBLEMS)
    def test_mutually_nondominated(self, problem):
        tf = zdt.true_front(problem, 1000)
        keep = oracles.brute_nondominated(tf)
        assert keep == list(range(len(tf)))

    def test_zdt3_disconnected(self):
        tf = zdt.true_front("zdt3", 1000)
        # the optimal curve has gaps, so consecutive f1 steps are uneven
        steps = np.diff(tf[:, 0])
        assert steps.max() > 5 * np.median(steps)

    def test_num_points_validated(self):
        with pytest.raises(ValueError):
            zdt.true_front("zdt1", 1)
