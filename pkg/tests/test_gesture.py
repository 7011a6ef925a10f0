"""Sample validation, cleaning, transforms and the analytic fixtures."""

import math

import numpy as np
import pytest

from ftlshape.errors import (NonmonotoneTime, TooFewPoints, UnnormalizedTime,
                             ZeroDelta, ZeroScale)
from ftlshape.geometry import Vec2
from ftlshape.gesture import (TimedPoint, circle,
                              clean_stroke, fixtures, line, parabola, spiral,
                              transform, uniform_sample, validate_sample,
                              wave)

from support import random_sample


def tp(t, x, y):
    return TimedPoint(t, Vec2(x, y))


class TestValidateSample:
    def test_minimal_valid(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        assert g.n == 2

    def test_zero_delta_reports_index(self):
        with pytest.raises(ZeroDelta) as err:
            validate_sample([tp(0, 0, 0), tp(0.5, 0, 0), tp(1, 1, 1)])
        assert err.value.index == 1

    def test_too_few_points(self):
        with pytest.raises(TooFewPoints):
            validate_sample([tp(0, 0, 0), tp(1, 1, 0)])

    def test_nonmonotone_time(self):
        with pytest.raises(NonmonotoneTime):
            validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(0.5, 2, 0),
                             tp(1, 3, 0)])

    def test_unnormalized_time(self):
        with pytest.raises(UnnormalizedTime):
            validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(0.9, 1, 1)])

    def test_near_duplicate_at_scale_is_zero_delta(self):
        with pytest.raises(ZeroDelta):
            validate_sample([tp(0, 0, 0), tp(0.5, 1e-15, 0), tp(1, 1, 1)])


class TestUniformSample:
    def test_unit_circle_quarters(self):
        g = uniform_sample(circle(), 4)
        expected = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)]
        for point, (ex, ey) in zip(g.positions(), expected):
            assert point.x == pytest.approx(ex, abs=1e-15)
            assert point.y == pytest.approx(ey, abs=1e-15)

    def test_line_has_constant_deltas(self):
        g = uniform_sample(line(vx=2.0, vy=-1.0), 8)
        deltas = [b - a for a, b in zip(g.positions(), g.positions()[1:])]
        for d in deltas:
            assert d.x == pytest.approx(0.25, rel=1e-12)
            assert d.y == pytest.approx(-0.125, rel=1e-12)

    def test_n_below_two_rejected(self):
        with pytest.raises(ValueError):
            uniform_sample(circle(), 1)

    @pytest.mark.parametrize("name", sorted(fixtures()))
    @pytest.mark.parametrize("n", [2, 3, 7, 100, 10000])
    def test_fixtures_validate_at_all_sizes(self, name, n):
        g = uniform_sample(fixtures()[name], n)
        assert g.n == n


class TestCleanStroke:
    def test_doubled_point_merged(self):
        g = clean_stroke([(10, Vec2(0, 0)), (20, Vec2(1, 0)),
                          (25, Vec2(1, 0)), (30, Vec2(1, 1))])
        assert g.n == 2

    def test_time_normalization(self):
        g = clean_stroke([(10, Vec2(0, 0)), (20, Vec2(1, 0)),
                          (30, Vec2(1, 1))])
        assert g.timestamps() == [0.0, 0.5, 1.0]

    def test_all_points_identical(self):
        with pytest.raises(TooFewPoints):
            clean_stroke([(10, Vec2(1, 1)), (20, Vec2(1, 1)),
                          (30, Vec2(1, 1))])

    def test_duplicate_timestamps_tie_broken(self):
        g = clean_stroke([(10, Vec2(0, 0)), (10, Vec2(1, 0)),
                          (20, Vec2(2, 0)), (30, Vec2(3, 0))])
        ts = g.timestamps()
        assert ts[0] == 0.0 and ts[-1] == 1.0
        assert all(b > a for a, b in zip(ts, ts[1:]))

    def test_idempotent(self):
        rng = np.random.default_rng(3)
        g = random_sample(rng, 20)
        raw = [(tp.t * 1000.0, tp.p) for tp in g.points]
        once = clean_stroke(raw)
        twice = clean_stroke([(tp.t, tp.p) for tp in once.points])
        assert twice == once


class TestTransform:
    def test_identity(self):
        rng = np.random.default_rng(5)
        g = random_sample(rng, 12)
        assert transform(g, Vec2(0, 0), 1.0, 0.0) == g

    def test_quarter_rotation(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        r = transform(g, Vec2(0, 0), 1.0, math.pi / 2)
        assert r.points[1].p.x == pytest.approx(0.0, abs=1e-15)
        assert r.points[1].p.y == pytest.approx(1.0, rel=1e-15)

    def test_negative_scale_is_point_negation(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        r = transform(g, Vec2(0, 0), -1.0, 0.0)
        for a, b in zip(g.positions(), r.positions()):
            assert b.x == -a.x and b.y == -a.y
        validate_sample(r.points)  # still a valid sample

    def test_zero_scale_rejected(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        with pytest.raises(ZeroScale):
            transform(g, Vec2(1, 1), 0.0, 0.3)

    def test_timestamps_preserved_exactly(self):
        rng = np.random.default_rng(11)
        g = random_sample(rng, 30)
        r = transform(g, Vec2(2, -3), 1.7, 0.9)
        assert r.timestamps() == g.timestamps()


class TestFixtureDerivatives:
    """Guard the hand-derived d1/d2 with finite differences."""

    GRID = np.linspace(1e-4, 1.0 - 1e-4, 1000)

    @pytest.mark.parametrize("name", sorted(fixtures()))
    def test_first_derivative(self, name):
        g = fixtures()[name]
        h = 1e-5
        worst = 0.0
        for t in self.GRID:
            fd = (g.z(t + h) - g.z(t - h)) / (2 * h)
            d1 = g.dz(t)
            worst = max(worst, abs(fd - d1) / (1.0 + abs(d1)))
        assert worst <= 1e-6

    @pytest.mark.parametrize("name", sorted(fixtures()))
    def test_second_derivative(self, name):
        g = fixtures()[name]
        h = 1e-5
        worst = 0.0
        for t in self.GRID:
            fd = (g.z(t + h) - 2 * g.z(t) + g.z(t - h)) / (h * h)
            d2 = g.ddz(t)
            worst = max(worst, abs(fd - d2) / (1.0 + abs(d2)))
        assert worst <= 1e-4

    def test_circle_start_point(self):
        g = circle()
        assert g.at(0.0).x == pytest.approx(1.0)
        assert g.at(0.0).y == pytest.approx(0.0, abs=1e-15)

    def test_circle_start_velocity(self):
        v = circle().d1(0.0)
        assert v.x == pytest.approx(0.0, abs=1e-12)
        assert v.y == pytest.approx(2 * math.pi, rel=1e-15)

    def test_parabola_constant_second_derivative(self):
        g = parabola()
        for t in (0.0, 0.3, 1.0):
            assert g.d2(t) == Vec2(0.0, 2.0)

    def test_regularity_on_grid(self):
        for name, g in fixtures().items():
            speeds = [math.hypot(g.d1(t).x, g.d1(t).y) for t in self.GRID]
            assert min(speeds) > 1e-3, name

    def test_fixture_table_names(self):
        assert sorted(fixtures()) == ["circle", "line", "parabola", "spiral",
                                      "wave"]
