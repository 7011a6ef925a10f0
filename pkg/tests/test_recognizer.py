"""Resampling, ranking and the persistent template store."""

import json

import numpy as np
import pytest

from ftlshape.errors import EmptyStore, MalformedStore, StoreIOError
from ftlshape.geometry import Vec2
from ftlshape.gesture import (TimedPoint, fixtures, transform,
                              uniform_sample, validate_sample)
from ftlshape.recognizer import (Template, TemplateStore, recognize,
                                 resample_uniform, store_load, store_save)

from support import random_sample, random_similarity


def tp(t, x, y):
    return TimedPoint(t, Vec2(x, y))


def fixture_store(n: int = 64) -> TemplateStore:
    return TemplateStore([
        Template(name, name, uniform_sample(g, n))
        for name, g in fixtures().items()
    ])


class TestResample:
    def test_on_grid_input_unchanged(self):
        rng = np.random.default_rng(1)
        g = random_sample(rng, 16)
        r = resample_uniform(g, 16)
        for a, b in zip(g.points, r.points):
            assert abs(a.p.x - b.p.x) <= 1e-15
            assert abs(a.p.y - b.p.y) <= 1e-15
            assert a.t == b.t

    def test_three_points_to_five(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        r = resample_uniform(g, 4)
        assert r.n == 4
        assert r.positions()[1] == Vec2(0.5, 0.0)
        assert r.positions()[3] == Vec2(1.0, 0.5)

    def test_reversal_path_triggers_merge_retry(self):
        # doubling straight back puts two grid points on the same spot
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 0, 0)])
        r = resample_uniform(g, 5)
        assert r.n in (4, 5)
        validate_sample(r.points)

    def test_small_n_rejected(self):
        g = validate_sample([tp(0, 0, 0), tp(0.5, 1, 0), tp(1, 1, 1)])
        with pytest.raises(ValueError):
            resample_uniform(g, 1)


class TestRecognize:
    def test_exact_template_echo(self):
        store = fixture_store()
        candidate = uniform_sample(fixtures()["spiral"], 64)
        result = recognize(candidate, store, n=32)
        assert result.ranked[0].label == "spiral"
        assert result.ranked[0].distance == pytest.approx(0.0, abs=1e-12)
        assert result.resample_n == 32

    def test_transformed_template_recognized(self):
        rng = np.random.default_rng(23)
        store = fixture_store()
        for name in fixtures():
            candidate = uniform_sample(fixtures()[name], 64)
            v, lam, theta = random_similarity(rng)
            moved = transform(candidate, v, lam, theta)
            result = recognize(moved, store, n=32)
            assert result.ranked[0].label == name
            assert result.ranked[0].distance < 1e-8

    def test_ranking_is_sorted_and_complete(self):
        store = fixture_store()
        candidate = uniform_sample(fixtures()["circle"], 40)
        result = recognize(candidate, store, n=32)
        distances = [m.distance for m in result.ranked]
        assert distances == sorted(distances)
        assert {m.template_id for m in result.ranked} == set(fixtures())
        assert result.skipped == ()

    def test_circle_beats_line_for_arc(self):
        store = TemplateStore([
            Template("circle", "circle", uniform_sample(fixtures()["circle"], 64)),
            Template("line", "line", uniform_sample(fixtures()["line"], 64)),
        ])
        candidate = uniform_sample(fixtures()["circle"], 100)
        result = recognize(candidate, store, n=32)
        assert result.ranked[0].label == "circle"
        assert result.ranked[1].distance > 1.0

    def test_tie_broken_by_template_id(self):
        g = uniform_sample(fixtures()["line"], 16)
        store = TemplateStore([Template("b", "x", g), Template("a", "x", g)])
        result = recognize(g, store, n=8)
        assert [m.template_id for m in result.ranked] == ["a", "b"]

    def test_uniform_equals_weighted_on_dyadic_grid(self):
        store = fixture_store()
        candidate = uniform_sample(fixtures()["wave"], 64)
        a = recognize(candidate, store, n=32, mode="uniform")
        b = recognize(candidate, store, n=32, mode="weighted")
        assert [(m.template_id, m.distance) for m in a.ranked] == \
               [(m.template_id, m.distance) for m in b.ranked]

    def test_empty_store_rejected(self):
        with pytest.raises(EmptyStore):
            recognize(uniform_sample(fixtures()["line"], 8), TemplateStore())

    def test_bad_template_skipped(self):
        # a zigzag whose period matches the coarse grid collapses onto a
        # single position and cannot be resampled at n=2
        bad = validate_sample([tp(0, 0, 0), tp(0.25, 1, 0), tp(0.5, 0, 0),
                               tp(0.75, 1, 0), tp(1, 0, 0)])
        store = TemplateStore([
            Template("good", "circle", uniform_sample(fixtures()["circle"], 64)),
            Template("bad", "zigzag", bad),
        ])
        candidate = uniform_sample(fixtures()["circle"], 48)
        result = recognize(candidate, store, n=2)
        assert result.skipped == ("bad",)
        assert [m.template_id for m in result.ranked] == ["good"]


class TestStore:
    def test_roundtrip_deep_equality(self, tmp_path):
        rng = np.random.default_rng(31)
        store = TemplateStore([
            Template("a", "alpha", random_sample(rng, 12)),
            Template("b", "beta", random_sample(rng, 20)),
        ])
        path = tmp_path / "store.json"
        store_save(store, path)
        loaded = store_load(path)
        assert loaded.all() == store.all()

    def test_empty_roundtrip(self, tmp_path):
        path = tmp_path / "store.json"
        store_save(TemplateStore(), path)
        assert store_load(path).all() == []

    def test_zero_delta_template_names_offender(self, tmp_path):
        path = tmp_path / "store.json"
        path.write_text(json.dumps({"templates": [{
            "id": "broken", "label": "x",
            "points": [{"t": 0.0, "x": 0, "y": 0},
                       {"t": 0.5, "x": 0, "y": 0},
                       {"t": 1.0, "x": 1, "y": 1}],
        }]}))
        with pytest.raises(MalformedStore) as err:
            store_load(path)
        assert err.value.template_id == "broken"

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(StoreIOError):
            store_load(tmp_path / "absent.json")

    def test_not_json_is_malformed(self, tmp_path):
        path = tmp_path / "store.json"
        path.write_text("not json at all")
        with pytest.raises(MalformedStore):
            store_load(path)

    def test_store_crud(self):
        store = TemplateStore()
        g = uniform_sample(fixtures()["line"], 8)
        store.put(Template("t1", "line", g))
        assert len(store) == 1
        assert store.get("t1").label == "line"
        assert store.remove("t1") is True
        assert store.remove("t1") is False
        assert len(store) == 0
