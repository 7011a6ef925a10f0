"""Template matching over the shape dissimilarity.

Candidate and templates are resampled onto a common uniform timestamp
grid by linear interpolation in time (not arc length: the dissimilarity
is defined on isochronous samples, so time parametrization must be
preserved), then ranked by distance.  The store is a JSON file of
labeled gestures guarded by a lock for concurrent readers.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (EmptyStore, MalformedStore, ShapeError, StoreIOError,
                     TooFewPoints, ZeroDelta)
from .ftl import ftl, wftl
from .gesture import (SampledGesture, TimedPoint, merge_duplicate_points,
                      validate_sample)
from .geometry import Vec2
from .jsonio import dumps, gesture_from_obj, gesture_to_obj

DEFAULT_RESAMPLE_N = 32


@dataclass(frozen=True)
class Template:
    id: str
    label: str
    gesture: SampledGesture


@dataclass(frozen=True)
class RankedMatch:
    label: str
    template_id: str
    distance: float

    def to_json(self) -> dict:
        return {"label": self.label, "template_id": self.template_id,
                "distance": self.distance}


@dataclass(frozen=True)
class RecognitionResult:
    ranked: tuple[RankedMatch, ...]
    resample_n: int
    skipped: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"ranked": [m.to_json() for m in self.ranked],
                "resample_n": self.resample_n,
                "skipped": list(self.skipped)}


class TemplateStore:
    """Labeled gesture templates; many readers, one writer at a time."""

    def __init__(self, templates: Iterable[Template] = ()):
        self._lock = threading.Lock()
        self._templates: dict[str, Template] = {}
        for t in templates:
            self._templates[t.id] = t

    def __len__(self) -> int:
        with self._lock:
            return len(self._templates)

    def get(self, template_id: str) -> Template | None:
        with self._lock:
            return self._templates.get(template_id)

    def put(self, template: Template) -> None:
        with self._lock:
            self._templates[template.id] = template

    def remove(self, template_id: str) -> bool:
        with self._lock:
            return self._templates.pop(template_id, None) is not None

    def all(self) -> list[Template]:
        with self._lock:
            return sorted(self._templates.values(), key=lambda t: t.id)


def _interpolate(ts: Sequence[float], xs: Sequence[float],
                 ys: Sequence[float], n: int) -> list[TimedPoint]:
    grid = [k / n for k in range(n + 1)]
    nx = np.interp(grid, ts, xs)
    ny = np.interp(grid, ts, ys)
    return [TimedPoint(t, Vec2(float(x), float(y)))
            for t, x, y in zip(grid, nx, ny)]


def resample_uniform(g: SampledGesture, n: int) -> SampledGesture:
    """Resample onto the uniform grid k/n by linear interpolation in t.

    A path that doubles back can place two grid points on the same
    position; such duplicates are merged and the gesture is resampled
    once more with n - 1 before giving up.
    """
    if n < 2:
        raise ValueError(f"resample_uniform needs n >= 2, got {n}")
    ts = g.timestamps()
    xs = [tp.p.x for tp in g.points]
    ys = [tp.p.y for tp in g.points]
    try:
        return validate_sample(_interpolate(ts, xs, ys, n))
    except ZeroDelta:
        merged = merge_duplicate_points(_interpolate(ts, xs, ys, n))
        if len(merged) < 3:
            raise TooFewPoints(
                "gesture collapses under resampling") from None
        # renormalize the merged timestamps (the endpoint may have merged)
        t0, t1 = merged[0].t, merged[-1].t
        mts = [(tp.t - t0) / (t1 - t0) for tp in merged]
        return validate_sample(
            _interpolate(mts, [tp.p.x for tp in merged],
                         [tp.p.y for tp in merged], n - 1))


def recognize(candidate: SampledGesture, store: TemplateStore,
              n: int = DEFAULT_RESAMPLE_N,
              mode: str = "uniform") -> RecognitionResult:
    """Rank all stored templates by distance to the candidate.

    Templates that fail to resample are skipped, not fatal.  Ties are
    broken by template id.
    """
    if mode not in ("uniform", "weighted"):
        raise ValueError(f"unknown recognition mode {mode!r}")
    templates = store.all()
    if not templates:
        raise EmptyStore("no templates in store")
    distance = ftl if mode == "uniform" else wftl
    cand = resample_uniform(candidate, n)
    ranked = []
    skipped = []
    for tpl in templates:
        try:
            value = distance(cand, resample_uniform(tpl.gesture, n)).value
        except ShapeError:
            skipped.append(tpl.id)
            continue
        ranked.append(RankedMatch(tpl.label, tpl.id, value))
    ranked.sort(key=lambda m: (m.distance, m.template_id))
    return RecognitionResult(tuple(ranked), n, tuple(skipped))


def store_save(store: TemplateStore, path: str | Path) -> None:
    """Write the store atomically; numbers survive the roundtrip exactly."""
    obj = {"templates": [gesture_to_obj(t.gesture, t.id, t.label)
                         for t in store.all()]}
    tmp = Path(str(path) + ".tmp")
    try:
        tmp.write_text(dumps(obj) + "\n", encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise StoreIOError(f"cannot write store {path}: {exc}") from exc


def store_load(path: str | Path) -> TemplateStore:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StoreIOError(f"cannot read store {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedStore(None, f"store {path} is not valid JSON: {exc}")
    if not isinstance(obj, dict) or not isinstance(obj.get("templates"), list):
        raise MalformedStore(None, f"store {path} needs a 'templates' list")
    templates = []
    for entry in obj["templates"]:
        gid = entry.get("id") if isinstance(entry, dict) else None
        try:
            gesture, gid, label = gesture_from_obj(entry)
        except ShapeError as exc:
            raise MalformedStore(
                gid, f"template {gid!r} is invalid: {exc}") from exc
        if not gid or label is None:
            raise MalformedStore(
                gid, f"template {gid!r} needs an id and a label")
        templates.append(Template(gid, label, gesture))
    return TemplateStore(templates)
