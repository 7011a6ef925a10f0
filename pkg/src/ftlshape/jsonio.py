"""JSON forms for gestures and reports.

Floats are emitted with 17 significant digits so report files are
diff-stable and parse back to the exact same doubles.

Gesture schema: {"id": str|null, "label": str|null, "points": [...]}.
Each point is either {"t": t, "x": x, "y": y} with t already normalized
to [0, 1], or {"ms": milliseconds, "x": x, "y": y} for raw device
strokes, which are run through `clean_stroke`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .errors import MalformedGesture
from .gesture import SampledGesture, TimedPoint, clean_stroke, validate_sample
from .geometry import Vec2


def fmt17(x) -> str:
    """Format a number with 17 significant digits (lossless for doubles)."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"not a number: {x!r}")
    if isinstance(x, int):
        return str(x)
    return format(x, ".17g")


def dumps(obj) -> str:
    """json.dumps with every float at 17 significant digits."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt17(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _number(obj: dict, key: str, index: int) -> float:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise MalformedGesture(
            index, f"point {index}: field {key!r} must be a number, got {v!r}")
    return float(v)


def points_from_obj(points: Sequence[dict]) -> SampledGesture:
    """Build a validated gesture from the JSON point list."""
    if not isinstance(points, (list, tuple)):
        raise MalformedGesture(None, "'points' must be a list")
    for k, pt in enumerate(points):
        if not isinstance(pt, dict):
            raise MalformedGesture(k, f"point {k} must be an object")
    timed = all("t" in pt for pt in points)
    raw = all("ms" in pt for pt in points)
    if timed:
        return validate_sample([
            TimedPoint(_number(pt, "t", k),
                       Vec2(_number(pt, "x", k), _number(pt, "y", k)))
            for k, pt in enumerate(points)])
    if raw:
        return clean_stroke([
            (_number(pt, "ms", k),
             Vec2(_number(pt, "x", k), _number(pt, "y", k)))
            for k, pt in enumerate(points)])
    bad = next((k for k, pt in enumerate(points) if "t" not in pt),
               next(k for k, pt in enumerate(points) if "ms" not in pt))
    raise MalformedGesture(
        bad, f"point {bad}: every point needs a 't' (normalized) field, "
             "or every point an 'ms' (raw) field")


def gesture_from_obj(obj: dict) -> tuple[SampledGesture, str | None, str | None]:
    """Parse a gesture object; returns (gesture, id, label)."""
    if not isinstance(obj, dict) or "points" not in obj:
        raise MalformedGesture(None, "gesture JSON needs a 'points' list")
    gid = obj.get("id")
    label = obj.get("label")
    if gid is not None and not isinstance(gid, str):
        raise MalformedGesture(None, "'id' must be a string when present")
    if label is not None and not isinstance(label, str):
        raise MalformedGesture(None, "'label' must be a string when present")
    return points_from_obj(obj["points"]), gid, label


def gesture_to_obj(g: SampledGesture, gid: str | None = None,
                   label: str | None = None) -> dict:
    return {
        "id": gid,
        "label": label,
        "points": [{"t": tp.t, "x": tp.p.x, "y": tp.p.y} for tp in g.points],
    }


def load_gesture(path: str | Path) -> tuple[SampledGesture, str | None, str | None]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedGesture(None, f"{path}: not valid JSON: {exc}") from exc
    return gesture_from_obj(obj)


def save_gesture(path: str | Path, g: SampledGesture, gid: str | None = None,
                 label: str | None = None) -> None:
    Path(path).write_text(dumps(gesture_to_obj(g, gid, label)) + "\n",
                          encoding="utf-8")
