"""Problem geometry: user layouts, warden placement, distances, enclosing circles.

Coordinates are horizontal positions in meters. The service area is a disk,
by convention centered at the origin, and the warden (Willie) sits outside it.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

import numpy as np

# Redraws allowed before giving up on an all-empty point-process sample.
_MAX_EMPTY_REDRAWS = 1000
# Fixed permutation seed keeps the enclosing-circle build deterministic.
_MEC_SHUFFLE_SEED = 0x1D0
_CONTAINMENT_TOL = 1e-9


@dataclass(frozen=True)
class Point2:
    """Point in the horizontal plane (meters)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"radius must be finite and >= 0, got {self.radius}")

    def contains(self, point: Point2, tol: float = _CONTAINMENT_TOL) -> bool:
        return horizontal_distance(self.center, point) <= self.radius + tol


@dataclass(frozen=True)
class Scenario:
    """Immutable problem instance: users, warden, altitude, and service disk."""

    gus: tuple[Point2, ...]
    willie: Point2
    altitude_m: float
    area_radius_m: float
    area_center: Point2 = Point2(0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "gus", tuple(self.gus))
        if not self.gus:
            raise ValueError("scenario needs at least one ground user")
        if not (math.isfinite(self.altitude_m) and self.altitude_m > 0):
            raise ValueError(f"altitude_m must be positive, got {self.altitude_m}")
        if not (math.isfinite(self.area_radius_m) and self.area_radius_m > 0):
            raise ValueError(f"area_radius_m must be positive, got {self.area_radius_m}")
        for i, p in enumerate(self.gus):
            if horizontal_distance(p, self.area_center) > self.area_radius_m + _CONTAINMENT_TOL:
                raise ValueError(f"ground user {i} at ({p.x}, {p.y}) lies outside the service disk")
        if horizontal_distance(self.willie, self.area_center) <= self.area_radius_m:
            raise ValueError("willie must be strictly outside the service disk")
        # cached coordinate array for distance queries; not a dataclass field
        xy = np.array([[p.x, p.y] for p in self.gus], dtype=float)
        object.__setattr__(self, "_gu_xy", xy)


def horizontal_distance(a: Point2, b: Point2) -> float:
    """Euclidean distance between two horizontal positions."""
    return math.hypot(a.x - b.x, a.y - b.y)


def elevation_angle_deg(horizontal_dist: float, altitude_m: float) -> float:
    """Elevation angle in degrees seen from the ground toward the UAV."""
    if altitude_m <= 0:
        raise ValueError(f"altitude_m must be positive, got {altitude_m}")
    if horizontal_dist < 0:
        raise ValueError(f"horizontal_dist must be >= 0, got {horizontal_dist}")
    return math.degrees(math.atan2(altitude_m, horizontal_dist))


def sample_ppp_scenario(
    density: float,
    area_radius_m: float,
    willie: Point2,
    altitude_m: float,
    rng_seed: int,
) -> Scenario:
    """Draw a Poisson-point-process user layout inside the service disk.

    The user count is Poisson(density * pi * radius^2) and positions are
    i.i.d. uniform over the disk. All-empty draws are redrawn (a multicast
    needs at least one receiver), up to a fixed cap. Deterministic per seed.
    """
    if density <= 0:
        raise ValueError(f"density must be positive, got {density}")
    if area_radius_m <= 0:
        raise ValueError(f"area_radius_m must be positive, got {area_radius_m}")
    if math.hypot(willie.x, willie.y) <= area_radius_m:
        raise ValueError("willie must lie strictly outside the service disk")
    rng = np.random.default_rng(rng_seed)
    mean_count = density * math.pi * area_radius_m**2
    for _ in range(_MAX_EMPTY_REDRAWS):
        count = int(rng.poisson(mean_count))
        if count >= 1:
            break
    else:
        raise RuntimeError(
            f"no ground users after {_MAX_EMPTY_REDRAWS} draws (mean count {mean_count:.3g})"
        )
    radii = area_radius_m * np.sqrt(rng.random(count))
    angles = rng.uniform(0.0, 2.0 * math.pi, count)
    gus = tuple(
        Point2(float(r * math.cos(a)), float(r * math.sin(a)))
        for r, a in zip(radii, angles)
    )
    return Scenario(gus=gus, willie=willie, altitude_m=altitude_m, area_radius_m=area_radius_m)


def farthest_gu(scenario: Scenario, from_point: Point2) -> tuple[int, float]:
    """Index and distance of the user farthest from `from_point`; ties -> lowest index."""
    xy = scenario._gu_xy
    d = np.hypot(xy[:, 0] - from_point.x, xy[:, 1] - from_point.y)
    idx = int(np.argmax(d))
    return idx, float(d[idx])


# ---------------------------------------------------------------------------
# Minimum enclosing circle (randomized incremental, move-to-front style).
# Expected O(n) after the fixed-seed shuffle; exact up to float rounding.
# ---------------------------------------------------------------------------


def min_enclosing_circle(points) -> Circle:
    """Smallest circle containing every point (within 1e-9 m)."""
    pts = [(float(p.x), float(p.y)) for p in points]
    if not pts:
        raise ValueError("points must be non-empty")
    rnd = random.Random(_MEC_SHUFFLE_SEED)
    rnd.shuffle(pts)
    c = None
    for i, p in enumerate(pts):
        if c is None or not _in_circle(c, p):
            c = _circle_one_boundary(pts[: i + 1], p)
    return Circle(Point2(c[0], c[1]), c[2])


def _in_circle(c, p) -> bool:
    return math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * (1 + 1e-12) + 1e-12


def _circle_one_boundary(pts, p):
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(c, q):
            if c[2] == 0.0:
                c = _diameter_circle(p, q)
            else:
                c = _circle_two_boundary(pts[: i + 1], p, q)
    return c


def _circle_two_boundary(pts, p, q):
    base = _diameter_circle(p, q)
    left = right = None
    for r in pts:
        if _in_circle(base, r):
            continue
        side = _cross(p, q, r)
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        c_side = _cross(p, q, (c[0], c[1]))
        if side > 0 and (left is None or c_side > _cross(p, q, (left[0], left[1]))):
            left = c
        elif side < 0 and (right is None or c_side < _cross(p, q, (right[0], right[1]))):
            right = c
    if left is None and right is None:
        return base
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _diameter_circle(p, q):
    cx, cy = (p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0
    r = max(math.hypot(p[0] - cx, p[1] - cy), math.hypot(q[0] - cx, q[1] - cy))
    return (cx, cy, r)


def _circumcircle(p, q, r):
    ax, ay = p
    bx, by = q
    cx, cy = r
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    rad = max(
        math.hypot(ax - ux, ay - uy),
        math.hypot(bx - ux, by - uy),
        math.hypot(cx - ux, cy - uy),
    )
    return (ux, uy, rad)


def _cross(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


# ---------------------------------------------------------------------------
# JSON document form
# ---------------------------------------------------------------------------


def scenario_to_json(scenario: Scenario) -> str:
    """Serialize to the scenario document schema (coordinates in meters)."""
    doc = {
        "altitude_m": scenario.altitude_m,
        "area_radius_m": scenario.area_radius_m,
        "area_center": [scenario.area_center.x, scenario.area_center.y],
        "willie": [scenario.willie.x, scenario.willie.y],
        "gus": [[p.x, p.y] for p in scenario.gus],
    }
    return json.dumps(doc)


def scenario_from_json(text: str) -> Scenario:
    """Parse the scenario document schema; raises ValueError naming bad fields."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"scenario document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("scenario document must be a JSON object")
    required = ("altitude_m", "area_radius_m", "area_center", "willie", "gus")
    for key in required:
        if key not in doc:
            raise ValueError(f"scenario document missing field {key!r}")
    unknown = set(doc) - set(required)
    if unknown:
        raise ValueError(f"scenario document has unknown fields {sorted(unknown)}")

    def _pair(name, value):
        if not (isinstance(value, (list, tuple)) and len(value) == 2):
            raise ValueError(f"{name}: expected [x, y]")
        return Point2(float(value[0]), float(value[1]))

    gus = doc["gus"]
    if not isinstance(gus, list):
        raise ValueError("gus: expected a list of [x, y] pairs")
    return Scenario(
        gus=tuple(_pair(f"gus[{i}]", g) for i, g in enumerate(gus)),
        willie=_pair("willie", doc["willie"]),
        altitude_m=float(doc["altitude_m"]),
        area_radius_m=float(doc["area_radius_m"]),
        area_center=_pair("area_center", doc["area_center"]),
    )
