"""Disk-constrained particle swarm minimizer with deterministic seeding."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import AllInfeasibleError
from .scenario import Circle, Point2


@dataclass(frozen=True)
class PsoConfig:
    """Swarm hyperparameters; defaults are the usual constriction-style values."""

    particles: int = 30
    iterations: int = 100
    inertia_w: float = 0.729
    accel_c1: float = 1.49445
    accel_c2: float = 1.49445
    vmax_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.particles < 2:
            raise ValueError(f"particles must be >= 2, got {self.particles}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if not 0.0 < self.inertia_w < 1.0:
            raise ValueError(f"inertia_w must be in (0, 1), got {self.inertia_w}")
        if self.accel_c1 <= 0 or self.accel_c2 <= 0:
            raise ValueError("acceleration constants must be positive")
        if not 0.0 < self.vmax_fraction <= 1.0:
            raise ValueError(f"vmax_fraction must be in (0, 1], got {self.vmax_fraction}")


@dataclass
class SwarmState:
    """Mutable swarm snapshot tracked across iterations."""

    positions: np.ndarray  # (m, 2)
    velocities: np.ndarray  # (m, 2)
    personal_best_pos: np.ndarray  # (m, 2)
    personal_best_fit: np.ndarray  # (m,)
    global_best_pos: np.ndarray  # (2,)
    global_best_fit: float
    iteration: int


class PsoResult(NamedTuple):
    best: Point2
    fitness: float
    trace: np.ndarray


def pso_minimize(
    fitness: Callable[[Point2], float],
    disk: Circle,
    config: PsoConfig,
    seeded_candidates: Sequence[Point2] = (),
) -> PsoResult:
    """Minimize `fitness` over the closed disk.

    Seeded candidates fill the first particle slots with zero initial
    velocity, so the result can never be worse than the best seed. Infeasible
    positions are signalled by `fitness` returning math.inf. Positions leaving
    the disk are projected radially back onto the boundary and their velocity
    zeroed; per-iteration speed is clamped to vmax_fraction times the radius.
    Deterministic for a fixed config.

    Returns:
        PsoResult(best, fitness, trace); the trace holds the global best after
        initialization and after each iteration, so it is monotone
        nonincreasing with length iterations + 1.

    Raises:
        AllInfeasibleError: no evaluated position ever had finite fitness.
    """
    m = config.particles
    if len(seeded_candidates) > m:
        raise ValueError(f"{len(seeded_candidates)} seeded candidates exceed {m} particles")
    rng = np.random.default_rng(config.seed)
    center = np.array([disk.center.x, disk.center.y])
    radius = disk.radius
    vmax = config.vmax_fraction * radius

    # Fixed draw order (positions, then velocities) keeps runs reproducible.
    pos_r = radius * np.sqrt(rng.random(m))
    pos_a = rng.uniform(0.0, 2.0 * math.pi, m)
    pos = center + np.column_stack([pos_r * np.cos(pos_a), pos_r * np.sin(pos_a)])
    vel_r = vmax * np.sqrt(rng.random(m))
    vel_a = rng.uniform(0.0, 2.0 * math.pi, m)
    vel = np.column_stack([vel_r * np.cos(vel_a), vel_r * np.sin(vel_a)])
    for i, cand in enumerate(seeded_candidates):
        pos[i] = _project(np.array([cand.x, cand.y]), center, radius)
        vel[i] = 0.0

    fit = _evaluate(fitness, pos)
    state = SwarmState(
        positions=pos,
        velocities=vel,
        personal_best_pos=pos.copy(),
        personal_best_fit=fit.copy(),
        global_best_pos=pos[int(np.argmin(fit))].copy(),
        global_best_fit=float(np.min(fit)),
        iteration=0,
    )
    trace = [state.global_best_fit]

    for k in range(config.iterations):
        psi1 = rng.random((m, 2))
        psi2 = rng.random((m, 2))
        vel = (
            config.inertia_w * state.velocities
            + config.accel_c1 * psi1 * (state.personal_best_pos - state.positions)
            + config.accel_c2 * psi2 * (state.global_best_pos - state.positions)
        )
        speed = np.hypot(vel[:, 0], vel[:, 1])
        fast = speed > vmax
        if np.any(fast):
            vel[fast] *= (vmax / speed[fast])[:, None]
        pos = state.positions + vel
        rel = pos - center
        dist = np.hypot(rel[:, 0], rel[:, 1])
        outside = dist > radius
        if np.any(outside):
            pos[outside] = center + rel[outside] * (radius / dist[outside])[:, None]
            vel[outside] = 0.0

        fit = _evaluate(fitness, pos)
        improved = fit < state.personal_best_fit
        state.personal_best_pos[improved] = pos[improved]
        state.personal_best_fit[improved] = fit[improved]
        best_idx = int(np.argmin(state.personal_best_fit))  # first minimum: lowest index wins ties
        if state.personal_best_fit[best_idx] < state.global_best_fit:
            state.global_best_fit = float(state.personal_best_fit[best_idx])
            state.global_best_pos = state.personal_best_pos[best_idx].copy()
        state.positions = pos
        state.velocities = vel
        state.iteration = k + 1
        trace.append(state.global_best_fit)

    if not math.isfinite(state.global_best_fit):
        raise AllInfeasibleError("no particle position was ever feasible")
    best = Point2(float(state.global_best_pos[0]), float(state.global_best_pos[1]))
    return PsoResult(best, state.global_best_fit, np.array(trace))


def _evaluate(fitness, positions) -> np.ndarray:
    return np.fromiter(
        (float(fitness(Point2(float(x), float(y)))) for x, y in positions),
        dtype=float,
        count=len(positions),
    )


def _project(p: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
    rel = p - center
    dist = math.hypot(rel[0], rel[1])
    if dist <= radius:
        return p
    return center + rel * (radius / dist)
