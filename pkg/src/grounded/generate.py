"""Seeded random L-shape instances in general position.

Ground coordinates are distinct even integers and arm lengths are odd, so no
arm ever ends exactly on another shape's stem. Heights are distinct.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .geometry import Direction, LShape, Representation

CLASSES = ("two-sided", "square", "one-sided")


@dataclass(frozen=True)
class GenConfig:
    cls: str
    n: int
    seed: int = 0
    coord_range: Optional[int] = None  # ground x and heights drawn from 1..coord_range
    arm_dist: str = "uniform"          # "uniform" or "exponential"
    arm_max: Optional[int] = None      # upper bound (uniform) or 4x the mean (exponential)
    direction: str = "R"               # arm direction for one-sided instances

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {CLASSES}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.coord_range is not None and self.coord_range < self.n:
            raise ValueError("coord_range must be at least n")
        if self.arm_dist not in ("uniform", "exponential"):
            raise ValueError(f"unknown arm distribution {self.arm_dist!r}")


def _odd(rng: random.Random, cfg: GenConfig, span: int) -> int:
    top = cfg.arm_max or span
    if cfg.arm_dist == "uniform":
        return 2 * rng.randrange((top + 1) // 2) + 1
    return 2 * int(rng.expovariate(8 / top)) + 1


def generate(cfg: GenConfig) -> Representation:
    rng = random.Random(cfg.seed)
    n = cfg.n
    span = cfg.coord_range or 2 * max(n, 1)
    xs = [2 * v for v in rng.sample(range(1, span + 1), n)]
    hs = rng.sample(range(1, span + 1), n)
    if cfg.cls == "square":
        hs = [2 * h - 1 for h in hs]
        arms = list(hs)
        dirs = [rng.choice("LR") for _ in range(n)]
    elif cfg.cls == "two-sided":
        arms = [_odd(rng, cfg, 2 * span) for _ in range(n)]
        dirs = [rng.choice("LR") for _ in range(n)]
        if n >= 2 and all(a == h for a, h in zip(arms, hs)):
            arms[0] += 2
    else:
        arms = [_odd(rng, cfg, 2 * span) for _ in range(n)]
        dirs = [Direction(cfg.direction).value] * n
    if cfg.cls != "one-sided" and n >= 2 and len(set(dirs)) == 1:
        dirs[0] = "L" if dirs[0] == "R" else "R"
    return Representation(LShape(i + 1, x, h, d, a)
                          for i, (x, h, d, a) in enumerate(zip(xs, hs, dirs, arms)))
