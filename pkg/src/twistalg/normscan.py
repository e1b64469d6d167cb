"""Monte Carlo scan of the product-to-norm ratio ||xy|| / (||x|| ||y||).

Each sample draws two standard-normal coefficient vectors from a per-sample
substream of the documented generator and multiplies them with the float64
product kernel.  The dimension-independent reference is the operator-norm
bound sqrt(order) on the ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rng
from .algebra import FLOAT64, Element, multiply, norm
from .twists import TwistTable


@dataclass
class NormScanReport:
    context: str
    samples: int
    seed: int
    rng: str
    max_ratio: float
    histogram: list[dict]
    wedderburn_bound: float

    def to_json_obj(self) -> dict:
        return {
            "context": self.context,
            "samples": self.samples,
            "seed": self.seed,
            "rng": self.rng,
            "max_ratio": self.max_ratio,
            "histogram": self.histogram,
            "wedderburn_bound": self.wedderburn_bound,
        }


def norm_scan(twist: TwistTable, samples: int, seed: int, buckets: int = 32) -> NormScanReport:
    """Sample ratios under the given twist; deterministic for a given seed."""
    n = twist.order
    bound = math.sqrt(n)
    width = bound / buckets
    counts = [0] * buckets
    max_ratio = 0.0
    for k in range(samples):
        stream = rng.normals(rng.substream_seed(seed, k), 2 * n)
        x = Element(twist, stream[:n], FLOAT64)
        y = Element(twist, stream[n:], FLOAT64)
        denom = norm(x) * norm(y)
        if denom == 0.0:
            continue
        ratio = norm(multiply(x, y)) / denom
        max_ratio = max(max_ratio, ratio)
        counts[min(int(ratio / width), buckets - 1)] += 1
    histogram = [
        {"lo": i * width, "hi": (i + 1) * width, "count": c}
        for i, c in enumerate(counts)
        if c
    ]
    return NormScanReport(
        context=f"{twist.name}:{twist.group.param}" if twist.group.is_xor else str(twist.group),
        samples=samples,
        seed=seed,
        rng=rng.ALGORITHM,
        max_ratio=float(max_ratio),
        histogram=histogram,
        wedderburn_bound=bound,
    )
