"""Timing and ratio statistics of :func:`transform` on random pairs."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .core import delta
from .exact import C_BOUND, within_c_bound
from .sampling import random_pair
from .transform import transform

DEFAULT_SIZES = (20, 50, 100, 200)


@dataclass
class BenchRow:
    n: int
    pairs: int
    skipped: int
    mean_seconds: float
    max_seconds: float
    max_ratio: Fraction | None
    all_within_c: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs": self.pairs,
            "skipped_zero_delta": self.skipped,
            "mean_seconds": round(self.mean_seconds, 6),
            "max_seconds": round(self.max_seconds, 6),
            "max_ratio": None if self.max_ratio is None else float(self.max_ratio),
            "all_within_c": self.all_within_c,
        }


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    @property
    def max_ratio(self) -> Fraction | None:
        ratios = [r.max_ratio for r in self.rows if r.max_ratio is not None]
        return max(ratios, default=None)

    @property
    def all_within_c(self) -> bool:
        return all(r.all_within_c for r in self.rows)

    def to_json(self) -> dict:
        best = self.max_ratio
        return {
            "c": C_BOUND,
            "max_ratio": None if best is None else float(best),
            "all_within_c": self.all_within_c,
            "rows": [r.to_json() for r in self.rows],
        }


def _run_one(args: tuple[int, int]) -> tuple[int, int, float]:
    """Length, delta and wall time for the pair drawn from ``(n, seed)``."""
    n, seed = args
    t1, t2 = random_pair(n, random.Random(seed))
    t0 = time.perf_counter()
    result = transform(t1, t2)
    return result.length, delta(t1, t2), time.perf_counter() - t0


def run_bench(sizes=DEFAULT_SIZES, pairs: int = 10, seed: int = 0, jobs: int = 1) -> BenchReport:
    """Pairs are drawn from per-pair seeds, so results do not depend on ``jobs``."""
    master = random.Random(seed)
    tasks = [(n, master.randrange(2**63)) for n in sizes for _ in range(pairs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    report = BenchReport()
    for i, n in enumerate(sizes):
        chunk = results[i * pairs:(i + 1) * pairs]
        times = [t for _, _, t in chunk]
        ratios = [Fraction(length, d) for length, d, _ in chunk if d > 0]
        report.rows.append(BenchRow(
            n=n,
            pairs=len(chunk),
            skipped=len(chunk) - len(ratios),
            mean_seconds=sum(times) / len(times) if times else 0.0,
            max_seconds=max(times, default=0.0),
            max_ratio=max(ratios, default=None),
            all_within_c=all(within_c_bound(length, d) for length, d, _ in chunk),
        ))
    return report
