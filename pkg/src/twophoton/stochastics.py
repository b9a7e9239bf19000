"""Seeded coincidence-count sampling and statistical estimators.

Determinism contract: all sampling uses numpy's Philox generator
(``numpy.random.Philox``, the counter-based Philox-4x64-10 algorithm) keyed
directly with ``(seed, stream)``. Identical inputs produce bit-identical
tallies on every platform. Parallel tasks take independent streams by
varying the stream index, never by sharing a generator.

Outcomes are drawn by inverse CDF over the four coincidence outcomes in the
fixed order (11, 12, 21, 22).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .experiments import JointDistribution

__all__ = [
    "GENERATOR_NAME",
    "EventTally",
    "EstimatedCorrelation",
    "stream",
    "sample_events",
    "estimate_correlation",
]

#: Pinned PRNG algorithm backing every tally in this package.
GENERATOR_NAME = "philox4x64"

#: Outcome labels in sampling order.
OUTCOME_ORDER = ("11", "12", "21", "22")


@dataclass(frozen=True)
class EventTally:
    """Coincidence counts from a finite run.

    Counts follow the fixed outcome order (11, 12, 21, 22) and must sum to
    ``trials``. The seed that produced the tally is carried along so runs
    can be reproduced.
    """

    n11: int
    n12: int
    n21: int
    n22: int
    trials: int
    seed: int

    def __post_init__(self):
        counts = self.counts()
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative, got {counts}")
        if sum(counts) != self.trials:
            raise ValueError(f"counts {counts} sum to {sum(counts)}, not trials={self.trials}")

    def counts(self) -> tuple[int, int, int, int]:
        return (self.n11, self.n12, self.n21, self.n22)

    def agreement_fraction(self) -> float:
        """Fraction of trials on which the two sides fired matching detectors."""
        if self.trials == 0:
            return 0.0
        return (self.n11 + self.n22) / self.trials

    def marginal_fraction(self, side: str) -> float:
        """Observed detector-1 fraction for one side."""
        if self.trials == 0:
            return 0.0
        if side == "S":
            return (self.n11 + self.n12) / self.trials
        if side == "A":
            return (self.n11 + self.n21) / self.trials
        raise ValueError(f"side must be 'S' or 'A', got {side!r}")


@dataclass(frozen=True)
class EstimatedCorrelation:
    """Sample correlation with its binomial-model standard error."""

    e_hat: float
    stderr: float


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for task ``index`` under the given seed.

    Streams with different indices are statistically independent; the
    mapping ``(seed, index) -> stream`` is part of the reproducibility
    contract.
    """
    key = np.array([np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF), np.uint64(int(index))], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_events(
    dist: JointDistribution,
    trials: int,
    seed: int,
    stream_index: int = 0,
) -> EventTally:
    """Draw a multinomial tally of coincidence outcomes.

    Args:
        dist: Exact joint distribution to sample from.
        trials: Number of coincidence events, ``>= 0``.
        seed: Base seed; identical ``(dist, trials, seed, stream_index)``
            give identical tallies.
        stream_index: Sub-stream for parallel sweeps.

    Raises:
        ValueError: On a negative trial count. Invalid distributions are
            rejected when the ``JointDistribution`` is built.
    """
    if not isinstance(dist, JointDistribution):
        dist = JointDistribution(*np.asarray(dist, dtype=float))
    n = int(trials)
    if n < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    counts = np.zeros(4, dtype=np.int64)
    if n > 0:
        cdf = np.cumsum(dist.as_array())
        draws = stream(seed, stream_index).random(n)
        outcomes = np.searchsorted(cdf, draws, side="right")
        np.clip(outcomes, 0, 3, out=outcomes)
        counts = np.bincount(outcomes, minlength=4).astype(np.int64)
    return EventTally(
        n11=int(counts[0]),
        n12=int(counts[1]),
        n21=int(counts[2]),
        n22=int(counts[3]),
        trials=n,
        seed=int(seed),
    )


def estimate_correlation(tally: EventTally) -> EstimatedCorrelation:
    """Correlation estimate ``E_hat`` and its standard error from a tally.

    ``E_hat = (n11 + n22 - n12 - n21) / N`` and
    ``stderr = sqrt((1 - E_hat^2) / N)``, the standard error of a mean of
    ``+-1`` outcomes.

    Raises:
        ValueError: If the tally holds no trials.
    """
    if tally.trials < 1:
        raise ValueError("cannot estimate a correlation from an empty tally")
    n = tally.trials
    e_hat = (tally.n11 + tally.n22 - tally.n12 - tally.n21) / n
    stderr = math.sqrt(max(0.0, 1.0 - e_hat * e_hat) / n)
    return EstimatedCorrelation(e_hat=e_hat, stderr=stderr)
