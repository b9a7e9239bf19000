"""No-signaling auditor.

If one side's detector statistics moved when the *other* side turned its
phase dial, the dial would be an instant telegraph. The auditor certifies
this cannot happen in the simulated experiment: it sweeps the remote phase
over a grid, collects the local marginals at each point and reports the
worst pairwise discrepancy.

Two modes: ``exact`` compares Born-rule marginals at double precision;
``sampled`` compares finite-count estimates in units of the pooled
binomial standard error, with a 5-sigma pass threshold.

The module also provides a deliberately corrupted joint distribution whose
marginal *does* depend on the remote phase, used to demonstrate that the
sampled audit actually catches violations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from .experiments import EQUAL_AMPLITUDE, JointDistribution, rto_joint
from .optics import PhaseSettings
from .stochastics import sample_events

__all__ = [
    "EXACT_TOLERANCE",
    "SAMPLED_TOLERANCE_SIGMA",
    "MIN_TRIALS_PER_POINT",
    "AuditReport",
    "audit_exact",
    "audit_sampled",
    "phase_biased_joint",
]

#: Allowed marginal spread for the exact audit (absolute probability).
EXACT_TOLERANCE = 1e-12

#: Allowed marginal spread for the sampled audit (pooled standard errors).
SAMPLED_TOLERANCE_SIGMA = 5.0

#: Smallest statistically meaningful per-point sample size.
MIN_TRIALS_PER_POINT = 100

JointFn = Callable[[PhaseSettings], JointDistribution]


@dataclass(frozen=True)
class AuditReport:
    """Outcome of one no-signaling audit.

    ``max_deviation`` is the largest pairwise distance between the audited
    side's marginal vectors across the remote grid, in absolute probability
    (exact mode) or pooled standard errors (sampled mode). The verdict is
    ``"pass"`` exactly when it does not exceed ``tolerance``.
    """

    side: str
    local_phase: float
    remote_grid: tuple[float, ...]
    max_deviation: float
    mode: str
    tolerance: float
    verdict: str = field(init=False)
    trials_per_point: int | None = None
    seed: int | None = None

    def __post_init__(self):
        verdict = "pass" if self.max_deviation <= self.tolerance else "fail"
        object.__setattr__(self, "verdict", verdict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        """JSON-ready representation with lower_snake_case keys."""
        payload = {
            "side": self.side,
            "local_phase": self.local_phase,
            "remote_grid": list(self.remote_grid),
            "max_deviation": self.max_deviation,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "verdict": self.verdict,
        }
        if self.mode == "sampled":
            payload["trials_per_point"] = self.trials_per_point
            payload["seed"] = self.seed
        return payload


def _settings_for(side: str, local_phase: float, remote_phase: float) -> PhaseSettings:
    # The audited side keeps its own dial fixed; the remote side sweeps.
    if side == "S":
        return PhaseSettings(phi_s=local_phase, phi_a=remote_phase)
    if side == "A":
        return PhaseSettings(phi_s=remote_phase, phi_a=local_phase)
    raise ValueError(f"side must be 'S' or 'A', got {side!r}")


def _check_grid(remote_grid) -> tuple[float, ...]:
    grid = tuple(float(p) for p in remote_grid)
    if not grid:
        raise ValueError("remote grid must contain at least one phase value")
    return grid


def audit_exact(
    side: str,
    local_phase: float,
    remote_grid,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
    joint_fn: JointFn | None = None,
) -> AuditReport:
    """Audit one side's exact marginals against the remote phase.

    Computes the audited side's detector marginals at every remote grid
    point and reports the maximum pairwise l-infinity distance. Anything
    above ``EXACT_TOLERANCE`` (1e-12, pure roundoff) means the joint
    distribution leaks the remote setting into local statistics.
    """
    grid = _check_grid(remote_grid)
    joint = joint_fn or (lambda s: rto_joint(s, c1, c2))
    marginals = np.array(
        [joint(_settings_for(side, local_phase, phi)).marginal(side) for phi in grid]
    )
    max_dev = 0.0
    for i, j in combinations(range(len(grid)), 2):
        max_dev = max(max_dev, float(np.max(np.abs(marginals[i] - marginals[j]))))
    return AuditReport(
        side=side,
        local_phase=float(local_phase),
        remote_grid=grid,
        max_deviation=max_dev,
        mode="exact",
        tolerance=EXACT_TOLERANCE,
    )


def audit_sampled(
    side: str,
    remote_grid,
    trials_per_point: int,
    seed: int,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
    local_phase: float = 0.0,
    joint_fn: JointFn | None = None,
) -> AuditReport:
    """Finite-statistics variant of the audit.

    Samples ``trials_per_point`` coincidences at every remote grid point
    (grid point ``k`` uses stream ``k`` of the seed) and compares the
    audited side's detector-1 fractions pairwise with the two-proportion
    pooled z statistic. The deviation is the largest ``|p_i - p_j|`` in
    units of ``sqrt(p_pool (1 - p_pool) (1/n_i + 1/n_j))``; the verdict
    threshold is ``SAMPLED_TOLERANCE_SIGMA``.

    Deterministic for fixed ``(seed, grid, trials_per_point)``.

    Raises:
        ValueError: If the grid is empty or ``trials_per_point`` is below
            ``MIN_TRIALS_PER_POINT``.
    """
    grid = _check_grid(remote_grid)
    n = int(trials_per_point)
    if n < MIN_TRIALS_PER_POINT:
        raise ValueError(
            f"trials_per_point must be at least {MIN_TRIALS_PER_POINT}, got {trials_per_point}"
        )
    joint = joint_fn or (lambda s: rto_joint(s, c1, c2))
    fractions = []
    for k, phi in enumerate(grid):
        tally = sample_events(joint(_settings_for(side, local_phase, phi)), n, seed, stream_index=k)
        fractions.append(tally.marginal_fraction(side))

    pooled = float(np.mean(fractions))
    max_dev = 0.0
    for i, j in combinations(range(len(grid)), 2):
        diff = abs(fractions[i] - fractions[j])
        scale = math.sqrt(pooled * (1.0 - pooled) * (2.0 / n))
        if scale == 0.0:
            z = 0.0 if diff == 0.0 else math.inf
        else:
            z = diff / scale
        max_dev = max(max_dev, z)
    return AuditReport(
        side=side,
        local_phase=float(local_phase),
        remote_grid=grid,
        max_deviation=max_dev,
        mode="sampled",
        tolerance=SAMPLED_TOLERANCE_SIGMA,
        trials_per_point=n,
        seed=int(seed),
    )


def phase_biased_joint(
    side: str,
    amplitude: float,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> JointFn:
    """Corrupted joint distribution for fault-injection tests.

    Returns a joint whose ``side`` marginal is tilted to
    ``1/2 + amplitude * cos(remote phase)`` while staying a valid
    probability distribution. Quantum mechanics forbids such a
    distribution; feeding it to the sampled audit must produce a failing
    report, which is how the auditor's alarm is tested.
    """
    amp = float(amplitude)
    if not 0.0 <= amp < 0.5:
        raise ValueError(f"bias amplitude must lie in [0, 0.5), got {amplitude}")

    def corrupted(settings: PhaseSettings) -> JointDistribution:
        base = rto_joint(settings, c1, c2)
        remote = settings.phi_a if side == "S" else settings.phi_s
        target = 0.5 + amp * math.cos(remote)
        p1, p2 = base.marginal(side)
        if p1 <= 0.0 or p2 <= 0.0:
            return base
        gain1, gain2 = target / p1, (1.0 - target) / p2
        if side == "S":
            probs = [base.p11 * gain1, base.p12 * gain1, base.p21 * gain2, base.p22 * gain2]
        else:
            probs = [base.p11 * gain1, base.p12 * gain2, base.p21 * gain1, base.p22 * gain2]
        return JointDistribution(*probs)

    return corrupted
