"""Lesche-stability metrics, stability ratios, and batch sweep experiments.

The experimental-robustness criterion compares |M(P) - M(P')| / log(N)
against the L1 distance between the two distributions.  Shannon-type
measures keep this ratio uniformly small; Renyi-type measures of order
q != 1 admit adversarial pairs that push it toward 1 as N grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .distributions import (
    FAMILIES,
    HyperbolicDistribution,
    PerturbationPair,
    RealDistribution,
    embed,
    perturbation_family,
)
from .errors import CaseMismatch, DegenerateN, HypentropyError, LengthMismatch
from .hyperbolic import HyperbolicNumber, embed_real, modulus_k
from .measures import renyi, renyi_hyp, shannon, strong_shannon_hyp
from .rng import derive_seed

__all__ = [
    "StabilityRecord",
    "SweepConfig",
    "lesche_norm",
    "lesche_norm_hyp",
    "stability_ratio",
    "stability_sweep",
    "REAL_MEASURES",
    "HYPERBOLIC_MEASURES",
]

REAL_MEASURES = ("shannon", "renyi")
HYPERBOLIC_MEASURES = ("strong_shannon_hyp", "renyi_hyp")


def lesche_norm(P: RealDistribution, Q: RealDistribution) -> float:
    """L1 distance sum |p_s - q_s|."""
    if P.n != Q.n:
        raise LengthMismatch(f"length mismatch: {P.n} vs {Q.n}")
    return float(np.abs(P.p - Q.p).sum())


def lesche_norm_hyp(
    B: HyperbolicDistribution, C: HyperbolicDistribution
) -> HyperbolicNumber:
    """Hyperbolic L1 distance: projection norms per idempotent coordinate."""
    if B.n != C.n:
        raise LengthMismatch(f"length mismatch: {B.n} vs {C.n}")
    if B.case is not C.case:
        raise CaseMismatch(f"case mismatch: {B.case.value} vs {C.case.value}")
    return HyperbolicNumber(
        float(np.abs(B.p1 - C.p1).sum()), float(np.abs(B.p2 - C.p2).sum())
    )


@dataclass(frozen=True)
class StabilityRecord:
    """One cell of a Lesche experiment."""

    family: str
    n: int
    delta: float
    measure: str
    order: Optional[HyperbolicNumber]
    norm: HyperbolicNumber
    ratio: HyperbolicNumber
    error: Optional[str] = None


def _measure_value(
    measure: str, B: HyperbolicDistribution, order: Optional[HyperbolicNumber]
) -> HyperbolicNumber:
    if measure == "shannon":
        return embed_real(shannon(B.projection1()))
    if measure == "renyi":
        if order is None:
            raise HypentropyError("renyi needs an order")
        return embed_real(renyi(B.projection1(), order.x1))
    if measure == "strong_shannon_hyp":
        return strong_shannon_hyp(B)
    if measure == "renyi_hyp":
        if order is None:
            raise HypentropyError("renyi_hyp needs an order")
        return renyi_hyp(B, order)
    raise HypentropyError(f"unknown stability measure {measure!r}")


def stability_ratio(
    measure: str,
    pair: PerturbationPair,
    order: Optional[HyperbolicNumber] = None,
) -> StabilityRecord:
    """Normalized response |M(P) - M(P')| / log(N) of one measure to one pair.

    Real measures evaluate on the real pair (their record components are then
    equal); hyperbolic measures evaluate on the embedded pair, dividing by
    log(N) * 1_D coordinatewise.
    """
    if pair.n < 2:
        raise DegenerateN("stability ratio needs at least two states")
    B = embed(pair.base)
    C = embed(pair.perturbed)
    norm = lesche_norm_hyp(B, C)
    log_n = math.log(pair.n)
    value_base = _measure_value(measure, B, order)
    value_pert = _measure_value(measure, C, order)
    diff = modulus_k(value_base - value_pert)
    ratio = HyperbolicNumber(diff.x1 / log_n, diff.x2 / log_n)
    return StabilityRecord(
        family=pair.family,
        n=pair.n,
        delta=pair.delta,
        measure=measure,
        order=order,
        norm=norm,
        ratio=ratio,
    )


@dataclass(frozen=True)
class SweepConfig:
    """Cartesian-product experiment description."""

    families: Sequence[str]
    n_grid: Sequence[int]
    delta_grid: Sequence[float]
    measures: Sequence[tuple[str, Optional[HyperbolicNumber]]]
    seed: int = 0

    def __post_init__(self) -> None:
        if not (self.families and self.n_grid and self.delta_grid
                and self.measures):
            raise HypentropyError("sweep grids must be non-empty")
        for fam in self.families:
            if fam not in FAMILIES:
                raise HypentropyError(f"unknown family {fam!r}")


def _measure_key(measure: str, order: Optional[HyperbolicNumber]) -> tuple:
    return (measure, order.x1 if order else 0.0, order.x2 if order else 0.0)


def stability_sweep(config: SweepConfig) -> list[StabilityRecord]:
    """Evaluate every (family, measure, N, delta) cell deterministically.

    Per-cell errors become error rows (machine-readable code in ``error``)
    instead of aborting the sweep.  Output is sorted by
    (family, measure, N, delta).
    """
    records: list[StabilityRecord] = []
    for family in config.families:
        for n in config.n_grid:
            for delta in config.delta_grid:
                cell_seed = derive_seed(config.seed, family, n, delta)
                try:
                    pair = perturbation_family(family, n, delta, seed=cell_seed)
                except HypentropyError as exc:
                    for measure, order in config.measures:
                        records.append(StabilityRecord(
                            family, n, delta, measure, order,
                            norm=HyperbolicNumber(math.nan, math.nan),
                            ratio=HyperbolicNumber(math.nan, math.nan),
                            error=type(exc).__name__,
                        ))
                    continue
                for measure, order in config.measures:
                    try:
                        records.append(stability_ratio(measure, pair, order))
                    except HypentropyError as exc:
                        records.append(StabilityRecord(
                            family, n, delta, measure, order,
                            norm=HyperbolicNumber(math.nan, math.nan),
                            ratio=HyperbolicNumber(math.nan, math.nan),
                            error=type(exc).__name__,
                        ))
    records.sort(key=lambda r: (
        r.family, _measure_key(r.measure, r.order), r.n, r.delta))
    return records
