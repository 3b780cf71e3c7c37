"""Frequentist validation harness: coverage of the 95% credible interval
and relative root-MSE over a grid of true alpha values, plus single-dataset
case studies.

Reproducibility contract: every (alpha index, replicate index) pair derives
its data and chain seeds from the master seed through a SeedSequence spawn
key, so results are bit-identical regardless of worker count or scheduling;
aggregation is an ordered reduction over (alpha, replicate).
"""

from __future__ import annotations

import concurrent.futures
import csv
import os
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .distribution import FrequencySample, sample
from .inference import (
    Chain,
    McmcConfig,
    PosteriorSummary,
    sample_posterior_continuous,
    sample_posterior_discrete,
    summarize,
)
from .priors import GridPrior, JeffreysPrior, loss_based_prior

__all__ = [
    "PriorSpec",
    "StudyConfig",
    "StudyRow",
    "StudyResult",
    "run_coverage_study",
    "run_fixed_sample_study",
    "default_grid",
]


@dataclass(frozen=True)
class PriorSpec:
    """Which prior a study fits: Jeffreys or loss-based with grid size m."""

    kind: str  # "jeffreys" | "loss"
    m: int | None = None

    def __post_init__(self):
        if self.kind not in ("jeffreys", "loss"):
            raise ValueError(f"prior kind must be 'jeffreys' or 'loss', got {self.kind}")
        if self.kind == "loss" and (self.m is None or self.m < 3):
            raise ValueError("loss-based prior needs a grid denominator m >= 3")

    @property
    def label(self) -> str:
        return "jeffreys" if self.kind == "jeffreys" else f"loss-m{self.m}"


@dataclass(frozen=True)
class StudyConfig:
    """Coverage-study settings.

    ``mcmc.seed`` is ignored: replicate chains derive their seeds from
    ``master_seed`` (see module docstring).
    """

    alphas: tuple[float, ...]
    n: int
    replicates: int
    mcmc: McmcConfig
    prior_spec: PriorSpec
    master_seed: int

    def __post_init__(self):
        if not self.alphas:
            raise ValueError("at least one true alpha is required")
        for a in self.alphas:
            if not 0.0 < a < 1.0:
                raise ValueError(f"true alpha values must lie in (0, 1), got {a}")
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")
        if self.n < 1:
            raise ValueError(f"sample size must be >= 1, got {self.n}")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))


@dataclass(frozen=True)
class StudyRow:
    alpha: float
    coverage: float
    rel_rmse_mean: float
    rel_rmse_median: float
    failures: int


@dataclass(frozen=True)
class StudyResult:
    rows: tuple[StudyRow, ...]

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["alpha", "coverage", "rel_rmse_mean", "rel_rmse_median", "failures"]
            )
            for row in self.rows:
                writer.writerow(
                    [
                        f"{row.alpha:.17g}",
                        f"{row.coverage:.17g}",
                        f"{row.rel_rmse_mean:.17g}",
                        f"{row.rel_rmse_median:.17g}",
                        row.failures,
                    ]
                )


def default_grid(m: int) -> tuple[float, ...]:
    """The study grid matching a discretization denominator: {i/m}."""
    return tuple(np.arange(1, m, dtype=np.float64) / m)


def _replicate_seeds(master_seed: int, alpha_idx: int, rep_idx: int) -> tuple[int, int]:
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(alpha_idx, rep_idx))
    state = ss.generate_state(4, dtype=np.uint64)
    return int(state[0]), int(state[1])


def _fit_one(
    alpha_true: float,
    n: int,
    data_seed: int,
    chain_seed: int,
    mcmc: McmcConfig,
    prior,
) -> PosteriorSummary:
    data = FrequencySample.from_observations(sample(alpha_true, n, data_seed))
    cfg = replace(mcmc, seed=chain_seed)
    if isinstance(prior, GridPrior):
        chain = sample_posterior_discrete(data, prior, cfg)
    else:
        chain = sample_posterior_continuous(data, prior, cfg)
    return summarize(chain)


def _run_task(args) -> tuple[int, int, PosteriorSummary | None]:
    alpha_idx, rep_idx, alpha_true, n, master_seed, mcmc, prior = args
    data_seed, chain_seed = _replicate_seeds(master_seed, alpha_idx, rep_idx)
    try:
        summary = _fit_one(alpha_true, n, data_seed, chain_seed, mcmc, prior)
    except Exception:
        return alpha_idx, rep_idx, None
    return alpha_idx, rep_idx, summary


def _build_prior(spec: PriorSpec):
    if spec.kind == "jeffreys":
        return JeffreysPrior()
    return loss_based_prior(spec.m)


def run_coverage_study(cfg: StudyConfig, workers: int | None = None) -> StudyResult:
    """Coverage and relative root-MSE per true alpha.

    For each alpha: ``cfg.replicates`` datasets of size ``cfg.n`` are
    generated and fitted; coverage is the fraction of replicates whose
    [0.025, 0.975] interval contains the truth, and rel_rmse is
    sqrt(MSE)/alpha computed from the posterior means (and, in the second
    column, medians).  Replicates that fail numerically are counted in the
    ``failures`` column instead of aborting the study.

    Replicates execute concurrently up to ``workers`` (default: machine
    parallelism); output is independent of the worker count.
    """
    prior = _build_prior(cfg.prior_spec)
    tasks = [
        (ia, ir, alpha, cfg.n, cfg.master_seed, cfg.mcmc, prior)
        for ia, alpha in enumerate(cfg.alphas)
        for ir in range(cfg.replicates)
    ]
    if workers is None:
        workers = os.cpu_count() or 1
    results: dict[tuple[int, int], PosteriorSummary | None] = {}
    if workers <= 1 or len(tasks) == 1:
        for task in tasks:
            ia, ir, summary = _run_task(task)
            results[(ia, ir)] = summary
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for ia, ir, summary in pool.map(_run_task, tasks, chunksize=4):
                results[(ia, ir)] = summary

    rows = []
    for ia, alpha in enumerate(cfg.alphas):
        summaries = [results[(ia, ir)] for ir in range(cfg.replicates)]
        ok = [s for s in summaries if s is not None]
        failures = len(summaries) - len(ok)
        if not ok:
            rows.append(StudyRow(alpha, 0.0, float("nan"), float("nan"), failures))
            continue
        covered = np.array([s.ci_low <= alpha <= s.ci_high for s in ok], dtype=float)
        means = np.array([s.mean for s in ok])
        medians = np.array([s.median for s in ok])
        rows.append(
            StudyRow(
                alpha,
                float(covered.mean()),
                float(np.sqrt(np.mean((means - alpha) ** 2)) / alpha),
                float(np.sqrt(np.mean((medians - alpha) ** 2)) / alpha),
                failures,
            )
        )
    return StudyResult(tuple(rows))


def run_fixed_sample_study(
    alpha_true: float, n: int, seed: int
) -> dict[str, PosteriorSummary]:
    """One simulated dataset, three fits: Jeffreys, loss m=10, loss m=20.

    Uses the 10,000-iteration / 2,000-burn-in budget; returns summaries
    keyed by prior label, in that order.
    """
    ss = np.random.SeedSequence(entropy=seed)
    state = ss.generate_state(8, dtype=np.uint64)
    data_seed = int(state[0])
    data = FrequencySample.from_observations(sample(alpha_true, n, data_seed))
    out: dict[str, PosteriorSummary] = {}
    for i, spec in enumerate(
        (PriorSpec("jeffreys"), PriorSpec("loss", 10), PriorSpec("loss", 20))
    ):
        cfg = McmcConfig(iterations=10_000, burn_in=2_000, seed=int(state[i + 1]))
        prior = _build_prior(spec)
        if spec.kind == "jeffreys":
            chain = sample_posterior_continuous(data, prior, cfg)
        else:
            chain = sample_posterior_discrete(data, prior, cfg)
        out[spec.label] = summarize(chain)
    return out
