"""Empirical summaries of runs and their comparison against the limits.

Everything here consumes recorded run output (degree counts, trajectories,
event times) and produces plain verdict objects; no simulation happens in
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Union

import numpy as np
from scipy import stats

from .errors import (
    DegenerateBinning,
    InsufficientBins,
    SeriesTooShort,
    UnboundedF,
)
from .graph import DegreeLedger
from .theory import LimitSpectrum


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Degree frequencies of one graph (or a pool of graphs).

    ``counts[j]`` is the number of vertices of degree j, ``freq[j]`` the
    fraction, ``n`` the number of attachment steps represented (so the
    vertex total is n + 2 for a single run).
    """

    n: int
    counts: dict[int, int]
    freq: dict[int, float]
    support_max: int

    @property
    def n_vertices(self) -> int:
        return sum(self.counts.values())


def empirical_distribution(
    source: Union[DegreeLedger, Mapping[int, int]], n: int | None = None
) -> EmpiricalDistribution:
    """Build degree frequencies from a ledger or a raw {degree: count} map."""
    if isinstance(source, DegreeLedger):
        counts = dict(source.counts)
        n = source.step if n is None else n
    else:
        counts = {int(j): int(c) for j, c in source.items() if c}
        if n is None:
            raise SeriesTooShort("raw count maps need the step count n")
    total = sum(counts.values())
    if total == 0:
        raise SeriesTooShort("no vertices to tabulate")
    freq = {j: c / total for j, c in counts.items()}
    return EmpiricalDistribution(
        n=int(n), counts=counts, freq=freq, support_max=max(counts)
    )


@dataclass(frozen=True)
class LlnComparison:
    """Both sides of sum_j f(j) R_j(n) / n vs sum_j f(j) pi_j."""

    empirical: float
    theoretical: float
    gap: float


def functional_lln(
    f: Callable[[int], float],
    emp: EmpiricalDistribution,
    spectrum: LimitSpectrum,
    bound: float | None = None,
) -> LlnComparison:
    """Compare the empirical additive functional against its limit.

    The empirical side divides by n (the step count), matching the limit
    normalization; with f = 1 it equals (n + 2)/n, close to but not exactly
    the spectrum's total mass.  If ``bound`` is given, |f| is checked against
    it on every evaluated j and UnboundedF raised on violation.
    """
    if emp.n < 1:
        raise SeriesTooShort("need at least one step for the n-normalization")

    def checked(j: int) -> float:
        v = float(f(j))
        if bound is not None and abs(v) > bound:
            raise UnboundedF(f"|f({j})| = {abs(v):g} exceeds the declared bound {bound:g}")
        return v

    empirical = sum(checked(j) * c for j, c in emp.counts.items()) / emp.n
    theoretical = sum(
        checked(j) * spectrum.pi[j] for j in range(1, spectrum.j_max + 1)
    )
    return LlnComparison(
        empirical=empirical, theoretical=theoretical, gap=empirical - theoretical
    )


@dataclass(frozen=True)
class TailFit:
    """Least-squares slope of log-frequency against log-degree."""

    slope: float
    intercept: float
    r_squared: float
    j_min: int
    j_max: int
    n_bins: int


def tail_fit(
    source: Union[EmpiricalDistribution, LimitSpectrum],
    j_min: int,
    j_max: int,
    min_count: int = 5,
) -> TailFit:
    """Fit the tail decay exponent over degrees in [j_min, j_max].

    Empirical sources only contribute degrees with at least ``min_count``
    vertices; theoretical sources contribute wherever pi_j > 0.  Needs at
    least five usable bins.
    """
    if not 1 <= j_min < j_max:
        raise InsufficientBins(f"bad fit range [{j_min}, {j_max}]")
    xs, ys = [], []
    if isinstance(source, EmpiricalDistribution):
        for j in range(j_min, j_max + 1):
            c = source.counts.get(j, 0)
            if c >= min_count:
                xs.append(j)
                ys.append(source.freq[j])
    else:
        top = min(j_max, source.j_max)
        for j in range(j_min, top + 1):
            if source.pi[j] > 0.0:
                xs.append(j)
                ys.append(float(source.pi[j]))
    if len(xs) < 5:
        raise InsufficientBins(
            f"only {len(xs)} usable bins in [{j_min}, {j_max}]; need 5"
        )
    lx, ly = np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys))
    slope, intercept = np.polyfit(lx, ly, 1)
    pred = slope * lx + intercept
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return TailFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r2,
        j_min=j_min,
        j_max=j_max,
        n_bins=len(xs),
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """Tail behaviour of a scaled series.

    ``tail_oscillation`` is (max - min) / mean over the trailing ``window``
    fraction of the recorded points; ``level`` is the trailing mean; the
    verdict passes when the oscillation sits under the threshold and the
    level is positive.
    """

    series_id: str
    tail_oscillation: float
    level: float
    window: float
    threshold: float
    verdict: bool


def _scaled_tail_report(
    series_id: str,
    ns: np.ndarray,
    values: np.ndarray,
    exponent: float,
    window: float,
    threshold: float,
) -> ConvergenceReport:
    ns = np.asarray(ns, dtype=float)
    values = np.asarray(values, dtype=float)
    if ns.shape != values.shape:
        raise SeriesTooShort("ns and values differ in length")
    keep = ns >= 1
    ns, values = ns[keep], values[keep]
    if ns.shape[0] < 10:
        raise SeriesTooShort(f"need >= 10 recorded points, got {ns.shape[0]}")
    if not 0.0 < window <= 1.0:
        raise SeriesTooShort(f"window fraction must be in (0, 1], got {window}")
    scaled = values / ns**exponent
    start = int(np.ceil(ns.shape[0] * (1.0 - window)))
    start = min(start, ns.shape[0] - 2)
    tail = scaled[start:]
    level = float(tail.mean())
    osc = float((tail.max() - tail.min()) / level) if level > 0 else float("inf")
    return ConvergenceReport(
        series_id=series_id,
        tail_oscillation=osc,
        level=level,
        window=window,
        threshold=threshold,
        verdict=bool(osc < threshold and level > 0),
    )


def trajectory_limit_check(
    ns: np.ndarray,
    degrees: np.ndarray,
    exponent: float,
    series_id: str = "trajectory",
    window: float = 0.5,
    threshold: float = 0.2,
) -> ConvergenceReport:
    """Does d(n) / n^exponent settle on a positive plateau?

    Points with n = 0 are dropped before scaling.
    """
    return _scaled_tail_report(series_id, ns, degrees, exponent, window, threshold)


def max_degree_check(
    ns: np.ndarray,
    max_series: np.ndarray,
    exponent: float,
    window: float = 0.5,
    threshold: float = 0.25,
) -> ConvergenceReport:
    """Does M_n / n^exponent settle on a positive plateau?"""
    return _scaled_tail_report("max_degree", ns, max_series, exponent, window, threshold)


@dataclass(frozen=True)
class FreezeReport:
    """When did a series last change, and how much of the horizon is frozen?"""

    last_change_step: int
    frozen_fraction: float


def freeze_detector(ns: np.ndarray, series: np.ndarray) -> FreezeReport:
    """Locate the last recorded change of an (eventually constant) series."""
    ns = np.asarray(ns)
    series = np.asarray(series)
    if ns.shape != series.shape or ns.shape[0] < 2:
        raise SeriesTooShort("need two aligned recorded points at least")
    changes = np.nonzero(series[1:] != series[:-1])[0]
    last = int(ns[changes[-1] + 1]) if changes.shape[0] else 0
    horizon = int(ns[-1])
    frac = (horizon - last) / horizon if horizon > 0 else 1.0
    return FreezeReport(last_change_step=last, frozen_fraction=float(frac))


@dataclass(frozen=True)
class DistanceReport:
    """Total-variation distance between frequencies and the spectrum.

    ``tv_core`` is half the absolute gap summed over j <= j_max;
    ``remainder`` is half of (empirical mass above j_max + truncation mass),
    bounding what the core misses; ``tv`` is their sum.  ``per_j_abs_error``
    is indexed like the spectrum (entry 0 unused).
    """

    tv_core: float
    remainder: float
    per_j_abs_error: np.ndarray

    @property
    def tv(self) -> float:
        return self.tv_core + self.remainder

    @property
    def max_abs_error(self) -> float:
        return float(self.per_j_abs_error.max())


def distribution_distance(
    emp: EmpiricalDistribution, spectrum: LimitSpectrum
) -> DistanceReport:
    """Compare empirical degree frequencies with the limit spectrum."""
    j_max = spectrum.j_max
    gap = np.zeros(j_max + 1)
    above = 0.0
    for j, f in emp.freq.items():
        if j <= j_max:
            gap[j] = f
        else:
            above += f
    gap[1:] -= spectrum.pi[1:]
    np.abs(gap, out=gap)
    return DistanceReport(
        tv_core=float(gap.sum() / 2.0),
        remainder=(above + spectrum.truncation_mass) / 2.0,
        per_j_abs_error=gap,
    )


@dataclass(frozen=True)
class ChiSquareResult:
    """Two-sample chi-square comparison of degree-count pools."""

    statistic: float
    dof: int
    p_value: float
    bins: tuple[tuple[int, int], ...]  # inclusive (lo, hi) degree ranges


def embedding_equivalence_test(
    counts_a: Mapping[int, int],
    counts_b: Mapping[int, int],
    min_expected: float = 5.0,
) -> ChiSquareResult:
    """Two-sample chi-square test that two count pools share one law.

    Adjacent degrees are merged (ascending) until every merged bin has
    expected count >= ``min_expected`` in both samples under the pooled
    frequencies; a trailing short bin is folded into the last one.  Raises
    DegenerateBinning when fewer than two merged bins remain.
    """
    support = sorted(set(counts_a) | set(counts_b))
    if not support:
        raise DegenerateBinning("both pools are empty")
    a = np.array([counts_a.get(j, 0) for j in support], dtype=float)
    b = np.array([counts_b.get(j, 0) for j in support], dtype=float)
    tot_a, tot_b = a.sum(), b.sum()
    if tot_a == 0 or tot_b == 0:
        raise DegenerateBinning("one pool is empty")
    pooled = (a + b) / (tot_a + tot_b)

    bins: list[tuple[int, int]] = []
    obs_a: list[float] = []
    obs_b: list[float] = []
    acc_a = acc_b = acc_p = 0.0
    lo = support[0]
    for idx, j in enumerate(support):
        acc_a += a[idx]
        acc_b += b[idx]
        acc_p += pooled[idx]
        if min(tot_a * acc_p, tot_b * acc_p) >= min_expected:
            bins.append((lo, j))
            obs_a.append(acc_a)
            obs_b.append(acc_b)
            acc_a = acc_b = acc_p = 0.0
            if idx + 1 < len(support):
                lo = support[idx + 1]
    if acc_p > 0.0 and bins:
        # fold the short tail into the last bin
        bins[-1] = (bins[-1][0], support[-1])
        obs_a[-1] += acc_a
        obs_b[-1] += acc_b
    if len(bins) < 2:
        raise DegenerateBinning(f"only {len(bins)} usable bin(s) after merging")

    oa = np.asarray(obs_a)
    ob = np.asarray(obs_b)
    pool = (oa + ob) / (tot_a + tot_b)
    ea, eb = tot_a * pool, tot_b * pool
    statistic = float(np.sum((oa - ea) ** 2 / ea) + np.sum((ob - eb) ** 2 / eb))
    dof = len(bins) - 1
    p = float(stats.chi2.sf(statistic, dof))
    return ChiSquareResult(statistic=statistic, dof=dof, p_value=p, bins=tuple(bins))


def split_half_pvalues(
    pooled_counts: Mapping[int, int],
    n_trials: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Calibration: p-values from random split-halves of one count pool.

    Each trial bisects the pooled observations exactly in half, uniformly at
    random at the observation level (a hypergeometric split), and runs the
    two-sample chi-square on the halves.  Under this permutation null the
    test's p-values must be uniform, so the returned sample is a positive
    control of the statistic, binning, and dof bookkeeping.
    """
    support = sorted(j for j, c in pooled_counts.items() if c)
    if not support:
        raise DegenerateBinning("empty pool")
    colors = np.array([pooled_counts[j] for j in support], dtype=np.int64)
    total = int(colors.sum())
    if total < 4:
        raise DegenerateBinning("need at least 4 pooled observations to split")
    pvals = np.empty(n_trials)
    for t in range(n_trials):
        half_a = rng.multivariate_hypergeometric(colors, total // 2)
        half_b = colors - half_a
        pool_a = {j: int(c) for j, c in zip(support, half_a)}
        pool_b = {j: int(c) for j, c in zip(support, half_b)}
        pvals[t] = embedding_equivalence_test(pool_a, pool_b).p_value
    return pvals


def uniformity_ks(pvalues: np.ndarray) -> float:
    """Kolmogorov-Smirnov statistic of a p-value sample against Uniform(0,1)."""
    return float(stats.kstest(pvalues, "uniform").statistic)
