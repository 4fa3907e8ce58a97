"""Continuous-time size processes and the event-clock construction.

A size process sits in state i and waits an Exponential(i + beta) time; at
the event its size jumps by X, drawn from the edge-count law.  With beta = 0
this is a pure branching population (every individual carries an independent
unit-rate clock; a death is replaced by 1 + X children, so the net jump is
+X at total rate i).  With beta > 0 the same jump chain also arises as the
superposition of an initial population plus descendants of immigrants that
arrive at Poisson(beta) times, each founding an independent beta = 0 copy.
Both representations are implemented and can be checked against each other.

The event-clock construction couples a whole family of such processes to the
growing graph: each vertex owns a process (started at its birth), all clocks
run in parallel, and the k-th event overall reproduces the k-th attachment
step of the discrete chain.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import MismatchedLengths, NonPositiveMean, RangeError
from .laws import EdgeCountDistribution, validate_edge_law


@dataclass(frozen=True)
class BranchingConfig:
    """One size process: edge-count law, immigration rate, starting size.

    ``initial`` is the fixed starting size; pass None to draw it from the
    edge-count law instead.
    """

    edge_law: EdgeCountDistribution
    beta: float = 0.0
    initial: int | None = 1

    def __post_init__(self):
        if not np.isfinite(self.beta) or self.beta < 0:
            raise RangeError("branching.beta", f"must be finite and >= 0, got {self.beta}")
        if self.initial is not None and self.initial < 1:
            raise RangeError("branching.initial", "starting size must be >= 1")
        object.__setattr__(self, "edge_law", validate_edge_law(self.edge_law))

    def draw_initial(self, rng: np.random.Generator) -> int:
        return self.initial if self.initial is not None else self.edge_law.sample_one(rng)


@dataclass(frozen=True)
class JumpPath:
    """A piecewise-constant, increasing path: size after each event.

    ``times`` are the event times (strictly increasing, all within the run's
    horizon); ``values[k]`` is the size right after the event at ``times[k]``.
    The path starts at ``initial`` at time 0.
    """

    initial: int
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.times.shape != self.values.shape:
            raise MismatchedLengths("times and values differ in length")
        if self.times.shape[0]:
            if not np.all(np.diff(self.times) > 0) or self.times[0] <= 0:
                raise RangeError("path.times", "event times must be strictly increasing")
            jumps = np.diff(self.values, prepend=self.initial)
            if not np.all(jumps >= 1):
                raise RangeError("path.values", "every jump must be >= 1")

    @property
    def final(self) -> int:
        return int(self.values[-1]) if self.values.shape[0] else self.initial

    def value_at(self, t: float) -> int:
        """Size at time t (right-continuous)."""
        k = int(np.searchsorted(self.times, t, side="right"))
        return self.initial if k == 0 else int(self.values[k - 1])


def _jump_chain(
    initial: int,
    beta: float,
    law: EdgeCountDistribution,
    horizon: float,
    rng: np.random.Generator,
    max_events: int | None = None,
) -> JumpPath:
    """Draw the jump chain directly: wait Exp(size + beta), jump by X."""
    t = 0.0
    size = int(initial)
    times_parts: list[np.ndarray] = []
    value_parts: list[np.ndarray] = []
    remaining = max_events
    block = 256
    while remaining is None or remaining > 0:
        b = block if remaining is None else min(block, remaining)
        xs = law.sample(rng, b)
        post = size + np.cumsum(xs)
        rates = (post - xs) + beta
        ts = t + np.cumsum(rng.standard_exponential(b) / rates)
        cut = int(np.searchsorted(ts, horizon, side="right"))
        if cut < b:
            times_parts.append(ts[:cut])
            value_parts.append(post[:cut])
            break
        times_parts.append(ts)
        value_parts.append(post)
        t = float(ts[-1])
        size = int(post[-1])
        if remaining is not None:
            remaining -= b
        block = min(block * 4, 1 << 16)
    if times_parts:
        times = np.concatenate(times_parts)
        values = np.concatenate(value_parts)
    else:
        times = np.empty(0)
        values = np.empty(0, dtype=np.int64)
    return JumpPath(initial=int(initial), times=times, values=values)


def simulate_mbp(
    config: BranchingConfig,
    horizon: float,
    rng: np.random.Generator,
    max_events: int | None = None,
) -> JumpPath:
    """One pure (no-immigration) size process up to ``horizon``.

    ``max_events`` optionally truncates the path after that many events,
    which keeps first-event studies cheap.
    """
    if config.beta != 0.0:
        raise RangeError("branching.beta", "pure process needs beta = 0")
    if horizon < 0:
        raise RangeError("horizon", "must be >= 0")
    initial = config.draw_initial(rng)
    return _jump_chain(initial, 0.0, config.edge_law, horizon, rng, max_events)


def simulate_mbpi(
    config: BranchingConfig,
    horizon: float,
    rng: np.random.Generator,
    representation: str = "jump-chain",
    max_events: int | None = None,
) -> JumpPath:
    """A size process with immigration at rate beta, up to ``horizon``.

    ``representation`` selects how the path is built:

    * "jump-chain": wait Exp(size + beta), jump by X (single process);
    * "superposition": an initial pure process plus, at each Poisson(beta)
      arrival, an independent pure process started from a fresh X, all
      added together.

    The two constructions have the same law; drawing both with independent
    generators and comparing marginals is one of the package's self-checks.
    ``max_events`` is only supported for the jump-chain form.
    """
    if horizon < 0:
        raise RangeError("horizon", "must be >= 0")
    if representation == "jump-chain":
        initial = config.draw_initial(rng)
        return _jump_chain(initial, config.beta, config.edge_law, horizon, rng, max_events)
    if representation != "superposition":
        raise RangeError("representation", f"unknown representation {representation!r}")
    if max_events is not None:
        raise RangeError("max_events", "only the jump-chain form supports max_events")

    law = config.edge_law
    initial = config.draw_initial(rng)
    arrivals: list[float] = []
    if config.beta > 0.0:
        t = 0.0
        scale = 1.0 / config.beta
        while True:
            t += rng.exponential(scale)
            if t > horizon:
                break
            arrivals.append(t)

    all_times = [np.empty(0)]
    all_jumps = [np.empty(0, dtype=np.int64)]
    base = _jump_chain(initial, 0.0, law, horizon, rng)
    all_times.append(base.times)
    all_jumps.append(np.diff(base.values, prepend=base.initial).astype(np.int64))
    for t_i in arrivals:
        x_i = law.sample_one(rng)
        branch = _jump_chain(x_i, 0.0, law, horizon - t_i, rng)
        all_times.append(np.concatenate(([t_i], t_i + branch.times)))
        jumps = np.diff(branch.values, prepend=branch.initial).astype(np.int64)
        all_jumps.append(np.concatenate(([x_i], jumps)))

    times = np.concatenate(all_times)
    jumps = np.concatenate(all_jumps)
    order = np.argsort(times, kind="stable")
    times = times[order]
    values = initial + np.cumsum(jumps[order])
    return JumpPath(initial=initial, times=times, values=values)


@dataclass(frozen=True)
class EmbeddingResult:
    """The event-clock family after n events.

    ``sizes[i-1]`` is process i's size at the last event time; processes 1
    and 2 start at time 0 with size 1, process j >= 3 is born at event j-2
    with size X_{j-2}.  ``taus`` are the event times, ``chosen`` the owner of
    each event, ``xs`` the net additions, and ``s_values[k]`` the total rate
    ledger after k events: sum of sizes plus (number of processes) * beta.
    """

    sizes: np.ndarray
    start_times: np.ndarray
    taus: np.ndarray
    chosen: np.ndarray
    xs: np.ndarray
    s_values: np.ndarray


def run_embedding(
    edge_law: EdgeCountDistribution,
    beta: float,
    n: int,
    rng: np.random.Generator,
) -> EmbeddingResult:
    """Run the coupled family of clocks for n events.

    Each process i carries an exponential clock at rate size_i + beta; the
    earliest clock fires, its owner gains X, and a new process of size X is
    born at that instant.  Reading off the owners and the X's reproduces the
    discrete chain's attachment steps, and the event times carry the
    continuous-time information.
    """
    if n < 0:
        raise RangeError("n", "must be >= 0")
    law = validate_edge_law(edge_law)
    if not np.isfinite(beta) or beta < 0:
        raise RangeError("beta", f"must be finite and >= 0, got {beta}")

    sizes = [1, 1]
    start_times = [0.0, 0.0]
    rate0 = 1.0 + beta
    heap = [(rng.exponential(1.0 / rate0), 1), (rng.exponential(1.0 / rate0), 2)]
    heapq.heapify(heap)

    taus = np.empty(n)
    chosen = np.empty(n, dtype=np.int64)
    xs = np.empty(n, dtype=np.int64)
    s_values = np.empty(n + 1)
    size_sum = 2
    s_values[0] = size_sum + 2 * beta

    pop, push = heapq.heappop, heapq.heappush
    exp = rng.exponential
    for k in range(n):
        t, i = pop(heap)
        x = law.sample_one(rng)
        sizes[i - 1] += x
        push(heap, (t + exp(1.0 / (sizes[i - 1] + beta)), i))
        sizes.append(x)
        start_times.append(t)
        push(heap, (t + exp(1.0 / (x + beta)), len(sizes)))
        size_sum += 2 * x
        taus[k] = t
        chosen[k] = i
        xs[k] = x
        s_values[k + 1] = size_sum + (k + 3) * beta

    return EmbeddingResult(
        sizes=np.asarray(sizes, dtype=np.int64),
        start_times=np.asarray(start_times),
        taus=taus,
        chosen=chosen,
        xs=xs,
        s_values=s_values,
    )


@dataclass(frozen=True)
class TauDiagnostics:
    """Residual series for the event-time asymptotics.

    ``martingale_residual[k]`` = tau_{k+1} - sum_{j<=k} 1/S_j has mean zero
    by construction (each wait is Exp(S_j)); ``log_drift_residual[k]`` =
    tau_{k+1} - alpha log(k+1) should settle near a random constant, with
    alpha = 1/(2m + beta).  Tail oscillations are max - min over the last
    half of the indices.
    """

    alpha: float
    martingale_residual: np.ndarray
    log_drift_residual: np.ndarray
    martingale_tail_osc: float
    log_drift_tail_osc: float


def tau_diagnostics(
    taus: np.ndarray, s_values: np.ndarray, m: float, beta: float
) -> TauDiagnostics:
    """Center the event times by their exact and asymptotic drifts."""
    taus = np.asarray(taus, dtype=float)
    s_values = np.asarray(s_values, dtype=float)
    n = taus.shape[0]
    if n < 1:
        raise MismatchedLengths("need at least one event time")
    if s_values.shape[0] not in (n, n + 1):
        raise MismatchedLengths(
            f"need S_0..S_{n - 1} (or through S_n); got {s_values.shape[0]} values"
        )
    if m <= 0:
        raise NonPositiveMean("mean edge count must be positive")
    alpha = 1.0 / (2.0 * m + beta)
    drift = np.cumsum(1.0 / s_values[:n])
    mart = taus - drift
    logd = taus - alpha * np.log(np.arange(1, n + 1))
    half = n // 2
    return TauDiagnostics(
        alpha=alpha,
        martingale_residual=mart,
        log_drift_residual=logd,
        martingale_tail_osc=float(mart[half:].max() - mart[half:].min()),
        log_drift_tail_osc=float(logd[half:].max() - logd[half:].min()),
    )


@dataclass(frozen=True)
class ScaledTrajectory:
    """D(t) e^{-mt} sampled at the path's event times (plus t = 0)."""

    times: np.ndarray
    scaled: np.ndarray
    tail_oscillation: float  # (max - min) / mean over the trailing time window
    tail_mean: float


def zeta_trajectory(path: JumpPath, m: float, tail_fraction: float = 0.25) -> ScaledTrajectory:
    """Scale a path by its exponential growth and measure the tail plateau.

    The trailing window is the last ``tail_fraction`` of the time horizon
    (by time, not by event count).
    """
    if m <= 0:
        raise NonPositiveMean("growth rate m must be positive")
    if not 0.0 < tail_fraction <= 1.0:
        raise RangeError("tail_fraction", "must be in (0, 1]")
    times = np.concatenate(([0.0], path.times))
    sizes = np.concatenate(([path.initial], path.values)).astype(float)
    scaled = sizes * np.exp(-m * times)
    t_end = times[-1]
    window = scaled[times >= (1.0 - tail_fraction) * t_end]
    mean = float(window.mean())
    osc = float((window.max() - window.min()) / mean) if mean > 0 else float("inf")
    return ScaledTrajectory(times=times, scaled=scaled, tail_oscillation=osc, tail_mean=mean)
