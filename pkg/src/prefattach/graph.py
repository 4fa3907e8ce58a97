"""The growing multigraph: degree ledger, attachment steps, full runs.

The graph starts as two vertices joined by one edge.  Step n -> n+1 creates
vertex n+3 and joins it to a single existing vertex i, chosen with probability
proportional to d_i(n) + beta, by X parallel edges (X from the configured
edge-count law).  The chosen vertex gains X degree, the new vertex starts with
degree X.

Selection is done in two stages that together realize the weights exactly:
with probability T / (T + (n+2) beta), where T is the current total degree,
pick a uniform entry of the edge-endpoint multiset (each vertex appears d_i
times, so this lands on i with probability d_i / T); otherwise pick a vertex
uniformly.  Mixing the two gives (d_i + beta) / (T + (n+2) beta) for every i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import BetaNotZero, OverflowGuard, RangeError
from .laws import EdgeCountDistribution, GroupingLaw, validate_edge_law

_INT_GUARD = 2**62  # stay far inside exact int64 territory


@dataclass(frozen=True)
class ModelConfig:
    """Immutable description of one chain run."""

    beta: float
    edge_law: EdgeCountDistribution
    n: int
    probe_vertices: tuple[int, ...] = ()
    record_stride: int = 1
    seed: int = 0

    def __post_init__(self):
        if not np.isfinite(self.beta) or self.beta < 0:
            raise RangeError("model.beta", f"must be finite and >= 0, got {self.beta}")
        if self.n < 0:
            raise RangeError("model.n", f"must be >= 0, got {self.n}")
        if self.record_stride < 1:
            raise RangeError("model.record_stride", "must be >= 1")
        if any(v < 1 for v in self.probe_vertices):
            raise RangeError("model.probe_vertices", "vertex labels start at 1")
        object.__setattr__(self, "edge_law", validate_edge_law(self.edge_law))
        object.__setattr__(self, "probe_vertices", tuple(int(v) for v in self.probe_vertices))


class StepOutcome(NamedTuple):
    """What one attachment step did."""

    chosen_vertex: int
    x: int
    new_vertex: int


class DegreeLedger:
    """Mutable degree bookkeeping for the growing graph.

    Vertices are labelled from 1.  ``degrees`` is the live degree sequence,
    ``endpoints`` the edge-endpoint multiset (vertex i appears d_i times),
    ``counts`` maps degree j to the number of vertices of that degree, and
    ``max_degree`` / ``argmax`` track the current maximum and the smallest
    vertex attaining it.
    """

    __slots__ = (
        "_deg",
        "_ends",
        "_ends_len",
        "counts",
        "total_degree",
        "step",
        "max_degree",
        "argmax",
        "x_total",
    )

    def __init__(self, capacity_vertices: int, capacity_endpoints: int):
        self._deg = np.zeros(capacity_vertices + 1, dtype=np.int64)  # slot 0 unused
        self._ends = np.empty(capacity_endpoints, dtype=np.int64)
        self._ends_len = 0
        self.counts: dict[int, int] = {}
        self.total_degree = 0
        self.step = 0
        self.max_degree = 0
        self.argmax = 0
        self.x_total = 0

    @property
    def n_vertices(self) -> int:
        return self.step + 2

    @property
    def degrees(self) -> np.ndarray:
        """Degrees of vertices 1..n+2 (index 0 of the view is vertex 1)."""
        return self._deg[1 : self.n_vertices + 1]

    @property
    def endpoints(self) -> np.ndarray:
        """The live prefix of the endpoint multiset."""
        return self._ends[: self._ends_len]

    def degree_of(self, vertex: int) -> int:
        return int(self._deg[vertex]) if vertex <= self.n_vertices else 0

    def _ensure_endpoint_capacity(self, extra: int) -> None:
        need = self._ends_len + extra
        if need > self._ends.shape[0]:
            grown = np.empty(max(need, int(self._ends.shape[0] * 1.6) + 16), dtype=np.int64)
            grown[: self._ends_len] = self._ends[: self._ends_len]
            self._ends = grown

    def _ensure_vertex_capacity(self, vertex: int) -> None:
        if vertex >= self._deg.shape[0]:
            grown = np.zeros(max(vertex + 1, int(self._deg.shape[0] * 1.6) + 16), dtype=np.int64)
            grown[: self._deg.shape[0]] = self._deg
            self._deg = grown

    def _count_move(self, old: int, new: int) -> None:
        counts = self.counts
        if old:
            left = counts[old] - 1
            if left:
                counts[old] = left
            else:
                del counts[old]
        counts[new] = counts.get(new, 0) + 1

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "DegreeLedger":
        """Assemble a ledger from an explicit degree sequence (vertex 1 first).

        Useful for frozen-state sampling tests and for the grouped-degree
        construction; ``step`` is set to len(degrees) - 2 so that the
        selection weights see the right vertex count.
        """
        seq = np.asarray(list(degrees), dtype=np.int64)
        if seq.ndim != 1 or seq.shape[0] < 1:
            raise RangeError("degrees", "need at least one vertex")
        if np.any(seq < 1):
            raise RangeError("degrees", "degrees must be >= 1")
        total = int(seq.sum())
        ledger = cls(capacity_vertices=seq.shape[0], capacity_endpoints=total)
        ledger._deg[1 : seq.shape[0] + 1] = seq
        ledger._ends_len = total
        ledger._ends[:] = np.repeat(np.arange(1, seq.shape[0] + 1, dtype=np.int64), seq)
        vals, cnts = np.unique(seq, return_counts=True)
        ledger.counts = {int(v): int(c) for v, c in zip(vals, cnts)}
        ledger.total_degree = total
        ledger.step = seq.shape[0] - 2
        ledger.max_degree = int(seq.max())
        ledger.argmax = int(np.argmax(seq)) + 1
        ledger.x_total = (total - 2) // 2
        return ledger


def init_graph(config: ModelConfig) -> DegreeLedger:
    """The two-vertex, one-edge starting graph, sized for config.n steps."""
    mean_x = config.edge_law.mean
    hint = 2 + int(2.2 * mean_x * config.n) + 64
    ledger = DegreeLedger(capacity_vertices=config.n + 2, capacity_endpoints=hint)
    ledger._deg[1] = 1
    ledger._deg[2] = 1
    ledger._ends[0] = 1
    ledger._ends[1] = 2
    ledger._ends_len = 2
    ledger.counts = {1: 2}
    ledger.total_degree = 2
    ledger.max_degree = 1
    ledger.argmax = 1
    return ledger


def choose_vertex(ledger: DegreeLedger, beta: float, rng: np.random.Generator) -> int:
    """Draw the attachment target from the current state, without mutating.

    Implements the two-stage mixture described in the module docstring; for
    beta = 0 it always takes the endpoint route.
    """
    total = ledger.total_degree
    if beta > 0.0:
        n_vert = ledger.step + 2
        if rng.random() * (total + n_vert * beta) >= total:
            return 1 + int(rng.random() * n_vert)
    return int(ledger._ends[int(rng.random() * total)])


def attach_step(
    ledger: DegreeLedger,
    beta: float,
    edge_law: EdgeCountDistribution,
    rng: np.random.Generator,
) -> StepOutcome:
    """Advance the graph by one step, mutating the ledger."""
    if ledger.total_degree > _INT_GUARD:
        raise OverflowGuard("total degree would exceed the exact integer range")
    i = choose_vertex(ledger, beta, rng)
    x = edge_law.sample_one(rng)
    v = ledger.step + 3

    ledger._ensure_vertex_capacity(v)
    ledger._ensure_endpoint_capacity(2 * x)
    ends, pos = ledger._ends, ledger._ends_len
    if x == 1:
        ends[pos] = i
        ends[pos + 1] = v
    else:
        ends[pos : pos + x] = i
        ends[pos + x : pos + 2 * x] = v
    ledger._ends_len = pos + 2 * x

    deg = ledger._deg
    old = int(deg[i])
    new = old + x
    deg[i] = new
    deg[v] = x
    ledger._count_move(old, new)
    ledger._count_move(0, x)
    ledger.total_degree += 2 * x
    ledger.step += 1
    ledger.x_total += x

    # Max/argmax update: degrees never decrease, so only the two touched
    # vertices can change the maximum; ties resolve to the smaller label.
    if new > ledger.max_degree or (new == ledger.max_degree and i < ledger.argmax):
        ledger.max_degree, ledger.argmax = new, i
    if x > ledger.max_degree:
        ledger.max_degree, ledger.argmax = x, v
    return StepOutcome(chosen_vertex=i, x=x, new_vertex=v)


@dataclass(frozen=True)
class RunResult:
    """Everything recorded along one chain run."""

    config: ModelConfig
    ledger: DegreeLedger
    steps: np.ndarray  # recorded step indices, increasing, 0 and n included
    probes: dict[int, np.ndarray]  # vertex -> degree at each recorded step
    max_series: np.ndarray  # M_n at each recorded step
    argmax_series: np.ndarray  # I_n at each recorded step
    snapshots: dict[int, dict[int, int]] = field(default_factory=dict)


def run_chain(config: ModelConfig, snapshot_steps: Iterable[int] = ()) -> RunResult:
    """Run the chain for config.n steps, deterministically in config.seed."""
    rng = np.random.default_rng(config.seed)
    ledger = init_graph(config)
    n, stride, beta, law = config.n, config.record_stride, config.beta, config.edge_law
    wanted = sorted(set(int(s) for s in snapshot_steps))
    snap_iter = iter(wanted + [-1])
    next_snap = next(snap_iter)

    probes = {v: [] for v in config.probe_vertices}
    steps_rec: list[int] = []
    max_rec: list[int] = []
    arg_rec: list[int] = []

    def record(k: int) -> None:
        steps_rec.append(k)
        max_rec.append(ledger.max_degree)
        arg_rec.append(ledger.argmax)
        for v, series in probes.items():
            series.append(ledger.degree_of(v))

    snapshots: dict[int, dict[int, int]] = {}
    if next_snap == 0:
        snapshots[0] = dict(ledger.counts)
        next_snap = next(snap_iter)
    record(0)
    for k in range(1, n + 1):
        attach_step(ledger, beta, law, rng)
        if k % stride == 0 or k == n:
            record(k)
        if k == next_snap:
            snapshots[k] = dict(ledger.counts)
            next_snap = next(snap_iter)

    return RunResult(
        config=config,
        ledger=ledger,
        steps=np.asarray(steps_rec, dtype=np.int64),
        probes={v: np.asarray(s, dtype=np.int64) for v, s in probes.items()},
        max_series=np.asarray(max_rec, dtype=np.int64),
        argmax_series=np.asarray(arg_rec, dtype=np.int64),
        snapshots=snapshots,
    )


def group_vertices(
    run: RunResult, grouping: GroupingLaw, rng: np.random.Generator
) -> DegreeLedger:
    """Grouped-degree variant: block-sum the non-root degrees.

    Keeps vertices 1 and 2 as they are, then partitions vertices 3, 4, ...
    (in label order) into consecutive blocks with iid sizes from ``grouping``
    and replaces each complete block by one vertex carrying the block's total
    degree.  A trailing incomplete block is dropped.  Only defined for the
    pure preferential-attachment case (beta = 0).
    """
    if run.config.beta != 0.0:
        raise BetaNotZero("grouped degrees are only defined for beta = 0")
    grouping = validate_edge_law(grouping)
    degrees = run.ledger.degrees
    grouped = [int(degrees[0]), int(degrees[1])]
    pos = 2
    while pos < degrees.shape[0]:
        size = grouping.sample_one(rng)
        if pos + size > degrees.shape[0]:
            break
        grouped.append(int(degrees[pos : pos + size].sum()))
        pos += size
    return DegreeLedger.from_degrees(grouped)


def validate_ledger(ledger: DegreeLedger) -> None:
    """Check the ledger's internal invariants; raises AssertionError."""
    deg = ledger.degrees
    assert np.all(deg >= 1), "every vertex keeps degree >= 1"
    assert int(deg.sum()) == ledger.total_degree
    assert ledger.total_degree == 2 * (1 + ledger.x_total), "handshake identity"
    counted = {}
    for d in deg.tolist():
        counted[d] = counted.get(d, 0) + 1
    assert counted == ledger.counts, "degree counts mirror the degree sequence"
    assert sum(ledger.counts.values()) == ledger.step + 2
    ends = ledger.endpoints
    assert ends.shape[0] == ledger.total_degree
    mult = np.bincount(ends, minlength=deg.shape[0] + 1)[1:]
    assert np.array_equal(mult, deg), "endpoint multiplicities equal degrees"
    assert ledger.max_degree == int(deg.max())
    assert int(deg[ledger.argmax - 1]) == ledger.max_degree
