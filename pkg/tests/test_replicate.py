"""Replication fan-out: determinism, pooling, and parallel equivalence."""

import numpy as np
import pytest

from prefattach.errors import RangeError
from prefattach.graph import ModelConfig, run_chain
from prefattach.laws import deterministic
from prefattach.replicate import replicate
from prefattach.streams import mix64


def _model(n=300, **kw):
    base = dict(
        beta=0.0,
        edge_law=deterministic(1),
        n=n,
        probe_vertices=(1,),
        record_stride=max(1, n // 10),
        seed=0,
    )
    base.update(kw)
    return ModelConfig(**base)


class TestDeterminism:
    def test_replicate_zero_matches_a_direct_run(self):
        agg = replicate(_model(), 4, task="simulate", master_seed=11)
        direct = run_chain(_model(seed=mix64(11, 0)))
        assert agg.replicates[0].counts == dict(direct.ledger.counts)
        assert agg.replicates[0].max_degree == direct.ledger.max_degree

    def test_parallel_and_serial_runs_are_bit_identical(self):
        serial = replicate(_model(), 8, task="simulate", master_seed=11, parallelism=1)
        parallel = replicate(_model(), 8, task="simulate", master_seed=11, parallelism=2)
        assert serial.digest() == parallel.digest()

    def test_digest_is_stable_across_calls(self):
        a = replicate(_model(), 3, task="simulate", master_seed=5)
        b = replicate(_model(), 3, task="simulate", master_seed=5)
        assert a.digest() == b.digest()

    def test_digest_reacts_to_the_master_seed(self):
        a = replicate(_model(), 3, task="simulate", master_seed=5)
        b = replicate(_model(), 3, task="simulate", master_seed=6)
        assert a.digest() != b.digest()

    def test_replicates_come_back_in_index_order(self):
        agg = replicate(_model(), 6, task="simulate", master_seed=2, parallelism=2)
        assert [r.index for r in agg.replicates] == list(range(6))


class TestPooling:
    def test_pooled_degree_total_is_the_exact_handshake_sum(self):
        reps, n = 100, 10_000
        agg = replicate(_model(n=n), reps, task="simulate", master_seed=7)
        pooled_total = sum(j * c for j, c in agg.pooled_counts.items())
        assert pooled_total == reps * (2 + 2 * n)
        assert sum(agg.pooled_counts.values()) == reps * (n + 2)

    def test_pooled_counts_sum_the_per_run_counts(self):
        agg = replicate(_model(n=200), 5, task="simulate", master_seed=3)
        recombined = {}
        for rep in agg.replicates:
            for j, c in rep.counts.items():
                recombined[j] = recombined.get(j, 0) + c
        assert recombined == agg.pooled_counts


class TestEmbedTask:
    def test_embed_summaries_carry_event_times_and_weights(self):
        n = 200
        agg = replicate(_model(n=n), 3, task="embed", master_seed=5)
        for rep in agg.replicates:
            assert rep.taus.shape == (n,)
            assert rep.s_values.shape == (n + 1,)
            assert np.all(np.diff(rep.taus) > 0)
        assert sum(agg.pooled_counts.values()) == 3 * (n + 2)

    def test_unknown_task_is_rejected(self):
        with pytest.raises(RangeError):
            replicate(_model(), 2, task="nope")
