"""Run-configuration parsing: defaults, file/flag precedence, validation."""

import json

import pytest

from prefattach.config import parse_config
from prefattach.errors import ParseError, RangeError


class TestDefaults:
    def test_minimal_input_fills_every_default(self):
        cfg = parse_config(None, {"law": "det:1", "beta": 0, "n": 1000})
        assert cfg.model.seed == 0
        assert cfg.model.record_stride == 1  # max(1, n // 1000)
        assert cfg.model.probe_vertices == (1, 2)
        assert cfg.replications == 1
        assert cfg.parallelism == 1
        assert cfg.out_dir == "results"
        assert cfg.j_max == 200
        assert cfg.profile == "full"
        assert cfg.horizon == 8.0

    def test_stride_default_scales_with_run_length(self):
        cfg = parse_config(None, {"law": "det:1", "n": 5000})
        assert cfg.model.record_stride == 5


class TestPrecedence:
    def test_flags_override_file_values(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"law": "geom:0.5", "n": 50, "seed": 9}))
        cfg = parse_config(str(path), {"n": 75, "seed": None})
        assert cfg.model.edge_law.label() == "geom:0.5"  # from file
        assert cfg.model.n == 75  # flag wins
        assert cfg.model.seed == 9  # None flag defers to the file

    def test_probe_lists_accept_comma_strings(self):
        cfg = parse_config(None, {"law": "det:1", "probes": "3,4"})
        assert cfg.model.probe_vertices == (3, 4)

    def test_thresholds_pass_through(self):
        cfg = parse_config(None, {"law": "det:1", "thresholds": {"degree-lln": 0.5}})
        assert cfg.thresholds == {"degree-lln": 0.5}


class TestValidation:
    def test_unknown_keys_are_parse_errors(self):
        with pytest.raises(ParseError):
            parse_config(None, {"law": "det:1", "bogus_key": 1})

    def test_malformed_json_is_a_parse_error(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            parse_config(str(path), {})

    def test_negative_offset_reports_its_field_path(self):
        with pytest.raises(RangeError) as err:
            parse_config(None, {"law": "det:1", "beta": -1})
        assert err.value.field == "model.beta"

    def test_replication_count_floor(self):
        with pytest.raises(RangeError) as err:
            parse_config(None, {"law": "det:1", "reps": 0})
        assert err.value.field == "run.reps"

    def test_unknown_profile_is_rejected(self):
        with pytest.raises(RangeError) as err:
            parse_config(None, {"law": "det:1", "profile": "nope"})
        assert err.value.field == "run.profile"

    def test_bad_law_string_propagates(self):
        with pytest.raises(ParseError):
            parse_config(None, {"law": "foo:1"})
