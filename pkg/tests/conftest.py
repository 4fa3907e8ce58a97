"""Shared test configuration.

Property-based tests run under a single profile so the whole suite stays
fast and deterministic in CI; statistical tests pin their RNG substreams
explicitly inside each test.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
