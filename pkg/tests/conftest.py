import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from scholar_atlas import synth
from scholar_atlas.profiles import profile_set_to_dict

# numeric property tests call the eigensolver repeatedly; wall-clock
# deadlines just add flake on loaded CI machines
settings.register_profile(
    "package", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("package")


@pytest.fixture(scope="session")
def small_profiles():
    """10 researchers, 8 publications each, plus one with no text at all."""
    return synth.make_profile_set(10, pubs_per_researcher=8, seed=101, n_empty=1)


@pytest.fixture(scope="session")
def tiny_profiles():
    return synth.make_profile_set(6, pubs_per_researcher=5, seed=7)


@pytest.fixture()
def profiles_file(tmp_path, tiny_profiles):
    path = tmp_path / "profiles.json"
    path.write_text(
        json.dumps(profile_set_to_dict(tiny_profiles), ensure_ascii=False), encoding="utf-8"
    )
    return path


def pytest_runtest_logreport(report):
    """One visible PASS/FAIL line per acceptance criterion."""
    if report.when != "call":
        return
    module = report.nodeid.split("::", 1)[0]
    if not module.endswith("test_acceptance.py"):
        return
    name = report.nodeid.split("::", 1)[1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[ACCEPTANCE] {name}: {outcome}")
