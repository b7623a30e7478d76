import pytest
from hypothesis import HealthCheck, settings

from gridforge.detect import MAX_DETECTION_RATIO

# random knots come from rejection sampling (links are redrawn), which is
# slow to generate next to the checks themselves on a loaded machine
settings.register_profile("gridforge", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("gridforge")

# criterion number -> (label, list of outcomes), filled while tests run
_CRITERIA: dict[int, tuple[str, list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion the test belongs to")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, label = marker.args
    _, outcomes = _CRITERIA.setdefault(number, (label, []))
    outcomes.append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        label, outcomes = _CRITERIA[number]
        ok = all(outcomes)
        if number == 4:
            # the bound must hold on every detector call of the whole session
            ok = ok and MAX_DETECTION_RATIO[0] <= 2
            label = f"{label}, session max min_detections/n = {MAX_DETECTION_RATIO[0]:g}"
        tr.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}  ({sum(outcomes)}/{len(outcomes)} checks)")


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)
