import math

import numpy as np
import pytest

from gcifc import ChannelParams

# acceptance criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def record(key: str, passed: bool, detail: str = ""):
    ACCEPTANCE[key] = (bool(passed), detail)


@pytest.fixture
def pdc_channel():
    return ChannelParams(-1.0, 2.0, 10.0, 10.0)


@pytest.fixture
def fig3_channel():
    return ChannelParams(math.sqrt(0.3), math.sqrt(2.0), 6.0, 6.0)


@pytest.fixture
def fig8_channel():
    return ChannelParams(2.0, 3.0, 6.0, 6.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:<5} {'PASS' if ok else 'FAIL'}  {detail}")
