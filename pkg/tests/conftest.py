import sys

import numpy as np
import pytest

from _corpus import central_energy_fractions, well_sampled_corpus
from tfbjn.cohen import bjd
from tfbjn.signal import GaussAtom, gen_gaussian


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # compile the numba kernels once so timing checks measure steady state
    bjd(gen_gaussian(GaussAtom(), 64, 8.0), 1)


@pytest.fixture(scope="session")
def corpus():
    signals = well_sampled_corpus()
    for name, sig in signals.items():
        e_t, e_f = central_energy_fractions(sig)
        assert e_t >= 0.9999 and e_f >= 0.9999, name
    return signals


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
