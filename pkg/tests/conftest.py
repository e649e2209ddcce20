import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("repro", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def corpus():
    from gsprime.corpus import corpus_modules

    return corpus_modules()


@pytest.fixture(scope="session")
def brute():
    import oracles

    return oracles.corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
