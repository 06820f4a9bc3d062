import sys
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from stylebreach.preprocess import load_lexicon

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def criterion():
    """Records a verdict line for one acceptance criterion."""

    @contextmanager
    def _criterion(num, name):
        ACCEPTANCE[num] = (name, "FAIL")
        try:
            yield
        except pytest.skip.Exception:
            ACCEPTANCE[num] = (name, "SKIP")
            raise
        except BaseException:
            ACCEPTANCE[num] = (name, "FAIL")
            raise
        else:
            ACCEPTANCE[num] = (name, "PASS")

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, status = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:02d} [{status}] {name}")
