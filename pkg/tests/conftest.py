import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from redweave import enumerate_sn
from redweave.classes import scan


@pytest.fixture(scope="session")
def s5():
    return list(enumerate_sn(5))


@pytest.fixture(scope="session")
def s6():
    return list(enumerate_sn(6))


@pytest.fixture(scope="session")
def s6_scans(s6):
    # one sweep over all reduced words of S_6, shared by the heavy criteria
    return {w: scan(w) for w in s6}
