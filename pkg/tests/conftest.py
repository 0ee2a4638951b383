import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose call outcome to fixtures (used by the acceptance reporter)
    outcome = yield
    setattr(item, f"rep_{call.when}", outcome.get_result())
