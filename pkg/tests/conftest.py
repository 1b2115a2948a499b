import sys

import pytest

from meaning_automata import corpora


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS):
        terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _isolated_data_dir(monkeypatch):
    # Builtin corpora must come from the package unless a test overrides them.
    monkeypatch.delenv(corpora.DATA_ENV, raising=False)
