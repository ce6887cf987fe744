from pathlib import Path

import pytest

from monideal import logging_config
from monideal.main import main

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_logging(monkeypatch):
    """Let every invocation attach its log handler to the current (captured) stderr."""
    monkeypatch.setattr(logging_config, "_CONFIGURED", False)


@pytest.fixture
def fixture_path():
    def _path(name):
        return str(FIXTURES / name)

    return _path


@pytest.fixture
def run_cli(capsys):
    """Run the command line and return (exit code, stdout, stderr)."""

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
