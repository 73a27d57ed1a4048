"""
conftest.py

Fixtures for integration tests (CLI flow)

Key features:
- run_cli: run main(argv) and return (exit code, stdout, stderr)
"""
import pytest

from cli import main

@pytest.fixture
def run_cli(capsys):
    """
    CLI runner factory

    Usage:
        code, out, err = run_cli("pd", "5", "10")
    """
    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run
