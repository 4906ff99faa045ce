"""Test isolation: restore structlog configuration after each test.

CLI tests call ``configure_logging``, which binds structlog to the
``sys.stderr`` in effect at that moment (pytest's per-test capture stream).
Once that stream is closed, later tests that log would fail.
"""
import pytest
import structlog


@pytest.fixture(autouse=True)
def _restore_structlog_config():
    saved = structlog.get_config()
    yield
    structlog.configure(**saved)
