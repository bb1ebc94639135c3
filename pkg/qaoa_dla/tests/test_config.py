import io
import json
import logging

import pytest

from qaoa_dla.config import DEFAULT_MAX_CLOSURE_QUBITS, Settings
from qaoa_dla.logging import configure_logging


def test_settings_defaults() -> None:
    settings = Settings(_env_file=None)
    assert settings.max_closure_qubits == DEFAULT_MAX_CLOSURE_QUBITS
    assert settings.recursive_cap == 7
    assert settings.batch_brute_force is False
    assert settings.log_level == "INFO"


def test_settings_read_env_aliases(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("DLA_MAX_CLOSURE_QUBITS", "10")
    monkeypatch.setenv("DLA_THREADS", "3")
    monkeypatch.setenv("DLA_BATCH_BRUTE_FORCE", "true")
    settings = Settings(_env_file=None)
    assert settings.max_closure_qubits == 10
    assert settings.batch_threads == 3
    assert settings.batch_brute_force is True


def test_settings_normalise_bad_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("DLA_MAX_CLOSURE_QUBITS", "-3")
    monkeypatch.setenv("DLA_LOG_LEVEL", "chatty")
    monkeypatch.setenv("DLA_THREADS", "many")
    monkeypatch.setenv("DLA_ENV", "  Production ")
    monkeypatch.setenv("DLA_FLOAT_TOLERANCE", "0")
    settings = Settings(_env_file=None)
    assert settings.max_closure_qubits == DEFAULT_MAX_CLOSURE_QUBITS
    assert settings.log_level == "INFO"
    assert settings.batch_threads == 0
    assert settings.app_env == "production"
    assert settings.float_tolerance == pytest.approx(1e-10)


def test_configure_logging_writes_json_lines() -> None:
    stream = io.StringIO()
    configure_logging("DEBUG", stream=stream)
    logging.getLogger("qaoa_dla.test").info("stage done", extra={"instance_id": "g1", "stage": "bfs_splitting", "n": 7})
    record = json.loads(stream.getvalue().splitlines()[-1])
    assert record["message"] == "stage done"
    assert record["instance_id"] == "g1"
    assert record["stage"] == "bfs_splitting"
    assert record["n"] == 7
    configure_logging("WARNING", stream=io.StringIO())
