import os
import random

import pytest

# Sin fichero de log durante los tests; debe fijarse antes de importar src
os.environ.setdefault("WEYLSCHUR_LOG_FILE", "false")

from click.testing import CliRunner

from src.partition import partitions_up_to


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rng():
    """Generador con semilla fija para puntos reproducibles."""
    return random.Random(7)


@pytest.fixture
def small_partitions():
    return partitions_up_to(4)


@pytest.fixture
def isolated_config(monkeypatch, tmp_path):
    """Variables WEYLSCHUR_* limpias y directorio de logs temporal."""
    for key in list(os.environ):
        if key.startswith("WEYLSCHUR_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("WEYLSCHUR_LOG_FILE", "false")
    monkeypatch.setenv("WEYLSCHUR_LOG_DIR", str(tmp_path / "logs"))
    return monkeypatch
