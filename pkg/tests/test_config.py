import pytest

from src import ConfigError, env_int, load_config


def test_config_por_defecto(isolated_config):
    """Sin variables se usan los valores por defecto y no hay errores."""
    settings = load_config()
    assert settings['MAX_WEIGHT'] == 10
    assert settings['WORKERS'] == 4
    assert settings['SEED'] == 7
    assert settings['ERRORS'] == []
    assert settings['LOG_FILE'] is False


def test_config_lee_enteros(isolated_config):
    """Los enteros válidos del entorno sustituyen a los valores por defecto."""
    isolated_config.setenv("WEYLSCHUR_MAX_WEIGHT", " 12 ")
    isolated_config.setenv("WEYLSCHUR_SEED", "-3")
    settings = load_config()
    assert settings['MAX_WEIGHT'] == 12
    assert settings['SEED'] == -3


def test_config_invalida_no_rompe_la_carga(isolated_config):
    """Un entero mal formado deja el valor por defecto y queda anotado."""
    isolated_config.setenv("WEYLSCHUR_WORKERS", "many")
    isolated_config.setenv("WEYLSCHUR_MAX_WEIGHT", "-1")
    settings = load_config()
    assert settings['WORKERS'] == 4
    assert settings['MAX_WEIGHT'] == 10
    assert len(settings['ERRORS']) == 2
    assert any("WEYLSCHUR_WORKERS" in message for message in settings['ERRORS'])


def test_env_int(isolated_config):
    """env_int: vacío da el defecto, basura o valores bajo el mínimo lanzan ConfigError."""
    assert env_int("WEYLSCHUR_WORKERS", 4, minimum=1) == 4
    isolated_config.setenv("WEYLSCHUR_WORKERS", "")
    assert env_int("WEYLSCHUR_WORKERS", 4, minimum=1) == 4
    isolated_config.setenv("WEYLSCHUR_WORKERS", "0")
    with pytest.raises(ConfigError):
        env_int("WEYLSCHUR_WORKERS", 4, minimum=1)
    isolated_config.setenv("WEYLSCHUR_WORKERS", "2x")
    with pytest.raises(ConfigError, match="no es un entero"):
        env_int("WEYLSCHUR_WORKERS", 4, minimum=1)
