import os
import sys

# Imports para Logging (ECS + Rotación)
import logging
from logging.handlers import RotatingFileHandler
import ecs_logging

# Carga de fichero env
from dotenv import load_dotenv
load_dotenv()

__version__ = "0.1.0"


def _env_bool(key, default):
    return os.environ.get(key, default).lower() in ['true', 'on', '1']


class ConfigError(ValueError):
    """Variable WEYLSCHUR_* con un valor que no se puede interpretar."""


def env_int(key, default, minimum=None):
    """Entero desde el entorno; ConfigError si el valor no es válido."""
    raw = os.environ.get(key, '').strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{key}={raw!r} no es un entero") from None
    if minimum is not None and value < minimum:
        raise ConfigError(f"{key}={value} debe ser ≥ {minimum}")
    return value


_DEFAULTS = {'MAX_WEIGHT': 10, 'WORKERS': 4, 'SEED': 7}
_MINIMUMS = {'MAX_WEIGHT': 0, 'WORKERS': 1, 'SEED': None}


# ASIGNACIÓN DE VARIABLES DE ENTORNO
def load_config():
    """
    Lee WEYLSCHUR_*. Un entero mal formado no rompe la importación: se usa el
    valor por defecto y el error queda en 'ERRORS' para registrarlo.
    """
    settings = {'ERRORS': []}
    for name, default in _DEFAULTS.items():
        try:
            settings[name] = env_int(f'WEYLSCHUR_{name}', default, _MINIMUMS[name])
        except ConfigError as e:
            settings[name] = default
            settings['ERRORS'].append(str(e))
    settings.update({
        'LOG_DIR': os.environ.get('WEYLSCHUR_LOG_DIR', 'logs'),
        'LOG_LEVEL': os.environ.get('WEYLSCHUR_LOG_LEVEL', 'INFO').upper(),
        'LOG_FILE': _env_bool('WEYLSCHUR_LOG_FILE', 'True'),
    })
    return settings


config = load_config()


# CONFIGURACIÓN DE LOGGING (ECS + Rotación)
def configure_logging(settings=None):
    settings = settings or config
    logger = logging.getLogger(__name__)
    logger.setLevel(getattr(logging, settings['LOG_LEVEL'], logging.INFO))
    logger.handlers = []

    if settings['LOG_FILE']:
        log_dir = settings['LOG_DIR']
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        log_file_path = os.path.join(log_dir, 'weylschur.json')
        file_handler = RotatingFileHandler(log_file_path, maxBytes=10*1024*1024, backupCount=5)
        file_handler.setFormatter(ecs_logging.StdlibFormatter())
        logger.addHandler(file_handler)

    # stderr: stdout queda limpio para la salida JSON/texto del CLI
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
    console_handler.setLevel(logging.WARNING)
    logger.addHandler(console_handler)
    logger.propagate = False
    return logger


# INICIALIZAR LOGGING
logger = configure_logging()

for _message in config['ERRORS']:
    logger.warning(
        f"Configuración inválida, se usa el valor por defecto: {_message}",
        extra={"event.action": "config-invalid", "error.message": _message},
    )
