"""
Django settings for the diamondsim project.

Проект не обслуживает HTTP: Django используется для настроек, логирования,
management-команд, журнала запусков и тестового раннера.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv
from django.core.exceptions import ImproperlyConfigured

# Загрузка переменных окружения из .env файла
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


def get_env_variable(var_name, default=None):
    """Получить переменную окружения или вызвать исключение"""
    try:
        return os.environ[var_name]
    except KeyError:
        if default is not None:
            return default
        error_msg = f"Set the {var_name} environment variable"
        raise ImproperlyConfigured(error_msg)


# Сессии и формы не используются, ключ нужен только самому Django
SECRET_KEY = get_env_variable("SECRET_KEY", "diamondsim-local-only")

DEBUG = get_env_variable("DEBUG", "False").lower() == "true"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "core.apps.CoreConfig",
    "utils.apps.UtilsConfig",  # Единицы, RNG-подпотоки, пул воркеров
    "operators.apps.OperatorsConfig",
    "qubits.apps.QubitsConfig",
    "dynamics.apps.DynamicsConfig",
    "fidelity.apps.FidelityConfig",
    "qutrits.apps.QutritsConfig",
    "circuits.apps.CircuitsConfig",
    "experiments.apps.ExperimentsConfig",  # Сценарии, CLI и журнал запусков
]

MIDDLEWARE = []


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = "ru-ru"

TIME_ZONE = "Europe/Moscow"

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Настройки симулятора
DIAMONDSIM_VERSION = "1.0.0"

# Каталог для CSV-результатов сценариев
DIAMONDSIM_RESULTS_DIR = Path(
    get_env_variable("DIAMONDSIM_RESULTS_DIR", str(BASE_DIR / "results"))
)

DIAMONDSIM_WORKERS = int(get_env_variable("DIAMONDSIM_WORKERS", "1"))
DIAMONDSIM_SEED = int(get_env_variable("DIAMONDSIM_SEED", "20240101"))

# Шаг RK4 привязан к периоду 2π/|Δ|
DIAMONDSIM_SOLVER = {
    "substeps_per_period": int(
        get_env_variable("DIAMONDSIM_SUBSTEPS_PER_PERIOD", "40")
    ),
    "convergence_tolerance": float(
        get_env_variable("DIAMONDSIM_CONVERGENCE_TOLERANCE", "1e-5")
    ),
    "max_refinements": int(get_env_variable("DIAMONDSIM_MAX_REFINEMENTS", "4")),
}

# Порог "близко к единице" для извлечения скорости свопа
DIAMONDSIM_SWAP_THRESHOLD = float(
    get_env_variable("DIAMONDSIM_SWAP_THRESHOLD", "0.9")
)

# Как читать ангармонизмы из подписей к рисункам: angular | cyclic
DIAMONDSIM_ALPHA_UNIT = get_env_variable("DIAMONDSIM_ALPHA_UNIT", "angular")

# Вызовы дольше порога попадают в лог как медленные (секунды)
DIAMONDSIM_SLOW_CALL_SECONDS = float(
    get_env_variable("DIAMONDSIM_SLOW_CALL_SECONDS", "30")
)

DIAMONDSIM_LOG_LEVEL = get_env_variable("DIAMONDSIM_LOG_LEVEL", "INFO")

# Создаем директорию для логов если её нет
LOGS_DIR = BASE_DIR / "logs"
LOGS_DIR.mkdir(exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "simulation_file": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": LOGS_DIR / "simulation.log",
            "formatter": "verbose",
        },
        "runs_file": {
            "level": "INFO",
            "class": "logging.FileHandler",
            "filename": LOGS_DIR / "runs.log",
            "formatter": "verbose",
        },
        "acceptance_file": {
            "level": "INFO",
            "class": "logging.FileHandler",
            "filename": LOGS_DIR / "acceptance.log",
            "formatter": "verbose",
        },
        "console": {
            "level": "INFO",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "diamondsim": {
            "handlers": ["simulation_file", "console"],
            "level": DIAMONDSIM_LOG_LEVEL,
            "propagate": False,
        },
        "experiments.runs": {
            "handlers": ["runs_file", "console"],
            "level": "INFO",
            "propagate": False,
        },
        "experiments.acceptance": {
            "handlers": ["acceptance_file", "console"],
            "level": "INFO",
            "propagate": False,
        },
    },
}
