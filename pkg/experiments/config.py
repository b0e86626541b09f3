"""
Конфигурация запусков сценариев.

Файлы конфигурации это плоские пары key=value (читаются
dotenv.dotenv_values). Каждый сценарий объявляет допустимые ключи с
типом и значением по умолчанию; кроме них в файле разрешены ключи запуска
seed, workers и out. Порядок разрешения: значения по умолчанию < файл <
флаги командной строки.

Частоты задаются как значение/2π в МГц или ГГц (суффиксы _mhz, _ghz),
скорости декогеренции в МГц (gamma_mhz), емкости в фФ (_ff), времена в нс
(_ns). Перевод в СИ выполняют сценарии при чтении значений через
utils.units.
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Sequence

from django.conf import settings
from dotenv import dotenv_values

from utils.rng import validate_seed

from .exceptions import ScenarioConfigError

logger = logging.getLogger('diamondsim.experiments')

RUN_KEYS = ('seed', 'workers', 'out')

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


def parse_float(value) -> float:
    if isinstance(value, bool):
        raise ValueError("ожидается число")
    return float(value)


def parse_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError("ожидается целое число")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError("ожидается целое число")
        return int(value)
    return int(str(value).strip())


def parse_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise ValueError(f"ожидается одно из {', '.join(_TRUE + _FALSE)}")


def parse_int_list(value) -> list:
    """'1,2' или [1, 2] -> [1, 2]"""
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [item for item in str(value).replace(' ', '').split(',') if item]
    if not items:
        raise ValueError("список не может быть пустым")
    return [parse_int(item) for item in items]


def choice(*allowed: str) -> Callable[[Any], str]:
    def parse(value) -> str:
        text = str(value).strip()
        if text not in allowed:
            raise ValueError(f"допустимо: {', '.join(allowed)}")
        return text
    return parse


def optional(parse: Callable[[Any], Any]) -> Callable[[Any], Any]:
    """Пустая строка и None означают отсутствие значения"""
    def parse_optional(value):
        if value is None or value == '':
            return None
        return parse(value)
    return parse_optional


@dataclass(frozen=True)
class ConfigKey:
    """
    Допустимый ключ конфигурации сценария.

    Attributes:
        name: имя ключа в файле
        parse: преобразование строки (или значения из заголовка) к типу
        default: значение по умолчанию, уже приведенное к типу
        help: описание для документации
    """

    name: str
    parse: Callable[[Any], Any]
    default: Any
    help: str = ''


@dataclass(frozen=True)
class ScenarioConfig:
    """
    Полностью разрешенная конфигурация запуска.

    params, seed и scenario определяют содержимое выходного файла; workers
    и out на него не влияют и в заголовок не попадают.
    """

    scenario: str
    params: Dict[str, Any]
    seed: int
    workers: int = 1
    out: Optional[Path] = None

    def canonical(self) -> Dict[str, Any]:
        return {
            'scenario': self.scenario,
            'seed': self.seed,
            'config': dict(sorted(self.params.items())),
        }

    @property
    def config_hash(self) -> str:
        """SHA-256 канонического JSON (scenario, seed, config)"""
        payload = json.dumps(self.canonical(), sort_keys=True, separators=(',', ':'), ensure_ascii=True)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    def __getitem__(self, key: str):
        return self.params[key]


def read_config_file(path) -> Dict[str, str]:
    """
    Прочитать файл key=value.

    Raises:
        ScenarioConfigError: файл не найден или содержит ключ без значения
    """
    path = Path(path)
    if not path.is_file():
        raise ScenarioConfigError('config', str(path), "файл не найден")
    values = dotenv_values(path)
    for key, value in values.items():
        if value is None:
            raise ScenarioConfigError(key, None, "ключ без значения")
    return {key.strip().lower(): value for key, value in values.items()}


def _convert(name: str, parse: Callable[[Any], Any], value):
    try:
        return parse(value)
    except (TypeError, ValueError) as e:
        raise ScenarioConfigError(name, value, str(e) or "неверное значение") from e


def resolve_config(scenario_name: str, keys: Sequence[ConfigKey], file_values: Optional[Mapping[str, Any]] = None,
                   seed=None, workers=None, out=None) -> ScenarioConfig:
    """
    Собрать конфигурацию: значения по умолчанию, затем файл, затем флаги.

    Args:
        scenario_name: идентификатор сценария
        keys: допустимые ключи сценария
        file_values: значения из файла или заголовка прошлого запуска
        seed, workers, out: флаги командной строки (None, если не заданы)

    Raises:
        ScenarioConfigError: неизвестный ключ или значение, которое нельзя
            привести к типу
    """
    known = {key.name: key for key in keys}
    file_values = dict(file_values or {})

    unknown = sorted(set(file_values) - set(known) - set(RUN_KEYS))
    if unknown:
        raise ScenarioConfigError(
            unknown[0], file_values[unknown[0]], f"неизвестный ключ для сценария '{scenario_name}'"
        )

    params = {name: key.default for name, key in known.items()}
    for name, value in file_values.items():
        if name in known:
            params[name] = _convert(name, known[name].parse, value)

    run = {name: file_values.get(name) for name in RUN_KEYS}
    for name, value in (('seed', seed), ('workers', workers), ('out', out)):
        if value is not None:
            run[name] = value

    seed_value = settings.DIAMONDSIM_SEED if run['seed'] in (None, '') else run['seed']
    seed_value = _convert('seed', validate_seed, seed_value)

    workers_value = settings.DIAMONDSIM_WORKERS if run['workers'] in (None, '') else run['workers']
    workers_value = _convert('workers', parse_int, workers_value)
    if workers_value < 1:
        raise ScenarioConfigError('workers', workers_value, "нужен хотя бы один воркер")

    out_value = run['out']
    if out_value in (None, ''):
        out_value = Path(settings.DIAMONDSIM_RESULTS_DIR) / f"{scenario_name}.csv"

    config = ScenarioConfig(
        scenario=scenario_name,
        params=params,
        seed=seed_value,
        workers=workers_value,
        out=Path(out_value),
    )
    logger.debug(f"Конфигурация {scenario_name}: {config.canonical()}")
    return config
