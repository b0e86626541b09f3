"""
CSV-файлы результатов сценариев.

Файл начинается строками с префиксом '#', в которых записан один JSON-объект
(scenario, seed, config, config_hash, code_version, columns), затем идут
строка заголовка и строки данных. Числа с плавающей точкой пишутся через
repr (кратчайшая форма, восстанавливающая значение), концы строк '\\n'.
Метки времени в файл не попадают: одинаковые конфигурация и seed дают
побайтно одинаковый файл.
"""

import csv
import io
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Tuple

import numpy as np
from django.conf import settings

from .config import ScenarioConfig
from .exceptions import ScenarioConfigError

logger = logging.getLogger('diamondsim.experiments')

HEADER_PREFIX = '# '


@dataclass(frozen=True, eq=False)
class SweepResult:
    """
    Строки одного запуска сценария.

    Attributes:
        config: разрешенная конфигурация запуска
        columns: порядок столбцов
        rows: словари столбец -> значение, упорядоченные по свипу и
            номеру повторения
    """

    config: ScenarioConfig
    columns: Tuple[str, ...]
    rows: List[Dict[str, Any]]

    def __len__(self):
        return len(self.rows)

    def header(self) -> Dict[str, Any]:
        canonical = self.config.canonical()
        return {
            'scenario': canonical['scenario'],
            'seed': canonical['seed'],
            'config': canonical['config'],
            'config_hash': self.config.config_hash,
            'code_version': settings.DIAMONDSIM_VERSION,
            'columns': list(self.columns),
        }

    def column(self, name: str) -> list:
        return [row.get(name) for row in self.rows]


def format_value(value) -> str:
    """Текстовое представление ячейки CSV"""
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return repr(value)
    return str(value)


def render_csv(result: SweepResult) -> str:
    buffer = io.StringIO()
    header = json.dumps(result.header(), indent=2, ensure_ascii=False)
    for line in header.splitlines():
        buffer.write(f"{HEADER_PREFIX}{line}\n")

    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_value(row.get(name)) for name in result.columns])
    return buffer.getvalue()


def write_csv(result: SweepResult, path=None) -> Path:
    """
    Записать результат в path (по умолчанию config.out).

    Returns:
        путь к записанному файлу
    """
    path = Path(path or result.config.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(render_csv(result))
    logger.info(f"Записано {len(result)} строк в {path}")
    return path


def read_header(path) -> Dict[str, Any]:
    """
    JSON-заголовок ранее записанного файла.

    Raises:
        ScenarioConfigError: файл не найден или заголовок не разбирается
    """
    path = Path(path)
    if not path.is_file():
        raise ScenarioConfigError('from_header', str(path), "файл не найден")

    lines = []
    with open(path, encoding='utf-8') as handle:
        for line in handle:
            if not line.startswith('#'):
                break
            lines.append(line[1:].rstrip('\n'))
    try:
        header = json.loads('\n'.join(lines))
    except json.JSONDecodeError as e:
        raise ScenarioConfigError('from_header', str(path), f"заголовок не является JSON: {e}") from e
    missing = [key for key in ('scenario', 'seed', 'config') if key not in header]
    if missing:
        raise ScenarioConfigError('from_header', str(path), f"в заголовке нет ключей {', '.join(missing)}")
    return header


def read_rows(path) -> Tuple[List[str], List[Dict[str, str]]]:
    """Столбцы и строки данных (значения как текст)"""
    with open(path, encoding='utf-8', newline='') as handle:
        data = [line for line in handle if not line.startswith('#')]
    reader = csv.reader(data)
    columns = next(reader)
    return columns, [dict(zip(columns, values)) for values in reader]
