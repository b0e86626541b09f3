"""
Запуск сценария: разрешение конфигурации, расчет, запись CSV и журнал.
"""

import logging
import time
from pathlib import Path
from typing import Optional, Tuple

from django.db import DatabaseError
from django.utils import timezone

from .config import ScenarioConfig, read_config_file
from .exceptions import ScenarioConfigError
from .models import RunStatus, ScenarioRun
from .output import SweepResult, read_header, write_csv
from .run_logger import RunAuditLogger
from .scenarios import get_scenario

logger = logging.getLogger('diamondsim.experiments')


def _open_ledger(config: ScenarioConfig) -> Optional[ScenarioRun]:
    """Запись журнала; без мигрированной базы запуск продолжается без нее"""
    try:
        return ScenarioRun.objects.create(
            scenario=config.scenario,
            seed=str(config.seed),
            config_hash=config.config_hash,
            workers=config.workers,
            output_path=str(config.out),
        )
    except DatabaseError as e:
        logger.warning(f"Журнал запусков недоступен ({e}); выполните migrate")
        return None


def _close_ledger(run: Optional[ScenarioRun], status: str, **fields) -> None:
    if run is None:
        return
    run.status = status
    run.finished_at = timezone.now()
    for name, value in fields.items():
        setattr(run, name, value)
    try:
        run.save()
    except DatabaseError as e:
        logger.warning(f"Не удалось обновить журнал запусков: {e}")


def resolve_run(scenario_name: Optional[str], config_path=None, from_header=None,
                seed=None, workers=None, out=None) -> ScenarioConfig:
    """
    Конфигурация запуска из файла, заголовка прошлого результата и флагов.

    Raises:
        ScenarioConfigError: нет ни имени сценария, ни заголовка; имя не
            совпадает с заголовком; ошибки файла или значений
        UnknownScenarioError: сценарий не зарегистрирован
    """
    file_values = {}
    if from_header is not None:
        header = read_header(from_header)
        if scenario_name and scenario_name != header['scenario']:
            raise ScenarioConfigError(
                'scenario', scenario_name, f"заголовок записан сценарием '{header['scenario']}'"
            )
        scenario_name = header['scenario']
        file_values.update(header['config'])
        if seed is None:
            seed = header['seed']
    if config_path is not None:
        file_values.update(read_config_file(config_path))
    if not scenario_name:
        raise ScenarioConfigError('scenario', None, "не указан сценарий")

    return get_scenario(scenario_name).resolve(file_values, seed=seed, workers=workers, out=out)


def run_scenario(config: ScenarioConfig) -> Tuple[SweepResult, Path]:
    """
    Посчитать сценарий и записать результат в config.out.

    Returns:
        (результат, путь к файлу)
    """
    scenario = get_scenario(config.scenario)
    ledger = _open_ledger(config)
    RunAuditLogger.log_run_started(config)
    started = time.perf_counter()
    try:
        result = scenario.run(config)
        path = write_csv(result)
    except Exception as e:
        RunAuditLogger.log_run_failed(config.scenario, e, config)
        _close_ledger(ledger, RunStatus.FAILED, error=f"{type(e).__name__}: {e}",
                      duration=time.perf_counter() - started)
        raise

    duration = time.perf_counter() - started
    RunAuditLogger.log_run_finished(config, len(result), path, duration)
    _close_ledger(ledger, RunStatus.SUCCEEDED, row_count=len(result), duration=duration)
    return result, path
