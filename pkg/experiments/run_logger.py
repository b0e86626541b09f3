# experiments/run_logger.py

import logging
from pathlib import Path
from typing import Optional

from .config import ScenarioConfig

# Журнал запусков сценариев и проверок
run_audit_logger = logging.getLogger('experiments.runs')


class RunAuditLogger:
    """
    Одна строка журнала на каждое событие запуска: старт, завершение,
    ошибка и провал допусков проверки.
    """

    @staticmethod
    def _format_config(config: ScenarioConfig) -> str:
        return f"Сценарий: '{config.scenario}' | Seed: {config.seed} | Хеш: {config.config_hash[:12]}"

    @staticmethod
    def log_run_started(config: ScenarioConfig) -> None:
        run_audit_logger.info(
            f"ЗАПУСК | {RunAuditLogger._format_config(config)} | "
            f"Воркеры: {config.workers} | Файл: {config.out}"
        )

    @staticmethod
    def log_run_finished(config: ScenarioConfig, rows: int, path: Path, duration: float) -> None:
        """
        Args:
            config: конфигурация запуска
            rows: число записанных строк
            path: выходной файл
            duration: длительность, секунды
        """
        run_audit_logger.info(
            f"ЗАВЕРШЕНИЕ | {RunAuditLogger._format_config(config)} | "
            f"Строк: {rows} | Файл: {path} | Время: {duration:.2f} с"
        )

    @staticmethod
    def log_run_failed(scenario: str, error: Exception, config: Optional[ScenarioConfig] = None) -> None:
        details = RunAuditLogger._format_config(config) if config else f"Сценарий: '{scenario}'"
        run_audit_logger.error(f"ОШИБКА | {details} | {type(error).__name__}: {error}")

    @staticmethod
    def log_tolerance_failure(check: str, failed: int, total: int) -> None:
        run_audit_logger.warning(
            f"ДОПУСК_НАРУШЕН | Проверка: '{check}' | Не прошли: {failed} из {total}"
        )
