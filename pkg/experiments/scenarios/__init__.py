"""
Сценарии запуска. Импорт подмодулей регистрирует сценарии в REGISTRY.
"""

from . import circuit, gate, noise, qutrit  # noqa: F401
from .base import REGISTRY, Scenario, get_scenario

__all__ = ['REGISTRY', 'Scenario', 'get_scenario']
