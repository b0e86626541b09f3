"""
Реестр сценариев.

Сценарий это функция, которая по разрешенной конфигурации возвращает
строки результата. Декоратор scenario регистрирует ее вместе с ключами
конфигурации и порядком столбцов.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..config import ConfigKey, ScenarioConfig, choice, parse_float, parse_int, resolve_config
from ..exceptions import UnknownScenarioError
from ..output import SweepResult


@dataclass(frozen=True)
class Scenario:
    name: str
    title: str
    keys: Tuple[ConfigKey, ...]
    columns: Tuple[str, ...]
    compute: Callable[[ScenarioConfig], List[Dict]]

    def resolve(self, file_values: Optional[Dict] = None, seed=None, workers=None, out=None) -> ScenarioConfig:
        return resolve_config(self.name, self.keys, file_values, seed=seed, workers=workers, out=out)

    def run(self, config: ScenarioConfig) -> SweepResult:
        return SweepResult(config=config, columns=self.columns, rows=self.compute(config))


REGISTRY: Dict[str, Scenario] = {}


def scenario(name: str, title: str, keys: Sequence[ConfigKey], columns: Sequence[str]):
    """Зарегистрировать функцию сценария под идентификатором name"""
    def register(compute):
        REGISTRY[name] = Scenario(name, title, tuple(keys), tuple(columns), compute)
        return compute
    return register


def get_scenario(name: str) -> Scenario:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownScenarioError(name, allowed=sorted(REGISTRY))


# Ключи, общие для сценариев кубитной модели
ENGINE_KEY = ConfigKey(
    'engine', choice('rotating', 'floquet'), 'rotating',
    "rotating: RK4 с H(t), воспроизводит таблицу точностей; floquet: H_F, сохраняет смешивание J_C·J/Δ "
    "и дает меньшие точности (около 0.968 против 0.992 для набора 1)",
)
GAMMA_KEY = ConfigKey('gamma_mhz', parse_float, 0.01, "скорость декогеренции γ, МГц")
WINDOW_KEY = ConfigKey('window', parse_float, 0.15, "полуширина окна поиска t_g, доля t_g")
COARSE_POINTS_KEY = ConfigKey('coarse_points', parse_int, 61, "точек грубой сетки поиска t_g")
SET_KEY = ConfigKey('set', parse_int, 1, "набор параметров таблицы (1 или 2)")
