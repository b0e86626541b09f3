"""
Параметры кубитной модели.

Все частоты угловые (рад/с), γ в 1/с. Наборы параметров из таблицы
воспроизводимых результатов (set 1 и set 2) доступны через
QubitModelParams.table1().
"""

import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from utils.units import from_ghz, from_mhz, rate_from_mhz

from .exceptions import InvalidModelParameterError

logger = logging.getLogger('diamondsim.qubits')

# Частота управляющих кубитов в таблице не указана; берется как в qutrit-сценариях
DEFAULT_OMEGA = from_ghz(7.0)

TABLE_I_SETS = {
    1: {'j_c': from_mhz(20.0), 'j': from_mhz(65.0), 'delta': from_ghz(2.0), 'gamma': rate_from_mhz(0.01)},
    2: {'j_c': from_mhz(20.0), 'j': from_mhz(45.0), 'delta': from_ghz(0.5), 'gamma': rate_from_mhz(0.01)},
}

# Пары (управляющий, мишень) связей J в порядке j_deviations; узлы C1, C2, T1, T2
COUPLING_PAIRS = ((0, 2), (0, 3), (1, 2), (1, 3))

# |Δ| должна превышать связи минимум в столько раз
REGIME_RATIO = 10.0


@dataclass(frozen=True)
class QubitModelParams:
    """
    Параметры четырехкубитной модели.

    Attributes:
        omega: частота управляющих кубитов Ω
        delta: расстройка мишеней относительно управляющих Δ
        j: связь мишень-управляющий J
        j_c: связь управляющий-управляющий J_C
        gamma: скорость декогеренции γ (1/с)
        j_t: паразитная связь мишень-мишень J_T
        j_deviations: отклонения четырех связей мишень-управляющий от J
            в порядке COUPLING_PAIRS
    """

    omega: float
    delta: float
    j: float
    j_c: float
    gamma: float = 0.0
    j_t: float = 0.0
    j_deviations: Tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        deviations = tuple(float(value) for value in self.j_deviations)
        if len(deviations) != len(COUPLING_PAIRS):
            raise InvalidModelParameterError(
                'j_deviations', self.j_deviations, f"нужно {len(COUPLING_PAIRS)} значения"
            )
        object.__setattr__(self, 'j_deviations', deviations)

        for field in dataclasses.fields(self):
            values = getattr(self, field.name)
            for value in values if isinstance(values, tuple) else (values,):
                if not math.isfinite(value):
                    raise InvalidModelParameterError(field.name, values, "значение должно быть конечным")
        if self.omega <= 0:
            raise InvalidModelParameterError('omega', self.omega, "Ω должна быть положительной")

        if self.j and abs(self.delta) <= REGIME_RATIO * abs(self.j):
            logger.warning(
                f"Режим |Δ| ≫ |J| нарушен: |Δ|/|J| = {abs(self.delta) / abs(self.j):.2f}"
            )
        if self.j_c and abs(self.delta) <= REGIME_RATIO * abs(self.j_c):
            logger.warning(
                f"Режим |Δ| ≫ |J_C| нарушен: |Δ|/|J_C| = {abs(self.delta) / abs(self.j_c):.2f}"
            )

    @classmethod
    def table1(cls, set_number: int, **overrides) -> 'QubitModelParams':
        """Набор параметров 1 или 2 с возможной заменой отдельных значений"""
        try:
            values = dict(TABLE_I_SETS[int(set_number)])
        except KeyError:
            raise InvalidModelParameterError('set', set_number, "допустимы наборы 1 и 2")
        values.setdefault('omega', DEFAULT_OMEGA)
        values.update(overrides)
        return cls(**values)

    def replace(self, **changes) -> 'QubitModelParams':
        return dataclasses.replace(self, **changes)

    @property
    def couplings(self) -> Tuple[float, ...]:
        """J + δJ_k по парам COUPLING_PAIRS"""
        return tuple(self.j + deviation for deviation in self.j_deviations)

    @property
    def is_symmetric(self) -> bool:
        return not any(self.j_deviations)

    @property
    def period(self) -> float:
        """Период быстрых осцилляций 2π/|Δ|"""
        return 2.0 * math.pi / abs(self.delta)
