"""
Параметры кутритной модели.

Частоты и связи угловые (рад/с). Ангармонизмы в подписях к рисункам
сценариев кутритов напечатаны без множителя 2π; как их читать, задает
настройка DIAMONDSIM_ALPHA_UNIT:
    angular  значение уже угловое (α_C = -270·10⁶ рад/с)
    cyclic   значение это α/2π в МГц
"""

import dataclasses
import logging
import math
from dataclasses import dataclass

from django.conf import settings

from utils.units import from_ghz, from_mhz

from .exceptions import InvalidQutritParameterError

logger = logging.getLogger('diamondsim.qutrits')

# |α/Ω| выше этого значения уже не режим трансмона
MAX_ANHARMONICITY_RATIO = 0.2

ALPHA_UNITS = ('angular', 'cyclic')

# Параметры сценариев свопа кутритов; ангармонизмы в МГц как напечатаны
SWAP_SCENARIO = {
    'omega_c_ghz': 7.0,
    'omega_t_ghz': 9.0,
    'j_mhz': 65.0,
    'j_c_mhz': 20.0,
    'alpha_c': -270.0,
    'alpha_t': -280.0,
}


def anharmonicity(value: float, unit: str = None) -> float:
    """
    Перевести напечатанный ангармонизм в рад/с.

    Args:
        value: число из подписи (МГц)
        unit: 'angular' или 'cyclic', по умолчанию DIAMONDSIM_ALPHA_UNIT
    """
    unit = unit or getattr(settings, 'DIAMONDSIM_ALPHA_UNIT', 'angular')
    if unit not in ALPHA_UNITS:
        raise InvalidQutritParameterError('alpha_unit', unit, f"допустимо: {', '.join(ALPHA_UNITS)}")
    if unit == 'angular':
        return 1e6 * float(value)
    return from_mhz(value)


@dataclass(frozen=True)
class QutritModelParams:
    """
    Параметры четырехкутритной модели.

    Attributes:
        omega_c, omega_t: частоты управляющих кутритов и мишеней Ω_C, Ω_T
        alpha_c, alpha_t: ангармонизмы α_C, α_T (отрицательные)
        j: связь мишень-управляющий J
        j_c: связь управляющих J_C
        j_t: перекрестная связь мишеней J_T
    """

    omega_c: float
    omega_t: float
    alpha_c: float
    alpha_t: float
    j: float
    j_c: float
    j_t: float = 0.0

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not math.isfinite(value):
                raise InvalidQutritParameterError(field.name, value, "значение должно быть конечным")

        for species in ('c', 't'):
            omega = getattr(self, f'omega_{species}')
            alpha = getattr(self, f'alpha_{species}')
            if omega <= 0:
                raise InvalidQutritParameterError(f'omega_{species}', omega, "частота должна быть положительной")
            if alpha >= 0:
                raise InvalidQutritParameterError(f'alpha_{species}', alpha, "ангармонизм трансмона отрицателен")
            if abs(alpha / omega) >= MAX_ANHARMONICITY_RATIO:
                raise InvalidQutritParameterError(
                    f'alpha_{species}', alpha,
                    f"|α/Ω| = {abs(alpha / omega):.3f} вне режима трансмона (< {MAX_ANHARMONICITY_RATIO})"
                )

    @classmethod
    def swap_scenario(cls, alpha_unit: str = None, **overrides) -> 'QutritModelParams':
        """Параметры сценариев свопа с заменой отдельных значений (в рад/с)"""
        values = {
            'omega_c': from_ghz(SWAP_SCENARIO['omega_c_ghz']),
            'omega_t': from_ghz(SWAP_SCENARIO['omega_t_ghz']),
            'alpha_c': anharmonicity(SWAP_SCENARIO['alpha_c'], alpha_unit),
            'alpha_t': anharmonicity(SWAP_SCENARIO['alpha_t'], alpha_unit),
            'j': from_mhz(SWAP_SCENARIO['j_mhz']),
            'j_c': from_mhz(SWAP_SCENARIO['j_c_mhz']),
        }
        values.update(overrides)
        return cls(**values)

    def replace(self, **changes) -> 'QutritModelParams':
        return dataclasses.replace(self, **changes)
