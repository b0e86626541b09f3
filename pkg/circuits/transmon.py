"""
Спектр трансмонов и параметры кутритной модели из схемы.

После разложения косинусов до четвертого порядка и квантования
    φ ↦ (2E_C/E_J)^¼ (b† + b),  p ↦ i(E_J/32E_C)^¼ (b† - b)
частота и ангармонизм трансмона равны
    Ω = E_C/2 + √((√(8E_C E_J) - 3E_C/2)² + E_C²/2),  α = -E_C,
а связи между трансмонами
    J_T = 𝓔_TT √(E_JT/32E_CT)
    J_C = -𝓔_CC √(E_JC/32E_CC)
    J   = 𝓔_CT (E_JC/32E_CC)^¼ (E_JT/32E_CT)^¼
Степени свободы центра масс дают только постоянный сдвиг и отброшены.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from qutrits.operators import TransmonLevels, oscillator_amplitudes, t_coefficients
from qutrits.params import QutritModelParams

from .capacitance import derived_energies
from .exceptions import InvalidCircuitParameterError
from .params import CircuitParams

logger = logging.getLogger('diamondsim.circuits')

MIN_TRANSMON_RATIO = 20.0
WARN_TRANSMON_RATIO = 50.0


@dataclass(frozen=True, eq=False)
class TransmonSpectrum:
    """
    Attributes:
        omega: частота перехода 0-1 Ω, рад/с
        alpha: ангармонизм α = -E_C, рад/с
        levels: энергии кутрита и коэффициенты T₀, T₂
        amplitudes: состояния кутрита в базисе осциллятора (строки)
        ratio: E_J/E_C
    """

    omega: float
    alpha: float
    levels: TransmonLevels
    amplitudes: np.ndarray
    ratio: float


def transmon_spectrum(e_c: float, e_j: float, warn: bool = True) -> TransmonSpectrum:
    """
    Частота, ангармонизм и уровни кутрита одного трансмона.

    Args:
        e_c: зарядовая энергия E_C, рад/с
        e_j: джозефсоновская энергия E_J, рад/с
        warn: предупреждать о E_J/E_C < 50

    Raises:
        InvalidCircuitParameterError: E_J/E_C < 20
    """
    if e_c <= 0 or e_j <= 0:
        raise InvalidCircuitParameterError('e_j/e_c', (e_j, e_c), "энергии должны быть положительными")
    ratio = e_j / e_c
    if ratio < MIN_TRANSMON_RATIO:
        raise InvalidCircuitParameterError(
            'e_j/e_c', ratio, f"режим трансмона требует E_J/E_C ≥ {MIN_TRANSMON_RATIO:g}"
        )
    if warn and ratio < WARN_TRANSMON_RATIO:
        logger.warning(f"E_J/E_C = {ratio:.1f} ниже {WARN_TRANSMON_RATIO:g}: разложение до φ⁴ неточно")

    plasma = math.sqrt(8.0 * e_c * e_j)
    omega = 0.5 * e_c + math.sqrt((plasma - 1.5 * e_c) ** 2 + 0.5 * e_c ** 2)
    alpha = -e_c
    return TransmonSpectrum(
        omega=omega,
        alpha=alpha,
        levels=t_coefficients(omega, alpha),
        amplitudes=oscillator_amplitudes(omega, alpha),
        ratio=ratio,
    )


def model_from_circuit(cp: CircuitParams, warn: bool = True) -> QutritModelParams:
    """
    Параметры кутритной модели (Ω, α, J, J_C, J_T) по элементам схемы.

    J_C получается отрицательной при любых допустимых емкостях.
    """
    if warn:
        cp.warn_if_strongly_coupled()
    energies = derived_energies(cp)
    control = transmon_spectrum(energies.e_c_c, cp.e_j_c, warn)
    target = transmon_spectrum(energies.e_c_t, cp.e_j_t, warn)

    control_scale = cp.e_j_c / (32.0 * energies.e_c_c)
    target_scale = cp.e_j_t / (32.0 * energies.e_c_t)
    params = QutritModelParams(
        omega_c=control.omega,
        omega_t=target.omega,
        alpha_c=control.alpha,
        alpha_t=target.alpha,
        j=energies.coupling_ct * (control_scale * target_scale) ** 0.25,
        j_c=-energies.coupling_cc * math.sqrt(control_scale),
        j_t=energies.coupling_tt * math.sqrt(target_scale),
    )
    logger.debug(f"Схема -> модель: {params}")
    return params
