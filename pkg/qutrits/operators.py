"""
Обобщенные операторы Паули на кутрите.

Гамильтониан трансмона, усеченный до трех нижних состояний осциллятора,
диагонализуется точно. Его собственные состояния |0⟩, |1⟩, |2⟩ с энергиями
ω₀, ω₁, ω₂ задают
    σ̃_z = |0⟩⟨0| - |1⟩⟨1| - (3 + 2α/Ω)|2⟩⟨2|
    σ̃_y = iT₀|1⟩⟨0| + iT₂|2⟩⟨1| + h.c.,
где T_β = √2(ω_β - α/2)/√(ω_β² + α²/2). В гармоническом пределе T₀ → 1,
T₂ → √2. В формулах оптимальной перекрестной связи встречается обозначение
T₁; здесь оно читается как T₀ (в коде t0).
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidQutritParameterError

QUTRIT_DIM = 3


@dataclass(frozen=True)
class TransmonLevels:
    """Энергии трех нижних уровней (рад/с, без общего сдвига) и коэффициенты T"""

    omega_0: float
    omega_1: float
    omega_2: float
    t0: float
    t2: float


@dataclass(frozen=True, eq=False)
class QutritOperatorSet:
    """σ̃_z и σ̃_y одного сорта кутритов (управляющие или мишени)"""

    levels: TransmonLevels
    sigma_z: np.ndarray
    sigma_y: np.ndarray

    @property
    def raising(self) -> np.ndarray:
        """R = i(T₀|1⟩⟨0| + T₂|2⟩⟨1|), так что σ̃_y = R + R†"""
        return np.tril(self.sigma_y)


def t_coefficients(omega: float, alpha: float) -> TransmonLevels:
    """
    Уровни кутрита и матричные элементы T₀, T₂.

    Args:
        omega: частота перехода 0-1 Ω > 0
        alpha: ангармонизм α < 0, |α| < Ω

    Returns:
        TransmonLevels с ω₁ - ω₀ = Ω и ω₂ - ω₁ = Ω + α

    Raises:
        InvalidQutritParameterError: вне области определения
    """
    if omega <= 0:
        raise InvalidQutritParameterError('omega', omega, "частота должна быть положительной")
    if alpha >= 0:
        raise InvalidQutritParameterError('alpha', alpha, "ангармонизм должен быть отрицательным")
    if abs(alpha) >= omega:
        raise InvalidQutritParameterError('alpha', alpha, "требуется |α| < Ω")

    shifted = omega + 0.5 * alpha
    omega_0 = math.sqrt(shifted ** 2 - 0.5 * alpha ** 2) - shifted
    omega_1 = omega_0 + omega
    omega_2 = omega_1 + omega + alpha

    def coefficient(level):
        return math.sqrt(2.0) * (level - 0.5 * alpha) / math.sqrt(level ** 2 + 0.5 * alpha ** 2)

    return TransmonLevels(omega_0, omega_1, omega_2, coefficient(omega_0), coefficient(omega_2))


def qutrit_sigma_z(omega: float, alpha: float) -> np.ndarray:
    return np.diag([1.0, -1.0, -(3.0 + 2.0 * alpha / omega)]).astype(complex)


def qutrit_sigma_y(t0: float, t2: float) -> np.ndarray:
    sigma = np.zeros((QUTRIT_DIM, QUTRIT_DIM), dtype=complex)
    sigma[1, 0] = 1j * t0
    sigma[2, 1] = 1j * t2
    return sigma + sigma.conj().T


def operator_set(omega: float, alpha: float) -> QutritOperatorSet:
    levels = t_coefficients(omega, alpha)
    return QutritOperatorSet(
        levels=levels,
        sigma_z=qutrit_sigma_z(omega, alpha),
        sigma_y=qutrit_sigma_y(levels.t0, levels.t2),
    )


def oscillator_amplitudes(omega: float, alpha: float) -> np.ndarray:
    """
    Собственные состояния кутрита в базисе гармонического осциллятора.

    Returns:
        3×3 вещественная матрица, строка β содержит амплитуды |β⟩ на
        |0⟩_HO, |1⟩_HO, |2⟩_HO
    """
    levels = t_coefficients(omega, alpha)
    coupling = -alpha / math.sqrt(2.0)
    amplitudes = np.zeros((QUTRIT_DIM, QUTRIT_DIM))
    amplitudes[0, [0, 2]] = [coupling, -levels.omega_0]
    amplitudes[1, 1] = 1.0
    amplitudes[2, [0, 2]] = [-coupling, levels.omega_2]
    amplitudes[0] /= math.hypot(coupling, levels.omega_0)
    amplitudes[2] /= math.hypot(coupling, levels.omega_2)
    return amplitudes
