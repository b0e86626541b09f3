"""
Аналитические управляемые операции на мишенях.

Управляющая пара выбирает одну из четырех двухкубитных операций на мишенях:
|00⟩_C и |11⟩_C дают (с точностью до знаков) SWAP, |Ψ⁺⟩_C фазовый гейт,
|Ψ⁻⟩_C тождественное преобразование.
"""

import math
from typing import Dict

import numpy as np
from django.db import models

from operators.algebra import projector, tensor_product

from .exceptions import InvalidModelParameterError, UnknownControlLabelError
from .params import QubitModelParams


class ControlState(models.TextChoices):
    """Базис управляющей пары"""

    ZERO_ZERO = '00', '|00⟩'
    ONE_ONE = '11', '|11⟩'
    PSI_PLUS = 'psi_plus', '|Ψ⁺⟩'
    PSI_MINUS = 'psi_minus', '|Ψ⁻⟩'


_SQRT_HALF = 1.0 / math.sqrt(2.0)

# Векторы в порядке (C1, C2): индекс 1 = |01⟩, индекс 2 = |10⟩
CONTROL_BASIS: Dict[str, np.ndarray] = {
    ControlState.ZERO_ZERO: np.array([1, 0, 0, 0], dtype=complex),
    ControlState.ONE_ONE: np.array([0, 0, 0, 1], dtype=complex),
    ControlState.PSI_PLUS: np.array([0, _SQRT_HALF, _SQRT_HALF, 0], dtype=complex),
    ControlState.PSI_MINUS: np.array([0, _SQRT_HALF, -_SQRT_HALF, 0], dtype=complex),
}

# Вычислительный базис мишеней
TARGET_LABELS = ('00', '01', '10', '11')


def control_label(control) -> ControlState:
    """Привести метку к ControlState или вызвать UnknownControlLabelError"""
    try:
        return ControlState(control)
    except ValueError:
        raise UnknownControlLabelError(control, allowed=ControlState.values)


def control_vector(control) -> np.ndarray:
    return CONTROL_BASIS[control_label(control)]


def gate_time(p: QubitModelParams) -> float:
    """t_g = π|Δ|/(4J²), секунды"""
    if p.j == 0:
        raise InvalidModelParameterError('j', p.j, "время гейта не определено при J = 0")
    return math.pi * abs(p.delta) / (4.0 * p.j ** 2)


def zeta(p: QubitModelParams) -> float:
    """ζ = 4J²/Δ"""
    return 4.0 * p.j ** 2 / p.delta


def ideal_target_gate(control, t: float, p: QubitModelParams) -> np.ndarray:
    """
    Унитарная операция на мишенях для заданного управляющего состояния.

    Фазы e^{∓itJ_C} состояний |Ψ±⟩_C входят в результат, глобальные фазы
    не нормируются.

    Args:
        control: метка из ControlState
        t: время, секунды
        p: параметры модели

    Returns:
        4×4 унитарная матрица в базисе |00⟩, |01⟩, |10⟩, |11⟩ мишеней
    """
    control = control_label(control)
    rotation = zeta(p) * t

    if control == ControlState.ZERO_ZERO:
        e = np.exp(-1j * rotation)
        return np.array([
            [1, 0, 0, 0],
            [0, (e + 1) / 2, (e - 1) / 2, 0],
            [0, (e - 1) / 2, (e + 1) / 2, 0],
            [0, 0, 0, e],
        ], dtype=complex)

    if control == ControlState.ONE_ONE:
        e = np.exp(1j * rotation)
        return np.array([
            [e, 0, 0, 0],
            [0, (e + 1) / 2, (e - 1) / 2, 0],
            [0, (e - 1) / 2, (e + 1) / 2, 0],
            [0, 0, 0, 1],
        ], dtype=complex)

    if control == ControlState.PSI_PLUS:
        diagonal = [np.exp(1j * rotation), 1, 1, np.exp(-1j * rotation)]
        return np.diag(diagonal).astype(complex) * np.exp(-1j * t * p.j_c)

    return np.eye(4, dtype=complex) * np.exp(1j * t * p.j_c)


def ideal_diamond_gate(t: float, p: QubitModelParams) -> np.ndarray:
    """Σ_φ |φ⟩⟨φ|_C ⊗ U_T^φ(t) по базису управляющей пары"""
    return sum(
        tensor_product(projector(vector), ideal_target_gate(label, t, p))
        for label, vector in CONTROL_BASIS.items()
    )
