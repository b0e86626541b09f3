"""
Гамильтонианы кубитной модели на 16-мерном пространстве (C1, C2, T1, T2).

build_h0 и build_hint задают лабораторную модель, build_rotating_h ее
представление взаимодействия относительно H₀ после отбрасывания
контр-вращающихся слагаемых, build_floquet_h эффективный гамильтониан
первого порядка разложения Магнуса по периоду 2π/|Δ|.
"""

import numpy as np

from operators.algebra import SIGMA_MINUS, SIGMA_PLUS, SIGMA_Y, SIGMA_Z, dagger, embed

from .exceptions import InvalidModelParameterError
from .params import COUPLING_PAIRS, QubitModelParams

C1, C2, T1, T2 = range(4)
DIM = 16


def _site_operators(local):
    operators = tuple(embed(local, site) for site in range(4))
    for operator in operators:
        operator.setflags(write=False)
    return operators


SZ = _site_operators(SIGMA_Z)
SY = _site_operators(SIGMA_Y)
SP = _site_operators(SIGMA_PLUS)
SM = _site_operators(SIGMA_MINUS)

IDENTITY = np.eye(DIM, dtype=complex)
IDENTITY.setflags(write=False)


def excitation_number() -> np.ndarray:
    """Полное число возбуждений N = Σ_i |1⟩⟨1|_i"""
    return sum((IDENTITY - SZ[site]) / 2 for site in range(4))


def build_h0(p: QubitModelParams) -> np.ndarray:
    """Свободный гамильтониан, диагональный в вычислительном базисе"""
    return -0.5 * (p.omega + p.delta) * (SZ[T1] + SZ[T2]) - 0.5 * p.omega * (SZ[C1] + SZ[C2])


def build_hint(p: QubitModelParams) -> np.ndarray:
    """
    Взаимодействие через σ_y⊗σ_y связи, включая паразитную связь мишеней J_T.
    Матрица вещественная.
    """
    h = p.j_c * SY[C1] @ SY[C2] + p.j_t * SY[T1] @ SY[T2]
    for (control, target), coupling in zip(COUPLING_PAIRS, p.couplings):
        h = h + coupling * SY[target] @ SY[control]
    return h


def rotating_components(p: QubitModelParams):
    """
    Разложение H(t) = static + e^{iΔt}·exchange + e^{-iΔt}·exchange†.

    Returns:
        (static, exchange): static содержит обмены внутри пар управляющих и
        мишеней, exchange = Σ J_ct σ₊^t σ₋^c (при равных связях
        J(σ₊^T1 + σ₊^T2)(σ₋^C1 + σ₋^C2))
    """
    static = (
        p.j_c * (SP[C1] @ SM[C2] + SM[C1] @ SP[C2])
        + p.j_t * (SP[T1] @ SM[T2] + SM[T1] @ SP[T2])
    )
    exchange = sum(
        coupling * SP[target] @ SM[control]
        for (control, target), coupling in zip(COUPLING_PAIRS, p.couplings)
    )
    return static, exchange


def build_rotating_h(p: QubitModelParams, t: float) -> np.ndarray:
    """Гамильтониан во вращающейся системе отсчета в момент t (секунды)"""
    static, exchange = rotating_components(p)
    phase = np.exp(1j * p.delta * t)
    return static + phase * exchange + np.conj(phase) * dagger(exchange)


def build_floquet_h(p: QubitModelParams) -> np.ndarray:
    """
    Гамильтониан Флоке первого порядка.

    Пять слагаемых: обмен управляющих с J_C, два сдвига ±J²/Δ, зависящие от
    состояния другой пары, и два слагаемых -J_C·J/Δ, смешивающие |Ψ⁺⟩_C с
    |00⟩_C и |11⟩_C. Паразитная связь J_T резонансных мишеней переходит
    без изменений.

    Raises:
        InvalidModelParameterError: связи мишень-управляющий не равны
    """
    if not p.is_symmetric:
        raise InvalidModelParameterError(
            'j_deviations', p.j_deviations, "гамильтониан Флоке выведен для равных связей J"
        )
    ratio = p.j ** 2 / p.delta
    mixed = p.j_c * p.j / p.delta

    targets_minus = SM[T1] + SM[T2]
    targets_plus = SP[T1] + SP[T2]
    controls_minus = SM[C1] + SM[C2]
    controls_plus = SP[C1] + SP[C2]

    h = p.j_c * (SP[C1] @ SM[C2] + SM[C1] @ SP[C2])
    h = h + ratio * targets_minus @ targets_plus @ (SZ[C1] + SZ[C2])
    h = h - ratio * controls_minus @ controls_plus @ (SZ[T1] + SZ[T2])
    h = h - mixed * (SP[C1] @ SZ[C2] + SP[C2] @ SZ[C1]) @ targets_minus
    h = h - mixed * (SM[C1] @ SZ[C2] + SM[C2] @ SZ[C1]) @ targets_plus
    h = h + p.j_t * (SP[T1] @ SM[T2] + SM[T1] @ SP[T2])
    return h
