"""
Утечка через управляющую пару и ее компенсация перекрестной связью.

При управляющем |Ψ⁻⟩_C возбуждение мишени переходит |10⟩_T → |01⟩_T двумя
путями: напрямую через J_T и во втором порядке через состояния
(|02⟩_C - |20⟩_C)/√2 ⊗ |00⟩_T и ⊗ |11⟩_T. Эффективная модель на этих
четырех состояниях

    H_eff = [[0, δ, δ, κ],
             [δ, Δ₋, 0, δ],
             [δ, 0, Δ₊, δ],
             [κ, δ, δ, 0]],

    Δ± = Ω_C ± Ω_T + α_C + J_C·T₀^C²,  δ = J·T₀^T·T₂^C,  κ = J_T·T₀^T²,

дает во втором порядке P(t) ≈ t²|κ - δ²(1/Δ₋ + 1/Δ₊)|², откуда
J_T^opt = (J·T₂^C)²(1/Δ₊ + 1/Δ₋).

В части литературы сдвиг в Δ± записан через T₁^C; здесь это T₀^C, так как
T₁ для трансмона не определен.
"""

import logging
from dataclasses import dataclass

import numpy as np

from operators.algebra import hermitian_eigendecomposition

from .control import qutrit_control_vector, target_vector
from .exceptions import ResonantDenominatorError
from .hamiltonians import product_state, qutrit_spectrum, species_operators
from .params import QutritModelParams

logger = logging.getLogger('diamondsim.qutrits')

# |Δ±| ниже этого значения (рад/с) считается резонансом
RESONANCE_THRESHOLD = 1e6

# Индексы начального и конечного состояний в базисе H_eff
INITIAL, FINAL = 3, 0


@dataclass(frozen=True, eq=False)
class EffectiveLeakageModel:
    """
    Attributes:
        delta_minus, delta_plus: Δ₋, Δ₊
        delta: δ = J·T₀^T·T₂^C
        kappa_crosstalk: κ = J_T·(T₀^T)²
    """

    delta_minus: float
    delta_plus: float
    delta: float
    kappa_crosstalk: float

    @property
    def hamiltonian(self) -> np.ndarray:
        d, k = self.delta, self.kappa_crosstalk
        return np.array([
            [0.0, d, d, k],
            [d, self.delta_minus, 0.0, d],
            [d, 0.0, self.delta_plus, d],
            [k, d, d, 0.0],
        ], dtype=complex)

    @property
    def effective_coupling(self) -> float:
        """κ - δ²(1/Δ₋ + 1/Δ₊)"""
        return self.kappa_crosstalk - self.delta ** 2 * (1.0 / self.delta_minus + 1.0 / self.delta_plus)


def _denominators(p: QutritModelParams):
    controls, _ = species_operators(p)
    shift = p.alpha_c + p.j_c * controls.levels.t0 ** 2
    delta_plus = p.omega_c + p.omega_t + shift
    delta_minus = p.omega_c - p.omega_t + shift
    for name, value in (('Δ+', delta_plus), ('Δ-', delta_minus)):
        if abs(value) < RESONANCE_THRESHOLD:
            raise ResonantDenominatorError(name, value)
    return delta_minus, delta_plus


def effective_leakage_model(p: QutritModelParams) -> EffectiveLeakageModel:
    controls, targets = species_operators(p)
    delta_minus, delta_plus = _denominators(p)
    return EffectiveLeakageModel(
        delta_minus=delta_minus,
        delta_plus=delta_plus,
        delta=p.j * targets.levels.t0 * controls.levels.t2,
        kappa_crosstalk=p.j_t * targets.levels.t0 ** 2,
    )


def jt_optimal(p: QutritModelParams) -> float:
    """
    Перекрестная связь, при которой оба пути утечки гасят друг друга.

    Raises:
        ResonantDenominatorError: если |Δ±| < 10⁶ рад/с
    """
    controls, _ = species_operators(p)
    delta_minus, delta_plus = _denominators(p)
    numerator = (p.j * controls.levels.t2) ** 2
    return numerator / delta_plus + numerator / delta_minus


def dyson_transition_probability(p: QutritModelParams, t, full: bool = False):
    """
    Вероятность перехода |Ψ⁻,01⟩ → |Ψ⁻,10⟩ во втором порядке ряда Дайсона.

    Args:
        p: параметры модели
        t: время или массив времен, секунды
        full: не отбрасывать осциллирующие слагаемые порядка δ²/Δ±²

    Returns:
        P(t) той же формы, что и t
    """
    model = effective_leakage_model(p)
    t = np.asarray(t, dtype=float)
    if not full:
        return t ** 2 * model.effective_coupling ** 2

    amplitude = -1j * t * model.kappa_crosstalk
    for gap in (model.delta_minus, model.delta_plus):
        amplitude = amplitude + model.delta ** 2 * (1j * gap * t + np.exp(-1j * gap * t) - 1.0) / gap ** 2
    return np.abs(amplitude) ** 2


def exact_leakage_probability(p: QutritModelParams, t):
    """P(t) из точной эволюции четырехуровневой модели"""
    basis = np.eye(4, dtype=complex)
    amplitudes = _transition_amplitudes(effective_leakage_model(p).hamiltonian, basis[FINAL], basis[INITIAL],
                                        np.asarray(t, dtype=float))
    return np.abs(amplitudes) ** 2


def transition_amplitudes(eigenvalues, eigenvectors, bra, ket, times) -> np.ndarray:
    """⟨bra|e^{-iHt}|ket⟩ = Σ_k ⟨bra|k⟩⟨k|ket⟩e^{-iE_k t} для массива времен"""
    weights = (bra.conj() @ eigenvectors) * (ket.conj() @ eigenvectors).conj()
    phases = np.exp(-1j * np.multiply.outer(times, eigenvalues))
    return phases @ weights


def _transition_amplitudes(h, bra, ket, times) -> np.ndarray:
    eigenvalues, eigenvectors = hermitian_eigendecomposition(h)
    return transition_amplitudes(eigenvalues, eigenvectors, bra, ket, times)


def leakage_projection_error(p: QutritModelParams, horizon: float, samples: int = 201) -> float:
    """
    max_t ||⟨Ψ⁻,01|U(t)|Ψ⁻,10⟩| - |A_eff(t)||, где U точная 81-мерная эволюция,
    а A_eff амплитуда той же пары в четырехуровневой модели.
    """
    times = np.linspace(0.0, horizon, int(samples))
    control = qutrit_control_vector('psi_minus', p)
    initial = product_state(control, target_vector('10'))
    final = product_state(control, target_vector('01'))

    eigenvalues, eigenvectors = qutrit_spectrum(p)
    exact = transition_amplitudes(eigenvalues, eigenvectors, final, initial, times)

    basis = np.eye(4, dtype=complex)
    effective = _transition_amplitudes(effective_leakage_model(p).hamiltonian, basis[FINAL], basis[INITIAL], times)

    error = float(np.max(np.abs(np.abs(exact) - np.abs(effective))))
    logger.debug(f"Ошибка четырехуровневой модели: {error:.3e} на {horizon:.3e} с")
    return error
