"""
Матрица емкостей схемы и ее обращение.

Узловые потоки φ₁…φ₆ переводятся преобразованием T в координаты
(φ_C1, φ_C2, φ_T1, φ_T2, φ_CM,T1, φ_CM,T2); K = (Tᵀ)⁻¹𝓒T⁻¹. Обратная
матрица K⁻¹ известна в замкнутом виде, и каждый расчет сверяет ее с
численным обращением.

Формулы записаны в единицах Φ₀ = 2π, ħ = 1, где заряд куперовской пары
равен 1 и E_C = 1/(8C). Переход к рад/с делается множителем
CHARGE_SCALE = 4e²/ħ, так что E_C = e²/(2ħC).
"""

import dataclasses
import logging
from dataclasses import dataclass

import numpy as np
from scipy.constants import e, hbar

from .exceptions import SingularCapacitanceError
from .params import CircuitParams

logger = logging.getLogger('diamondsim.circuits')

CHARGE_SCALE = 4.0 * e ** 2 / hbar

# допустимое расхождение формул и численного K⁻¹ относительно max|K⁻¹|
INVERSION_TOLERANCE = 1e-10
MAX_CONDITION_NUMBER = 1e12

COORDINATES = ('C1', 'C2', 'T1', 'T2', 'CM_T1', 'CM_T2')

TRANSFORMATION = np.array([
    [0, 0, 0, 0, -1, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, -1],
    [0, 0, 1, -1, 0, 0],
    [1, 0, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0],
], dtype=float)


@dataclass(frozen=True)
class DerivedEnergies:
    """
    Зарядовые энергии и емкостные связи, рад/с.

    Attributes:
        e_c_c, e_c_t, e_c_cm: E_{C_C}, E_{C_T}, E_{C_CM}
        coupling_cc, coupling_ct, coupling_tt: 𝓔_CC, 𝓔_CT, 𝓔_TT
        coupling_c_cm, coupling_cm_cm: 𝓔_C,CM и 𝓔_CM,CM
        inversion_deviation: max|K⁻¹_формулы - K⁻¹_численно| / max|K⁻¹|
    """

    e_c_c: float
    e_c_t: float
    e_c_cm: float
    coupling_cc: float
    coupling_ct: float
    coupling_tt: float
    coupling_c_cm: float
    coupling_cm_cm: float
    inversion_deviation: float = 0.0


def charging_energy(capacitance: float) -> float:
    """E_C = e²/(2ħC) одиночного конденсатора, рад/с"""
    return CHARGE_SCALE / (8.0 * capacitance)


def capacitance_matrix(cp: CircuitParams) -> np.ndarray:
    """Узловая матрица емкостей 𝓒 (6×6, Ф)"""
    c, c_prime, c_t, c_c = cp.c, cp.c_prime, cp.c_t, cp.c_c
    return np.array([
        [c + c_t, -c, 0, 0, 0, -c_t],
        [-c, c_c + c_prime + 2 * c, -c, 0, -c_prime, 0],
        [0, -c, c + c_t, -c_t, 0, 0],
        [0, 0, -c_t, c + c_t, -c, 0],
        [0, -c_prime, 0, -c, c_c + c_prime + 2 * c, -c],
        [-c_t, 0, 0, 0, -c, c + c_t],
    ], dtype=float)


def transformed_capacitance(cp: CircuitParams) -> np.ndarray:
    """K = (Tᵀ)⁻¹𝓒T⁻¹"""
    inverse_t = np.linalg.inv(TRANSFORMATION)
    return inverse_t.T @ capacitance_matrix(cp) @ inverse_t


def numeric_inverse_capacitance(cp: CircuitParams) -> np.ndarray:
    """
    K⁻¹ численным обращением, в рад/с.

    Raises:
        SingularCapacitanceError: K вырождена или плохо обусловлена
    """
    k = transformed_capacitance(cp)
    condition = float(np.linalg.cond(k))
    if not np.isfinite(condition) or condition > MAX_CONDITION_NUMBER:
        raise SingularCapacitanceError(condition)
    try:
        return CHARGE_SCALE * np.linalg.inv(k)
    except np.linalg.LinAlgError as error:
        raise SingularCapacitanceError(condition, original_error=error) from error


def _closed_forms(cp: CircuitParams) -> dict:
    c, c_prime, c_t, c_c = cp.c, cp.c_prime, cp.c_t, cp.c_c
    common = 2 * c_t * (c_c + 2 * c_prime) + c * (c_c + 2 * c_prime + 4 * c_t)
    return {
        'e_c_c': (2 * c_t * (c_c + c_prime) + c * (c_c + c_prime + 2 * c_t)) / (8 * c_c * common),
        'e_c_t': 2 * (c ** 2 + common) / (8 * (c + 2 * c_t) * common),
        'e_c_cm': 2 * (c + c_c) / (8 * c * c_c),
        'coupling_cc': (2 * c_prime * c_t + c * (c_prime + 2 * c_t)) / (c_c * common),
        'coupling_ct': c / common,
        'coupling_tt': 2 * c ** 2 / ((c + 2 * c_t) * common),
        'coupling_c_cm': 1 / c_c,
        'coupling_cm_cm': 2 / c_c,
    }


def inverse_capacitance_matrix(energies: DerivedEnergies) -> np.ndarray:
    """K⁻¹, собранная из замкнутых формул в порядке COORDINATES"""
    charge = 8 * energies.e_c_c
    target = 8 * energies.e_c_t
    center = 8 * energies.e_c_cm
    cc, ct, tt = energies.coupling_cc, energies.coupling_ct, energies.coupling_tt
    ccm, cmcm = energies.coupling_c_cm, energies.coupling_cm_cm
    return np.array([
        [charge, -cc, ct, ct, -ccm, -ccm],
        [-cc, charge, ct, ct, ccm, ccm],
        [ct, ct, target, tt, 0, 0],
        [ct, ct, tt, target, 0, 0],
        [-ccm, ccm, 0, 0, center, cmcm],
        [-ccm, ccm, 0, 0, cmcm, center],
    ])


def derived_energies(cp: CircuitParams) -> DerivedEnergies:
    """
    Зарядовые энергии и связи по замкнутым формулам со сверкой.

    Raises:
        SingularCapacitanceError: K вырождена
    """
    energies = DerivedEnergies(**{name: CHARGE_SCALE * value for name, value in _closed_forms(cp).items()})
    numeric = numeric_inverse_capacitance(cp)
    deviation = float(np.max(np.abs(inverse_capacitance_matrix(energies) - numeric)) / np.max(np.abs(numeric)))
    if deviation > INVERSION_TOLERANCE:
        logger.warning(f"Замкнутые формулы K⁻¹ расходятся с численным обращением: {deviation:.3e}")
    return dataclasses.replace(energies, inversion_deviation=deviation)
