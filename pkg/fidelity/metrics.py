"""
Средняя точность гейта.

Среднее по равномерному распределению входных состояний
    F̄ = ∫dψ ⟨ψ|U† ε(|ψ⟩⟨ψ|) U|ψ⟩
сводится к сумме по базису Паули P_j (d = 2ⁿ):
    F̄ = [(1/d) Σ_j tr(P_j Λ(P_j)) + tr Λ(I)] / (d(d+1)),  Λ(X) = U† ε(X) U.
Для сохраняющего след канала tr Λ(I) = d, и формула совпадает с обычной
[Σ_j tr(U P_j U† ε(P_j)) + d²] / (d²(d+1)). Для уменьшающего след канала
(утечка из подпространства) та же формула дает точное среднее по Хаару без
перенормировки.

Каналы передаются как функции, принимающие массив формы (..., d, d).
"""

import logging
import math
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np

from operators.algebra import dagger, pauli_basis, projector
from operators.exceptions import DimensionMismatchError
from qubits.gates import control_vector, gate_time, ideal_target_gate
from qubits.params import QubitModelParams
from utils.rng import point_generator

logger = logging.getLogger('diamondsim.fidelity')

Channel = Callable[[np.ndarray], np.ndarray]

TRACE_PRESERVATION_TOLERANCE = 1e-6
TARGET_DIM = 4


@lru_cache(maxsize=4)
def _basis(dim: int) -> np.ndarray:
    basis = pauli_basis(_qubit_count(dim))
    basis.setflags(write=False)
    return basis


def _qubit_count(dim: int) -> int:
    n_qubits = int(round(math.log2(dim))) if dim > 0 else 0
    if dim < 2 or 2 ** n_qubits != dim:
        raise DimensionMismatchError(message=f"Размерность {dim} не является степенью двойки")
    return n_qubits


def average_gate_fidelity(channel: Channel, u_target, dim: int, check_trace: bool = True) -> float:
    """
    Средняя точность канала относительно унитарной операции.

    Args:
        channel: ε, принимает массив (..., d, d)
        u_target: целевая унитарная матрица d×d
        dim: размерность d (степень двойки)
        check_trace: предупреждать, если |tr ε(I) - d| > 1e-6·d

    Returns:
        F̄ в [0, 1]
    """
    u_target = np.asarray(u_target, dtype=complex)
    if u_target.shape != (dim, dim):
        raise DimensionMismatchError(u_target.shape, (dim, dim))

    basis = _basis(dim)
    images = np.asarray(channel(basis))
    rotated = dagger(u_target) @ images @ u_target
    overlap = np.real(np.einsum('jab,jba->', basis, rotated)) / dim
    identity_trace = float(np.real(np.trace(images[0])))

    if check_trace and abs(identity_trace - dim) > TRACE_PRESERVATION_TOLERANCE * dim:
        logger.warning(
            f"Канал не сохраняет след: tr ε(I)/d = {identity_trace / dim:.8f}"
        )
    return float((overlap + identity_trace) / (dim * (dim + 1)))


def unitary_fidelity(u, v) -> float:
    """Аналитическая средняя точность унитарной операции v относительно u"""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    d = u.shape[0]
    return float((abs(np.trace(dagger(u) @ v)) ** 2 + d) / (d * d + d))


def compressed_channel(channel: Channel, control) -> Channel:
    """
    ε̃(ρ_T) = ⟨φ|_C ε(|φ⟩⟨φ|_C ⊗ ρ_T) |φ⟩_C.

    Население, покинувшее |φ⟩_C, теряется: канал уменьшает след.
    """
    phi = control_vector(control)
    control_projector = projector(phi)

    def compressed(operators: np.ndarray) -> np.ndarray:
        operators = np.asarray(operators, dtype=complex)
        batch_shape = operators.shape[:-2]
        lifted = np.einsum('ab,...ij->...aibj', control_projector, operators)
        lifted = lifted.reshape(batch_shape + (16, 16))
        images = np.asarray(channel(lifted)).reshape(batch_shape + (4, 4, 4, 4))
        return np.einsum('a,...aibj,b->...ij', phi.conj(), images, phi)

    return compressed


def subspace_fidelity(channel: Channel, control, u_target_on_targets=None,
                      p: Optional[QubitModelParams] = None, t: Optional[float] = None) -> float:
    """
    Средняя точность операции на мишенях при фиксированном управляющем |φ⟩_C.

    Args:
        channel: канал на 16-мерном пространстве
        control: метка управляющего состояния
        u_target_on_targets: целевая 4×4 операция; по умолчанию U_T^φ(t) при
            t = t_g из параметров p
        p: параметры модели (нужны, если цель не задана)
        t: время целевой операции

    Returns:
        точность d = 4 с утечкой, учтенной как потеря
    """
    if u_target_on_targets is None:
        if p is None:
            raise DimensionMismatchError(message="Нужна целевая операция или параметры модели")
        u_target_on_targets = ideal_target_gate(control, gate_time(p) if t is None else t, p)
    return average_gate_fidelity(
        compressed_channel(channel, control), u_target_on_targets, TARGET_DIM, check_trace=False
    )


def haar_random_state(dim: int, seed: int, index: int = 0) -> np.ndarray:
    """
    Случайное состояние по мере Хаара: нормированные комплексные гауссовы
    амплитуды. Одинаковые (seed, index) дают одинаковое состояние.
    """
    if dim < 2:
        raise DimensionMismatchError(message=f"Размерность должна быть не меньше 2, получено {dim}")
    generator = point_generator(seed, index)
    amplitudes = generator.normal(size=dim) + 1j * generator.normal(size=dim)
    return amplitudes / np.linalg.norm(amplitudes)


def haar_average_fidelity(channel: Channel, u_target, dim: int, samples: int = 2000,
                          seed: int = 0) -> Tuple[float, float]:
    """
    Оценка F̄ методом Монте-Карло по состояниям Хаара.

    Returns:
        (среднее, стандартная ошибка среднего)
    """
    u_target = np.asarray(u_target, dtype=complex)
    generator = point_generator(seed, 0)
    states = generator.normal(size=(samples, dim)) + 1j * generator.normal(size=(samples, dim))
    states /= np.linalg.norm(states, axis=1, keepdims=True)

    inputs = np.einsum('na,nb->nab', states, states.conj())
    images = np.asarray(channel(inputs))
    targets = states @ u_target.T
    values = np.real(np.einsum('na,nab,nb->n', targets.conj(), images, targets))
    return float(np.mean(values)), float(np.std(values, ddof=1) / math.sqrt(samples))
