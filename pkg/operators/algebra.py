"""
Плотная комплексная линейная алгебра на тензорных произведениях.

Операторы и состояния хранятся как numpy-массивы (complex128). Соглашение о
порядке множителей одно на весь проект: левый множитель произведения
Кронекера владеет старшим индексом. Для четырех кубитов (и кутритов) порядок
подсистем (C1, C2, T1, T2), см. SITES.

Базисные операторы кубита:
    σ_z = |0⟩⟨0| - |1⟩⟨1| (основное состояние имеет собственное значение +1)
    σ_+ = |1⟩⟨0|, σ_- = |0⟩⟨1|
    σ_y = [[0, -i], [i, 0]]
"""

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterator, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from .exceptions import DimensionMismatchError, NonFiniteMatrixError, NotHermitianError

# Порядок подсистем во всех 16- и 81-мерных пространствах
SITES = ('C1', 'C2', 'T1', 'T2')

HERMITIAN_TOLERANCE = 1e-12
UNITARY_TOLERANCE = 1e-10

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 1], [0, 0]], dtype=complex)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)

PAULIS = (IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z)


@dataclass(frozen=True)
class PhaseDistance:
    """Результат сравнения унитарных матриц с точностью до глобальной фазы"""

    distance: float
    phase: float
    comparable: bool = True


def _as_square(a, operation: str) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(a.shape)
    if not np.all(np.isfinite(a)):
        raise NonFiniteMatrixError(operation=operation)
    return a


def tensor_product(*operators) -> np.ndarray:
    """
    Произведение Кронекера, левый множитель владеет старшим индексом.

    Args:
        *operators: квадратные матрицы (или векторы состояний)

    Returns:
        np.ndarray размерности произведения размерностей
    """
    if not operators:
        raise DimensionMismatchError(message="tensor_product требует хотя бы один множитель")
    return reduce(np.kron, (np.asarray(op, dtype=complex) for op in operators))


def embed(operator, site: int, n_sites: int = 4) -> np.ndarray:
    """Вложить локальный оператор в подсистему site из n_sites одинаковых подсистем"""
    operator = np.asarray(operator, dtype=complex)
    identity = np.eye(operator.shape[0], dtype=complex)
    factors = [identity] * n_sites
    factors[site] = operator
    return tensor_product(*factors)


def basis_state(labels: Sequence[int], local_dim: int = 2) -> np.ndarray:
    """Вычислительное базисное состояние, например basis_state((0, 1, 1, 0))"""
    index = 0
    for label in labels:
        if not 0 <= label < local_dim:
            raise DimensionMismatchError(message=f"Метка {label} вне диапазона [0, {local_dim})")
        index = index * local_dim + int(label)
    state = np.zeros(local_dim ** len(labels), dtype=complex)
    state[index] = 1.0
    return state


def projector(state) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    return np.outer(state, state.conj())


def dagger(a) -> np.ndarray:
    return np.asarray(a).conj().T


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def hermiticity_residual(a) -> float:
    """max|A - A†| относительно max|A| (0 для нулевой матрицы)"""
    a = np.asarray(a)
    scale = np.max(np.abs(a)) if a.size else 0.0
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(a - dagger(a))) / scale)


def is_hermitian(a, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
    return hermiticity_residual(a) <= tolerance


def unitarity_residual(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(dagger(a) @ a - np.eye(a.shape[0]))))


def is_unitary(a, tolerance: float = UNITARY_TOLERANCE) -> bool:
    return unitarity_residual(a) <= tolerance


def matrix_exponential(a) -> np.ndarray:
    """
    Матричная экспонента методом масштабирования и возведения в квадрат
    с аппроксимацией Паде (scipy.linalg.expm).

    Raises:
        NonFiniteMatrixError: если матрица содержит NaN/inf
        DimensionMismatchError: если матрица не квадратная
    """
    a = _as_square(a, 'matrix_exponential')
    return expm(a)


def hermitian_eigendecomposition(h) -> Tuple[np.ndarray, np.ndarray]:
    """
    Спектральное разложение эрмитовой матрицы.

    Returns:
        (eigenvalues, eigenvectors): собственные значения по возрастанию и
        матрица V, столбцы которой являются собственными векторами,
        так что h = V diag(λ) V†

    Raises:
        NotHermitianError: если max|h - h†| > 1e-12·max|h|
    """
    h = _as_square(h, 'hermitian_eigendecomposition')
    residual = hermiticity_residual(h)
    if residual > HERMITIAN_TOLERANCE:
        raise NotHermitianError(residual=residual, tolerance=HERMITIAN_TOLERANCE)
    return np.linalg.eigh(h)


def eigen_propagator(eigenvalues, eigenvectors, t: float) -> np.ndarray:
    """exp(-iHt) из спектрального разложения H"""
    phases = np.exp(-1j * np.asarray(eigenvalues) * t)
    return (eigenvectors * phases) @ dagger(eigenvectors)


def distance_up_to_global_phase(u, v) -> PhaseDistance:
    """
    min по φ от max|u - e^{iφ}v|, фаза берется из tr(u†v).

    При нулевом перекрытии матрицы несравнимы: возвращается расстояние 2
    с флагом comparable=False.
    """
    u = _as_square(u, 'distance_up_to_global_phase')
    v = _as_square(v, 'distance_up_to_global_phase')
    if u.shape != v.shape:
        raise DimensionMismatchError(u.shape, v.shape)

    overlap = np.trace(dagger(u) @ v)
    if abs(overlap) < 1e-12 * u.shape[0]:
        return PhaseDistance(distance=2.0, phase=0.0, comparable=False)

    phase = float(np.angle(np.conj(overlap)))
    distance = float(np.max(np.abs(u - np.exp(1j * phase) * v)))
    return PhaseDistance(distance=distance, phase=phase)


def pauli_strings(n_qubits: int) -> Iterator[np.ndarray]:
    """Все 4^n произведений Паули (I, X, Y, Z) в лексикографическом порядке"""
    for factors in product(PAULIS, repeat=n_qubits):
        yield tensor_product(*factors)


def pauli_basis(n_qubits: int) -> np.ndarray:
    """Базис Паули как массив формы (4^n, 2^n, 2^n)"""
    return np.array(list(pauli_strings(n_qubits)))
