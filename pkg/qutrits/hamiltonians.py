"""
Гамильтониан четырех кутритов (C1, C2, T1, T2) на 81-мерном пространстве.

    H̃ = -½Ω_T(σ̃_z^T1 + σ̃_z^T2) - ½Ω_C(σ̃_z^C1 + σ̃_z^C2)
        + J_T σ̃_y^T1 σ̃_y^T2 + J_C σ̃_y^C1 σ̃_y^C2
        + J(σ̃_y^T1 + σ̃_y^T2)(σ̃_y^C1 + σ̃_y^C2)

Вариант rotating_wave=True оставляет в каждом произведении σ̃_y⊗σ̃_y только
обменные слагаемые R⊗R† + R†⊗R и сохраняет число возбуждений (|2⟩ считается
за два возбуждения).
"""

from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from operators.algebra import basis_state, dagger, embed, hermitian_eigendecomposition, tensor_product

from .operators import QUTRIT_DIM, QutritOperatorSet, operator_set
from .params import QutritModelParams

C1, C2, T1, T2 = range(4)
QUTRIT_SPACE_DIM = QUTRIT_DIM ** 4
PAIR_DIM = QUTRIT_DIM ** 2


def species_operators(p: QutritModelParams) -> Tuple[QutritOperatorSet, QutritOperatorSet]:
    """(управляющие, мишени)"""
    return operator_set(p.omega_c, p.alpha_c), operator_set(p.omega_t, p.alpha_t)


def _coupling(a: np.ndarray, b: np.ndarray, rotating_wave: bool,
              raising_a: np.ndarray, raising_b: np.ndarray) -> np.ndarray:
    if not rotating_wave:
        return a @ b
    return raising_a @ dagger(raising_b) + dagger(raising_a) @ raising_b


def build_qutrit_h(p: QutritModelParams, rotating_wave: bool = False) -> np.ndarray:
    """
    Лабораторный гамильтониан кутритной модели, 81×81.

    Args:
        p: параметры модели
        rotating_wave: оставить только сохраняющие возбуждения обмены
    """
    controls, targets = species_operators(p)
    sz = {site: embed(ops.sigma_z, site) for site, ops in
          ((C1, controls), (C2, controls), (T1, targets), (T2, targets))}
    sy = {site: embed(ops.sigma_y, site) for site, ops in
          ((C1, controls), (C2, controls), (T1, targets), (T2, targets))}
    r = {site: embed(ops.raising, site) for site, ops in
         ((C1, controls), (C2, controls), (T1, targets), (T2, targets))}

    h0 = -0.5 * p.omega_t * (sz[T1] + sz[T2]) - 0.5 * p.omega_c * (sz[C1] + sz[C2])

    def pair(a, b):
        return _coupling(sy[a], sy[b], rotating_wave, r[a], r[b])

    hint = (
        p.j_t * pair(T1, T2)
        + p.j_c * pair(C1, C2)
        + p.j * (pair(T1, C1) + pair(T1, C2) + pair(T2, C1) + pair(T2, C2))
    )
    return h0 + hint


def build_control_h(p: QutritModelParams) -> np.ndarray:
    """Эффективный гамильтониан управляющей пары H̃_C, 9×9"""
    controls, _ = species_operators(p)
    identity = np.eye(QUTRIT_DIM)
    h0 = -0.5 * p.omega_c * (np.kron(controls.sigma_z, identity) + np.kron(identity, controls.sigma_z))
    return h0 + p.j_c * np.kron(controls.sigma_y, controls.sigma_y)


def excitation_number() -> np.ndarray:
    """N = Σ_i (|1⟩⟨1|_i + 2|2⟩⟨2|_i)"""
    local = np.diag([0.0, 1.0, 2.0]).astype(complex)
    return sum(embed(local, site) for site in range(4))


def pair_state(labels: Sequence[int]) -> np.ndarray:
    """Состояние пары кутритов, например pair_state((0, 2)) = |02⟩"""
    return basis_state(labels, local_dim=QUTRIT_DIM)


def product_state(control: np.ndarray, target: np.ndarray) -> np.ndarray:
    """|φ⟩_C ⊗ |ψ⟩_T"""
    return tensor_product(control, target)


@lru_cache(maxsize=16)
def qutrit_spectrum(p: QutritModelParams, rotating_wave: bool = False):
    """Спектральное разложение H̃; массивы только для чтения"""
    eigenvalues, eigenvectors = hermitian_eigendecomposition(build_qutrit_h(p, rotating_wave))
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return eigenvalues, eigenvectors
