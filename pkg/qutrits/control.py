"""
Управляющие состояния в кутритной модели.

|00⟩_C и |Ψ±⟩_C переносятся из кубитной модели без изменений. Состояние
|11⟩_C связано с (|02⟩_C + |20⟩_C)/√2 связью √2·J_C·T₀·T₂ и заменяется
собственным состоянием H̃_C в этом двумерном блоке:
    |1̃1⟩_C = cosθ̃|11⟩_C + sinθ̃(|02⟩_C + |20⟩_C)/√2,
    θ̃ = -½ arctan(2√2·J_C·T₀·T₂/α_C).
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from operators.algebra import basis_state
from qubits.gates import ControlState, TARGET_LABELS, control_label

from .exceptions import InvalidQutritParameterError
from .hamiltonians import build_control_h, pair_state, species_operators
from .params import QutritModelParams

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class RedefinedControlState:
    """
    Attributes:
        theta: угол смешивания θ̃, рад
        vector: 9-мерный вектор управляющей пары
        energy: собственное значение в блоке {|11⟩, (|02⟩+|20⟩)/√2}
        residual: ‖(H_block - E)v‖ в этом блоке
    """

    theta: float
    vector: np.ndarray
    energy: float
    residual: float


def _mixing_block(p: QutritModelParams) -> Tuple[np.ndarray, np.ndarray]:
    """H̃_C в базисе {|11⟩_C, (|02⟩_C + |20⟩_C)/√2}"""
    h_control = build_control_h(p)
    symmetric = _SQRT_HALF * (pair_state((0, 2)) + pair_state((2, 0)))
    basis = np.column_stack([pair_state((1, 1)), symmetric])
    return basis, basis.conj().T @ h_control @ basis


def redefined_11(p: QutritModelParams) -> RedefinedControlState:
    """
    Состояние |1̃1⟩_C, переходящее в |11⟩_C при J_C → 0.

    Raises:
        InvalidQutritParameterError: при α_C = 0
    """
    if p.alpha_c == 0:
        raise InvalidQutritParameterError('alpha_c', p.alpha_c, "угол смешивания не определен")

    controls, _ = species_operators(p)
    levels = controls.levels
    theta = -0.5 * math.atan(2.0 * math.sqrt(2.0) * p.j_c * levels.t0 * levels.t2 / p.alpha_c)

    basis, block = _mixing_block(p)
    coefficients = np.array([math.cos(theta), math.sin(theta)], dtype=complex)
    energy = float(np.real(coefficients.conj() @ block @ coefficients))
    residual = float(np.linalg.norm(block @ coefficients - energy * coefficients))

    return RedefinedControlState(
        theta=theta,
        vector=basis @ coefficients,
        energy=energy,
        residual=residual,
    )


def qutrit_control_vector(control, p: QutritModelParams) -> np.ndarray:
    """9-мерный вектор управляющей пары; ControlState.ONE_ONE означает |1̃1⟩_C"""
    control = control_label(control)
    if control == ControlState.ONE_ONE:
        return redefined_11(p).vector
    if control == ControlState.ZERO_ZERO:
        return pair_state((0, 0))

    sign = 1.0 if control == ControlState.PSI_PLUS else -1.0
    return _SQRT_HALF * (pair_state((0, 1)) + sign * pair_state((1, 0)))


def target_vector(label: str) -> np.ndarray:
    """Вычислительное состояние мишеней '00', '01', '10' или '11' в 9-мерном пространстве"""
    if label not in TARGET_LABELS:
        raise InvalidQutritParameterError('target', label, f"допустимо: {', '.join(TARGET_LABELS)}")
    return basis_state(tuple(int(bit) for bit in label), local_dim=3)
