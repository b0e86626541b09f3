"""
Смешивание управляющих состояний в одетом базисе.

Связь J_C·J/Δ гибридизует |Ψ⁺⟩_C|ψ⟩_T с |00⟩_C и |11⟩_C; угол смешивания ϑ
задает амплитуду нежелательной компоненты и масштаб неточности фазового
гейта, управляемого |Ψ⁺⟩_C.
"""

import math
from dataclasses import dataclass

from .exceptions import InvalidModelParameterError
from .gates import gate_time
from .params import QubitModelParams


@dataclass(frozen=True)
class DressedControlAnalysis:
    e_plus: float
    e_minus: float
    kappa_dressed: float
    vartheta: float
    sin_vartheta_estimate: float
    infidelity_scale: float


def dressed_control_analysis(p: QubitModelParams) -> DressedControlAnalysis:
    """
    Энергии E_± = (J_C ± κ)/2, точный угол ϑ из tanϑ = 2J_C·J/(E₊Δ + 4J²)
    и оценка sinϑ ≈ (1/4J)/(t_g/2π + 1/J_C).

    Raises:
        InvalidModelParameterError: при Δ = 0
    """
    if p.delta == 0:
        raise InvalidModelParameterError('delta', p.delta, "анализ требует Δ ≠ 0")

    j, j_c, delta = p.j, p.j_c, p.delta
    radicand = 64 * j ** 4 + 16 * j ** 2 * j_c * (j_c + delta) + j_c ** 2 * delta ** 2
    kappa = math.sqrt(radicand) / abs(delta)
    e_plus = (j_c + kappa) / 2
    e_minus = (j_c - kappa) / 2

    if j_c == 0:
        vartheta = 0.0
        estimate = 0.0
    else:
        vartheta = math.atan(2 * j_c * j / (e_plus * delta + 4 * j ** 2))
        estimate = (1 / (4 * j)) / (gate_time(p) / (2 * math.pi) + 1 / j_c)

    return DressedControlAnalysis(
        e_plus=e_plus,
        e_minus=e_minus,
        kappa_dressed=kappa,
        vartheta=vartheta,
        sin_vartheta_estimate=estimate,
        infidelity_scale=(2 * j / delta) ** 2,
    )
