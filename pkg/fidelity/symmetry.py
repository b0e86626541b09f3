"""
Симметрия точностей относительно знака J_C.

Комплексное сопряжение переводит H(t) с параметрами (J_C, Δ, J_T) в -H(t)
с параметрами (-J_C, -Δ, -J_T) с точностью до калибровки σ_z на
управляющих, а идеальный гейт в сопряженный. Поэтому все пять точностей
при таком совместном отражении совпадают точно. Отражение одного J_C
симметрией не является; разница только сообщается.
"""

import logging
from dataclasses import dataclass
from typing import Dict

from dynamics.lindblad import Engine
from qubits.gates import gate_time
from qubits.params import QubitModelParams

from .gate_time import FIDELITY_COLUMNS, converged_channel, fidelity_trace

logger = logging.getLogger('diamondsim.fidelity')

SYMMETRY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SignSymmetryResult:
    """
    Точности в момент t_g для исходных и отраженных параметров.

    Attributes:
        reference: параметры p
        joint: (J_C, Δ, J_T) -> (-J_C, -Δ, -J_T)
        j_c_only: J_C -> -J_C
    """

    reference: Dict[str, float]
    joint: Dict[str, float]
    j_c_only: Dict[str, float]

    @staticmethod
    def _difference(a: Dict[str, float], b: Dict[str, float]) -> float:
        return max(abs(a[name] - b[name]) for name in FIDELITY_COLUMNS)

    @property
    def joint_difference(self) -> float:
        return self._difference(self.reference, self.joint)

    @property
    def j_c_difference(self) -> float:
        return self._difference(self.reference, self.j_c_only)

    @property
    def is_symmetric(self) -> bool:
        return self.joint_difference <= SYMMETRY_TOLERANCE


def mirrored_params(p: QubitModelParams) -> QubitModelParams:
    return p.replace(j_c=-p.j_c, delta=-p.delta, j_t=-p.j_t)


def _gate_time_fidelities(p: QubitModelParams, engine: str) -> Dict[str, float]:
    t_g = gate_time(p)
    return fidelity_trace(converged_channel(p, [t_g], engine=engine), p, t_g).row(0)


def j_c_sign_symmetry(p: QubitModelParams, engine: str = Engine.ROTATING) -> SignSymmetryResult:
    """
    Сравнить пять точностей в t_g при смене знака J_C.

    Args:
        p: параметры модели
        engine: Engine.ROTATING или Engine.FLOQUET
    """
    result = SignSymmetryResult(
        reference=_gate_time_fidelities(p, engine),
        joint=_gate_time_fidelities(mirrored_params(p), engine),
        j_c_only=_gate_time_fidelities(p.replace(j_c=-p.j_c), engine),
    )
    if not result.is_symmetric:
        logger.warning(f"Совместное отражение изменило точности на {result.joint_difference:.2e}")
    logger.info(
        f"Знак J_C: совместное отражение {result.joint_difference:.2e}, "
        f"только J_C {result.j_c_difference:.2e}"
    )
    return result
