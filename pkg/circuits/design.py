"""
Подбор емкостей схемы под заданные связи J и J_C.

|J| растет с C, |J_C| убывает с C_C, поэтому поиск чередует два
одномерных решения: C под |J| при фиксированной C_C и C_C под |J_C| при
фиксированной C. Остальные параметры схемы не меняются. Каждое решение
ищется методом Брента в логарифме емкости после геометрического поиска
интервала со сменой знака.
"""

import logging
import math
from typing import Callable, Optional, Tuple

from scipy.optimize import root_scalar

from core.exceptions import DiamondSimError
from qutrits.params import QutritModelParams

from .exceptions import DesignNotFoundError
from .params import CircuitParams
from .transmon import model_from_circuit

logger = logging.getLogger('diamondsim.circuits')

STEP = math.log(2.0)
MAX_EXPANSIONS = 12


def _coupling_j(p: QutritModelParams) -> float:
    return abs(p.j)


def _coupling_j_c(p: QutritModelParams) -> float:
    return abs(p.j_c)


def _mismatch(cp: CircuitParams, name: str, coupling: Callable, target: float) -> Callable:
    value = getattr(cp, name)

    def mismatch(log_scale: float) -> Optional[float]:
        try:
            model = model_from_circuit(cp.replace(**{name: value * math.exp(log_scale)}), warn=False)
        except DiamondSimError:
            return None
        return math.log(coupling(model) / target)

    return mismatch


def _bracket(mismatch: Callable, name: str, target: float) -> Tuple[float, float]:
    """Интервал log-масштаба со сменой знака, начиная от текущего значения"""
    start = mismatch(0.0)
    if start is None:
        raise DesignNotFoundError(name, target, "исходные параметры вне режима трансмона")
    if start == 0.0:
        return 0.0, 0.0

    for direction in (1.0, -1.0):
        previous = 0.0
        for k in range(1, MAX_EXPANSIONS + 1):
            value = mismatch(direction * k * STEP)
            if value is None:
                break
            if value * start <= 0:
                return tuple(sorted((previous, direction * k * STEP)))
            previous = direction * k * STEP
    raise DesignNotFoundError(name, target, f"нет смены знака в пределах ×2^{MAX_EXPANSIONS}")


def _solve(cp: CircuitParams, name: str, coupling: Callable, target: float) -> CircuitParams:
    mismatch = _mismatch(cp, name, coupling, target)
    lower, upper = _bracket(mismatch, name, target)
    if lower == upper:
        return cp
    result = root_scalar(mismatch, bracket=(lower, upper), method='brentq', xtol=1e-12)
    if not result.converged:
        raise DesignNotFoundError(name, target, result.flag)
    return cp.replace(**{name: getattr(cp, name) * math.exp(result.root)})


def design_couplings(base: CircuitParams, target_j: float, target_j_c: float,
                     tolerance: float = 1e-6, max_iterations: int = 50) -> CircuitParams:
    """
    Подобрать C и C_C так, чтобы |J| = target_j и |J_C| = target_j_c.

    Args:
        base: исходные параметры схемы (C′, C_T, E_J не меняются)
        target_j, target_j_c: целевые связи, рад/с (берется модуль)
        tolerance: допустимое относительное отклонение обеих связей

    Raises:
        DesignNotFoundError: цель не удалось заключить в интервал или
            чередование не сошлось
    """
    target_j, target_j_c = abs(target_j), abs(target_j_c)
    if target_j == 0 or target_j_c == 0:
        raise DesignNotFoundError('j' if target_j == 0 else 'j_c', 0.0, "связь должна быть ненулевой")

    cp = base
    for iteration in range(1, max_iterations + 1):
        cp = _solve(cp, 'c', _coupling_j, target_j)
        cp = _solve(cp, 'c_c', _coupling_j_c, target_j_c)
        model = model_from_circuit(cp, warn=False)
        error = max(abs(abs(model.j) / target_j - 1.0), abs(abs(model.j_c) / target_j_c - 1.0))
        logger.debug(f"Подбор схемы, итерация {iteration}: отклонение {error:.3e}")
        if error < tolerance:
            logger.info(f"Схема подобрана за {iteration} итераций: C = {cp.c:.4e} Ф, C_C = {cp.c_c:.4e} Ф")
            cp.warn_if_strongly_coupled()
            return cp

    raise DesignNotFoundError('c, c_c', target_j, f"чередование не сошлось за {max_iterations} итераций")
