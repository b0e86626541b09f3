"""
Точность свопа мишеней и скорость свопа в кутритной модели.

Эволюция чистая и унитарная: |⟨φ|_C⟨ψ'|_T e^{-iH̃t} |ψ⟩_T|φ⟩_C|² считается
через спектральное разложение H̃ для всего массива времен сразу.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from utils.parallel import map_points

from .control import qutrit_control_vector, target_vector
from .hamiltonians import product_state, qutrit_spectrum
from .leakage import transition_amplitudes
from .params import QutritModelParams

logger = logging.getLogger('diamondsim.qutrits')

DEFAULT_HORIZON = 2e-6
DEFAULT_RESOLUTION = 0.5e-9

# Процессы на мишенях: (начальное, конечное)
SWAP_PROCESSES: Tuple[Tuple[str, str], ...] = (
    ('01', '10'),
    ('00', '00'),
    ('11', '11'),
)


@dataclass(frozen=True)
class SwapRatePoint:
    """
    Attributes:
        control: метка управляющего состояния
        j_t: перекрестная связь, рад/с
        rate: 1/t первого пика выше порога, 1/с (0, если порог не достигнут)
        peak_time: время этого пика, с (None, если порог не достигнут)
        peak_fidelity: максимум точности свопа на горизонте
    """

    control: str
    j_t: float
    rate: float
    peak_time: Optional[float]
    peak_fidelity: float


def swap_fidelity(control, psi_in: str, psi_out: str, t, p: QutritModelParams):
    """
    Args:
        control: '00', '11' (означает |1̃1⟩_C), 'psi_plus' или 'psi_minus'
        psi_in, psi_out: метки мишеней '00', '01', '10', '11'
        t: время или массив времен, секунды

    Returns:
        вероятность перехода той же формы, что и t
    """
    phi = qutrit_control_vector(control, p)
    initial = product_state(phi, target_vector(psi_in))
    final = product_state(phi, target_vector(psi_out))
    eigenvalues, eigenvectors = qutrit_spectrum(p)
    amplitudes = transition_amplitudes(eigenvalues, eigenvectors, final, initial, np.asarray(t, dtype=float))
    return np.abs(amplitudes) ** 2


def scan_times(horizon: float = DEFAULT_HORIZON, resolution: float = DEFAULT_RESOLUTION) -> np.ndarray:
    return np.linspace(0.0, horizon, int(round(horizon / resolution)) + 1)


def first_peak_above(times: np.ndarray, values: np.ndarray, threshold: float):
    """Индекс первого локального максимума со значением не ниже порога или None"""
    above = np.flatnonzero(values >= threshold)
    if above.size == 0:
        return None
    index = int(above[0])
    while index + 1 < values.size and values[index + 1] > values[index]:
        index += 1
    return index


def swap_rate(control, j_t: float, p: QutritModelParams, horizon: float = DEFAULT_HORIZON,
              threshold: float = None, resolution: float = DEFAULT_RESOLUTION) -> SwapRatePoint:
    """
    Скорость свопа |01⟩_T ↔ |10⟩_T при перекрестной связи j_t.

    Args:
        control: метка управляющего состояния
        j_t: J_T, рад/с (заменяет p.j_t)
        p: остальные параметры модели
        horizon: длина сканирования, с
        threshold: порог "близко к единице", по умолчанию DIAMONDSIM_SWAP_THRESHOLD
        resolution: шаг сетки времен, с
    """
    threshold = settings.DIAMONDSIM_SWAP_THRESHOLD if threshold is None else threshold
    times = scan_times(horizon, resolution)
    values = swap_fidelity(control, '01', '10', times, p.replace(j_t=j_t))
    index = first_peak_above(times, values, threshold)

    if index is None or times[index] == 0.0:
        return SwapRatePoint(str(control), j_t, 0.0, None, float(np.max(values)))
    return SwapRatePoint(str(control), j_t, float(1.0 / times[index]), float(times[index]), float(np.max(values)))


def _rate_point(arguments) -> SwapRatePoint:
    control, j_t, p, horizon, threshold, resolution = arguments
    return swap_rate(control, j_t, p, horizon, threshold, resolution)


def swap_rate_sweep(controls: Sequence[str], j_t_values: Sequence[float], p: QutritModelParams,
                    horizon: float = DEFAULT_HORIZON, threshold: float = None,
                    resolution: float = DEFAULT_RESOLUTION, workers: int = 1) -> list:
    """Скорости свопа по сетке J_T для каждого управляющего состояния; порядок (J_T, control)"""
    threshold = settings.DIAMONDSIM_SWAP_THRESHOLD if threshold is None else threshold
    items = [(control, float(j_t), p, horizon, threshold, resolution)
             for j_t in j_t_values for control in controls]
    points = map_points(_rate_point, items, workers=workers)
    logger.info(f"Свип скорости свопа: {len(points)} точек, порог {threshold}")
    return points


def zero_rate_crossing(points: Sequence[SwapRatePoint]):
    """
    J_T, в котором скорость свопа минимальна (ноль или минимум по сетке).

    Среди нулевых точек берется середина самого длинного непрерывного
    участка; если нулей нет, точка с минимальной скоростью.
    """
    points = sorted(points, key=lambda point: point.j_t)
    rates = np.array([point.rate for point in points])
    j_t = np.array([point.j_t for point in points])
    zero = rates == 0.0
    if not np.any(zero):
        return float(j_t[int(np.argmin(rates))])

    best_start, best_length, start = 0, 0, None
    for index, flag in enumerate(np.append(zero, False)):
        if flag and start is None:
            start = index
        elif not flag and start is not None:
            if index - start > best_length:
                best_start, best_length = start, index - start
            start = None
    return float(0.5 * (j_t[best_start] + j_t[best_start + best_length - 1]))


def swap_fidelity_traces(p: QutritModelParams, times, controls: Sequence[str]) -> Dict[Tuple[str, str, str], np.ndarray]:
    """Точности всех процессов SWAP_PROCESSES для каждого управляющего состояния"""
    times = np.asarray(times, dtype=float)
    return {
        (str(control), psi_in, psi_out): swap_fidelity(control, psi_in, psi_out, times, p)
        for control in controls
        for psi_in, psi_out in SWAP_PROCESSES
    }
