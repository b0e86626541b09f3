"""
Явный метод Рунге-Кутты 4-го порядка с фиксированным шагом.

Шаг подгоняется под каждую пару соседних времен выборки: интервал делится на
целое число равных подшагов не длиннее max_step, поэтому состояния
возвращаются точно в заданные моменты.
"""

import math
from typing import Callable

import numpy as np

from .exceptions import InvalidTimeGridError

Derivative = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(derivative: Derivative, t: float, state: np.ndarray, h: float) -> np.ndarray:
    k1 = derivative(t, state)
    k2 = derivative(t + 0.5 * h, state + 0.5 * h * k1)
    k3 = derivative(t + 0.5 * h, state + 0.5 * h * k2)
    k4 = derivative(t + h, state + h * k3)
    return state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def substep_count(interval: float, max_step: float) -> int:
    return max(1, math.ceil(interval / max_step - 1e-9))


def check_time_grid(times) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise InvalidTimeGridError("ожидается непустой одномерный массив")
    if not np.all(np.isfinite(times)):
        raise InvalidTimeGridError("времена должны быть конечными")
    if times[0] < 0 or np.any(np.diff(times) < 0):
        raise InvalidTimeGridError("времена должны быть неотрицательными и неубывающими")
    return times


def rk4_sample(derivative: Derivative, state: np.ndarray, times, max_step: float,
               start: float = 0.0) -> np.ndarray:
    """
    Проинтегрировать dy/dt = derivative(t, y) от start и вернуть y в моменты times.

    Args:
        derivative: правая часть, принимает (t, y)
        state: начальное значение в момент start
        times: неубывающие моменты выборки, times[0] >= start
        max_step: максимальная длина подшага
        start: начальный момент

    Returns:
        массив формы (len(times),) + state.shape
    """
    times = check_time_grid(times)
    if max_step <= 0:
        raise InvalidTimeGridError(f"шаг интегрирования должен быть положительным, получено {max_step}")
    if times[0] < start:
        raise InvalidTimeGridError("первый момент выборки раньше начала интегрирования")

    samples = np.empty((times.size,) + state.shape, dtype=complex)
    t = start
    for index, target in enumerate(times):
        interval = target - t
        if interval > 0:
            n = substep_count(interval, max_step)
            h = interval / n
            for step in range(n):
                state = rk4_step(derivative, t + step * h, state, h)
        t = target
        samples[index] = state
    return samples
