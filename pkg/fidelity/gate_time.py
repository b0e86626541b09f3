"""
Точность как функция времени и поиск времени гейта.

Целевая операция фиксирована: идеальный гейт в момент t_g = π|Δ|/(4J²).
Смоделированное время гейта это максимум полной точности F(t) в окне
вокруг t_g.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from django.conf import settings

from dynamics.exceptions import InvalidTimeGridError
from dynamics.integrators import check_time_grid
from dynamics.lindblad import ChannelSamples, Engine, check_invariants, default_step, sampled_channel
from qubits.gates import ControlState, gate_time, ideal_diamond_gate, ideal_target_gate
from qubits.hamiltonians import DIM
from qubits.params import QubitModelParams
from utils.performance import timed

from .exceptions import SearchWindowError
from .metrics import average_gate_fidelity, subspace_fidelity

logger = logging.getLogger('diamondsim.fidelity')

CONTROL_ORDER = (
    ControlState.ZERO_ZERO,
    ControlState.ONE_ONE,
    ControlState.PSI_PLUS,
    ControlState.PSI_MINUS,
)
FIDELITY_COLUMNS = ('f_total', 'f_00', 'f_11', 'f_psi_plus', 'f_psi_minus')

DEFAULT_WINDOW = 0.15
MIN_COARSE_POINTS = 60
RANGE_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class FidelityTrace:
    """
    Пять точностей на сетке времен.

    f_per_control: массив (len(times), 4) в порядке CONTROL_ORDER
    """

    times: np.ndarray
    f_total: np.ndarray
    f_per_control: np.ndarray

    def __len__(self):
        return self.times.size

    def row(self, index: int) -> Dict[str, float]:
        values = [self.f_total[index], *self.f_per_control[index]]
        return {name: float(value) for name, value in zip(FIDELITY_COLUMNS, values)}

    def max_jump(self) -> float:
        if self.times.size < 2:
            return 0.0
        stacked = np.column_stack([self.f_total, self.f_per_control])
        return float(np.max(np.abs(np.diff(stacked, axis=0))))


@dataclass(frozen=True, eq=False)
class GateFidelityResult:
    t_g_simulated: float
    t_g_predicted: float
    fidelities: Dict[str, float]
    at_boundary: bool
    trace: FidelityTrace
    diagnostics: Dict

    @property
    def f_total(self) -> float:
        return self.fidelities['f_total']


def fidelity_trace(samples: ChannelSamples, p: QubitModelParams,
                   target_time: Optional[float] = None) -> FidelityTrace:
    """
    Точности F, F_00, F_11, F_Ψ⁺, F_Ψ⁻ для каждого момента выборки.

    Args:
        samples: канал в моменты samples.times
        p: параметры модели
        target_time: время целевой операции, по умолчанию t_g
    """
    target_time = gate_time(p) if target_time is None else target_time
    total_target = ideal_diamond_gate(target_time, p)
    control_targets = [ideal_target_gate(control, target_time, p) for control in CONTROL_ORDER]

    f_total = np.empty(len(samples))
    f_per_control = np.empty((len(samples), len(CONTROL_ORDER)))
    for index in range(len(samples)):
        channel = samples.channel(index)
        f_total[index] = average_gate_fidelity(channel, total_target, DIM)
        for column, (control, target) in enumerate(zip(CONTROL_ORDER, control_targets)):
            f_per_control[index, column] = subspace_fidelity(channel, control, target)

    stacked = np.column_stack([f_total, f_per_control])
    if np.any(stacked < -RANGE_TOLERANCE) or np.any(stacked > 1 + RANGE_TOLERANCE):
        logger.warning(
            f"Точность вне [0, 1]: min {np.min(stacked):.10f}, max {np.max(stacked):.10f}"
        )
    return FidelityTrace(times=samples.times, f_total=f_total, f_per_control=f_per_control)


@timed
def converged_channel(p: QubitModelParams, times, engine: str = Engine.ROTATING) -> ChannelSamples:
    """
    Канал с шагом RK4, уточненным по точности в момент t_g.

    Шаг начинается с default_step(p) и делится пополам, пока полная
    точность в t_g не изменится меньше чем на convergence_tolerance, но не
    более max_refinements раз. Диагностика результата содержит шаг, число
    уточнений, последнее изменение и флаг converged.
    """
    times = check_time_grid(times)
    engine = Engine(engine)
    if engine == Engine.FLOQUET:
        channel = sampled_channel(p, times, engine=engine)
        channel.diagnostics.update(refinements=0, converged=True, change=0.0)
        return channel

    solver = settings.DIAMONDSIM_SOLVER
    tolerance = solver['convergence_tolerance']
    t_g = gate_time(p)
    grid = np.union1d(times, [t_g])
    requested = np.searchsorted(grid, times)
    gate_index = int(np.searchsorted(grid, t_g))
    target = ideal_diamond_gate(t_g, p)

    step = default_step(p)
    channel = sampled_channel(p, grid, max_step=step, enforce=False)
    fidelity = average_gate_fidelity(channel.channel(gate_index), target, DIM)

    change = math.inf
    refinements = 0
    while refinements < solver['max_refinements'] and not (change < tolerance and channel.diagnostics['valid']):
        step /= 2.0
        refinements += 1
        finer = sampled_channel(p, grid, max_step=step, enforce=False)
        finer_fidelity = average_gate_fidelity(finer.channel(gate_index), target, DIM)
        change = abs(finer_fidelity - fidelity)
        channel, fidelity = finer, finer_fidelity
        logger.debug(f"Уточнение {refinements}: шаг {step:.3e} с, ΔF = {change:.2e}")

    check_invariants(channel.diagnostics)
    converged = change < tolerance
    if not converged:
        logger.warning(
            f"Точность в t_g не сошлась за {refinements} уточнений: ΔF = {change:.2e}"
        )

    result = channel.select(requested)
    result.diagnostics.update(
        refinements=refinements,
        converged=converged,
        change=change,
        gate_time_fidelity=fidelity,
    )
    return result


def _quadratic_peak(times: np.ndarray, values: np.ndarray) -> Optional[float]:
    """Вершина параболы через максимум и двух его соседей или None, если максимума нет"""
    best = int(np.argmax(values))
    if best == 0 or best == len(values) - 1:
        return None
    window = slice(best - 1, best + 2)
    origin = times[best]
    scale = np.ptp(times[window])
    if scale == 0:
        return None
    x = (times[window] - origin) / scale
    a, b, _ = np.polyfit(x, values[window], 2)
    if a >= 0:
        return None
    vertex = -b / (2.0 * a)
    vertex = min(max(vertex, x.min()), x.max())
    return float(origin + vertex * scale)


@timed
def find_gate_time(p: QubitModelParams, window: float = DEFAULT_WINDOW, points: int = 61,
                   engine: str = Engine.ROTATING, strict: bool = False) -> GateFidelityResult:
    """
    Время гейта как максимум полной точности.

    Грубый проход по points ≥ 60 точкам окна t_g(1 ± window), затем
    параболическое уточнение по максимуму и его соседям и пересчет пяти
    точностей в найденной вершине.

    Args:
        p: параметры модели
        window: относительная полуширина окна
        points: число точек грубой сетки
        engine: Engine.ROTATING или Engine.FLOQUET
        strict: вызывать SearchWindowError, если максимум на границе окна

    Returns:
        GateFidelityResult; при максимуме на границе at_boundary=True и
        время равно граничной точке

    Raises:
        SearchWindowError: при strict=True и максимуме на границе окна
    """
    if points < MIN_COARSE_POINTS:
        raise InvalidTimeGridError(message=f"Грубая сетка должна содержать не меньше {MIN_COARSE_POINTS} точек")
    if not 0 < window < 1:
        raise InvalidTimeGridError(message=f"Полуширина окна должна быть в (0, 1), получено {window}")

    predicted = gate_time(p)
    grid = np.linspace((1.0 - window) * predicted, (1.0 + window) * predicted, int(points))
    channel = converged_channel(p, grid, engine=engine)
    trace = fidelity_trace(channel, p, predicted)

    best = int(np.argmax(trace.f_total))
    at_boundary = best in (0, grid.size - 1)
    diagnostics = dict(channel.diagnostics)

    if at_boundary:
        if strict:
            raise SearchWindowError(float(grid[best]), (float(grid[0]), float(grid[-1])))
        logger.warning(f"Максимум точности на границе окна: t = {grid[best]:.4e} с")
        return GateFidelityResult(
            t_g_simulated=float(grid[best]),
            t_g_predicted=predicted,
            fidelities=trace.row(best),
            at_boundary=True,
            trace=trace,
            diagnostics=diagnostics,
        )

    peak = _quadratic_peak(grid, trace.f_total)
    if peak is None:
        peak = float(grid[best])

    refined = sampled_channel(p, [peak], engine=engine, max_step=diagnostics.get('step') or None, enforce=False)
    refined_trace = fidelity_trace(refined, p, predicted)
    fidelities = refined_trace.row(0)
    if not refined.diagnostics['valid'] or fidelities['f_total'] < trace.f_total[best]:
        peak = float(grid[best])
        fidelities = trace.row(best)

    return GateFidelityResult(
        t_g_simulated=peak,
        t_g_predicted=predicted,
        fidelities=fidelities,
        at_boundary=False,
        trace=trace,
        diagnostics=diagnostics,
    )
