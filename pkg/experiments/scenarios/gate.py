"""
Сценарии четырехкубитного гейта: таблица наборов параметров, точности во
времени, свипы параметров, закон масштабирования неточности и симметрия
знака J_C.
"""

import logging
import math
from typing import Dict, List

import numpy as np

from core.exceptions import DiamondSimError
from fidelity.gate_time import FIDELITY_COLUMNS, GateFidelityResult, converged_channel, fidelity_trace, find_gate_time
from fidelity.symmetry import j_c_sign_symmetry
from qubits.dressed import dressed_control_analysis
from qubits.gates import gate_time
from qubits.params import QubitModelParams
from utils.parallel import map_points
from utils.performance import timed
from utils.units import from_ghz, from_mhz, rate_from_mhz, rate_to_mhz, to_ghz, to_mhz, to_ns

from ..config import ConfigKey, ScenarioConfig, choice, optional, parse_float, parse_int, parse_int_list
from .base import COARSE_POINTS_KEY, ENGINE_KEY, GAMMA_KEY, SET_KEY, WINDOW_KEY, scenario

logger = logging.getLogger('diamondsim.experiments')

MODEL_COLUMNS = ('j_c_mhz', 'j_mhz', 'delta_ghz', 'gamma_mhz')
GATE_COLUMNS = (
    't_g_predicted_ns', 't_g_simulated_ns', *FIDELITY_COLUMNS,
    'at_boundary', 'converged', 'refinements', 'error',
)

# Диапазоны свипа по умолчанию: J_C и J в МГц, Δ в ГГц
SWEEP_RANGES = {
    'j_c': (0.0, 40.0),
    'j': (40.0, 90.0),
    'delta': (1.0, 3.0),
}
SWEEP_UNITS = {'j_c': from_mhz, 'j': from_mhz, 'delta': from_ghz}

SETS_KEY = ConfigKey('sets', parse_int_list, [1, 2], "наборы параметров таблицы через запятую")


def model_columns(p: QubitModelParams) -> Dict[str, float]:
    return {
        'j_c_mhz': to_mhz(p.j_c),
        'j_mhz': to_mhz(p.j),
        'delta_ghz': to_ghz(p.delta),
        'gamma_mhz': rate_to_mhz(p.gamma),
    }


def gate_result_row(result: GateFidelityResult) -> Dict:
    return {
        't_g_predicted_ns': to_ns(result.t_g_predicted),
        't_g_simulated_ns': to_ns(result.t_g_simulated),
        **result.fidelities,
        'at_boundary': result.at_boundary,
        'converged': bool(result.diagnostics.get('converged', True)),
        'refinements': int(result.diagnostics.get('refinements', 0)),
        'error': None,
    }


def failed_gate_row(p: QubitModelParams, error: DiamondSimError) -> Dict:
    """Строка с диагностикой вместо значений, если моделирование не удалось"""
    logger.warning(f"Точка не посчитана ({model_columns(p)}): {error}")
    row = {name: math.nan for name in FIDELITY_COLUMNS}
    row.update(
        t_g_predicted_ns=to_ns(gate_time(p)),
        t_g_simulated_ns=math.nan,
        at_boundary=False,
        converged=False,
        refinements=0,
        error=type(error).__name__,
    )
    return row


def gate_point(p: QubitModelParams, window: float, points: int, engine: str) -> Dict:
    try:
        result = find_gate_time(p, window=window, points=points, engine=engine)
    except DiamondSimError as e:
        return failed_gate_row(p, e)
    return gate_result_row(result)


def _table_row(item) -> Dict:
    set_number, gamma, window, points, engine = item
    p = QubitModelParams.table1(set_number, gamma=gamma)
    return {'set': set_number, **model_columns(p), **gate_point(p, window, points, engine)}


@scenario(
    'table1',
    "Времена и точности гейта для наборов параметров",
    keys=(SETS_KEY, GAMMA_KEY, WINDOW_KEY, COARSE_POINTS_KEY, ENGINE_KEY),
    columns=('set', *MODEL_COLUMNS, *GATE_COLUMNS),
)
@timed
def run_table1(config: ScenarioConfig) -> List[Dict]:
    gamma = rate_from_mhz(config['gamma_mhz'])
    items = [
        (set_number, gamma, config['window'], config['coarse_points'], config['engine'])
        for set_number in config['sets']
    ]
    return map_points(_table_row, items, workers=config.workers)


def _time_trace_rows(item) -> List[Dict]:
    set_number, gamma, engine, panels = item
    p = QubitModelParams.table1(set_number, gamma=gamma)
    t_g = gate_time(p)
    rows = []
    for panel, window, points in panels:
        times = np.linspace(max(0.0, 1.0 - window) * t_g, (1.0 + window) * t_g, points)
        trace = fidelity_trace(converged_channel(p, times, engine=engine), p, t_g)
        for index, t in enumerate(trace.times):
            rows.append({
                'set': set_number,
                'panel': panel,
                't_ns': to_ns(t),
                't_g_predicted_ns': to_ns(t_g),
                **trace.row(index),
            })
    return rows


@scenario(
    'fid_vs_time',
    "Пять точностей как функции времени вокруг t_g",
    keys=(
        SETS_KEY,
        GAMMA_KEY,
        ENGINE_KEY,
        ConfigKey('window', parse_float, 1.0, "полуширина основного окна, доля t_g"),
        ConfigKey('points', parse_int, 201, "точек основного окна"),
        ConfigKey('zoom_window', parse_float, 0.05, "полуширина окна вставки, доля t_g"),
        ConfigKey('zoom_points', parse_int, 61, "точек окна вставки"),
    ),
    columns=('set', 'panel', 't_ns', 't_g_predicted_ns', *FIDELITY_COLUMNS),
)
def run_fid_vs_time(config: ScenarioConfig) -> List[Dict]:
    panels = (
        ('main', config['window'], config['points']),
        ('zoom', config['zoom_window'], config['zoom_points']),
    )
    gamma = rate_from_mhz(config['gamma_mhz'])
    items = [(set_number, gamma, config['engine'], panels) for set_number in config['sets']]
    return [row for rows in map_points(_time_trace_rows, items, workers=config.workers) for row in rows]


def _sweep_row(item) -> Dict:
    parameter, value, gamma, window, points, engine = item
    p = QubitModelParams.table1(1, gamma=gamma, **{parameter: SWEEP_UNITS[parameter](value)})
    return {'parameter': parameter, 'value': value, **model_columns(p), **gate_point(p, window, points, engine)}


@scenario(
    'param_sweep',
    "Свип J_C, J или Δ при остальных параметрах из набора 1",
    keys=(
        ConfigKey('parameter', choice(*SWEEP_RANGES), 'j', "свипуемый параметр"),
        ConfigKey('start', optional(parse_float), None, "начало свипа (МГц для J_C и J, ГГц для Δ)"),
        ConfigKey('stop', optional(parse_float), None, "конец свипа"),
        ConfigKey('points', parse_int, 11, "число точек свипа"),
        GAMMA_KEY,
        WINDOW_KEY,
        COARSE_POINTS_KEY,
        ENGINE_KEY,
    ),
    columns=('parameter', 'value', *MODEL_COLUMNS, *GATE_COLUMNS),
)
def run_param_sweep(config: ScenarioConfig) -> List[Dict]:
    parameter = config['parameter']
    start, stop = SWEEP_RANGES[parameter]
    start = start if config['start'] is None else config['start']
    stop = stop if config['stop'] is None else config['stop']
    gamma = rate_from_mhz(config['gamma_mhz'])
    items = [
        (parameter, float(value), gamma, config['window'], config['coarse_points'], config['engine'])
        for value in np.linspace(start, stop, config['points'])
    ]
    return map_points(_sweep_row, items, workers=config.workers)


def _scaling_row(item) -> Dict:
    delta, window, points, engine = item
    p = QubitModelParams.table1(1, gamma=0.0, delta=from_ghz(delta))
    row = gate_point(p, window, points, engine)
    scale = dressed_control_analysis(p).infidelity_scale
    infidelity_00 = 1.0 - row['f_00']
    infidelity_psi_plus = 1.0 - row['f_psi_plus']
    return {
        'delta_ghz': delta,
        't_g_predicted_ns': row['t_g_predicted_ns'],
        't_g_simulated_ns': row['t_g_simulated_ns'],
        'infidelity_00': infidelity_00,
        'infidelity_psi_plus': infidelity_psi_plus,
        'scaling': scale,
        'ratio_00': infidelity_00 / scale,
        'ratio_psi_plus_to_00': infidelity_psi_plus / infidelity_00 if infidelity_00 > 0 else math.nan,
        'at_boundary': row['at_boundary'],
        'error': row['error'],
    }


@scenario(
    'infidelity_scaling',
    "Неточность без декогеренции против π/(t_g Δ) при свипе Δ",
    keys=(
        ConfigKey('delta_min_ghz', parse_float, 1.0, "наименьшая расстройка Δ/2π, ГГц"),
        ConfigKey('delta_max_ghz', parse_float, 4.0, "наибольшая расстройка Δ/2π, ГГц"),
        ConfigKey('points', parse_int, 7, "число точек свипа"),
        WINDOW_KEY,
        COARSE_POINTS_KEY,
        ENGINE_KEY,
    ),
    columns=(
        'delta_ghz', 't_g_predicted_ns', 't_g_simulated_ns', 'infidelity_00', 'infidelity_psi_plus',
        'scaling', 'ratio_00', 'ratio_psi_plus_to_00', 'at_boundary', 'error',
    ),
)
def run_infidelity_scaling(config: ScenarioConfig) -> List[Dict]:
    deltas = np.geomspace(config['delta_min_ghz'], config['delta_max_ghz'], config['points'])
    items = [(float(delta), config['window'], config['coarse_points'], config['engine']) for delta in deltas]
    return map_points(_scaling_row, items, workers=config.workers)


@scenario(
    'j_c_sign_symmetry',
    "Точности в t_g при отражении знака J_C",
    keys=(
        SET_KEY,
        GAMMA_KEY,
        ConfigKey('j_t_mhz', parse_float, 0.0, "перекрестная связь J_T/2π, МГц"),
        ENGINE_KEY,
    ),
    columns=('variant', 'j_c_mhz', 'delta_ghz', 'j_t_mhz', *FIDELITY_COLUMNS, 'max_difference'),
)
def run_j_c_sign_symmetry(config: ScenarioConfig) -> List[Dict]:
    p = QubitModelParams.table1(
        config['set'], gamma=rate_from_mhz(config['gamma_mhz']), j_t=from_mhz(config['j_t_mhz'])
    )
    result = j_c_sign_symmetry(p, engine=config['engine'])
    variants = (
        ('reference', p, result.reference, 0.0),
        ('joint', p.replace(j_c=-p.j_c, delta=-p.delta, j_t=-p.j_t), result.joint, result.joint_difference),
        ('j_c_only', p.replace(j_c=-p.j_c), result.j_c_only, result.j_c_difference),
    )
    return [
        {
            'variant': name,
            'j_c_mhz': to_mhz(params.j_c),
            'delta_ghz': to_ghz(params.delta),
            'j_t_mhz': to_mhz(params.j_t),
            **fidelities,
            'max_difference': difference,
        }
        for name, params, fidelities, difference in variants
    ]
