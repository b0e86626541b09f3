"""
Сценарии кутритной модели: скорость свопа мишеней как функция J_T и
точности свопа во времени при J_T = 0 и J_T = J_T^opt.
"""

import logging
from typing import Dict, List

import numpy as np

from fidelity.gate_time import CONTROL_ORDER
from qutrits.leakage import jt_optimal
from qutrits.params import ALPHA_UNITS, QutritModelParams
from qutrits.swap import SWAP_PROCESSES, scan_times, swap_fidelity_traces, swap_rate_sweep, zero_rate_crossing
from utils.units import from_mhz, from_ns, rate_to_mhz, to_mhz, to_ns

from ..config import ConfigKey, ScenarioConfig, choice, parse_float, parse_int
from .base import scenario

logger = logging.getLogger('diamondsim.experiments')

CONTROLS = tuple(str(control) for control in CONTROL_ORDER)

ALPHA_UNIT_KEY = ConfigKey('alpha_unit', choice(*ALPHA_UNITS), 'angular', "как читать напечатанные α")
RESOLUTION_KEY = ConfigKey('resolution_ns', parse_float, 0.5, "шаг сетки времен, нс")


def qutrit_params(config: ScenarioConfig) -> QutritModelParams:
    return QutritModelParams.swap_scenario(alpha_unit=config['alpha_unit'])


@scenario(
    'qutrit_swap_rate',
    "Скорость свопа |01⟩ ↔ |10⟩ мишеней против J_T для четырех управляющих состояний",
    keys=(
        ConfigKey('j_t_min_mhz', parse_float, -6.0, "наименьшая J_T/2π, МГц"),
        ConfigKey('j_t_max_mhz', parse_float, 0.0, "наибольшая J_T/2π, МГц"),
        ConfigKey('points', parse_int, 121, "число точек по J_T"),
        ConfigKey('horizon_ns', parse_float, 2000.0, "длина сканирования, нс"),
        RESOLUTION_KEY,
        ConfigKey('threshold', parse_float, 0.9, "порог точности свопа"),
        ALPHA_UNIT_KEY,
    ),
    columns=(
        'control', 'j_t_mhz', 'rate_mhz', 'peak_time_ns', 'peak_fidelity',
        'j_t_opt_mhz', 'j_t_zero_mhz',
    ),
)
def run_qutrit_swap_rate(config: ScenarioConfig) -> List[Dict]:
    p = qutrit_params(config)
    j_t_opt = jt_optimal(p)
    j_t_values = [from_mhz(value) for value in np.linspace(config['j_t_min_mhz'], config['j_t_max_mhz'], config['points'])]
    points = swap_rate_sweep(
        CONTROLS, j_t_values, p,
        horizon=from_ns(config['horizon_ns']),
        threshold=config['threshold'],
        resolution=from_ns(config['resolution_ns']),
        workers=config.workers,
    )

    zeros = {
        control: to_mhz(zero_rate_crossing([point for point in points if point.control == control]))
        for control in CONTROLS
    }
    logger.info(
        f"J_T^opt/2π = {to_mhz(j_t_opt):.3f} МГц; минимумы скорости: "
        + ', '.join(f"{control} {value:.3f}" for control, value in zeros.items())
    )

    # Строки упорядочены по управляющему состоянию, затем по J_T
    rows = []
    for control in CONTROLS:
        for point in (point for point in points if point.control == control):
            rows.append({
                'control': control,
                'j_t_mhz': to_mhz(point.j_t),
                'rate_mhz': rate_to_mhz(point.rate),
                'peak_time_ns': None if point.peak_time is None else to_ns(point.peak_time),
                'peak_fidelity': point.peak_fidelity,
                'j_t_opt_mhz': to_mhz(j_t_opt),
                'j_t_zero_mhz': zeros[control],
            })
    return rows


@scenario(
    'qutrit_swap_fid',
    "Точности свопа мишеней во времени при J_T = 0 и J_T = J_T^opt",
    keys=(
        ConfigKey('horizon_ns', parse_float, 400.0, "длина окна, нс"),
        RESOLUTION_KEY,
        ALPHA_UNIT_KEY,
    ),
    columns=('crosstalk', 'j_t_mhz', 'control', 'psi_in', 'psi_out', 't_ns', 'fidelity'),
)
def run_qutrit_swap_fid(config: ScenarioConfig) -> List[Dict]:
    p = qutrit_params(config)
    times = scan_times(from_ns(config['horizon_ns']), from_ns(config['resolution_ns']))
    rows = []
    for crosstalk, j_t in (('zero', 0.0), ('optimal', jt_optimal(p))):
        traces = swap_fidelity_traces(p.replace(j_t=j_t), times, CONTROLS)
        for control in CONTROLS:
            for psi_in, psi_out in SWAP_PROCESSES:
                values = traces[(control, psi_in, psi_out)]
                rows.extend(
                    {
                        'crosstalk': crosstalk,
                        'j_t_mhz': to_mhz(j_t),
                        'control': control,
                        'psi_in': psi_in,
                        'psi_out': psi_out,
                        't_ns': to_ns(t),
                        'fidelity': float(value),
                    }
                    for t, value in zip(times, values)
                )
    return rows
