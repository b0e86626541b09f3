"""
Прямое отображение схема -> кутритная модель по строкам свипа.

Ключи конфигурации совпадают с ключами файла параметров схемы, поэтому
такой файл можно передать в --config напрямую. Один из ключей можно
свипать (sweep, start, stop, points). При заданных target_j_mhz и
target_j_c_mhz сначала подбираются C и C_C, затем считается прямое
отображение.
"""

import logging
import math
from typing import Dict, List

import numpy as np

from circuits.capacitance import derived_energies
from circuits.design import design_couplings
from circuits.params import FILE_KEYS, CircuitParams
from circuits.transmon import model_from_circuit, transmon_spectrum
from core.exceptions import DiamondSimError
from utils.units import from_mhz, to_ghz, to_mhz

from ..config import ConfigKey, ScenarioConfig, choice, optional, parse_float, parse_int
from .base import scenario

logger = logging.getLogger('diamondsim.experiments')

CIRCUIT_DEFAULTS = {
    'c_ff': 5.0,
    'c_prime_ff': 2.0,
    'c_t_ff': 80.0,
    'c_c_ff': 1000.0,
    'e_jt_ghz': 44.0,
    'e_jc_ghz': 317.0,
}

OUTPUT_COLUMNS = (
    'valid', 'error', 'weakly_coupled',
    'omega_c_ghz', 'omega_t_ghz', 'alpha_c_mhz', 'alpha_t_mhz',
    'e_c_c_mhz', 'e_c_t_mhz', 'ratio_c', 'ratio_t',
    'j_mhz', 'j_c_mhz', 'j_t_mhz',
    'coupling_tt_over_ct', 'c_over_c_t', 'alpha_identity_mhz', 'inversion_deviation',
)


def circuit_row(cp: CircuitParams) -> Dict:
    """Параметры модели, спектры трансмонов и проверки режима одной схемы"""
    energies = derived_energies(cp)
    control = transmon_spectrum(energies.e_c_c, cp.e_j_c)
    target = transmon_spectrum(energies.e_c_t, cp.e_j_t)
    model = model_from_circuit(cp)
    return {
        'valid': True,
        'error': None,
        'weakly_coupled': cp.is_weakly_coupled,
        'omega_c_ghz': to_ghz(model.omega_c),
        'omega_t_ghz': to_ghz(model.omega_t),
        'alpha_c_mhz': to_mhz(model.alpha_c),
        'alpha_t_mhz': to_mhz(model.alpha_t),
        'e_c_c_mhz': to_mhz(energies.e_c_c),
        'e_c_t_mhz': to_mhz(energies.e_c_t),
        'ratio_c': control.ratio,
        'ratio_t': target.ratio,
        'j_mhz': to_mhz(model.j),
        'j_c_mhz': to_mhz(model.j_c),
        'j_t_mhz': to_mhz(model.j_t),
        'coupling_tt_over_ct': energies.coupling_tt / energies.coupling_ct,
        'c_over_c_t': cp.c / cp.c_t,
        'alpha_identity_mhz': max(
            abs(to_mhz(control.alpha + energies.e_c_c)), abs(to_mhz(target.alpha + energies.e_c_t))
        ),
        'inversion_deviation': energies.inversion_deviation,
    }


def invalid_row(error: DiamondSimError) -> Dict:
    row = {name: math.nan for name in OUTPUT_COLUMNS}
    row.update(valid=False, error=f"{type(error).__name__}: {error}", weakly_coupled=None)
    return row


def map_circuit(values: Dict[str, float], target_j_mhz=None, target_j_c_mhz=None) -> Dict:
    """Строка результата; ошибка схемы не прерывает свип, а попадает в строку"""
    try:
        cp = CircuitParams.from_mapping(values)
        if target_j_mhz is not None and target_j_c_mhz is not None:
            cp = design_couplings(cp, from_mhz(target_j_mhz), from_mhz(target_j_c_mhz))
        row = circuit_row(cp)
    except DiamondSimError as e:
        logger.warning(f"Схема {values} отклонена: {e}")
        return {**values, **invalid_row(e)}
    return {**cp.to_mapping(), **row}


@scenario(
    'circuit_map',
    "Параметры кутритной модели и спектры трансмонов по параметрам схемы",
    keys=(
        *(ConfigKey(name, parse_float, default, f"{name} схемы") for name, default in CIRCUIT_DEFAULTS.items()),
        ConfigKey('sweep', optional(choice(*FILE_KEYS)), None, "свипуемый ключ схемы"),
        ConfigKey('start', optional(parse_float), None, "начало свипа"),
        ConfigKey('stop', optional(parse_float), None, "конец свипа"),
        ConfigKey('points', parse_int, 11, "число точек свипа"),
        ConfigKey('target_j_mhz', optional(parse_float), None, "целевая |J|/2π для подбора, МГц"),
        ConfigKey('target_j_c_mhz', optional(parse_float), None, "целевая |J_C|/2π для подбора, МГц"),
    ),
    columns=('point', *FILE_KEYS, *OUTPUT_COLUMNS),
)
def run_circuit_map(config: ScenarioConfig) -> List[Dict]:
    base = {name: config[name] for name in CIRCUIT_DEFAULTS}
    sweep = config['sweep']
    if sweep is None:
        grid = [base]
    else:
        start = base[sweep] if config['start'] is None else config['start']
        stop = base[sweep] if config['stop'] is None else config['stop']
        grid = [{**base, sweep: float(value)} for value in np.linspace(start, stop, config['points'])]

    rows = [
        {'point': index, **map_circuit(values, config['target_j_mhz'], config['target_j_c_mhz'])}
        for index, values in enumerate(grid)
    ]
    invalid = sum(1 for row in rows if not row['valid'])
    if invalid:
        logger.warning(f"circuit_map: {invalid} из {len(rows)} схем вне допустимого режима")
    return rows
