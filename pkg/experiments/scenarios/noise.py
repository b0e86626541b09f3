"""
Устойчивость гейта к шумам: перекрестная связь мишеней, случайные
отклонения связей, ошибка приготовления управляющего состояния и
декогеренция.

Все точки считаются в моменте t_g, найденном для набора без шума; целевые
операции тоже строятся по параметрам без шума. Случайные выборки берутся из
подпотока point_generator(seed, индекс точки, номер повторения).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from django.utils.functional import cached_property

from dynamics.lindblad import ChannelSamples, Engine, refined_channel
from fidelity.gate_time import CONTROL_ORDER, FIDELITY_COLUMNS, fidelity_trace, find_gate_time
from fidelity.metrics import average_gate_fidelity, subspace_fidelity
from operators.algebra import dagger, matrix_exponential, tensor_product
from qubits.gates import CONTROL_BASIS, gate_time, ideal_diamond_gate, ideal_target_gate
from qubits.hamiltonians import DIM
from qubits.params import QubitModelParams
from utils.parallel import map_points
from utils.rng import point_generator
from utils.units import from_mhz, rate_from_mhz, to_mhz, to_ns

from ..config import ConfigKey, ScenarioConfig, parse_float, parse_int
from .base import COARSE_POINTS_KEY, ENGINE_KEY, GAMMA_KEY, SET_KEY, WINDOW_KEY, scenario

logger = logging.getLogger('diamondsim.experiments')

POINTS_KEY = ConfigKey('points', parse_int, 40, "число точек свипа")
REPETITIONS_KEY = ConfigKey('repetitions', parse_int, 20, "случайных повторений на точку")
BASELINE_KEYS = (SET_KEY, GAMMA_KEY, WINDOW_KEY, COARSE_POINTS_KEY)


@dataclass(frozen=True, eq=False)
class NoiseBaseline:
    """
    Точка отсчета для шумовых свипов.

    Attributes:
        p: параметры набора без шума
        t_g: время гейта, найденное моделированием, секунды
        step: шаг RK4, с которым сошелся поиск t_g (None для H_F)
        engine: движок динамики
    """

    p: QubitModelParams
    t_g: float
    step: Optional[float]
    engine: str

    @cached_property
    def targets(self):
        predicted = gate_time(self.p)
        return (
            ideal_diamond_gate(predicted, self.p),
            [ideal_target_gate(control, predicted, self.p) for control in CONTROL_ORDER],
        )

    def channel(self, p: QubitModelParams) -> ChannelSamples:
        return refined_channel(p, [self.t_g], engine=self.engine, max_step=self.step)

    def fidelities(self, p: QubitModelParams) -> Dict[str, float]:
        """Пять точностей канала с параметрами p относительно операций без шума"""
        return fidelity_trace(self.channel(p), self.p, gate_time(self.p)).row(0)


def noise_baseline(config: ScenarioConfig, engine: Optional[str] = None, **overrides) -> NoiseBaseline:
    """Найти t_g набора config['set'] без шума"""
    engine = engine or config['engine']
    p = QubitModelParams.table1(config['set'], gamma=rate_from_mhz(config['gamma_mhz']), **overrides)
    result = find_gate_time(p, window=config['window'], points=config['coarse_points'], engine=engine)
    step = result.diagnostics.get('step') or None
    logger.info(
        f"Опорная точка набора {config['set']}: t_g = {to_ns(result.t_g_simulated):.3f} нс, "
        f"F = {result.f_total:.5f}"
    )
    return NoiseBaseline(p=p, t_g=result.t_g_simulated, step=step, engine=engine)


def baseline_columns(baseline: NoiseBaseline) -> Dict[str, float]:
    return {'t_g_simulated_ns': to_ns(baseline.t_g)}


def _crosstalk_row(item) -> Dict:
    baseline, index, j_t_mhz = item
    p = baseline.p.replace(j_t=from_mhz(j_t_mhz))
    return {
        'point': index,
        'j_t_mhz': j_t_mhz,
        **baseline_columns(baseline),
        **baseline.fidelities(p),
    }


@scenario(
    'noise_crosstalk',
    "Точности в t_g при перекрестной связи мишеней J_T",
    keys=(
        *BASELINE_KEYS,
        ENGINE_KEY,
        ConfigKey('j_t_min_mhz', parse_float, 0.0, "наименьшая J_T/2π, МГц"),
        ConfigKey('j_t_max_mhz', parse_float, 5.0, "наибольшая J_T/2π, МГц"),
        POINTS_KEY,
    ),
    columns=('point', 'j_t_mhz', 't_g_simulated_ns', *FIDELITY_COLUMNS),
)
def run_noise_crosstalk(config: ScenarioConfig) -> List[Dict]:
    baseline = noise_baseline(config)
    values = np.linspace(config['j_t_min_mhz'], config['j_t_max_mhz'], config['points'])
    items = [(baseline, index, float(value)) for index, value in enumerate(values)]
    return map_points(_crosstalk_row, items, workers=config.workers)


def coupling_deviations(cap: float, generator: np.random.Generator) -> np.ndarray:
    """Четыре независимых отклонения связей из U[−cap, cap]"""
    return generator.uniform(-cap, cap, size=4)


def _couplings_rows(item) -> List[Dict]:
    baseline, seed, index, cap_fraction, repetitions = item
    cap = cap_fraction * baseline.p.j
    rows = []
    for repetition in range(repetitions):
        deviations = coupling_deviations(cap, point_generator(seed, index, stream=repetition))
        spread = float(np.max(np.abs(deviations)))
        p = baseline.p.replace(j_deviations=tuple(float(d) for d in deviations))
        rows.append({
            'point': index,
            'repetition': repetition,
            'cap_fraction': cap_fraction,
            'delta_j_mhz': to_mhz(spread),
            'delta_j_over_j': spread / abs(baseline.p.j),
            **baseline_columns(baseline),
            **baseline.fidelities(p),
        })
    return rows


@scenario(
    'noise_couplings',
    "Точности в t_g при случайных отклонениях четырех связей J",
    keys=(
        *BASELINE_KEYS,
        ConfigKey('cap_max', parse_float, 0.1, "наибольшая граница отклонений, доля J"),
        POINTS_KEY,
        REPETITIONS_KEY,
    ),
    columns=(
        'point', 'repetition', 'cap_fraction', 'delta_j_mhz', 'delta_j_over_j',
        't_g_simulated_ns', *FIDELITY_COLUMNS,
    ),
)
def run_noise_couplings(config: ScenarioConfig) -> List[Dict]:
    # Неравные связи задаются только в гамильтониане H(t)
    baseline = noise_baseline(config, engine=Engine.ROTATING)
    caps = np.linspace(0.0, config['cap_max'], config['points'])
    items = [
        (baseline, config.seed, index, float(cap), config['repetitions'])
        for index, cap in enumerate(caps)
    ]
    return [row for rows in map_points(_couplings_rows, items, workers=config.workers) for row in rows]


def random_hermitian(generator: np.random.Generator, dim: int = 4) -> np.ndarray:
    """(A + A†)/2 для A со стандартными комплексными гауссовыми элементами"""
    a = generator.normal(size=(dim, dim)) + 1j * generator.normal(size=(dim, dim))
    return (a + dagger(a)) / 2.0


def preparation_error(v: np.ndarray) -> float:
    """1 − min_φ |⟨φ|V|φ⟩|² по базису управляющей пары"""
    return float(1.0 - min(abs(np.vdot(phi, v @ phi)) ** 2 for phi in CONTROL_BASIS.values()))


def prepared_channel(channel, v: np.ndarray):
    """Канал, которому предшествует ошибка V на управляющей паре"""
    w = tensor_product(v, np.eye(4, dtype=complex))
    w_dagger = dagger(w)

    def apply(operators: np.ndarray) -> np.ndarray:
        return channel(w @ np.asarray(operators, dtype=complex) @ w_dagger)

    return apply


def _control_prep_rows(item) -> List[Dict]:
    baseline, channel, seed, index, epsilon, repetitions = item
    total_target, control_targets = baseline.targets
    rows = []
    for repetition in range(repetitions):
        m = random_hermitian(point_generator(seed, index, stream=repetition))
        v = matrix_exponential(1j * epsilon * m)
        prepared = prepared_channel(channel.channel(0), v)
        fidelities = [average_gate_fidelity(prepared, total_target, DIM)]
        fidelities += [
            subspace_fidelity(prepared, control, target)
            for control, target in zip(CONTROL_ORDER, control_targets)
        ]
        rows.append({
            'point': index,
            'repetition': repetition,
            'epsilon': epsilon,
            'control_infidelity': preparation_error(v),
            **baseline_columns(baseline),
            **dict(zip(FIDELITY_COLUMNS, fidelities)),
        })
    return rows


@scenario(
    'noise_control_prep',
    "Точности в t_g при ошибке приготовления управляющего состояния V = exp(iεM)",
    keys=(
        *BASELINE_KEYS,
        ENGINE_KEY,
        ConfigKey('epsilon_min', parse_float, 1e-3, "наименьшая амплитуда ε"),
        ConfigKey('epsilon_max', parse_float, 0.3, "наибольшая амплитуда ε"),
        POINTS_KEY,
        REPETITIONS_KEY,
    ),
    columns=(
        'point', 'repetition', 'epsilon', 'control_infidelity',
        't_g_simulated_ns', *FIDELITY_COLUMNS,
    ),
)
def run_noise_control_prep(config: ScenarioConfig) -> List[Dict]:
    baseline = noise_baseline(config)
    channel = baseline.channel(baseline.p)
    epsilons = np.geomspace(config['epsilon_min'], config['epsilon_max'], config['points'])
    items = [
        (baseline, channel, config.seed, index, float(epsilon), config['repetitions'])
        for index, epsilon in enumerate(epsilons)
    ]
    return [row for rows in map_points(_control_prep_rows, items, workers=config.workers) for row in rows]


def _decoherence_row(item) -> Dict:
    baseline, index, gamma_mhz = item
    p = baseline.p.replace(gamma=rate_from_mhz(gamma_mhz))
    return {
        'point': index,
        'gamma_mhz': gamma_mhz,
        **baseline_columns(baseline),
        **baseline.fidelities(p),
    }


@scenario(
    'noise_decoherence',
    "Точности в t_g как функция скорости декогеренции γ",
    keys=(
        SET_KEY,
        WINDOW_KEY,
        COARSE_POINTS_KEY,
        ENGINE_KEY,
        ConfigKey('gamma_min_mhz', parse_float, 0.0, "наименьшая γ, МГц"),
        ConfigKey('gamma_max_mhz', parse_float, 0.1, "наибольшая γ, МГц"),
        POINTS_KEY,
    ),
    columns=('point', 'gamma_mhz', 't_g_simulated_ns', *FIDELITY_COLUMNS),
)
def run_noise_decoherence(config: ScenarioConfig) -> List[Dict]:
    # t_g ищется без декогеренции: γ не сдвигает максимум
    p = QubitModelParams.table1(config['set'], gamma=0.0)
    result = find_gate_time(p, window=config['window'], points=config['coarse_points'], engine=config['engine'])
    baseline = NoiseBaseline(
        p=p, t_g=result.t_g_simulated, step=result.diagnostics.get('step') or None, engine=config['engine']
    )
    values = np.linspace(config['gamma_min_mhz'], config['gamma_max_mhz'], config['points'])
    items = [(baseline, index, float(value)) for index, value in enumerate(values)]
    return map_points(_decoherence_row, items, workers=config.workers)
