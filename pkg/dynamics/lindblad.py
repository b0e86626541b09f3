"""
Эволюция матрицы плотности четырех кубитов по уравнению Линдблада.

    dρ/dt = -i[H(t), ρ] + Σ_k (C_k ρ C_k† - ½{C_k†C_k, ρ})

H(t) берется во вращающейся системе отсчета (build_rotating_h), C_k это
восемь операторов √γσ_z^i и √γσ_-^i. Интегрирование выполняется явным RK4 с
шагом, привязанным к периоду 2π/|Δ|. Для стационарного H_F используется
точная экспонента супероператора.

Канал целиком восстанавливается по образам 256 строк Паули, которые
распространяются одной пачкой: ε(X) = Σ_k tr(P_k X)/d · ε(P_k). При γ = 0
вместо этого интегрируется унитарный пропагатор.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings
from django.db import models

from operators.algebra import (
    SIGMA_MINUS,
    SIGMA_X,
    SIGMA_Z,
    dagger,
    eigen_propagator,
    embed,
    hermitian_eigendecomposition,
    matrix_exponential,
    pauli_basis,
    projector,
    unitarity_residual,
)
from qubits.hamiltonians import DIM, build_floquet_h, rotating_components
from qubits.params import QubitModelParams
from utils.performance import timed

from .exceptions import EvolutionInvariantError, InvalidTimeGridError, NegativeRateError
from .integrators import check_time_grid, rk4_sample

logger = logging.getLogger('diamondsim.dynamics')

TRACE_TOLERANCE = 1e-7
HERMITIAN_TOLERANCE = 1e-10
POSITIVITY_TOLERANCE = 1e-8
INITIAL_TRACE_TOLERANCE = 1e-8
PURITY_TOLERANCE = 1e-8


class Engine(models.TextChoices):
    """Гамильтониан, под которым строится эволюция"""

    ROTATING = 'rotating', 'H(t) во вращающейся системе'
    FLOQUET = 'floquet', 'эффективный H_F'


class HarnessKind(models.TextChoices):
    RELAXATION = 'relaxation', 'релаксация √γσ₋'
    DEPHASING = 'dephasing', 'дефазировка √γσ_z'


@dataclass(frozen=True, eq=False)
class CollapseOperatorSet:
    """Операторы коллапса с метками каналов"""

    operators: Tuple[np.ndarray, ...]
    labels: Tuple[str, ...]
    gamma: float

    def __len__(self):
        return len(self.operators)

    @property
    def is_zero(self) -> bool:
        return not any(np.any(operator) for operator in self.operators)


@dataclass(frozen=True, eq=False)
class EvolutionResult:
    """
    Выборка ρ(t) на равномерной сетке.

    Attributes:
        times: моменты выборки, секунды
        states: массив (len(times), d, d)
        diagnostics: шаг, дрейф следа, невязка эрмитовости, минимальное
            собственное значение, число уточнений шага
    """

    times: np.ndarray
    states: np.ndarray
    diagnostics: Dict = field(default_factory=dict)

    def purity(self) -> np.ndarray:
        return np.real(np.einsum('nab,nba->n', self.states, self.states))

    def overlap_with(self, state) -> np.ndarray:
        """⟨ψ|ρ(t)|ψ⟩ для чистого состояния ψ"""
        state = np.asarray(state, dtype=complex)
        return np.real(np.einsum('a,nab,b->n', state.conj(), self.states, state))


@dataclass(frozen=True, eq=False)
class ChannelSamples:
    """
    Квантовый канал ε_t в моменты times.

    Хранится либо пропагатор U(t) (unitaries), либо образы базиса Паули
    ε_t(P_k) (pauli_outputs формы (len(times), d², d, d)).
    """

    times: np.ndarray
    dim: int
    unitaries: Optional[np.ndarray] = None
    pauli_outputs: Optional[np.ndarray] = None
    diagnostics: Dict = field(default_factory=dict)

    def __len__(self):
        return self.times.size

    def apply(self, index: int, operators) -> np.ndarray:
        """
        Применить ε_{times[index]} к матрице или пачке матриц формы (..., d, d).
        """
        operators = np.asarray(operators, dtype=complex)
        if self.unitaries is not None:
            u = self.unitaries[index]
            return u @ operators @ dagger(u)

        basis = _pauli_basis(self.dim)
        coefficients = np.einsum('kab,...ba->...k', basis, operators) / self.dim
        return np.einsum('...k,kab->...ab', coefficients, self.pauli_outputs[index])

    def channel(self, index: int) -> Callable[[np.ndarray], np.ndarray]:
        return partial(self.apply, index)

    def select(self, indices: Sequence[int]) -> 'ChannelSamples':
        indices = np.asarray(indices, dtype=int)
        return ChannelSamples(
            times=self.times[indices],
            dim=self.dim,
            unitaries=None if self.unitaries is None else self.unitaries[indices],
            pauli_outputs=None if self.pauli_outputs is None else self.pauli_outputs[indices],
            diagnostics=dict(self.diagnostics),
        )


@dataclass(frozen=True, eq=False)
class DecayHarnessResult:
    kind: str
    gamma: float
    times: np.ndarray
    simulated: np.ndarray
    analytic: np.ndarray

    @property
    def max_error(self) -> float:
        return float(np.max(np.abs(self.simulated - self.analytic)))


@lru_cache(maxsize=4)
def _pauli_basis(dim: int) -> np.ndarray:
    basis = pauli_basis(int(round(math.log2(dim))))
    basis.setflags(write=False)
    return basis


def _left(a: np.ndarray, batch: np.ndarray) -> np.ndarray:
    """a @ ρ_m для всей пачки одним умножением"""
    n, d, _ = batch.shape
    stacked = batch.transpose(1, 0, 2).reshape(d, n * d)
    return (a @ stacked).reshape(d, n, d).transpose(1, 0, 2)


def _right(batch: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, d, _ = batch.shape
    return (batch.reshape(n * d, d) @ b).reshape(n, d, d)


class LindbladGenerator:
    """
    Правая часть уравнения Линдблада для пачки матриц (n, d, d).

    -i[H, ρ] - ½{ΣC†C, ρ} вычисляется как Aρ + ρA† с A = -iH - ½ΣC†C.
    Скачки C ρ C† диагональных операторов сводятся к поэлементной маске,
    операторов с не более чем одним ненулевым элементом в строке и столбце
    к перестановке индексов; остальные умножаются явно.
    """

    def __init__(self, hamiltonian: Callable[[float], np.ndarray], collapse_ops: Sequence[np.ndarray], dim: int):
        self.hamiltonian = hamiltonian
        self.decay = np.zeros((dim, dim), dtype=complex)
        self.mask = np.zeros((dim, dim), dtype=complex)
        self.monomial = []
        self.dense = []

        for operator in collapse_ops:
            operator = np.asarray(operator, dtype=complex)
            if not np.any(operator):
                continue
            self.decay -= 0.5 * dagger(operator) @ operator

            off_diagonal = operator - np.diag(np.diag(operator))
            if not np.any(off_diagonal):
                diagonal = np.diag(operator)
                self.mask += np.outer(diagonal, diagonal.conj())
                continue

            rows, cols = np.nonzero(operator)
            if len(set(rows)) == rows.size and len(set(cols)) == cols.size:
                values = operator[rows, cols]
                weights = np.outer(values, values.conj())
                self.monomial.append((rows[:, None], rows[None, :], cols[:, None], cols[None, :], weights))
            else:
                self.dense.append(operator)

        self.has_mask = bool(np.any(self.mask))

    def __call__(self, t: float, batch: np.ndarray) -> np.ndarray:
        a = -1j * self.hamiltonian(t) + self.decay
        result = _left(a, batch) + _right(batch, dagger(a))
        if self.has_mask:
            result += self.mask * batch
        for rows, rows_t, cols, cols_t, weights in self.monomial:
            result[:, rows, rows_t] += weights * batch[:, cols, cols_t]
        for operator in self.dense:
            result += _right(_left(operator, batch), dagger(operator))
        return result


def build_collapse_ops(p: QubitModelParams) -> CollapseOperatorSet:
    """
    Восемь операторов коллапса: √γσ_z^i (дефазировка) и √γσ_-^i (релаксация)
    для i = C1, C2, T1, T2.

    Raises:
        NegativeRateError: при γ < 0
    """
    if p.gamma < 0:
        raise NegativeRateError(p.gamma)

    amplitude = math.sqrt(p.gamma)
    operators = []
    labels = []
    for name, local in (('dephasing', SIGMA_Z), ('relaxation', SIGMA_MINUS)):
        for site, site_name in enumerate(('C1', 'C2', 'T1', 'T2')):
            operators.append(amplitude * embed(local, site))
            labels.append(f'{name}_{site_name}')
    return CollapseOperatorSet(operators=tuple(operators), labels=tuple(labels), gamma=p.gamma)


def rotating_hamiltonian(p: QubitModelParams) -> Callable[[float], np.ndarray]:
    """H(t) как функция времени с заранее собранными слагаемыми"""
    static, exchange = rotating_components(p)
    exchange_dagger = dagger(exchange)

    def hamiltonian(t: float) -> np.ndarray:
        phase = np.exp(1j * p.delta * t)
        return static + phase * exchange + np.conj(phase) * exchange_dagger

    return hamiltonian


def default_step(p: QubitModelParams) -> float:
    """
    Шаг RK4 по умолчанию: период самого быстрого масштаба (обычно 2π/|Δ|),
    деленный на substeps_per_period. Без динамики шаг бесконечен.
    """
    fastest = max(abs(p.delta), *(abs(c) for c in p.couplings), abs(p.j_c), abs(p.j_t), p.gamma)
    if fastest == 0:
        return math.inf
    substeps = settings.DIAMONDSIM_SOLVER['substeps_per_period']
    return 2.0 * math.pi / fastest / substeps


def uniform_times(horizon: float, samples: int) -> np.ndarray:
    if not horizon > 0:
        raise InvalidTimeGridError(f"горизонт должен быть положительным, получено {horizon}")
    if samples < 2:
        raise InvalidTimeGridError(f"нужно не меньше двух точек выборки, получено {samples}")
    return np.linspace(0.0, horizon, int(samples))


def liouvillian(h: np.ndarray, collapse_ops: Sequence[np.ndarray]) -> np.ndarray:
    """
    Супероператор Линдблада в построчной векторизации,
    vec(AXB) = (A ⊗ Bᵀ) vec(X).
    """
    d = h.shape[0]
    identity = np.eye(d, dtype=complex)
    generator = -1j * (np.kron(h, identity) - np.kron(identity, h.T))
    for operator in collapse_ops:
        decay = dagger(operator) @ operator
        generator += (
            np.kron(operator, operator.conj())
            - 0.5 * np.kron(decay, identity)
            - 0.5 * np.kron(identity, decay.T)
        )
    return generator


def as_density_matrix(rho0, dim: int = DIM) -> np.ndarray:
    """
    Привести начальное состояние к матрице плотности.

    Вектор превращается в проектор; матрица проверяется на эрмитовость,
    единичный след и неотрицательность.

    Raises:
        EvolutionInvariantError: если состояние недопустимо
    """
    rho = np.asarray(rho0, dtype=complex)
    if rho.ndim == 1:
        rho = projector(rho / np.linalg.norm(rho))
    if rho.shape != (dim, dim):
        raise EvolutionInvariantError(message=f"Ожидалась матрица плотности {dim}×{dim}, получено {rho.shape}")

    hermiticity = float(np.max(np.abs(rho - dagger(rho))))
    trace = float(np.real(np.trace(rho)))
    min_eigenvalue = float(np.min(np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))))
    if (
        hermiticity > HERMITIAN_TOLERANCE
        or abs(trace - 1.0) > INITIAL_TRACE_TOLERANCE
        or min_eigenvalue < -POSITIVITY_TOLERANCE
    ):
        raise EvolutionInvariantError({
            'time': 0.0,
            'trace_drift': abs(trace - 1.0),
            'hermiticity': hermiticity,
            'min_eigenvalue': min_eigenvalue,
        })
    return rho


def _state_diagnostics(times, states, reference_traces, scale, step, check_positivity) -> Dict:
    """
    Метрики инвариантов для выборки states формы (n, m, d, d).

    reference_traces: ожидаемые следы m входов; scale: нормировка дрейфа
    следа; check_positivity: индексы входов, которые должны оставаться
    положительными (после деления на след).
    """
    traces = np.trace(states, axis1=-2, axis2=-1)
    trace_drift = np.max(np.abs(traces - reference_traces), axis=1) / scale
    hermiticity = np.max(np.abs(states - np.conj(np.swapaxes(states, -1, -2))), axis=(1, 2, 3))

    min_eigenvalues = np.zeros(times.size)
    for index in check_positivity:
        block = states[:, index] / reference_traces[index]
        block = 0.5 * (block + np.conj(np.swapaxes(block, -1, -2)))
        min_eigenvalues = np.minimum(min_eigenvalues, np.min(np.linalg.eigvalsh(block), axis=-1))

    violations = (
        (trace_drift > TRACE_TOLERANCE)
        | (hermiticity > HERMITIAN_TOLERANCE)
        | (min_eigenvalues < -POSITIVITY_TOLERANCE)
    )
    diagnostics = {
        'step': float(step),
        'trace_drift': float(np.max(trace_drift)),
        'hermiticity': float(np.max(hermiticity)),
        'min_eigenvalue': float(np.min(min_eigenvalues)),
    }
    return _mark_violations(diagnostics, times, violations)


def _unitary_diagnostics(times, unitaries, step) -> Dict:
    drift = np.array([unitarity_residual(u) for u in unitaries])
    diagnostics = {
        'step': float(step),
        'trace_drift': float(np.max(drift)),
        'hermiticity': 0.0,
        'min_eigenvalue': 0.0,
    }
    return _mark_violations(diagnostics, times, drift > TRACE_TOLERANCE)


def _mark_violations(diagnostics: Dict, times: np.ndarray, violations: np.ndarray) -> Dict:
    """valid=False и время первого нарушения, если оно есть"""
    diagnostics['valid'] = not bool(np.any(violations))
    if not diagnostics['valid']:
        diagnostics['time'] = float(times[int(np.argmax(violations))])
    return diagnostics


def check_invariants(diagnostics: Dict) -> Dict:
    """
    Проверить отметку valid, поставленную при выборке.

    Raises:
        EvolutionInvariantError: если выборка нарушила допуски
    """
    if not diagnostics.get('valid', True):
        raise EvolutionInvariantError({key: value for key, value in diagnostics.items() if key != 'valid'})
    return diagnostics


def _rotating_unitaries(hamiltonian: Callable[[float], np.ndarray], times: np.ndarray, step: float) -> np.ndarray:
    return rk4_sample(lambda t, u: -1j * (hamiltonian(t) @ u), np.eye(DIM, dtype=complex), times, step)


def _rotating_states(rho: np.ndarray, p: QubitModelParams, times: np.ndarray, step: float) -> EvolutionResult:
    """
    Одна выборка ρ(t) с шагом step; нарушения инвариантов только отмечаются.

    При γ = 0 интегрируется пропагатор и ρ(t) = UρU†, что сохраняет
    положительность; дополнительно отслеживается дрейф чистоты.
    """
    collapse = build_collapse_ops(p)
    hamiltonian = rotating_hamiltonian(p)
    if not collapse.is_zero:
        generator = LindbladGenerator(hamiltonian, collapse.operators, DIM)
        states = rk4_sample(generator, rho[None, :, :], times, step)
        diagnostics = _state_diagnostics(times, states, np.ones(1), 1.0, step, check_positivity=(0,))
        return EvolutionResult(times=times, states=states[:, 0], diagnostics=diagnostics)

    unitaries = _rotating_unitaries(hamiltonian, times, step)
    states = np.einsum('nab,bc,ndc->nad', unitaries, rho, unitaries.conj())
    diagnostics = _state_diagnostics(times, states[:, None], np.ones(1), 1.0, step, check_positivity=(0,))
    purity = np.real(np.einsum('nab,nba->n', states, states))
    purity_drift = np.abs(purity - np.real(np.trace(rho @ rho)))
    diagnostics['purity_drift'] = float(np.max(purity_drift))
    if diagnostics['valid'] and diagnostics['purity_drift'] > PURITY_TOLERANCE:
        _mark_violations(diagnostics, times, purity_drift > PURITY_TOLERANCE)
    return EvolutionResult(times=times, states=states, diagnostics=diagnostics)


@timed
def propagate(rho0, p: QubitModelParams, horizon: float, samples: int,
              max_step: Optional[float] = None) -> EvolutionResult:
    """
    Эволюция ρ0 под H(t) с восемью операторами коллапса.

    Шаг начинается с (2π/|Δ|)/40 и делится пополам, пока максимальное
    изменение выборки ρ(t) между уточнениями не станет меньше
    convergence_tolerance, а выборка не будет удовлетворять допускам
    инвариантов (не более max_refinements раз). Явный max_step отключает
    уточнение.

    Args:
        rho0: начальная матрица плотности 16×16 или вектор состояния
        p: параметры модели
        horizon: конец интервала, секунды
        samples: число точек равномерной сетки на [0, horizon]
        max_step: фиксированный шаг RK4

    Returns:
        EvolutionResult

    Raises:
        EvolutionInvariantError: при нарушении следа, эрмитовости,
            положительности (или чистоты при γ = 0) сверх допусков на
            последнем шаге
    """
    rho = as_density_matrix(rho0)
    times = uniform_times(horizon, samples)
    if max_step is not None:
        result = _rotating_states(rho, p, times, max_step)
        check_invariants(result.diagnostics)
        return result

    solver = settings.DIAMONDSIM_SOLVER
    tolerance = solver['convergence_tolerance']
    step = default_step(p)
    result = _rotating_states(rho, p, times, step)
    if not math.isfinite(step):
        check_invariants(result.diagnostics)
        result.diagnostics.update(refinements=0, converged=True, change=0.0)
        return result

    change = math.inf
    refinements = 0
    while refinements < solver['max_refinements'] and not (change < tolerance and result.diagnostics['valid']):
        step /= 2.0
        refinements += 1
        finer = _rotating_states(rho, p, times, step)
        change = float(np.max(np.abs(finer.states - result.states)))
        result = finer

    check_invariants(result.diagnostics)
    converged = change < tolerance
    if not converged:
        logger.warning(
            f"Шаг не сошелся за {refinements} уточнений: изменение {change:.2e}, шаг {step:.3e} с"
        )
    result.diagnostics.update(refinements=refinements, converged=converged, change=change)
    return result


def _superoperator_outputs(generator: np.ndarray, inputs: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Образы inputs (m, d, d) под exp(L t) для каждого t"""
    m, d, _ = inputs.shape
    vectors = inputs.reshape(m, d * d)
    outputs = np.empty((times.size, m, d, d), dtype=complex)
    for index, t in enumerate(times):
        propagator = matrix_exponential(generator * t)
        outputs[index] = (vectors @ propagator.T).reshape(m, d, d)
    return outputs


@timed
def propagate_effective(rho0, p: QubitModelParams, horizon: float, samples: int) -> EvolutionResult:
    """
    Эволюция ρ0 под стационарным H_F.

    При γ = 0 ρ(t) = e^{-iH_F t} ρ0 e^{iH_F t}, иначе ρ(t) = exp(L t) ρ0 с
    супероператором Линдблада L.
    """
    rho = as_density_matrix(rho0)
    times = uniform_times(horizon, samples)
    h_f = build_floquet_h(p)
    collapse = build_collapse_ops(p)

    if collapse.is_zero:
        values, vectors = hermitian_eigendecomposition(h_f)
        states = np.empty((times.size, 1, DIM, DIM), dtype=complex)
        for index, t in enumerate(times):
            u = eigen_propagator(values, vectors, t)
            states[index, 0] = u @ rho @ dagger(u)
    else:
        states = _superoperator_outputs(liouvillian(h_f, collapse.operators), rho[None], times)

    step = times[1] - times[0]
    diagnostics = _state_diagnostics(times, states, np.ones(1), 1.0, step, check_positivity=(0,))
    diagnostics['method'] = 'eigh' if collapse.is_zero else 'expm'
    check_invariants(diagnostics)
    return EvolutionResult(times=times, states=states[:, 0], diagnostics=diagnostics)


@timed
def sampled_channel(p: QubitModelParams, times, engine: str = Engine.ROTATING,
                    max_step: Optional[float] = None, enforce: bool = True) -> ChannelSamples:
    """
    Канал ε_t четырехкубитной системы в моменты times.

    Args:
        p: параметры модели
        times: неубывающие моменты выборки, секунды (отсчет от 0)
        engine: Engine.ROTATING (RK4 с H(t)) или Engine.FLOQUET (H_F)
        max_step: шаг RK4, по умолчанию default_step(p)
        enforce: вызывать EvolutionInvariantError при нарушении допусков;
            при False нарушение только отмечается в diagnostics['valid']

    Returns:
        ChannelSamples с пропагаторами (γ = 0) или образами базиса Паули
    """
    times = check_time_grid(times)
    engine = Engine(engine)
    collapse = build_collapse_ops(p)
    basis = _pauli_basis(DIM)
    reference_traces = np.trace(basis, axis1=-2, axis2=-1)

    if engine == Engine.FLOQUET:
        h_f = build_floquet_h(p)
        if collapse.is_zero:
            values, vectors = hermitian_eigendecomposition(h_f)
            unitaries = np.array([eigen_propagator(values, vectors, t) for t in times])
            samples = ChannelSamples(times=times, dim=DIM, unitaries=unitaries,
                                     diagnostics=_unitary_diagnostics(times, unitaries, 0.0))
        else:
            outputs = _superoperator_outputs(liouvillian(h_f, collapse.operators), basis, times)
            diagnostics = _state_diagnostics(times, outputs, reference_traces, DIM, 0.0, check_positivity=(0,))
            samples = ChannelSamples(times=times, dim=DIM, pauli_outputs=outputs, diagnostics=diagnostics)
    else:
        step = default_step(p) if max_step is None else max_step
        hamiltonian = rotating_hamiltonian(p)
        logger.debug(f"RK4: {times.size} точек до {times[-1]:.3e} с, шаг {step:.3e} с, γ = {p.gamma:.3e}")
        if collapse.is_zero:
            unitaries = _rotating_unitaries(hamiltonian, times, step)
            samples = ChannelSamples(times=times, dim=DIM, unitaries=unitaries,
                                     diagnostics=_unitary_diagnostics(times, unitaries, step))
        else:
            generator = LindbladGenerator(hamiltonian, collapse.operators, DIM)
            outputs = rk4_sample(generator, np.array(basis), times, step)
            diagnostics = _state_diagnostics(times, outputs, reference_traces, DIM, step, check_positivity=(0,))
            samples = ChannelSamples(times=times, dim=DIM, pauli_outputs=outputs, diagnostics=diagnostics)

    samples.diagnostics['engine'] = engine.value
    if enforce:
        check_invariants(samples.diagnostics)
    return samples


def refined_channel(p: QubitModelParams, times, engine: str = Engine.ROTATING,
                    max_step: Optional[float] = None) -> ChannelSamples:
    """
    sampled_channel, в котором шаг RK4 делится пополам, пока выборка
    нарушает допуски инвариантов (не более max_refinements раз).

    Raises:
        EvolutionInvariantError: если нарушение остается после всех уточнений
    """
    samples = sampled_channel(p, times, engine=engine, max_step=max_step, enforce=False)
    step = samples.diagnostics['step']
    refinements = 0
    while (not samples.diagnostics['valid'] and 0 < step < math.inf
           and refinements < settings.DIAMONDSIM_SOLVER['max_refinements']):
        step /= 2.0
        refinements += 1
        samples = sampled_channel(p, times, engine=engine, max_step=step, enforce=False)
    if refinements:
        logger.debug(f"Канал уточнен {refinements} раз до шага {step:.3e} с")
    check_invariants(samples.diagnostics)
    return samples


def qubit_decay_harness(kind: str, gamma: float, horizon: float, samples: int) -> DecayHarnessResult:
    """
    Проверочный режим одного кубита без гамильтониана.

    relaxation: C = √γσ₋, ρ0 = |1⟩⟨1|, населенность |1⟩ равна e^{-γt};
    dephasing: C = √γσ_z, ρ0 = |+⟩⟨+|, когерентность 2|ρ₀₁| равна e^{-2γt}.
    """
    kind = HarnessKind(kind)
    if gamma < 0:
        raise NegativeRateError(gamma)
    times = uniform_times(horizon, samples)
    amplitude = math.sqrt(gamma)
    zero_hamiltonian = np.zeros((2, 2), dtype=complex)

    if kind == HarnessKind.RELAXATION:
        operator = amplitude * SIGMA_MINUS
        rho = np.diag([0.0, 1.0]).astype(complex)
        analytic = np.exp(-gamma * times)
    else:
        operator = amplitude * SIGMA_Z
        rho = 0.5 * (np.eye(2, dtype=complex) + SIGMA_X)
        analytic = np.exp(-2.0 * gamma * times)

    step = math.inf if gamma == 0 else 0.01 / gamma
    generator = LindbladGenerator(lambda t: zero_hamiltonian, [operator], 2)
    states = rk4_sample(generator, rho[None], times, step)[:, 0]

    if kind == HarnessKind.RELAXATION:
        simulated = np.real(states[:, 1, 1])
    else:
        simulated = 2.0 * np.abs(states[:, 0, 1])
    return DecayHarnessResult(kind=kind.value, gamma=gamma, times=times, simulated=simulated, analytic=analytic)
