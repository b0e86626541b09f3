"""
Разложение алмазного гейта на стандартные гейты.

Схема в порядке применения:
    U_A      CNOT(C2→C1), CH(C1→C2), CNOT(C2→C1): переводит базис
             управляющей пары в вычислительный
             (|00⟩, |11⟩, |Ψ⁺⟩, |Ψ⁻⟩ → |00⟩, |11⟩, |10⟩, -|01⟩)
    U_B      U_T^00(t_g) = Z⊗Z·CZ·SWAP на мишенях
    U_C      при C2 = 1: e^{iφ}·U_T^00(t_g), φ = t_g·J_C
    U_D      при C1 = 1: -e^{-iφ}·CZ·SWAP
    U_A^{-1} та же последовательность (палиндром из самообратных гейтов)

Фазы e^{±iφ} реализуются через R_z = diag(e^{-iφ/2}, e^{iφ/2}), поэтому
произведение совпадает с идеальным гейтом с точностью до глобальной фазы.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .gates import gate_time
from .hamiltonians import C1, C2, T1, T2
from .params import QubitModelParams

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_Z = np.diag([1, -1]).astype(complex)


def _controlled(local: np.ndarray) -> np.ndarray:
    dim = local.shape[0]
    gate = np.eye(2 * dim, dtype=complex)
    gate[dim:, dim:] = local
    return gate


_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
_CNOT = _controlled(np.array([[0, 1], [1, 0]], dtype=complex))
_CZ = np.diag([1, 1, 1, -1]).astype(complex)

GATE_MATRICES = {
    'Z': _Z,
    'CNOT': _CNOT,
    'CH': _controlled(_H),
    'CZ': _CZ,
    'SWAP': _SWAP,
    'CSWAP': _controlled(_SWAP),
    'CCZ': np.diag([1, 1, 1, 1, 1, 1, 1, -1]).astype(complex),
}

SINGLE_QUBIT_GATES = ('Z', 'RZ')


def rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


@dataclass(frozen=True)
class NamedGate:
    """Стандартный гейт на подсистемах sites (первая подсистема старшая)"""

    name: str
    sites: Tuple[int, ...]
    stage: str
    angle: float = 0.0

    @property
    def matrix(self) -> np.ndarray:
        if self.name == 'RZ':
            return rz(self.angle)
        return GATE_MATRICES[self.name]


def embed_gate(matrix: np.ndarray, sites: Sequence[int], n_sites: int = 4) -> np.ndarray:
    """Вложить k-кубитный гейт, действующий на sites, в n_sites-кубитное пространство"""
    k = len(sites)
    dim = 2 ** n_sites
    gate = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * k))
    columns = np.eye(dim, dtype=complex).reshape((2,) * n_sites + (dim,))
    result = np.tensordot(gate, columns, axes=(list(range(k, 2 * k)), list(sites)))
    result = np.moveaxis(result, list(range(k)), list(sites))
    return result.reshape(dim, dim)


def _control_basis_change(stage: str) -> List[NamedGate]:
    return [
        NamedGate('CNOT', (C2, C1), stage),
        NamedGate('CH', (C1, C2), stage),
        NamedGate('CNOT', (C2, C1), stage),
    ]


def decompose_diamond_gate(p: QubitModelParams) -> List[NamedGate]:
    """Упорядоченный по времени список гейтов схемы"""
    phi = gate_time(p) * p.j_c
    gates = _control_basis_change('U_A')
    gates += [
        NamedGate('SWAP', (T1, T2), 'U_B'),
        NamedGate('CZ', (T1, T2), 'U_B'),
        NamedGate('Z', (T1,), 'U_B'),
        NamedGate('Z', (T2,), 'U_B'),
    ]
    gates += [
        NamedGate('CSWAP', (C2, T1, T2), 'U_C'),
        NamedGate('CCZ', (C2, T1, T2), 'U_C'),
        NamedGate('CZ', (C2, T1), 'U_C'),
        NamedGate('CZ', (C2, T2), 'U_C'),
        NamedGate('RZ', (C2,), 'U_C', angle=phi),
    ]
    gates += [
        NamedGate('CSWAP', (C1, T1, T2), 'U_D'),
        NamedGate('CCZ', (C1, T1, T2), 'U_D'),
        NamedGate('Z', (C1,), 'U_D'),
        NamedGate('RZ', (C1,), 'U_D', angle=-phi),
    ]
    gates += _control_basis_change('U_A_inv')
    return gates


def compose(gates: Sequence[NamedGate], n_sites: int = 4) -> np.ndarray:
    """Произведение гейтов: первый в списке применяется первым"""
    unitary = np.eye(2 ** n_sites, dtype=complex)
    for gate in gates:
        unitary = embed_gate(gate.matrix, gate.sites, n_sites) @ unitary
    return unitary


def gate_counts(gates: Sequence[NamedGate]) -> Dict[str, int]:
    """
    Число гейтов каждого типа, а также итоги single_qubit и cnot.
    """
    counts = Counter(gate.name for gate in gates)
    summary = dict(sorted(counts.items()))
    summary['single_qubit'] = sum(counts[name] for name in SINGLE_QUBIT_GATES)
    summary['cnot'] = counts['CNOT']
    return summary


def circuit_unitary(p: QubitModelParams) -> np.ndarray:
    """Матрица схемы разложения (16×16)"""
    return compose(decompose_diamond_gate(p))
