import math

import numpy as np
from django.test import SimpleTestCase

from operators.algebra import basis_state, is_unitary, matrix_exponential
from qubits.decomposition import GATE_MATRICES, embed_gate
from qubits.exceptions import InvalidModelParameterError, UnknownControlLabelError
from qubits.gates import (
    CONTROL_BASIS,
    ControlState,
    gate_time,
    ideal_diamond_gate,
    ideal_target_gate,
    zeta,
)
from qubits.hamiltonians import T1, T2, build_floquet_h
from qubits.params import QubitModelParams
from utils.units import to_mhz, to_ns

ZZ = np.diag([1, -1, -1, 1]).astype(complex)


class ControlBasisTests(SimpleTestCase):
    def test_orthonormal(self):
        vectors = np.array(list(CONTROL_BASIS.values()))
        np.testing.assert_allclose(vectors.conj() @ vectors.T, np.eye(4), atol=1e-12)


class GateTimeTests(SimpleTestCase):
    def test_table_values(self):
        self.assertAlmostEqual(to_ns(gate_time(QubitModelParams.table1(1))), 59.2, delta=0.05)
        self.assertAlmostEqual(to_ns(gate_time(QubitModelParams.table1(2))), 30.9, delta=0.05)

    def test_doubling_coupling_quarters_time(self):
        p = QubitModelParams.table1(1)
        self.assertAlmostEqual(gate_time(p.replace(j=2 * p.j)) / gate_time(p), 0.25, places=12)

    def test_zero_coupling_rejected(self):
        with self.assertRaises(InvalidModelParameterError):
            gate_time(QubitModelParams.table1(1, j=0.0))

    def test_zeta_for_set_one(self):
        self.assertAlmostEqual(to_mhz(zeta(QubitModelParams.table1(1))), 8.45, places=6)


class IdealTargetGateTests(SimpleTestCase):
    def setUp(self):
        self.p = QubitModelParams.table1(1)
        self.t_g = gate_time(self.p)

    def test_zero_zero_control_at_gate_time(self):
        cz_swap = GATE_MATRICES['CZ'] @ GATE_MATRICES['SWAP']
        np.testing.assert_allclose(
            ideal_target_gate(ControlState.ZERO_ZERO, self.t_g, self.p), ZZ @ cz_swap, atol=1e-12
        )

    def test_one_one_control_at_gate_time(self):
        expected = -GATE_MATRICES['CZ'] @ GATE_MATRICES['SWAP']
        np.testing.assert_allclose(ideal_target_gate('11', self.t_g, self.p), expected, atol=1e-12)

    def test_phase_gate_at_gate_time(self):
        expected = -ZZ * np.exp(-1j * self.t_g * self.p.j_c)
        np.testing.assert_allclose(ideal_target_gate('psi_plus', self.t_g, self.p), expected, atol=1e-12)

    def test_singlet_is_identity_with_phase(self):
        for t in (0.0, 1.3e-8, self.t_g):
            np.testing.assert_allclose(
                ideal_target_gate(ControlState.PSI_MINUS, t, self.p),
                np.eye(4) * np.exp(1j * t * self.p.j_c),
                atol=1e-12,
            )

    def test_identity_at_zero_time(self):
        for label in ControlState.values:
            np.testing.assert_allclose(ideal_target_gate(label, 0.0, self.p), np.eye(4), atol=1e-15)

    def test_swap_applied_twice(self):
        u = ideal_target_gate(ControlState.ZERO_ZERO, self.t_g, self.p)
        np.testing.assert_allclose(u @ u, np.eye(4), atol=1e-12)

    def test_unknown_label_rejected(self):
        with self.assertRaises(UnknownControlLabelError):
            ideal_target_gate('01', self.t_g, self.p)


class IdealDiamondGateTests(SimpleTestCase):
    def setUp(self):
        self.p = QubitModelParams.table1(1)
        self.t_g = gate_time(self.p)

    def test_identity_at_zero_time(self):
        np.testing.assert_allclose(ideal_diamond_gate(0.0, self.p), np.eye(16), atol=1e-15)

    def test_example_transformation(self):
        u = ideal_diamond_gate(self.t_g, self.p)
        result = u @ basis_state((0, 0, 0, 1))
        np.testing.assert_allclose(result, -basis_state((0, 0, 1, 0)), atol=1e-12)

    def test_unitary_and_block_preserving(self):
        for t in np.linspace(0, 2 * self.t_g, 5):
            u = ideal_diamond_gate(t, self.p)
            self.assertTrue(is_unitary(u))
            for label, phi in CONTROL_BASIS.items():
                for other_label, other in CONTROL_BASIS.items():
                    if label == other_label:
                        continue
                    block = np.kron(other.conj()[None, :], np.eye(4)) @ u @ np.kron(phi[:, None], np.eye(4))
                    np.testing.assert_allclose(block, 0, atol=1e-12)

    def test_floquet_propagator_without_control_coupling(self):
        p = self.p.replace(j_c=0.0)
        h_f = build_floquet_h(p)
        for t in (self.t_g, 0.37 * self.t_g):
            np.testing.assert_allclose(
                matrix_exponential(-1j * h_f * t), ideal_diamond_gate(t, p), atol=1e-10
            )

    def test_target_relabeling_symmetry(self):
        swap = embed_gate(GATE_MATRICES['SWAP'], (T1, T2))
        u = ideal_diamond_gate(0.6 * self.t_g, self.p)
        np.testing.assert_allclose(swap @ u @ swap, u, atol=1e-12)

    def test_gate_time_phase_is_half_turn(self):
        self.assertAlmostEqual(zeta(self.p) * self.t_g, math.pi, places=12)
