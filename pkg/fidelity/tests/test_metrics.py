import numpy as np
from django.test import SimpleTestCase
from scipy.stats import unitary_group

from fidelity.metrics import (
    average_gate_fidelity,
    compressed_channel,
    haar_average_fidelity,
    haar_random_state,
    subspace_fidelity,
    unitary_fidelity,
)
from operators.algebra import dagger, projector
from operators.exceptions import DimensionMismatchError
from qubits.gates import CONTROL_BASIS, ControlState, gate_time, ideal_diamond_gate
from qubits.params import QubitModelParams


def identity_channel(x):
    return np.asarray(x)


def depolarizing_channel(dim):
    def channel(x):
        x = np.asarray(x)
        traces = np.trace(x, axis1=-2, axis2=-1)[..., None, None]
        return traces * np.eye(dim) / dim
    return channel


def conjugation_channel(u):
    return lambda x: u @ np.asarray(x) @ dagger(u)


def mixed_channel(u, q, dim):
    depolarize = depolarizing_channel(dim)
    return lambda x: (1 - q) * conjugation_channel(u)(x) + q * depolarize(x)


def reset_controls_channel(x):
    """ρ ↦ |00⟩⟨00|_C ⊗ tr_C ρ"""
    x = np.asarray(x).reshape(np.shape(x)[:-2] + (4, 4, 4, 4))
    reduced = np.einsum('...aiaj->...ij', x)
    ground = np.zeros((4, 4))
    ground[0, 0] = 1
    return np.einsum('ab,...ij->...aibj', ground, reduced).reshape(reduced.shape[:-2] + (16, 16))


class AverageGateFidelityTests(SimpleTestCase):
    def test_identity_channel(self):
        self.assertAlmostEqual(average_gate_fidelity(identity_channel, np.eye(16), 16), 1.0, places=12)

    def test_completely_depolarizing_channel(self):
        u = unitary_group.rvs(16, random_state=3)
        self.assertAlmostEqual(average_gate_fidelity(depolarizing_channel(16), u, 16), 1 / 16, places=12)

    def test_conjugation_by_target(self):
        u = unitary_group.rvs(16, random_state=4)
        self.assertAlmostEqual(average_gate_fidelity(conjugation_channel(u), u, 16), 1.0, places=10)

    def test_unitary_channel_matches_trace_formula(self):
        for dim in (2, 4, 16):
            u = unitary_group.rvs(dim, random_state=dim)
            v = unitary_group.rvs(dim, random_state=dim + 100)
            self.assertAlmostEqual(
                average_gate_fidelity(conjugation_channel(v), u, dim), unitary_fidelity(u, v), places=10
            )

    def test_global_phase_is_irrelevant(self):
        u = unitary_group.rvs(4, random_state=8)
        channel = conjugation_channel(np.exp(0.7j) * u)
        self.assertAlmostEqual(average_gate_fidelity(channel, u, 4), 1.0, places=10)

    def test_non_power_of_two_rejected(self):
        with self.assertRaises(DimensionMismatchError):
            average_gate_fidelity(identity_channel, np.eye(3), 3)

    def test_target_shape_checked(self):
        with self.assertRaises(DimensionMismatchError):
            average_gate_fidelity(identity_channel, np.eye(4), 16)

    def test_trace_decreasing_channel_logged(self):
        with self.assertLogs('diamondsim.fidelity', level='WARNING'):
            fidelity = average_gate_fidelity(lambda x: 0.5 * np.asarray(x), np.eye(4), 4)
        self.assertAlmostEqual(fidelity, 0.5, places=12)


class HaarOracleTests(SimpleTestCase):
    def test_identity_channel_exact(self):
        mean, error = haar_average_fidelity(identity_channel, np.eye(4), 4, samples=500, seed=1)
        self.assertAlmostEqual(mean, 1.0, places=12)
        self.assertLess(error, 1e-12)

    def test_depolarizing_channel_exact(self):
        mean, _ = haar_average_fidelity(depolarizing_channel(16), np.eye(16), 16, samples=200, seed=2)
        self.assertAlmostEqual(mean, 1 / 16, places=12)

    def test_sum_formula_within_sampling_error(self):
        u = unitary_group.rvs(4, random_state=21)
        v = unitary_group.rvs(4, random_state=22)
        channel = mixed_channel(v, 0.2, 4)
        expected = average_gate_fidelity(channel, u, 4)
        mean, error = haar_average_fidelity(channel, u, 4, samples=4000, seed=5)
        self.assertGreater(error, 0)
        self.assertLess(abs(mean - expected), 4 * error)

    def test_trace_decreasing_channel_within_sampling_error(self):
        channel = compressed_channel(reset_controls_channel, ControlState.ZERO_ZERO)
        leaky = lambda x: 0.8 * channel(x)
        expected = average_gate_fidelity(leaky, np.eye(4), 4, check_trace=False)
        self.assertAlmostEqual(expected, 0.8, places=12)
        mean, _ = haar_average_fidelity(leaky, np.eye(4), 4, samples=300, seed=6)
        self.assertAlmostEqual(mean, 0.8, places=12)


class HaarRandomStateTests(SimpleTestCase):
    def test_normalized(self):
        state = haar_random_state(16, seed=42)
        self.assertAlmostEqual(np.linalg.norm(state), 1.0, places=12)

    def test_deterministic_per_seed(self):
        np.testing.assert_array_equal(haar_random_state(8, seed=42), haar_random_state(8, seed=42))
        self.assertFalse(np.allclose(haar_random_state(8, seed=42), haar_random_state(8, seed=43)))
        self.assertFalse(np.allclose(haar_random_state(8, seed=42, index=1), haar_random_state(8, seed=42)))

    def test_projector_moment(self):
        dim = 4
        values = np.array([abs(haar_random_state(dim, seed=9, index=i)[0]) ** 2 for i in range(10000)])
        sigma = np.std(values, ddof=1) / np.sqrt(values.size)
        self.assertLess(abs(np.mean(values) - 1 / dim), 4 * sigma)

    def test_dimension_checked(self):
        with self.assertRaises(DimensionMismatchError):
            haar_random_state(1, seed=0)


class SubspaceFidelityTests(SimpleTestCase):
    def setUp(self):
        self.p = QubitModelParams.table1(1)

    def test_ideal_gate_channel(self):
        channel = conjugation_channel(ideal_diamond_gate(gate_time(self.p), self.p))
        for control in ControlState.values:
            self.assertAlmostEqual(subspace_fidelity(channel, control, p=self.p), 1.0, places=10)

    def test_identity_channel_compresses_to_identity(self):
        x = np.arange(16).reshape(4, 4).astype(complex)
        for control in CONTROL_BASIS:
            compressed = compressed_channel(identity_channel, control)
            np.testing.assert_allclose(compressed(x), x, atol=1e-12)

    def test_leakage_counts_as_loss(self):
        self.assertAlmostEqual(
            subspace_fidelity(reset_controls_channel, ControlState.PSI_PLUS, np.eye(4)), 0.0, places=12
        )
        self.assertAlmostEqual(
            subspace_fidelity(reset_controls_channel, ControlState.ZERO_ZERO, np.eye(4)), 1.0, places=12
        )

    def test_target_required(self):
        with self.assertRaises(DimensionMismatchError):
            subspace_fidelity(identity_channel, ControlState.ZERO_ZERO)

    def test_batch_of_targets(self):
        compressed = compressed_channel(identity_channel, ControlState.PSI_MINUS)
        batch = np.array([projector(np.eye(4)[i]) for i in range(4)])
        self.assertEqual(compressed(batch).shape, (4, 4, 4))
