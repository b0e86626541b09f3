import math

import numpy as np
from django.test import SimpleTestCase

from dynamics.exceptions import EvolutionInvariantError, InvalidTimeGridError, NegativeRateError
from dynamics.lindblad import (
    Engine,
    HarnessKind,
    LindbladGenerator,
    build_collapse_ops,
    check_invariants,
    liouvillian,
    propagate,
    propagate_effective,
    qubit_decay_harness,
    refined_channel,
    rotating_hamiltonian,
    sampled_channel,
)
from operators.algebra import basis_state, dagger, projector, tensor_product
from qubits.gates import CONTROL_BASIS, ControlState, gate_time
from qubits.hamiltonians import build_floquet_h, build_rotating_h
from qubits.params import QubitModelParams
from utils.units import from_ns


def random_density_matrix(rng, dim=16):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ dagger(a)
    return rho / np.trace(rho)


def explicit_rhs(h, collapse_ops, rho):
    result = -1j * (h @ rho - rho @ h)
    for c in collapse_ops:
        decay = dagger(c) @ c
        result += c @ rho @ dagger(c) - 0.5 * (decay @ rho + rho @ decay)
    return result


class CollapseOperatorTests(SimpleTestCase):
    def test_zero_rate_gives_zero_operators(self):
        collapse = build_collapse_ops(QubitModelParams.table1(1, gamma=0.0))
        self.assertEqual(len(collapse), 8)
        self.assertTrue(collapse.is_zero)

    def test_eight_operators_scaled_by_root_rate(self):
        p = QubitModelParams.table1(1, gamma=4.0e6)
        collapse = build_collapse_ops(p)
        self.assertEqual(len(collapse), 8)
        for operator in collapse.operators:
            self.assertEqual(operator.shape, (16, 16))
            self.assertAlmostEqual(np.max(np.abs(operator)), 2.0e3, places=6)

    def test_lowering_operators_annihilate_ground_state(self):
        collapse = build_collapse_ops(QubitModelParams.table1(1))
        ground = basis_state((0, 0, 0, 0))
        for label, operator in zip(collapse.labels, collapse.operators):
            if label.startswith('relaxation'):
                np.testing.assert_array_equal(operator @ ground, 0)

    def test_negative_rate_rejected(self):
        with self.assertRaises(NegativeRateError):
            build_collapse_ops(QubitModelParams.table1(1, gamma=-1.0))


class GeneratorTests(SimpleTestCase):
    def setUp(self):
        self.p = QubitModelParams.table1(1, gamma=1.0e7, j_t=QubitModelParams.table1(1).j_c / 3)
        self.rng = np.random.default_rng(7)

    def test_rotating_hamiltonian_matches_builder(self):
        hamiltonian = rotating_hamiltonian(self.p)
        for t in (0.0, from_ns(1.3), from_ns(40.0)):
            np.testing.assert_allclose(hamiltonian(t), build_rotating_h(self.p, t), atol=1e-6)

    def test_structured_jumps_match_explicit_formula(self):
        collapse = build_collapse_ops(self.p)
        hamiltonian = rotating_hamiltonian(self.p)
        generator = LindbladGenerator(hamiltonian, collapse.operators, 16)
        rho = random_density_matrix(self.rng)
        t = from_ns(3.7)

        expected = explicit_rhs(hamiltonian(t), collapse.operators, rho)
        actual = generator(t, rho[None])[0]
        np.testing.assert_allclose(actual, expected, atol=1e-10 * np.max(np.abs(expected)))

    def test_dense_operator_fallback(self):
        c = self.rng.normal(size=(4, 4)) + 1j * self.rng.normal(size=(4, 4))
        h = np.diag([0.0, 1.0, 2.0, 3.0]).astype(complex)
        generator = LindbladGenerator(lambda t: h, [c], 4)
        rho = random_density_matrix(self.rng, dim=4)
        np.testing.assert_allclose(generator(0.0, rho[None])[0], explicit_rhs(h, [c], rho), atol=1e-12)

    def test_liouvillian_matches_generator(self):
        collapse = build_collapse_ops(self.p)
        h_f = build_floquet_h(self.p)
        generator = LindbladGenerator(lambda t: h_f, collapse.operators, 16)
        rho = random_density_matrix(self.rng)

        expected = generator(0.0, rho[None])[0]
        actual = (liouvillian(h_f, collapse.operators) @ rho.reshape(-1)).reshape(16, 16)
        np.testing.assert_allclose(actual, expected, atol=1e-10 * np.max(np.abs(expected)))


class PropagateTests(SimpleTestCase):
    def test_no_couplings_no_decay_keeps_state(self):
        p = QubitModelParams.table1(1, j=0.0, j_c=0.0, gamma=0.0)
        rho0 = random_density_matrix(np.random.default_rng(3))
        result = propagate(rho0, p, horizon=from_ns(10.0), samples=5)
        for state in result.states:
            np.testing.assert_allclose(state, rho0, atol=1e-12)

    def test_singlet_control_is_decoupled(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        initial = tensor_product(CONTROL_BASIS[ControlState.PSI_MINUS], basis_state((0, 1)))
        result = propagate(initial, p, horizon=gate_time(p), samples=11)
        self.assertGreaterEqual(np.min(result.overlap_with(initial)), 1 - 1e-4)

    def test_unitary_evolution_preserves_purity(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        initial = tensor_product(basis_state((0, 0)), (basis_state((0,)) + basis_state((1,))) / math.sqrt(2),
                                 basis_state((0,)))
        result = propagate(initial, p, horizon=from_ns(8.0), samples=5)
        np.testing.assert_allclose(result.purity(), 1.0, atol=1e-8)
        self.assertGreaterEqual(result.diagnostics['refinements'], 1)
        self.assertLessEqual(result.diagnostics['purity_drift'], 1e-8)

    def test_pure_state_at_gate_time_refines_instead_of_failing(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        initial = tensor_product(CONTROL_BASIS[ControlState.ZERO_ZERO], basis_state((1, 0)))
        result = propagate(initial, p, horizon=gate_time(p), samples=3)
        self.assertTrue(result.diagnostics['valid'])
        self.assertGreaterEqual(result.diagnostics['min_eigenvalue'], -1e-8)
        np.testing.assert_allclose(result.purity(), 1.0, atol=1e-8)

    def test_decay_keeps_density_matrix_properties(self):
        p = QubitModelParams.table1(1, gamma=2.0e7)
        rho0 = projector(tensor_product(CONTROL_BASIS[ControlState.ONE_ONE], basis_state((1, 0))))
        result = propagate(rho0, p, horizon=from_ns(10.0), samples=6, max_step=p.period / 40)

        self.assertLessEqual(result.diagnostics['trace_drift'], 1e-7)
        self.assertLessEqual(result.diagnostics['hermiticity'], 1e-10)
        self.assertGreaterEqual(result.diagnostics['min_eigenvalue'], -1e-8)
        purity = result.purity()
        self.assertLess(purity[-1], purity[0] - 1e-2)
        self.assertTrue(np.all(purity <= 1 + 1e-10))

    def test_linearity_in_initial_state(self):
        p = QubitModelParams.table1(1, gamma=1.0e7)
        rng = np.random.default_rng(11)
        rho_a, rho_b = random_density_matrix(rng), random_density_matrix(rng)
        alpha = 0.3
        kwargs = {'horizon': from_ns(4.0), 'samples': 3, 'max_step': p.period / 40}

        mixed = propagate(alpha * rho_a + (1 - alpha) * rho_b, p, **kwargs).states
        separate = (alpha * propagate(rho_a, p, **kwargs).states
                    + (1 - alpha) * propagate(rho_b, p, **kwargs).states)
        np.testing.assert_allclose(mixed, separate, atol=1e-8)

    def test_invalid_initial_state_rejected(self):
        p = QubitModelParams.table1(1)
        with self.assertRaises(EvolutionInvariantError) as context:
            propagate(2 * np.eye(16) / 16, p, horizon=from_ns(1.0), samples=2)
        self.assertEqual(context.exception.diagnostics['time'], 0.0)

    def test_non_positive_horizon_rejected(self):
        with self.assertRaises(InvalidTimeGridError):
            propagate(np.eye(16) / 16, QubitModelParams.table1(1), horizon=0.0, samples=3)


class PropagateEffectiveTests(SimpleTestCase):
    def test_purity_preserved_without_decay(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        initial = tensor_product(CONTROL_BASIS[ControlState.PSI_PLUS], basis_state((1, 0)))
        result = propagate_effective(initial, p, horizon=gate_time(p), samples=9)
        np.testing.assert_allclose(result.purity(), 1.0, atol=1e-8)
        self.assertEqual(result.diagnostics['method'], 'eigh')

    def test_singlet_block_acquires_only_phase(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        channel = sampled_channel(p, [0.0, from_ns(17.0), gate_time(p)], engine=Engine.FLOQUET)
        for index, t in enumerate(channel.times):
            u = channel.unitaries[index]
            for target in np.eye(4):
                state = tensor_product(CONTROL_BASIS[ControlState.PSI_MINUS], target)
                np.testing.assert_allclose(u @ state, np.exp(1j * p.j_c * t) * state, atol=1e-10)

    def test_decay_reduces_purity_and_keeps_trace(self):
        p = QubitModelParams.table1(1, gamma=1.0e7)
        initial = tensor_product(basis_state((1, 1)), basis_state((0, 1)))
        result = propagate_effective(initial, p, horizon=from_ns(20.0), samples=5)
        self.assertEqual(result.diagnostics['method'], 'expm')
        np.testing.assert_allclose(np.real(np.trace(result.states, axis1=1, axis2=2)), 1.0, atol=1e-10)
        self.assertLess(result.purity()[-1], 1.0 - 1e-3)


class SampledChannelTests(SimpleTestCase):
    def test_channel_reproduces_single_state_evolution(self):
        p = QubitModelParams.table1(1, gamma=1.0e7)
        rho0 = random_density_matrix(np.random.default_rng(5))
        step = p.period / 40
        channel = sampled_channel(p, [0.0, from_ns(2.0), from_ns(5.0)], max_step=step)
        reference = propagate(rho0, p, horizon=from_ns(5.0), samples=3, max_step=step)

        self.assertIsNotNone(channel.pauli_outputs)
        np.testing.assert_allclose(channel.apply(0, rho0), rho0, atol=1e-12)
        np.testing.assert_allclose(channel.apply(2, rho0), reference.states[2], atol=1e-10)

    def test_unitary_path_matches_density_matrix_path(self):
        p = QubitModelParams.table1(2, gamma=0.0)
        rho0 = random_density_matrix(np.random.default_rng(9))
        step = p.period / 160
        channel = sampled_channel(p, [from_ns(6.0)], max_step=step)
        reference = propagate(rho0, p, horizon=from_ns(6.0), samples=2, max_step=step)

        self.assertIsNotNone(channel.unitaries)
        np.testing.assert_allclose(channel.apply(0, rho0), reference.states[-1], atol=1e-5)

    def test_coarse_step_violation_is_reported_or_raised(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        t_g = gate_time(p)
        coarse = sampled_channel(p, [t_g], max_step=p.period / 40, enforce=False)
        self.assertFalse(coarse.diagnostics['valid'])
        self.assertEqual(coarse.diagnostics['time'], t_g)
        with self.assertRaises(EvolutionInvariantError):
            sampled_channel(p, [t_g], max_step=p.period / 40)

    def test_check_invariants_passes_valid_diagnostics(self):
        diagnostics = {'valid': True, 'trace_drift': 0.0}
        self.assertIs(check_invariants(diagnostics), diagnostics)

    def test_refined_channel_halves_coarse_step(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        coarse = p.period / 40
        channel = refined_channel(p, [gate_time(p)], max_step=coarse)
        self.assertTrue(channel.diagnostics['valid'])
        self.assertLess(channel.diagnostics['step'], coarse)

    def test_refined_channel_keeps_valid_step(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        step = p.period / 40
        channel = refined_channel(p, [from_ns(3.0)], max_step=step)
        self.assertEqual(channel.diagnostics['step'], step)

    def test_batch_application(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        channel = sampled_channel(p, [from_ns(3.0)])
        batch = np.array([projector(basis_state(labels)) for labels in ((0, 0, 0, 1), (1, 1, 0, 0))])
        images = channel.apply(0, batch)
        self.assertEqual(images.shape, (2, 16, 16))
        np.testing.assert_allclose(images[1], channel.apply(0, batch[1]), atol=1e-14)

    def test_select_keeps_requested_samples(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        channel = sampled_channel(p, [0.0, from_ns(1.0), from_ns(2.0)], engine=Engine.FLOQUET)
        subset = channel.select([2])
        self.assertEqual(len(subset), 1)
        np.testing.assert_array_equal(subset.unitaries[0], channel.unitaries[2])

    def test_unsorted_times_rejected(self):
        with self.assertRaises(InvalidTimeGridError):
            sampled_channel(QubitModelParams.table1(1), [from_ns(2.0), from_ns(1.0)])


class DecayHarnessTests(SimpleTestCase):
    def test_relaxation_population(self):
        result = qubit_decay_harness(HarnessKind.RELAXATION, gamma=1.0e6, horizon=5.0e-6, samples=21)
        self.assertLess(result.max_error, 1e-8)
        self.assertAlmostEqual(result.simulated[-1], math.exp(-5.0), places=8)

    def test_dephasing_coherence(self):
        result = qubit_decay_harness('dephasing', gamma=1.0e6, horizon=3.0e-6, samples=31)
        self.assertLess(result.max_error, 1e-8)
        self.assertAlmostEqual(result.analytic[-1], math.exp(-6.0), places=12)

    def test_zero_rate_is_constant(self):
        result = qubit_decay_harness('relaxation', gamma=0.0, horizon=1.0e-6, samples=4)
        np.testing.assert_allclose(result.simulated, 1.0, atol=1e-15)
