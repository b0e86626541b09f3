import numpy as np
from django.test import SimpleTestCase, tag

from dynamics.exceptions import InvalidTimeGridError
from dynamics.lindblad import Engine, sampled_channel
from fidelity.exceptions import SearchWindowError
from fidelity.gate_time import (
    CONTROL_ORDER,
    FIDELITY_COLUMNS,
    _quadratic_peak,
    converged_channel,
    fidelity_trace,
    find_gate_time,
)
from fidelity.metrics import average_gate_fidelity, haar_average_fidelity
from qubits.gates import ControlState, gate_time, ideal_diamond_gate
from qubits.params import QubitModelParams
from utils.units import from_ns


class FidelityTraceTests(SimpleTestCase):
    def test_exact_gate_without_control_coupling(self):
        p = QubitModelParams.table1(1, j_c=0.0, gamma=0.0)
        t_g = gate_time(p)
        samples = sampled_channel(p, [0.5 * t_g, t_g], engine=Engine.FLOQUET)
        trace = fidelity_trace(samples, p)
        for name, value in trace.row(1).items():
            self.assertAlmostEqual(value, 1.0, places=10, msg=name)
        self.assertLess(trace.f_total[0], 0.9)

    def test_singlet_fidelity_is_one_under_effective_dynamics(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        t_g = gate_time(p)
        samples = sampled_channel(p, np.linspace(0, 1.2 * t_g, 7), engine=Engine.FLOQUET)
        trace = fidelity_trace(samples, p)
        column = CONTROL_ORDER.index(ControlState.PSI_MINUS)
        np.testing.assert_allclose(trace.f_per_control[:, column], 1.0, atol=1e-10)

    def test_singlet_fidelity_decreases_with_decoherence(self):
        p = QubitModelParams.table1(1, gamma=1.0e6)
        samples = sampled_channel(p, np.linspace(0, from_ns(60.0), 7), engine=Engine.FLOQUET)
        trace = fidelity_trace(samples, p)
        column = CONTROL_ORDER.index(ControlState.PSI_MINUS)
        self.assertTrue(np.all(np.diff(trace.f_per_control[:, column]) < 0))

    def test_row_uses_column_names(self):
        p = QubitModelParams.table1(2, gamma=0.0)
        trace = fidelity_trace(sampled_channel(p, [gate_time(p)], engine=Engine.FLOQUET), p)
        self.assertEqual(tuple(trace.row(0)), FIDELITY_COLUMNS)
        self.assertEqual(trace.max_jump(), 0.0)


class ConvergedChannelTests(SimpleTestCase):
    def test_returns_requested_times(self):
        p = QubitModelParams.table1(2, gamma=0.0)
        times = [from_ns(10.0), from_ns(20.0)]
        channel = converged_channel(p, times)
        np.testing.assert_array_equal(channel.times, times)
        self.assertGreaterEqual(channel.diagnostics['refinements'], 1)
        self.assertEqual(
            channel.diagnostics['converged'], channel.diagnostics['change'] < 1e-5
        )
        self.assertIn('gate_time_fidelity', channel.diagnostics)

    def test_unitary_gate_refines_past_coarse_step(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        t_g = gate_time(p)
        coarse = sampled_channel(p, [t_g], max_step=p.period / 40, enforce=False)
        self.assertIn('valid', coarse.diagnostics)
        channel = converged_channel(p, [t_g])
        self.assertTrue(channel.diagnostics['valid'])
        self.assertLessEqual(channel.diagnostics['refinements'], 4)

    def test_effective_engine_needs_no_refinement(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        channel = converged_channel(p, [gate_time(p)], engine=Engine.FLOQUET)
        self.assertEqual(channel.diagnostics['refinements'], 0)
        self.assertTrue(channel.diagnostics['converged'])


class QuadraticPeakTests(SimpleTestCase):
    def test_vertex_of_parabola(self):
        times = np.linspace(0.0, 1.0, 11)
        values = 1.0 - (times - 0.43) ** 2
        self.assertAlmostEqual(_quadratic_peak(times, values), 0.43, places=10)

    def test_isolated_spike_does_not_bend_fit(self):
        times = np.linspace(0.0, 1.0, 11)
        values = 1.0 - (times - 0.43) ** 2
        values[9] = 0.998
        self.assertAlmostEqual(_quadratic_peak(times, values), 0.43, places=10)

    def test_maximum_at_edge(self):
        times = np.linspace(0.0, 1.0, 5)
        self.assertIsNone(_quadratic_peak(times, times))

    def test_no_maximum(self):
        times = np.linspace(0.0, 1.0, 5)
        self.assertIsNone(_quadratic_peak(times, np.zeros(5)))


class FindGateTimeTests(SimpleTestCase):
    def test_peak_at_prediction_without_control_coupling(self):
        p = QubitModelParams.table1(1, j_c=0.0, gamma=0.0)
        result = find_gate_time(p, engine=Engine.FLOQUET)
        self.assertFalse(result.at_boundary)
        self.assertAlmostEqual(result.t_g_simulated / result.t_g_predicted, 1.0, places=6)
        self.assertAlmostEqual(result.f_total, 1.0, places=9)
        self.assertEqual(len(result.trace), 61)

    def test_coarse_grid_size_enforced(self):
        with self.assertRaises(InvalidTimeGridError):
            find_gate_time(QubitModelParams.table1(1), points=20)

    def test_window_checked(self):
        with self.assertRaises(InvalidTimeGridError):
            find_gate_time(QubitModelParams.table1(1), window=1.5)

    def test_boundary_error_message(self):
        error = SearchWindowError(5.0e-8, (5.0e-8, 7.0e-8))
        self.assertIn('границе', str(error))
        self.assertEqual(error.to_dict()['boundary_time'], 5.0e-8)


@tag('slow')
class GateTimeReproductionTests(SimpleTestCase):
    def test_set_one_gate(self):
        p = QubitModelParams.table1(1)
        result = find_gate_time(p)
        self.assertFalse(result.at_boundary)
        self.assertLess(abs(result.t_g_simulated / result.t_g_predicted - 1), 0.05)
        self.assertGreater(result.fidelities['f_psi_minus'], 0.99)
        self.assertLess(abs(result.fidelities['f_00'] - result.fidelities['f_11']), 0.003)
        self.assertLess(result.trace.max_jump(), 0.05)

    def test_unitary_gate_search_on_rotating_engine(self):
        p = QubitModelParams.table1(1, gamma=0.0)
        result = find_gate_time(p)
        self.assertFalse(result.at_boundary)
        self.assertTrue(result.diagnostics['valid'])
        self.assertGreater(result.fidelities['f_psi_minus'], 0.99)

    def test_engines_agree_at_gate_time(self):
        p = QubitModelParams.table1(1)
        t_g = gate_time(p)
        target = ideal_diamond_gate(t_g, p)
        rotating = sampled_channel(p, [t_g])
        effective = sampled_channel(p, [t_g], engine=Engine.FLOQUET)
        difference = (average_gate_fidelity(rotating.channel(0), target, 16)
                      - average_gate_fidelity(effective.channel(0), target, 16))
        self.assertLess(abs(difference), 3e-3)

    def test_haar_oracle_on_lindblad_channel(self):
        p = QubitModelParams.table1(1)
        t_g = gate_time(p)
        target = ideal_diamond_gate(t_g, p)
        channel = sampled_channel(p, [t_g]).channel(0)
        expected = average_gate_fidelity(channel, target, 16)
        mean, error = haar_average_fidelity(channel, target, 16, samples=2000, seed=2024)
        self.assertLess(abs(mean - expected), 4 * error)
