import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from operators.algebra import SIGMA_Y, is_hermitian
from qutrits.exceptions import InvalidQutritParameterError
from qutrits.operators import (
    oscillator_amplitudes,
    operator_set,
    qutrit_sigma_y,
    qutrit_sigma_z,
    t_coefficients,
)
from qutrits.params import QutritModelParams, anharmonicity
from utils.units import from_ghz, from_mhz


class TCoefficientTests(SimpleTestCase):
    def test_harmonic_limit(self):
        levels = t_coefficients(1.0, -1e-4)
        self.assertAlmostEqual(levels.t0, 1.0, places=3)
        self.assertAlmostEqual(levels.t2, math.sqrt(2.0), places=3)
        self.assertLess(abs(levels.omega_0), 1e-6)

    def test_level_spacings(self):
        omega, alpha = from_ghz(7.0), -2.7e8
        levels = t_coefficients(omega, alpha)
        self.assertAlmostEqual((levels.omega_1 - levels.omega_0) / omega, 1.0, places=12)
        self.assertAlmostEqual((levels.omega_2 - levels.omega_1 - omega - alpha) / omega, 0.0, places=12)

    def test_swap_scenario_control_coefficients(self):
        levels = t_coefficients(from_ghz(7.0), -2.7e8)
        self.assertAlmostEqual(levels.t2, 1.416, delta=1e-3)
        self.assertTrue(0.9 < levels.t0 < 1.05)
        self.assertTrue(1.3 < levels.t2 < 1.45)

    def test_domain_checked(self):
        for omega, alpha in ((1.0, 0.0), (1.0, 0.1), (-1.0, -0.1), (1.0, -1.5)):
            with self.assertRaises(InvalidQutritParameterError):
                t_coefficients(omega, alpha)


class QutritOperatorTests(SimpleTestCase):
    def test_sigma_z_diagonal(self):
        np.testing.assert_allclose(np.diag(qutrit_sigma_z(1.0, -0.05)), [1.0, -1.0, -2.9])

    def test_sigma_y_hermitian_with_zero_diagonal(self):
        sigma = qutrit_sigma_y(0.99, 1.41)
        self.assertTrue(is_hermitian(sigma))
        np.testing.assert_array_equal(np.diag(sigma), 0)

    def test_qubit_block_reduces_to_pauli_y(self):
        ops = operator_set(from_ghz(7.0), -2.7e8)
        np.testing.assert_allclose(ops.sigma_y[:2, :2] / ops.levels.t0, SIGMA_Y, atol=1e-15)

    def test_raising_part(self):
        ops = operator_set(1.0, -0.05)
        np.testing.assert_allclose(ops.raising + ops.raising.conj().T, ops.sigma_y, atol=1e-15)
        np.testing.assert_array_equal(np.triu(ops.raising), 0)


class OscillatorAmplitudeTests(SimpleTestCase):
    def test_orthonormal(self):
        amplitudes = oscillator_amplitudes(1.0, -0.05)
        np.testing.assert_allclose(amplitudes @ amplitudes.T, np.eye(3), atol=1e-12)

    def test_eigenstates_of_truncated_oscillator(self):
        omega, alpha = 1.0, -0.05
        e_c = -alpha
        plasma = 1.5 * e_c + math.sqrt((omega - 0.5 * e_c) ** 2 - 0.5 * e_c ** 2)
        h = np.diag([0.0, plasma - e_c, 2 * plasma - 3 * e_c])
        h[0, 2] = h[2, 0] = -e_c / math.sqrt(2.0)

        levels = t_coefficients(omega, alpha)
        amplitudes = oscillator_amplitudes(omega, alpha)
        np.testing.assert_allclose(
            amplitudes @ h @ amplitudes.T,
            np.diag([levels.omega_0, levels.omega_1, levels.omega_2]),
            atol=1e-12,
        )


class QutritParamsTests(SimpleTestCase):
    def test_transmon_regime_enforced(self):
        with self.assertRaises(InvalidQutritParameterError):
            QutritModelParams.swap_scenario(alpha_c=1e8)
        with self.assertRaises(InvalidQutritParameterError):
            QutritModelParams.swap_scenario(alpha_t=-0.3 * from_ghz(9.0))
        with self.assertRaises(InvalidQutritParameterError):
            QutritModelParams.swap_scenario(j=float('nan'))

    def test_angular_reading_of_anharmonicity(self):
        self.assertEqual(anharmonicity(-270.0, 'angular'), -2.7e8)
        self.assertAlmostEqual(anharmonicity(-270.0, 'cyclic'), from_mhz(-270.0))

    @override_settings(DIAMONDSIM_ALPHA_UNIT='cyclic')
    def test_alpha_unit_from_settings(self):
        self.assertAlmostEqual(QutritModelParams.swap_scenario().alpha_c, from_mhz(-270.0))

    def test_unknown_alpha_unit(self):
        with self.assertRaises(InvalidQutritParameterError):
            anharmonicity(-270.0, 'kelvin')
