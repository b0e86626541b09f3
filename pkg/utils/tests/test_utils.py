import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from utils.parallel import map_points
from utils.performance import timed
from utils.rng import MAX_SEED, point_generator, validate_seed
from utils.units import (
    from_femtofarad, from_ghz, from_mhz, from_ns, rate_from_mhz, to_femtofarad, to_ghz, to_mhz, to_ns,
)


def _square(value):
    return value * value


class UnitsTests(SimpleTestCase):
    def test_frequencies_carry_two_pi(self):
        self.assertAlmostEqual(from_mhz(1.0), 2 * math.pi * 1e6)
        self.assertAlmostEqual(from_ghz(5.0) / from_mhz(5000.0), 1.0, places=12)
        self.assertAlmostEqual(to_mhz(from_mhz(-3.66)), -3.66, places=12)
        self.assertAlmostEqual(to_ghz(from_ghz(2.0)), 2.0, places=12)

    def test_rates_have_no_two_pi(self):
        self.assertEqual(rate_from_mhz(0.01), 1e4)

    def test_time_and_capacitance(self):
        self.assertAlmostEqual(to_ns(from_ns(59.3)), 59.3, places=9)
        self.assertAlmostEqual(from_femtofarad(80.0), 8e-14)
        self.assertAlmostEqual(to_femtofarad(from_femtofarad(1000.0)), 1000.0, places=9)


class RngTests(SimpleTestCase):
    def test_seed_range(self):
        self.assertEqual(validate_seed('20240101'), 20240101)
        self.assertEqual(validate_seed(MAX_SEED), MAX_SEED)
        for seed in (-1, MAX_SEED + 1):
            with self.assertRaises(ValueError):
                validate_seed(seed)

    def test_stream_depends_only_on_key(self):
        first = point_generator(7, 3, stream=2).standard_normal(4)
        again = point_generator(7, 3, stream=2).standard_normal(4)
        np.testing.assert_array_equal(first, again)

    def test_streams_are_distinct(self):
        base = point_generator(7, 3, stream=0).standard_normal(4)
        for other in (point_generator(7, 4, 0), point_generator(7, 3, 1), point_generator(8, 3, 0)):
            self.assertFalse(np.array_equal(base, other.standard_normal(4)))


class MapPointsTests(SimpleTestCase):
    def test_serial(self):
        self.assertEqual(map_points(_square, [1, 2, 3], workers=1), [1, 4, 9])

    def test_pool_keeps_input_order(self):
        items = list(range(12))
        self.assertEqual(map_points(_square, items, workers=3), [item * item for item in items])

    def test_empty(self):
        self.assertEqual(map_points(_square, [], workers=4), [])


class TimedTests(SimpleTestCase):
    @override_settings(DIAMONDSIM_SLOW_CALL_SECONDS=0.0)
    def test_slow_call_logged(self):
        with self.assertLogs('diamondsim.performance', level='WARNING') as logs:
            self.assertEqual(timed(_square)(4), 16)
        self.assertIn('_square', logs.output[0])
