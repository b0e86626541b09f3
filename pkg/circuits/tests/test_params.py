import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from circuits.exceptions import InvalidCircuitParameterError
from circuits.params import CircuitParams
from circuits.tests.test_capacitance import circuit
from utils.units import from_femtofarad, from_ghz

CIRCUIT_FILE = """\
# схема из примера
c_ff=5
c_prime_ff=2
c_t_ff=80
c_c_ff=1000
e_jt_ghz=44
e_jc_ghz=317
"""


class CircuitParamsTests(SimpleTestCase):
    def test_validation(self):
        with self.assertRaises(InvalidCircuitParameterError):
            circuit(c=0.0)
        with self.assertRaises(InvalidCircuitParameterError):
            circuit(c_prime=-1.0)
        with self.assertRaises(InvalidCircuitParameterError):
            circuit(e_j_t=float('inf'))

    def test_direct_capacitance_may_vanish(self):
        self.assertEqual(circuit(c_prime=0.0).c_prime, 0.0)

    def test_weak_coupling_flag(self):
        self.assertTrue(circuit().is_weakly_coupled)
        self.assertFalse(circuit(c_t=30.0).is_weakly_coupled)

    def test_mapping_units(self):
        cp = CircuitParams.from_mapping({
            'c_ff': '5', 'c_prime_ff': '2', 'c_t_ff': '80',
            'c_c_ff': '1000', 'e_jt_ghz': '44', 'e_jc_ghz': '317',
        })
        self.assertEqual(cp.c_c, from_femtofarad(1000))
        self.assertEqual(cp.e_j_t, from_ghz(44))
        self.assertAlmostEqual(cp.to_mapping()['c_t_ff'], 80.0)


class CircuitFileTests(SimpleTestCase):
    def write(self, directory, text):
        path = Path(directory) / 'circuit.env'
        path.write_text(text, encoding='utf-8')
        return path

    def test_reads_file(self):
        with tempfile.TemporaryDirectory() as directory:
            cp = CircuitParams.from_file(self.write(directory, CIRCUIT_FILE))
        self.assertEqual(cp, circuit())

    def test_unknown_key(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, CIRCUIT_FILE + 'l_nh=3\n')
            with self.assertRaises(InvalidCircuitParameterError):
                CircuitParams.from_file(path)

    def test_missing_key(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, CIRCUIT_FILE.replace('e_jc_ghz=317\n', ''))
            with self.assertRaises(InvalidCircuitParameterError):
                CircuitParams.from_file(path)

    def test_not_a_number(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, CIRCUIT_FILE.replace('c_ff=5', 'c_ff=five'))
            with self.assertRaises(InvalidCircuitParameterError):
                CircuitParams.from_file(path)

    def test_missing_file(self):
        with self.assertRaises(InvalidCircuitParameterError):
            CircuitParams.from_file('/nonexistent/circuit.env')
