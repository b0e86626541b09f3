from django.test import SimpleTestCase, tag

from dynamics.lindblad import Engine
from fidelity.gate_time import FIDELITY_COLUMNS
from fidelity.symmetry import SYMMETRY_TOLERANCE, j_c_sign_symmetry, mirrored_params
from qubits.params import QubitModelParams


class MirroredParamsTests(SimpleTestCase):
    def test_flips_three_signs(self):
        p = QubitModelParams.table1(1, j_t=1.0e6)
        mirrored = mirrored_params(p)
        self.assertEqual((mirrored.j_c, mirrored.delta, mirrored.j_t), (-p.j_c, -p.delta, -p.j_t))
        self.assertEqual((mirrored.j, mirrored.gamma, mirrored.omega), (p.j, p.gamma, p.omega))


class SignSymmetryTests(SimpleTestCase):
    def test_joint_reflection_is_exact_under_effective_dynamics(self):
        result = j_c_sign_symmetry(QubitModelParams.table1(1, gamma=0.0), engine=Engine.FLOQUET)
        self.assertLess(result.joint_difference, SYMMETRY_TOLERANCE)
        self.assertTrue(result.is_symmetric)

    def test_reports_all_columns(self):
        result = j_c_sign_symmetry(QubitModelParams.table1(2), engine=Engine.FLOQUET)
        for variant in (result.reference, result.joint, result.j_c_only):
            self.assertEqual(tuple(variant), FIDELITY_COLUMNS)
        self.assertGreaterEqual(result.j_c_difference, 0.0)


@tag('slow')
class RotatingFrameSignSymmetryTests(SimpleTestCase):
    def test_joint_reflection_with_decoherence(self):
        result = j_c_sign_symmetry(QubitModelParams.table1(1))
        self.assertLess(result.joint_difference, SYMMETRY_TOLERANCE)
