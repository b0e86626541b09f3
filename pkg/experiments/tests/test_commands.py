import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from experiments.acceptance import CHECKS, Check, within
from experiments.models import RunStatus, ScenarioRun
from experiments.output import read_header


class RunCommandTests(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.root = Path(self.directory.name)

    def call(self, *args, **options):
        out = StringIO()
        call_command('run', *args, stdout=out, **options)
        return out.getvalue()

    def test_writes_file_and_ledger(self):
        path = self.root / 'circuit.csv'
        output = self.call('circuit_map', out=str(path), seed=42)
        self.assertIn('circuit_map', output)
        self.assertTrue(path.is_file())

        run = ScenarioRun.objects.get()
        self.assertEqual(run.status, RunStatus.SUCCEEDED)
        self.assertEqual(run.row_count, 1)
        self.assertEqual(run.seed, '42')
        self.assertEqual(run.config_hash, read_header(path)['config_hash'])
        self.assertIsNotNone(run.finished_at)

    def test_config_file(self):
        config = self.root / 'sweep.env'
        config.write_text('sweep=c_c_ff\nstart=900\nstop=1100\npoints=3\n', encoding='utf-8')
        path = self.root / 'sweep.csv'
        self.call('circuit_map', config=str(config), out=str(path))
        header = read_header(path)
        self.assertEqual(header['config']['points'], 3)
        self.assertEqual(header['config']['sweep'], 'c_c_ff')

    def test_rerun_from_header_is_identical(self):
        first = self.root / 'first.csv'
        second = self.root / 'second.csv'
        self.call('circuit_map', out=str(first), seed=7)
        self.call(from_header=str(first), out=str(second))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_header_of_other_scenario(self):
        first = self.root / 'first.csv'
        self.call('circuit_map', out=str(first))
        with self.assertRaises(CommandError) as context:
            self.call('table1', from_header=str(first))
        self.assertEqual(context.exception.returncode, 1)

    def test_unknown_scenario(self):
        with self.assertRaises(CommandError) as context:
            self.call('table2')
        self.assertEqual(context.exception.returncode, 1)

    def test_unknown_config_key(self):
        config = self.root / 'bad.env'
        config.write_text('resistance=5\n', encoding='utf-8')
        with self.assertRaises(CommandError) as context:
            self.call('circuit_map', config=str(config), out=str(self.root / 'bad.csv'))
        self.assertEqual(context.exception.returncode, 1)
        self.assertIn('resistance', str(context.exception))

    def test_failed_run_recorded(self):
        with mock.patch('experiments.runner.write_csv', side_effect=OSError('диск заполнен')):
            with self.assertRaises(CommandError) as context:
                self.call('circuit_map', out=str(self.root / 'x.csv'))
        self.assertEqual(context.exception.returncode, 1)
        run = ScenarioRun.objects.get()
        self.assertEqual(run.status, RunStatus.FAILED)
        self.assertIn('диск заполнен', run.error)


class VerifyCommandTests(TestCase):
    def call(self, *args, **options):
        out = StringIO()
        call_command('verify', *args, stdout=out, **options)
        return out.getvalue()

    def test_table_output(self):
        output = self.call(only=['gate_time_formula'])
        self.assertIn('set1.t_g_predicted_ns', output)
        self.assertIn('gate_time_formula', output)

    def test_json_output(self):
        output = self.call(only=['gate_time_formula', 'analytic_gates'], format='json')
        data = json.loads(output[:output.rindex(']') + 1])
        self.assertEqual([item['name'] for item in data], ['gate_time_formula', 'analytic_gates'])
        self.assertTrue(all(item['passed'] for item in data))

    def test_skip_slow(self):
        output = self.call(only=['gate_time_formula', 'table1'], skip_slow=True)
        self.assertNotIn('set1.f_total', output)

    def test_unknown_check(self):
        with self.assertRaises(CommandError) as context:
            self.call(only=['nothing'])
        self.assertEqual(context.exception.returncode, 1)

    def test_tolerance_failure_exit_code(self):
        failing = Check('failing', "Заведомо вне допуска", False, lambda: [within('x', 1.0, 0.0, 0.1)])
        with mock.patch.dict(CHECKS, {'failing': failing}):
            with self.assertLogs('experiments.runs', level='WARNING'):
                with self.assertRaises(CommandError) as context:
                    self.call(only=['failing'])
        self.assertEqual(context.exception.returncode, 2)
