import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from experiments.config import (
    ConfigKey,
    choice,
    optional,
    parse_bool,
    parse_float,
    parse_int,
    parse_int_list,
    read_config_file,
    resolve_config,
)
from experiments.exceptions import ScenarioConfigError

KEYS = (
    ConfigKey('gamma_mhz', parse_float, 0.01),
    ConfigKey('points', parse_int, 11),
    ConfigKey('engine', choice('rotating', 'floquet'), 'rotating'),
    ConfigKey('start', optional(parse_float), None),
)


class ParserTests(SimpleTestCase):
    def test_float(self):
        self.assertEqual(parse_float('0.05'), 0.05)
        with self.assertRaises(ValueError):
            parse_float(True)

    def test_int_accepts_integral_floats(self):
        self.assertEqual(parse_int(' 40 '), 40)
        self.assertEqual(parse_int(3.0), 3)
        with self.assertRaises(ValueError):
            parse_int(2.5)
        with self.assertRaises(ValueError):
            parse_int('2.5')

    def test_bool(self):
        self.assertTrue(parse_bool('Yes'))
        self.assertFalse(parse_bool('0'))
        with self.assertRaises(ValueError):
            parse_bool('maybe')

    def test_int_list(self):
        self.assertEqual(parse_int_list('1, 2'), [1, 2])
        self.assertEqual(parse_int_list([2]), [2])
        with self.assertRaises(ValueError):
            parse_int_list('')

    def test_choice(self):
        parse = choice('rotating', 'floquet')
        self.assertEqual(parse(' floquet'), 'floquet')
        with self.assertRaises(ValueError):
            parse('exact')

    def test_optional(self):
        parse = optional(parse_float)
        self.assertIsNone(parse(''))
        self.assertIsNone(parse(None))
        self.assertEqual(parse('2'), 2.0)


class ResolveConfigTests(SimpleTestCase):
    def test_defaults(self):
        config = resolve_config('demo', KEYS)
        self.assertEqual(config.params, {'gamma_mhz': 0.01, 'points': 11, 'engine': 'rotating', 'start': None})
        self.assertEqual(config.workers, 1)

    @override_settings(DIAMONDSIM_SEED=7, DIAMONDSIM_RESULTS_DIR=Path('/tmp/results'))
    def test_seed_and_output_from_settings(self):
        config = resolve_config('demo', KEYS)
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.out, Path('/tmp/results/demo.csv'))

    def test_file_then_flags(self):
        config = resolve_config(
            'demo', KEYS, {'points': '5', 'seed': '3', 'workers': '4'}, seed=9, out='x.csv'
        )
        self.assertEqual(config['points'], 5)
        self.assertEqual(config.seed, 9)
        self.assertEqual(config.workers, 4)
        self.assertEqual(config.out, Path('x.csv'))

    def test_unknown_key_rejected(self):
        with self.assertRaises(ScenarioConfigError) as context:
            resolve_config('demo', KEYS, {'pionts': '5'})
        self.assertEqual(context.exception.key, 'pionts')

    def test_bad_value_rejected(self):
        with self.assertRaises(ScenarioConfigError) as context:
            resolve_config('demo', KEYS, {'engine': 'exact'})
        self.assertIn('engine', str(context.exception))

    def test_seed_range(self):
        with self.assertRaises(ScenarioConfigError):
            resolve_config('demo', KEYS, seed=-1)
        with self.assertRaises(ScenarioConfigError):
            resolve_config('demo', KEYS, seed=2 ** 64)
        self.assertEqual(resolve_config('demo', KEYS, seed=2 ** 64 - 1).seed, 2 ** 64 - 1)

    def test_workers_must_be_positive(self):
        with self.assertRaises(ScenarioConfigError):
            resolve_config('demo', KEYS, workers=0)


class ConfigHashTests(SimpleTestCase):
    def test_hash_ignores_workers_and_output(self):
        a = resolve_config('demo', KEYS, seed=1, workers=1, out='a.csv')
        b = resolve_config('demo', KEYS, seed=1, workers=3, out='b.csv')
        self.assertEqual(a.config_hash, b.config_hash)
        self.assertEqual(len(a.config_hash), 64)

    def test_hash_follows_parameters_and_seed(self):
        base = resolve_config('demo', KEYS, seed=1)
        self.assertNotEqual(base.config_hash, resolve_config('demo', KEYS, {'points': 12}, seed=1).config_hash)
        self.assertNotEqual(base.config_hash, resolve_config('demo', KEYS, seed=2).config_hash)

    def test_canonical_config_is_sorted(self):
        canonical = resolve_config('demo', KEYS, seed=1).canonical()
        self.assertEqual(list(canonical['config']), sorted(canonical['config']))


class ConfigFileTests(SimpleTestCase):
    def write(self, directory, text):
        path = Path(directory) / 'scenario.env'
        path.write_text(text, encoding='utf-8')
        return path

    def test_reads_lowercase_keys(self):
        with tempfile.TemporaryDirectory() as directory:
            values = read_config_file(self.write(directory, "# свип\nPOINTS=5\nengine=floquet\n"))
        self.assertEqual(values, {'points': '5', 'engine': 'floquet'})

    def test_key_without_value(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, "points\n")
            with self.assertRaises(ScenarioConfigError):
                read_config_file(path)

    def test_missing_file(self):
        with self.assertRaises(ScenarioConfigError):
            read_config_file('/nonexistent/scenario.env')
