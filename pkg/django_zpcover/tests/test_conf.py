import os

from django.apps import apps
from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings

from django_zpcover.bootstrap import _BootStrapper
from django_zpcover.conf import settings
from django_zpcover.constants import constants
from django_zpcover.exceptions import DomainError
from django_zpcover.run_context import RunConfig, RunContext


class SettingsTests(SimpleTestCase):
    def test_configured_values(self):
        self.assertEqual(settings.SEED, 0)
        self.assertEqual(settings.THREADS, 1)
        self.assertEqual(settings.MEMORY_BUDGET, 1 << 28)

    @override_settings(ZPCOVER_CONFIG={})
    def test_defaults(self):
        self.assertEqual(settings.MEMORY_BUDGET, 1 << 30)
        self.assertEqual(settings.THREADS, os.cpu_count() or 1)
        self.assertEqual(settings.OUTPUT_FORMAT, "text")
        self.assertEqual(settings.SCALING_SET_ATTEMPTS, 64)
        self.assertEqual(settings.PERMUTATION_LIMIT, 8)
        self.assertEqual(settings.MATROID_SUBSET_LIMIT, 12)
        self.assertEqual(settings.PROPHET_EXACT_BUDGET, 10_000_000)
        self.assertEqual(settings.MC_CHUNK, 65_536)

    def test_override_is_observed(self):
        self.assertEqual(settings.SEED, 0)
        with override_settings(ZPCOVER_CONFIG={"SEED": 42}):
            self.assertEqual(settings.SEED, 42)
        self.assertEqual(settings.SEED, 0)

    def test_django_settings_pass_through(self):
        self.assertEqual(settings.INSTALLED_APPS, ["django_zpcover"])

    def test_constants(self):
        self.assertIn(constants.MEMORY_BUDGET, constants.CONFIG_KEYS)
        self.assertEqual(constants.OUTPUT_FORMATS, ("text", "json"))


class BootStrapperTests(SimpleTestCase):
    def assertRejected(self, config, fragment):
        with override_settings(ZPCOVER_CONFIG=config):
            with self.assertRaisesMessage(ImproperlyConfigured, fragment):
                _BootStrapper().run()

    def test_app_is_ready(self):
        self.assertEqual(apps.get_app_config("django_zpcover").name, "django_zpcover")

    def test_valid_configurations(self):
        for config in ({}, {"SEED": 0, "THREADS": None}, {"THREADS": 8, "OUTPUT_FORMAT": "json"}):
            with override_settings(ZPCOVER_CONFIG=config):
                _BootStrapper().run()

    def test_rejections(self):
        self.assertRejected({"SEEDS": 1}, "Unknown ZPCOVER_CONFIG keys ['SEEDS']")
        self.assertRejected({"MEMORY_BUDGET": 0}, "ZPCOVER_CONFIG['MEMORY_BUDGET'] must be an integer ≥ 1")
        self.assertRejected({"SEED": -1}, "ZPCOVER_CONFIG['SEED'] must be an integer ≥ 0")
        self.assertRejected({"MC_SAMPLES": True}, "ZPCOVER_CONFIG['MC_SAMPLES']")
        self.assertRejected({"THREADS": 0}, "must be a positive integer or None")
        self.assertRejected({"OUTPUT_FORMAT": "yaml"}, "ZPCOVER_CONFIG['OUTPUT_FORMAT'] must be one of")
        self.assertRejected([("SEED", 1)], "ZPCOVER_CONFIG must be a dict")


class RunContextTests(SimpleTestCase):
    def test_from_settings(self):
        self.assertEqual(RunContext.get_config(), RunConfig(seed=0, memory_budget=1 << 28, threads=1))

    def test_nesting(self):
        with RunContext.use_config(RunConfig(seed=7, threads=2)) as outer:
            self.assertEqual(outer.seed, 7)
            with RunContext.use_config(seed=9, threads=None) as inner:
                self.assertEqual((inner.seed, inner.threads), (9, 2))
            self.assertEqual(RunContext.get_config(), outer)
        self.assertEqual(RunContext.get_config().seed, 0)

    def test_pop_on_empty_stack(self):
        RunContext.pop_config()
        self.assertEqual(RunContext.get_config().seed, 0)

    def test_validation(self):
        for changes in ({"seed": -1}, {"seed": 1 << 64}, {"memory_budget": 0}, {"threads": 0}, {"output_format": "xml"}):
            with self.assertRaises(DomainError):
                RunConfig(**changes)
