import math

from django.test import override_settings

from django_zpcover.exceptions import BudgetExceeded, DomainError
from django_zpcover.prophet import (
    ProphetInstance,
    gambler_optimal_value,
    gap_report,
    prophet_expected_reward,
    simulate_mc,
)
from django_zpcover.run_context import RunContext

from .testcases import ZpCoverTestCase, brute_force_gambler, brute_force_prophet

SMALL = [(2, 1), (2, 3), (3, 2), (3, 4), (4, 2), (2, 6), (4, 3), (6, 2)]


class ProphetInstanceTests(ZpCoverTestCase):
    def test_validation(self):
        with self.assertRaises(DomainError):
            ProphetInstance(1, 3)
        with self.assertRaises(DomainError):
            ProphetInstance(3, 0)

    def test_full_instance(self):
        self.assertTrue(ProphetInstance(2, 4).is_full_instance())
        self.assertTrue(ProphetInstance(3, 27).is_full_instance())
        self.assertFalse(ProphetInstance(3, 26).is_full_instance())
        self.assertFalse(ProphetInstance(11, 5).is_full_instance())


class ExactValueTests(ZpCoverTestCase):
    def test_single_clique(self):
        for p in (2, 3, 7, 50):
            self.assertAlmostEqual(prophet_expected_reward(ProphetInstance(p, 1)), 1.0, places=12)
            self.assertAlmostEqual(gambler_optimal_value(ProphetInstance(p, 1)), 1.0, places=12)

    def test_prophet_closed_form(self):
        expected = 3 - sum((count / 27) ** 27 for count in (8, 20, 26))
        value = prophet_expected_reward(ProphetInstance(3, 27))
        self.assertAlmostEqual(value, expected, delta=1e-12)
        self.assertGreaterEqual(value, (1 - 1 / math.e) * 3)

    def test_against_enumeration(self):
        for p, r in SMALL:
            with self.subTest(p=p, r=r):
                instance = ProphetInstance(p, r)
                self.assertAlmostEqual(prophet_expected_reward(instance), brute_force_prophet(p, r), delta=1e-12)
                self.assertAlmostEqual(gambler_optimal_value(instance), brute_force_gambler(p, r), delta=1e-12)

    def test_gambler_examples(self):
        self.assertEqual(gambler_optimal_value(ProphetInstance(2, 1)), 1.0)
        for p, r in ((2, 100), (3, 27), (5, 3125), (11, 10_000)):
            self.assertLessEqual(gambler_optimal_value(ProphetInstance(p, r)), 2.0)

    def test_monotone_in_r(self):
        for p in (2, 3, 5):
            prophets = [prophet_expected_reward(ProphetInstance(p, r)) for r in range(1, 30)]
            gamblers = [gambler_optimal_value(ProphetInstance(p, r)) for r in range(1, 30)]
            self.assertEqual(prophets, sorted(prophets))
            self.assertEqual(gamblers, sorted(gamblers))
            for prophet, gambler in zip(prophets, gamblers):
                self.assertLessEqual(gambler, prophet + 1e-12)

    @override_settings(ZPCOVER_CONFIG={"PROPHET_EXACT_BUDGET": 100})
    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            gambler_optimal_value(ProphetInstance(3, 40))
        with self.assertRaises(BudgetExceeded):
            gap_report(3, 40)


class MonteCarloTests(ZpCoverTestCase):
    def test_deterministic(self):
        instance = ProphetInstance(3, 4)
        self.assertEqual(simulate_mc(instance, 5000, seed=7), simulate_mc(instance, 5000, seed=7))
        self.assertNotEqual(simulate_mc(instance, 5000, seed=7), simulate_mc(instance, 5000, seed=8))

    @override_settings(ZPCOVER_CONFIG={"MC_CHUNK": 1000})
    def test_independent_of_threads(self):
        instance = ProphetInstance(3, 4)
        with RunContext.use_config(threads=1):
            serial = simulate_mc(instance, 5500, seed=3)
        with RunContext.use_config(threads=4):
            parallel = simulate_mc(instance, 5500, seed=3)
        self.assertEqual(serial, parallel)
        self.assertEqual(serial[0].samples, 5500)

    @override_settings(ZPCOVER_CONFIG={"MC_CHUNK": 1000})
    def test_chunk_budget_counts_float_draws(self):
        instance = ProphetInstance(3, 4)
        with RunContext.use_config(memory_budget=9 * 1000 * instance.elements - 1):
            with self.assertRaises(BudgetExceeded):
                simulate_mc(instance, 1000, seed=1)
        with RunContext.use_config(memory_budget=9 * 1000 * instance.elements):
            self.assertEqual(simulate_mc(instance, 1000, seed=1)[0].samples, 1000)

    def test_estimate_fields(self):
        prophet, gambler = simulate_mc(ProphetInstance(2, 4), 100, seed=1)
        self.assertEqual(prophet.to_dict(), {"mean": prophet.mean, "half_width": prophet.half_width, "samples": 100, "seed": 1})
        self.assertLessEqual(gambler.mean, 2.0)

    def test_intervals_cover_exact_values(self):
        instance = ProphetInstance(3, 4)
        prophet_exact = prophet_expected_reward(instance)
        gambler_exact = gambler_optimal_value(instance)
        trials = 1000
        prophet_hits = gambler_hits = 0
        for seed in range(trials):
            prophet, gambler = simulate_mc(instance, 4000, seed=seed)
            prophet_hits += prophet.contains(prophet_exact)
            gambler_hits += gambler.contains(gambler_exact)
        self.assertGreaterEqual(prophet_hits, 0.93 * trials)
        self.assertGreaterEqual(gambler_hits, 0.93 * trials)


class GapReportTests(ZpCoverTestCase):
    def test_full_instance(self):
        report = gap_report(3, 27)
        self.assertGreaterEqual(report.ratio, (1 - 1 / math.e) * 3 / 2)
        self.assertAlmostEqual(report.bounds["ratio_lb"], 0.9482, places=4)
        self.assertTrue(report.bound_holds)
        self.assertTrue(report.passed)
        self.assertIn("pass", report.table())

    def test_smallest_full_instance(self):
        report = gap_report(2, 4)
        self.assertAlmostEqual(report.bounds["ratio_lb"], 1 - 1 / math.e)
        self.assertAlmostEqual(report.bounds["prophet_lb"], 2 * (1 - 1 / math.e))
        self.assertTrue(report.bound_holds)

    def test_single_clique(self):
        report = gap_report(5, 1)
        self.assertAlmostEqual(report.ratio, 1.0)
        self.assertIsNone(report.bounds["ratio_lb"])
        self.assertIsNone(report.bound_holds)
        self.assertEqual(report.bounds["gambler_ub"], 2.0)
        self.assertTrue(report.passed)

    def test_monte_carlo_attached(self):
        report = gap_report(2, 4, mc_samples=2000, seed=5)
        self.assertEqual(report.prophet_mc.samples, 2000)
        self.assertEqual(report.gambler_mc.seed, 5)
        self.assertEqual(set(report.to_dict()), {
            "p", "r", "prophet_exact", "gambler_exact", "ratio", "bounds",
            "bound_holds", "prophet_mc", "gambler_mc",
        })
        self.assertIsNone(gap_report(2, 4).prophet_mc)
