import itertools
import math

import numpy as np

from django_zpcover.bounds import (
    aam_lower_bound,
    aam_upper_prior,
    aam_upper_trivial,
    agnostic_boost_bound,
    agnostic_witness,
    bound_report,
    concatenation_set,
    difference_set,
    max_covering_subfamily,
)
from django_zpcover.constructions import base_p_family, bit_lift
from django_zpcover.exceptions import DomainError
from django_zpcover.families import CoverSet, CoveringFamily

from .testcases import ZpCoverTestCase, brute_force_max_covering_subset, random_family

# entries in [0, 3], differences ±1, ±2, ±3
SMALL_RANGE = CoveringFamily(11, [(0, 1), (3, 0), (2, 2)])


class AamBoundTests(ZpCoverTestCase):
    def test_lower_bound(self):
        self.assertEqual(aam_lower_bound(7, 10), 7.0)
        self.assertAlmostEqual(aam_lower_bound(101, 1000), 918.8, delta=0.1)
        self.assertEqual(aam_lower_bound(3, 500), 3.0)
        self.assertEqual(aam_lower_bound(5, 500), 5.0)
        with self.assertRaises(DomainError):
            aam_lower_bound(2, 10)

    def test_trivial_upper_bound(self):
        self.assertEqual(aam_upper_trivial(3, 9), 6)
        self.assertEqual(aam_upper_trivial(3, 27), 9)
        self.assertEqual(aam_upper_trivial(3, 28), 12)
        for p in (2, 3, 13):
            self.assertEqual(aam_upper_trivial(p, 1), p)
        for p, n in ((3, 9), (5, 26), (7, 49)):
            self.assertEqual(aam_upper_trivial(p, n), base_p_family(p, n).ell)

    def test_prior_upper_bound(self):
        self.assertGreater(aam_upper_prior(7, 10), aam_lower_bound(7, 10))
        self.assertAlmostEqual(aam_upper_prior(7, 10**8), 10**8 / math.log2(2 - 1 / math.log2(7)))
        self.assertEqual(aam_upper_prior(2**61 - 1, 10), math.inf)

    def test_report(self):
        report = bound_report(7, log2N=10)
        self.assertEqual(report.lower, 7.0)
        self.assertEqual(report.upper_trivial, 28.0)
        self.assertIsNotNone(report.upper_pipeline)
        self.assertTrue(report.consistent)
        self.assertIn("lower           7.000", report.table())
        self.assertEqual(bound_report(7, N=1024).upper_trivial, 28.0)

    def test_report_consistency(self):
        for p in (7, 11, 101, 1009):
            for log2N in (4, 10, 100, 1000, 10**5):
                with self.subTest(p=p, log2N=log2N):
                    report = bound_report(p, log2N=log2N)
                    self.assertTrue(report.consistent)
                    self.assertLessEqual(report.lower, report.upper_pipeline)
                    self.assertLessEqual(report.lower, report.upper_trivial)

    def test_report_without_pipeline(self):
        report = bound_report(7, N=9)
        self.assertIsNone(report.upper_pipeline)
        self.assertIn("pipeline upper  n/a", report.table())
        self.assertEqual(set(report.to_dict()), {"p", "log2N", "lower", "upper_trivial", "upper_pipeline", "upper_prior", "consistent"})

    def test_report_arguments(self):
        with self.assertRaises(DomainError):
            bound_report(7)
        with self.assertRaises(DomainError):
            bound_report(7, log2N=10, N=1024)
        with self.assertRaises(DomainError):
            bound_report(7, log2N=-1)


class AgnosticConcatenationTests(ZpCoverTestCase):
    def test_boost_bound(self):
        self.assertEqual(agnostic_boost_bound(3, 4, 6), 8.0)
        self.assertEqual(agnostic_boost_bound(2, 1, 8), 1.0)
        with self.assertRaises(DomainError):
            agnostic_boost_bound(0, 1, 1)

    def test_difference_set(self):
        self.assertEqual(difference_set(SMALL_RANGE).elements, (1, 2, 3, 8, 9, 10))
        self.assertEqual(len(difference_set(CoveringFamily(5, [(1, 2)]))), 0)

    def test_witness(self):
        witness = agnostic_witness(SMALL_RANGE, 2, (1, 2), CoverSet.from_elements(11, range(1, 9)))
        self.assertEqual(witness.slot_sets, ((1, 2, 3, 8, 9, 10), (2, 4, 5, 6, 7, 9)))
        self.assertEqual((witness.h, witness.T_h, witness.certified_exponent), (1, (0,), 1))
        self.assertEqual(witness.bound, 2.0)
        self.assertAlmostEqual(witness.draft_bound, 1.6)
        self.assertEqual(witness.to_dict()["slot_sets"], [[1, 2, 3, 8, 9, 10], [2, 4, 5, 6, 7, 9]])

    def test_witness_for_lifted_family(self):
        k = 3
        family = bit_lift(base_p_family(k, 9), 11)
        witness = agnostic_witness(family, k, (1, 1), CoverSet.from_elements(11, range(1, 9)))
        self.assertEqual(witness.bound, 3.0)
        self.assertLessEqual(witness.certified_exponent, witness.bound)
        for slot in witness.slot_sets:
            self.assertLessEqual(len(slot), 4 * k - 1)

    def test_witness_refusals(self):
        sprime = CoverSet.from_elements(11, [1, 2])
        with self.assertRaisesMessage(DomainError, "entry 3 is outside [0, 1]"):
            agnostic_witness(SMALL_RANGE, 1, (1,), sprime)
        with self.assertRaises(DomainError):
            agnostic_witness(SMALL_RANGE, 2, (1, 11), sprime)
        with self.assertRaises(DomainError):
            agnostic_witness(SMALL_RANGE, 2, (1,), CoverSet.from_elements(11, [0, 1]))

    def test_concatenation_set(self):
        family = CoveringFamily(5, [(0, 1), (1, 0), (1, 1)])
        concatenated = concatenation_set(family, (1, 2))
        self.assertEqual((concatenated.size, concatenated.ell), (9, 4))
        self.assertEqual(concatenated[5], (1, 0, 2, 2))
        with self.assertRaises(DomainError):
            concatenation_set(family, (1, 0))
        with self.assertRaises(DomainError):
            concatenation_set(family, ())

    def test_covering_subsets_respect_the_witness(self):
        rng = np.random.default_rng(21)
        for _ in range(40):
            p = int(rng.choice([5, 7, 11, 13]))
            k = int(rng.integers(1, (p - 1) // 2 + 1))
            rows = rng.integers(0, 2 * k, size=(int(rng.integers(1, 5)), int(rng.integers(1, 4))))
            family = CoveringFamily(p, np.unique(rows, axis=0))
            alphas = tuple(int(a) for a in rng.integers(1, p, size=2))
            sprime = CoverSet.from_elements(p, rng.choice(np.arange(1, p), size=int(rng.integers(1, p)), replace=False))
            witness = agnostic_witness(family, k, alphas, sprime)
            for slot in witness.slot_sets:
                self.assertLessEqual(len(slot), 4 * k - 1)

            concatenated = concatenation_set(family, alphas)
            largest = max_covering_subfamily(concatenated, sprime)
            if concatenated.size <= 9:
                self.assertEqual(len(largest), brute_force_max_covering_subset(concatenated, sprime))
            self.assertLessEqual(len(largest), family.size**witness.certified_exponent)

    def test_slot_sets_fit_the_entry_range(self):
        for p in (5, 7, 11, 13):
            for k in range(1, (p - 1) // 2 + 1):
                grid = np.array(list(itertools.product(range(2 * k), repeat=2)), dtype=np.int64)
                for alpha in range(1, p):
                    witness = agnostic_witness(CoveringFamily(p, grid), k, (alpha,), CoverSet.nonzero(p))
                    self.assertEqual(len(witness.slot_sets[0]), min(4 * k - 1, p), (p, k, alpha))

    def test_max_covering_subfamily_against_enumeration(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            family = random_family(rng, 5, 7, 3)
            cover = CoverSet.from_elements(5, rng.choice(5, size=2, replace=False).tolist())
            largest = max_covering_subfamily(family, cover)
            self.assertEqual(len(largest), brute_force_max_covering_subset(family, cover))
            self.assertCovering(CoveringFamily(5, family.vectors[largest]), cover)
