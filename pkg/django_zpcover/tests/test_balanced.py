import itertools
import math

import numpy as np

from django_zpcover.balanced import (
    aa_iterate,
    balanced_size,
    base_family_A0,
    enumerate_balanced,
    multiset_permutations,
    star_partition,
    step_boost,
    target_cover,
    targeted_permutation,
)
from django_zpcover.exceptions import BudgetExceeded, CoverageError, DomainError
from django_zpcover.families import CoverSet, CoveringFamily, append_zeros
from django_zpcover.signals import iteration_step_completed

from .testcases import ZpCoverTestCase

ONE = {p: CoverSet.from_elements(p, [1]) for p in (3, 5, 7)}


class BalancedWordTests(ZpCoverTestCase):
    def test_multiset_permutations(self):
        self.assertEqual(list(multiset_permutations([2, 1, 1])), [(1, 1, 2), (1, 2, 1), (2, 1, 1)])
        for letters in ([3, 1, 2, 1, 3], [4, 4, 4, 1], [2, 1, 3, 4]):
            expected = sorted(set(itertools.permutations(letters)))
            self.assertEqual(list(multiset_permutations(letters)), expected)
            self.assertEqual(len(expected), math.factorial(len(letters)) // math.prod(math.factorial(letters.count(x)) for x in set(letters)))

    def test_examples(self):
        self.assertEqual(enumerate_balanced(3, 2).family.rows(), [(1, 2), (2, 1)])
        self.assertEqual(enumerate_balanced(3, 4).size, 6)
        with self.assertRaises(DomainError):
            enumerate_balanced(3, 3)

    def test_size_formula_and_letter_counts(self):
        for p, ell in ((3, 6), (5, 4), (5, 8), (7, 6)):
            words = enumerate_balanced(p, ell)
            self.assertEqual(words.size, balanced_size(p, ell))
            self.assertEqual(words.size, math.factorial(ell) // math.factorial(ell // (p - 1)) ** (p - 1))
            for value in range(1, p):
                self.assertTrue(((words.vectors == value).sum(axis=1) == ell // (p - 1)).all())
            self.assertFalse((words.vectors == 0).any())
            rows = words.family.rows()
            self.assertEqual(rows, sorted(rows))

    def test_closed_under_scaling(self):
        for p, ell in ((5, 4), (7, 6), (3, 6)):
            words = enumerate_balanced(p, ell)
            members = set(words.family.rows())
            for a in range(1, p):
                scaled = {tuple(int(x) for x in row) for row in (words.vectors * a) % p}
                self.assertEqual(scaled, members)
                self.assertEqual(sorted(words.scaled_indices(a).tolist()), list(range(words.size)))

    def test_scaling_by_zero_is_refused(self):
        with self.assertRaises(DomainError):
            enumerate_balanced(5, 4).scaled_indices(5)

    def test_index_of_rejects_strangers(self):
        with self.assertRaises(DomainError):
            enumerate_balanced(3, 2).index_of(np.array([[1, 1]]))


class BaseFamilyTests(ZpCoverTestCase):
    def test_examples(self):
        self.assertEqual(base_family_A0(3, 2).rows(), [(1, 2), (2, 1)])
        self.assertEqual(base_family_A0(3, 4).size, math.comb(4, 2))
        family = base_family_A0(5, 4)
        self.assertEqual(family.size, 4)
        self.assertEqual(family.rows(), [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 3, 4), (2, 1, 4, 3)])
        self.assertCovering(family, ONE[5])

    def test_is_a_covering_subset_of_the_balanced_words(self):
        for p, ell0 in ((3, 6), (5, 8), (7, 6)):
            family = base_family_A0(p, ell0)
            block = 2 * ell0 // (p - 1)
            self.assertEqual(family.size, math.comb(block, block // 2) ** ((p - 1) // 2))
            enumerate_balanced(p, ell0).index_of(family.vectors)
            self.assertCovering(family, ONE[p])

    def test_invalid_length(self):
        with self.assertRaises(DomainError):
            base_family_A0(5, 6)


class StarPartitionTests(ZpCoverTestCase):
    def test_single_part(self):
        words = enumerate_balanced(3, 2)
        partition = star_partition(words, base_family_A0(3, 2), ONE[3])
        self.assertEqual(partition.parts, [(0, 1)])
        self.assertEqual(partition.centers, [(0, 1)])
        self.assertEqual(partition.K, 1)

    def assertPartitions(self, partition):
        labels = partition.part_of()
        self.assertTrue((labels >= 0).all())
        self.assertEqual(sum(len(part) for part in partition.parts), partition.base.size)
        members = set(partition.source.rows())
        for index, (part, center) in enumerate(zip(partition.parts, partition.centers)):
            for word in partition.base.vectors[list(part)]:
                self.assertIn(tuple(int(word[center[i]]) for i in range(len(center))), members)
            self.assertCovering(partition.part_family(index), partition.cover)

    def test_exhaustive(self):
        words = enumerate_balanced(3, 4)
        partition = star_partition(words, base_family_A0(3, 4), ONE[3])
        self.assertEqual(partition.mode, "exhaustive")
        self.assertPartitions(partition)

    def test_sampled_is_total(self):
        for p, ell, seed in ((5, 4, 0), (5, 4, 1), (3, 10, 2), (7, 6, 3)):
            words = enumerate_balanced(p, ell)
            partition = star_partition(words, base_family_A0(p, ell), ONE[p], mode="sampled", seed=seed)
            self.assertEqual(partition.mode, "sampled")
            self.assertPartitions(partition)

    def test_statistics(self):
        words = enumerate_balanced(5, 4)
        source = base_family_A0(5, 4)
        data = star_partition(words, source, ONE[5]).to_dict()
        self.assertEqual(data["d_left"], 4)
        self.assertAlmostEqual(data["d_right"], math.factorial(4) * 4 / 24)
        self.assertAlmostEqual(data["existence_bound"], 4 / (10 * 4 * math.log2(5)))
        self.assertEqual(sum(data["part_sizes"]), 24)

    def test_source_must_cover(self):
        words = enumerate_balanced(3, 4)
        with self.assertRaises(CoverageError):
            star_partition(words, words.family, CoverSet.full(3))

    def test_source_must_be_balanced(self):
        with self.assertRaises(DomainError):
            star_partition(enumerate_balanced(3, 2), CoveringFamily(3, [(1, 1)]), ONE[3])

    def test_exhaustive_length_guard(self):
        words = enumerate_balanced(3, 10)
        with self.assertRaises(BudgetExceeded):
            star_partition(words, base_family_A0(3, 10), ONE[3], mode="exhaustive")

    def test_targeted_permutation(self):
        word, target = (1, 2, 2, 1), (2, 1, 1, 2)
        permutation = targeted_permutation(word, target)
        self.assertEqual(tuple(word[i] for i in permutation), target)
        with self.assertRaises(DomainError):
            targeted_permutation((1, 1), (1, 2))


class StepBoostTests(ZpCoverTestCase):
    def test_smallest_instance(self):
        partition = star_partition(enumerate_balanced(3, 2), base_family_A0(3, 2), ONE[3])
        family = step_boost(partition, 2, 2)
        self.assertEqual(family.rows(), [(1, 2), (2, 1)])
        self.assertEqual(family.claimed_cover, CoverSet.nonzero(3))
        self.assertCovering(family)
        self.assertGreaterEqual(family.size, partition.min_part_size**2 / partition.base.size)

    def test_longer_walks(self):
        words = enumerate_balanced(3, 4)
        partition = star_partition(words, base_family_A0(3, 4), ONE[3])
        for m in (2, 3, 4):
            family = step_boost(partition, m, 2)
            self.assertEqual(family.ell, (m - 1) * 4)
            self.assertGreaterEqual(family.size, partition.min_part_size**m / words.size)
            for chunk in np.split(family.vectors, m - 1, axis=1):
                words.index_of(chunk)
            self.assertCovering(family, CoverSet.nonzero(3))

    def test_refusals(self):
        partition = star_partition(enumerate_balanced(3, 2), base_family_A0(3, 2), ONE[3])
        with self.assertRaises(DomainError):
            step_boost(partition, 1, 2)
        with self.assertRaises(DomainError):
            step_boost(partition, 2, 3)


class IterationTests(ZpCoverTestCase):
    def test_p3_meets_the_lower_bound(self):
        family, trace = aa_iterate(3, 2, m=2, z_max=1)
        self.assertEqual(family.claimed_cover, CoverSet.nonzero(3))
        padded = append_zeros(family, 1)
        self.assertEqual((padded.size, padded.ell), (2, 3))
        self.assertCovering(padded, CoverSet.full(3))
        self.assertLengthAtLeastLowerBound(padded)
        self.assertEqual(trace.steps[0].size, 2)

    def test_p5_two_steps(self):
        family, trace = aa_iterate(5, 4, m=4, z_max=2, mode="auto")
        self.assertEqual(family.claimed_cover, CoverSet.from_elements(5, [1, 2, 3, 4]))
        self.assertEqual(target_cover(5, 2, 2).elements, (1, 2, 3, 4))
        self.assertEqual([step.a for step in trace.steps], [2, 4])
        self.assertEqual([step.length for step in trace.steps], [12, 36])
        self.assertGreaterEqual(family.size, 2)
        self.assertCovering(append_zeros(family, 1), CoverSet.full(5))

    def test_p5_short_walks_collapse(self):
        for m in (2, 3):
            family, _ = aa_iterate(5, 4, m=m, z_max=2, mode="auto")
            self.assertEqual(family.size, 1, m)

    def test_lengths_follow_the_walk_length(self):
        family, trace = aa_iterate(3, 2, m=3, z_max=1)
        self.assertEqual([step.length for step in trace.steps], [4])
        self.assertEqual(family.ell, (3 - 1) * 2)
        family, trace = aa_iterate(5, 4, m=2, z_max=2, mode="sampled", seed=3)
        self.assertEqual([step.length for step in trace.steps], [4, 4])

    def test_no_steps(self):
        family, trace = aa_iterate(5, 4, z_max=0)
        self.assertEqual(family, base_family_A0(5, 4))
        self.assertEqual(family.claimed_cover.elements, (1,))
        self.assertEqual(trace.steps, [])

    def test_step_limit(self):
        with self.assertRaises(DomainError):
            aa_iterate(3, 2, z_max=2)

    def test_trace_and_signal(self):
        steps = []

        def handler(sender, step, **kwargs):
            steps.append(step)

        iteration_step_completed.connect(handler)
        self.addCleanup(iteration_step_completed.disconnect, handler)
        _, trace = aa_iterate(5, 4, m=2, z_max=2)
        self.assertEqual(steps, trace.steps)
        data = trace.to_dict()
        self.assertEqual(data["alpha"], 2)
        self.assertEqual(
            set(data["steps"][0]),
            {"z", "a", "K", "min_part_size", "existence_bound", "size", "length", "verified", "cover"},
        )
