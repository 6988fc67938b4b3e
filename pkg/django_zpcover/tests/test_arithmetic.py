import math

from django_zpcover.arithmetic import (
    ceil_log,
    ceil_log2,
    is_prime,
    largest_prime_at_most,
    mod_inverse,
    primitive_root,
    select_parameters,
)
from django_zpcover.exceptions import DomainError

from .testcases import ZpCoverTestCase


def trial_division(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


class PrimalityTests(ZpCoverTestCase):
    def test_small_values(self):
        self.assertTrue(is_prime(2))
        self.assertFalse(is_prime(1))
        self.assertTrue(is_prime(101))

    def test_agrees_with_trial_division(self):
        for n in range(1, 2000):
            self.assertEqual(is_prime(n), trial_division(n), n)

    def test_large_prime_and_carmichael(self):
        self.assertTrue(is_prime(2**61 - 1))
        self.assertFalse(is_prime(561))
        self.assertFalse(is_prime(3215031751))

    def test_largest_prime_at_most(self):
        self.assertEqual(largest_prime_at_most(3), 3)
        self.assertEqual(largest_prime_at_most(10), 7)
        self.assertEqual(largest_prime_at_most(50), 47)


class FieldArithmeticTests(ZpCoverTestCase):
    def test_primitive_roots(self):
        self.assertEqual(primitive_root(3), 2)
        self.assertEqual(primitive_root(5), 2)
        self.assertEqual(primitive_root(7), 3)

    def test_primitive_root_has_full_order(self):
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            g = primitive_root(p)
            self.assertTrue(all(pow(g, e, p) != 1 for e in range(1, p - 1)), p)
            self.assertEqual(pow(g, p - 1, p), 1)

    def test_primitive_root_rejects_non_primes(self):
        for n in (1, 2, 9, 15):
            with self.assertRaises(DomainError):
                primitive_root(n)

    def test_mod_inverse(self):
        self.assertEqual(mod_inverse(1, 13), 1)
        self.assertEqual(mod_inverse(2, 7), 4)
        with self.assertRaises(DomainError):
            mod_inverse(0, 5)

    def test_mod_inverse_is_an_involution(self):
        for p in (3, 5, 7, 11, 13):
            for a in range(1, p):
                b = mod_inverse(a, p)
                self.assertEqual(a * b % p, 1)
                self.assertEqual(mod_inverse(b, p), a)

    def test_ceil_logs(self):
        self.assertEqual(ceil_log(1, 3), 1)
        self.assertEqual(ceil_log(9, 3), 2)
        self.assertEqual(ceil_log(10, 3), 3)
        self.assertEqual(ceil_log2(2), 1)
        self.assertEqual(ceil_log2(3), 2)
        self.assertEqual(ceil_log2(5), 3)
        self.assertEqual(ceil_log2(8), 3)


class ParameterSelectionTests(ZpCoverTestCase):
    def test_large_target(self):
        selection = select_parameters(101, 1024)
        self.assertEqual(selection.k, 3)
        self.assertEqual(selection.ell1, 2048)
        self.assertEqual(selection.ell2, 8192)

    def test_small_target_only_admits_two(self):
        selection = select_parameters(7, 4)
        self.assertEqual(selection.k, 2)
        self.assertEqual(selection.ell1, 8)

    def test_invariants_recomputed(self):
        for p, log2N in ((7, 4), (11, 40), (101, 1024), (101, 20000.5), (13, 7.3)):
            s = select_parameters(p, log2N)
            self.assertTrue(is_prime(s.k))
            self.assertLessEqual(s.k, p)
            self.assertEqual(s.ell1, math.ceil(2 * log2N))
            self.assertEqual(s.ell2, 2 * s.ell1 * math.ceil(math.log2(s.k)))
            self.assertEqual(s.sizeS_bound, math.ceil(p * math.log(p) / (s.k - 1)))
            self.assertEqual(s.ell3_bound, s.sizeS_bound * s.ell2)
            self.assertAlmostEqual(s.ell_star, p * math.log2(p) * log2N / math.sqrt(s.k))

    def test_rejects_small_targets(self):
        with self.assertRaises(DomainError):
            select_parameters(7, 3.9)
