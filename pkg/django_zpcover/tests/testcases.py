import io
import itertools
import logging
import shutil
import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from django_zpcover.families import CoverSet, CoveringFamily, is_covering
from django_zpcover.run_context import RunConfig, RunContext

logger = logging.getLogger(__name__)


# Naive oracles
# =============


def naive_is_covering(family: CoveringFamily, cover: CoverSet, ordered: bool = True) -> bool:
    """Triple loop over ordered pairs and coordinates, no numpy."""
    rows = family.rows()
    p = family.p
    for a, v in enumerate(rows):
        for b, w in enumerate(rows):
            if a == b or (not ordered and b < a):
                continue
            differences = {(x - y) % p for x, y in zip(v, w)}
            if not set(cover) <= differences:
                return False
    return True


def random_family(rng: np.random.Generator, p: int, size: int, ell: int) -> CoveringFamily:
    """Random family of at most ``size`` distinct vectors (duplicates dropped)."""
    rows = np.unique(rng.integers(0, p, size=(size, ell)), axis=0)
    rng.shuffle(rows)
    return CoveringFamily(p, rows)


def brute_force_prophet(p: int, r: int) -> float:
    """E[max clique sum] by enumerating all 2^{r·p} outcomes."""
    n = r * p
    outcomes = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).reshape(-1, r, p)
    ones = outcomes.sum(axis=(1, 2))
    weights = (1 / p) ** ones * (1 - 1 / p) ** (n - ones)
    return float(np.sum(weights * outcomes.sum(axis=2).max(axis=1)))


def brute_force_gambler(p: int, r: int) -> float:
    """
    Optimal online play by expectimax over every realisation, elements arriving
    clique by clique. A gambler holding clique j may take any later 1 of clique j.
    """
    q = Fraction(1, p)
    n = r * p

    def value(position: int, locked) -> Fraction:
        if position == n:
            return Fraction(0)
        clique = position // p
        skip = value(position + 1, locked)
        if locked is None:
            on_one = max(1 + value(position + 1, clique), skip)
        elif locked == clique:
            on_one = 1 + value(position + 1, locked)
        else:
            on_one = skip
        return q * on_one + (1 - q) * skip

    return float(value(0, None))


def brute_force_max_covering_subset(family: CoveringFamily, cover: CoverSet) -> int:
    """Largest S-covering subset, by trying every subset from the largest down."""
    rows = family.rows()
    for size in range(len(rows), 0, -1):
        for subset in itertools.combinations(range(len(rows)), size):
            if naive_is_covering(CoveringFamily(family.p, [rows[i] for i in subset]), cover):
                return size
    return 0


# Test cases
# ==========


class CoveringAssertionsMixin:
    def assertCovering(self, family: CoveringFamily, cover: CoverSet = None, msg=None):
        cover = cover if cover is not None else family.claimed_cover
        report = is_covering(family, cover)
        if not report.is_covering:
            self.fail(self._formatMessage(msg, report.describe()))
        return report

    def assertNotCovering(self, family: CoveringFamily, cover: CoverSet, msg=None):
        report = is_covering(family, cover)
        if report.is_covering:
            self.fail(self._formatMessage(msg, f"{family} unexpectedly covers {cover.to_spec()}"))
        return report

    def assertLengthAtLeastLowerBound(self, family: CoveringFamily):
        from django_zpcover.bounds import aam_lower_bound

        if family.size >= 2 and family.p >= 3:
            lower = aam_lower_bound(family.p, float(np.log2(family.size)))
            self.assertLessEqual(lower, family.ell, f"{family} is shorter than the lower bound {lower:.3f}")


class ZpCoverTestCase(CoveringAssertionsMixin, SimpleTestCase):
    """
    Runs every test under a fixed RunConfig (seed 0, one worker thread unless
    ``threads`` is overridden).
    """

    seed = 0
    threads = 1
    memory_budget = 1 << 28

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        cls._run_config = RunContext.use_config(
            RunConfig(seed=cls.seed, threads=cls.threads, memory_budget=cls.memory_budget)
        )
        cls._run_config.__enter__()

    @classmethod
    def tearDownClass(cls) -> None:
        run_config = getattr(cls, "_run_config", None)
        if run_config is not None:
            try:
                run_config.__exit__(None, None, None)
            finally:
                cls._run_config = None
        super().tearDownClass()


class CommandTestCase(ZpCoverTestCase):
    """Runs management commands in a temporary directory and captures their output."""

    def setUp(self) -> None:
        super().setUp()
        self.tmp = Path(tempfile.mkdtemp(prefix="zpcover-"))
        self.addCleanup(shutil.rmtree, self.tmp, ignore_errors=True)

    def path(self, name: str) -> str:
        return str(self.tmp / name)

    def zpcover(self, *args) -> str:
        """Run a command and return its stdout; CommandError propagates."""
        stdout, stderr = io.StringIO(), io.StringIO()
        call_command(*args, stdout=stdout, stderr=stderr)
        return stdout.getvalue()

    def assertExitCode(self, code: int, *args) -> CommandError:
        with self.assertRaises(CommandError) as ctx:
            self.zpcover(*args)
        self.assertEqual(ctx.exception.returncode, code, str(ctx.exception))
        return ctx.exception
