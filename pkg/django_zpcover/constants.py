"""
Configuration Constants module for django-zpcover

Single source of truth for the keys of the ``ZPCOVER_CONFIG`` dictionary and
for the handful of fixed strings shared by the file formats and the command
line. Keys are exposed through a module-level singleton so callers never
hardcode them.

Usage:
    from django_zpcover.constants import constants

    budget_key = constants.MEMORY_BUDGET

    from django.conf import settings
    budget = settings.ZPCOVER_CONFIG[constants.MEMORY_BUDGET]
"""

from django.utils.functional import cached_property


class _Constants:
    """
    Private holder of configuration keys for django-zpcover.

    Do not instantiate; use the module-level ``constants`` instance.
    """

    @cached_property
    def ZPCOVER_CONFIG(self) -> str:
        """
        Name of the root Django setting.

        Returns:
            str: Setting name "ZPCOVER_CONFIG"
        """
        return "ZPCOVER_CONFIG"

    @cached_property
    def SEED(self) -> str:
        """
        Configuration key for the default random seed used by sampling
        constructions and Monte Carlo runs when no seed is passed explicitly.

        Returns:
            str: Setting key "SEED"
        """
        return "SEED"

    @cached_property
    def MEMORY_BUDGET(self) -> str:
        """
        Configuration key for the memory budget, in bytes, applied to every
        materialised family and enumeration.

        Returns:
            str: Setting key "MEMORY_BUDGET"
        """
        return "MEMORY_BUDGET"

    @cached_property
    def THREADS(self) -> str:
        """
        Configuration key for the worker count of the pair verifier and the
        Monte Carlo sampler.

        Returns:
            str: Setting key "THREADS"
        """
        return "THREADS"

    @cached_property
    def OUTPUT_FORMAT(self) -> str:
        """
        Configuration key for the default command output format.

        Returns:
            str: Setting key "OUTPUT_FORMAT"
        """
        return "OUTPUT_FORMAT"

    @cached_property
    def SCALING_SET_ATTEMPTS(self) -> str:
        """
        Configuration key for the number of random scaling-set draws tried
        before falling back to greedy set cover.

        Returns:
            str: Setting key "SCALING_SET_ATTEMPTS"
        """
        return "SCALING_SET_ATTEMPTS"

    @cached_property
    def PERMUTATION_LIMIT(self) -> str:
        """
        Configuration key for the largest word length accepted by the
        exhaustive star partition (all ℓ! permutations are visited).

        Returns:
            str: Setting key "PERMUTATION_LIMIT"
        """
        return "PERMUTATION_LIMIT"

    @cached_property
    def AA_MAX_WALK(self) -> str:
        """
        Configuration key for the longest walk the pipeline's balanced-word
        base tries before giving up on a family of two or more vectors.

        Returns:
            str: Setting key "AA_MAX_WALK"
        """
        return "AA_MAX_WALK"

    @cached_property
    def SAMPLED_DRAW_LIMIT(self) -> str:
        """
        Returns:
            str: Setting key "SAMPLED_DRAW_LIMIT"
        """
        return "SAMPLED_DRAW_LIMIT"

    @cached_property
    def MATROID_SUBSET_LIMIT(self) -> str:
        """
        Returns:
            str: Setting key "MATROID_SUBSET_LIMIT"
        """
        return "MATROID_SUBSET_LIMIT"

    @cached_property
    def MATROID_SAMPLES(self) -> str:
        """
        Returns:
            str: Setting key "MATROID_SAMPLES"
        """
        return "MATROID_SAMPLES"

    @cached_property
    def PROPHET_EXACT_BUDGET(self) -> str:
        """
        Configuration key for the largest r·p handled by the exact prophet and
        gambler computations.

        Returns:
            str: Setting key "PROPHET_EXACT_BUDGET"
        """
        return "PROPHET_EXACT_BUDGET"

    @cached_property
    def MC_SAMPLES(self) -> str:
        """
        Returns:
            str: Setting key "MC_SAMPLES"
        """
        return "MC_SAMPLES"

    @cached_property
    def MC_CHUNK(self) -> str:
        """
        Configuration key for the number of Monte Carlo samples drawn per
        chunk. Chunks get their own derived seed, so results depend on this
        value but never on the worker count.

        Returns:
            str: Setting key "MC_CHUNK"
        """
        return "MC_CHUNK"

    @cached_property
    def VERIFY_CHUNK(self) -> str:
        """
        Configuration key for the number of array elements one vectorised
        verifier block may allocate.

        Returns:
            str: Setting key "VERIFY_CHUNK"
        """
        return "VERIFY_CHUNK"

    @cached_property
    def ZPCF_HEADER(self) -> str:
        """
        First line of every zpcf family file.

        Returns:
            str: "# zpcf v1"
        """
        return "# zpcf v1"

    @cached_property
    def OUTPUT_FORMATS(self) -> tuple:
        """
        Output formats accepted by ``OUTPUT_FORMAT`` and ``--format``.

        Returns:
            tuple: ("text", "json")
        """
        return ("text", "json")

    @cached_property
    def CONFIG_KEYS(self) -> tuple:
        """
        Every key recognised inside ``ZPCOVER_CONFIG``. The bootstrapper rejects
        anything else.

        Returns:
            tuple: all configuration keys
        """
        return (
            self.SEED,
            self.MEMORY_BUDGET,
            self.THREADS,
            self.OUTPUT_FORMAT,
            self.SCALING_SET_ATTEMPTS,
            self.PERMUTATION_LIMIT,
            self.SAMPLED_DRAW_LIMIT,
            self.AA_MAX_WALK,
            self.MATROID_SUBSET_LIMIT,
            self.MATROID_SAMPLES,
            self.PROPHET_EXACT_BUDGET,
            self.MC_SAMPLES,
            self.MC_CHUNK,
            self.VERIFY_CHUNK,
        )


constants = _Constants()
"""
Singleton instance of _Constants.

Usage:
    from django_zpcover.constants import constants

    config = settings.ZPCOVER_CONFIG
    seed = config.get(constants.SEED, 0)
"""
