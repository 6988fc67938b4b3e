"""
Configuration Management for django-zpcover

Wraps Django's settings object and exposes cached, defaulted access to the
``ZPCOVER_CONFIG`` dictionary.

Configuration Source:
    ```python
    ZPCOVER_CONFIG = {
        'SEED': 0,
        'MEMORY_BUDGET': 1 << 30,
        'THREADS': None,
        'OUTPUT_FORMAT': 'text',
        'SCALING_SET_ATTEMPTS': 64,
        'PERMUTATION_LIMIT': 8,
        'PROPHET_EXACT_BUDGET': 10_000_000,
    }
    ```

Usage:
    ```python
    from django_zpcover.conf import settings

    budget = settings.MEMORY_BUDGET
    threads = settings.THREADS

    # Also works for standard Django settings
    debug_mode = settings.DEBUG
    ```

Caching:
    Values are cached on first access. The cache is dropped whenever Django
    sends ``setting_changed`` for ``ZPCOVER_CONFIG`` (``override_settings`` in
    tests), so overrides are always observed.
"""

from __future__ import annotations

import os
from typing import Optional

from django.conf import settings as django_settings
from django.core.signals import setting_changed
from django.dispatch import receiver
from django.utils.functional import cached_property

from .constants import constants


class _WrappedSettings:
    """
    Proxy over Django's settings with cached access to zpcover configuration.

    Standard Django settings are proxied via ``__getattr__``:
        ```python
        settings.DEBUG  # -> django_settings.DEBUG
        ```

    Zpcover settings are cached properties read from ``ZPCOVER_CONFIG``:
        ```python
        settings.MEMORY_BUDGET  # -> ZPCOVER_CONFIG.get('MEMORY_BUDGET', 1 << 30)
        ```

    Assignment to an attribute that has already been read raises ValueError.
    """

    def __getattr__(self, item):
        return getattr(django_settings, item)

    def __setattr__(self, key, value):
        if key in self.__dict__:
            raise ValueError("Item assignment is not supported")

        setattr(django_settings, key, value)

    def reload(self) -> None:
        """
        Drop every cached configuration value.

        Called automatically on ``setting_changed``; callers that mutate
        ``django.conf.settings.ZPCOVER_CONFIG`` by hand can call it too.
        """
        for name, value in type(self).__dict__.items():
            if isinstance(value, cached_property):
                self.__dict__.pop(name, None)

    # Configuration Properties
    # =======================

    @cached_property
    def ZPCOVER_CONFIG(self) -> dict:
        """
        Retrieve the root ``ZPCOVER_CONFIG`` dictionary.

        Returns:
            dict: The configured dictionary, or ``{}`` when the setting is absent.
        """
        return getattr(django_settings, constants.ZPCOVER_CONFIG, {})

    @cached_property
    def SEED(self) -> int:
        """
        Default seed for every randomised construction and simulation.

        Default:
            0
        """
        return self.ZPCOVER_CONFIG.get(constants.SEED, 0)

    @cached_property
    def MEMORY_BUDGET(self) -> int:
        """
        Memory budget in bytes. Families whose dense ``N × ℓ`` matrix would
        exceed it are refused with BudgetExceeded instead of being allocated.

        Default:
            1 GiB
        """
        return self.ZPCOVER_CONFIG.get(constants.MEMORY_BUDGET, 1 << 30)

    @cached_property
    def THREADS(self) -> int:
        """
        Worker count for the pair verifier and the Monte Carlo sampler.

        Default:
            ``os.cpu_count()`` (falls back to 1 when undetectable)
        """
        threads: Optional[int] = self.ZPCOVER_CONFIG.get(constants.THREADS)
        return threads or os.cpu_count() or 1

    @cached_property
    def OUTPUT_FORMAT(self) -> str:
        """
        Default output format of the management commands: ``text`` or ``json``.
        """
        return self.ZPCOVER_CONFIG.get(constants.OUTPUT_FORMAT, "text")

    @cached_property
    def SCALING_SET_ATTEMPTS(self) -> int:
        """
        Random scaling-set attempts before the greedy fallback.

        Default:
            64
        """
        return self.ZPCOVER_CONFIG.get(constants.SCALING_SET_ATTEMPTS, 64)

    @cached_property
    def PERMUTATION_LIMIT(self) -> int:
        """
        Largest word length for which the star partition enumerates every
        permutation.

        Default:
            8
        """
        return self.ZPCOVER_CONFIG.get(constants.PERMUTATION_LIMIT, 8)

    @cached_property
    def AA_MAX_WALK(self) -> int:
        """
        Longest walk length the pipeline's balanced-word base tries, starting
        from 2, while the iteration collapses to a single vector.

        Default:
            6
        """
        return self.ZPCOVER_CONFIG.get(constants.AA_MAX_WALK, 6)

    @cached_property
    def SAMPLED_DRAW_LIMIT(self) -> int:
        return self.ZPCOVER_CONFIG.get(constants.SAMPLED_DRAW_LIMIT, 100_000)

    @cached_property
    def MATROID_SUBSET_LIMIT(self) -> int:
        """
        Largest ground set (r·p) the matroid check enumerates exhaustively.

        Default:
            12
        """
        return self.ZPCOVER_CONFIG.get(constants.MATROID_SUBSET_LIMIT, 12)

    @cached_property
    def MATROID_SAMPLES(self) -> int:
        return self.ZPCOVER_CONFIG.get(constants.MATROID_SAMPLES, 2000)

    @cached_property
    def PROPHET_EXACT_BUDGET(self) -> int:
        """
        Largest r·p accepted by the exact prophet and gambler computations.

        Default:
            10_000_000
        """
        return self.ZPCOVER_CONFIG.get(constants.PROPHET_EXACT_BUDGET, 10_000_000)

    @cached_property
    def MC_SAMPLES(self) -> int:
        return self.ZPCOVER_CONFIG.get(constants.MC_SAMPLES, 100_000)

    @cached_property
    def MC_CHUNK(self) -> int:
        return self.ZPCOVER_CONFIG.get(constants.MC_CHUNK, 65_536)

    @cached_property
    def VERIFY_CHUNK(self) -> int:
        """
        Number of array elements one verifier block may allocate. Bounds the
        temporary ``rows × N × max(ℓ, p)`` arrays of the vectorised check.

        Default:
            4_194_304
        """
        return self.ZPCOVER_CONFIG.get(constants.VERIFY_CHUNK, 1 << 22)


# Module-Level Singleton Instance
# ================================

settings = _WrappedSettings()
"""
Singleton instance of _WrappedSettings providing the public configuration API.

Usage:
    ```python
    from django_zpcover.conf import settings

    settings.MEMORY_BUDGET
    settings.SCALING_SET_ATTEMPTS
    ```
"""


@receiver(setting_changed)
def _reload_settings(sender, setting, **kwargs):
    if setting == constants.ZPCOVER_CONFIG:
        settings.reload()
