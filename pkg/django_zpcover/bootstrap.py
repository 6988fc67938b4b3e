from django.core.exceptions import ImproperlyConfigured

from .conf import settings
from .constants import constants

_INTEGER_KEYS = (
    constants.SEED,
    constants.MEMORY_BUDGET,
    constants.SCALING_SET_ATTEMPTS,
    constants.PERMUTATION_LIMIT,
    constants.SAMPLED_DRAW_LIMIT,
    constants.AA_MAX_WALK,
    constants.MATROID_SUBSET_LIMIT,
    constants.MATROID_SAMPLES,
    constants.PROPHET_EXACT_BUDGET,
    constants.MC_SAMPLES,
    constants.MC_CHUNK,
    constants.VERIFY_CHUNK,
)

_EXAMPLE = (
    "ZPCOVER_CONFIG = {\n"
    f"    '{constants.SEED}': 0,\n"
    f"    '{constants.MEMORY_BUDGET}': 1 << 30,\n"
    f"    '{constants.THREADS}': 4,\n"
    f"    '{constants.OUTPUT_FORMAT}': 'text',\n"
    "}"
)


class _BootStrapper:
    """
    Startup validation of the ``ZPCOVER_CONFIG`` setting.

    Lifecycle:
        1. _parse: Read the configuration dictionary
        2. _run_validation: Check keys and values
        3. run: Orchestrate both steps

    Error Handling:
        Every problem raises ImproperlyConfigured naming the offending key and
        showing an example configuration.
    """

    def __init__(self):
        self._config: dict = {}

    def _parse(self):
        """
        Read ``ZPCOVER_CONFIG``; a missing setting means all defaults.

        Raises:
            ImproperlyConfigured: If the setting is not a dict
        """
        config = getattr(settings, constants.ZPCOVER_CONFIG, None)
        if config is None:
            config = {}
        if not isinstance(config, dict):
            raise ImproperlyConfigured(f"ZPCOVER_CONFIG must be a dict. Example:\n{_EXAMPLE}")
        self._config = config

    def _run_validation(self) -> None:
        """
        Validate every configured key.

        Validations:
            - Only keys listed in ``constants.CONFIG_KEYS`` are allowed
            - Integer keys are ints; SEED may be 0, AA_MAX_WALK is at least 2,
              the others must be positive
            - THREADS is a positive int or None
            - OUTPUT_FORMAT is one of ``constants.OUTPUT_FORMATS``

        Raises:
            ImproperlyConfigured: For the first invalid key
        """
        unknown = sorted(set(self._config) - set(constants.CONFIG_KEYS))
        if unknown:
            raise ImproperlyConfigured(
                f"Unknown ZPCOVER_CONFIG keys {unknown}. Valid keys: {', '.join(constants.CONFIG_KEYS)}"
            )

        for key in _INTEGER_KEYS:
            if key not in self._config:
                continue
            value = self._config[key]
            minimum = {constants.SEED: 0, constants.AA_MAX_WALK: 2}.get(key, 1)
            if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
                raise ImproperlyConfigured(
                    f"ZPCOVER_CONFIG['{key}'] must be an integer ≥ {minimum}, got {value!r}. Example:\n{_EXAMPLE}"
                )

        threads = self._config.get(constants.THREADS)
        if threads is not None and (isinstance(threads, bool) or not isinstance(threads, int) or threads < 1):
            raise ImproperlyConfigured(
                f"ZPCOVER_CONFIG['{constants.THREADS}'] must be a positive integer or None, got {threads!r}"
            )

        output_format = self._config.get(constants.OUTPUT_FORMAT, "text")
        if output_format not in constants.OUTPUT_FORMATS:
            raise ImproperlyConfigured(
                f"ZPCOVER_CONFIG['{constants.OUTPUT_FORMAT}'] must be one of {constants.OUTPUT_FORMATS}, "
                f"got {output_format!r}"
            )

    def run(self):
        """
        Called from ``DjangoZpcoverConfig.ready()``; a bad configuration stops
        Django startup.
        """
        self._parse()
        self._run_validation()


app_bootstrapper = _BootStrapper()
"""
Singleton instance of _BootStrapper, run by the app configuration.

For testing a configuration directly:
    ```python
    from django_zpcover.bootstrap import _BootStrapper

    with override_settings(ZPCOVER_CONFIG={"THREADS": 0}):
        _BootStrapper().run()   # ImproperlyConfigured
    ```
"""
