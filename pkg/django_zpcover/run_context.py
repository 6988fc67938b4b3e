"""Run configuration helpers.

This module keeps the "current" run configuration (seed, memory budget,
worker count and output format) in a per-context stack backed by
``contextvars``, so library code deep inside a construction can read the
budget or the worker count without threading them through every call.

When nothing has been pushed, :meth:`RunContext.get_config` builds a
configuration from ``ZPCOVER_CONFIG``.

Example:
    with RunContext.use_config(RunConfig(seed=7, memory_budget=1 << 26, threads=1)):
        family = base_p_family(3, 27)   # guarded by the 64 MiB budget
"""

from __future__ import annotations

import dataclasses
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Optional

from django_zpcover.conf import settings
from django_zpcover.constants import constants
from django_zpcover.exceptions import DomainError


@dataclass(frozen=True)
class RunConfig:
    """Settings of one run.

    Identical configurations on identical inputs produce byte-identical
    artefacts.

    Attributes:
        seed: 64-bit seed for every randomised step
        memory_budget: Bytes a single materialised family may occupy
        threads: Worker count for verification and sampling
        output_format: ``text`` or ``json``
    """

    seed: int = 0
    memory_budget: int = 1 << 30
    threads: int = 1
    output_format: str = "text"

    def __post_init__(self):
        if not 0 <= self.seed < 1 << 64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.memory_budget < 1:
            raise DomainError(f"memory budget must be positive, got {self.memory_budget}")
        if self.threads < 1:
            raise DomainError(f"threads must be positive, got {self.threads}")
        if self.output_format not in constants.OUTPUT_FORMATS:
            raise DomainError(f"output format must be one of {constants.OUTPUT_FORMATS}, got {self.output_format!r}")

    @classmethod
    def from_settings(cls) -> "RunConfig":
        return cls(
            seed=settings.SEED,
            memory_budget=settings.MEMORY_BUDGET,
            threads=settings.THREADS,
            output_format=settings.OUTPUT_FORMAT,
        )

    def replace(self, **changes) -> "RunConfig":
        """Copy with the given fields changed; ``None`` values are ignored."""
        return dataclasses.replace(self, **{key: value for key, value in changes.items() if value is not None})


class RunContext:
    """Per-context stack of :class:`RunConfig` values."""

    _config_stack = ContextVar("config_stack", default=[])

    @classmethod
    def get_config(cls) -> RunConfig:
        """Return the innermost pushed configuration, or one built from settings."""

        stack = cls._config_stack.get()
        return stack[-1] if stack else RunConfig.from_settings()

    @classmethod
    def push_config(cls, config: RunConfig):
        stack = cls._config_stack.get()
        cls._config_stack.set(stack + [config])

    @classmethod
    def pop_config(cls):
        """No-op when the stack is empty."""

        stack = cls._config_stack.get()
        if stack:
            cls._config_stack.set(stack[:-1])

    @classmethod
    @contextmanager
    def use_config(cls, config: Optional[RunConfig] = None, **changes):
        """Run the body under ``config`` (default: the current one) with ``changes`` applied.

        Example:
            with RunContext.use_config(threads=1):
                report = is_covering(family, cover)
        """

        base = config if config is not None else cls.get_config()
        cls.push_config(base.replace(**changes))
        try:
            yield cls.get_config()
        finally:
            cls.pop_config()
