"""
Utility Functions for django-zpcover

Helpers shared across the package:
    - Size guards against the configured memory budget
    - Seeded random generators
    - Ordered fan-out over a thread pool
    - Deterministic JSON serialisation for artefacts

Common Imports:
    ```python
    from django_zpcover.utils import check_budget, make_rng, dump_json
    ```
"""

from __future__ import annotations

import contextvars
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Iterable, Optional, TypeVar, Union

import numpy as np

from .exceptions import BudgetExceeded
from .run_context import RunContext

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


# Size Guards
# ===========


def check_budget(entries: int, what: str, itemsize: int = 8) -> None:
    """
    Refuse to materialise ``entries`` array elements beyond the memory budget.

    Args:
        entries: Number of elements the caller is about to allocate
        what: Human readable name of the allocation, used in the error
        itemsize: Bytes per element

    Raises:
        BudgetExceeded: If entries·itemsize exceeds the current RunConfig budget

    Usage:
        ```python
        check_budget(size ** z * z * ell, "concatenation")
        ```
    """
    budget = RunContext.get_config().memory_budget
    needed = int(entries) * itemsize
    if needed > budget:
        raise BudgetExceeded(f"{what} needs {needed} bytes, over the memory budget of {budget} bytes")


# Randomness
# ==========


def resolve_seed(seed: Optional[int]) -> int:
    return RunContext.get_config().seed if seed is None else int(seed)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Seeded ``numpy`` generator; ``None`` takes the seed of the current RunConfig."""
    return np.random.default_rng(resolve_seed(seed))


# Parallel Map
# ============


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> list[R]:
    """Apply ``fn`` to every item, possibly on a thread pool, keeping input order."""
    items = list(items)
    workers = threads or RunContext.get_config().threads
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    # each task runs in a copy of the caller's context so RunContext is visible to workers
    contexts = [contextvars.copy_context() for _ in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(lambda context, item: context.run(fn, item), contexts, items))


# Serialisation
# =============


def _default(value: Any):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def to_json(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, default=_default) + "\n"


def dump_json(data: Any, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(to_json(data), encoding="ascii")
    logger.info(f"Wrote {path}")
    return path


def load_json(path: Union[str, Path]) -> Any:
    return json.loads(Path(path).read_text(encoding="ascii"))
