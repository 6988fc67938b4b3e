from .testcases import CommandTestCase, CoveringAssertionsMixin, ZpCoverTestCase

__all__ = [
    "ZpCoverTestCase",
    "CommandTestCase",
    "CoveringAssertionsMixin",
]
