"""Exact arithmetic for Heron triangles with two rational medians.

Integers are Python ints and rationals are fractions.Fraction throughout.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, Error, InvariantViolation, ResumeError, ZeroDivisionError  # noqa: F401

__version__ = "0.1.0"
