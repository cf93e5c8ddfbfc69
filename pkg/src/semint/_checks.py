"""Shared tolerances, exceptions and small input checks."""

import math

# equality / inequality tolerance for float comparisons
ATOL = 1e-9
# a residual must exceed this before it counts as a violation of translation invariance
VIOLATION_TOL = 1e-6


class DomainError(ValueError):
    """An argument lies outside the unit interval (or another documented range)."""


class StructuralError(ValueError):
    """A table or container has the wrong shape, size or labels."""


class InvalidInstanceError(ValueError):
    """A capacity/function pair fails validation."""


def check_unit(value, name="value"):
    """Return ``value`` as a float in [0, 1], clamping float noise within ATOL."""
    value = float(value)
    if math.isnan(value) or value < -ATOL or value > 1.0 + ATOL:
        raise DomainError(f"{name}={value!r} is outside [0, 1]")
    return min(max(value, 0.0), 1.0)


def check_resolution(resolution, minimum=2):
    if int(resolution) != resolution or resolution < minimum:
        raise DomainError(f"resolution must be an integer >= {minimum}, got {resolution!r}")
    return int(resolution)


def lattice(resolution):
    """Uniform grid ``0, 1/r, ..., 1`` as a tuple of floats."""
    return tuple(k / resolution for k in range(resolution + 1))
