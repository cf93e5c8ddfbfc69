"""Finite measurable spaces, capacities and measurable functions.

Subsets of a space with ``n`` points are encoded as bitmasks: bit ``i`` set
means point ``i`` belongs to the subset.  The sigma-algebra is always the
full power set, so a capacity is just a table of ``2**n`` values.
"""

from dataclasses import dataclass
from functools import cached_property
import math

import numpy as np

from ._checks import ATOL, DomainError, InvalidInstanceError, StructuralError, check_unit
from .semicopula import ValidationReport, Violation

MAX_POINTS = 16
# random function values are multiples of this step so that shifts add exactly
FUNCTION_LATTICE = 64


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple

    def __post_init__(self):
        points = tuple(str(p) for p in self.points)
        object.__setattr__(self, "points", points)
        if not 1 <= len(points) <= MAX_POINTS:
            raise StructuralError(f"a space needs between 1 and {MAX_POINTS} points, got {len(points)}")
        if len(set(points)) != len(points):
            raise StructuralError(f"point labels must be distinct: {points}")

    @classmethod
    def of_size(cls, n):
        return cls(tuple(f"x{i + 1}" for i in range(n)))

    def __len__(self):
        return len(self.points)

    @property
    def full(self):
        """Bitmask of the whole space."""
        return (1 << len(self.points)) - 1

    def index(self, label):
        try:
            return self.points.index(label)
        except ValueError:
            raise StructuralError(f"unknown point label {label!r}") from None

    def mask(self, labels):
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask):
        return tuple(p for i, p in enumerate(self.points) if mask >> i & 1)


@dataclass(frozen=True)
class Capacity:
    """Set function on the power set of ``space``, indexed by bitmask.

    Construction only checks the table size; use :func:`validate_capacity`
    (or :attr:`report`) for the boundary and monotonicity conditions.
    """

    space: FiniteSpace
    values: tuple

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if len(values) != 1 << len(self.space):
            raise StructuralError(
                f"capacity on {len(self.space)} points needs {1 << len(self.space)} values, got {len(values)}"
            )
        if not all(math.isfinite(v) for v in values):
            raise StructuralError("capacity values must be finite")
        object.__setattr__(self, "values", values)

    def __getitem__(self, mask):
        return self.values[mask]

    def measure(self, labels):
        return self.values[self.space.mask(labels)]

    @cached_property
    def report(self):
        return validate_capacity(self)

    @cached_property
    def array(self):
        arr = np.array(self.values)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class MeasurableFunction:
    space: FiniteSpace
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.space):
            raise StructuralError(f"function needs {len(self.space)} values, got {len(self.values)}")
        values = tuple(check_unit(v, f"f({p})") for p, v in zip(self.space.points, self.values))
        object.__setattr__(self, "values", values)

    def __getitem__(self, label):
        return self.values[self.space.index(label)]


@dataclass(frozen=True)
class Instance:
    capacity: Capacity
    function: MeasurableFunction

    def __post_init__(self):
        if self.capacity.space != self.function.space:
            raise StructuralError("capacity and function live on different spaces")

    @property
    def space(self):
        return self.capacity.space

    def validate(self):
        """Raise :class:`InvalidInstanceError` unless the capacity passes validation."""
        report = self.capacity.report
        if not report.passed:
            first = report.violations[0]
            raise InvalidInstanceError(
                f"capacity fails validation ({len(report.violations)} violations, first: {first.axiom} at {first.point})"
            )
        return self


def validate_capacity(capacity):
    """Boundary conditions, range, and monotonicity over one-point extensions."""
    space, mu = capacity.space, capacity.values
    full = space.full
    found = []
    if abs(mu[0]) > ATOL:
        found.append(Violation("empty_set", (), mu[0], 0.0))
    if abs(mu[full] - 1.0) > ATOL:
        found.append(Violation("whole_space", space.points, mu[full], 1.0))
    for mask, v in enumerate(mu):
        if v < -ATOL or v > 1.0 + ATOL:
            found.append(Violation("unit_range", space.labels(mask), v, min(max(v, 0.0), 1.0)))
    for mask in range(full + 1):
        for i in range(len(space)):
            bit = 1 << i
            if mask & bit:
                continue
            if mu[mask] > mu[mask | bit] + ATOL:
                found.append(
                    Violation("monotone", (space.labels(mask), space.labels(mask | bit)), mu[mask], mu[mask | bit])
                )
    return ValidationReport.from_violations(found)


def level_set_mask(function, t):
    """Bitmask of ``{x : f(x) >= t}``."""
    m = 0
    for i, v in enumerate(function.values):
        if v >= t:
            m |= 1 << i
    return m


def level_set_measure(inst, t):
    """mu({f >= t}); equals mu(X) = 1 at t = 0."""
    t = check_unit(t, "t")
    return inst.capacity[level_set_mask(inst.function, t)]


def witness_instance(a, b):
    """Two-point instance whose level profile is 1 at t=0, b on (0, 1-a] and 0 above.

    ``f = (1-a, 0)`` and ``mu({x1}) = b, mu({x2}) = 0``.  Shifting by ``a``
    is exactly the operation that separates the Lukasiewicz t-norm from every
    other semicopula.
    """
    a = check_unit(a, "a")
    b = check_unit(b, "b")
    if a <= 0.0:
        raise DomainError("shift a must be positive; at a = 0 translation invariance is a tautology")
    space = FiniteSpace(("x1", "x2"))
    capacity = Capacity(space, (0.0, b, 0.0, 1.0))
    return Instance(capacity, MeasurableFunction(space, (1.0 - a, 0.0)))


def shift_function(function, a):
    """Pointwise ``f + a``; the sum must stay inside [0, 1]."""
    a = check_unit(a, "a")
    out = []
    for label, v in zip(function.space.points, function.values):
        s = v + a
        if s > 1.0 + ATOL:
            raise DomainError(f"f({label}) + a = {v!r} + {a!r} exceeds 1")
        out.append(min(s, 1.0))
    return MeasurableFunction(function.space, tuple(out))


def shift_instance(inst, a):
    return Instance(inst.capacity, shift_function(inst.function, a))


def random_capacity(space, seed):
    """Random monotone capacity, deterministic in ``seed``.

    One uniform draw per nonempty proper subset, then each value is raised to
    the maximum over its subsets (dynamic programming over one-point removals).
    """
    rng = np.random.default_rng(seed)
    full = space.full
    mu = rng.random(full + 1)
    mu[0] = 0.0
    for mask in range(1, full + 1):
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            if mu[mask ^ bit] > mu[mask]:
                mu[mask] = mu[mask ^ bit]
    mu[full] = 1.0
    return Capacity(space, tuple(mu.tolist()))


def random_function(space, seed, max_value=1.0):
    """Random function with values in ``{0, 1/64, ...}`` capped at ``max_value``."""
    max_value = check_unit(max_value, "max_value")
    rng = np.random.default_rng(seed)
    top = int(math.floor(max_value * FUNCTION_LATTICE + ATOL))
    steps = rng.integers(0, top + 1, size=len(space))
    return MeasurableFunction(space, tuple(float(k) / FUNCTION_LATTICE for k in steps))


def random_instance(n, seed, max_value=1.0):
    """Capacity and function on ``x1..xn`` drawn from two streams derived from ``seed``."""
    space = FiniteSpace.of_size(n)
    cap_seed, fun_seed = np.random.SeedSequence(seed).spawn(2)
    return Instance(random_capacity(space, cap_seed), random_function(space, fun_seed, max_value))
