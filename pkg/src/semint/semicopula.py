"""Semicopulas: evaluation, lattice validation and distance to the Lukasiewicz t-norm.

A semicopula is a map ``S: [0,1]^2 -> [0,1]`` that is non-decreasing in each
argument and has 1 as neutral element.  Built-in families are the minimum,
product, Lukasiewicz, drastic and Yager t-norms; arbitrary ones can be given
as a monotone sample table or as a Python callable.
"""

from dataclasses import dataclass, field
import math
from typing import Callable, NamedTuple, Optional

import numpy as np

from ._checks import ATOL, DomainError, StructuralError, check_resolution, check_unit, lattice

KINDS = ("min", "product", "lukasiewicz", "drastic", "yager", "table", "custom")


@dataclass(frozen=True, eq=False)
class Semicopula:
    """An evaluable binary aggregation function on the unit square.

    Use the module constants (:data:`MIN`, :data:`PRODUCT`, ...) or the
    constructors :func:`yager`, :func:`from_table` and :func:`from_function`
    rather than instantiating directly.
    """

    kind: str
    label: str
    p: Optional[float] = None
    table: Optional[np.ndarray] = field(default=None, repr=False)
    func: Optional[Callable[[float, float], float]] = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise StructuralError(f"unknown semicopula kind {self.kind!r}")
        if self.kind == "yager" and not (self.p is not None and self.p > 0 and math.isfinite(self.p)):
            raise DomainError(f"Yager parameter must be a positive real, got {self.p!r}")
        if self.kind == "table":
            if self.table is None or self.table.ndim != 2 or self.table.shape[0] != self.table.shape[1]:
                raise StructuralError("table semicopula needs a square (r+1)x(r+1) sample matrix")
            if self.table.shape[0] < 2:
                raise StructuralError("table semicopula needs at least a 2x2 sample matrix")
        if self.kind == "custom" and not callable(self.func):
            raise StructuralError("custom semicopula needs a callable")

    @property
    def resolution(self):
        """Lattice steps per axis of a table semicopula (None otherwise)."""
        return None if self.table is None else self.table.shape[0] - 1

    def __eq__(self, other):
        if not isinstance(other, Semicopula):
            return NotImplemented
        if self.kind != other.kind or self.p != other.p:
            return False
        if self.kind == "table":
            return np.array_equal(self.table, other.table)
        if self.kind == "custom":
            return self.func is other.func
        return True

    __hash__ = None

    def __call__(self, x, y):
        """Evaluate without domain checks; accepts scalars or broadcastable arrays."""
        if np.ndim(x) == 0 and np.ndim(y) == 0:
            return _scalar(self, float(x), float(y))
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return _vector(self, x, y)


def _scalar(s, x, y):
    kind = s.kind
    if kind == "min":
        return x if x < y else y
    if kind == "product":
        return x * y
    if kind == "lukasiewicz":
        return max(x + y - 1.0, 0.0)
    if kind == "drastic":
        return min(x, y) if max(x, y) >= 1.0 else 0.0
    if kind == "yager":
        if x >= 1.0:
            return y
        if y >= 1.0:
            return x
        if s.p == 1.0:
            return max(x + y - 1.0, 0.0)
        return max(1.0 - ((1.0 - x) ** s.p + (1.0 - y) ** s.p) ** (1.0 / s.p), 0.0)
    if kind == "table":
        r = s.resolution
        i = min(int(math.floor(x * r + ATOL)), r)
        j = min(int(math.floor(y * r + ATOL)), r)
        return float(s.table[i, j])
    return float(s.func(x, y))


def _vector(s, x, y):
    x, y = np.broadcast_arrays(x, y)
    kind = s.kind
    if kind == "min":
        return np.minimum(x, y)
    if kind == "product":
        return x * y
    if kind == "lukasiewicz" or (kind == "yager" and s.p == 1.0):
        out = np.maximum(x + y - 1.0, 0.0)
    elif kind == "drastic":
        return np.where(np.maximum(x, y) >= 1.0, np.minimum(x, y), 0.0)
    elif kind == "yager":
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.maximum(1.0 - ((1.0 - x) ** s.p + (1.0 - y) ** s.p) ** (1.0 / s.p), 0.0)
    elif kind == "table":
        r = s.resolution
        i = np.minimum(np.floor(x * r + ATOL).astype(int), r)
        j = np.minimum(np.floor(y * r + ATOL).astype(int), r)
        return s.table[i, j].astype(float)
    else:
        return np.vectorize(lambda a, b: float(s.func(a, b)), otypes=[float])(x, y)
    if kind == "yager":
        out = np.where(x >= 1.0, y, np.where(y >= 1.0, x, out))
    return out


MIN = Semicopula("min", "minimum")
PRODUCT = Semicopula("product", "product")
LUKASIEWICZ = Semicopula("lukasiewicz", "Lukasiewicz t-norm")
DRASTIC = Semicopula("drastic", "drastic t-norm")


def yager(p):
    """Yager t-norm ``max(1 - ((1-x)^p + (1-y)^p)^(1/p), 0)``; p=1 is Lukasiewicz."""
    p = float(p)
    return Semicopula("yager", f"Yager(p={p:g})", p=p)


def from_table(values, label="table"):
    """Step-function semicopula from samples on the uniform lattice of [0,1]^2.

    ``values[i][j]`` is S(i/r, j/r); points between lattice nodes take the
    value of the nearest lattice node below in each coordinate.
    """
    arr = np.array(values, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise StructuralError(f"table must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise StructuralError("table contains non-finite entries")
    arr.setflags(write=False)
    return Semicopula("table", label, table=arr)


def from_function(func, label="custom"):
    """Wrap a scalar callable ``func(x, y)``; such semicopulas do not serialize."""
    return Semicopula("custom", label, func=func)


def builtin_semicopulas():
    """The closed-form families used throughout the test-suite."""
    return (MIN, PRODUCT, LUKASIEWICZ, DRASTIC, yager(0.5), yager(1.0), yager(2.0))


def evaluate(spec, x, y):
    """S(x, y) with both arguments checked against [0, 1]."""
    return _scalar(spec, check_unit(x, "x"), check_unit(y, "y"))


class Violation(NamedTuple):
    axiom: str
    point: tuple
    observed: float
    bound: float


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom check.

    For semicopulas the axioms are certified only on the sampled lattice;
    ``grid_resolution`` records how fine that lattice was.
    """

    passed: bool
    violations: tuple = ()
    grid_resolution: Optional[int] = None

    @classmethod
    def from_violations(cls, violations, grid_resolution=None):
        violations = tuple(violations)
        return cls(not violations, violations, grid_resolution)

    def to_dict(self):
        return {
            "passed": self.passed,
            "grid_resolution": self.grid_resolution,
            "violations": [
                {"axiom": v.axiom, "point": list(v.point), "observed": v.observed, "bound": v.bound}
                for v in self.violations
            ],
        }


def _lattice_values(spec, resolution):
    grid = np.array(lattice(resolution))
    return grid, spec(grid[:, None], grid[None, :])


def validate_semicopula(spec, resolution=64):
    """Check the semicopula axioms on the (r+1)x(r+1) lattice over [0,1]^2."""
    r = check_resolution(resolution)
    grid, vals = _lattice_values(spec, r)
    found = []
    for i, x in enumerate(grid):
        x = float(x)
        for j, y in enumerate(grid):
            y = float(y)
            s = float(vals[i, j])
            if i == r and abs(s - y) > ATOL:
                found.append(Violation("neutral_element", (x, y), s, y))
            elif j == r and abs(s - x) > ATOL:
                found.append(Violation("neutral_element", (x, y), s, x))
            if s > min(x, y) + ATOL:
                found.append(Violation("bounded_by_min", (x, y), s, min(x, y)))
            if (i == 0 or j == 0) and abs(s) > ATOL:
                found.append(Violation("zero_annihilator", (x, y), s, 0.0))
            if i < r and s > vals[i + 1, j] + ATOL:
                found.append(Violation("monotone_in_x", (x, y), s, float(vals[i + 1, j])))
            if j < r and s > vals[i, j + 1] + ATOL:
                found.append(Violation("monotone_in_y", (x, y), s, float(vals[i, j + 1])))
    return ValidationReport.from_violations(found, r)


class GapResult(NamedTuple):
    gap: float
    argmax: tuple


def lukasiewicz_gap(spec, resolution=64):
    """Largest |S - S_L| over the lattice and the lexicographically first point attaining it."""
    r = check_resolution(resolution)
    grid, vals = _lattice_values(spec, r)
    diff = np.abs(vals - np.maximum(grid[:, None] + grid[None, :] - 1.0, 0.0))
    best = float(diff.max())
    # row-major scan: first hit is the smallest c, then the smallest b
    i, j = np.argwhere(diff >= best - ATOL)[0]
    return GapResult(best, (float(grid[i]), float(grid[j])))
