"""Translation invariance ``I(mu, f + a) = I(mu, f) + a`` and its counterexamples.

For a semicopula ``S`` and the two-point instance of
:func:`~semint.capacity.witness_instance` the invariance gap collapses to

    (a v S(1, b)) - (S(1 - a, b) + a)  =  S_L(c, b) - S(c, b),   c = 1 - a,

so every lattice point where ``S`` differs from the Lukasiewicz t-norm yields
a concrete, independently checkable counterexample.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from ._checks import ATOL, VIOLATION_TOL, check_resolution, check_unit, lattice
from .capacity import (
    FUNCTION_LATTICE,
    Instance,
    level_set_mask,
    random_instance,
    shift_instance,
    witness_instance,
)
from .integral import seminormed_integral
from .semicopula import LUKASIEWICZ

PHASE2_NOTE = (
    "phase 1 searched the semicopula lattice for a witness; phase 2 evaluated random instances "
    "as extra assurance and is not a proof of invariance"
)


class ReductionMismatch(AssertionError):
    """The shifted integral disagrees with its decomposition into ``a`` and shifted thresholds."""


class Residual(NamedTuple):
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class InvarianceWitness:
    """Counterexample certificate for one semicopula.

    ``b`` is the plateau measure of the two-point instance; it is None for
    witnesses found by random search, whose instance is arbitrary.
    """

    a: float
    b: Optional[float]
    c: float
    instance: Instance
    lhs: float
    rhs: float
    gap: float
    semicopula: object = None


@dataclass(frozen=True)
class InvarianceVerdict:
    invariant: bool
    witness: Optional[InvarianceWitness]
    samples_checked: int
    max_residual_seen: float
    note: str = ""


def _shifted_lhs(semicopula, inst, a):
    # a v max over positive thresholds t of S(t + a, mu({f >= t}))
    out = a
    for v in set(inst.function.values):
        if v > 0.0:
            out = max(out, semicopula(min(v + a, 1.0), inst.capacity[level_set_mask(inst.function, v)]))
    return out


def translation_residual_instance(semicopula, inst, a):
    """Both sides of the invariance equation on one instance, and their difference.

    The left side is also recomputed from the decomposition
    ``a v sup_{t>0} S(t + a, mu({f >= t}))``; a disagreement beyond 1e-9
    raises :class:`ReductionMismatch`.
    """
    a = check_unit(a, "a")
    shifted = shift_instance(inst, a)
    lhs = seminormed_integral(semicopula, shifted).value
    rhs = seminormed_integral(semicopula, inst).value + a
    decomposed = _shifted_lhs(semicopula, inst, a)
    if abs(lhs - decomposed) > ATOL:
        raise ReductionMismatch(f"I(mu, f+a) = {lhs!r} but the threshold decomposition gives {decomposed!r}")
    return Residual(lhs, rhs, lhs - rhs)


def functional_residual(semicopula, a, b):
    """``(a v S(1, b)) - (S(1 - a, b) + a)``; identically zero only for S_L."""
    a = check_unit(a, "a")
    b = check_unit(b, "b")
    return max(a, semicopula(1.0, b)) - (semicopula(1.0 - a, b) + a)


def make_witness(semicopula, a, b):
    inst = witness_instance(a, b)
    lhs, rhs, gap = translation_residual_instance(semicopula, inst, a)
    return InvarianceWitness(a, b, 1.0 - a, inst, lhs, rhs, gap, semicopula)


def _candidates(semicopula, resolution):
    """Lattice points (c, b) with c < 1, by descending |S - S_L| then ascending (c, b)."""
    grid = np.array(lattice(resolution))
    diff = np.abs(semicopula(grid[:, None], grid[None, :]) - LUKASIEWICZ(grid[:, None], grid[None, :]))
    diff = diff[:-1]  # c = 1 means a = 0
    # round so that float noise does not reorder tied points
    order = np.lexsort((np.arange(diff.size), -np.round(diff.ravel(), 12)))
    for flat in order:
        i, j = divmod(int(flat), resolution + 1)
        yield float(diff[i, j]), float(grid[i]), float(grid[j])


def synthesize_counterexample(semicopula, resolution=64):
    """Witness of non-invariance built from the point where S is farthest from S_L.

    Returns None when S agrees with S_L on the whole lattice (to 1e-9) or when
    no lattice point with ``a > 0`` produces a gap above the violation threshold.
    """
    r = check_resolution(resolution)
    for diff, c, b in _candidates(semicopula, r):
        if diff <= ATOL:
            return None
        w = make_witness(semicopula, 1.0 - c, b)
        if abs(w.gap) > VIOLATION_TOL:
            return w
    return None


def _random_shift(rng, inst):
    headroom = 1.0 - max(inst.function.values)
    top = int(np.floor(headroom * FUNCTION_LATTICE + ATOL))
    return int(rng.integers(0, top + 1)) / FUNCTION_LATTICE


def check_invariance(semicopula, resolution=64, n_samples=1000, seed=0, max_points=6):
    """Decide translation invariance of ``semicopula``.

    Phase 1 runs :func:`synthesize_counterexample`.  If it finds nothing,
    phase 2 evaluates ``n_samples`` random instances on 1..``max_points``
    points with lattice-aligned values and shifts; any gap above 1e-6 is a
    counterexample.  The verdict is invariant only if both phases pass.
    """
    r = check_resolution(resolution)
    witness = synthesize_counterexample(semicopula, r)
    if witness is not None:
        return InvarianceVerdict(False, witness, 1, abs(witness.gap), "counterexample from the lattice search")

    rng = np.random.default_rng(seed)
    worst = 0.0
    for k in range(n_samples):
        n = int(rng.integers(1, max_points + 1))
        max_value = int(rng.integers(0, FUNCTION_LATTICE + 1)) / FUNCTION_LATTICE
        inst = random_instance(n, int(rng.integers(0, 2**63 - 1)), max_value)
        a = _random_shift(rng, inst)
        lhs, rhs, gap = translation_residual_instance(semicopula, inst, a)
        worst = max(worst, abs(gap))
        if abs(gap) > VIOLATION_TOL:
            found = InvarianceWitness(a, None, 1.0 - a, inst, lhs, rhs, gap, semicopula)
            return InvarianceVerdict(False, found, k + 1, worst, "counterexample from random search")
    return InvarianceVerdict(True, None, n_samples, worst, PHASE2_NOTE)


def verify_witness(witness, semicopula=None):
    """Recompute both sides of a certificate from its instance alone."""
    semicopula = semicopula if semicopula is not None else witness.semicopula
    shifted = shift_instance(witness.instance, witness.a)
    lhs = seminormed_integral(semicopula, shifted).value
    rhs = seminormed_integral(semicopula, witness.instance).value + witness.a
    return Residual(lhs, rhs, lhs - rhs)
