"""The smallest semicopula-based integral ``I(mu, f) = sup_t S(t, mu({f >= t}))``.

On a finite space ``t -> mu({f >= t})`` is a left-continuous step function
that is constant on each interval ``(v_{k-1}, v_k]`` between consecutive
distinct values of ``f``.  Because ``S`` is non-decreasing in its first
argument, the supremum over such an interval is attained at its right end,
so the integral is an exact maximum over the values of ``f``.
"""

from dataclasses import dataclass

import numpy as np

from ._checks import DomainError
from .capacity import level_set_mask
from .semicopula import MIN, PRODUCT


@dataclass(frozen=True)
class IntegralResult:
    value: float
    argmax_threshold: float
    level_at_argmax: float

    def to_dict(self):
        return {"value": self.value, "argmax_t": self.argmax_threshold, "level": self.level_at_argmax}

    @classmethod
    def from_dict(cls, data):
        return cls(float(data["value"]), float(data["argmax_t"]), float(data["level"]))


def seminormed_integral(semicopula, inst):
    """Exact integral by threshold reduction.

    Candidates are ``t = 0`` and every distinct positive value of ``f``;
    the first (smallest) threshold reaching the maximum is reported.  For
    ``f == 0`` the result is 0 at ``t = 0``.
    """
    inst.validate()
    mu = inst.capacity
    best = IntegralResult(semicopula(0.0, mu[inst.space.full]), 0.0, mu[inst.space.full])
    for v in sorted(set(inst.function.values)):
        if v <= 0.0:
            continue
        level = mu[level_set_mask(inst.function, v)]
        s = semicopula(v, level)
        if s > best.value:
            best = IntegralResult(s, v, level)
    return best


def sugeno_integral(inst):
    return seminormed_integral(MIN, inst)


def shilkret_integral(inst):
    return seminormed_integral(PRODUCT, inst)


def grid_oracle(semicopula, inst, step=1e-3):
    """Brute-force maximum of ``S(t, mu({f >= t}))`` over a dense threshold grid.

    The grid ``{0, step, 2*step, ..., 1}`` is joined with the exact values of
    ``f`` so that semicopulas with jumps are sampled where the maximum sits.
    """
    if not 0.0 < step <= 0.01:
        raise DomainError(f"oracle step must lie in (0, 0.01], got {step!r}")
    inst.validate()
    n_steps = int(np.floor(1.0 / step))
    t = np.concatenate([np.arange(n_steps + 1) * step, [1.0], inst.function.values])
    t = np.unique(np.clip(t, 0.0, 1.0))
    f = np.asarray(inst.function.values)
    members = f[None, :] >= t[:, None]
    masks = members @ (1 << np.arange(len(f)))
    levels = inst.capacity.array[masks]
    return float(np.max(semicopula(t, levels)))
