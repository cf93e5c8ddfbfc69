import pytest
from hypothesis import given, settings, strategies as st

from semint import (
    Capacity,
    DomainError,
    FiniteSpace,
    Instance,
    MeasurableFunction,
    StructuralError,
    level_set_measure,
    random_capacity,
    random_function,
    shift_function,
    validate_capacity,
    witness_instance,
)

from conftest import instances


def cap(values):
    n = {2: 1, 4: 2, 8: 3}[len(values)]
    return Capacity(FiniteSpace.of_size(n), values)


class TestFiniteSpace:
    def test_labels_distinct(self):
        with pytest.raises(StructuralError):
            FiniteSpace(("a", "a"))

    @pytest.mark.parametrize("n", [0, 17])
    def test_size_bounds(self, n):
        with pytest.raises(StructuralError):
            FiniteSpace.of_size(n)

    def test_masks(self):
        space = FiniteSpace(("a", "b", "c"))
        assert space.mask(["a", "c"]) == 0b101
        assert space.labels(0b110) == ("b", "c")
        assert space.full == 7


class TestValidateCapacity:
    def test_witness_shape_passes(self):
        assert validate_capacity(cap((0.0, 0.5, 0.0, 1.0))).passed

    def test_nonzero_empty_set(self):
        report = validate_capacity(cap((0.1, 1.0)))
        assert not report.passed
        assert [v.axiom for v in report.violations] == ["empty_set"]
        assert report.violations[0].observed == 0.1

    def test_constructed_breach(self):
        report = validate_capacity(cap((0.0, 0.8, 0.2, 0.5)))
        axioms = [(v.axiom, v.point) for v in report.violations]
        assert ("whole_space", ("x1", "x2")) in axioms
        assert ("monotone", (("x1",), ("x1", "x2"))) in axioms
        hit = [v for v in report.violations if v.axiom == "monotone"][0]
        assert (hit.observed, hit.bound) == (0.8, 0.5)
        # {x2} -> X is 0.2 <= 0.5, fine
        assert len([v for v in report.violations if v.axiom == "monotone"]) == 1

    def test_out_of_range_value(self):
        report = validate_capacity(cap((0.0, 1.5, 0.5, 1.0)))
        assert "unit_range" in {v.axiom for v in report.violations}

    def test_wrong_size_is_structural(self):
        with pytest.raises(StructuralError):
            Capacity(FiniteSpace.of_size(2), (0.0, 1.0))


class TestLevelSets:
    def test_witness_profile(self):
        inst = witness_instance(0.5, 0.5)
        assert level_set_measure(inst, 0.3) == 0.5
        assert level_set_measure(inst, 0.0) == 1.0
        assert level_set_measure(inst, 0.6) == 0.0

    @given(instances())
    def test_zero_threshold_is_whole_space(self, inst):
        assert level_set_measure(inst, 0.0) == 1.0

    @given(instances(), st.lists(st.integers(0, 64), min_size=2, max_size=2))
    def test_non_increasing(self, inst, ks):
        lo, hi = sorted(k / 64 for k in ks)
        assert level_set_measure(inst, lo) >= level_set_measure(inst, hi)


class TestWitnessInstance:
    def test_half_half(self):
        inst = witness_instance(0.5, 0.5)
        assert inst.function.values == (0.5, 0.0)
        assert inst.capacity.measure(["x1"]) == 0.5
        assert inst.capacity.measure(["x2"]) == 0.0

    def test_full_shift_has_no_plateau(self):
        inst = witness_instance(1.0, 0.3)
        assert inst.function.values == (0.0, 0.0)
        assert [level_set_measure(inst, t) for t in (0.0, 1e-6, 0.5, 1.0)] == [1.0, 0.0, 0.0, 0.0]

    def test_quarter_shift_full_plateau(self):
        # enumerate level sets of the two-point instance directly
        inst = witness_instance(0.25, 1.0)
        for t in (0.0, 0.3, 0.75):
            assert level_set_measure(inst, t) == 1.0
        for t in (0.75 + 1e-6, 0.9, 1.0):
            assert level_set_measure(inst, t) == 0.0

    def test_zero_shift_rejected(self):
        with pytest.raises(DomainError):
            witness_instance(0.0, 0.5)

    @given(st.integers(1, 64), st.integers(0, 64))
    def test_profile_property(self, ka, kb):
        a, b = ka / 64, kb / 64
        inst = witness_instance(a, b)
        assert validate_capacity(inst.capacity).passed
        d = 1e-6
        c = 1 - a
        profile = {t: level_set_measure(inst, min(t, 1.0)) for t in (0.0, d, c, c + d, 1.0)}
        assert profile[0.0] == 1.0
        assert profile[c + d] == 0.0 and profile[1.0] == 0.0
        if a < 1:
            assert profile[d] == b and profile[c] == b


class TestShift:
    def test_examples(self):
        space = FiniteSpace.of_size(2)
        assert shift_function(MeasurableFunction(space, (0.5, 0.0)), 0.5).values == (1.0, 0.5)
        assert shift_function(MeasurableFunction(space, (0.3, 0.7)), 0.3).values == pytest.approx((0.6, 1.0))

    def test_overflow_names_point(self):
        f = MeasurableFunction(FiniteSpace.of_size(2), (0.5, 0.0))
        with pytest.raises(DomainError, match="x1"):
            shift_function(f, 0.6)

    def test_function_values_checked(self):
        with pytest.raises(DomainError):
            MeasurableFunction(FiniteSpace.of_size(1), (1.5,))


class TestRandom:
    def test_single_point(self):
        assert random_capacity(FiniteSpace.of_size(1), 5).values == (0.0, 1.0)

    def test_n3_seed42_valid(self):
        assert validate_capacity(random_capacity(FiniteSpace.of_size(3), 42)).passed

    def test_deterministic(self):
        space = FiniteSpace.of_size(2)
        assert random_capacity(space, 9) == random_capacity(space, 9)
        assert random_function(space, 7, 0.5) == random_function(space, 7, 0.5)

    @settings(max_examples=60)
    @given(st.integers(1, 6), st.integers(0, 2**32 - 1))
    def test_always_monotone(self, n, seed):
        c = random_capacity(FiniteSpace.of_size(n), seed)
        mu = c.values
        # exhaustive subset/superset check, independent of validate_capacity
        for a in range(len(mu)):
            for b in range(len(mu)):
                if a & b == a:
                    assert mu[a] <= mu[b]
        assert mu[0] == 0.0 and mu[-1] == 1.0

    def test_zero_max_value(self):
        assert random_function(FiniteSpace.of_size(4), 3, 0.0).values == (0.0,) * 4

    @given(st.integers(0, 2**32 - 1), st.integers(0, 64))
    def test_range_and_lattice(self, seed, k):
        f = random_function(FiniteSpace.of_size(5), seed, k / 64)
        assert all(v <= k / 64 and (v * 64).is_integer() for v in f.values)


def test_instance_space_mismatch():
    with pytest.raises(StructuralError):
        Instance(cap((0.0, 0.5, 0.5, 1.0)), MeasurableFunction(FiniteSpace(("a", "b")), (0.1, 0.2)))
