"""Tests for interior operators and the saturated-system correspondence."""

import pytest

from satlab.transfer.interior import (
    InteriorOperator,
    enumerate_interior_operators,
    enumerate_saturated,
    f_S_from_layer,
    interior_operator_problem,
    interior_to_saturated,
    saturated_to_interior,
)
from satlab.transfer.systems import TransferSystem, generate_transfer_system, is_saturated
from satlab.utils.validators import InteriorOperatorError, TransferSystemError


def test_identity_operator_gives_identity_system(klein):
    lattice = klein.lattice
    f = InteriorOperator(lattice, tuple(range(len(lattice))))
    assert interior_to_saturated(f) == TransferSystem.identity(lattice)
    assert f.fixed_points() == list(range(len(lattice)))


def test_constant_operator_gives_maximal_system(klein):
    lattice = klein.lattice
    f = InteriorOperator(lattice, (0,) * len(lattice))
    assert interior_to_saturated(f) == TransferSystem.maximal(lattice)
    assert saturated_to_interior(TransferSystem.maximal(lattice)) == f


@pytest.mark.parametrize("values,reason", [
    ((1, 1, 2), "decreasing"),
    ((0, 0, 1), "idempotent"),
    ((0, 1), "expected"),
])
def test_invalid_operators_on_chain(table_of, values, reason):
    lattice = table_of("C4").lattice
    assert reason in interior_operator_problem(lattice, values)
    with pytest.raises(InteriorOperatorError):
        InteriorOperator(lattice, values)


def test_non_monotone_operator(klein):
    assert "monotone" in interior_operator_problem(klein.lattice, (0, 1, 2, 0, 2))


def test_round_trip_on_every_saturated_system(table_of):
    for spec in ("C2xC2", "C12", "C35", "C25"):
        lattice = table_of(spec).lattice
        operators = list(enumerate_interior_operators(lattice))
        systems = [interior_to_saturated(f) for f in operators]
        assert len(set(systems)) == len(systems)
        for f, system in zip(operators, systems):
            assert is_saturated(system)
            assert saturated_to_interior(system) == f


def test_non_saturated_system_has_no_operator(table_of):
    lattice = table_of("C4").lattice
    with pytest.raises(TransferSystemError):
        saturated_to_interior(generate_transfer_system(lattice, [(0, 2)]))


def test_enumerate_saturated_matches_operators(klein):
    assert len(list(enumerate_saturated(klein.lattice))) == len(list(enumerate_interior_operators(klein.lattice)))


def test_f_S_from_layer(klein):
    f = f_S_from_layer(klein.lattice, [1, 2])
    assert f.values == (0, 1, 2, 0, 4)
    assert f.fixed_points() == [0, 1, 2, 4]
    system = interior_to_saturated(f)
    assert (0, 3) in system
    assert (1, 4) not in system


def test_f_S_of_empty_layer_is_constant(table_of):
    lattice = table_of("C25").lattice
    assert f_S_from_layer(lattice, []).values == (0, 0, 0)


@pytest.mark.parametrize("spec,order", [("C2xC2xC2", 2), ("C2xC2xC2", 4), ("C3xC3", 3), ("C5xC5", 5)])
def test_f_S_is_injective_on_a_layer(table_of, spec, order):
    lattice = table_of(spec).lattice
    layer = list(lattice.layer(order))
    seen = {}
    for mask in range(1 << len(layer)):
        chosen = [s for i, s in enumerate(layer) if mask >> i & 1]
        f = f_S_from_layer(lattice, chosen)
        assert [s for s in layer if f(s) == s] == chosen
        assert f.values not in seen
        seen[f.values] = chosen
        assert is_saturated(interior_to_saturated(f))
    assert len(seen) == 1 << len(layer)
