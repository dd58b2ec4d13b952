"""Tests for group specs and subgroup lattices."""

import numpy as np
import pytest

from satlab.groups.abelian import GroupSpec, abelian_groups_of_order, factorize, parse_group, prime_power_exponent
from satlab.groups.lattice import enumerate_subgroups, rank_of_pair
from satlab.utils.validators import BudgetExceededError, GroupSpecError, SubgroupRelationError


class TestParseGroup:

    def test_single_factor(self):
        group = parse_group("C5")
        assert group.orders == (5,)
        assert group.order == 5

    def test_product(self):
        group = parse_group("C2xC2xC2")
        assert group.orders == (2, 2, 2)
        assert group.order == 8
        assert group.label == "C2xC2xC2"

    def test_whitespace_is_stripped(self):
        assert parse_group("  C35 ").orders == (35,)

    @pytest.mark.parametrize("spec", ["", "C1", "D5", "C2x", "c5", "C2*C3", "C0"])
    def test_invalid_specs(self, spec):
        with pytest.raises(GroupSpecError):
            parse_group(spec)

    def test_direct_construction_rejects_small_factor(self):
        with pytest.raises(GroupSpecError):
            GroupSpec((4, 1))


class TestGroupSpec:

    def test_primary_parts(self):
        group = parse_group("C12xC2")
        two, three = group.primary_parts
        assert (two.prime, two.indices, two.order, two.exponent) == (2, (0, 1), 8, 3)
        assert (three.prime, three.indices, three.order) == (3, (0,), 3)
        assert group.primes == (2, 3)
        assert not group.is_p_group

    def test_part_rejects_non_divisor(self):
        with pytest.raises(GroupSpecError):
            parse_group("C25").part(3)

    def test_encode_decode(self):
        group = parse_group("C4xC6")
        for code in range(group.order):
            assert int(group.encode(group.decode(code))) == code

    def test_element_order(self):
        group = parse_group("C4xC6")
        assert group.element_order((2, 3)) == 2
        assert group.element_order((1, 1)) == 12
        assert group.element_order((0, 0)) == 1

    def test_factorize_and_prime_powers(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert prime_power_exponent(125, 5) == 3
        assert prime_power_exponent(1, 7) == 0
        assert prime_power_exponent(12, 2) == -1


def test_abelian_groups_of_order():
    assert [g.orders for g in abelian_groups_of_order(8)] == [(8,), (4, 2), (2, 2, 2)]
    assert [g.label for g in abelian_groups_of_order(12)] == ["C4xC3", "C2xC2xC3"]
    assert [g.orders for g in abelian_groups_of_order(7)] == [(7,)]
    assert abelian_groups_of_order(1) == []


class TestSubgroupLattice:

    @pytest.mark.parametrize("spec,count", [
        ("C4", 3), ("C2xC2", 5), ("C12", 6), ("C35", 4), ("C5xC5", 8),
        ("C2xC2xC2", 16), ("C3xC3xC3", 28), ("C4xC2", 8),
    ])
    def test_subgroup_counts(self, spec, count):
        assert len(enumerate_subgroups(parse_group(spec))) == count

    def test_canonical_order(self):
        lattice = enumerate_subgroups(parse_group("C2xC2"))
        assert lattice[lattice.bottom].order == 1
        assert lattice[lattice.top].order == 4
        orders = [s.order for s in lattice]
        assert orders == sorted(orders)
        assert [s.id for s in lattice] == list(range(5))

    def test_chain_c4(self):
        lattice = enumerate_subgroups(parse_group("C4"))
        assert lattice.maximal_subgroups(lattice.top) == [1]
        assert lattice.maximal_subgroups(1) == [0]
        assert lattice.strict_pairs() == [(0, 1), (0, 2), (1, 2)]

    def test_meet_and_join(self):
        lattice = enumerate_subgroups(parse_group("C2xC2"))
        assert lattice.meet[1, 2] == lattice.bottom
        assert lattice.join[1, 2] == lattice.top
        assert lattice.meet[1, lattice.top] == 1
        assert lattice.join[0, 3] == 3

    def test_membership_uses_cached_element_set(self):
        lattice = enumerate_subgroups(parse_group("C2xC4"))
        sub = lattice[lattice.generated([(0, 2)])]
        assert sub.element_set is sub.element_set
        assert sub.element_set == frozenset(sub.elements)
        assert (0, 2) in sub and (0, 0) in sub
        assert [0, 2] in sub
        assert (1, 0) not in sub and (0, 1) not in sub

    def test_klein_covers(self):
        lattice = enumerate_subgroups(parse_group("C2xC2"))
        assert lattice.maximal_subgroups(lattice.top) == [1, 2, 3]
        assert list(lattice.open_interval(1, lattice.top)) == [2, 3, 4]

    def test_find_and_generated(self):
        lattice = enumerate_subgroups(parse_group("C2xC2"))
        diagonal = lattice.find([(0, 0), (1, 1)])
        assert lattice[diagonal].order == 2
        assert lattice.generated([(1, 1)]) == diagonal
        assert lattice.generated([(1, 0), (0, 1)]) == lattice.top
        assert lattice.generated([]) == lattice.bottom
        with pytest.raises(SubgroupRelationError):
            lattice.find([(1, 0)])

    def test_p_rank_and_parts(self):
        assert enumerate_subgroups(parse_group("C5xC5")).p_rank(5) == 2
        assert enumerate_subgroups(parse_group("C2xC2xC2")).p_rank(2) == 3
        lattice = enumerate_subgroups(parse_group("C12"))
        assert lattice.p_rank(2) == 1
        assert lattice.p_rank(3) == 1
        assert lattice[lattice.part_top([3])].order == 3
        assert lattice[lattice.part_top([2])].order == 4
        assert lattice.part_top([2, 3]) == lattice.top
        assert lattice[lattice.component(lattice.top, [2])].order == 4

    def test_rank_of_pair(self):
        lattice = enumerate_subgroups(parse_group("C4"))
        assert rank_of_pair(lattice, 0, 2) == 2
        assert rank_of_pair(lattice, 1, 1) == 0
        assert rank_of_pair(lattice, 0, 2, p=2) == 2

    def test_rank_of_pair_errors(self):
        klein = enumerate_subgroups(parse_group("C2xC2"))
        with pytest.raises(SubgroupRelationError):
            rank_of_pair(klein, 1, 2)
        c6 = enumerate_subgroups(parse_group("C6"))
        with pytest.raises(SubgroupRelationError):
            rank_of_pair(c6, c6.bottom, c6.top)


class TestBudgets:

    def test_element_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            enumerate_subgroups(parse_group("C5xC5"), max_elements=10)
        assert info.value.limit == 10
        assert info.value.actual == 25

    def test_subgroup_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_subgroups(parse_group("C2xC2xC2"), max_subgroups=10)


def _check_meets_and_joins(spec, max_partners=400):
    lattice = enumerate_subgroups(parse_group(spec))
    n = len(lattice)
    partners = range(n)
    if n > max_partners:
        partners = np.random.default_rng(len(spec)).choice(n, size=max_partners, replace=False)
    for a in range(n):
        left = lattice[a].element_set
        for b in (int(x) for x in partners):
            right = lattice[b].element_set
            meet, join = lattice[int(lattice.meet[a, b])], lattice[int(lattice.join[a, b])]
            assert meet.element_set == left & right
            # |A + B| = |A| |B| / |A meet B| in an Abelian group
            assert join.element_set >= left | right
            assert join.order * meet.order == lattice[a].order * lattice[b].order
            assert bool(lattice.leq[a, b]) == (left <= right)


class TestLatticeAgainstElementSets:

    @pytest.mark.parametrize("spec", [g.label for n in range(2, 17) for g in abelian_groups_of_order(n)])
    def test_small_groups(self, spec):
        _check_meets_and_joins(spec)

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", [g.label for n in range(17, 65) for g in abelian_groups_of_order(n)])
    def test_groups_up_to_64(self, spec):
        _check_meets_and_joins(spec)
