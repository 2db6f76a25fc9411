"""Arithmetic model construction, growth, Frattini data, maximal subgroups.

The model filter is cross-checked against a full sweep of the ambient
automorphism group at every level where that sweep is affordable, and
the Frattini subgroup is recomputed here as the intersection of all
fifteen maximal subgroups, a third route independent of both internal
ones.
"""

import pytest

from imgroups.arithmodel import (
    ARITH_LEVEL_CAP,
    build_model,
    brute_model_cross_check,
    cycle_type_table,
    frattini_subgroup,
    maximal_subgroups,
    odometer_elements,
    order_growth_report,
)
from imgroups.errors import ResourceLimitError
from imgroups.selfsim import geometric_group, subgroup_index
from imgroups.treeauto import sigma

EXPECTED_ORDERS = {1: 2, 2: 8, 3: 64, 4: 256, 5: 1024}

# every cycle type on 16 leaves that the level-4 model realizes, with
# element counts; frozen after the exhaustive enumeration agreed with
# the recursive construction
M4_CYCLE_TABLE = {
    (1,) * 16: 1,
    (2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1): 6,
    (2, 2, 2, 2, 2, 2, 1, 1, 1, 1): 32,
    (2, 2, 2, 2, 2, 2, 2, 2): 33,
    (4, 4, 4, 2, 1, 1): 32,
    (4, 4, 4, 4): 120,
    (8, 8): 32,
}


@pytest.fixture(scope="module")
def m4():
    return build_model(4)


class TestConstruction:
    def test_orders(self):
        for n, expected in EXPECTED_ORDERS.items():
            assert build_model(n).order == expected

    def test_growth_profile(self):
        rep = order_growth_report(5)
        assert rep.model_orders == (2, 8, 64, 256, 1024)
        assert rep.growth_factors == (4, 8, 4, 4)
        assert rep.geometric_orders == (2, 8, 32, 64, 128)
        assert rep.odometer_counts == (1, 2, 0, 0, 0)

    def test_contains_geometric(self):
        for n in range(1, 6):
            model = build_model(n)
            assert geometric_group(n).elements <= model.group.elements
            assert sigma(n) in model.group

    def test_inverse_closed(self, m4):
        assert all(x.inverse() in m4.group for x in m4.group.elements)

    def test_level_cap(self):
        with pytest.raises(ResourceLimitError):
            build_model(ARITH_LEVEL_CAP + 1)
        with pytest.raises(ValueError):
            build_model(0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_brute_sweep_agreement(self, n):
        agrees, brute_order, model_order = brute_model_cross_check(n)
        assert agrees
        assert brute_order == model_order == EXPECTED_ORDERS[n]

    def test_geometric_index_at_top(self):
        m5 = build_model(5)
        assert subgroup_index(m5.group, geometric_group(5)) == 8


class TestElementStatistics:
    def test_odometers_vanish_from_level_3(self):
        for n in (3, 4, 5):
            assert odometer_elements(build_model(n)) == ()

    def test_low_level_odometers(self):
        assert len(odometer_elements(build_model(1))) == 1
        assert len(odometer_elements(build_model(2))) == 2

    def test_m4_cycle_table(self, m4):
        table = cycle_type_table(m4.group)
        assert table == M4_CYCLE_TABLE
        assert sum(table.values()) == 256

    def test_no_16_cycle(self, m4):
        assert (16,) not in cycle_type_table(m4.group)


class TestFrattini:
    def test_index_16(self, m4):
        phi = frattini_subgroup(m4)
        assert subgroup_index(m4.group, phi) == 16

    def test_equals_intersection_of_maximals(self, m4):
        # third route: meet of all maximal subgroups
        phi = frattini_subgroup(m4)
        meet = set(m4.group.elements)
        for sub in maximal_subgroups(m4):
            meet &= sub.group.elements
        assert meet == phi.elements


class TestMaximalSubgroups:
    def test_count_and_names(self, m4):
        subs = maximal_subgroups(m4)
        assert len(subs) == 15
        assert [s.name for s in subs] == [f"Mmax-{i:02d}" for i in range(1, 16)]

    def test_all_index_two(self, m4):
        for sub in maximal_subgroups(m4):
            assert sub.index == 2
            assert subgroup_index(m4.group, sub.group) == 2

    def test_pairwise_distinct(self, m4):
        seen = {frozenset(s.group.elements) for s in maximal_subgroups(m4)}
        assert len(seen) == 15

    def test_names_stable_across_rebuilds(self, m4):
        first = {s.name: frozenset(s.group.elements) for s in maximal_subgroups(m4)}
        second = {s.name: frozenset(s.group.elements) for s in maximal_subgroups(m4)}
        assert first == second
