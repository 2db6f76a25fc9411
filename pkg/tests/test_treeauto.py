"""Portrait arithmetic against the independent node-string oracle."""

import math
import random

import pytest

import oracles
from imgroups.errors import ResourceLimitError
from imgroups.treeauto import (
    Portrait,
    adding_machine,
    are_conjugate,
    compose,
    identity,
    invert,
    iter_all,
    pair,
    sigma,
)


def rand_portrait(rng, level):
    return Portrait(level, [rng.getrandbits(1) for _ in range((1 << level) - 1)])


class TestWireFormat:
    def test_known_encodings(self):
        assert adding_machine(3).encode() == "3:51"
        assert sigma(2).encode() == "2:4"
        assert identity(0).encode() == "0:"
        assert Portrait.decode("3:51") == adding_machine(3)
        assert Portrait.decode("2:4") == sigma(2)
        assert Portrait.decode("0:") == identity(0)

    def test_roundtrip_random(self):
        rng = random.Random(11)
        for _ in range(300):
            u = rand_portrait(rng, rng.randint(0, 5))
            assert Portrait.decode(u.encode()) == u

    @pytest.mark.parametrize("bad", [
        "1:",        # missing digits
        "2:X",       # not hex
        "3:FF",      # value needs 8 bits, level 3 has 7
        "-1:0",      # negative level
        "2:41",      # too many bits for level 2
        "2",         # no colon
        ":4",        # no level
        "2:4:1",     # extra field
    ])
    def test_malformed_rejected(self, bad):
        with pytest.raises(ValueError):
            Portrait.decode(bad)


class TestAction:
    def test_adding_machine_leaf_walk(self):
        # frozen from the oracle walk: +1 on 3-bit reversed binary counters
        a = adding_machine(3)
        assert a.leaf_permutation() == [4, 5, 6, 7, 2, 3, 1, 0]
        assert a.leaf_permutation() == oracles.leaf_permutation(a.swaps, 3)

    def test_leaf_permutation_matches_oracle(self):
        rng = random.Random(23)
        for _ in range(200):
            lvl = rng.randint(1, 4)
            u = rand_portrait(rng, lvl)
            assert u.leaf_permutation() == oracles.leaf_permutation(u.swaps, lvl)

    def test_left_factor_acts_first(self):
        rng = random.Random(5)
        for _ in range(200):
            lvl = rng.randint(1, 4)
            u, v = rand_portrait(rng, lvl), rand_portrait(rng, lvl)
            w = u * v
            pu, pv = u.leaf_permutation(), v.leaf_permutation()
            assert w.leaf_permutation() == [pv[pu[i]] for i in range(1 << lvl)]

    def test_composition_matches_oracle(self):
        rng = random.Random(7)
        for _ in range(200):
            lvl = rng.randint(1, 4)
            u, v = rand_portrait(rng, lvl), rand_portrait(rng, lvl)
            assert tuple((u * v).swaps) == oracles.compose_swaps(u.swaps, v.swaps, lvl)

    def test_group_axioms(self):
        rng = random.Random(31)
        for _ in range(100):
            lvl = rng.randint(1, 4)
            u, v, w = (rand_portrait(rng, lvl) for _ in range(3))
            e = identity(lvl)
            assert (u * v) * w == u * (v * w)
            assert u * e == u == e * u
            assert u * u.inverse() == e == u.inverse() * u
            assert tuple(u.inverse().swaps) == oracles.invert_swaps(u.swaps, lvl)

    def test_functional_aliases(self):
        assert compose(sigma(2), sigma(2)) == identity(2)
        assert invert(sigma(2)) == sigma(2)
        assert invert(adding_machine(3)).order() == adding_machine(3).order() == 8
        rng = random.Random(43)
        for _ in range(50):
            u, v = rand_portrait(rng, 3), rand_portrait(rng, 3)
            assert compose(u, v) == u * v
            assert invert(u) == u.inverse()


class TestInvariants:
    def test_cycle_type_and_order(self):
        rng = random.Random(13)
        for _ in range(150):
            lvl = rng.randint(1, 4)
            u = rand_portrait(rng, lvl)
            ct = oracles.cycle_type_of_perm(u.leaf_permutation())
            assert u.cycle_type() == ct
            assert u.order() == math.lcm(*ct)

    def test_sign_is_permutation_parity(self):
        # two routes: the recursive character and brute parity at each depth
        rng = random.Random(17)
        for _ in range(150):
            lvl = rng.randint(1, 4)
            u = rand_portrait(rng, lvl)
            for m in range(1, lvl + 1):
                parity = oracles.perm_parity(u.restrict(m).leaf_permutation())
                assert u.sign(m) == parity

    def test_sign_multiplicative(self):
        rng = random.Random(19)
        for _ in range(100):
            u, v = rand_portrait(rng, 4), rand_portrait(rng, 4)
            for m in range(1, 5):
                assert (u * v).sign(m) == u.sign(m) * v.sign(m)

    def test_odometer_two_routes(self):
        rng = random.Random(29)
        for _ in range(100):
            lvl = rng.randint(1, 4)
            u = rand_portrait(rng, lvl)
            single_cycle = all(
                u.restrict(m).cycle_type() == (1 << m,) for m in range(1, lvl + 1)
            )
            assert u.is_level_odometer() == single_cycle
        a = adding_machine(4)
        assert a.is_level_odometer()
        g = rand_portrait(rng, 4)
        assert (g.inverse() * a * g).is_level_odometer()
        assert not sigma(4).is_level_odometer()

    def test_sections_rebuild(self):
        rng = random.Random(37)
        for _ in range(100):
            u = rand_portrait(rng, rng.randint(1, 4))
            left, right, root = u.sections()
            assert pair(left, right, root) == u


class TestConjugacy:
    def test_matches_orbit_enumeration(self):
        omega = list(iter_all(3))
        rng = random.Random(41)
        sample = rng.sample(omega, 24)
        classes = {}
        for u in sample:
            classes[u] = frozenset(g.inverse() * u * g for g in omega)
        for u in sample:
            for v in sample:
                assert are_conjugate(u, v) == (v in classes[u])

    def test_basic_facts(self):
        assert are_conjugate(identity(3), identity(3))
        assert not are_conjugate(identity(3), sigma(3))
        a = adding_machine(4)
        g = Portrait(4, [1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1])
        assert are_conjugate(a, g.inverse() * a * g)


class TestEnumeration:
    def test_counts(self):
        for lvl in range(4):
            assert sum(1 for _ in iter_all(lvl)) == 1 << ((1 << lvl) - 1)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            list(iter_all(5))

    def test_cap_override(self):
        # the cap is a default, not a hard wall
        it = iter_all(4, cap=4)
        assert sum(1 for _ in it) == 1 << 15
