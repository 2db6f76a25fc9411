"""Finite quotients of the self-similar group and their subgroup ledger.

The group orders at level 3 are recomputed with the oracle's own closure
over raw bit tuples, so the 2^(n+2) profile is not self-certifying.
"""

import pytest

import oracles
from imgroups.errors import ResourceLimitError
from imgroups.selfsim import (
    LevelGroup,
    abelian_invariants,
    builtin_system_f,
    center,
    centralizer,
    closure,
    commutator_subgroup,
    coset_decomposition,
    generating_set,
    geometric_group,
    load_level_group,
    normal_closure,
    omega_group,
    save_level_group,
    section_pair_count,
    subgroup_H,
    subgroup_U,
    subgroup_index,
    verify_geometric_presentation,
    verify_triple_theorem,
)
from imgroups.treeauto import identity, pair, sigma


@pytest.fixture(scope="module")
def sysf():
    return builtin_system_f()


class TestRecursionSystem:
    def test_generator_unfoldings(self, sysf):
        assert sysf.unfold("a1", 3) == sigma(3)
        assert sysf.unfold("a3", 1) == identity(1)
        # a2 = (a3^-1, a2^-1) sigma: root swap present at every level
        for n in (1, 2, 3, 4):
            a2 = sysf.unfold("a2", n)
            assert a2.swaps[0] == 1
        a2 = sysf.unfold("a2", 4)
        left, right, root = a2.sections()
        assert root == 1
        assert left == sysf.unfold("a3", 3).inverse()
        assert right == sysf.unfold("a2", 3).inverse()

    def test_derived_words(self, sysf):
        g1 = sysf.unfold("gamma1", 4)
        assert g1 == sysf.unfold("a2", 4) * sysf.unfold("a3", 4).inverse()
        g2 = sysf.unfold("gamma2", 4)
        assert g2 == sysf.unfold("a3", 4).inverse() * sysf.unfold("a2", 4)

    def test_level_cap(self, sysf):
        with pytest.raises(ResourceLimitError):
            sysf.unfold("a1", 8)
        with pytest.raises(ValueError):
            sysf.unfold("a1", -1)
        with pytest.raises(ValueError):
            sysf.unfold("nope", 3)

    def test_presentation(self):
        for n in (3, 4):
            checks = verify_geometric_presentation(n)
            assert all(checks.values()), checks


class TestGroupOrders:
    def test_profile(self):
        for n in range(3, 7):
            assert len(geometric_group(n)) == 1 << (n + 2)

    def test_level3_independent_closure(self, sysf):
        gens = [sysf.unfold("a1", 3).swaps, sysf.unfold("a3", 3).swaps]
        assert len(oracles.closure_of_swaps(gens, 3)) == 32

    def test_level4_independent_closure(self, sysf):
        gens = [sysf.unfold("a1", 4).swaps, sysf.unfold("a3", 4).swaps]
        assert len(oracles.closure_of_swaps(gens, 4)) == 64

    def test_omega_orders(self):
        for n in range(4):
            assert len(omega_group(n)) == 1 << ((1 << n) - 1)
        assert geometric_group(3).elements <= omega_group(3).elements


class TestSubgroupLedger:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_indices(self, n):
        g = geometric_group(n)
        assert subgroup_index(g, subgroup_H(1, n)) == 4
        assert subgroup_index(g, subgroup_H(2, n)) == 2
        assert subgroup_index(g, subgroup_H(3, n)) == 2
        assert subgroup_index(g, subgroup_U(n)) == 4

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_abelianization(self, n):
        g = geometric_group(n)
        comm = commutator_subgroup(g)
        assert subgroup_index(g, comm) == 8
        assert abelian_invariants(g) == (2, 4)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_generator_centralizers(self, n, sysf):
        g = geometric_group(n)
        for name in ("a1", "a2", "a3"):
            assert len(centralizer(g, sysf.unfold(name, n))) == 8

    def test_center_is_small(self):
        for n in (3, 4):
            z = center(geometric_group(n))
            assert len(z) == 2

    def test_twist_subgroup_abelian(self):
        for n in (3, 4, 5):
            u = subgroup_U(n)
            elems = list(u.elements)
            assert all(x * y == y * x for x in elems for y in elems)

    def test_coset_decomposition(self):
        g = geometric_group(4)
        u = subgroup_U(4)
        reps, rep_of = coset_decomposition(g, u)
        assert len(reps) == 4
        # U is normal, so one-sided cosets are two-sided
        cosets = {r: frozenset(r * x for x in u.elements) for r in reps}
        covered = set().union(*cosets.values())
        assert covered == g.elements
        assert sum(len(c) for c in cosets.values()) == len(g)
        # every element maps to the representative of its own coset
        assert all(x in cosets[rep_of[x]] for x in g.elements)

    def test_section_pair_counts(self):
        g4 = geometric_group(4)
        g3 = geometric_group(3)
        x3 = next(iter(g3.elements))
        assert section_pair_count(g4, x3) == 1
        g2 = geometric_group(2)
        x2 = next(iter(g2.elements))
        assert section_pair_count(g3, x2) == 2


class TestClosureToolkit:
    def test_closure_vs_normal_closure(self, sysf):
        n = 4
        g = geometric_group(n)
        h2 = normal_closure(g, [sysf.unfold("a2", n)])
        assert h2.elements <= g.elements
        plain = closure([sysf.unfold("a2", n)])
        assert plain.elements <= h2.elements
        assert len(plain) < len(h2)

    def test_generating_set_roundtrip(self):
        g = geometric_group(4)
        gens = generating_set(g)
        assert closure(list(gens)).elements == g.elements

    def test_generating_set_rejects_non_closed(self):
        # size 2 passes the structural checks, but {1, x} with x of order 4
        # is not a subgroup, which generating_set must notice
        g = geometric_group(3)
        x = next(e for e in g.elements if e.order() == 4)
        broken = LevelGroup(3, {identity(3), x})
        with pytest.raises(ValueError):
            generating_set(broken)

    def test_triple_theorem(self):
        for n in (1, 2, 3):
            verify_triple_theorem(n)


class TestPersistence:
    def test_roundtrip(self, tmp_path):
        g = geometric_group(3)
        path = save_level_group(str(tmp_path), "f", "G", g)
        assert path.endswith("f_G_L3.grp")
        back = load_level_group(str(tmp_path), "f", "G", 3)
        assert back is not None
        assert back.elements == g.elements
        assert back.level == 3

    def test_missing_returns_none(self, tmp_path):
        assert load_level_group(str(tmp_path), "f", "G", 3) is None

    @pytest.mark.parametrize("mangle", [
        lambda lines: ["G 4 32"] + lines[1:],          # wrong level
        lambda lines: ["G 3 999"] + lines[1:],         # wrong order
        lambda lines: ["X 3 32"] + lines[1:],          # wrong name
        lambda lines: lines[:-2],                      # truncated body
        lambda lines: lines + ["junk"],                # trailing garbage
        lambda lines: [lines[0]] + ["0:"] + lines[2:],  # element at wrong level
    ])
    def test_corruption_rejected(self, tmp_path, mangle):
        g = geometric_group(3)
        path = save_level_group(str(tmp_path), "f", "G", g)
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(mangle(lines)) + "\n")
        assert load_level_group(str(tmp_path), "f", "G", 3) is None
