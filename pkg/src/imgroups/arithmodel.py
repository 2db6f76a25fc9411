"""Finite-level models of the arithmetic tree action.

The geometric group describes the monodromy visible over an algebraically
closed constant field.  Over the rationals there is extra room: at each
level the candidates are the automorphisms (x, rho*x)tau with x taken from
the previous model, rho from the previous abelian twist subgroup, and an
arbitrary root swap; a candidate survives if it normalizes both the
geometric group and the twist subgroup at its own level.  Nothing here
assumes the survivors form a group: closure is certified after the fact,
and a brute-force recomputation over the full automorphism group is
available as an independent route at small levels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ModelConstructionError, ResourceLimitError
from .selfsim import (
    LevelGroup,
    closure,
    coset_decomposition,
    commutator,
    generating_set,
    geometric_group,
    normal_closure,
    subgroup_U,
)
from .treeauto import Portrait, identity, iter_all, pair, sigma

ARITH_LEVEL_CAP = 5
ARITH_LEVEL_HARD_CAP = 6


@dataclass(frozen=True)
class ArithLevelModel:
    level: int
    group: LevelGroup
    geometric: LevelGroup
    twist: LevelGroup  # abelian subgroup supplying the lifts to the next level

    @property
    def order(self) -> int:
        return len(self.group)


_MODEL_CACHE: dict[int, ArithLevelModel] = {}


def _first_violation(elements):
    els = sorted(elements)
    present = set(els)
    for u in els:
        if u.inverse() not in present:
            return (u, u)
        for v in els:
            if u * v not in present:
                return (u, v)
    return None


def _normalizes(m: Portrait, gens, target: frozenset) -> bool:
    mi = m.inverse()
    return all((mi * g) * m in target for g in gens)


def build_model(level: int, *, allow_deep: bool = False) -> ArithLevelModel:
    """Construct and certify the level model; results are cached."""
    cap = ARITH_LEVEL_HARD_CAP if allow_deep else ARITH_LEVEL_CAP
    if level < 1:
        raise ValueError(f"level {level} out of range")
    if level > cap:
        raise ResourceLimitError(
            f"model level capped at {cap}"
            + ("" if allow_deep else " (allow_deep=True raises it to "
               f"{ARITH_LEVEL_HARD_CAP})")
        )
    if level in _MODEL_CACHE:
        return _MODEL_CACHE[level]

    G = geometric_group(level)
    U = subgroup_U(level)
    if level == 1:
        grp = LevelGroup(1, {identity(1), sigma(1)}, (sigma(1),))
        model = ArithLevelModel(1, grp, G, U)
        _MODEL_CACHE[1] = model
        return model

    prev = build_model(level - 1, allow_deep=allow_deep)
    gens_g = generating_set(G)
    gens_u = generating_set(U)
    gset, uset = G.elements, U.elements

    survivors: set[Portrait] = set()
    for x in prev.group:
        for rho in prev.twist:
            y = rho * x
            for t in (0, 1):
                m = pair(x, y, t)
                if _normalizes(m, gens_g, gset) and _normalizes(m, gens_u, uset):
                    survivors.add(m)

    missing = [g for g in G if g not in survivors]
    if missing:
        raise ModelConstructionError(
            f"level {level}: {len(missing)} geometric elements dropped, "
            f"first {missing[0].encode()}"
        )
    try:
        grp = LevelGroup(level, survivors)
        gens = generating_set(grp)  # escapes the set iff it is not closed
    except ValueError as exc:
        bad = _first_violation(survivors)
        detail = ""
        if bad is not None:
            detail = f"; witness {bad[0].encode()} * {bad[1].encode()}"
        raise ModelConstructionError(f"level {level}: {exc}{detail}") from None
    for m in grp:
        if m.inverse() not in survivors:
            raise ModelConstructionError(
                f"level {level}: not inverse-closed at {m.encode()}"
            )
    if level <= 4:
        # independent exhaustive route while it is cheap
        bad = grp.verify_closed()
        if bad is not None:
            raise ModelConstructionError(
                f"level {level}: product escapes, witness "
                f"{bad[0].encode()} * {bad[1].encode()}"
            )
    model = ArithLevelModel(level, LevelGroup(level, survivors, tuple(gens)), G, U)
    _MODEL_CACHE[level] = model
    return model


def brute_model_cross_check(level: int) -> tuple[bool, int, int]:
    """Recompute the model by sweeping every level automorphism.

    Same membership conditions, entirely different enumeration: instead of
    assembling candidates from below, every automorphism of the level is
    decomposed and tested.  Returns (agrees, brute order, model order).
    """
    if level > 4:
        raise ResourceLimitError("brute sweep capped at level 4")
    model = build_model(level)
    if level == 1:
        return (True, 2, model.order)
    prev = build_model(level - 1)
    G = geometric_group(level)
    U = subgroup_U(level)
    gens_g = generating_set(G)
    gens_u = generating_set(U)
    brute: set[Portrait] = set()
    for m in iter_all(level):
        left, right, _ = m.sections()
        if left not in prev.group:
            continue
        if right * left.inverse() not in prev.twist:
            continue
        if _normalizes(m, gens_g, G.elements) and _normalizes(m, gens_u, U.elements):
            brute.add(m)
    return (brute == model.group.elements, len(brute), model.order)


def odometer_elements(model: ArithLevelModel) -> tuple[Portrait, ...]:
    """All model elements acting as a single full cycle on the leaves."""
    return tuple(sorted(x for x in model.group if x.is_level_odometer()))


def cycle_type_table(group: LevelGroup) -> dict[tuple[int, ...], int]:
    """How many elements realize each leaf cycle type."""
    table = Counter(x.cycle_type() for x in group)
    return dict(sorted(table.items()))


def frattini_subgroup(model: ArithLevelModel) -> LevelGroup:
    """Squares and commutators; certified against the kernel intersection.

    For a finite 2-group the Frattini subgroup is generated by all squares
    together with the commutator subgroup.  The result is cross-checked
    against the intersection of all index-2 kernels, which is a second
    characterization computed by an unrelated route.
    """
    grp = model.group
    gens = generating_set(grp)
    seeds = {x * x for x in grp}
    comm_seeds = {commutator(a, b) for a in gens for b in gens}
    comm = normal_closure(grp, comm_seeds)
    phi = closure(sorted(seeds | comm.elements), max_size=len(grp))
    kernels = _index2_kernels(model, phi)
    meet = grp.elements
    for k in kernels:
        meet = meet & k.elements
    if meet != phi.elements:
        raise ModelConstructionError(
            f"level {model.level}: Frattini routes disagree "
            f"({len(phi)} vs {len(meet)})"
        )
    return phi


def _index2_kernels(model: ArithLevelModel, phi: LevelGroup) -> list[LevelGroup]:
    grp = model.group
    reps, repmap = coset_decomposition(grp, phi)
    e_rep = repmap[identity(model.level)]
    vecs: dict[Portrait, int] = {e_rep: 0}
    basis: list[Portrait] = []
    for r in reps:
        if r in vecs:
            continue
        basis.append(r)
        bit = 1 << (len(basis) - 1)
        for r0, v0 in list(vecs.items()):
            vecs[repmap[r0 * r]] = v0 | bit
    if len(vecs) != len(reps):  # pragma: no cover - quotient is elementary
        raise ModelConstructionError("quotient by Frattini is not elementary")
    out = []
    for mask in range(1, 1 << len(basis)):
        els = {x for x in grp if (vecs[repmap[x]] & mask).bit_count() % 2 == 0}
        out.append(LevelGroup(model.level, els))
    return out


@dataclass(frozen=True)
class MaximalSubgroup:
    name: str
    group: LevelGroup

    @property
    def index(self) -> int:
        return 2


def maximal_subgroups(model: ArithLevelModel) -> tuple[MaximalSubgroup, ...]:
    """The index-2 subgroups, deterministically named Mmax-01, Mmax-02, ...

    In a 2-group every maximal subgroup has index 2 and contains the
    Frattini subgroup, so they are exactly the kernels of the nontrivial
    characters of the elementary quotient.  Order (and therefore naming)
    follows the character masks over the sorted coset basis.
    """
    phi = frattini_subgroup(model)
    kernels = _index2_kernels(model, phi)
    out = []
    for i, k in enumerate(kernels, start=1):
        if 2 * len(k) != len(model.group):  # pragma: no cover
            raise ModelConstructionError(f"kernel {i} has wrong index")
        generating_set(k)  # raises if the kernel is somehow not closed
        out.append(MaximalSubgroup(name=f"Mmax-{i:02d}", group=k))
    return tuple(out)


@dataclass(frozen=True)
class GrowthReport:
    levels: tuple[int, ...]
    model_orders: tuple[int, ...]
    geometric_orders: tuple[int, ...]
    growth_factors: tuple[int, ...]  # model order ratios, level n vs n-1
    odometer_counts: tuple[int, ...]


def order_growth_report(max_level: int = ARITH_LEVEL_CAP, *,
                        allow_deep: bool = False) -> GrowthReport:
    levels = tuple(range(1, max_level + 1))
    models = [build_model(n, allow_deep=allow_deep) for n in levels]
    orders = tuple(m.order for m in models)
    factors = tuple(orders[i] // orders[i - 1] for i in range(1, len(orders)))
    return GrowthReport(
        levels=levels,
        model_orders=orders,
        geometric_orders=tuple(len(m.geometric) for m in models),
        growth_factors=factors,
        odometer_counts=tuple(len(odometer_elements(m)) for m in models),
    )
