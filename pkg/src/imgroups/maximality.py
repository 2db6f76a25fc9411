"""Level-4 maximality certificates for arboreal Galois groups.

For a rational base point a outside the postcritical set {0, 2}, the
Galois group of the fourth iterated preimage tower embeds (up to
conjugacy) in the level-4 arithmetic model, and it equals the model as
soon as it is contained in no maximal subgroup.  Two elimination routes
feed the certificate:

* Frobenius route: the factorization degrees of the specialized level-4
  numerator mod a good prime form the cycle type of an actual group
  element; a cycle type realized by the model but absent from a maximal
  subgroup's table rules that subgroup out (cycle types are conjugation
  invariants, so conjugacy ambiguity is harmless).

* Square-class route: the level-4 splitting field contains
  Q(i, sqrt(2), sqrt(a), sqrt(2-a)), and the intersection of the
  corresponding four index-2 kernels is exactly the Frattini subgroup of
  the model.  If the four square classes are independent, the group
  surjects onto the rank-4 Frattini quotient, so no maximal subgroup
  (each an index-2 character kernel) can contain it.

Five of the fifteen maximal subgroups realize every cycle type the full
model does, so the Frobenius route is structurally blind to them; those
five are decided by the square-class route alone.  The other ten must
earn a concrete prime witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .arithmodel import (
    ArithLevelModel,
    build_model,
    cycle_type_table,
    maximal_subgroups,
)
from .errors import (
    ExcludedBasePointError,
    InsufficientDataError,
    ModelInconsistencyError,
)
from .polyarith import (
    factor_degrees_mod_p,
    primes_up_to,
    specialize_numerator,
    squarefree_part,
)

DEFAULT_PRIME_BOUND = 10**4
MIN_USABLE_PRIMES = 5

SQUARE_CLASS_LABELS = ("-1", "2", "a", "2-a")


@dataclass(frozen=True)
class BasePoint:
    a: Fraction

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if self.a == 0 or self.a == 2:
            raise ExcludedBasePointError(
                f"base point {self.a} is postcritical (0 and 2 are excluded)"
            )

    @classmethod
    def parse(cls, text: str) -> "BasePoint":
        try:
            value = Fraction(text.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in base point {text!r}") from None
        except ValueError:
            raise ValueError(f"malformed base point {text!r}") from None
        return cls(value)

    def text(self) -> str:
        if self.a.denominator == 1:
            return str(self.a.numerator)
        return f"{self.a.numerator}/{self.a.denominator}"


@dataclass(frozen=True)
class SquareClassReport:
    point: BasePoint
    labels: tuple[str, ...]
    parts: tuple[int, ...]       # squarefree parts of -1, 2, a, 2-a
    rank: int
    passed: bool
    dependent_subset: Optional[tuple[str, ...]]
    derivation: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "parts": {lab: part for lab, part in zip(self.labels, self.parts)},
            "rank": self.rank,
            "passed": self.passed,
            "dependent_subset": (
                list(self.dependent_subset) if self.dependent_subset else None
            ),
            "derivation": list(self.derivation),
        }


def _f2_rank(parts) -> int:
    # encode each squarefree integer as an F2 vector over {sign} + primes
    primes = sorted({p for part in parts for p in _squarefree_primes(part)})
    index = {p: i + 1 for i, p in enumerate(primes)}
    rows = []
    for part in parts:
        mask = 1 if part < 0 else 0
        for p in _squarefree_primes(part):
            mask |= 1 << index[p]
        rows.append(mask)
    rank = 0
    for row in rows:
        cur = row
        for pivot in rows[:rank]:
            cur = min(cur, cur ^ pivot)
        if cur:
            rows[rank] = cur
            rank += 1
    return rank


def _squarefree_primes(part: int) -> list[int]:
    out = []
    m = abs(part)
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            m //= d
        else:
            d += 1
    if m > 1:
        out.append(m)
    return out


def square_class_test(point: BasePoint) -> SquareClassReport:
    """Pass iff -1, 2, a, 2-a are independent modulo rational squares."""
    a = point.a
    values = (Fraction(-1), Fraction(2), a, 2 - a)
    parts = tuple(squarefree_part(v) for v in values)
    rank = _f2_rank(list(parts))
    passed = rank == 4
    dependent: Optional[tuple[str, ...]] = None
    if not passed:
        for size in range(1, 5):
            for combo in combinations(range(4), size):
                prod = 1
                for i in combo:
                    prod *= parts[i]
                if squarefree_part(prod) == 1:
                    dependent = tuple(SQUARE_CLASS_LABELS[i] for i in combo)
                    break
            if dependent:
                break
    derivation = (
        "the level-4 splitting field of the iterated preimages of a "
        "contains Q(i, sqrt(2), sqrt(a), sqrt(2-a))",
        "the four corresponding index-2 kernels of the level-4 model "
        "intersect in its Frattini subgroup, so maximality forces the "
        "composite field to have degree 16",
        f"squarefree parts: " + ", ".join(
            f"{lab} ~ {part}" for lab, part in zip(SQUARE_CLASS_LABELS, parts)
        ),
        (f"classes independent (rank 4): degree 16 attained" if passed else
         f"product over {{{', '.join(dependent or ())}}} is a square: "
         f"the composite collapses below degree 16"),
    )
    return SquareClassReport(
        point=point,
        labels=SQUARE_CLASS_LABELS,
        parts=parts,
        rank=rank,
        passed=passed,
        dependent_subset=dependent,
        derivation=derivation,
    )


@dataclass(frozen=True)
class FrobeniusObservation:
    prime: int
    cycle_type: tuple[int, ...]


def sample_frobenius(point: BasePoint, prime_bound: int, *,
                     min_usable: int = MIN_USABLE_PRIMES
                     ) -> tuple[FrobeniusObservation, ...]:
    """Factorization degree patterns mod the good odd primes up to bound."""
    if prime_bound < 3:
        raise ValueError(f"prime bound {prime_bound} < 3")
    poly = specialize_numerator(4, point.a)
    degree = poly.degree()
    out = []
    for p in primes_up_to(prime_bound):
        if p == 2 or poly.lc % p == 0:
            continue
        degs = factor_degrees_mod_p(poly, p)
        if degs is None:
            continue
        if sum(degs) != degree:  # pragma: no cover - lc survived, so it cannot
            raise ModelInconsistencyError(f"degree loss at prime {p}")
        out.append(FrobeniusObservation(prime=p, cycle_type=degs))
    if len(out) < min_usable:
        raise InsufficientDataError(
            f"only {len(out)} usable primes below {prime_bound} "
            f"(need {min_usable})"
        )
    return tuple(out)


@lru_cache(maxsize=1)
def _level4_data():
    model = build_model(4)
    maxes = maximal_subgroups(model)
    model_types = frozenset(cycle_type_table(model.group))
    tables = {ms.name: frozenset(cycle_type_table(ms.group)) for ms in maxes}
    blind = tuple(sorted(n for n, tb in tables.items() if tb == model_types))
    return model, model_types, tables, blind


def cycle_blind_subgroups() -> tuple[str, ...]:
    """Maximal subgroups realizing every model cycle type (undetectable
    by Frobenius data; handled by the square-class route)."""
    return _level4_data()[3]


@dataclass(frozen=True)
class EliminationReport:
    eliminated: tuple[tuple[str, FrobeniusObservation], ...]  # by name
    surviving: tuple[str, ...]
    observation_count: int


def eliminate_maximal_subgroups(observations, model: ArithLevelModel
                                ) -> EliminationReport:
    """Cycle-type elimination alone (observed in the model's table but
    missing from a maximal subgroup's table); surfaces any observation
    the model cannot realize instead of discarding it."""
    if model.level != 4:
        raise ValueError(f"elimination is defined at level 4, got {model.level}")
    model_types = frozenset(cycle_type_table(model.group))
    tables = {ms.name: frozenset(cycle_type_table(ms.group))
              for ms in maximal_subgroups(model)}
    eliminated: dict[str, FrobeniusObservation] = {}
    ordered = sorted(observations, key=lambda o: o.prime)
    for obs in ordered:
        if obs.cycle_type not in model_types:
            raise ModelInconsistencyError(
                f"cycle type {obs.cycle_type} at prime {obs.prime} is not "
                f"realized by the level-4 model; the containment assumption "
                f"is violated"
            )
        for name in sorted(tables):
            if name not in eliminated and obs.cycle_type not in tables[name]:
                eliminated[name] = obs
    surviving = tuple(sorted(set(tables) - set(eliminated)))
    return EliminationReport(
        eliminated=tuple(sorted(eliminated.items())),
        surviving=surviving,
        observation_count=len(ordered),
    )


@dataclass(frozen=True)
class MaximalityVerdict:
    status: str  # "maximal" | "not_maximal" | "inconclusive"
    point: BasePoint
    square_class: SquareClassReport
    frobenius_eliminations: tuple[tuple[str, FrobeniusObservation], ...]
    square_class_eliminations: tuple[str, ...]
    surviving: tuple[str, ...]
    surviving_tables: Optional[dict]
    primes_tried: int
    reason: Optional[str]

    def to_json_dict(self) -> dict:
        eliminations = [
            {
                "subgroup": name,
                "via": "frobenius",
                "prime": obs.prime,
                "cycle_type": list(obs.cycle_type),
            }
            for name, obs in self.frobenius_eliminations
        ] + [
            {
                "subgroup": name,
                "via": "square_class",
                "classes": {
                    lab: part
                    for lab, part in zip(self.square_class.labels,
                                         self.square_class.parts)
                },
            }
            for name in self.square_class_eliminations
        ]
        eliminations.sort(key=lambda e: e["subgroup"])
        out = {
            "a": self.point.text(),
            "verdict": self.status,
            "square_class": self.square_class.to_json_dict(),
            "eliminations": eliminations,
            "surviving": list(self.surviving),
            "primes_tried": self.primes_tried,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.surviving_tables is not None:
            out["surviving_tables"] = {
                name: [list(t) for t in sorted(types)]
                for name, types in self.surviving_tables.items()
            }
        return out


def maximality_verdict(point: BasePoint,
                       prime_bound: int = DEFAULT_PRIME_BOUND
                       ) -> MaximalityVerdict:
    """Streamed verdict: square-class gate, then Frobenius elimination.

    Primes are consumed in increasing order and sampling stops as soon as
    every non-blind subgroup has a witness (never before the minimum
    usable-prime floor), so raising the bound can only extend the scan:
    verdicts are monotone in the bound.
    """
    sq = square_class_test(point)
    if not sq.passed:
        return MaximalityVerdict(
            status="not_maximal",
            point=point,
            square_class=sq,
            frobenius_eliminations=(),
            square_class_eliminations=(),
            surviving=(),
            surviving_tables=None,
            primes_tried=0,
            reason="; ".join(sq.derivation),
        )
    if prime_bound < 3:
        raise ValueError(f"prime bound {prime_bound} < 3")
    _, model_types, tables, blind = _level4_data()
    pending = set(tables) - set(blind)
    eliminated: dict[str, FrobeniusObservation] = {}
    poly = specialize_numerator(4, point.a)
    usable = 0
    for p in primes_up_to(prime_bound):
        if p == 2 or poly.lc % p == 0:
            continue
        degs = factor_degrees_mod_p(poly, p)
        if degs is None:
            continue
        usable += 1
        if degs not in model_types:
            raise ModelInconsistencyError(
                f"cycle type {degs} at prime {p} is not realized by the "
                f"level-4 model"
            )
        for name in sorted(pending):
            if degs not in tables[name]:
                eliminated[name] = FrobeniusObservation(p, degs)
                pending.discard(name)
        if not pending and usable >= MIN_USABLE_PRIMES:
            break
    if usable < MIN_USABLE_PRIMES:
        raise InsufficientDataError(
            f"only {usable} usable primes below {prime_bound} "
            f"(need {MIN_USABLE_PRIMES})"
        )
    if pending:
        return MaximalityVerdict(
            status="inconclusive",
            point=point,
            square_class=sq,
            frobenius_eliminations=tuple(sorted(eliminated.items())),
            square_class_eliminations=blind,
            surviving=tuple(sorted(pending)),
            surviving_tables={name: tables[name] for name in sorted(pending)},
            primes_tried=usable,
            reason=None,
        )
    return MaximalityVerdict(
        status="maximal",
        point=point,
        square_class=sq,
        frobenius_eliminations=tuple(sorted(eliminated.items())),
        square_class_eliminations=blind,
        surviving=(),
        surviving_tables=None,
        primes_tried=usable,
        reason=None,
    )


def recheck_certificate(verdict: MaximalityVerdict) -> bool:
    """Pure table lookups; no resampling.  True iff the stored witnesses
    actually support the stored verdict."""
    _, model_types, tables, blind = _level4_data()
    sq = square_class_test(verdict.point)
    if sq.passed != verdict.square_class.passed or sq.parts != verdict.square_class.parts:
        return False
    if verdict.status == "not_maximal":
        if sq.passed or not sq.dependent_subset:
            return False
        prod = 1
        for lab, part in zip(sq.labels, sq.parts):
            if lab in sq.dependent_subset:
                prod *= part
        return squarefree_part(prod) == 1
    for name, obs in verdict.frobenius_eliminations:
        if name not in tables or name in blind:
            return False
        if obs.cycle_type not in model_types:
            return False
        if obs.cycle_type in tables[name]:
            return False
    if verdict.status == "maximal":
        if not sq.passed or sq.rank != 4:
            return False
        if set(verdict.square_class_eliminations) != set(blind):
            return False
        covered = {n for n, _ in verdict.frobenius_eliminations} | set(blind)
        return covered == set(tables) and not verdict.surviving
    if verdict.status == "inconclusive":
        claimed = {n for n, _ in verdict.frobenius_eliminations}
        return (set(verdict.surviving) == set(tables) - claimed - set(blind)
                and bool(verdict.surviving))
    return False
