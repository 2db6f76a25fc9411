"""Numeric checks of the nested-radical structure of the preimage tree,
plus the small group theory behind the constant-field statements.

The preimages of a complex number alpha under x -> 2/(x-1)^2 are
1 + sqrt(2/alpha) and 1 - sqrt(2/alpha) (principal branch).  Iterating
from a base value fills a binary tree whose entries satisfy exact
algebraic identities once squared; here they are verified at high
precision, with residuals reported rather than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import mpmath

from .errors import DegenerateTreeError

MAX_TREE_DEPTH = 8
DEFAULT_PRECISION = 256
DEFAULT_SAMPLES = 20

IDENTITY_NAMES = (
    "child-product",      # a_{l1} a_{l2} = (a_l - 2)/a_l
    "pair-product",       # ((a_{l1}-1)(a_{l'1}-1))^2 = 4/(a_l a_{l'})
    "depth3-square-is-minus-one",
    "double-reciprocal",  # [... ]^2 = 2(a - 2)
)


def _tolerance(precision: int) -> mpmath.mpf:
    return mpmath.mpf(2) ** (-(precision // 2))


@dataclass(frozen=True)
class PreimageTreeNumeric:
    root: complex
    depth: int
    precision: int
    values: dict  # word over "12" -> mpmath.mpc

    def value(self, word: str):
        return self.values[word]


def preimage_tree(t0, depth: int, precision: int = DEFAULT_PRECISION, *,
                  flipped=frozenset()) -> PreimageTreeNumeric:
    """Fill the preimage tree below t0 with the principal branch.

    flipped: set of words at which the two square-root branches are
    exchanged (the children swap roles); used to demonstrate that the
    squared identities do not depend on branch choices.
    """
    if not 0 <= depth <= MAX_TREE_DEPTH:
        raise ValueError(f"depth {depth} out of range 0..{MAX_TREE_DEPTH}")
    flipped = frozenset(flipped)
    with mpmath.workprec(precision):
        tol = _tolerance(precision)
        t0 = mpmath.mpc(t0)
        values = {"": t0}
        frontier = [""]
        for _ in range(depth):
            nxt = []
            for word in frontier:
                a = values[word]
                if abs(a) <= tol or abs(a - 2) <= tol:
                    raise DegenerateTreeError(
                        f"value at vertex {word or 'root'} is within "
                        f"tolerance of the postcritical set {{0, 2}}"
                    )
                s = mpmath.sqrt(2 / a)
                c1, c2 = 1 + s, 1 - s
                if word in flipped:
                    c1, c2 = c2, c1
                values[word + "1"] = c1
                values[word + "2"] = c2
                nxt.extend((word + "1", word + "2"))
            frontier = nxt
        for word in values:
            if word and abs(values[word]) <= tol:
                raise DegenerateTreeError(
                    f"value at vertex {word} is within tolerance of 0"
                )
        # construction invariant: children really are preimages
        for word, a in values.items():
            if not word:
                continue
            back = 2 / (values[word] - 1) ** 2
            parent = values[word[:-1]]
            scale = max(mpmath.mpf(1), abs(parent))
            if abs(back - parent) / scale > tol:  # pragma: no cover
                raise AssertionError(f"preimage relation fails at {word}")
    return PreimageTreeNumeric(root=complex(t0), depth=depth,
                               precision=precision, values=values)


def _rel_residual(lhs, rhs) -> mpmath.mpf:
    scale = max(mpmath.mpf(1), abs(rhs))
    return abs(lhs - rhs) / scale


@dataclass(frozen=True)
class RadicalReport:
    t0: complex
    precision: int
    tolerance_log2: int
    residuals: dict  # identity name -> mpmath.mpf
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "t0": [repr(self.t0.real), repr(self.t0.imag)],
            "precision": self.precision,
            "tolerance_log2": self.tolerance_log2,
            "residuals": {k: mpmath.nstr(v, 8) for k, v in self.residuals.items()},
            "ok": self.ok,
        }


def verify_radical_identities(t0, precision: int = DEFAULT_PRECISION, *,
                              flipped=frozenset()) -> RadicalReport:
    """Residuals of the four squared radical identities at one base value.

    All four are exact algebraic consequences of the preimage relation,
    so the residuals measure roundoff only; a violation beyond tolerance
    is reported in the result, not raised.
    """
    tree = preimage_tree(t0, 3, precision, flipped=flipped)
    v = tree.values
    with mpmath.workprec(precision):
        inner = [w for w in v if len(w) <= 2]

        r1 = mpmath.mpf(0)
        for w in inner:
            a = v[w]
            r1 = max(r1, _rel_residual(v[w + "1"] * v[w + "2"], (a - 2) / a))

        r2 = mpmath.mpf(0)
        for w in inner:
            for w2 in inner:
                if w2 == w:
                    continue
                lhs = ((v[w + "1"] - 1) * (v[w2 + "1"] - 1)) ** 2
                r2 = max(r2, _rel_residual(lhs, 4 / (v[w] * v[w2])))

        x = (v["111"] - 1) * (v["121"] - 1) / 2 * (v["11"] - 1) / (v["21"] - 1)
        r3 = _rel_residual(x ** 2, mpmath.mpc(-1))

        y = 1 / (v["1"] - 1) * 2 / (v["11"] - 1) * 2 / (v["21"] - 1)
        r4 = _rel_residual(y ** 2, 2 * (v[""] - 2))

        tol = _tolerance(precision)
        residuals = dict(zip(IDENTITY_NAMES, (r1, r2, r3, r4)))
        ok = all(res <= tol for res in residuals.values())
    return RadicalReport(
        t0=complex(v[""]),
        precision=precision,
        tolerance_log2=-(precision // 2),
        residuals=residuals,
        ok=ok,
    )


def branch_flip_invariance(t0, precision: int = DEFAULT_PRECISION) -> bool:
    """Identity (3) after flipping the branch at each single inner vertex."""
    tol = _tolerance(precision)
    for word in ("", "1", "2", "11", "12", "21", "22"):
        rep = verify_radical_identities(t0, precision,
                                        flipped=frozenset((word,)))
        if rep.residuals["depth3-square-is-minus-one"] > tol:
            return False
    return True


def sample_points(samples: int = DEFAULT_SAMPLES, seed: int = 2024):
    """Deterministic complex base values away from the postcritical set."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        re = rng.uniform(-6, 6)
        im = rng.uniform(-6, 6)
        if abs(complex(re, im)) < 0.2 or abs(complex(re - 2, im)) < 0.2:
            continue
        out.append(complex(re, im))
    return out


# -- the dihedral automorphism content ----------------------------------------


def _klein24_table():
    # Z/2 x Z/4 as index-addressed addition table
    els = [(i, j) for i in range(2) for j in range(4)]
    idx = {e: k for k, e in enumerate(els)}
    add = [[idx[((a[0] + b[0]) % 2, (a[1] + b[1]) % 4)] for b in els]
           for a in els]
    return els, add


def dihedral_constant_field_check() -> dict:
    """Brute-force the automorphism group of Z/2 x Z/4.

    The geometric abelianization at every computed level is (2, 4); its
    automorphism group, enumerated over all bijections fixing the
    identity, has order 8, is non-abelian, and contains five involutions,
    which pins it down as dihedral (the quaternion group has one).
    """
    from .selfsim import abelian_invariants, geometric_group

    invariants = {n: abelian_invariants(geometric_group(n)) for n in (3, 4, 5)}

    els, add = _klein24_table()
    n = len(els)
    autos = []
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        if all(p[add[a][b]] == add[p[a]][p[b]] for a in range(n) for b in range(n)):
            autos.append(p)
    order = len(autos)
    compose = lambda p, q: tuple(q[p[i]] for i in range(n))
    witness = None
    for p in autos:
        for q in autos:
            if compose(p, q) != compose(q, p):
                witness = (p, q)
                break
        if witness:
            break
    ident = tuple(range(n))
    involutions = sum(1 for p in autos if p != ident and compose(p, p) == ident)
    return {
        "abelian_invariants": invariants,
        "aut_order": order,
        "aut_nonabelian": witness is not None,
        "noncommuting_pair": witness,
        "aut_involutions": involutions,
        "dihedral": order == 8 and witness is not None and involutions == 5,
    }
