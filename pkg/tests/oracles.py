"""Independent reference implementations used to cross-check the library.

Everything in this file recomputes results from first principles with
deliberately different algorithms and data layouts (binary strings for
tree nodes, Fraction matrices for resultants, floating point roots for
discriminants).  Nothing here imports library internals beyond public
constructors, so agreement between the two routes is meaningful.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath


# -- tree automorphisms as node-string actions ------------------------------

def bfs_nodes(level: int) -> list[str]:
    """Internal nodes as binary strings, breadth first, root first."""
    out = [""]
    for depth in range(1, level):
        out.extend("".join(bits) for bits in itertools.product("01", repeat=depth))
    return out


def swap_dict(swaps, level: int) -> dict[str, int]:
    nodes = bfs_nodes(level)
    assert len(nodes) == len(swaps)
    return dict(zip(nodes, swaps))


def act_on_word(swaps, level: int, word: str) -> str:
    """Image of a node word: each letter is flipped by the bit stored at
    the source prefix above it."""
    table = swap_dict(swaps, level)
    out = []
    for i, ch in enumerate(word):
        prefix = word[:i]
        bit = int(ch) ^ table.get(prefix, 0)
        out.append(str(bit))
    return "".join(out)


def leaf_permutation(swaps, level: int) -> list[int]:
    perm = []
    for leaf in range(1 << level):
        word = format(leaf, f"0{level}b")
        perm.append(int(act_on_word(swaps, level, word), 2))
    return perm


def compose_swaps(u, v, level: int) -> tuple[int, ...]:
    """Portrait bits of "u then v", recovered from the composite action."""
    def act(word: str) -> str:
        return act_on_word(v, level, act_on_word(u, level, word))

    bits = []
    for node in bfs_nodes(level):
        image_child = act(node + "0")
        bits.append(int(image_child[-1]))
    return tuple(bits)


def invert_swaps(u, level: int) -> tuple[int, ...]:
    table = swap_dict(u, level)
    bits = []
    for node in bfs_nodes(level):
        # the inverse swaps at the image node whatever u swapped at the source
        source = _preimage_of_node(table, node)
        bits.append(table[source])
    return tuple(bits)


def _preimage_of_node(table: dict[str, int], node: str) -> str:
    out = []
    for i, ch in enumerate(node):
        prefix = "".join(out)
        out.append(str(int(ch) ^ table[prefix]))
    return "".join(out)


def closure_of_swaps(generators, level: int, cap: int = 1 << 14) -> set:
    """Plain breadth-first closure over portrait bit tuples."""
    frontier = {tuple(g) for g in generators}
    seen = set(frontier)
    while frontier:
        new = set()
        for u in frontier:
            for g in generators:
                w = compose_swaps(u, tuple(g), level)
                if w not in seen:
                    seen.add(w)
                    new.add(w)
                if len(seen) > cap:
                    raise RuntimeError("oracle closure exceeded cap")
        frontier = new
    return seen


def cycle_type_of_perm(perm) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        size, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def perm_parity(perm) -> int:
    """+1 even, -1 odd."""
    flips = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                if perm[i] > perm[j])
    return -1 if flips & 1 else 1


# -- resultants and discriminants over Q -------------------------------------

def sylvester_resultant(f, g) -> Fraction:
    """Determinant of the Sylvester matrix, Fraction Gaussian elimination.

    f and g are coefficient sequences, constant term first.
    """
    fc = [Fraction(c) for c in f]
    gc = [Fraction(c) for c in g]
    while fc and fc[-1] == 0:
        fc.pop()
    while gc and gc[-1] == 0:
        gc.pop()
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    rows = []
    frev, grev = fc[::-1], gc[::-1]
    for i in range(n):
        rows.append([Fraction(0)] * i + frev + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + grev + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def discriminant_via_sylvester(f) -> Fraction:
    fc = [Fraction(c) for c in f]
    while fc and fc[-1] == 0:
        fc.pop()
    d = len(fc) - 1
    deriv = [i * fc[i] for i in range(1, d + 1)]
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * sylvester_resultant(fc, deriv) / fc[-1]


def resultant_via_roots(f, g, dps: int = 60) -> complex:
    """lc(f)^deg(g) * prod g(roots of f), numerically."""
    with mpmath.workdps(dps):
        fr = [mpmath.mpf(c) for c in reversed(f)]
        roots = mpmath.polyroots(fr, maxsteps=200, extraprec=200)
        acc = mpmath.mpf(f[-1]) ** (len(g) - 1)
        for r in roots:
            acc *= mpmath.polyval([mpmath.mpf(c) for c in reversed(g)], r)
        return complex(acc)


# -- elementary number theory -------------------------------------------------

def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def squarefree_part_slow(n: int) -> int:
    """Trial division only; fine for the small values tests feed it."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e & 1:
            out *= d
        d += 1
    return sign * out * n


def roots_mod_p(coeffs, p: int) -> list[int]:
    """All residues where the polynomial vanishes mod p, by evaluation."""
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def stickelberger_factor_parity(coeffs, p: int, degrees) -> bool:
    """Number-of-factors parity against the discriminant's quadratic character.

    For squarefree f mod p of degree d with r irreducible factors,
    (disc(f) | p) == (-1)^(d - r).
    """
    disc = discriminant_via_sylvester(coeffs)
    assert disc.denominator == 1
    chi = legendre(disc.numerator % p, p)
    d, r = sum(degrees), len(degrees)
    return chi == (-1) ** (d - r)


# -- misc ---------------------------------------------------------------------

def preimages_of(value, branch_plus=True, dps: int = 40):
    """The two solutions of 2/(x-1)^2 = value, via plain arithmetic."""
    with mpmath.workdps(dps):
        root = mpmath.sqrt(mpmath.mpc(2) / value)
        return (1 + root) if branch_plus else (1 - root)


def forward_map(x, dps: int = 40):
    with mpmath.workdps(dps):
        return mpmath.mpc(2) / (mpmath.mpc(x) - 1) ** 2
