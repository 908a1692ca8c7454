"""Exhaustive enumeration of small monoids, semirings, groups and rings.

Monoids are generated with the identity at index 0 by filling the remaining
cells row by row and rejecting a partial table as soon as some fully defined
associativity triple fails. Isomorphism classes are represented by the
lexicographically least table over all relabelings fixing the neutral
element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product as cartesian
from typing import Iterator

from .algebra import (
    Algebra,
    FiniteMonoid,
    FiniteSemiring,
    Morphism,
    Point,
    are_isomorphic,
    compose,
    generating_set,
    homomorphisms,
    identity_morphism,
    semiring_violation,
)


@dataclass(frozen=True)
class EnumerationSpec:
    signature: str = "monoid"
    max_order: int = 3
    up_to_iso: bool = True
    commutative_only: bool = False
    min_order: int = 1

    def __post_init__(self):
        if self.signature not in ("monoid", "semiring"):
            raise ValueError(f"unknown signature {self.signature!r}")
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")


# -- tables -------------------------------------------------------------------


def _assoc_ok(t, i, j, n) -> bool:
    """Check every associativity triple that looks up cell (i, j), where defined."""
    v = t[i][j]
    tj = t[j]
    ti = t[i]
    tv = t[v]
    for c in range(n):  # (i, j, c)
        x, y = tv[c], tj[c]
        if x < 0 or y < 0:
            continue
        z = ti[y]
        if z >= 0 and z != x:
            return False
    for a in range(n):  # (a, i, j)
        ta = t[a]
        y = ta[i]
        if y < 0:
            continue
        x, z = t[y][j], ta[v]
        if x >= 0 and z >= 0 and x != z:
            return False
    for a in range(n):
        ta = t[a]
        for b in range(n):
            if ta[b] == i:  # (a, b, j): t[i][j] vs t[a][t[b][j]]
                w = t[b][j]
                if w >= 0:
                    z = ta[w]
                    if z >= 0 and z != v:
                        return False
            if t[a][b] == j:  # (i, a, b): t[t[i][a]][b] vs t[i][j]
                w = ti[a]
                if w >= 0:
                    x = t[w][b]
                    if x >= 0 and x != v:
                        return False
    return True


def _monoid_tables(n: int, commutative: bool = False, latin: bool = False, zero_absorbing: bool = False):
    """All associative tables on ``0..n-1`` with identity 0 (labeled).

    With ``zero_absorbing`` the element 0 is absorbing instead of neutral,
    which is what a semiring multiplication needs.
    """
    t = [[-1] * n for _ in range(n)]
    for a in range(n):
        if zero_absorbing:
            t[0][a] = t[a][0] = 0
        else:
            t[0][a] = a
            t[a][0] = a
    cells = [(i, j) for i in range(1, n) for j in range(1, n) if not commutative or i <= j]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[k]
        for v in range(n):
            if latin and (v in t[i] or any(t[r][j] == v for r in range(n))):
                continue
            t[i][j] = v
            if commutative:
                t[j][i] = v
            if _assoc_ok(t, i, j, n) and (not commutative or i == j or _assoc_ok(t, j, i, n)):
                yield from rec(k + 1)
            t[i][j] = -1
            if commutative:
                t[j][i] = -1

    if n == 1:
        yield ((0,),)
        return
    yield from rec(0)


def _relabel(table, sigma):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        row = table[a]
        sa = sigma[a]
        for b in range(n):
            out[sa][sigma[b]] = sigma[row[b]]
    return tuple(tuple(r) for r in out)


@lru_cache(maxsize=None)
def _relabelings(n: int) -> tuple:
    return tuple((0,) + p for p in permutations(range(1, n)))


def _is_least(tables, n) -> bool:
    """True iff ``tables`` (tuple of tables) is lexicographically least among its relabelings."""
    for sigma in _relabelings(n)[1:]:
        for table in tables:
            other = _relabel(table, sigma)
            if other < table:
                return False
            if other > table:
                break
    return True


def canonical_form(alg: Algebra) -> Algebra:
    """Least relabeling of ``alg`` with its neutral element moved to index 0."""
    n = alg.size
    e = alg.neutral
    base = [e] + [x for x in range(n) if x != e]
    # sigma maps old index -> new index
    start = [0] * n
    for new, old in enumerate(base):
        start[old] = new
    best = None
    for rho in _relabelings(n):
        sigma = [rho[start[x]] for x in range(n)]
        cand = tuple(_relabel(op, sigma) for op in alg.ops)
        if best is None or cand < best:
            best = cand
    return type(alg).from_ops(best, 0, alg.name)


# -- monoids ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _monoids_of_order(n: int, up_to_iso: bool, commutative: bool) -> tuple[FiniteMonoid, ...]:
    out = []
    for table in _monoid_tables(n, commutative):
        if up_to_iso and not _is_least((table,), n):
            continue
        out.append(FiniteMonoid(table, 0, f"M{n}.{len(out)}"))
    return tuple(out)


def enumerate_monoids(spec: EnumerationSpec | int) -> Iterator[FiniteMonoid]:
    if isinstance(spec, int):
        spec = EnumerationSpec("monoid", spec)
    for n in range(spec.min_order, spec.max_order + 1):
        yield from _monoids_of_order(n, spec.up_to_iso, spec.commutative_only)


@lru_cache(maxsize=None)
def _groups_of_order(n: int) -> tuple[FiniteMonoid, ...]:
    out = []
    for table in _monoid_tables(n, latin=True):
        if _is_least((table,), n):
            out.append(FiniteMonoid(table, 0, f"G{n}.{len(out)}"))
    return tuple(out)


def _invariant_factors(n: int, least: int = 2) -> Iterator[tuple[int, ...]]:
    """Chains ``d1 | d2 | ... | dk`` with product ``n`` and ``d1 >= least``."""
    if n == 1:
        yield ()
        return
    for d in range(least, n + 1):
        if n % d == 0:
            for rest in _invariant_factors(n // d, d):
                if not rest or rest[0] % d == 0:
                    yield (d,) + rest


def abelian_group(factors: tuple[int, ...]) -> FiniteMonoid:
    """``Z_{d1} x ... x Z_{dk}`` with elements in mixed-radix order."""
    elems = list(cartesian(*(range(d) for d in factors)))
    index = {x: i for i, x in enumerate(elems)}
    table = [
        [index[tuple((a + b) % d for a, b, d in zip(x, y, factors))] for y in elems]
        for x in elems
    ]
    name = "x".join(f"Z{d}" for d in factors) or "1"
    return FiniteMonoid(table, 0, name)


def enumerate_abelian_groups(max_order: int, *, min_order: int = 1) -> Iterator[FiniteMonoid]:
    """Abelian groups up to isomorphism, one per invariant-factor decomposition."""
    for n in range(min_order, max_order + 1):
        for factors in _invariant_factors(n):
            yield abelian_group(factors)


def enumerate_groups(max_order: int, *, abelian_only: bool = False, min_order: int = 1) -> Iterator[FiniteMonoid]:
    """Groups up to isomorphism (Latin-square backtracking).

    With ``abelian_only`` the groups are built from invariant factors instead,
    which scales far better.
    """
    if abelian_only:
        yield from enumerate_abelian_groups(max_order, min_order=min_order)
        return
    for n in range(min_order, max_order + 1):
        yield from _groups_of_order(n)


# -- semirings ----------------------------------------------------------------


def _distributive(add, mul, n) -> bool:
    for x in range(n):
        mx = mul[x]
        for y in range(n):
            ay = add[y]
            for z in range(n):
                if mx[ay[z]] != add[mx[y]][mx[z]]:
                    return False
                if mul[ay[z]][x] != add[mul[y][x]][mul[z][x]]:
                    return False
    return True


@lru_cache(maxsize=None)
def _semirings_of_order(n: int, up_to_iso: bool, commutative: bool) -> tuple[FiniteSemiring, ...]:
    out = []
    adds = list(_monoid_tables(n, commutative=True))
    muls = list(_monoid_tables(n, commutative=commutative, zero_absorbing=True))
    for add in adds:
        for mul in muls:
            if not _distributive(add, mul, n):
                continue
            if up_to_iso and not _is_least((add, mul), n):
                continue
            out.append(FiniteSemiring(add, mul, 0, f"S{n}.{len(out)}"))
    return tuple(out)


def enumerate_semirings(spec: EnumerationSpec | int) -> Iterator[FiniteSemiring]:
    if isinstance(spec, int):
        spec = EnumerationSpec("semiring", spec)
    for n in range(spec.min_order, spec.max_order + 1):
        yield from _semirings_of_order(n, spec.up_to_iso, spec.commutative_only)


def enumerate_algebras(spec: EnumerationSpec) -> Iterator[Algebra]:
    if spec.signature == "monoid":
        return enumerate_monoids(spec)
    return enumerate_semirings(spec)


def _words(group: FiniteMonoid, gens):
    """A word in ``gens`` for every element (breadth-first)."""
    words = {group.identity: ()}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.table[x][g]
                if y not in words:
                    words[y] = words[x] + (g,)
                    nxt.append(y)
        frontier = nxt
    return words


@lru_cache(maxsize=None)
def _rings_of_order(n: int) -> tuple[FiniteSemiring, ...]:
    found: list[FiniteSemiring] = []
    for g in _groups_of_order(n):
        if not g.is_commutative:
            continue
        add = g.table
        gens = generating_set(g)
        words = _words(g, gens)
        for images in cartesian(range(n), repeat=len(gens) ** 2):
            p = {(a, b): images[i * len(gens) + j] for i, a in enumerate(gens) for j, b in enumerate(gens)}
            mul = []
            for x in range(n):
                row = []
                for y in range(n):
                    acc = 0
                    for a in words[x]:
                        for b in words[y]:
                            acc = add[acc][p[(a, b)]]
                    row.append(acc)
                mul.append(row)
            if semiring_violation(add, mul, 0) is not None:
                continue
            ring = FiniteSemiring(add, mul, 0)
            if any(are_isomorphic(ring, r) for r in found):
                continue
            found.append(ring.renamed(f"R{n}.{len(found)}"))
    return tuple(found)


def enumerate_rings(max_order: int, *, min_order: int = 1) -> Iterator[FiniteSemiring]:
    """Rings (not necessarily unital) up to isomorphism: bilinear products on abelian groups."""
    for n in range(min_order, max_order + 1):
        yield from _rings_of_order(n)


# -- morphisms ----------------------------------------------------------------


def enumerate_surjections(a: Algebra, b: Algebra) -> Iterator[Morphism]:
    for f in homomorphisms(a, b):
        if f.is_surjective:
            yield f


def enumerate_points(a: Algebra, b: Algebra) -> Iterator[Point]:
    """All split epimorphisms ``A -> B`` paired with each of their sections."""
    if b.size > a.size:
        return
    sections = list(homomorphisms(b, a, injective=True))
    ident = identity_morphism(b)
    for f in enumerate_surjections(a, b):
        for s in sections:
            if compose(f, s) == ident:
                yield Point(f, s)


def surjection_instances(spec: EnumerationSpec) -> Iterator[Morphism]:
    """Every surjection between enumerated algebras (all maps, objects up to iso)."""
    algs = list(enumerate_algebras(spec))
    for a in algs:
        for b in algs:
            if b.size <= a.size:
                yield from enumerate_surjections(a, b)


def point_instances(spec: EnumerationSpec) -> Iterator[Point]:
    algs = list(enumerate_algebras(spec))
    for a in algs:
        for b in algs:
            yield from enumerate_points(a, b)
