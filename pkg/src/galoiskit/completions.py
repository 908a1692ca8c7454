"""Reflections onto groups, rings and abelian groups, with their units.

Three Galois contexts are shipped:

``MON_GP``    monoids -> groups, group completion
``SRNG_RNG``  semirings -> rings, ring completion
``MON_AB``    monoids -> abelian groups, abelianisation

A reflection that cannot be finished within its bound raises
:class:`Inconclusive`; classifiers turn that into a third truth value.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .algebra import (
    Algebra,
    FiniteMonoid,
    FiniteSemiring,
    Morphism,
    compose,
    generating_set,
    homomorphisms,
    is_abelian_object,
)
from .constructions import congruence_closure, product, quotient
from .coset import CosetLimitExceeded, enumerate_cosets

DEFAULT_GROUP_BOUND = 64
BOUND_ENV_VAR = "GALOISKIT_MAX_GROUP_BOUND"


class Inconclusive(Exception):
    """A reflection did not terminate within its configured bound."""


def default_group_bound() -> int:
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BOUND_ENV_VAR} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{BOUND_ENV_VAR} must be a positive integer, got {raw!r}")
        return value
    return DEFAULT_GROUP_BOUND


@dataclass(frozen=True)
class ReflectionResult:
    object: Algebra
    unit: Morphism
    # for pair-based completions: least (m, n) representing each element
    representatives: tuple | None = field(default=None, compare=False)


def _grothendieck(m: FiniteMonoid):
    span = product(m, m)
    e = m.identity
    origin = span.index(e, e)
    cong = congruence_closure(span.apex, [(origin, span.index(k, k)) for k in generating_set(m)])
    g, q = quotient(cong)
    return span, cong, g, q


def group_complete_commutative(m: FiniteMonoid) -> ReflectionResult:
    """Grothendieck group of a commutative monoid as ``(M x M) / ~``.

    ``(a, b) ~ (c, d)`` iff ``a + d + k = b + c + k`` for some ``k``; this is
    the congruence on ``M x M`` generated by ``(0, 0) ~ (k, k)``, which is
    what gets computed.
    """
    if not m.is_commutative:
        raise ValueError("group_complete_commutative needs a commutative monoid")
    span, cong, g, q = _grothendieck(m)
    e = m.identity
    unit = Morphism(m, g, [q.map[span.index(a, e)] for a in range(m.size)])
    reps = tuple(span.elements[r] for r in cong.representatives())
    return ReflectionResult(g, unit, reps)


def grothendieck_relation(m: FiniteMonoid, p, q) -> bool:
    """Direct test of ``p ~ q`` for pairs in ``M x M`` (commutative ``M``)."""
    t = m.table
    (a, b), (c, d) = p, q
    lhs, rhs = t[a][d], t[b][c]
    return any(t[lhs][k] == t[rhs][k] for k in range(m.size))


def _word_table(coset_table, n_gens):
    """Multiplication table of the group acting on its own cosets."""
    n = len(coset_table)
    words: list = [None] * n
    words[0] = ()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(n_gens):
            d = coset_table[c][2 * g]
            if words[d] is None:
                words[d] = words[c] + (2 * g,)
                queue.append(d)
    table = []
    for c in range(n):
        row = []
        for d in range(n):
            x = c
            for s in words[d]:
                x = coset_table[x][s]
            row.append(x)
        table.append(row)
    return table


@lru_cache(maxsize=4096)
def _group_complete_general(m: FiniteMonoid, bound: int, identity_generator: bool) -> ReflectionResult:
    e = m.identity
    elems = [a for a in range(m.size) if identity_generator or a != e]
    gen = {a: i for i, a in enumerate(elems)}

    def sym(a):
        return () if a not in gen else (2 * gen[a],)

    relators = []
    for a in range(m.size):
        for b in range(m.size):
            ab = m.table[a][b]
            relators.append(sym(a) + sym(b) + tuple(s ^ 1 for s in sym(ab)))
    try:
        cosets = enumerate_cosets(len(elems), relators, bound)
    except CosetLimitExceeded:
        raise Inconclusive(f"group completion did not close within {bound} elements") from None
    group = FiniteMonoid(_word_table(cosets, len(elems)), 0)
    unit = Morphism(m, group, [cosets[0][2 * gen[a]] if a in gen else 0 for a in range(m.size)])
    if not group.is_group:
        raise RuntimeError("coset enumeration produced a non-group")
    return ReflectionResult(group, unit)


def group_complete_general(
    m: FiniteMonoid, bound: int | None = None, *, identity_generator: bool = False
) -> ReflectionResult:
    """Group completion ``Gp(M)``: free group on ``M`` modulo ``[a][b] = [ab]``.

    Presented with one generator per element (the identity is left out unless
    ``identity_generator``; the relations force it trivial either way) and
    enumerated by Todd-Coxeter. Raises :class:`Inconclusive` when more than
    ``bound`` cosets would be needed.
    """
    if bound is None:
        bound = default_group_bound()
    return _group_complete_general(m, bound, identity_generator)


@lru_cache(maxsize=4096)
def abelianize(m: FiniteMonoid) -> ReflectionResult:
    """Reflection onto abelian groups: commutative quotient, then group completion."""
    gens = generating_set(m)
    t = m.table
    cong = congruence_closure(m, [(t[a][b], t[b][a]) for a in gens for b in gens])
    c, q1 = quotient(cong)
    r = group_complete_commutative(c)
    return ReflectionResult(r.object, compose(r.unit, q1))


@lru_cache(maxsize=4096)
def ring_complete(s: FiniteSemiring) -> ReflectionResult:
    """Ring completion: additive group completion with
    ``[(a, b)] * [(c, d)] = [(ac + bd, ad + bc)]``.

    Raises ValueError if the product were to depend on representatives.
    """
    add, mul = s.add_table, s.mul_table
    span, cong, g, q = _grothendieck(s.additive_monoid())
    cls = {pair: q.map[i] for i, pair in enumerate(span.elements)}
    n = g.size
    prod: list[list[int | None]] = [[None] * n for _ in range(n)]
    for (a, b), x in cls.items():
        for (c, d), y in cls.items():
            z = cls[(add[mul[a][c]][mul[b][d]], add[mul[a][d]][mul[b][c]])]
            if prod[x][y] is None:
                prod[x][y] = z
            elif prod[x][y] != z:
                raise ValueError(f"ring product depends on representatives at {(a, b)}, {(c, d)}")
    ring = FiniteSemiring(g.table, prod, g.identity)
    zero = s.zero
    unit = Morphism(s, ring, [cls[(a, zero)] for a in range(s.size)])
    reps = tuple(span.elements[r] for r in cong.representatives())
    return ReflectionResult(ring, unit, reps)


def _extend_along(source: Algebra, target: Algebra, seed: dict) -> Morphism:
    """The unique homomorphism on ``source`` agreeing with ``seed``, whose keys generate ``source``."""
    found = list(homomorphisms(source, target, seed=seed))
    if len(found) != 1:
        raise ValueError(f"seed determines {len(found)} homomorphisms, expected exactly one")
    return found[0]


@dataclass(frozen=True)
class GaloisContext:
    id: str
    signature: str
    reflector: Callable[[Algebra], ReflectionResult] = field(compare=False)
    member: Callable[[Algebra], bool] = field(compare=False)
    description: str = field(default="", compare=False)

    def reflect(self, alg: Algebra) -> ReflectionResult:
        if alg.signature != self.signature:
            raise ValueError(f"context {self.id} works with {self.signature}s, got a {alg.signature}")
        return self.reflector(alg)

    def __str__(self):
        return self.id


def _reflect_group(m):
    return group_complete_general(m)


MON_GP = GaloisContext("MonGp", "monoid", _reflect_group, lambda m: m.is_group, "monoids -> groups")
SRNG_RNG = GaloisContext("SRngRng", "semiring", ring_complete, lambda s: s.is_ring, "semirings -> rings")
MON_AB = GaloisContext("MonAb", "monoid", abelianize, is_abelian_object, "monoids -> abelian groups")

CONTEXTS = {
    "mon-gp": MON_GP,
    "srng-rng": SRNG_RNG,
    "mon-ab": MON_AB,
}


def get_context(name: str | GaloisContext) -> GaloisContext:
    if isinstance(name, GaloisContext):
        return name
    for key, ctx in CONTEXTS.items():
        if name in (key, ctx.id):
            return ctx
    raise KeyError(f"unknown Galois context {name!r}; choose from {sorted(CONTEXTS)}")


def apply_reflector(ctx: GaloisContext, f: Morphism) -> Morphism:
    """``I(f)``: the unique morphism with ``I(f) . unit_A = unit_B . f``."""
    ctx = get_context(ctx)
    ra, rb = ctx.reflect(f.source), ctx.reflect(f.target)
    seed = {}
    for a in range(f.source.size):
        x, y = ra.unit.map[a], rb.unit.map[f.map[a]]
        if seed.setdefault(x, y) != y:
            raise ValueError("f is not compatible with the units")
    return _extend_along(ra.object, rb.object, seed)


def count_factorizations(unit: Morphism, h: Morphism) -> int:
    """Number of ``phi`` with ``phi . unit = h``."""
    seed = {}
    for a in range(unit.source.size):
        if seed.setdefault(unit.map[a], h.map[a]) != h.map[a]:
            return 0
    return sum(1 for _ in homomorphisms(unit.target, h.target, seed=seed))


def verify_universal_property(r: ReflectionResult, probes: Iterable[Algebra]) -> bool:
    """Every morphism from the source into each probe factors exactly once through the unit."""
    source = r.unit.source
    for x in probes:
        for h in homomorphisms(source, x):
            if count_factorizations(r.unit, h) != 1:
                return False
    return True
