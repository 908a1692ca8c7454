"""Finite limits and the colimits needed by the Galois constructions.

Carriers of products and pullbacks are materialised eagerly as lists of
pairs, sorted lexicographically; the apex element ``i`` is ``elements[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    Algebra,
    Morphism,
    compose,
    generating_set,
    homomorphisms,
    identity_morphism,
    subalgebra,
)


@dataclass(frozen=True)
class SpanObject:
    apex: Algebra
    leg1: Morphism
    leg2: Morphism
    elements: tuple[tuple[int, int], ...]

    def index(self, x: int, y: int) -> int:
        return self._lookup[(x, y)]

    @cached_property
    def _lookup(self) -> dict:
        return {p: i for i, p in enumerate(self.elements)}

    def mediate(self, u: Morphism, v: Morphism) -> Morphism:
        """The unique ``<u, v>: X -> apex`` with ``leg1 . <u,v> = u`` and ``leg2 . <u,v> = v``."""
        if u.source != v.source:
            raise ValueError("u and v must share a source")
        lookup = self._lookup
        try:
            return Morphism(u.source, self.apex, [lookup[(u.map[x], v.map[x])] for x in range(u.source.size)])
        except KeyError:
            raise ValueError("(u, v) is not a cone over this span") from None


def _pair_algebra(m: Algebra, n: Algebra, pairs, name=None) -> tuple[Algebra, tuple]:
    pairs = tuple(sorted(pairs))
    index = {p: i for i, p in enumerate(pairs)}
    ops = []
    for m_op, n_op in zip(m.ops, n.ops):
        ops.append(
            [[index[(m_op[a][c], n_op[b][d])] for (c, d) in pairs] for (a, b) in pairs]
        )
    apex = type(m).from_ops(ops, index[(m.neutral, n.neutral)], name)
    return apex, pairs


def _span(m: Algebra, n: Algebra, pairs, name=None) -> SpanObject:
    apex, pairs = _pair_algebra(m, n, pairs, name)
    return SpanObject(
        apex,
        Morphism(apex, m, [a for a, _ in pairs]),
        Morphism(apex, n, [b for _, b in pairs]),
        pairs,
    )


def product(m: Algebra, n: Algebra) -> SpanObject:
    if m.signature != n.signature:
        raise ValueError("signature mismatch")
    name = f"{m.name}x{n.name}" if m.name and n.name else None
    return _span(m, n, [(a, b) for a in range(m.size) for b in range(n.size)], name)


def pairing(span: SpanObject, u: Morphism, v: Morphism) -> Morphism:
    return span.mediate(u, v)


def diagonal(m: Algebra) -> tuple[SpanObject, Morphism]:
    """The product ``m x m`` with the diagonal ``<1, 1>``."""
    span = product(m, m)
    ident = identity_morphism(m)
    return span, span.mediate(ident, ident)


def pullback(f: Morphism, g: Morphism) -> SpanObject:
    """Sub-algebra ``{(a, b) : f(a) = g(b)}`` of the product, with its projections."""
    if f.target != g.target:
        raise ValueError("pullback needs a common codomain")
    by_value: dict[int, list[int]] = {}
    for b, gb in enumerate(g.map):
        by_value.setdefault(gb, []).append(b)
    pairs = [(a, b) for a, fa in enumerate(f.map) for b in by_value.get(fa, ())]
    return _span(f.source, g.source, pairs)


# -- congruences --------------------------------------------------------------


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


def _canonical_labels(classes_of) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in classes_of:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class Congruence:
    """Partition of ``base``; class ids are numbered in order of their least element."""

    base: Algebra
    partition: tuple[int, ...]

    @classmethod
    def from_labels(cls, base: Algebra, labels) -> "Congruence":
        return cls(base, _canonical_labels(labels))

    @property
    def class_count(self) -> int:
        return max(self.partition) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for x, c in enumerate(self.partition):
            out[c].append(x)
        return out

    def related(self, a: int, b: int) -> bool:
        return self.partition[a] == self.partition[b]

    def representatives(self) -> list[int]:
        return [cls[0] for cls in self.classes()]

    def is_compatible(self) -> bool:
        p = self.partition
        reps = {}
        for k, op in enumerate(self.base.ops):
            for a in range(self.base.size):
                for b in range(self.base.size):
                    key = (k, p[a], p[b])
                    c = p[op[a][b]]
                    if reps.setdefault(key, c) != c:
                        return False
        return True

    @property
    def is_diagonal(self) -> bool:
        return self.class_count == self.base.size

    @property
    def is_full(self) -> bool:
        return self.class_count == 1


def diagonal_congruence(base: Algebra) -> Congruence:
    return Congruence(base, tuple(range(base.size)))


def _translation_set(base: Algebra) -> list[int]:
    # In a monoid, invariance under translations by a generating set implies
    # invariance under all translations. Semiring translations do not compose
    # that way (x*(s+t) is not a composite of translations), so use everything.
    if base.signature == "monoid":
        return generating_set(base)
    return list(range(base.size))


def congruence_closure(base: Algebra, generating_pairs, *, translations=None) -> Congruence:
    """Smallest congruence on ``base`` containing ``generating_pairs``.

    Union-find with a work queue of merged pairs; each merge is saturated by
    left and right translation in every operation until fixpoint.
    """
    uf = UnionFind(base.size)
    queue = []
    for a, b in generating_pairs:
        if uf.union(a, b):
            queue.append((a, b))
    cs = _translation_set(base) if translations is None else list(translations)
    ops = base.ops
    while queue:
        a, b = queue.pop()
        for op in ops:
            ra, rb = op[a], op[b]
            for c in cs:
                x, y = ra[c], rb[c]
                if uf.union(x, y):
                    queue.append((x, y))
                x, y = op[c][a], op[c][b]
                if uf.union(x, y):
                    queue.append((x, y))
    return Congruence.from_labels(base, [uf.find(x) for x in range(base.size)])


def quotient(c: Congruence) -> tuple[Algebra, Morphism]:
    """Quotient algebra on the classes of ``c`` and the canonical surjection."""
    base, p = c.base, c.partition
    reps = c.representatives()
    ops = [[[p[op[x][y]] for y in reps] for x in reps] for op in base.ops]
    q_alg = type(base).from_ops(ops, p[base.neutral])
    return q_alg, Morphism(base, q_alg, p)


@dataclass(frozen=True)
class KernelPair:
    congruence: Congruence
    span: SpanObject
    diagonal: Morphism

    @property
    def apex(self) -> Algebra:
        return self.span.apex

    @property
    def pi1(self) -> Morphism:
        return self.span.leg1

    @property
    def pi2(self) -> Morphism:
        return self.span.leg2


def kernel_pair(f: Morphism) -> KernelPair:
    span = pullback(f, f)
    ident = identity_morphism(f.source)
    return KernelPair(
        Congruence.from_labels(f.source, f.map),
        span,
        span.mediate(ident, ident),
    )


def relation_pairs(u: Morphism, v: Morphism):
    return {(u.map[r], v.map[r]) for r in range(u.source.size)}


def coequalizer_of_reflexive_pair(u: Morphism, v: Morphism, section: Morphism | None = None) -> Morphism:
    """Coequaliser ``A -> Q`` of a reflexive pair ``u, v: R -> A``."""
    if u.source != v.source or u.target != v.target:
        raise ValueError("u and v must be parallel")
    ident = identity_morphism(u.target)
    if section is not None:
        if compose(u, section) != ident or compose(v, section) != ident:
            raise ValueError("section does not split both legs")
    else:
        found = None
        for s in homomorphisms(u.target, u.source):
            if compose(u, s) == ident and compose(v, s) == ident:
                found = s
                break
        if found is None:
            raise ValueError("missing reflexivity section")
    _, q = quotient(congruence_closure(u.target, relation_pairs(u, v)))
    return q


def image_factorization(f: Morphism) -> tuple[Morphism, Morphism]:
    """``f = m . e`` with ``e`` surjective onto the image and ``m`` injective."""
    elems = f.image()
    im, m = subalgebra(f.target, elems)
    index = {y: i for i, y in enumerate(elems)}
    e = Morphism(f.source, im, [index[y] for y in f.map])
    return e, m


@dataclass(frozen=True)
class ReflexiveGraphOfArrows:
    """A reflexive graph in the arrow category of the shape

        R  ==u,v==>  A'      (common section s: A' -> R)
        |f''         |f'
        v            v
        E  ==d1,d2=> B'      (common section t: B' -> E)

    with ``f' . u = d1 . f''``, ``f' . v = d2 . f''`` and ``f'' . s = t . f'``.
    The bottom row is expected to be a kernel pair ``Eq(h)``.
    """

    top_pair: tuple[Morphism, Morphism]
    top_section: Morphism
    bottom_pair: tuple[Morphism, Morphism]
    bottom_section: Morphism
    vertical_relation: Morphism  # f''
    vertical_object: Morphism  # f'

    def check(self) -> None:
        u, v = self.top_pair
        d1, d2 = self.bottom_pair
        f2, f1 = self.vertical_relation, self.vertical_object
        if compose(f1, u) != compose(d1, f2) or compose(f1, v) != compose(d2, f2):
            raise ValueError("graph legs do not commute with the vertical arrows")
        if compose(f2, self.top_section) != compose(self.bottom_section, f1):
            raise ValueError("sections do not commute with the vertical arrows")
        for leg, sec in ((u, self.top_section), (v, self.top_section), (d1, self.bottom_section), (d2, self.bottom_section)):
            if compose(leg, sec) != identity_morphism(leg.target):
                raise ValueError("section does not split a leg")
