"""Finite monoids, finite semirings, homomorphisms and points.

Elements of an algebra are the indices ``0 .. size-1``. The neutral element
(identity of a monoid, zero of a semiring) may sit at any index.

Every algebra exposes the same small generic surface used by the rest of the
package:

* ``ops``      tuple of binary operation tables (one for monoids, ``(add, mul)``
               for semirings)
* ``neutral``  the designated constant
* ``main_op``  the pointed operation used for kernels, Schreier decompositions
               and homogeneity (multiplication of a monoid, addition of a
               semiring)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import ClassVar, Iterator, Sequence, Union

Table = tuple[tuple[int, ...], ...]


class LawViolation(ValueError):
    """An algebra or morphism failed one of its laws.

    ``law`` is a short machine name, ``witness`` the offending elements.
    """

    def __init__(self, law: str, witness: tuple = (), message: str | None = None):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(message or f"{law} violated at {self.witness}")

    def as_dict(self) -> dict:
        return {"law": self.law, "witness": list(self.witness), "message": str(self)}


def freeze_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in table)


@dataclass(frozen=True)
class FiniteMonoid:
    table: Table
    identity: int = 0
    name: str | None = field(default=None, compare=False)

    signature: ClassVar[str] = "monoid"

    def __post_init__(self):
        object.__setattr__(self, "table", freeze_table(self.table))

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def ops(self) -> tuple[Table, ...]:
        return (self.table,)

    @property
    def neutral(self) -> int:
        return self.identity

    @property
    def main_op(self) -> Table:
        return self.table

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        n = self.size
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def inverse(self, a: int) -> int | None:
        e = self.identity
        for b in range(self.size):
            if self.table[a][b] == e and self.table[b][a] == e:
                return b
        return None

    @cached_property
    def is_group(self) -> bool:
        return all(self.inverse(a) is not None for a in range(self.size))

    def idempotents(self) -> list[int]:
        return [a for a in range(self.size) if self.table[a][a] == a]

    @classmethod
    def from_ops(cls, ops, neutral, name=None) -> "FiniteMonoid":
        (table,) = ops
        return cls(table, neutral, name)

    def renamed(self, name: str | None) -> "FiniteMonoid":
        return FiniteMonoid(self.table, self.identity, name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteMonoid{label} size={self.size} identity={self.identity}>"


@dataclass(frozen=True)
class FiniteSemiring:
    """Semiring ``(S, +, *, 0)``; a multiplicative unit is optional."""

    add_table: Table
    mul_table: Table
    zero: int = 0
    name: str | None = field(default=None, compare=False)

    signature: ClassVar[str] = "semiring"

    def __post_init__(self):
        object.__setattr__(self, "add_table", freeze_table(self.add_table))
        object.__setattr__(self, "mul_table", freeze_table(self.mul_table))

    @property
    def size(self) -> int:
        return len(self.add_table)

    @property
    def ops(self) -> tuple[Table, ...]:
        return (self.add_table, self.mul_table)

    @property
    def neutral(self) -> int:
        return self.zero

    @property
    def main_op(self) -> Table:
        return self.add_table

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    @cached_property
    def unit(self) -> int | None:
        m = self.mul_table
        for u in range(self.size):
            if all(m[u][x] == x == m[x][u] for x in range(self.size)):
                return u
        return None

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @cached_property
    def is_ring(self) -> bool:
        a, z, n = self.add_table, self.zero, self.size
        return all(any(a[x][y] == z for y in range(n)) for x in range(n))

    @cached_property
    def is_commutative(self) -> bool:
        m = self.mul_table
        n = self.size
        return all(m[a][b] == m[b][a] for a in range(n) for b in range(a + 1, n))

    def additive_monoid(self) -> FiniteMonoid:
        return FiniteMonoid(self.add_table, self.zero)

    @classmethod
    def from_ops(cls, ops, neutral, name=None) -> "FiniteSemiring":
        add, mul = ops
        return cls(add, mul, neutral, name)

    def renamed(self, name: str | None) -> "FiniteSemiring":
        return FiniteSemiring(self.add_table, self.mul_table, self.zero, name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteSemiring{label} size={self.size} zero={self.zero}>"


Algebra = Union[FiniteMonoid, FiniteSemiring]


@dataclass(frozen=True)
class Morphism:
    source: Algebra
    target: Algebra
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def kind(self) -> str:
        return "semiring-hom" if self.source.signature == "semiring" else "monoid-hom"

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_bijective(self) -> bool:
        return self.is_surjective and self.is_injective

    def image(self) -> list[int]:
        return sorted(set(self.map))

    def fiber(self, y: int) -> list[int]:
        return [x for x, fx in enumerate(self.map) if fx == y]

    def inverse(self) -> "Morphism":
        if not self.is_bijective:
            raise ValueError("morphism is not bijective")
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return Morphism(self.target, self.source, inv)

    def __repr__(self):
        return f"Morphism({self.source!r} -> {self.target!r}, {list(self.map)})"


def identity_morphism(alg: Algebra) -> Morphism:
    return Morphism(alg, alg, range(alg.size))


def compose(*morphisms: Morphism) -> Morphism:
    """``compose(g, f)`` is ``g after f``."""
    if not morphisms:
        raise ValueError("nothing to compose")
    *rest, result = morphisms
    for g in reversed(rest):
        if g.source != result.target:
            raise ValueError("morphisms are not composable")
        result = Morphism(result.source, g.target, [g.map[y] for y in result.map])
    return result


def constant_morphism(source: Algebra, target: Algebra) -> Morphism:
    """The map sending everything to the target's neutral element."""
    return Morphism(source, target, [target.neutral] * source.size)


@dataclass(frozen=True)
class Point:
    """Split epimorphism ``epi: A -> B`` with chosen section ``section: B -> A``."""

    epi: Morphism
    section: Morphism

    def __post_init__(self):
        if self.section.source != self.epi.target or self.section.target != self.epi.source:
            raise ValueError("section does not go backwards along the epimorphism")
        for b in range(self.epi.target.size):
            if self.epi.map[self.section.map[b]] != b:
                raise LawViolation("split", (b,), f"epi(section({b})) != {b}")

    @property
    def domain(self) -> Algebra:
        return self.epi.source

    @property
    def codomain(self) -> Algebra:
        return self.epi.target


# -- validation ---------------------------------------------------------------


def _shape_violation(table, n=None) -> LawViolation | None:
    rows = list(table)
    size = len(rows) if n is None else n
    if size == 0:
        return LawViolation("empty", (), "carrier must be nonempty")
    if len(rows) != size:
        return LawViolation("shape", (len(rows),), f"expected {size} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != size:
            return LawViolation("shape", (i,), f"row {i} has {len(row)} entries, expected {size}")
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if not (0 <= x < size):
                return LawViolation("closure", (i, j, x), f"entry [{i}][{j}] = {x} out of range")
    return None


def _associativity_violation(t: Table, law: str = "associativity") -> LawViolation | None:
    n = len(t)
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            tab = t[ab]
            tb = t[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    return LawViolation(law, (a, b, c), f"({a}*{b})*{c} != {a}*({b}*{c})")
    return None


def _identity_violation(t: Table, e: int, law: str = "identity") -> LawViolation | None:
    if not (0 <= e < len(t)):
        return LawViolation(law, (e,), f"designated element {e} out of range")
    for a in range(len(t)):
        if t[e][a] != a or t[a][e] != a:
            return LawViolation(law, (a,), f"{e} is not neutral for {a}")
    return None


def monoid_violation(table, identity) -> LawViolation | None:
    """First violated monoid law, or None."""
    bad = _shape_violation(table)
    if bad:
        return bad
    t = freeze_table(table)
    return _identity_violation(t, identity) or _associativity_violation(t)


def validate_monoid(table, identity, name: str | None = None) -> FiniteMonoid:
    bad = monoid_violation(table, identity)
    if bad:
        raise bad
    return FiniteMonoid(table, identity, name)


def semiring_violation(add_table, mul_table, zero) -> LawViolation | None:
    bad = _shape_violation(add_table)
    if bad:
        return bad
    bad = _shape_violation(mul_table, len(add_table))
    if bad:
        return bad
    a = freeze_table(add_table)
    m = freeze_table(mul_table)
    n = len(a)
    bad = _identity_violation(a, zero, "additive-identity")
    if bad:
        return bad
    for x in range(n):
        for y in range(x + 1, n):
            if a[x][y] != a[y][x]:
                return LawViolation("additive-commutativity", (x, y), f"{x}+{y} != {y}+{x}")
    bad = _associativity_violation(a, "additive-associativity") or _associativity_violation(
        m, "multiplicative-associativity"
    )
    if bad:
        return bad
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
                    return LawViolation("left-distributivity", (x, y, z), f"{x}*({y}+{z}) != {x}*{y}+{x}*{z}")
                if m[a[x][y]][z] != a[m[x][z]][m[y][z]]:
                    return LawViolation("right-distributivity", (x, y, z), f"({x}+{y})*{z} != {x}*{z}+{y}*{z}")
    for x in range(n):
        if m[zero][x] != zero or m[x][zero] != zero:
            return LawViolation("zero-absorption", (x,), f"zero does not absorb {x}")
    return None


def validate_semiring(add_table, mul_table, zero, name: str | None = None) -> FiniteSemiring:
    bad = semiring_violation(add_table, mul_table, zero)
    if bad:
        raise bad
    return FiniteSemiring(add_table, mul_table, zero, name)


def morphism_violation(source: Algebra, target: Algebra, mapping) -> LawViolation | None:
    if source.signature != target.signature:
        return LawViolation("signature", (), "source and target have different signatures")
    mapping = list(mapping)
    if len(mapping) != source.size:
        return LawViolation("shape", (len(mapping),), f"map has {len(mapping)} entries, expected {source.size}")
    for x, y in enumerate(mapping):
        if not (0 <= y < target.size):
            return LawViolation("closure", (x, y), f"image of {x} is out of range")
    if mapping[source.neutral] != target.neutral:
        return LawViolation("neutral", (source.neutral,), "neutral element not preserved")
    for k, (s_op, t_op) in enumerate(zip(source.ops, target.ops)):
        for a in range(source.size):
            for b in range(source.size):
                if mapping[s_op[a][b]] != t_op[mapping[a]][mapping[b]]:
                    return LawViolation("preservation", (k, a, b), f"operation {k} not preserved at ({a}, {b})")
    return None


def validate_morphism(source: Algebra, target: Algebra, mapping) -> Morphism:
    bad = morphism_violation(source, target, mapping)
    if bad:
        raise bad
    return Morphism(source, target, mapping)


def is_homomorphism(f: Morphism) -> bool:
    return morphism_violation(f.source, f.target, f.map) is None


# -- substructures ------------------------------------------------------------


def closure(alg: Algebra, seeds, closed: set[int] | None = None) -> set[int]:
    """Smallest subset containing ``seeds`` and the neutral element, closed under all operations.

    ``closed`` may name an already-closed subset to grow from.
    """
    reached = set(closed) if closed else set()
    queue = [x for x in {alg.neutral, *seeds} if x not in reached]
    reached.update(queue)
    while queue:
        x = queue.pop()
        for y in list(reached):
            for op in alg.ops:
                for z in (op[x][y], op[y][x]):
                    if z not in reached:
                        reached.add(z)
                        queue.append(z)
    return reached


def generating_set(alg: Algebra) -> list[int]:
    """A small generating set (greedy, not necessarily minimum)."""
    gens: list[int] = []
    reached = closure(alg, ())
    greedy = alg.size <= 32
    while len(reached) < alg.size:
        best, best_reach = None, None
        for x in range(alg.size):
            if x in reached:
                continue
            r = closure(alg, (x,), reached)
            if best_reach is None or len(r) > len(best_reach):
                best, best_reach = x, r
            if not greedy or len(r) == alg.size:
                break
        gens.append(best)
        reached = best_reach
    return gens


def subalgebra(alg: Algebra, elements) -> tuple[Algebra, Morphism]:
    """Restrict ``alg`` to a closed subset; returns the subalgebra and its inclusion."""
    elems = sorted(set(elements))
    index = {x: i for i, x in enumerate(elems)}
    try:
        ops = [[[index[op[x][y]] for y in elems] for x in elems] for op in alg.ops]
        neutral = index[alg.neutral]
    except KeyError:
        raise ValueError("subset is not closed under the operations") from None
    sub = type(alg).from_ops(ops, neutral)
    return sub, Morphism(sub, alg, elems)


def kernel(f: Morphism) -> tuple[Algebra, Morphism]:
    """Preimage of the target's neutral element, with its inclusion into the source."""
    return subalgebra(f.source, f.fiber(f.target.neutral))


def is_abelian_object(m: FiniteMonoid) -> bool:
    return m.is_commutative and m.is_group


# -- homomorphism search ------------------------------------------------------


def _extend(mapping: dict, new: dict, op_pairs) -> dict | None:
    m = dict(mapping)
    queue = []
    for x, t in new.items():
        if x in m:
            if m[x] != t:
                return None
        else:
            m[x] = t
            queue.append(x)
    while queue:
        x = queue.pop()
        fx = m[x]
        for y in list(m):
            fy = m[y]
            for s_op, t_op in op_pairs:
                z, fz = s_op[x][y], t_op[fx][fy]
                got = m.get(z)
                if got is None:
                    m[z] = fz
                    queue.append(z)
                elif got != fz:
                    return None
                z, fz = s_op[y][x], t_op[fy][fx]
                got = m.get(z)
                if got is None:
                    m[z] = fz
                    queue.append(z)
                elif got != fz:
                    return None
    return m


def homomorphisms(
    source: Algebra, target: Algebra, *, seed: dict | None = None, injective: bool = False
) -> Iterator[Morphism]:
    """All homomorphisms ``source -> target`` agreeing with ``seed``.

    Backtracks over images of a generating set and propagates through the
    operation tables, so cost tracks the number of generators rather than the
    size of the source.
    """
    if source.signature != target.signature:
        raise ValueError("signature mismatch")
    op_pairs = list(zip(source.ops, target.ops))
    start = _extend({source.neutral: target.neutral}, dict(seed or {}), op_pairs)
    if start is None:
        return
    if injective and len(set(start.values())) < len(start):
        return
    gens = generating_set(source)

    def rec(i, partial):
        if len(partial) == source.size:
            yield Morphism(source, target, [partial[x] for x in range(source.size)])
            return
        while gens[i] in partial:
            i += 1
        g = gens[i]
        used = set(partial.values()) if injective else ()
        for t in range(target.size):
            if t in used:
                continue
            ext = _extend(partial, {g: t}, op_pairs)
            if ext is None:
                continue
            if injective and len(set(ext.values())) < len(ext):
                continue
            yield from rec(i + 1, ext)

    yield from rec(0, start)


def _invariants(alg: Algebra) -> tuple:
    inv = [alg.signature, alg.size]
    for op in alg.ops:
        n = len(op)
        inv.append(sum(op[a][a] == a for a in range(n)))
        inv.append(sum(op[a][b] == op[b][a] for a in range(n) for b in range(n)))
        inv.append(sorted(len(set(row)) for row in op))
    return tuple(map(str, inv))


def are_isomorphic(m: Algebra, n: Algebra) -> Morphism | None:
    """An isomorphism ``m -> n`` if one exists, else None."""
    if _invariants(m) != _invariants(n):
        return None
    return next(homomorphisms(m, n, injective=True), None)
