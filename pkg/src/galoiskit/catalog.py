"""Small named algebras used throughout the docs, tests and CLI.

=========  ==============================================================
``1``      trivial monoid
``Zn``     cyclic group of order n (addition mod n), e.g. ``Z2``, ``Z3``
``B2``     ({0, 1}, max), identity 0
``N3``     {0, 1, 2} with saturating addition min(a + b, 2)
``K3``     {e, a, z}: a*a = z, z absorbing (indices 0, 1, 2)
``LZ2``    {e, a, b}: a*x = a and b*x = b for x != e (indices 0, 1, 2)
``S3``     symmetric group on three letters
``BoolRig``  ({0, 1}, or, and) as a semiring
``Zn-ring``  integers mod n as a semiring, e.g. ``Z2-ring``
``Zn-null``  Zn with zero multiplication
=========  ==============================================================
"""

from __future__ import annotations

from itertools import permutations

from .algebra import Algebra, FiniteMonoid, FiniteSemiring


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, "1")


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], 0, f"Z{n}")


def b2() -> FiniteMonoid:
    return FiniteMonoid([[0, 1], [1, 1]], 0, "B2")


def n3() -> FiniteMonoid:
    return FiniteMonoid([[min(a + b, 2) for b in range(3)] for a in range(3)], 0, "N3")


def k3() -> FiniteMonoid:
    # e=0, a=1, z=2
    return FiniteMonoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0, "K3")


def lz2() -> FiniteMonoid:
    # e=0, a=1, b=2
    return FiniteMonoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0, "LZ2")


def symmetric_group_3() -> FiniteMonoid:
    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return FiniteMonoid(table, index[(0, 1, 2)], "S3")


def bool_rig() -> FiniteSemiring:
    return FiniteSemiring([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, "BoolRig")


def zn_ring(n: int) -> FiniteSemiring:
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteSemiring(add, mul, 0, f"Z{n}-ring")


def zn_null_ring(n: int) -> FiniteSemiring:
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteSemiring(add, [[0] * n for _ in range(n)], 0, f"Z{n}-null")


def trivial_semiring() -> FiniteSemiring:
    return FiniteSemiring(((0,),), ((0,),), 0, "0")


def lookup(name: str) -> Algebra:
    """Resolve a catalog name; raises KeyError for unknown names."""
    fixed = {
        "1": trivial_monoid,
        "B2": b2,
        "N3": n3,
        "K3": k3,
        "LZ2": lz2,
        "S3": symmetric_group_3,
        "BoolRig": bool_rig,
        "0": trivial_semiring,
    }
    if name in fixed:
        return fixed[name]()
    if name.startswith("Z"):
        body, _, suffix = name[1:].partition("-")
        if body.isdigit() and int(body) >= 1:
            n = int(body)
            if suffix == "":
                return cyclic_group(n)
            if suffix == "ring":
                return zn_ring(n)
            if suffix == "null":
                return zn_null_ring(n)
    raise KeyError(name)
