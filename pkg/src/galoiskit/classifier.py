"""Extension properties: Schreier, homogeneous, trivial, normal, central.

Every predicate returns an :class:`ExtensionVerdict`. Its ``value`` is True,
False or None, where None means inconclusive (a reflection ran out of
bound). A False verdict always carries a witness.

Points are read through the pointed operation ``main_op`` of the algebra:
multiplication for monoids and addition for semirings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .algebra import (
    Algebra,
    FiniteMonoid,
    Morphism,
    Point,
    compose,
    identity_morphism,
    is_homomorphism,
    kernel,
    morphism_violation,
)
from .completions import GaloisContext, Inconclusive, apply_reflector, get_context
from .constructions import KernelPair, SpanObject, diagonal, kernel_pair, product, pullback


class Property(str, Enum):
    SCHREIER = "schreier"
    RIGHT_HOMOGENEOUS = "right-homogeneous"
    LEFT_HOMOGENEOUS = "left-homogeneous"
    HOMOGENEOUS = "homogeneous"
    SPECIAL_HOMOGENEOUS = "special-homogeneous"
    TRIVIAL = "trivial"
    NORMAL = "normal"
    CENTRAL = "central"
    S_SPECIAL = "s-special"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExtensionVerdict:
    property: Property
    value: bool | None
    witness: Any = None
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def inconclusive(self) -> bool:
        return self.value is None

    def __bool__(self):
        # Inconclusive counts as not established.
        return self.value is True

    def as_dict(self) -> dict:
        return {
            "property": self.property.value,
            "value": self.value,
            "witness": self.witness,
            "detail": self.detail,
            **({"extra": self.extra} if self.extra else {}),
        }


@dataclass(frozen=True)
class SchreierDecomposition:
    """``q_map[a]`` is the unique kernel element with ``q_map[a] * s(f(a)) = a``."""

    point: Point
    q_map: tuple[int, ...]

    def check(self) -> None:
        op = self.point.domain.main_op
        f, s = self.point.epi, self.point.section
        for a, alpha in enumerate(self.q_map):
            if op[alpha][s.map[f.map[a]]] != a:
                raise AssertionError(f"reconstruction fails at {a}")


def _kernel_elements(f: Morphism) -> list[int]:
    return f.fiber(f.target.neutral)


def _require_surjection(f: Morphism) -> None:
    if not f.is_surjective:
        raise ValueError("expected a surjective morphism")


# -- points -------------------------------------------------------------------


def schreier_decomposition(p: Point) -> tuple[SchreierDecomposition | None, dict | None]:
    op = p.domain.main_op
    f, s = p.epi, p.section
    ker = _kernel_elements(f)
    q = []
    for a in range(p.domain.size):
        sfa = s.map[f.map[a]]
        sols = [alpha for alpha in ker if op[alpha][sfa] == a]
        if len(sols) != 1:
            return None, {"element": a, "solutions": sols}
        q.append(sols[0])
    return SchreierDecomposition(p, tuple(q)), None


def is_schreier(p: Point) -> ExtensionVerdict:
    """Each ``a`` decomposes uniquely as ``alpha * s(f(a))`` with ``alpha`` in the kernel."""
    dec, bad = schreier_decomposition(p)
    if dec is None:
        how = "no" if not bad["solutions"] else "several"
        return ExtensionVerdict(Property.SCHREIER, False, bad, f"{how} kernel element decomposes {bad['element']}")
    return ExtensionVerdict(Property.SCHREIER, True, None, extra={"q_map": list(dec.q_map)})


def _homogeneity(p: Point, side: str) -> dict | None:
    op = p.domain.main_op
    f, s = p.epi, p.section
    ker = _kernel_elements(f)
    for b in range(p.codomain.size):
        sb = s.map[b]
        seen: dict[int, int] = {}
        for n in ker:
            x = op[n][sb] if side == "right" else op[sb][n]
            if x in seen:
                return {"b": b, "reason": "not injective", "kernel_elements": [seen[x], n], "value": x}
            seen[x] = n
        missing = sorted(set(f.fiber(b)) - set(seen))
        if missing:
            return {"b": b, "reason": "not surjective", "missed": missing}
    return None


def is_right_homogeneous(p: Point) -> ExtensionVerdict:
    bad = _homogeneity(p, "right")
    return ExtensionVerdict(Property.RIGHT_HOMOGENEOUS, bad is None, bad)


def is_left_homogeneous(p: Point) -> ExtensionVerdict:
    bad = _homogeneity(p, "left")
    return ExtensionVerdict(Property.LEFT_HOMOGENEOUS, bad is None, bad)


def is_homogeneous(p: Point) -> ExtensionVerdict:
    for side in ("right", "left"):
        bad = _homogeneity(p, side)
        if bad is not None:
            return ExtensionVerdict(Property.HOMOGENEOUS, False, {"side": side, **bad})
    return ExtensionVerdict(Property.HOMOGENEOUS, True)


def kernel_pair_point(f: Morphism) -> tuple[KernelPair, Point]:
    kp = kernel_pair(f)
    return kp, Point(kp.pi1, kp.diagonal)


def is_special_homogeneous(f: Morphism) -> ExtensionVerdict:
    """The kernel-pair point ``(pi1, diagonal)`` of ``f`` is homogeneous."""
    _require_surjection(f)
    kp, point = kernel_pair_point(f)
    v = is_homogeneous(point)
    if v.value:
        return ExtensionVerdict(Property.SPECIAL_HOMOGENEOUS, True)
    w = dict(v.witness)
    pairs = kp.span.elements
    for key in ("kernel_elements", "missed"):
        if key in w:
            w[key] = [list(pairs[x]) for x in w[key]]
    if "value" in w:
        w["value"] = list(pairs[w["value"]])
    return ExtensionVerdict(Property.SPECIAL_HOMOGENEOUS, False, w, f"{w['side']} homogeneity of (pi1, diagonal) fails")


# -- Galois-theoretic properties ---------------------------------------------


def comparison_square(ctx: GaloisContext, f: Morphism) -> tuple[SpanObject, Morphism]:
    """``B x_{I(B)} I(A)`` and the comparison ``a -> (f(a), unit_A(a))``."""
    ctx = get_context(ctx)
    ra, rb = ctx.reflect(f.source), ctx.reflect(f.target)
    i_f = apply_reflector(ctx, f)
    pb = pullback(rb.unit, i_f)
    return pb, pb.mediate(f, ra.unit)


def is_trivial_extension(ctx: GaloisContext | str, f: Morphism) -> ExtensionVerdict:
    """The unit naturality square of ``f`` is a pullback."""
    _require_surjection(f)
    ctx = get_context(ctx)
    try:
        pb, comp = comparison_square(ctx, f)
    except Inconclusive as exc:
        return ExtensionVerdict(Property.TRIVIAL, None, None, str(exc))
    seen: dict[int, int] = {}
    for a, y in enumerate(comp.map):
        if y in seen:
            return ExtensionVerdict(
                Property.TRIVIAL,
                False,
                {"reason": "comparison not injective", "elements": [seen[y], a], "image": list(pb.elements[y])},
                "two elements share their image in B and in the reflection",
            )
        seen[y] = a
    missing = [list(pb.elements[y]) for y in range(pb.apex.size) if y not in seen]
    if missing:
        return ExtensionVerdict(
            Property.TRIVIAL,
            False,
            {"reason": "comparison not surjective", "missed": missing},
            "the pullback has pairs not hit by A",
        )
    return ExtensionVerdict(Property.TRIVIAL, True)


def is_normal_extension(ctx: GaloisContext | str, f: Morphism) -> ExtensionVerdict:
    """Both kernel-pair projections are trivial extensions (checked separately)."""
    _require_surjection(f)
    ctx = get_context(ctx)
    kp = kernel_pair(f)
    v1 = is_trivial_extension(ctx, kp.pi1)
    v2 = is_trivial_extension(ctx, kp.pi2)
    if v1.value is not None and v2.value is not None and v1.value != v2.value:
        raise RuntimeError(f"kernel-pair projections disagree on triviality for {f!r}")
    if v1.value is None or v2.value is None:
        return ExtensionVerdict(Property.NORMAL, None, None, v1.detail or v2.detail)
    if not v1.value:
        return ExtensionVerdict(Property.NORMAL, False, {"projection": "pi1", **v1.witness}, "pi1 is not trivial")
    return ExtensionVerdict(Property.NORMAL, True)


def _candidate_covers(f: Morphism, bound: int):
    """Surjections ``p: E -> B`` tried by the witness track.

    ``f`` itself comes first (it covers every normal extension), then every
    surjection from an enumerated algebra, then surjections out of ``A`` and
    out of the kernel pair of ``f``.
    """
    from .enumeration import EnumerationSpec, enumerate_algebras, enumerate_surjections

    b = f.target
    if f.source.size <= bound:
        yield f
    small = EnumerationSpec(b.signature, min(bound, WITNESS_ENUMERATION_CAP), min_order=b.size)
    for e in enumerate_algebras(small):
        yield from enumerate_surjections(e, b)
    for e in (f.source, kernel_pair(f).apex):
        if e.size <= bound:
            yield from enumerate_surjections(e, b)


# Enumerated covers are drawn from algebras of at most this order; larger
# covers come only from f itself and its kernel pair.
WITNESS_ENUMERATION_CAP = 3


def central_witness_search(ctx: GaloisContext | str, f: Morphism, bound: int) -> dict:
    """Look for a surjection ``p`` with ``|E| <= bound`` along which ``f`` pulls back to a trivial extension."""
    ctx = get_context(ctx)
    tried = inconclusive = 0
    for p in _candidate_covers(f, bound):
        pb = pullback(p, f)
        tried += 1
        v = is_trivial_extension(ctx, pb.leg1)
        if v.value is None:
            inconclusive += 1
        elif v.value:
            return {"found": True, "tried": tried, "inconclusive": inconclusive, "cover": list(p.map), "cover_order": p.source.size}
    return {"found": False, "tried": tried, "inconclusive": inconclusive}


def is_central_extension(
    ctx: GaloisContext | str,
    f: Morphism,
    search_order_bound: int | None = None,
    *,
    witness_track: bool = True,
) -> ExtensionVerdict:
    """Central extension, decided by the characterisation theorems.

    Groups and rings: special homogeneous surjections. Abelian groups: normal
    extensions. The witness track searches covers of order at most
    ``search_order_bound`` (default ``4 |B|``) and is recorded alongside;
    ``extra['contradiction']`` flags a cover found for a non-central verdict.
    """
    _require_surjection(f)
    ctx = get_context(ctx)
    if ctx.id == "MonAb":
        theorem = is_normal_extension(ctx, f)
    else:
        theorem = is_special_homogeneous(f)
    extra: dict = {"theorem_track": theorem.value}
    if witness_track:
        bound = search_order_bound if search_order_bound is not None else 4 * f.target.size
        search = central_witness_search(ctx, f, bound)
        extra["witness_track"] = search
        extra["contradiction"] = search["found"] and theorem.value is False
    return ExtensionVerdict(Property.CENTRAL, theorem.value, theorem.witness, theorem.detail, extra)


# -- commutation and the abelian core ----------------------------------------


@dataclass(frozen=True)
class Commutation:
    commute: bool
    cooperator: Morphism | None = None
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.commute


def commutes(x_embed: Morphism, y_embed: Morphism) -> Commutation:
    """Whether two subobjects of a common monoid commute; yields the cooperator ``(x, y) -> x y``."""
    if x_embed.target != y_embed.target:
        raise ValueError("embeddings must share a codomain")
    if not (x_embed.is_injective and y_embed.is_injective):
        raise ValueError("embeddings must be injective")
    z = x_embed.target
    op = z.main_op
    for x in x_embed.image():
        for y in y_embed.image():
            if op[x][y] != op[y][x]:
                return Commutation(False, None, (x, y))
    span = product(x_embed.source, y_embed.source)
    phi = Morphism(span.apex, z, [op[x_embed.map[a]][y_embed.map[b]] for a, b in span.elements])
    left = span.mediate(identity_morphism(x_embed.source), _zero(x_embed.source, y_embed.source))
    right = span.mediate(_zero(y_embed.source, x_embed.source), identity_morphism(y_embed.source))
    if not is_homomorphism(phi) or compose(phi, left) != x_embed or compose(phi, right) != y_embed:
        raise AssertionError("cooperator laws fail for commuting subobjects")
    return Commutation(True, phi)


def _zero(source: Algebra, target: Algebra) -> Morphism:
    return Morphism(source, target, [target.neutral] * source.size)


def classify_gamma_ab_normal(f: Morphism) -> ExtensionVerdict:
    """Special homogeneous surjection whose kernel commutes with the whole domain."""
    _require_surjection(f)
    sh = is_special_homogeneous(f)
    if not sh.value:
        return ExtensionVerdict(Property.NORMAL, False, {"conjunct": "special-homogeneous", **sh.witness}, sh.detail)
    _, k = kernel(f)
    c = commutes(k, identity_morphism(f.source))
    if not c:
        return ExtensionVerdict(
            Property.NORMAL, False, {"conjunct": "[N, A] = 0", "pair": list(c.witness)}, "kernel does not commute with A"
        )
    return ExtensionVerdict(Property.NORMAL, True)


def is_abelian_product_point(p: Point) -> ExtensionVerdict:
    """``(f, s)`` is isomorphic, as a point, to ``N x B -> B`` with ``N`` an abelian group.

    Any such isomorphism must be ``(n, b) -> n * s(b)``, so that map is tested.
    """
    a = p.domain
    _, k = kernel(p.epi)
    n_alg = k.source
    if not (isinstance(n_alg, FiniteMonoid) and n_alg.is_commutative and n_alg.is_group):
        return ExtensionVerdict(Property.TRIVIAL, False, {"reason": "kernel is not an abelian group"})
    span = product(n_alg, p.codomain)
    op = a.main_op
    phi = Morphism(span.apex, a, [op[k.map[x]][p.section.map[b]] for x, b in span.elements])
    bad = morphism_violation(phi.source, a, phi.map)
    if bad is not None:
        return ExtensionVerdict(Property.TRIVIAL, False, {"reason": "n*s(b) is not a homomorphism", **bad.as_dict()})
    if not phi.is_bijective:
        return ExtensionVerdict(Property.TRIVIAL, False, {"reason": "n*s(b) is not bijective"})
    return ExtensionVerdict(Property.TRIVIAL, True)


def is_s_special_object(ctx: GaloisContext | str, x: Algebra) -> ExtensionVerdict:
    """The indiscrete-relation point ``(p1: X x X -> X, diagonal)`` is a trivial extension."""
    span, _ = diagonal(x)
    v = is_trivial_extension(ctx, span.leg1)
    return ExtensionVerdict(Property.S_SPECIAL, v.value, v.witness, v.detail)


PROPERTY_NEEDS = {
    Property.SCHREIER: "point",
    Property.RIGHT_HOMOGENEOUS: "point",
    Property.LEFT_HOMOGENEOUS: "point",
    Property.HOMOGENEOUS: "point",
    Property.SPECIAL_HOMOGENEOUS: "morphism",
    Property.TRIVIAL: "morphism",
    Property.NORMAL: "morphism",
    Property.CENTRAL: "morphism",
    Property.S_SPECIAL: "object",
}
