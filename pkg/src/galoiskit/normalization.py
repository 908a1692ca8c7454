"""Trivialisation, the normalisation of an extension, and checks of its universal property.

For ``f: A -> B`` the normalisation is built from the following data:

* the kernel pair ``R_f = Eq(f)`` with projections ``pi1, pi2``;
* the kernel pair ``Eq(pi2)`` with projections ``p1', p2'`` into ``R_f`` and
  ``pi1' = pi1 x pi1: Eq(pi2) -> R_f``. The squares ``(p1', pi1)`` and
  ``(p2', pi2)`` are morphisms of extensions from ``pi1'`` to ``pi1``, with
  common section ``(diagonal', diagonal)``;
* trivialisations of ``pi1`` and ``pi1'``. The parallel pair transports to
  ``Eq(pi2)_Triv => R_f_Triv`` by functoriality;
* the coequaliser ``f_: R_f_Triv -> A_bar`` of that pair, with ``Norm(f): A_bar
  -> B`` induced by ``f . Triv(pi1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Algebra, Morphism, compose, homomorphisms, identity_morphism, is_homomorphism
from .classifier import is_normal_extension
from .completions import GaloisContext, apply_reflector, get_context
from .constructions import (
    KernelPair,
    ReflexiveGraphOfArrows,
    SpanObject,
    coequalizer_of_reflexive_pair,
    kernel_pair,
    pullback,
)


@dataclass(frozen=True)
class TrivializationResult:
    """``Triv(f): A_Triv -> B`` with ``A_Triv = B x_{I(B)} I(A)`` and the comparison ``A -> A_Triv``."""

    trivialized: Morphism
    unit_comparison: Morphism
    span: SpanObject = field(compare=False)
    source: Morphism = field(compare=False)

    @property
    def apex(self) -> Algebra:
        return self.trivialized.source


def trivialize_over(ctx: GaloisContext | str, f: Morphism) -> TrivializationResult:
    """Pull ``I(f)`` back along the unit at ``B``."""
    ctx = get_context(ctx)
    ra, rb = ctx.reflect(f.source), ctx.reflect(f.target)
    i_f = apply_reflector(ctx, f)
    span = pullback(rb.unit, i_f)
    return TrivializationResult(span.leg1, span.mediate(f, ra.unit), span, f)


def trivialize_morphism(ctx: GaloisContext | str, t1: TrivializationResult, t2: TrivializationResult, u: Morphism, v: Morphism) -> Morphism:
    """``Triv(u, v)`` for a square ``t2.source . u = v . t1.source``: ``(b, x) -> (v(b), I(u)(x))``."""
    ctx = get_context(ctx)
    if compose(t2.source, u) != compose(v, t1.source):
        raise ValueError("(u, v) is not a morphism of extensions")
    i_u = apply_reflector(ctx, u)
    return t2.span.mediate(compose(v, t1.trivialized), compose(i_u, t1.span.leg2))


@dataclass(frozen=True)
class NormalizationDiagram:
    """Every intermediate object of the construction, kept for inspection and for harvesting graphs."""

    kernel_pair: KernelPair  # R_f with pi1, pi2, diagonal
    eq_pi2: KernelPair  # Eq(pi2) with p1', p2' and diagonal'
    pi1_prime: Morphism  # Eq(pi2) -> R_f
    triv_pi1: TrivializationResult  # R_f_Triv -> A
    triv_pi1_prime: TrivializationResult  # Eq(pi2)_Triv -> R_f
    top_pair: tuple[Morphism, Morphism]  # Eq(pi2)_Triv => R_f_Triv
    top_section: Morphism  # R_f_Triv -> Eq(pi2)_Triv
    coequalizer: Morphism  # f_: R_f_Triv -> A_bar


@dataclass(frozen=True)
class NormalizationResult:
    normalized: Morphism
    unit: Morphism
    intermediate: NormalizationDiagram | None = field(default=None, compare=False)
    context: str = ""

    @property
    def a_bar(self) -> Algebra:
        return self.normalized.source


def _induce(q: Morphism, g: Morphism) -> Morphism:
    """The map ``h`` with ``h . q = g`` for a surjection ``q``; raises if ``g`` does not factor."""
    values: dict[int, int] = {}
    for x, y in enumerate(q.map):
        if values.setdefault(y, g.map[x]) != g.map[x]:
            raise ValueError("map is not constant on the fibres of the quotient")
    return Morphism(q.target, g.target, [values[y] for y in range(q.target.size)])


def normalize(ctx: GaloisContext | str, f: Morphism) -> NormalizationResult:
    """Universal normal extension under the surjection ``f``.

    Raises :class:`Inconclusive` if any reflection exceeds its bound.
    """
    ctx = get_context(ctx)
    if not f.is_surjective:
        raise ValueError("normalize needs a surjection")
    kp = kernel_pair(f)
    pi1, pi2, delta = kp.pi1, kp.pi2, kp.diagonal
    eq = kernel_pair(pi2)
    p1p, p2p, delta_p = eq.pi1, eq.pi2, eq.diagonal
    pi1_prime = kp.span.mediate(compose(pi1, p1p), compose(pi1, p2p))

    t_pi1 = trivialize_over(ctx, pi1)
    t_pi1p = trivialize_over(ctx, pi1_prime)
    u = trivialize_morphism(ctx, t_pi1p, t_pi1, p1p, pi1)
    v = trivialize_morphism(ctx, t_pi1p, t_pi1, p2p, pi2)
    sec = trivialize_morphism(ctx, t_pi1, t_pi1p, delta_p, delta)
    f_ = coequalizer_of_reflexive_pair(u, v, sec)

    norm = _induce(f_, compose(f, t_pi1.trivialized))
    # eta^Norm is induced along the coequaliser pi2: R_f -> A
    eta = _induce(pi2, compose(f_, t_pi1.unit_comparison))
    if not (is_homomorphism(norm) and is_homomorphism(eta)):
        raise AssertionError("induced maps are not homomorphisms")
    if compose(norm, eta) != f:
        raise AssertionError("Norm(f) . eta != f")
    diagram = NormalizationDiagram(kp, eq, pi1_prime, t_pi1, t_pi1p, (u, v), sec, f_)
    return NormalizationResult(norm, eta, diagram, ctx.id)


# -- universal property -------------------------------------------------------


@dataclass
class NormUniversalReport:
    passed: bool = True
    probes: int = 0
    factorizations: int = 0
    skipped_inconclusive: int = 0
    failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "probes": self.probes,
            "factorizations": self.factorizations,
            "skipped_inconclusive": self.skipped_inconclusive,
            "failures": self.failures,
        }


def normal_extensions_over(ctx: GaloisContext | str, b: Algebra, max_order: int) -> tuple:
    """Normal extensions ``g: C -> B`` with ``|C| <= max_order`` (``C`` up to isomorphism).

    Returns ``(g, value)`` pairs; ``value`` is None for inconclusive candidates.
    """
    return _normal_extensions_over(get_context(ctx).id, b, max_order)


@lru_cache(maxsize=256)
def _normal_extensions_over(ctx_id: str, b: Algebra, max_order: int) -> tuple:
    from .enumeration import EnumerationSpec, enumerate_algebras, enumerate_surjections

    out = []
    spec = EnumerationSpec(b.signature, max_order, min_order=b.size)
    for c in enumerate_algebras(spec):
        for g in enumerate_surjections(c, b):
            v = is_normal_extension(ctx_id, g).value
            if v is not False:
                out.append((g, v))
    return tuple(out)


def verify_norm_universal(
    ctx: GaloisContext | str, f: Morphism, result: NormalizationResult, probe_order_bound: int = 4
) -> NormUniversalReport:
    """Every ``alpha`` with ``g . alpha = f`` for a normal ``g: C -> B`` factors exactly once through ``result``.

    For each such ``alpha`` all homomorphisms ``A_bar -> C`` are enumerated and
    those with ``g . a = Norm(f)`` and ``a . eta = alpha`` are counted.
    """
    ctx = get_context(ctx)
    report = NormUniversalReport()
    norm, eta = result.normalized, result.unit
    for g, value in normal_extensions_over(ctx, f.target, probe_order_bound):
        if value is None:
            report.skipped_inconclusive += 1
            continue
        report.probes += 1
        c = g.source
        into_c = None
        for alpha in homomorphisms(f.source, c):
            if compose(g, alpha) != f:
                continue
            if into_c is None:
                into_c = list(homomorphisms(result.a_bar, c))
            report.factorizations += 1
            count = sum(1 for h in into_c if compose(g, h) == norm and compose(h, eta) == alpha)
            if count != 1:
                report.passed = False
                report.failures.append(
                    {
                        "probe": list(g.map),
                        "probe_order": c.size,
                        "probe_table": [list(r) for r in c.ops[0]],
                        "alpha": list(alpha.map),
                        "factorizations": count,
                    }
                )
    return report


# -- condition (G7-) ----------------------------------------------------------


@dataclass(frozen=True)
class G7Check:
    f_prime: bool | None
    f_double_prime: bool | None
    induced: bool | None
    induced_map: Morphism | None = field(default=None, compare=False)

    @property
    def holds(self) -> bool | None:
        """Truth of ``normal(f') and normal(f'') => normal(f)``; None if undecided."""
        if self.f_prime is False or self.f_double_prime is False:
            return True
        if self.induced is True:
            return True
        if None in (self.f_prime, self.f_double_prime, self.induced):
            return None
        return False


def verify_g7_closure(ctx: GaloisContext | str, graph: ReflexiveGraphOfArrows) -> G7Check:
    """Coequalise both rows of ``graph`` and test normality of the induced vertical map."""
    ctx = get_context(ctx)
    graph.check()
    u, v = graph.top_pair
    d1, d2 = graph.bottom_pair
    q_top = coequalizer_of_reflexive_pair(u, v, graph.top_section)
    q_bot = coequalizer_of_reflexive_pair(d1, d2, graph.bottom_section)
    induced = _induce(q_top, compose(q_bot, graph.vertical_object))
    if not is_homomorphism(induced):
        raise AssertionError("induced map between coequalisers is not a homomorphism")

    def normal(m: Morphism) -> bool | None:
        return is_normal_extension(ctx, m).value

    return G7Check(normal(graph.vertical_object), normal(graph.vertical_relation), normal(induced), induced)


def harvest_g7_graph(result: NormalizationResult) -> ReflexiveGraphOfArrows:
    """The reflexive graph ``Eq(pi2)_Triv => R_f_Triv`` over ``Eq(f) => A`` produced by a normalisation."""
    d = result.intermediate
    if d is None:
        raise ValueError("result carries no intermediate diagram")
    graph = ReflexiveGraphOfArrows(
        top_pair=d.top_pair,
        top_section=d.top_section,
        bottom_pair=(d.kernel_pair.pi1, d.kernel_pair.pi2),
        bottom_section=d.kernel_pair.diagonal,
        vertical_relation=d.triv_pi1_prime.trivialized,
        vertical_object=d.triv_pi1.trivialized,
    )
    graph.check()
    return graph


def degenerate_graph(f: Morphism) -> ReflexiveGraphOfArrows:
    """Both rows discrete (equal legs, identity section); coequalising gives back ``f``."""
    a, b = f.source, f.target
    ia, ib = identity_morphism(a), identity_morphism(b)
    return ReflexiveGraphOfArrows((ia, ia), ia, (ib, ib), ib, f, f)


def is_isomorphic_over(g: Morphism, h: Morphism) -> Morphism | None:
    """An isomorphism ``phi`` with ``h . phi = g``, if any."""
    if g.target != h.target or g.source.size != h.source.size:
        return None
    for phi in homomorphisms(g.source, h.source, injective=True):
        if compose(h, phi) == g:
            return phi
    return None
