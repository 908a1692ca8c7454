import pytest

from galoiskit import catalog
from galoiskit.algebra import FiniteMonoid, Morphism, are_isomorphic, compose, identity_morphism
from galoiskit.classifier import is_normal_extension, is_trivial_extension
from galoiskit.completions import group_complete_commutative
from galoiskit.constructions import product
from galoiskit.enumeration import EnumerationSpec, enumerate_monoids, surjection_instances
from galoiskit.normalization import (
    NormalizationResult,
    degenerate_graph,
    harvest_g7_graph,
    is_isomorphic_over,
    normal_extensions_over,
    normalize,
    trivialize_morphism,
    trivialize_over,
    verify_g7_closure,
    verify_norm_universal,
)


def terminal(alg):
    return Morphism(alg, catalog.trivial_monoid(), [0] * alg.size)


# A = {e} + a copy of Z2 with identity 1, onto B2 = {e, z}. A embeds into the
# normal extension Z2 x B2 -> B2, which forces the unit to be injective; f is
# not normal, so the unit cannot be onto.
A_WIDE = FiniteMonoid([[0, 1, 2], [1, 1, 2], [2, 2, 1]], 0)
F_WIDE = Morphism(A_WIDE, catalog.b2(), [0, 1, 1])


def test_unit_need_not_be_surjective(z2, b2):
    span = product(z2, b2)
    alpha = Morphism(A_WIDE, span.apex, [span.index(0, 0), span.index(0, 1), span.index(1, 1)])
    assert alpha.is_injective and compose(span.leg2, alpha) == F_WIDE
    for ctx in ("MonGp", "MonAb"):
        assert is_normal_extension(ctx, span.leg2)
        assert not is_normal_extension(ctx, F_WIDE)
        r = normalize(ctx, F_WIDE)
        assert r.a_bar.size == 4 and r.unit.is_injective and not r.unit.is_surjective
        assert is_normal_extension(ctx, r.normalized)
        assert verify_norm_universal(ctx, F_WIDE, r, 4).passed


def test_trivialize_examples(b2, k3_point):
    t = trivialize_over("MonAb", terminal(b2))
    assert t.trivialized.source.size == 1 and t.unit_comparison.map == (0, 0)
    t = trivialize_over("MonGp", k3_point.epi)
    assert t.trivialized.source.size == 2 and t.trivialized.is_bijective
    assert compose(t.trivialized, t.unit_comparison) == k3_point.epi


def test_trivializing_a_trivial_extension_is_an_isomorphism(product_point):
    t = trivialize_over("MonAb", product_point.epi)
    assert t.unit_comparison.is_bijective
    assert is_trivial_extension("MonAb", t.trivialized)


def test_trivialize_morphism_rejects_non_square(b2):
    t = trivialize_over("MonGp", identity_morphism(b2))
    with pytest.raises(ValueError):
        trivialize_morphism("MonGp", t, t, identity_morphism(b2), Morphism(b2, b2, [0, 0]))


def test_normalize_examples(b2):
    r = normalize("MonAb", terminal(b2))
    assert r.normalized.source.size == 1 and r.unit.map == (0, 0)
    r = normalize("MonGp", terminal(catalog.n3()))
    assert r.normalized.source.size == 1


def test_normal_extension_is_its_own_normalisation(product_point):
    f = product_point.epi
    r = normalize("MonAb", f)
    assert r.unit.is_bijective and is_isomorphic_over(r.normalized, f) is not None


def test_norm_of_terminal_map_is_group_completion():
    for m in enumerate_monoids(4):
        if m.is_commutative:
            r = normalize("MonGp", terminal(m))
            assert are_isomorphic(r.a_bar, group_complete_commutative(m).object), m


def test_universal_property_b2_to_one(b2):
    r = normalize("MonAb", terminal(b2))
    rep = verify_norm_universal("MonAb", terminal(b2), r, 4)
    assert rep.passed and rep.probes == 5  # abelian groups of order <= 4


def test_mutated_normalisation_fails_the_oracle(b2, z2):
    f = terminal(b2)
    fake = NormalizationResult(terminal(z2), Morphism(b2, z2, [0, 0]))
    rep = verify_norm_universal("MonAb", f, fake, 4)
    assert not rep.passed
    assert any(x["factorizations"] != 1 for x in rep.failures)


def test_normal_extensions_over_are_normal(b2):
    found = normal_extensions_over("MonGp", b2, 4)
    assert found
    assert all(is_normal_extension("MonGp", g).value == v for g, v in found)


def test_normalisation_is_idempotent():
    for f in surjection_instances(EnumerationSpec("monoid", 3)):
        r = normalize("MonAb", f)
        again = normalize("MonAb", r.normalized)
        assert again.unit.is_bijective
        assert is_isomorphic_over(again.normalized, r.normalized) is not None


def test_degenerate_graph_gives_back_f(n3_to_b2):
    check = verify_g7_closure("MonGp", degenerate_graph(n3_to_b2))
    assert check.induced_map.map == n3_to_b2.map
    assert check.holds is True


def test_non_normal_vertical_makes_implication_vacuous(b2):
    check = verify_g7_closure("MonGp", degenerate_graph(terminal(b2)))
    assert check.f_prime is False and check.holds is True


def test_harvested_graphs_satisfy_closure():
    for f in surjection_instances(EnumerationSpec("monoid", 2)):
        graph = harvest_g7_graph(normalize("MonGp", f))
        assert verify_g7_closure("MonGp", graph).holds is True


def test_isomorphic_over(z2):
    swap = Morphism(product(z2, z2).apex, z2, [0, 1, 1, 0])
    first = product(z2, z2).leg1
    assert is_isomorphic_over(swap, first) is not None
    assert is_isomorphic_over(terminal(z2), first) is None
