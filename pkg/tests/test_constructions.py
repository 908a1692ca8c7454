import pytest

from galoiskit import catalog
from galoiskit.algebra import Morphism, are_isomorphic, identity_morphism, is_homomorphism
from galoiskit.constructions import (
    Congruence,
    coequalizer_of_reflexive_pair,
    congruence_closure,
    diagonal,
    diagonal_congruence,
    image_factorization,
    kernel_pair,
    product,
    pullback,
    quotient,
)


def test_product_with_terminal_is_the_other_factor(z2, one):
    assert are_isomorphic(product(one, z2).apex, z2)


def test_product_table_is_componentwise(z2, b2):
    span = product(z2, b2)
    assert span.apex.size == 4
    for i, (a, b) in enumerate(span.elements):
        for j, (c, d) in enumerate(span.elements):
            k = span.apex.table[i][j]
            assert span.elements[k] == (z2.table[a][c], b2.table[b][d])


def test_pairing_of_identities_is_the_diagonal(z2):
    span, delta = diagonal(z2)
    ident = identity_morphism(z2)
    assert span.mediate(ident, ident) == delta
    assert [span.elements[i] for i in delta.map] == [(0, 0), (1, 1)]


def test_pullback_of_identities(b2):
    ident = identity_morphism(b2)
    span = pullback(ident, ident)
    assert span.elements == ((0, 0), (1, 1))
    assert are_isomorphic(span.apex, b2)


def test_pullback_counts_matching_pairs(n3_to_b2):
    g = Morphism(catalog.k3(), catalog.b2(), [0, 1, 1])
    span = pullback(n3_to_b2, g)
    assert span.apex.size == 5  # 1 + 2*2
    assert is_homomorphism(span.leg1) and is_homomorphism(span.leg2)


def test_pullback_over_terminal_is_the_product(z2, b2, one):
    span = pullback(Morphism(z2, one, [0, 0]), Morphism(b2, one, [0, 0]))
    assert span.elements == product(z2, b2).elements


def test_mediate_rejects_non_cone(n3_to_b2):
    span = pullback(n3_to_b2, n3_to_b2)
    n3 = n3_to_b2.source
    with pytest.raises(ValueError):
        span.mediate(identity_morphism(n3), Morphism(n3, n3, [0, 0, 0]))


def test_kernel_pair_examples(z2, b2, one, n3_to_b2):
    kp = kernel_pair(identity_morphism(z2))
    assert kp.congruence.is_diagonal and kp.congruence.class_count == 2
    kp = kernel_pair(Morphism(b2, one, [0, 0]))
    assert kp.congruence.is_full and kp.apex.size == 4
    kp = kernel_pair(n3_to_b2)
    assert kp.apex.size == 5
    assert kp.congruence.classes() == [[0], [1, 2]]
    assert kp.pi1.map == tuple(a for a, _ in kp.span.elements)
    assert all(kp.span.elements[d] == (x, x) for x, d in enumerate(kp.diagonal.map))


def test_closure_examples(z2, b2):
    assert congruence_closure(z2, []).is_diagonal
    assert congruence_closure(catalog.n3(), [(1, 2)]).classes() == [[0], [1, 2]]
    assert congruence_closure(b2, [(0, 1)]).is_full


def test_closure_saturates():
    # in Z4, 0 ~ 2 forces 1 ~ 3
    c = congruence_closure(catalog.cyclic_group(4), [(0, 2)])
    assert c.classes() == [[0, 2], [1, 3]]


def test_semiring_closure_uses_both_operations():
    r = catalog.zn_ring(4)
    c = congruence_closure(r, [(0, 2)])
    assert c.classes() == [[0, 2], [1, 3]] and c.is_compatible()


def test_quotient_examples(b2):
    n3 = catalog.n3()
    q, p = quotient(diagonal_congruence(n3))
    assert q == n3 and p == identity_morphism(n3)
    q, p = quotient(congruence_closure(n3, [(1, 2)]))
    assert are_isomorphic(q, b2) and is_homomorphism(p)
    q, _ = quotient(congruence_closure(b2, [(0, 1)]))
    assert q.size == 1


def test_congruence_labels_are_canonical(b2):
    assert Congruence.from_labels(b2, [7, 3]).partition == (0, 1)
    assert Congruence.from_labels(b2, [5, 5]) == Congruence.from_labels(b2, [0, 0])


def test_coequalizer_of_equal_legs_is_identity(z2):
    ident = identity_morphism(z2)
    assert coequalizer_of_reflexive_pair(ident, ident).map == (0, 1)


def test_coequalizer_of_kernel_pair_is_the_image(n3_to_b2):
    kp = kernel_pair(n3_to_b2)
    q = coequalizer_of_reflexive_pair(kp.pi1, kp.pi2, kp.diagonal)
    assert q.map == (0, 1, 1)
    assert are_isomorphic(q.target, catalog.b2())


def test_coequalizer_requires_a_section(z2):
    twist = Morphism(z2, z2, [0, 1])
    zero = Morphism(z2, z2, [0, 0])
    with pytest.raises(ValueError, match="reflexivity"):
        coequalizer_of_reflexive_pair(twist, zero)


def test_image_factorization_examples(z2, n3_to_b2):
    e, m = image_factorization(n3_to_b2)
    assert m.is_bijective
    e, m = image_factorization(Morphism(z2, z2, [0, 0]))
    assert e.target.size == 1
    span = product(catalog.b2(), catalog.b2())
    f = span.mediate(n3_to_b2, n3_to_b2)
    e, m = image_factorization(f)
    assert are_isomorphic(e.target, catalog.b2()) and m.is_injective
