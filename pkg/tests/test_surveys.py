import pytest

from galoiskit import catalog
from galoiskit.algebra import Morphism
from galoiskit.surveys import LEMMA_B_ORDER_CAP, SURVEYS, product_lemma_comparison, reflected_pullback_comparison, run_survey


def _strip(report):
    d = report.as_dict()
    d.pop("wall_time")
    return d


@pytest.mark.parametrize("name", sorted(SURVEYS))
def test_order_one_is_a_vacuous_pass(name):
    for ctx in SURVEYS[name].contexts:
        r = run_survey(name, ctx, 1)
        assert r.passed and r.instances == 1


def test_shipped_survey_names():
    assert set(SURVEYS) == {
        "schreier-homogeneous",
        "trivial-vs-special-homogeneous",
        "normal-central-equivalence",
        "gamma-ab-prop66",
        "ab-product-lemma",
        "g7-closure",
        "norm-universal",
        "reflector-preserves-pullbacks",
    }


def test_unknown_survey_and_context():
    with pytest.raises(KeyError):
        run_survey("no-such-survey", "MonGp", 2)
    with pytest.raises(ValueError):
        run_survey("gamma-ab-prop66", "MonGp", 2)


def test_tallies_count_every_instance():
    r = run_survey("normal-central-equivalence", "MonAb", 3)
    for bucket in r.tallies.values():
        assert sum(bucket.values()) == r.instances


def test_parallel_run_matches_serial():
    serial = run_survey("trivial-vs-special-homogeneous", "MonGp", 3)
    parallel = run_survey("trivial-vs-special-homogeneous", "MonGp", 3, jobs=2)
    assert _strip(serial) == _strip(parallel)


def test_runs_are_deterministic():
    a = run_survey("schreier-homogeneous", "MonAb", 3)
    b = run_survey("schreier-homogeneous", "MonAb", 3)
    assert _strip(a) == _strip(b)


@pytest.mark.parametrize("name", ["schreier-homogeneous", "normal-central-equivalence", "g7-closure", "norm-universal"])
def test_semiring_context_order_two(name):
    assert run_survey(name, "SRngRng", 2).passed


def test_ab_product_lemma_at_order_three():
    r = run_survey("ab-product-lemma", "MonAb", 3)
    assert r.passed and not r.notes


def test_lemma_cap_is_reported():
    r = run_survey("ab-product-lemma", "MonAb", LEMMA_B_ORDER_CAP + 1)
    assert r.notes and str(LEMMA_B_ORDER_CAP) in r.notes[0]


def test_product_lemma_comparison_is_an_isomorphism():
    lam, one_x_eta = product_lemma_comparison(catalog.cyclic_group(2), catalog.lz2())
    assert lam.is_bijective and lam.source.size == 2


def test_reflected_pullback_comparison(z2, b2, product_point):
    g = Morphism(b2, b2, [0, 1])
    assert reflected_pullback_comparison("MonAb", product_point.epi, g).is_bijective


@pytest.mark.parametrize(
    "name, ctx",
    [
        ("normal-central-equivalence", "MonGp"),
        ("gamma-ab-prop66", "MonAb"),
        ("trivial-vs-special-homogeneous", "MonGp"),
        ("trivial-vs-special-homogeneous", "MonAb"),
        ("schreier-homogeneous", "MonGp"),
    ],
)
def test_equivalences_at_order_four(name, ctx):
    r = run_survey(name, ctx, 4, jobs=2)
    assert r.passed, r.counterexamples
    assert all(b["inconclusive"] == 0 for b in r.tallies.values())


def test_default_orders():
    assert run_survey("schreier-homogeneous", "MonGp").max_order == 4
    assert run_survey("trivial-vs-special-homogeneous", "MonGp").max_order == 3
