"""Exhaustive theorem surveys over enumerated small instances.

A survey is an instance generator plus a per-instance check returning a
dict of property values (True/False/None) and an optional counterexample.
Instances can be spread over a process pool; results come back in instance
order, so reports are identical across runs apart from ``wall_time``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .algebra import Algebra, Morphism, Point, compose, homomorphisms
from .classifier import (
    classify_gamma_ab_normal,
    is_abelian_product_point,
    is_central_extension,
    is_homogeneous,
    is_normal_extension,
    is_right_homogeneous,
    is_schreier,
    is_special_homogeneous,
    is_trivial_extension,
)
from .completions import Inconclusive, apply_reflector, get_context
from .constructions import product, pullback
from .enumeration import (
    EnumerationSpec,
    enumerate_algebras,
    enumerate_groups,
    enumerate_monoids,
    point_instances,
    surjection_instances,
)
from .normalization import harvest_g7_graph, is_isomorphic_over, normalize, verify_g7_closure, verify_norm_universal
from .textio import algebra_to_json, morphism_to_json

# Largest monoid order the lemma survey enumerates for B; see LEMMA notes.
LEMMA_B_ORDER_CAP = 5


@dataclass
class SurveyReport:
    survey: str
    ctx: str
    max_order: int
    instances: int = 0
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, props: dict, counterexample: dict | None) -> None:
        self.instances += 1
        for key, value in props.items():
            bucket = self.tallies.setdefault(key, {"true": 0, "false": 0, "inconclusive": 0})
            bucket["inconclusive" if value is None else ("true" if value else "false")] += 1
        if counterexample is not None:
            self.counterexamples.append(counterexample)

    def merge(self, other: "SurveyReport") -> "SurveyReport":
        out = SurveyReport(self.survey, self.ctx, self.max_order, self.instances + other.instances)
        for src in (self.tallies, other.tallies):
            for key, bucket in src.items():
                tgt = out.tallies.setdefault(key, {"true": 0, "false": 0, "inconclusive": 0})
                for k, v in bucket.items():
                    tgt[k] += v
        out.counterexamples = self.counterexamples + other.counterexamples
        out.wall_time = self.wall_time + other.wall_time
        out.notes = self.notes + [n for n in other.notes if n not in self.notes]
        return out

    def as_dict(self) -> dict:
        return {
            "survey": self.survey,
            "ctx": self.ctx,
            "max_order": self.max_order,
            "instances": self.instances,
            "tallies": self.tallies,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
            "notes": self.notes,
        }


@dataclass(frozen=True)
class Survey:
    name: str
    description: str
    instances: Callable[[str, int, dict], Iterator]
    check: Callable[[str, object, dict], tuple[dict, dict | None]]
    contexts: tuple[str, ...] = ("MonGp", "SRngRng", "MonAb")
    notes: Callable[[str, int, dict], list] | None = None


def _spec(ctx_id: str, max_order: int) -> EnumerationSpec:
    return EnumerationSpec(get_context(ctx_id).signature, max_order)


# -- schreier-homogeneous -----------------------------------------------------


def _points(ctx_id, max_order, opts):
    return point_instances(_spec(ctx_id, max_order))


def _check_schreier(ctx_id, p: Point, opts):
    sch = is_schreier(p).value
    rh = is_right_homogeneous(p).value
    props = {"schreier": sch, "right-homogeneous": rh}
    bad = sch != rh
    if p.domain.signature == "semiring":
        hom = is_homogeneous(p).value
        props["homogeneous"] = hom
        bad = bad or (sch and not hom)
    return props, (_point_json(p, props) if bad else None)


def _point_json(p: Point, props: dict) -> dict:
    return {"epi": morphism_to_json(p.epi), "section": list(p.section.map), "values": props}


def _morphism_case(f: Morphism, props: dict, **more) -> dict:
    return {"morphism": morphism_to_json(f), "values": props, **more}


# -- trivial-vs-special-homogeneous ------------------------------------------


def _check_trivial_sh(ctx_id, p: Point, opts):
    triv = is_trivial_extension(ctx_id, p.epi).value
    if ctx_id == "MonAb":
        char = is_abelian_product_point(p).value
        props = {"trivial": triv, "abelian-product-point": char}
    else:
        char = is_special_homogeneous(p.epi).value
        props = {"trivial": triv, "special-homogeneous": char}
    bad = triv is not None and triv != char
    return props, (_point_json(p, props) if bad else None)


# -- normal / central ---------------------------------------------------------


def _surjections(ctx_id, max_order, opts):
    return surjection_instances(_spec(ctx_id, max_order))


def _check_normal_central(ctx_id, f: Morphism, opts):
    normal = is_normal_extension(ctx_id, f).value
    central = is_central_extension(ctx_id, f, opts.get("search_bound", 9), witness_track=opts.get("witness_track", True))
    if ctx_id == "MonAb":
        key, char = "gamma-ab-normal", classify_gamma_ab_normal(f).value
    else:
        key, char = "special-homogeneous", is_special_homogeneous(f).value
    contradiction = central.extra.get("contradiction", False)
    props = {"normal": normal, "central": central.value, key: char, "witness-track-agrees": not contradiction}
    decided = [v for v in (normal, central.value, char) if v is not None]
    bad = len(set(decided)) > 1 or contradiction
    return props, (_morphism_case(f, props, witness_track=central.extra.get("witness_track")) if bad else None)


def _check_gamma_ab(ctx_id, f: Morphism, opts):
    normal = is_normal_extension("MonAb", f).value
    central = is_central_extension("MonAb", f, opts.get("search_bound", 9), witness_track=opts.get("witness_track", True))
    char = classify_gamma_ab_normal(f).value
    contradiction = central.extra.get("contradiction", False)
    props = {"gamma-ab-normal": char, "normal": normal, "central": central.value, "witness-track-agrees": not contradiction}
    decided = [v for v in (normal, central.value, char) if v is not None]
    bad = len(set(decided)) > 1 or contradiction
    return props, (_morphism_case(f, props) if bad else None)


# -- ab(N x B) = N x ab(B) ----------------------------------------------------


def _lemma_instances(ctx_id, max_order, opts):
    cap = opts.get("b_order_cap", LEMMA_B_ORDER_CAP)
    for n in enumerate_groups(max_order, abelian_only=True):
        b_max = min(max_order // n.size, cap)
        for b in enumerate_monoids(EnumerationSpec("monoid", b_max)):
            yield n, b


def _lemma_notes(ctx_id, max_order, opts):
    cap = opts.get("b_order_cap", LEMMA_B_ORDER_CAP)
    if max_order > cap:
        return [f"monoids B are enumerated only up to order {cap}; pairs with |B| > {cap} are not covered"]
    return []


def product_lemma_comparison(n: Algebra, b: Algebra) -> tuple[Morphism, Morphism]:
    """``lambda: ab(N x B) -> N x ab(B)`` with ``lambda . unit = 1_N x unit_B``, and ``1_N x unit_B``."""
    from .completions import abelianize

    nb = product(n, b)
    rb = abelianize(b)
    target = product(n, rb.object)
    one_x_eta = target.mediate(nb.leg1, compose(rb.unit, nb.leg2))
    r = abelianize(nb.apex)
    seed = {}
    for x in range(nb.apex.size):
        if seed.setdefault(r.unit.map[x], one_x_eta.map[x]) != one_x_eta.map[x]:
            raise ValueError("1 x unit does not factor through the unit")
    lams = list(homomorphisms(r.object, target.apex, seed=seed))
    if len(lams) != 1:
        raise ValueError(f"{len(lams)} comparison maps")
    return lams[0], one_x_eta


def _check_lemma(ctx_id, inst, opts):
    n, b = inst
    lam, _ = product_lemma_comparison(n, b)
    iso = lam.is_bijective
    props = {"comparison-iso": iso}
    return props, (None if iso else {"N": algebra_to_json(n), "B": algebra_to_json(b), "lambda": list(lam.map)})


# -- normalisation ------------------------------------------------------------


def _check_g7(ctx_id, f: Morphism, opts):
    try:
        r = normalize(ctx_id, f)
    except Inconclusive:
        return {"f'-normal": None, "f''-normal": None, "induced-normal": None, "implication": None}, None
    chk = verify_g7_closure(ctx_id, harvest_g7_graph(r))
    props = {
        "f'-normal": chk.f_prime,
        "f''-normal": chk.f_double_prime,
        "induced-normal": chk.induced,
        "implication": chk.holds,
    }
    return props, (_morphism_case(f, props) if chk.holds is False else None)


def _check_norm_universal(ctx_id, f: Morphism, opts):
    try:
        r = normalize(ctx_id, f)
    except Inconclusive:
        return {k: None for k in ("norm-normal", "factorization", "unit-surjective", "universal", "idempotent")}, None
    normal = is_normal_extension(ctx_id, r.normalized).value
    factor = compose(r.normalized, r.unit) == f
    report = verify_norm_universal(ctx_id, f, r, opts.get("probe_bound", 4))
    try:
        again = normalize(ctx_id, r.normalized)
        phi = is_isomorphic_over(again.normalized, r.normalized)
        idem = phi is not None and again.unit.is_bijective
    except Inconclusive:
        idem = None
    # recorded only: the unit need not be onto (Norm(f) may be larger than any quotient of A)
    onto = r.unit.is_surjective
    props = {"norm-normal": normal, "factorization": factor, "unit-surjective": onto, "universal": report.passed, "idempotent": idem}
    bad = normal is False or not factor or not report.passed or idem is False
    return props, (_morphism_case(f, props, universal=report.as_dict()) if bad else None)


# -- reflector preserves pullbacks along trivial extensions ------------------


@lru_cache(maxsize=None)
def _surjection_list(ctx_id: str, max_order: int) -> tuple:
    return tuple(surjection_instances(_spec(ctx_id, max_order)))


def _pullback_instances(ctx_id, max_order, opts):
    """Trivial extensions ``f: A -> B`` paired with every homomorphism ``g: X -> B``."""
    fs = _surjection_list(ctx_id, max_order)
    xs = list(enumerate_algebras(_spec(ctx_id, max_order)))
    for f in fs:
        if is_trivial_extension(ctx_id, f).value is not True:
            continue
        for x in xs:
            yield from ((f, g) for g in homomorphisms(x, f.target))


def reflected_pullback_comparison(ctx_id: str, f: Morphism, g: Morphism) -> Morphism:
    """``I(P) -> I(X) x_{I(B)} I(A)`` for ``P = X x_B A`` (``g: X -> B``, ``f: A -> B``)."""
    pb = pullback(g, f)
    i_leg1 = apply_reflector(ctx_id, pb.leg1)
    i_leg2 = apply_reflector(ctx_id, pb.leg2)
    square = pullback(apply_reflector(ctx_id, g), apply_reflector(ctx_id, f))
    return square.mediate(i_leg1, i_leg2)


def _check_pullback(ctx_id, inst, opts):
    f, g = inst
    try:
        comp = reflected_pullback_comparison(ctx_id, f, g)
    except Inconclusive:
        return {"preserved": None}, None
    ok = comp.is_bijective
    props = {"preserved": ok}
    return props, (None if ok else {"trivial": morphism_to_json(f), "along": morphism_to_json(g)})


SURVEYS: dict[str, Survey] = {
    s.name: s
    for s in (
        Survey("schreier-homogeneous", "Schreier points are exactly the right homogeneous ones", _points, _check_schreier),
        Survey(
            "trivial-vs-special-homogeneous",
            "split trivial extensions vs their characterisation",
            _points,
            _check_trivial_sh,
        ),
        Survey("normal-central-equivalence", "normal = central = characterisation", _surjections, _check_normal_central),
        Survey("gamma-ab-prop66", "abelian-core normality: special homogeneous and [N, A] = 0", _surjections, _check_gamma_ab, ("MonAb",)),
        Survey("ab-product-lemma", "ab(N x B) = N x ab(B)", _lemma_instances, _check_lemma, ("MonAb",), _lemma_notes),
        Survey("g7-closure", "normal extensions closed under the harvested coequalisers", _surjections, _check_g7),
        Survey("norm-universal", "normalisation is normal, idempotent and universal", _surjections, _check_norm_universal),
        Survey(
            "reflector-preserves-pullbacks",
            "the reflector preserves pullbacks along trivial extensions",
            _pullback_instances,
            _check_pullback,
        ),
    )
}


def default_max_order(name: str) -> int:
    return 4 if name == "schreier-homogeneous" else 3


def _run_chunk(args):
    name, ctx_id, chunk, opts = args
    survey = SURVEYS[name]
    return [survey.check(ctx_id, inst, opts) for inst in chunk]


def run_survey(
    name: str,
    ctx,
    spec: EnumerationSpec | int | None = None,
    *,
    jobs: int = 1,
    **options,
) -> SurveyReport:
    """Run survey ``name`` in context ``ctx`` over instances of order at most ``spec``.

    The default order is 4 for the cheap point predicates and 3 otherwise.

    ``options``: ``search_bound`` (central witness track, default 9),
    ``probe_bound`` (norm-universal, default 4), ``b_order_cap``
    (ab-product-lemma), ``witness_track`` (default True).
    """
    if name not in SURVEYS:
        raise KeyError(f"unknown survey {name!r}; choose from {sorted(SURVEYS)}")
    survey = SURVEYS[name]
    ctx_id = get_context(ctx).id
    if ctx_id not in survey.contexts:
        raise ValueError(f"survey {name} runs in {', '.join(survey.contexts)}, not {ctx_id}")
    if spec is None:
        spec = default_max_order(name)
    max_order = spec.max_order if isinstance(spec, EnumerationSpec) else int(spec)
    start = time.perf_counter()
    report = SurveyReport(name, ctx_id, max_order)
    if survey.notes:
        report.notes.extend(survey.notes(ctx_id, max_order, options))
    instances = list(survey.instances(ctx_id, max_order, options))
    if jobs > 1 and len(instances) > 1:
        size = max(1, len(instances) // (jobs * 4))
        chunks = [instances[i : i + size] for i in range(0, len(instances), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_run_chunk, [(name, ctx_id, c, options) for c in chunks]) for r in part]
    else:
        results = [survey.check(ctx_id, inst, options) for inst in instances]
    for props, counterexample in results:
        report.record(props, counterexample)
    report.wall_time = time.perf_counter() - start
    return report
