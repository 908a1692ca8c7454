"""Command line front end: ``galoiskit <command> [options] FILE``.

Exit status: 0 success or true verdict, 1 validation/parse error or false
verdict, 2 inconclusive, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import FiniteMonoid, FiniteSemiring
from .classifier import (
    PROPERTY_NEEDS,
    Property,
    is_central_extension,
    is_homogeneous,
    is_left_homogeneous,
    is_normal_extension,
    is_right_homogeneous,
    is_s_special_object,
    is_schreier,
    is_special_homogeneous,
    is_trivial_extension,
)
from .completions import (
    CONTEXTS,
    Inconclusive,
    abelianize,
    get_context,
    group_complete_commutative,
    group_complete_general,
    ring_complete,
)
from .enumeration import EnumerationSpec, enumerate_algebras
from .normalization import normalize, verify_norm_universal
from .surveys import SURVEYS, run_survey
from .textio import (
    ParseError,
    ValidationError,
    algebra_to_json,
    format_algebra,
    format_morphisms,
    load,
    morphism_to_json,
)

EXIT_OK, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _verdict_code(value) -> int:
    if value is None:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if value else EXIT_FALSE


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print("\n".join(lines))


def _single(doc, kind: str):
    if kind in ("algebra", "object"):
        items = doc.algebra_items()
        if not items:
            raise UsageError("input holds no algebra block")
        return items[-1]
    homs = doc.morphisms()
    if kind == "morphism":
        if not homs:
            raise UsageError("input holds no hom block")
        return homs[0]
    points = doc.points()
    if not points:
        raise UsageError("a point needs two hom blocks (epimorphism, then section)")
    return points[0]


# -- commands -----------------------------------------------------------------


def _cmd_validate(args) -> int:
    doc = load(args.file)
    items = [algebra_to_json(a) for a in doc.algebra_items()] + [morphism_to_json(f) for f in doc.morphisms()]
    lines = [f"ok: {len(doc.algebra_items())} algebra(s), {len(doc.morphisms())} hom(s)"]
    _emit(args, {"valid": True, "items": items}, lines)
    return EXIT_OK


_POINT_CHECKS = {
    Property.SCHREIER: is_schreier,
    Property.RIGHT_HOMOGENEOUS: is_right_homogeneous,
    Property.LEFT_HOMOGENEOUS: is_left_homogeneous,
    Property.HOMOGENEOUS: is_homogeneous,
}


def _cmd_classify(args) -> int:
    prop = Property(args.property)
    doc = load(args.file)
    ctx = get_context(args.ctx)
    need = PROPERTY_NEEDS[prop]
    x = _single(doc, need)
    if need == "point":
        verdict = _POINT_CHECKS[prop](x)
    elif need == "object":
        verdict = is_s_special_object(ctx, x)
    elif prop is Property.SPECIAL_HOMOGENEOUS:
        verdict = is_special_homogeneous(x)
    elif prop is Property.TRIVIAL:
        verdict = is_trivial_extension(ctx, x)
    elif prop is Property.NORMAL:
        verdict = is_normal_extension(ctx, x)
    else:
        verdict = is_central_extension(ctx, x, args.bound)
    state = "inconclusive" if verdict.value is None else str(verdict.value).lower()
    lines = [f"{'context':<10}{ctx.id}", f"{'property':<10}{prop.value}", f"{'verdict':<10}{state}"]
    if verdict.witness is not None:
        lines.append(f"{'witness':<10}{verdict.witness}")
    if verdict.detail:
        lines.append(f"{'detail':<10}{verdict.detail}")
    _emit(args, {"context": ctx.id, **verdict.as_dict()}, lines)
    return _verdict_code(verdict.value)


def _reflection_report(args, r, extra: dict | None = None) -> int:
    payload = {
        "object": algebra_to_json(r.object),
        "unit": list(r.unit.map),
        "representatives": [list(p) if isinstance(p, tuple) else p for p in r.representatives]
        if r.representatives is not None
        else None,
        **(extra or {}),
    }
    lines = [format_algebra(r.object).rstrip(), f"# unit: {' '.join(map(str, r.unit.map))}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_complete(args) -> int:
    m = _single(load(args.file), "algebra")
    if not isinstance(m, FiniteMonoid):
        raise UsageError("complete expects a monoid")
    if m.is_commutative and not args.general:
        return _reflection_report(args, group_complete_commutative(m), {"method": "grothendieck"})
    return _reflection_report(args, group_complete_general(m, args.bound), {"method": "coset-enumeration"})


def _cmd_abelianize(args) -> int:
    m = _single(load(args.file), "algebra")
    if not isinstance(m, FiniteMonoid):
        raise UsageError("abelianize expects a monoid")
    return _reflection_report(args, abelianize(m))


def _cmd_ring_complete(args) -> int:
    s = _single(load(args.file), "algebra")
    if not isinstance(s, FiniteSemiring):
        raise UsageError("ring-complete expects a semiring")
    return _reflection_report(args, ring_complete(s))


def _cmd_normalize(args) -> int:
    f = _single(load(args.file), "morphism")
    ctx = get_context(args.ctx)
    r = normalize(ctx, f)
    normal = is_normal_extension(ctx, r.normalized).value
    payload = {
        "context": ctx.id,
        "normalized": morphism_to_json(r.normalized),
        "unit": list(r.unit.map),
        "normal": normal,
    }
    lines = [format_morphisms(r.normalized).rstrip(), f"# unit: {' '.join(map(str, r.unit.map))}", f"# normal: {normal}"]
    code = _verdict_code(normal)
    if args.verify is not None:
        report = verify_norm_universal(ctx, f, r, args.verify)
        payload["universal"] = report.as_dict()
        lines.append(
            f"# universal: {report.passed} ({report.probes} probes, {report.factorizations} factorizations, "
            f"{report.skipped_inconclusive} inconclusive)"
        )
        if not report.passed:
            code = EXIT_FALSE
    _emit(args, payload, lines)
    return code


def _cmd_survey(args) -> int:
    opts = {"probe_bound": args.probe_bound, "search_bound": args.search_bound}
    report = run_survey(args.name, args.ctx, args.max_order, jobs=args.jobs, **opts)
    lines = [f"survey {report.survey}  ctx {report.ctx}  max-order {report.max_order}  instances {report.instances}"]
    lines.append(f"{'property':<24}{'true':>8}{'false':>8}{'inconcl.':>10}")
    for key, b in report.tallies.items():
        lines.append(f"{key:<24}{b['true']:>8}{b['false']:>8}{b['inconclusive']:>10}")
    lines.append(f"counterexamples: {len(report.counterexamples)}   wall time {report.wall_time:.2f}s")
    lines.extend(f"note: {n}" for n in report.notes)
    _emit(args, report.as_dict(), lines)
    return EXIT_OK if report.passed else EXIT_FALSE


def _cmd_enumerate(args) -> int:
    spec = EnumerationSpec(args.signature, args.max_order, not args.all, args.commutative)
    algs = list(enumerate_algebras(spec))
    if args.count:
        counts: dict[int, int] = {}
        for a in algs:
            counts[a.size] = counts.get(a.size, 0) + 1
        _emit(args, {"counts": counts, "total": len(algs)}, [f"order {n}: {c}" for n, c in sorted(counts.items())])
    else:
        _emit(args, {"algebras": [algebra_to_json(a) for a in algs]}, [format_algebra(a) for a in algs])
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galoiskit", description="Galois theory of finite monoids and semirings.")
    parser.add_argument("--version", action="version", version=f"galoiskit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ctx_names = sorted(set(CONTEXTS) | {c.id for c in CONTEXTS.values()})

    p = sub.add_parser("validate", parents=[common], help="parse and check every block of a file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="decide a property of a morphism, point or object")
    p.add_argument("file")
    p.add_argument("--ctx", default="mon-gp", choices=ctx_names)
    p.add_argument("--property", required=True, choices=[x.value for x in Property])
    p.add_argument("--bound", type=int, default=None, help="witness-track search bound for 'central'")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("complete", parents=[common], help="group completion of a monoid")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None, help="coset limit (default from GALOISKIT_MAX_GROUP_BOUND or 64)")
    p.add_argument("--general", action="store_true", help="use coset enumeration even when commutative")
    p.set_defaults(run=_cmd_complete)

    p = sub.add_parser("abelianize", parents=[common], help="abelian group reflection of a monoid")
    p.add_argument("file")
    p.set_defaults(run=_cmd_abelianize)

    p = sub.add_parser("ring-complete", parents=[common], help="ring completion of a semiring")
    p.add_argument("file")
    p.set_defaults(run=_cmd_ring_complete)

    p = sub.add_parser("normalize", parents=[common], help="normalisation of a surjection")
    p.add_argument("file")
    p.add_argument("--ctx", default="mon-gp", choices=ctx_names)
    p.add_argument("--verify", type=int, default=None, metavar="N", help="check the universal property with probes of order <= N")
    p.set_defaults(run=_cmd_normalize)

    p = sub.add_parser("survey", parents=[common], help="run a theorem survey")
    p.add_argument("name", choices=sorted(SURVEYS))
    p.add_argument("--ctx", default="mon-gp", choices=ctx_names)
    p.add_argument("--max-order", type=int, default=None, help="default 4 for schreier-homogeneous, else 3")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--probe-bound", type=int, default=4)
    p.add_argument("--search-bound", type=int, default=9)
    p.set_defaults(run=_cmd_survey)

    p = sub.add_parser("enumerate", parents=[common], help="list small algebras")
    p.add_argument("--signature", choices=["monoid", "semiring"], default="monoid")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--all", action="store_true", help="labeled tables instead of isomorphism classes")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--count", action="store_true", help="print counts per order only")
    p.set_defaults(run=_cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    as_json = getattr(args, "json", False)

    def fail(code: int, payload: dict, message: str) -> int:
        if as_json:
            print(json.dumps(payload, indent=2, sort_keys=True))
        print(f"galoiskit: {message}", file=sys.stderr)
        return code

    try:
        return args.run(args)
    except FileNotFoundError as exc:
        return fail(EXIT_FALSE, {"error": "file-not-found", "path": exc.filename}, f"no such file: {exc.filename}")
    except ParseError as exc:
        return fail(EXIT_FALSE, exc.as_dict(), f"parse error at {exc}")
    except ValidationError as exc:
        return fail(EXIT_FALSE, exc.as_dict(), f"invalid input: {exc}")
    except Inconclusive as exc:
        return fail(EXIT_INCONCLUSIVE, {"error": "inconclusive", "message": str(exc)}, f"inconclusive: {exc}")
    except (UsageError, ValueError, KeyError) as exc:
        return fail(EXIT_USAGE, {"error": "usage", "message": str(exc)}, str(exc))


if __name__ == "__main__":
    sys.exit(main())
