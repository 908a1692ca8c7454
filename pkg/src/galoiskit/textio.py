"""Plain-text reading and writing of algebras and morphisms.

Grammar (``#`` starts a comment; blank lines separate blocks)::

    document  := block*
    block     := monoid | semiring | hom
    monoid    := "monoid" SIZE IDENTITY [NAME] NL row{SIZE}
    semiring  := "semiring" SIZE ZERO [NAME] NL row{SIZE} BLANK row{SIZE}
    hom       := "hom" NAME NAME NL INT{source size}
    row       := INT{SIZE} NL

The semiring block lists the addition table first, then the multiplication
table. Names in a ``hom`` header refer to algebras defined earlier in the
same document or to catalog names (``Z2``, ``B2``, ``BoolRig``, ...). Two
consecutive ``hom`` blocks ``A B`` and ``B A`` form a point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog
from .algebra import (
    Algebra,
    FiniteMonoid,
    FiniteSemiring,
    LawViolation,
    Morphism,
    Point,
    monoid_violation,
    morphism_violation,
    semiring_violation,
)

_NAME = re.compile(r"[A-Za-z0-9_.+\-]+$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")

    def as_dict(self) -> dict:
        return {"error": "parse", "line": self.line, "column": self.column, "message": self.message}


class ValidationError(ValueError):
    """A block parsed but violates a law; ``violation`` holds the details."""

    def __init__(self, violation: LawViolation, line: int, name: str | None):
        self.violation = violation
        self.line = line
        self.name = name
        label = f" {name!r}" if name else ""
        super().__init__(f"block{label} at line {line}: {violation}")

    def as_dict(self) -> dict:
        return {"error": "validation", "line": self.line, "name": self.name, **self.violation.as_dict()}


@dataclass
class Document:
    items: list = field(default_factory=list)
    algebras: dict = field(default_factory=dict)

    def morphisms(self) -> list[Morphism]:
        return [x for x in self.items if isinstance(x, Morphism)]

    def algebra_items(self) -> list[Algebra]:
        return [x for x in self.items if not isinstance(x, Morphism)]

    def points(self) -> list[Point]:
        homs = self.morphisms()
        return [Point(homs[i], homs[i + 1]) for i in range(0, len(homs) - 1, 2)]


class _Lines:
    def __init__(self, text: str):
        self.rows = []
        for no, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
            self.rows.append((no, tokens))
        self.i = 0
        self.last_line = len(self.rows)

    def skip_blank(self):
        while self.i < len(self.rows) and not self.rows[self.i][1]:
            self.i += 1

    def done(self) -> bool:
        self.skip_blank()
        return self.i >= len(self.rows)

    def next(self, what: str):
        self.skip_blank()
        if self.i >= len(self.rows):
            raise ParseError(f"unexpected end of input, expected {what}", self.last_line + 1)
        row = self.rows[self.i]
        self.i += 1
        return row


def _ints(tokens, line: int, count: int, what: str) -> list[int]:
    out = []
    for tok, col in tokens:
        if not re.fullmatch(r"-?\d+", tok):
            raise ParseError(f"expected an integer in {what}, got {tok!r}", line, col)
        out.append(int(tok))
    if len(out) != count:
        col = tokens[count][1] if len(out) > count else (tokens[-1][1] + len(tokens[-1][0]) if tokens else 1)
        raise ParseError(f"{what} needs {count} entries, got {len(out)}", line, col)
    return out


def _header_int(tokens, k: int, line: int, what: str) -> int:
    if len(tokens) <= k:
        end = tokens[-1][1] + len(tokens[-1][0]) if tokens else 1
        raise ParseError(f"missing {what}", line, end)
    tok, col = tokens[k]
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"{what} must be a non-negative integer, got {tok!r}", line, col)
    return int(tok)


def _table(lines: _Lines, size: int, what: str) -> list[list[int]]:
    return [_ints(toks, no, size, f"{what} row") for no, toks in (lines.next(f"{what} row") for _ in range(size))]


def _resolve(name: str, tok_col: int, line: int, known: dict) -> Algebra:
    if name in known:
        return known[name]
    try:
        return catalog.lookup(name)
    except KeyError:
        raise ParseError(f"unknown algebra {name!r}", line, tok_col) from None


def parse_document(text: str, *, validate: bool = True) -> Document:
    """Parse every block. With ``validate`` a law violation raises :class:`ValidationError`."""
    lines = _Lines(text)
    doc = Document()
    while not lines.done():
        no, toks = lines.next("a block header")
        kind, col = toks[0]
        if kind in ("monoid", "semiring"):
            size = _header_int(toks, 1, no, "size")
            if size < 1:
                raise ParseError("size must be positive", no, toks[1][1])
            neutral = _header_int(toks, 2, no, "neutral element")
            if len(toks) > 4:
                raise ParseError("unexpected token after name", no, toks[4][1])
            name = toks[3][0] if len(toks) == 4 else None
            if name is not None and not _NAME.match(name):
                raise ParseError(f"bad name {name!r}", no, toks[3][1])
            if kind == "monoid":
                table = _table(lines, size, "table")
                bad = monoid_violation(table, neutral)
                if bad and validate:
                    raise ValidationError(bad, no, name)
                alg: Algebra = FiniteMonoid(table, neutral, name)
            else:
                add = _table(lines, size, "addition")
                mul = _table(lines, size, "multiplication")
                bad = semiring_violation(add, mul, neutral)
                if bad and validate:
                    raise ValidationError(bad, no, name)
                alg = FiniteSemiring(add, mul, neutral, name)
            doc.items.append(alg)
            if name is not None:
                doc.algebras[name] = alg
        elif kind == "hom":
            if len(toks) != 3:
                raise ParseError("hom header is 'hom <source> <target>'", no, col)
            src = _resolve(toks[1][0], toks[1][1], no, doc.algebras)
            tgt = _resolve(toks[2][0], toks[2][1], no, doc.algebras)
            mno, mtoks = lines.next("hom images")
            images = _ints(mtoks, mno, src.size, "hom images")
            bad = morphism_violation(src, tgt, images)
            if bad and validate:
                raise ValidationError(bad, no, f"{toks[1][0]}->{toks[2][0]}")
            if bad and bad.law in ("signature", "closure"):
                raise ParseError(str(bad), mno, 1)
            doc.items.append(Morphism(src, tgt, images))
        else:
            raise ParseError(f"unknown block kind {kind!r}", no, col)
    return doc


def load(path: str | Path, *, validate: bool = True) -> Document:
    return parse_document(Path(path).read_text(), validate=validate)


# -- writing ------------------------------------------------------------------


def _rows(table) -> list[str]:
    return [" ".join(str(x) for x in row) for row in table]


def format_algebra(alg: Algebra, name: str | None = None) -> str:
    name = name if name is not None else alg.name
    label = f" {name}" if name else ""
    if isinstance(alg, FiniteMonoid):
        return "\n".join([f"monoid {alg.size} {alg.identity}{label}", *_rows(alg.table)]) + "\n"
    return (
        "\n".join([f"semiring {alg.size} {alg.zero}{label}", *_rows(alg.add_table), "", *_rows(alg.mul_table)])
        + "\n"
    )


def _catalog_equal(name: str | None, alg: Algebra) -> bool:
    if not name:
        return False
    try:
        return catalog.lookup(name) == alg
    except KeyError:
        return False


def format_morphisms(*morphisms: Morphism) -> str:
    """The homs plus definitions of every algebra they mention (catalog algebras are referenced by name)."""
    names: dict = {}
    blocks = []
    taken = set()

    def name_of(alg: Algebra) -> str:
        for other, nm in names.items():
            if other is alg or (other == alg and other.name == alg.name):
                return nm
        nm = alg.name
        if not nm or nm in taken or (not _catalog_equal(nm, alg) and _is_catalog_name(nm)):
            k = len(taken)
            nm = f"A{k}"
            while nm in taken:
                k += 1
                nm = f"A{k}"
        taken.add(nm)
        names[alg] = nm
        if not _catalog_equal(nm, alg):
            blocks.append(format_algebra(alg, nm))
        return nm

    homs = []
    for f in morphisms:
        s, t = name_of(f.source), name_of(f.target)
        homs.append(f"hom {s} {t}\n" + " ".join(str(x) for x in f.map) + "\n")
    return "\n".join(blocks + homs)


def _is_catalog_name(name: str) -> bool:
    try:
        catalog.lookup(name)
        return True
    except KeyError:
        return False


def format_point(p: Point) -> str:
    return format_morphisms(p.epi, p.section)


# -- JSON-friendly views ------------------------------------------------------


def algebra_to_json(alg: Algebra) -> dict:
    if isinstance(alg, FiniteMonoid):
        return {"signature": "monoid", "name": alg.name, "size": alg.size, "identity": alg.identity, "table": [list(r) for r in alg.table]}
    return {
        "signature": "semiring",
        "name": alg.name,
        "size": alg.size,
        "zero": alg.zero,
        "add": [list(r) for r in alg.add_table],
        "mul": [list(r) for r in alg.mul_table],
    }


def morphism_to_json(f: Morphism) -> dict:
    return {"source": algebra_to_json(f.source), "target": algebra_to_json(f.target), "map": list(f.map)}
