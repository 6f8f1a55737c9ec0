"""Plain-text complex files.

Two headers: `skeleton n k` followed by one top face per line, or
`facets n` followed by maximal faces (downward closure is applied on
read).  Faces are ascending space-separated integers, `#` starts a
comment, blank lines are skipped.  Emission is canonical (sorted faces,
single spaces, trailing newline) so emit(parse(emit(X))) is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ParseError, UnrepresentableComplex, VertexOutOfRange
from .simplexes import (
    Complex,
    GeneralComplex,
    SkeletonComplex,
    Simplex,
    closure,
    from_top_faces,
)


@dataclass(frozen=True)
class ParsedComplex:
    complex: Union[SkeletonComplex, GeneralComplex]
    relabel_map: Optional[dict[int, int]]  # original label -> new label


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _ints(line: str, lineno: int) -> list[int]:
    vals = []
    for tok in line.split():
        try:
            vals.append(int(tok))
        except ValueError:
            raise ParseError(f"bad integer {tok!r}", line=lineno) from None
    return vals


def parse_complex_text(text: str, relabel: bool = False) -> ParsedComplex:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty file")
    lineno, header = lines[0]
    toks = header.split()
    if toks[0] == "skeleton":
        if len(toks) != 3:
            raise ParseError("header must be 'skeleton n k'", line=lineno)
        n, k = _ints(" ".join(toks[1:]), lineno)
        body = lines[1:]
    elif toks[0] == "facets":
        if len(toks) != 2:
            raise ParseError("header must be 'facets n'", line=lineno)
        n = _ints(toks[1], lineno)[0]
        k = None
        body = lines[1:]
    else:
        raise ParseError(f"unknown header {toks[0]!r}", line=lineno)

    raw_faces: list[tuple[int, list[int]]] = []
    for ln, line in body:
        raw_faces.append((ln, _ints(line, ln)))

    mapping: Optional[dict[int, int]] = None
    if relabel:
        labels = sorted({v for _, face in raw_faces for v in face})
        if any(v < 0 for v in labels):
            raise VertexOutOfRange("negative vertex label")
        if len(labels) > n:
            raise ParseError(
                f"{len(labels)} distinct labels exceed declared n={n}")
        mapping = {v: i for i, v in enumerate(labels)}
        raw_faces = [(ln, [mapping[v] for v in face]) for ln, face in raw_faces]
    else:
        for ln, face in raw_faces:
            for v in face:
                if not 0 <= v < n:
                    raise VertexOutOfRange(
                        f"line {ln}: vertex {v} outside [0, {n})")

    if k is not None:
        X: Union[SkeletonComplex, GeneralComplex] = from_top_faces(
            n, k, [face for _, face in raw_faces])
    else:
        X = closure([face for _, face in raw_faces], n)
    return ParsedComplex(complex=X, relabel_map=mapping)


def parse_complex_file(path: str, relabel: bool = False) -> ParsedComplex:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_complex_text(text, relabel=relabel)
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from None


def _maximal_faces(X: GeneralComplex) -> list[Simplex]:
    faces = sorted(X.faces, key=len, reverse=True)
    maximal: list[Simplex] = []
    for f in faces:
        fs = set(f)
        if not any(fs < set(m) for m in maximal):
            maximal.append(f)
    return sorted(maximal)


def emit_complex(X: Complex) -> str:
    """Canonical text form; raises when the format cannot express X."""
    if isinstance(X, SkeletonComplex):
        out = [f"skeleton {X.n} {X.k}"]
        out.extend(" ".join(map(str, f)) for f in sorted(X.top_faces))
        return "\n".join(out) + "\n"
    if sorted(X.ground) != list(range(X.n)):
        raise UnrepresentableComplex("ground set is not 0..n-1; relabel first")
    if X.dim == -1:
        raise UnrepresentableComplex(
            "the complex whose only face is the empty simplex has no facet form")
    out = [f"facets {X.n}"]
    if not X.is_void:
        out.extend(" ".join(map(str, f)) for f in _maximal_faces(X))
    return "\n".join(out) + "\n"


def write_complex_file(path: str, X: Complex) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_complex(X))
