"""Plain-text complex and label files.

Complex files hold ``vertex <id> [c1 ... cd]`` and ``simplex <id> ...`` lines
(maximal simplices suffice); label files hold ``label <vertex> <int>`` lines.
``#`` starts a comment anywhere on a line.
"""
from __future__ import annotations

from pathlib import Path

from .complex import Complex, GeometricComplex, simplex
from .errors import ComplexIOError, EmptyComplexError, FormatError, MixedGeometryError


def _lines(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ComplexIOError(f"cannot read {path}: {exc.strerror or exc}") from exc
    for no, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield no, words


def _int(word: str, no: int, what: str) -> int:
    try:
        v = int(word)
    except ValueError:
        raise FormatError(no, f"{what} must be an integer, got {word!r}") from None
    if v < 0:
        raise FormatError(no, f"{what} must be non-negative, got {v}")
    return v


def parse_complex(lines) -> Complex | GeometricComplex:
    coords: dict = {}
    declared: set = set()
    tops = []
    arity = None
    for no, words in lines:
        key, args = words[0], words[1:]
        if key == "vertex":
            if not args:
                raise FormatError(no, "vertex needs an id")
            v = _int(args[0], no, "vertex id")
            if v in declared:
                raise FormatError(no, f"vertex {v} declared twice")
            declared.add(v)
            if len(args) > 1:
                try:
                    point = tuple(float(a) for a in args[1:])
                except ValueError:
                    raise FormatError(no, "coordinates must be numbers") from None
                if arity is not None and len(point) != arity:
                    raise FormatError(no, f"expected {arity} coordinates, got {len(point)}")
                arity = len(point)
                coords[v] = point
        elif key == "simplex":
            if not args:
                raise FormatError(no, "simplex needs at least one vertex id")
            ids = [_int(a, no, "vertex id") for a in args]
            if len(set(ids)) != len(ids):
                raise FormatError(no, "repeated vertex in simplex")
            tops.append(simplex(ids))
        else:
            raise FormatError(no, f"unknown keyword {key!r}")
    used = {v for t in tops for v in t}
    tops.extend((v,) for v in sorted(declared - used))
    if not tops:
        raise EmptyComplexError("file declares no simplices")
    K = Complex.from_maximal(tops)
    if not coords:
        return K
    missing = [v for v in K.vertices if v not in coords]
    if missing:
        raise MixedGeometryError(f"vertices without coordinates: {missing[:10]}")
    return GeometricComplex(K, coords)


def load_complex(path) -> Complex | GeometricComplex:
    return parse_complex(_lines(path))


def format_complex(c: Complex | GeometricComplex) -> str:
    K = c.complex if isinstance(c, GeometricComplex) else c
    out = []
    for v in K.vertices:
        if isinstance(c, GeometricComplex):
            out.append(f"vertex {v} " + " ".join("%.17g" % x for x in c.coords[v]))
        else:
            out.append(f"vertex {v}")
    for s in K.maximal:
        out.append("simplex " + " ".join(str(v) for v in s))
    return "\n".join(out) + "\n"


def save_complex(c: Complex | GeometricComplex, path) -> None:
    try:
        Path(path).write_text(format_complex(c))
    except OSError as exc:
        raise ComplexIOError(f"cannot write {path}: {exc.strerror or exc}") from exc


def load_labels(path) -> dict:
    labels: dict = {}
    for no, words in _lines(path):
        if words[0] != "label" or len(words) != 3:
            raise FormatError(no, "expected 'label <vertex> <int>'")
        v = _int(words[1], no, "vertex id")
        if v in labels:
            raise FormatError(no, f"vertex {v} labelled twice")
        labels[v] = _int(words[2], no, "label")
    return labels


def save_labels(labels: dict, path) -> None:
    try:
        Path(path).write_text("".join(f"label {v} {labels[v]}\n" for v in sorted(labels)))
    except OSError as exc:
        raise ComplexIOError(f"cannot write {path}: {exc.strerror or exc}") from exc
