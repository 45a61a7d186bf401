"""Reading and writing the ideal file format.

An ideal file is a single JSON document:

    {"vars": ["x", "y", "z"], "gens": [[1, 1, 0], [0, 1, 1], [1, 0, 1]]}

``vars`` names the variables (display only, must be distinct) and every
entry of ``gens`` is one exponent vector of the same length.  Parsing
minimalizes; redundant input generators produce a warning, not a failure.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .monomial import MonomialIdeal, Ring


def parse_ideal_text(text: str, source: str = "<string>") -> tuple[MonomialIdeal, list[str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"{source}: line {err.lineno} column {err.colno}: {err.msg}") from err
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: expected a JSON object with 'vars' and 'gens'")
    for key in ("vars", "gens"):
        if key not in doc:
            raise ParseError(f"{source}: missing field '{key}'")
    names = doc["vars"]
    if (not isinstance(names, list) or not names
            or not all(isinstance(v, str) and v for v in names)):
        raise ParseError(f"{source}: vars: expected a nonempty list of names")
    if len(set(names)) != len(names):
        raise ParseError(f"{source}: vars: names must be pairwise distinct")
    n = len(names)
    gens = doc["gens"]
    if not isinstance(gens, list):
        raise ParseError(f"{source}: gens: expected a list of exponent vectors")
    vectors = []
    for i, row in enumerate(gens):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(
                f"{source}: gens[{i}]: expected a list of {n} integers")
        for j, e in enumerate(row):
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ParseError(
                    f"{source}: gens[{i}][{j}]: expected a non-negative integer, "
                    f"got {e!r}")
        vectors.append(tuple(row))
    ideal = MonomialIdeal.from_vectors(Ring(n, tuple(names)), vectors)
    warnings = []
    kept = set(ideal.vectors)
    dropped = [v for v in dict.fromkeys(vectors) if v not in kept]
    if dropped or len(set(vectors)) != len(vectors):
        warnings.append(
            f"{source}: input generators were not minimal; "
            f"{len(vectors) - len(ideal.vectors)} redundant generator(s) dropped")
    return ideal, warnings


def load_ideal(path: str | Path) -> tuple[MonomialIdeal, list[str]]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as err:
        raise ParseError(f"{p}: {err.strerror or err}") from err
    return parse_ideal_text(text, source=str(p))


def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.names), "gens": [list(v) for v in I.vectors]}


def serialize_ideal(I: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(I)) + "\n"


def dump_ideal(I: MonomialIdeal, path: str | Path) -> None:
    Path(path).write_text(serialize_ideal(I))
