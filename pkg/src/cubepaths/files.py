"""JSON instance and result files.

Vertex labels are written as decimal integers and read as either decimal
integers or binary strings of length n, most significant bit first (the
leftmost character is coordinate n).
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .errors import CubePathsError
from .faults import Instance
from .hypercube import Path
from .verify import verify


class ParseError(CubePathsError, ValueError):
    """Malformed instance or result document."""


def parse_label(raw: Any, n: int, where: str, check_range: bool = True) -> int:
    if isinstance(raw, bool):
        raise ParseError(f"{where}: expected a vertex label, got {raw!r}")
    if isinstance(raw, int):
        if check_range and not 0 <= raw < 1 << n:
            raise ParseError(f"{where}: label {raw} outside 0..{(1 << n) - 1}")
        return raw
    if isinstance(raw, str):
        if len(raw) != n or set(raw) - {"0", "1"}:
            raise ParseError(f"{where}: {raw!r} is not a binary string of length {n}")
        return int(raw, 2)
    raise ParseError(f"{where}: expected a vertex label, got {raw!r}")


def _loads(text: str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{what}: top level must be an object")
    return doc


def _int_field(doc: dict, name: str, what: str) -> int:
    if name not in doc:
        raise ParseError(f"{what}: missing field '{name}'")
    v = doc[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what}: field '{name}' must be an integer, got {v!r}")
    return v


def _labels(doc: dict, name: str, n: int, what: str) -> list[int]:
    if name not in doc:
        raise ParseError(f"{what}: missing field '{name}'")
    raw = doc[name]
    if not isinstance(raw, list):
        raise ParseError(f"{what}: field '{name}' must be a list")
    return [parse_label(v, n, f"{what}: field '{name}[{i}]'") for i, v in enumerate(raw)]


def instance_from_dict(doc: dict, what: str = "instance") -> Instance:
    n = _int_field(doc, "n", what)
    if not 1 <= n <= 30:
        raise ParseError(f"{what}: field 'n' must be in 1..30, got {n}")
    k = _int_field(doc, "k", what)
    faults = _labels(doc, "faults", n, what)
    sources = _labels(doc, "sources", n, what)
    sinks = _labels(doc, "sinks", n, what)
    if len(set(faults)) != len(faults):
        raise ParseError(f"{what}: field 'faults' repeats a vertex")
    inst = Instance(n, k, frozenset(faults), tuple(sources), tuple(sinks))
    problems = inst.structural_violations()
    if problems:
        raise ParseError(f"{what}: " + "; ".join(problems))
    return inst


def instance_to_dict(inst: Instance) -> dict:
    return {
        "n": inst.n,
        "k": inst.k,
        "faults": sorted(inst.faults),
        "sources": list(inst.sources),
        "sinks": list(inst.sinks),
    }


def read_instance(path) -> Instance:
    with open(path) as fh:
        return instance_from_dict(_loads(fh.read(), str(path)), str(path))


def _render(obj: Any, indent: int) -> str:
    # like json.dumps(indent=2), but lists of scalars stay on one line
    pad = "  " * (indent + 1)
    if isinstance(obj, dict) and obj:
        items = [f"{pad}{json.dumps(str(k))}: {_render(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        items = [pad + _render(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj, separators=(", ", ": "))


def dumps(doc: dict) -> str:
    return _render(doc, 0) + "\n"


def write_instance(path, inst: Instance) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(instance_to_dict(inst)))


def result_to_dict(inst: Instance, paths: Sequence[Path], case_trace: Sequence[str]) -> dict:
    """Result document; ``verified`` comes from a fresh verification."""
    rep = verify(inst, paths)
    return {
        "paths": [list(p) for p in paths],
        "pairing": {str(p[0]): p[-1] for p in paths if p},
        "coverage": rep.coverage,
        "bound": rep.bound,
        "case_trace": list(case_trace),
        "verified": rep.passed,
    }


def paths_from_dict(doc: dict, n: int, what: str = "result") -> list[Path]:
    """Claimed paths; integer labels are not range-checked so the verifier can report them."""
    if "paths" not in doc:
        raise ParseError(f"{what}: missing field 'paths'")
    raw = doc["paths"]
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise ParseError(f"{what}: field 'paths' must be a list of lists")
    return [
        tuple(parse_label(v, n, f"{what}: field 'paths[{i}][{j}]'", check_range=False) for j, v in enumerate(p))
        for i, p in enumerate(raw)
    ]


def read_paths(path, n: int) -> list[Path]:
    with open(path) as fh:
        return paths_from_dict(_loads(fh.read(), str(path)), n, str(path))
