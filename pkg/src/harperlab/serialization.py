"""Bit-exact JSON documents for families and run reports.

A family document is ``{"n": 3, "vertices": [0, 6]}`` with vertices as
strictly ascending integer masks (coordinate i is bit i-1), plus an
optional ``label``.  On input, ``"sets": [[], [2, 3]]`` may replace
``vertices``.
"""

from __future__ import annotations

import csv
import io
import json
import platform
import time
from dataclasses import dataclass, field

from .cube import Family, check_dimension, mask_of
from .errors import DimensionError, FamilyParseError

__version__ = "0.1.0"


def emit_family(A: Family, label: str | None = None) -> dict:
    doc = {"n": A.n, "vertices": A.vertices()}
    if label is not None:
        doc["label"] = label
    return doc


def dumps(doc) -> str:
    """Canonical text: compact separators, insertion-ordered keys, trailing newline."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _load(document):
    if isinstance(document, (bytes, bytearray)):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FamilyParseError("document is not UTF-8", f"byte {exc.start}") from None
    if isinstance(document, str):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise FamilyParseError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return document


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_family(document) -> Family:
    """Parse a JSON text, bytes, or an already-decoded dict."""
    doc = _load(document)
    if not isinstance(doc, dict):
        raise FamilyParseError("document must be a JSON object", "top level")
    n = doc.get("n")
    if not _is_int(n):
        raise FamilyParseError("field 'n' must be an integer", "n")
    try:
        check_dimension(n)
    except DimensionError as exc:
        raise FamilyParseError(str(exc), "n") from None
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise FamilyParseError("field 'label' must be a string", "label")
    if "vertices" in doc:
        if "sets" in doc:
            raise FamilyParseError("give either 'vertices' or 'sets', not both", "sets")
        return _parse_masks(n, doc["vertices"])
    if "sets" in doc:
        return _parse_sets(n, doc["sets"])
    raise FamilyParseError("missing field 'vertices'", "vertices")


def _parse_masks(n: int, masks) -> Family:
    if not isinstance(masks, list):
        raise FamilyParseError("'vertices' must be a list", "vertices")
    bits, prev = 0, -1
    for pos, v in enumerate(masks):
        where = f"vertices[{pos}]"
        if not _is_int(v):
            raise FamilyParseError(f"vertex {v!r} is not an integer", where)
        if not 0 <= v < 1 << n:
            raise FamilyParseError(f"mask {v} out of range for n={n}", where)
        if v == prev:
            raise FamilyParseError(f"duplicate mask {v}", where)
        if v < prev:
            raise FamilyParseError(f"masks must be ascending, {v} follows {prev}", where)
        bits |= 1 << v
        prev = v
    return Family(n, bits)


def _parse_sets(n: int, sets) -> Family:
    if not isinstance(sets, list):
        raise FamilyParseError("'sets' must be a list", "sets")
    seen = set()
    for pos, s in enumerate(sets):
        where = f"sets[{pos}]"
        if not isinstance(s, list) or not all(_is_int(c) for c in s):
            raise FamilyParseError("each set must be a list of integer coordinates", where)
        if any(not 1 <= c <= n for c in s):
            raise FamilyParseError(f"coordinate outside 1..{n}", where)
        if len(set(s)) != len(s):
            raise FamilyParseError("repeated coordinate", where)
        m = mask_of(s)
        if m in seen:
            raise FamilyParseError(f"duplicate set {sorted(s)}", where)
        seen.add(m)
    return Family.from_vertices(n, seen)


def read_family(path: str) -> Family:
    if path == "-":
        import sys

        return parse_family(sys.stdin.read())
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FamilyParseError(f"cannot read {path}: {exc.strerror}", path) from None
    return parse_family(data)


@dataclass
class RunReport:
    """Everything needed to re-run and audit one CLI invocation."""

    command: list[str]
    parameters: dict
    verdicts: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    result: dict | None = None
    seconds: float = 0.0
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "result": self.result,
            "timing": {"seconds": round(self.seconds, 3)},
            "version": {"harperlab": self.version, "python": platform.python_version()},
        }


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


__all__ = ["RunReport", "dumps", "emit_family", "parse_family", "read_family", "to_csv"]
