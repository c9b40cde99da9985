"""JSON-lines classification reports."""
from __future__ import annotations

import hashlib
import json
from typing import Iterable, Iterator, TextIO

from ..logic import Instance
from ..miner import ClassificationRecord
from .dimacs import emit_dimacs

REPORT_KEYS = ("instance_id", "n", "m", "pattern_matched", "witnesses", "satisfiable", "quadrant", "source")


def instance_id(instance: Instance) -> str:
    """First 16 hex digits of the SHA-256 of the normal-order DIMACS text."""
    return hashlib.sha256(emit_dimacs(instance).encode()).hexdigest()[:16]


def report_line(record: ClassificationRecord) -> dict:
    witnesses = []
    for w in record.pattern_witnesses:
        entry = {"kind": w.kind.label, "variables": list(w.variables)}
        if record.names is not None:
            entry["names"] = [record.names[v - 1] for v in w.variables]
        witnesses.append(entry)
    line = {
        "instance_id": instance_id(record.instance),
        "n": record.instance.num_variables,
        "m": record.instance.m,
        "pattern_matched": record.pattern_matched,
        "witnesses": witnesses,
        "satisfiable": record.satisfiable,
        "quadrant": record.quadrant.value,
        "source": record.source,
    }
    assert tuple(line) == REPORT_KEYS
    return line


def emit_report(records: Iterable[ClassificationRecord], extra=None) -> Iterator[str]:
    """One JSON object per record, newline terminated.

    ``extra`` maps a record to additional keys appended after the fixed ones.
    """
    for record in records:
        line = report_line(record)
        if extra is not None:
            line.update(extra(record))
        yield json.dumps(line, ensure_ascii=False) + "\n"


def write_report(records: Iterable[ClassificationRecord], out: TextIO, extra=None) -> int:
    count = 0
    for text in emit_report(records, extra):
        out.write(text)
        out.flush()
        count += 1
    return count
