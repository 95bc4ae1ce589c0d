"""Verification corpus: load fixture rows and check them against the classifier.

The shipped corpus (data/table1.json) lists radicands whose 5-class group is
known to be (5,5) with a fully ambiguous Galois action, together with the
class-number data an external CAS can re-check.  Rows on the shipped
discrepancy list (data/anomalies.json) are expected to classify as NO_MATCH;
they are counted as known anomalies, not failures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .classify import ClassificationError, RadicandForm, classify_radicand


class FixtureFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FixtureEntry:
    n: int
    h_k5: int
    group_type: tuple[int, int]
    rank_ambiguous: int
    label: str | None = None


@dataclass
class VerifySummary:
    passed: int = 0
    anomalies: int = 0
    failed: int = 0
    rows: list[dict[str, Any]] = field(default_factory=list)

    def counts(self) -> tuple[int, int, int]:
        return (self.passed, self.anomalies, self.failed)


def packaged_data_path(name: str) -> Path:
    return Path(str(resources.files("quintcap") / "data" / name))


def _parse_entry(raw: Any) -> FixtureEntry:
    if not isinstance(raw, dict):
        raise FixtureFormatError(f"fixture row must be an object, got {type(raw).__name__}")
    try:
        n = raw["n"]
        h = raw["h_k5"]
        gtype = raw["type"]
        rank = raw["rank_ambiguous"]
    except KeyError as exc:
        raise FixtureFormatError(f"fixture row missing key {exc}") from exc
    if (
        not isinstance(n, int)
        or not isinstance(h, int)
        or not isinstance(rank, int)
        or not isinstance(gtype, list)
        or len(gtype) != 2
        or not all(isinstance(v, int) for v in gtype)
    ):
        raise FixtureFormatError(f"malformed fixture row for n={raw.get('n')!r}")
    label = raw.get("label")
    if label is not None and not isinstance(label, str):
        raise FixtureFormatError("fixture label must be a string")
    return FixtureEntry(n, h, (gtype[0], gtype[1]), rank, label)


def load_fixtures(path: "str | Path") -> list[FixtureEntry]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise FixtureFormatError("fixtures file must hold a JSON array")
    return [_parse_entry(row) for row in data]


def load_anomalies(path: "str | Path | None" = None) -> frozenset[int]:
    p = Path(path) if path is not None else packaged_data_path("anomalies.json")
    with open(p, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    values = data.get("no_match_expected", []) if isinstance(data, dict) else None
    if values is None or not all(isinstance(v, int) for v in values):
        raise FixtureFormatError("anomalies file must map no_match_expected to ints")
    return frozenset(values)


def verify_fixtures(
    path: "str | Path", anomalies_path: "str | Path | None" = None
) -> VerifySummary:
    entries = load_fixtures(path)
    anomalies = load_anomalies(anomalies_path)
    summary = VerifySummary()
    for entry in entries:
        row: dict[str, Any] = {"n": entry.n}
        try:
            rc = classify_radicand(entry.n)
        except ClassificationError as exc:
            row.update(status="fail", detail=f"classification error: {exc}")
            summary.failed += 1
            summary.rows.append(row)
            continue
        row["form"] = rc.form.value
        if rc.form is RadicandForm.NO_MATCH:
            if entry.n in anomalies:
                row["status"] = "anomaly"
                summary.anomalies += 1
            else:
                row["status"] = "fail"
                row["detail"] = "expected an admissible shape, got no_match"
                summary.failed += 1
        else:
            if entry.n in anomalies:
                row["status"] = "fail"
                row["detail"] = "expected no_match per the discrepancy list"
                summary.failed += 1
            else:
                row["status"] = "pass"
                summary.passed += 1
        summary.rows.append(row)
    return summary
