"""Full analysis pipeline for one radicand, with text and JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .capitulation import (
    ClassWord,
    ExtensionDescriptor,
    H1SearchExhausted,
    H1Witness,
    RadicalWord,
    SubgroupDescriptor,
    WSymbol,
    correspondence,
    find_h1,
    guaranteed_capitulations,
    hilbert_class_field_generators,
    possible_types,
    subgroup_table,
    w_symbol_for,
)
from .classify import RadicandClass, RadicandForm, classify_radicand
from .cyclotomic import CycInt
from .primes import (
    AssociateNotFound,
    PrimeElement,
    SplittingData,
    factor_rational_prime,
    normalize_associate,
)
from .symbols import quintic_symbol

REPORT_SCHEMA_ID = "quintcap-report/1"


class ReportError(RuntimeError):
    pass


@dataclass
class Report:
    n: int
    classification: RadicandClass
    no_match: bool
    w_symbol: WSymbol | None = None
    primes: list[PrimeElement] = field(default_factory=list)
    root: int | None = None
    normalization: dict[str, Any] | None = None
    h1: dict[str, Any] | None = None
    symbol_exponent: int | None = None
    generators: tuple[RadicalWord, RadicalWord] | None = None
    extensions: list[ExtensionDescriptor] = field(default_factory=list)
    subgroups: list[SubgroupDescriptor] = field(default_factory=list)
    capitulations: dict[RadicalWord, ClassWord] = field(default_factory=dict)
    type_lists: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    # -- serialisation -----------------------------------------------------

    def _word_json(self, w: RadicalWord) -> dict[str, Any]:
        return {
            "pi1": w.e1,
            "pi3": w.e3,
            "w": w.ew,
            "text": w.render(self.w_symbol),
        }

    def _class_json(self, c: ClassWord) -> dict[str, Any]:
        return {
            "P1": c.e1,
            "P3": c.e3,
            "Pw": c.ew,
            "text": c.render(self.w_symbol),
        }

    def to_json_dict(self) -> dict[str, Any]:
        rc = self.classification
        out: dict[str, Any] = {
            "schema": REPORT_SCHEMA_ID,
            "n": self.n,
            "no_match": self.no_match,
            "classification": {
                "form": rc.form.value,
                "p": rc.p,
                "q": rc.q,
                "e": rc.e,
                "residue_mod_25": rc.residue_mod_25,
            },
        }
        if self.no_match:
            return out
        out["w_symbol"] = self.w_symbol.radical_name if self.w_symbol else None
        out["primes"] = [
            {
                "label": _prime_label(pe, self.w_symbol),
                "kind": pe.kind.value,
                "rational_below": pe.rational_below,
                "coords": list(pe.value.coords),
                "root": pe.root,
            }
            for pe in self.primes
        ]
        out["normalization"] = self.normalization
        out["h1"] = self.h1
        out["symbol"] = self.symbol_exponent
        assert self.generators is not None
        out["genus_generators"] = [self._word_json(w) for w in self.generators]
        out["extensions"] = [
            {
                "label": ext.label,
                "resolved": ext.resolved,
                "candidates": [self._word_json(w) for w in ext.candidates],
            }
            for ext in self.extensions
        ]
        out["subgroups"] = [
            {
                "label": sub.label,
                "character": sub.character.value,
                "generator": self._class_json(sub.generator),
            }
            for sub in self.subgroups
        ]
        out["guaranteed_capitulations"] = [
            {"extension": self._word_json(w), "class": self._class_json(c)}
            for w, c in self.capitulations.items()
        ]
        out["possible_types"] = [
            {"k6": self._word_json(entry["k6"]), "types": entry["types"]}
            for entry in self.type_lists
        ]
        out["conventions"] = {
            "root": self.root,
            "unit_scan": "sign * zeta^a * (1+zeta)^t; a ascending 0..4, t by |t| <= 8, sign +,-",
            "notes": self.notes,
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def to_text(self, explain: bool = False) -> str:
        rc = self.classification
        lines = [f"n = {self.n}"]
        lines.append(
            f"classification: {rc.form.value}"
            + (f"  p={rc.p}" if rc.p else "")
            + (f" q={rc.q}" if rc.q else "")
            + (f" e={rc.e}" if rc.e else "")
            + f"  (n mod 25 = {rc.residue_mod_25})"
        )
        if self.no_match:
            lines.append("no admissible shape: the (5,5) analysis does not apply")
            return "\n".join(lines)
        if explain:
            lines.append(_EXPLAIN["classification"])
        lines.append("")
        lines.append("primes:")
        for pe in self.primes:
            root = f"  zeta->{pe.root}" if pe.root is not None else ""
            lines.append(
                f"  {_prime_label(pe, self.w_symbol):>6} = {pe.value.coords}"
                f"  ({pe.kind.value} above {pe.rational_below}){root}"
            )
        if self.normalization is not None:
            lines.append(f"normalization: {json.dumps(self.normalization, sort_keys=True)}")
        if self.h1 is not None:
            lines.append(f"h1: {json.dumps(self.h1, sort_keys=True)}")
        if self.symbol_exponent is not None:
            lines.append(f"quintic symbol (pi1/pi3): exponent {self.symbol_exponent}")
            if explain:
                lines.append(_EXPLAIN["symbol"])
        assert self.generators is not None
        x1, x2 = self.generators
        lines.append("")
        lines.append(
            "genus field generators: "
            f"fifth-root({x1.render(self.w_symbol)}), fifth-root({x2.render(self.w_symbol)})"
        )
        if explain:
            lines.append(_EXPLAIN["generators"])
        lines.append("extensions:")
        for ext in self.extensions:
            cands = " or ".join(
                f"fifth-root({w.render(self.w_symbol)})" for w in ext.candidates
            )
            mark = "" if ext.resolved else "  (unresolved)"
            lines.append(f"  {ext.label}: {cands}{mark}")
        if explain:
            lines.append(_EXPLAIN["extensions"])
        lines.append("subgroups:")
        for sub in self.subgroups:
            lines.append(
                f"  {sub.label} = <{sub.generator.render(self.w_symbol)}>"
                f"  ({sub.character.value})"
            )
        lines.append("guaranteed capitulations:")
        for w, c in self.capitulations.items():
            lines.append(
                f"  {c.render(self.w_symbol)} dies in fifth-root({w.render(self.w_symbol)})"
            )
        if explain:
            lines.append(_EXPLAIN["capitulations"])
        lines.append("possible capitulation types:")
        for entry in self.type_lists:
            lines.append(f"  with K6 = fifth-root({entry['k6'].render(self.w_symbol)}):")
            for t in entry["types"]:
                lines.append("    (" + ",".join(str(i) for i in t) + ")")
        if explain:
            lines.append(_EXPLAIN["types"])
        if self.notes:
            lines.append("notes:")
            for note in self.notes:
                lines.append(f"  - {note}")
        return "\n".join(lines)


_EXPLAIN = {
    "classification": (
        "  | the shape constraints mod 25 are exactly those under which the"
        " 5-class group can be (5,5) with every class fixed by the degree-5"
        " Galois action"
    ),
    "symbol": (
        "  | exponent 0 means X^5 = pi1 (mod pi3) is solvable, which makes the"
        " prime above pi1 split in the fifth-root extension of pi3 and pins"
        " the K2/K5 assignment"
    ),
    "generators": (
        "  | the two generators cut out the compositum of all six unramified"
        " quintic extensions; their products span a projective line with six"
        " points, one per extension"
    ),
    "extensions": (
        "  | tau^2 (complex conjugation on the cyclotomic part) fixes K1 and"
        " K6 and exchanges K2 with K5 and K3 with K4; unresolved pairs need"
        " class-group data beyond this tool"
    ),
    "capitulations": (
        "  | the fifth power of each listed ideal class is the radicand of"
        " its extension, so the class becomes principal there; at least one"
        " subgroup must die in every K_j (degree-5 unramified extensions"
        " always absorb a class)"
    ),
    "types": (
        "  | entries name the unique dying subgroup per extension, 0 meaning"
        " all classes die; pairs (i2,i5) and (i3,i4) vanish together because"
        " tau^2 exchanges the corresponding fields"
    ),
}


def _prime_label(pe: PrimeElement, w: WSymbol | None) -> str:
    if pe.kind.value == "lambda":
        return "lambda"
    if pe.label == 5:
        return "pi5"
    return f"pi{pe.label}"


def _w_prime(rc: RadicandClass) -> PrimeElement | None:
    if rc.form is RadicandForm.PRIME_POWER_TIMES_Q:
        assert rc.q is not None
        return factor_rational_prime(rc.q).factors[0]
    if rc.form is RadicandForm.FIVE_POWER_TIMES_P:
        return factor_rational_prime(5).factors[0]
    return None


def _attempt_case1_normalization(split: SplittingData) -> dict[str, Any]:
    pi1 = split.factors[0]
    try:
        res = normalize_associate(pi1, 5, [1])
        return {
            "targets": [1],
            "achieved": True,
            "unit_word": res.unit_word.render(),
            "unit_coords": list(res.unit.coords),
            "normalized_coords": list(res.normalized.coords),
        }
    except AssociateNotFound as exc:
        return {
            "targets": [1],
            "achieved": False,
            "proven_impossible": exc.proven_impossible,
            "note": str(exc),
        }


def _h1_section(rc: RadicandClass, pi1: PrimeElement, w: PrimeElement) -> tuple[int, dict[str, Any]]:
    try:
        witness: H1Witness = find_h1(pi1, w, e=rc.e)
        return witness.h1, {
            "value": witness.h1,
            "source": "search",
            "verified": witness.verify(),
            "residue": witness.residue,
            "unit_word": witness.unit_word.render(),
            "unit_coords": list(witness.unit.coords),
            "product_coords": list(witness.product.coords),
        }
    except H1SearchExhausted as exc:
        if exc.norm_condition_h1 is None:
            raise ReportError(
                f"no h1 available for n = {rc.n}: {exc}"
            ) from exc
        return exc.norm_condition_h1, {
            "value": exc.norm_condition_h1,
            "source": "norm_condition",
            "verified": False,
            "proven_impossible": exc.proven_impossible,
            "note": str(exc),
        }


def build_report(n: int) -> Report:
    """Run the whole pipeline for n.  Classification errors propagate."""
    rc = classify_radicand(n)
    if rc.form is RadicandForm.NO_MATCH:
        return Report(n, rc, True)
    report = Report(n, rc, False, w_symbol=w_symbol_for(rc))
    assert rc.p is not None
    split = factor_rational_prime(rc.p)
    report.root = split.root
    report.primes = list(split.factors)
    w = _w_prime(rc)
    if w is not None:
        report.primes.append(w)
    h1: int | None = None
    symbol_argument = split.factors[0].value
    if rc.form is RadicandForm.PRIME_POWER:
        report.normalization = _attempt_case1_normalization(split)
        if report.normalization.get("achieved"):
            symbol_argument = CycInt.from_coords(
                report.normalization["normalized_coords"]
            )
        else:
            report.notes.append(
                "unit normalization of pi1 to 1 mod lambda^5 is impossible;"
                " radical words are formal and the symbol uses the stored"
                " gcd representative"
            )
    else:
        assert w is not None
        h1, section = _h1_section(rc, split.factors[0], w)
        report.h1 = section
        if section["source"] == "norm_condition":
            report.notes.append(
                "h1 from the norm-level necessary condition; the stated"
                " lambda^5 congruence has no witness (see h1.note)"
            )
    report.symbol_exponent = quintic_symbol(symbol_argument, split.factors[2])
    x1, x2 = hilbert_class_field_generators(rc, h1)
    report.generators = (x1, x2)
    report.extensions = correspondence(rc, report.symbol_exponent, h1)
    report.subgroups = subgroup_table(rc, h1)
    report.capitulations = guaranteed_capitulations(rc, h1)
    for k6 in report.extensions[5].candidates:
        types = possible_types(rc, report.symbol_exponent, k6, h1)
        report.type_lists.append(
            {"k6": k6, "types": [list(t.entries) for t in types]}
        )
    return report


def run_report(n: int, fmt: str = "text", explain: bool = False) -> str:
    report = build_report(n)
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text(explain=explain)
    raise ValueError(f"unknown format {fmt!r}")
